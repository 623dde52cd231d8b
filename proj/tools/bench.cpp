#include <benchmark/benchmark.h>

#include "fqcount/bounds.hpp"
#include "fqcount/count.hpp"
#include "fqcount/oracle.hpp"
#include "fqcount/parallel.hpp"
#include "fqcount/thresholds.hpp"

namespace {

using namespace fqcount;

// Property scan across one q; the per-index decisions are the data-parallel
// kernel the Exec knob controls.
void bench_scan_rootratio(benchmark::State& state, Exec exec) {
    const PrimePower q = PrimePower::validate(2);
    const std::uint64_t n_max = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        OnsetReport report =
            scan_onset(Property::root_ratio_decreasing, q, n_max, CertifyOptions{}, exec);
        benchmark::DoNotOptimize(report.onset);
    }
}
BENCHMARK_CAPTURE(bench_scan_rootratio, serial, Exec::serial)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_scan_rootratio, parallel, Exec::parallel)->Arg(300)->Unit(benchmark::kMillisecond);

// Exact bound suite across an index range, same kernel shape.
void bench_bound_suite(benchmark::State& state, Exec exec) {
    const PrimePower q = PrimePower::validate(3);
    const std::uint64_t n_max = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        std::vector<bool> ok(n_max - 1);
        for_each_index(ok.size(), exec, [&](std::size_t i) {
            const std::uint64_t n = i + 2;
            bool holds = check_count_gap(n, q).holds && residual(n, q).c_bound_ok;
            if (n >= 6) holds = holds && check_quartic_lower(n, q);
            ok[i] = holds;
        });
        benchmark::DoNotOptimize(ok.size());
    }
}
BENCHMARK_CAPTURE(bench_bound_suite, serial, Exec::serial)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_bound_suite, parallel, Exec::parallel)->Arg(300)->Unit(benchmark::kMillisecond);

// The sieve walks degrees in order and marks composites as it goes; each
// degree depends on the previous ones, so it stays serial by design.
void bench_oracle_sieve(benchmark::State& state) {
    const FieldRep field = FieldRep::build(2, 1, OracleOptions{});
    const std::uint64_t n_max = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        std::vector<std::uint64_t> counts =
            sieve_irreducible_counts(field, n_max, OracleOptions{});
        benchmark::DoNotOptimize(counts.back());
    }
}
BENCHMARK(bench_oracle_sieve)->Arg(16)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
