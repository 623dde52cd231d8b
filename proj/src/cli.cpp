#include "fqcount/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fqcount/bounds.hpp"
#include "fqcount/count.hpp"
#include "fqcount/errors.hpp"
#include "fqcount/inequal.hpp"
#include "fqcount/oracle.hpp"
#include "fqcount/parallel.hpp"
#include "fqcount/thresholds.hpp"

namespace fqcount {
namespace {

using nlohmann::ordered_json;

enum class OutputFormat { text, csv, json };

enum class CheckKind {
    root_increasing,
    root_ratio_decreasing,
    ratio_increasing,
    count_gap,
    log_deviation,
    cubic_lower,
    quartic_lower,
    largeq_chain,
    smallq_chain,
};

struct NRange {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
};

struct RunConfig {
    std::uint64_t q = 0;
    std::vector<std::uint64_t> q_set;
    std::uint64_t n = 0;
    std::string n_range;
    std::uint64_t n_max = 0;
    OutputFormat format = OutputFormat::text;
    std::uint64_t precision_bits = 128;
    bool exact_only = false;
    bool allow_nonprimepower = false;
    std::uint64_t bit_cap = std::uint64_t{1} << 26;
    bool bit_cap_given = false;
    CheckKind check = CheckKind::root_increasing;
    Property property = Property::root_increasing;
    bool compare = false;
};

// Inclusive "a..b", or a single index "a".
NRange parse_range(const std::string& text) {
    const auto parse_part = [&](std::string_view part) {
        std::uint64_t value = 0;
        const char* last = part.data() + part.size();
        auto [ptr, ec] = std::from_chars(part.data(), last, value);
        if (ec != std::errc{} || ptr != last)
            throw DomainError("bad range '" + text + "': expected a..b with integers");
        return value;
    };
    NRange range;
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        range.lo = range.hi = parse_part(text);
    } else {
        range.lo = parse_part(std::string_view(text).substr(0, dots));
        range.hi = parse_part(std::string_view(text).substr(dots + 2));
    }
    if (range.lo < 1 || range.hi < range.lo)
        throw DomainError("bad range '" + text + "': need 1 <= lo <= hi");
    return range;
}

NRange resolve_range(const RunConfig& config) {
    if (config.n != 0 && !config.n_range.empty())
        throw DomainError("give --n or --n-range, not both");
    if (config.n != 0) return {config.n, config.n};
    if (!config.n_range.empty()) return parse_range(config.n_range);
    throw DomainError("provide --n or --n-range");
}

CertifyOptions certify_options(const RunConfig& config) {
    CertifyOptions options;
    options.start_bits = static_cast<unsigned>(config.precision_bits);
    options.max_bits = std::max(8192u, options.start_bits);
    options.exact_only = config.exact_only;
    options.limits.bit_cap = static_cast<std::size_t>(config.bit_cap);
    return options;
}

PrimePower resolve_base(std::uint64_t value, const RunConfig& config, bool warn,
                        std::ostream& err) {
    if (!config.allow_nonprimepower) return PrimePower::validate(value);
    PrimePower base = PrimePower::permissive(value);
    if (!base.validated && warn)
        err << "warning: " << value
            << " is not a prime power; counts follow the formula over a plain integer base\n";
    return base;
}

std::vector<PrimePower> resolve_bases(const RunConfig& config, bool warn, std::ostream& err) {
    std::vector<std::uint64_t> values;
    if (config.q != 0) values.push_back(config.q);
    values.insert(values.end(), config.q_set.begin(), config.q_set.end());
    if (values.empty()) throw DomainError("provide --q or --q-set");
    std::vector<PrimePower> bases;
    bases.reserve(values.size());
    for (std::uint64_t value : values) bases.push_back(resolve_base(value, config, warn, err));
    return bases;
}

PrimePower resolve_single_base(const RunConfig& config, bool warn, std::ostream& err) {
    if (!config.q_set.empty()) throw DomainError("this command takes a single --q");
    if (config.q == 0) throw DomainError("provide --q");
    return resolve_base(config.q, config, warn, err);
}

const char* method_name(DecisionMethod method) {
    return method == DecisionMethod::exact ? "exact" : "certified";
}

const char* bool_name(bool value) { return value ? "true" : "false"; }

ordered_json method_counts_json(const MethodCounts& methods) {
    return ordered_json{{"exact", methods.exact}, {"certified", methods.certified}};
}

// ---- verify -------------------------------------------------------------

const char* check_token(CheckKind kind) {
    switch (kind) {
        case CheckKind::root_increasing: return "rootmono";
        case CheckKind::root_ratio_decreasing: return "rootratio";
        case CheckKind::ratio_increasing: return "logconvex";
        case CheckKind::count_gap: return "lemma21";
        case CheckKind::log_deviation: return "lemma22";
        case CheckKind::cubic_lower: return "lemma23";
        case CheckKind::quartic_lower: return "lemma24";
        case CheckKind::largeq_chain: return "pnchain";
        case CheckKind::smallq_chain: return "smallqchain";
    }
    return "unknown";
}

std::uint64_t check_min_n(CheckKind kind) {
    switch (kind) {
        case CheckKind::root_increasing:
        case CheckKind::root_ratio_decreasing:
        case CheckKind::ratio_increasing: return 1;
        case CheckKind::count_gap:
        case CheckKind::log_deviation: return 2;
        case CheckKind::cubic_lower: return 5;
        case CheckKind::quartic_lower:
        case CheckKind::largeq_chain:
        case CheckKind::smallq_chain: return 6;
    }
    return 1;
}

bool check_needs_table(CheckKind kind) {
    return kind == CheckKind::root_increasing || kind == CheckKind::root_ratio_decreasing ||
           kind == CheckKind::ratio_increasing;
}

struct CheckOutcome {
    bool holds = false;
    DecisionMethod method = DecisionMethod::exact;
};

CheckOutcome run_check(CheckKind kind, std::uint64_t n, const PrimePower& q,
                       const CountTable* table, const CertifyOptions& options) {
    switch (kind) {
        case CheckKind::root_increasing: {
            const Verdict verdict =
                table ? root_increasing_from_counts(n, table->at(n), table->at(n + 1), options)
                      : root_increasing_at(n, q, options);
            return {verdict.holds, verdict.method};
        }
        case CheckKind::root_ratio_decreasing: {
            const Verdict verdict =
                table ? root_ratio_decreasing_from_counts(n, table->at(n), table->at(n + 1),
                                                          table->at(n + 2), options)
                      : root_ratio_decreasing_at(n, q, options);
            return {verdict.holds, verdict.method};
        }
        case CheckKind::ratio_increasing: {
            const Verdict verdict =
                table ? ratio_increasing_from_counts(n, table->at(n), table->at(n + 1),
                                                     table->at(n + 2), options)
                      : ratio_increasing_at(n, q, options);
            return {verdict.holds, verdict.method};
        }
        case CheckKind::count_gap:
            return {check_count_gap(n, q).holds, DecisionMethod::exact};
        case CheckKind::log_deviation:
            return {check_log_deviation(n, q, options.start_bits, options.max_bits),
                    DecisionMethod::certified};
        case CheckKind::cubic_lower: {
            const auto [dominates, exceeds] = check_cubic_lower(n, q);
            return {dominates && exceeds, DecisionMethod::exact};
        }
        case CheckKind::quartic_lower:
            return {check_quartic_lower(n, q), DecisionMethod::exact};
        case CheckKind::largeq_chain: {
            const ChainCheck chain = check_largeq_chain(n, q);
            return {chain.floor_ok && chain.final_ok, DecisionMethod::exact};
        }
        case CheckKind::smallq_chain: {
            const ChainCheck chain = check_smallq_chain(n, q);
            return {chain.floor_ok && chain.final_ok, DecisionMethod::exact};
        }
    }
    throw DomainError("unknown check");
}

struct VerifyBlock {
    PrimePower q;
    NRange range;
    std::vector<CheckOutcome> outcomes; // outcomes[i] decides n = range.lo + i
};

VerifyBlock run_verify_block(CheckKind kind, const PrimePower& q, NRange range,
                             const CertifyOptions& options) {
    if (range.lo < check_min_n(kind))
        throw DomainError(std::string(check_token(kind)) + " requires n >= " +
                          std::to_string(check_min_n(kind)));
    if (kind == CheckKind::largeq_chain && q.q < 9)
        throw DomainError("pnchain requires q >= 9");
    if (kind == CheckKind::smallq_chain && q.q > 8)
        throw DomainError("smallqchain requires q <= 8");
    if (kind == CheckKind::log_deviation && options.exact_only)
        throw DomainError("lemma22 certifies through interval logs; drop --exact-only");

    std::optional<CountTable> table;
    if (check_needs_table(kind)) table.emplace(count_table(q, range.hi + 2, options.limits));

    VerifyBlock block{q, range, std::vector<CheckOutcome>(range.hi - range.lo + 1)};
    for_each_index(block.outcomes.size(), Exec::parallel, [&](std::size_t i) {
        block.outcomes[i] =
            run_check(kind, range.lo + i, q, table ? &*table : nullptr, options);
    });
    return block;
}

int finish_verify(const std::vector<VerifyBlock>& blocks, const RunConfig& config,
                  std::ostream& out) {
    MethodCounts methods;
    std::uint64_t total = 0;
    std::uint64_t failed = 0;
    for (const VerifyBlock& block : blocks) {
        for (const CheckOutcome& outcome : block.outcomes) {
            methods.add(outcome.method);
            ++total;
            if (!outcome.holds) ++failed;
        }
    }
    const char* token = check_token(config.check);

    switch (config.format) {
        case OutputFormat::csv: {
            out << "q,n,holds,method\n";
            for (const VerifyBlock& block : blocks)
                for (std::size_t i = 0; i < block.outcomes.size(); ++i)
                    out << block.q.q << ',' << block.range.lo + i << ','
                        << bool_name(block.outcomes[i].holds) << ','
                        << method_name(block.outcomes[i].method) << '\n';
            break;
        }
        case OutputFormat::json: {
            ordered_json report;
            report["command"] = "verify";
            if (blocks.size() == 1) {
                report["q"] = blocks.front().q.q;
            } else {
                auto qs = ordered_json::array();
                for (const VerifyBlock& block : blocks) qs.push_back(block.q.q);
                report["q"] = qs;
            }
            report["property"] = token;
            report["checked_range"] =
                ordered_json::array({blocks.front().range.lo, blocks.front().range.hi});
            auto failures = ordered_json::array();
            for (const VerifyBlock& block : blocks)
                for (std::size_t i = 0; i < block.outcomes.size(); ++i)
                    if (!block.outcomes[i].holds) {
                        if (blocks.size() == 1)
                            failures.push_back(block.range.lo + i);
                        else
                            failures.push_back(
                                ordered_json{{"q", block.q.q}, {"n", block.range.lo + i}});
                    }
            report["failures"] = failures;
            report["method_counts"] = method_counts_json(methods);
            out << report.dump(2) << '\n';
            break;
        }
        case OutputFormat::text: {
            for (const VerifyBlock& block : blocks) {
                out << "verify " << token << " q=" << block.q.q << " n=" << block.range.lo
                    << ".." << block.range.hi << '\n';
                out << "  failures:";
                bool any = false;
                for (std::size_t i = 0; i < block.outcomes.size(); ++i)
                    if (!block.outcomes[i].holds) {
                        out << ' ' << block.range.lo + i;
                        any = true;
                    }
                if (!any) out << " none";
                out << '\n';
            }
            out << "  methods: exact=" << methods.exact << " certified=" << methods.certified
                << '\n';
            if (failed == 0)
                out << "result: PASS (" << total << " checks)\n";
            else
                out << "result: FAIL (" << failed << " of " << total << " checks failed)\n";
            break;
        }
    }
    return failed == 0 ? 0 : 1;
}

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const CertifyOptions options = certify_options(config);
    const NRange range = resolve_range(config);
    const std::vector<PrimePower> bases = resolve_bases(config, true, err);
    std::vector<VerifyBlock> blocks;
    blocks.reserve(bases.size());
    for (const PrimePower& q : bases)
        blocks.push_back(run_verify_block(config.check, q, range, options));
    return finish_verify(blocks, config, out);
}

// ---- scan ---------------------------------------------------------------

int finish_single_scan(const OnsetReport& report, const RunConfig& config, std::ostream& out) {
    switch (config.format) {
        case OutputFormat::csv: {
            out << "q,n,holds\n";
            auto next_failure = report.failures.begin();
            for (std::uint64_t n = 1; n <= report.n_max; ++n) {
                const bool fails =
                    next_failure != report.failures.end() && *next_failure == n;
                if (fails) ++next_failure;
                out << report.q << ',' << n << ',' << bool_name(!fails) << '\n';
            }
            break;
        }
        case OutputFormat::json: {
            ordered_json body;
            body["command"] = "scan";
            body["q"] = report.q;
            body["property"] = property_name(report.property);
            body["onset"] = report.onset;
            body["caveat"] = report.caveat;
            body["checked_range"] = ordered_json::array({1, report.n_max});
            body["failures"] = report.failures;
            body["method_counts"] = method_counts_json(report.methods);
            out << body.dump(2) << '\n';
            break;
        }
        case OutputFormat::text: {
            out << "scan " << property_name(report.property) << " q=" << report.q
                << " n=1.." << report.n_max << '\n';
            out << "  failures:";
            if (report.failures.empty()) out << " none";
            for (std::uint64_t n : report.failures) out << ' ' << n;
            out << '\n';
            out << "  onset: " << report.onset << '\n';
            if (report.caveat)
                out << "  caveat: largest failure sits within 10% of the horizon\n";
            out << "  methods: exact=" << report.methods.exact
                << " certified=" << report.methods.certified << '\n';
            break;
        }
    }
    return 0;
}

int finish_remark_scan(const std::vector<RemarkRow>& rows, const RunConfig& config,
                       std::ostream& out) {
    std::uint64_t mismatches = 0;
    for (const RemarkRow& row : rows)
        if (!row.matches) ++mismatches;

    switch (config.format) {
        case OutputFormat::csv: {
            out << "q,onset,expected,matches,caveat\n";
            for (const RemarkRow& row : rows)
                out << row.q << ',' << row.onset << ',' << row.expected << ','
                    << bool_name(row.matches) << ',' << bool_name(row.caveat) << '\n';
            break;
        }
        case OutputFormat::json: {
            ordered_json body;
            body["command"] = "scan";
            auto qs = ordered_json::array();
            for (const RemarkRow& row : rows) qs.push_back(row.q);
            body["q"] = qs;
            body["property"] = property_name(Property::root_ratio_decreasing);
            body["checked_range"] = ordered_json::array({1, config.n_max});
            auto out_rows = ordered_json::array();
            for (const RemarkRow& row : rows)
                out_rows.push_back(ordered_json{{"q", row.q},
                                                {"onset", row.onset},
                                                {"expected", row.expected},
                                                {"matches", row.matches},
                                                {"caveat", row.caveat}});
            body["rows"] = out_rows;
            body["mismatches"] = mismatches;
            out << body.dump(2) << '\n';
            break;
        }
        case OutputFormat::text: {
            out << "scan " << property_name(Property::root_ratio_decreasing)
                << " n=1.." << config.n_max << '\n';
            for (const RemarkRow& row : rows) {
                out << "  q=" << row.q << " onset=" << row.onset
                    << " expected=" << row.expected
                    << " match=" << (row.matches ? "yes" : "no");
                if (row.caveat) out << " (caveat: near horizon)";
                out << '\n';
            }
            if (mismatches == 0)
                out << "result: PASS (" << rows.size() << " onsets match)\n";
            else
                out << "result: FAIL (" << mismatches << " of " << rows.size()
                    << " onsets differ)\n";
            break;
        }
    }
    return mismatches == 0 ? 0 : 1;
}

int run_scan(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const CertifyOptions options = certify_options(config);
    if (config.n_max < 2) throw DomainError("scan requires --n-max >= 2");
    const std::vector<PrimePower> bases = resolve_bases(config, true, err);
    if (bases.size() == 1) {
        const OnsetReport report =
            scan_onset(config.property, bases.front(), config.n_max, options);
        return finish_single_scan(report, config, out);
    }
    if (config.property != Property::root_ratio_decreasing)
        throw DomainError("--q-set scans compare against reference onsets and exist for "
                          "rootratio only; use a single --q");
    return finish_remark_scan(remark_table(bases, config.n_max, options), config, out);
}

// ---- count / table ------------------------------------------------------

int run_count(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const PrimePower q = resolve_single_base(config, false, err);
    if (config.n < 1) throw DomainError("provide --n >= 1");
    Limits limits;
    limits.bit_cap = static_cast<std::size_t>(config.bit_cap);
    const BigCount value = irreducible_count(config.n, q, limits);
    switch (config.format) {
        case OutputFormat::text:
            out << value.get_str() << '\n';
            break;
        case OutputFormat::csv:
            out << "q,n,value\n" << q.q << ',' << config.n << ',' << value.get_str() << '\n';
            break;
        case OutputFormat::json: {
            ordered_json body;
            body["command"] = "count";
            body["q"] = q.q;
            body["n"] = config.n;
            body["value"] = value.get_str();
            out << body.dump(2) << '\n';
            break;
        }
    }
    return 0;
}

int run_table(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const PrimePower q = resolve_single_base(config, false, err);
    if (config.n_max < 1) throw DomainError("provide --n-max >= 1");
    Limits limits;
    limits.bit_cap = static_cast<std::size_t>(config.bit_cap);
    const CountTable table = count_table(q, config.n_max, limits);
    switch (config.format) {
        case OutputFormat::text:
            out << "q=" << q.q << " degrees 1.." << config.n_max << '\n';
            for (std::uint64_t n = 1; n <= config.n_max; ++n)
                out << "  " << n << ' ' << table.at(n).get_str() << '\n';
            break;
        case OutputFormat::csv:
            out << "n,value\n";
            for (std::uint64_t n = 1; n <= config.n_max; ++n)
                out << n << ',' << table.at(n).get_str() << '\n';
            break;
        case OutputFormat::json: {
            ordered_json body;
            body["command"] = "table";
            body["q"] = q.q;
            body["n_max"] = config.n_max;
            auto rows = ordered_json::array();
            for (std::uint64_t n = 1; n <= config.n_max; ++n)
                rows.push_back(ordered_json{{"n", n}, {"value", table.at(n).get_str()}});
            body["rows"] = rows;
            out << body.dump(2) << '\n';
            break;
        }
    }
    return 0;
}

// ---- bounds -------------------------------------------------------------

struct BoundsRow {
    std::uint64_t n = 0;
    GapCheck gap;
    ResidualBound res;
    double floor_lower = 0;
    double floor_upper = 0;
    bool ok() const { return gap.holds && res.c_bound_ok; }
};

int run_bounds(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (config.exact_only)
        throw DomainError("bounds reports interval enclosures; drop --exact-only");
    const PrimePower q = resolve_single_base(config, true, err);
    const NRange range = resolve_range(config);
    if (range.lo < 2) throw DomainError("bounds requires n >= 2");
    const unsigned precision = static_cast<unsigned>(config.precision_bits);

    std::vector<BoundsRow> rows(range.hi - range.lo + 1);
    for_each_index(rows.size(), Exec::parallel, [&](std::size_t i) {
        const std::uint64_t n = range.lo + i;
        BoundsRow row;
        row.n = n;
        row.gap = check_count_gap(n, q);
        row.res = residual(n, q);
        const Interval floor = delta_floor(n, q, precision);
        row.floor_lower = floor.lower_double();
        row.floor_upper = floor.upper_double();
        rows[i] = std::move(row);
    });

    std::uint64_t failed = 0;
    for (const BoundsRow& row : rows)
        if (!row.ok()) ++failed;

    switch (config.format) {
        case OutputFormat::csv: {
            out << "n,scale,residual,gap_ok,c_bound_ok,floor_lower,floor_upper\n";
            for (const BoundsRow& row : rows)
                out << row.n << ',' << row.res.scale.get_str() << ','
                    << row.res.residual.get_str() << ',' << bool_name(row.gap.holds) << ','
                    << bool_name(row.res.c_bound_ok) << ',' << row.floor_lower << ','
                    << row.floor_upper << '\n';
            break;
        }
        case OutputFormat::json: {
            ordered_json body;
            body["command"] = "bounds";
            body["q"] = q.q;
            body["checked_range"] = ordered_json::array({range.lo, range.hi});
            auto out_rows = ordered_json::array();
            for (const BoundsRow& row : rows)
                out_rows.push_back(ordered_json{{"n", row.n},
                                                {"scale", row.res.scale.get_str()},
                                                {"residual", row.res.residual.get_str()},
                                                {"gap_ok", row.gap.holds},
                                                {"c_bound_ok", row.res.c_bound_ok},
                                                {"floor_lower", row.floor_lower},
                                                {"floor_upper", row.floor_upper}});
            body["rows"] = out_rows;
            auto failures = ordered_json::array();
            for (const BoundsRow& row : rows)
                if (!row.ok()) failures.push_back(row.n);
            body["failures"] = failures;
            body["method_counts"] =
                method_counts_json(MethodCounts{rows.size(), 0});
            out << body.dump(2) << '\n';
            break;
        }
        case OutputFormat::text: {
            out << "bounds q=" << q.q << " n=" << range.lo << ".." << range.hi
                << " precision=" << precision << '\n';
            for (const BoundsRow& row : rows) {
                out << "  n=" << row.n << " L=" << row.res.scale.get_str()
                    << " r=" << row.res.residual.get_str()
                    << " gap=" << (row.gap.holds ? "ok" : "FAIL")
                    << " c_bound=" << (row.res.c_bound_ok ? "ok" : "FAIL") << " floor=["
                    << row.floor_lower << ',' << row.floor_upper << "]\n";
            }
            if (failed == 0)
                out << "result: PASS (" << rows.size() << " indices)\n";
            else
                out << "result: FAIL (" << failed << " of " << rows.size() << " indices)\n";
            break;
        }
    }
    return failed == 0 ? 0 : 1;
}

// ---- oracle -------------------------------------------------------------

int run_oracle(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (!config.q_set.empty()) throw DomainError("this command takes a single --q");
    if (config.q == 0) throw DomainError("provide --q");
    const PrimePower q = PrimePower::validate(config.q);
    if (config.n_max < 1) throw DomainError("provide --n-max >= 1");

    OracleOptions options;
    if (config.bit_cap_given) options.index_bit_cap = static_cast<unsigned>(config.bit_cap);
    const FieldRep field = FieldRep::build(q.p, q.k, options);
    const std::vector<std::uint64_t> sieved =
        sieve_irreducible_counts(field, config.n_max, options);

    std::vector<BigCount> formula;
    std::uint64_t mismatches = 0;
    if (config.compare) {
        const CountTable table = count_table(q, config.n_max);
        for (std::uint64_t n = 1; n <= config.n_max; ++n) {
            formula.push_back(table.at(n));
            if (formula.back() != static_cast<unsigned long>(sieved[n - 1])) ++mismatches;
        }
    }
    (void)err;

    switch (config.format) {
        case OutputFormat::csv: {
            out << (config.compare ? "n,sieve,formula,match\n" : "n,sieve\n");
            for (std::uint64_t n = 1; n <= config.n_max; ++n) {
                out << n << ',' << sieved[n - 1];
                if (config.compare)
                    out << ',' << formula[n - 1].get_str() << ','
                        << bool_name(formula[n - 1] ==
                                     static_cast<unsigned long>(sieved[n - 1]));
                out << '\n';
            }
            break;
        }
        case OutputFormat::json: {
            ordered_json body;
            body["command"] = "oracle";
            body["q"] = q.q;
            body["n_max"] = config.n_max;
            body["compare"] = config.compare;
            auto rows = ordered_json::array();
            for (std::uint64_t n = 1; n <= config.n_max; ++n) {
                ordered_json row{{"n", n}, {"sieve", std::to_string(sieved[n - 1])}};
                if (config.compare) {
                    row["formula"] = formula[n - 1].get_str();
                    row["match"] =
                        formula[n - 1] == static_cast<unsigned long>(sieved[n - 1]);
                }
                rows.push_back(row);
            }
            body["rows"] = rows;
            if (config.compare) body["all_match"] = mismatches == 0;
            out << body.dump(2) << '\n';
            break;
        }
        case OutputFormat::text: {
            out << "oracle q=" << q.q << " (" << q.p << '^' << q.k << ") n_max="
                << config.n_max << '\n';
            for (std::uint64_t n = 1; n <= config.n_max; ++n) {
                out << "  n=" << n << " sieve=" << sieved[n - 1];
                if (config.compare) {
                    out << " formula=" << formula[n - 1].get_str() << ' '
                        << (formula[n - 1] == static_cast<unsigned long>(sieved[n - 1])
                                ? "ok"
                                : "MISMATCH");
                }
                out << '\n';
            }
            if (config.compare) {
                if (mismatches == 0)
                    out << "result: PASS (" << config.n_max << " degrees agree)\n";
                else
                    out << "result: FAIL (" << mismatches << " of " << config.n_max
                        << " degrees differ)\n";
            }
            break;
        }
    }
    return mismatches == 0 ? 0 : 1;
}

// ---- wiring -------------------------------------------------------------

void add_common_flags(CLI::App* cmd, RunConfig& config, bool with_allow) {
    std::map<std::string, OutputFormat> formats{{"text", OutputFormat::text},
                                                {"csv", OutputFormat::csv},
                                                {"json", OutputFormat::json}};
    cmd->add_option("--format", config.format, "output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    cmd->add_option("--bit-cap", config.bit_cap,
                    "cap on any single integer's bit size, 0 = uncapped")
        ->each([&config](const std::string&) { config.bit_cap_given = true; });
    if (with_allow)
        cmd->add_flag("--allow-nonprimepower", config.allow_nonprimepower,
                      "admit any integer base >= 2");
}

void add_certify_flags(CLI::App* cmd, RunConfig& config) {
    cmd->add_option("--precision-bits", config.precision_bits,
                    "starting interval precision (>= 32)");
    cmd->add_flag("--exact-only", config.exact_only,
                  "skip the certified path; decide by big-integer comparison");
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig config;
    CLI::App app{"exact counts and certified inequalities for monic irreducible "
                 "polynomial counts over finite fields"};
    app.require_subcommand(1);

    CLI::App* count_cmd =
        app.add_subcommand("count", "one count N_n(q) by the divisor-sum formula");
    count_cmd->add_option("--q", config.q, "field order")->required();
    count_cmd->add_option("--n", config.n, "degree")->required();
    add_common_flags(count_cmd, config, true);

    CLI::App* table_cmd = app.add_subcommand("table", "counts for all degrees 1..n_max");
    table_cmd->add_option("--q", config.q, "field order")->required();
    table_cmd->add_option("--n-max", config.n_max, "largest degree")->required();
    add_common_flags(table_cmd, config, true);

    std::map<std::string, CheckKind> checks{
        {"rootmono", CheckKind::root_increasing},
        {"rootratio", CheckKind::root_ratio_decreasing},
        {"logconvex", CheckKind::ratio_increasing},
        {"lemma21", CheckKind::count_gap},
        {"lemma22", CheckKind::log_deviation},
        {"lemma23", CheckKind::cubic_lower},
        {"lemma24", CheckKind::quartic_lower},
        {"pnchain", CheckKind::largeq_chain},
        {"smallqchain", CheckKind::smallq_chain},
    };
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "decide one inequality family over an index range");
    verify_cmd->add_option("--check", config.check, "which inequality to decide")
        ->required()
        ->transform(CLI::CheckedTransformer(checks, CLI::ignore_case));
    verify_cmd->add_option("--q", config.q, "field order");
    verify_cmd->add_option("--q-set", config.q_set, "comma-separated field orders")
        ->delimiter(',');
    verify_cmd->add_option("--n", config.n, "single index");
    verify_cmd->add_option("--n-range", config.n_range, "inclusive index range a..b");
    add_certify_flags(verify_cmd, config);
    add_common_flags(verify_cmd, config, true);

    std::map<std::string, Property> properties{
        {"rootmono", Property::root_increasing},
        {"rootratio", Property::root_ratio_decreasing},
        {"logconvex", Property::ratio_increasing},
    };
    CLI::App* scan_cmd =
        app.add_subcommand("scan", "find the onset index of a monotonicity property");
    scan_cmd->add_option("--property", config.property, "which property to scan")
        ->required()
        ->transform(CLI::CheckedTransformer(properties, CLI::ignore_case));
    scan_cmd->add_option("--q", config.q, "field order");
    scan_cmd->add_option("--q-set", config.q_set, "comma-separated field orders")
        ->delimiter(',');
    scan_cmd->add_option("--n-max", config.n_max, "scan horizon")->required();
    add_certify_flags(scan_cmd, config);
    add_common_flags(scan_cmd, config, true);

    CLI::App* bounds_cmd = app.add_subcommand(
        "bounds", "error-scale, residual and floor enclosures per index");
    bounds_cmd->add_option("--q", config.q, "field order")->required();
    bounds_cmd->add_option("--n", config.n, "single index");
    bounds_cmd->add_option("--n-range", config.n_range, "inclusive index range a..b");
    add_certify_flags(bounds_cmd, config);
    add_common_flags(bounds_cmd, config, true);

    CLI::App* oracle_cmd = app.add_subcommand(
        "oracle", "count by explicit polynomial sieve over the constructed field");
    oracle_cmd->add_option("--q", config.q, "field order (prime power, sieve-sized)")
        ->required();
    oracle_cmd->add_option("--n-max", config.n_max, "largest degree")->required();
    oracle_cmd->add_flag("--compare", config.compare, "also compute formula counts and diff");
    add_common_flags(oracle_cmd, config, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (config.precision_bits < 32) throw DomainError("--precision-bits must be >= 32");
        if (app.got_subcommand(count_cmd)) return run_count(config, out, err);
        if (app.got_subcommand(table_cmd)) return run_table(config, out, err);
        if (app.got_subcommand(verify_cmd)) return run_verify(config, out, err);
        if (app.got_subcommand(scan_cmd)) return run_scan(config, out, err);
        if (app.got_subcommand(bounds_cmd)) return run_bounds(config, out, err);
        if (app.got_subcommand(oracle_cmd)) return run_oracle(config, out, err);
        throw DomainError("no command given");
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace fqcount
