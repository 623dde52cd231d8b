#pragma once

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "fqcount/count.hpp"

namespace fqcount {

enum class DecisionMethod { exact, certified };

/// Evidence for an exact big-integer comparison: the two sides' bit lengths
/// and the sign of lhs - rhs.
struct ExactEvidence {
    std::size_t lhs_bits = 0;
    std::size_t rhs_bits = 0;
    int comparison = 0;
};

/// Evidence for a certified comparison: the separating enclosures of the two
/// sides' logarithms and the precision that separated them.
struct CertifiedEvidence {
    double lhs_lower = 0, lhs_upper = 0;
    double rhs_lower = 0, rhs_upper = 0;
    unsigned precision_bits = 0;
};

/// Outcome of a strict-inequality decision. A certified verdict is only ever
/// emitted when the rigorous enclosures are disjoint; otherwise the decision
/// fell back to the exact path.
struct Verdict {
    bool holds = false;
    DecisionMethod method = DecisionMethod::exact;
    std::variant<ExactEvidence, CertifiedEvidence> evidence{ExactEvidence{}};
};

/// Decision strategy knobs: interval comparison starting at start_bits,
/// doubling up to max_bits, then the exact big-integer fallback. exact_only
/// skips the interval path entirely.
struct CertifyOptions {
    unsigned start_bits = 128;
    unsigned max_bits = 8192;
    bool exact_only = false;
    Limits limits{};
};

enum class PowerOrder { lhs_greater, rhs_greater, indeterminate };

/// Tally of which decision path produced the verdicts of a run.
struct MethodCounts {
    std::uint64_t exact = 0;
    std::uint64_t certified = 0;

    void add(DecisionMethod method) {
        if (method == DecisionMethod::exact)
            ++exact;
        else
            ++certified;
    }
};

/// A product of big-integer powers: prod of base^exponent.
using PowerProduct = std::vector<std::pair<BigCount, unsigned long>>;

/// Compares two power products through interval logarithms at the given
/// precision. Returns indeterminate whenever the enclosures overlap; a
/// strict answer is rigorous. Exact ties stay indeterminate at every
/// precision.
PowerOrder certified_power_compare(const PowerProduct& lhs, const PowerProduct& rhs,
                                   unsigned precision_bits);

/// Decides lhs > rhs with the configured strategy.
Verdict decide_power_greater(const PowerProduct& lhs, const PowerProduct& rhs,
                             const CertifyOptions& options = {});

/// n-th-root growth: holds iff N_{n+1}(q)^n > N_n(q)^{n+1}.
Verdict root_increasing_at(std::uint64_t n, const PrimePower& q,
                           const CertifyOptions& options = {});

/// Consecutive-root-ratio decay: holds iff
/// N_{n+1}^{2n(n+2)} > N_n^{(n+1)(n+2)} * N_{n+2}^{n(n+1)}.
Verdict root_ratio_decreasing_at(std::uint64_t n, const PrimePower& q,
                                 const CertifyOptions& options = {});

/// Successive-ratio growth: holds iff N_{n+1}^2 < N_n * N_{n+2}. Always
/// decided exactly; the integers here stay small.
Verdict ratio_increasing_at(std::uint64_t n, const PrimePower& q,
                            const CertifyOptions& options = {});

/// Variants over counts that are already in hand (N_n, N_{n+1}, N_{n+2});
/// used by scans that share one count table across many indices.
Verdict root_increasing_from_counts(std::uint64_t n, const BigCount& count_n,
                                    const BigCount& count_n1, const CertifyOptions& options = {});
Verdict root_ratio_decreasing_from_counts(std::uint64_t n, const BigCount& count_n,
                                          const BigCount& count_n1, const BigCount& count_n2,
                                          const CertifyOptions& options = {});
Verdict ratio_increasing_from_counts(std::uint64_t n, const BigCount& count_n,
                                     const BigCount& count_n1, const BigCount& count_n2,
                                     const CertifyOptions& options = {});

/// Rigorous rational enclosure of the three-term log combination
/// 2 log(N_{n+1})/(n+1) - log(N_n)/n - log(N_{n+2})/(n+2), whose sign
/// decides root-ratio decay at n.
struct DeltaValue {
    std::uint64_t n = 0;
    std::uint64_t q = 0;
    mpq_class lower;
    mpq_class upper;
};

DeltaValue delta_bounds(std::uint64_t n, const PrimePower& q, unsigned precision_bits);

} // namespace fqcount
