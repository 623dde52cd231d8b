#pragma once

#include <cstdint>
#include <vector>

#include "fqcount/count.hpp"
#include "fqcount/inequal.hpp"
#include "fqcount/parallel.hpp"

namespace fqcount {

enum class Property { root_increasing, root_ratio_decreasing, ratio_increasing };

const char* property_name(Property property);

/// Scan outcome for one property at one q. onset is the smallest m such that
/// the property holds at every n in [m, n_max]: (max failure) + 1, or 1 when
/// nothing fails. caveat flags an onset that sits within 10% of the horizon,
/// where a later failure could still move it.
struct OnsetReport {
    Property property = Property::root_increasing;
    std::uint64_t q = 0;
    std::uint64_t n_max = 0;
    std::uint64_t onset = 1;
    std::vector<std::uint64_t> failures;
    bool caveat = false;
    MethodCounts methods;
};

/// Decides the property at index n from a count table covering n..n+2.
Verdict decide_property(Property property, std::uint64_t n, const CountTable& table,
                        const CertifyOptions& options = {});

/// Evaluates the property at every n in [1, n_max]. Per-index decisions are
/// independent and run under exec; the report is assembled in index order.
OnsetReport scan_onset(Property property, const PrimePower& q, std::uint64_t n_max,
                       const CertifyOptions& options = {}, Exec exec = Exec::parallel);

/// Reference onsets for root-ratio decay: 14, 8, 6, 6 for q = 2, 3, 4, 5 and
/// 4 beyond.
std::uint64_t expected_onset(std::uint64_t q);

struct RemarkRow {
    std::uint64_t q = 0;
    std::uint64_t onset = 0;
    std::uint64_t expected = 0;
    bool matches = false;
    bool caveat = false;
};

/// Root-ratio onsets for each q against the reference values. Mismatches are
/// reported, never suppressed.
std::vector<RemarkRow> remark_table(const std::vector<PrimePower>& q_set, std::uint64_t n_max,
                                    const CertifyOptions& options = {},
                                    Exec exec = Exec::parallel);

} // namespace fqcount
