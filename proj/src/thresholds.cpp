#include "fqcount/thresholds.hpp"

#include <algorithm>

#include "fqcount/errors.hpp"

namespace fqcount {

const char* property_name(Property property) {
    switch (property) {
        case Property::root_increasing: return "root_increasing";
        case Property::root_ratio_decreasing: return "root_ratio_decreasing";
        case Property::ratio_increasing: return "ratio_increasing";
    }
    return "unknown";
}

Verdict decide_property(Property property, std::uint64_t n, const CountTable& table,
                        const CertifyOptions& options) {
    switch (property) {
        case Property::root_increasing:
            return root_increasing_from_counts(n, table.at(n), table.at(n + 1), options);
        case Property::root_ratio_decreasing:
            return root_ratio_decreasing_from_counts(n, table.at(n), table.at(n + 1),
                                                     table.at(n + 2), options);
        case Property::ratio_increasing:
            return ratio_increasing_from_counts(n, table.at(n), table.at(n + 1), table.at(n + 2),
                                                options);
    }
    throw DomainError("unknown property");
}

OnsetReport scan_onset(Property property, const PrimePower& q, std::uint64_t n_max,
                       const CertifyOptions& options, Exec exec) {
    if (q.q < 2) throw DomainError("field order must be at least 2");
    if (n_max < 2) throw DomainError("scan horizon must be at least 2");
    const CountTable table = count_table(q, n_max + 2, options.limits);

    std::vector<Verdict> verdicts(n_max);
    for_each_index(n_max, exec,
                   [&](std::size_t i) { verdicts[i] = decide_property(property, i + 1, table, options); });

    OnsetReport report;
    report.property = property;
    report.q = q.q;
    report.n_max = n_max;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const Verdict& verdict = verdicts[n - 1];
        report.methods.add(verdict.method);
        if (!verdict.holds) report.failures.push_back(n);
    }
    report.onset = report.failures.empty() ? 1 : report.failures.back() + 1;
    report.caveat =
        !report.failures.empty() && 10 * (n_max - report.failures.back()) <= n_max;
    return report;
}

std::uint64_t expected_onset(std::uint64_t q) {
    switch (q) {
        case 2: return 14;
        case 3: return 8;
        case 4: return 6;
        case 5: return 6;
        default: return 4;
    }
}

std::vector<RemarkRow> remark_table(const std::vector<PrimePower>& q_set, std::uint64_t n_max,
                                    const CertifyOptions& options, Exec exec) {
    std::vector<RemarkRow> rows;
    rows.reserve(q_set.size());
    for (const PrimePower& q : q_set) {
        const OnsetReport report =
            scan_onset(Property::root_ratio_decreasing, q, n_max, options, exec);
        RemarkRow row;
        row.q = q.q;
        row.onset = report.onset;
        row.expected = expected_onset(q.q);
        row.matches = row.onset == row.expected;
        row.caveat = report.caveat;
        rows.push_back(row);
    }
    return rows;
}

} // namespace fqcount
