#pragma once

#include <cstdint>
#include <utility>

#include "fqcount/count.hpp"
#include "fqcount/interval.hpp"

namespace fqcount {

/// Error scale L_n(q) = (q-1) * q^(n - n/p(n) - 1) with p(n) the least prime
/// factor of n. 1/L bounds the relative deviation of n*N_n(q) from q^n.
BigCount error_scale(std::uint64_t n, const PrimePower& q);

/// Cleared form of the count gap bound (q-1)*|n*N_n(q) - q^n| < q^(n/p(n)+1).
struct GapCheck {
    bool holds = false;
    BigCount lhs;
    BigCount rhs;
};

GapCheck check_count_gap(std::uint64_t n, const PrimePower& q);

/// Relative deviation r_n(q) = (n*N_n(q) - q^n)/q^n in lowest terms, plus the
/// exact certificate |r_n| < 1/L_n (cleared: L_n * |n*N_n - q^n| < q^n).
struct ResidualBound {
    std::uint64_t n = 0;
    std::uint64_t q = 0;
    mpq_class residual;
    BigCount scale;
    bool c_bound_ok = false;
};

ResidualBound residual(std::uint64_t n, const PrimePower& q);

/// Certifies |log N_n(q) - log(q^n/n)| < 2/L_n(q) through interval logs,
/// escalating precision from start_bits to max_bits. The two sides are never
/// equal, so escalation decides eventually; running past max_bits raises a
/// capacity error rather than guessing.
bool check_log_deviation(std::uint64_t n, const PrimePower& q, unsigned start_bits = 128,
                         unsigned max_bits = 8192);

/// Cubic floor under L_n(q) for n >= 5. first: L_n(q) >= (q-1)
/// + (n-2)/2*(q-1)^2 + (n-2)(n-4)/8*(q-1)^3. second: that cubic > (n-1)^2/8.
/// Both decided with denominators cleared by 8.
std::pair<bool, bool> check_cubic_lower(std::uint64_t n, const PrimePower& q);

/// Quartic floor under L_n(q) for n >= 6, denominators cleared by 48:
/// L >= (q-1) + (n-2)/2*(q-1)^2 + (n^2-6n+8)/8*(q-1)^3
///   + (n^3-12n^2+44n-48)/48*(q-1)^4.
bool check_quartic_lower(std::uint64_t n, const PrimePower& q);

/// Rigorous enclosure of the closed-form floor under half the three-term log
/// combination that decides root-ratio decay:
/// (log n - 1)/(n(n+1)(n+2)) - 1/(n^2(n+2))
///   - 2/((n+1)L_{n+1}) - 1/(n L_n) - 1/((n+2)L_{n+2}).
/// A strictly positive enclosure forces root_ratio_decreasing_at(n, q).
Interval delta_floor(std::uint64_t n, const PrimePower& q, unsigned precision_bits);

/// Two-stage certificate used by the log-convexity argument. floor_ok checks
/// the stated lower bounds on the error scales; final_ok checks the closing
/// rational inequality in exact arithmetic.
struct ChainCheck {
    bool floor_ok = false;
    bool final_ok = false;
};

/// q >= 9 chain: (a) 3*L_n(q) >= 8*P(n) with P(n) = 32n^3 - 360n^2 + 1276n
/// - 1365; (b) -1/(n+1)^2 + 12/(8P(n+1)) + 6/(8P(n)) + 6/(8P(n+2)) < 0.
/// Requires n >= 6.
ChainCheck check_largeq_chain(std::uint64_t n, const PrimePower& q);

/// q <= 8 chain: (a) 48*L_k(q) >= the stated cubics for k = n, n+1, n+2;
/// (b) for n >= 389 the closing inequality -1/(n+1)^2
/// + 192/((n+1)(n^2-4n+27)) + 96/(n(n^2-6n+32)) + 96/((n+2)(n^2-2n+24)) < 0.
/// Below n = 389 the closing step is vacuous (the range is covered by direct
/// scan) and final_ok reports true. Requires n >= 6.
ChainCheck check_smallq_chain(std::uint64_t n, const PrimePower& q);

} // namespace fqcount
