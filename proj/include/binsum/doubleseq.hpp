#pragma once

#include <utility>

#include "binsum/exact.hpp"

namespace binsum {

/// Integer pair recurrences underlying u_k, v_k for p = sqrt(d): writing
/// u_k = a_k + b_k sqrt(d) and v_k = c_k + d_k sqrt(d) gives
///   a_{n+1} = d*b_n + a_{n-1},  b_{n+1} = a_n + b_{n-1}
/// and the same shape for (c_k, d_k). The target base is w = d + 4, the
/// value of p^2 + 4.
struct DoubleSeqParams {
    Integer d;
    Integer w;

    explicit DoubleSeqParams(Integer radicand) : d(std::move(radicand)), w(d + 4) {
        if (d < 0)
            throw std::domain_error("negative radicand");
    }
};

struct DoublePair {
    Integer a;  // rational component
    Integer b;  // sqrt(d) coefficient
    Integer index;
};

/// (a_k, b_k) with a_k + b_k sqrt(d) = u_k at p = sqrt(d).
/// Seeds a_0 = b_0 = 0, a_1 = 1, b_1 = 0.
DoublePair ab_pair(const Integer& k, const DoubleSeqParams& params);

/// (c_k, d_k) with c_k + d_k sqrt(d) = v_k at p = sqrt(d).
/// Seeds c_0 = 2, d_0 = 0, c_1 = 0, d_1 = 1: the (1, 0) seed sometimes
/// quoted for index 1 contradicts v_1 = p, so the Binet-consistent pair
/// is used.
DoublePair cd_pair(const Integer& k, const DoubleSeqParams& params);

/// Both sides of sum C(2n,n+k)(a_k^2 + d*b_k^2) = w^{n-1} with d = w - 4.
/// For perfect-square d the pair collapses to the integer-p sequence and
/// the identity still holds, so any w >= 4 is accepted.
std::pair<Rational, Rational> rep_power_sum(const Integer& w, const Integer& n);

/// a_k * b_k == 0 for all 0 <= k <= k_max, plus the parity pattern
/// b_k = 0 for odd k, a_k = 0 for even k >= 2, a_1 = 1.
bool zero_product_check(const Integer& k_max, const DoubleSeqParams& params);

}  // namespace binsum
