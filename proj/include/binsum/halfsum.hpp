#pragma once

#include <vector>

#include "binsum/exact.hpp"

namespace binsum {

/// Weighted half-binomial sum: given g(0..n), returns
/// sum_{k=0}^{n} C(2n, n+k) * g(k).
/// Every summation-side oracle in this project funnels through here.
QuadElem half_sum(const Integer& n, std::span<const QuadElem> values);

/// The kernel f(n, a) = sum_{k=0}^{n} C(2n, n+k) (a^k + a^{-k}),
/// evaluated term by term. Requires invertible a.
QuadElem f_direct(const Integer& n, const QuadElem& a);

/// Closed form (a+1)^{2n} / a^n + C(2n, n); agrees with f_direct exactly.
/// Note (a+1)^0 == 1 even at a == -1.
QuadElem f_closed(const Integer& n, const QuadElem& a);

/// The four specialization checks of the kernel closed form. The printed
/// formulas behind alternating_sum and unit_values hold for n >= 1 only:
/// at n = 0 the sums keep their full k = 0 term, so both come out false.
struct Cor1Result {
    bool row_sum;          // sum C(2n,n+k) = 2^{2n-1} + C(2n,n)/2
    bool alternating_sum;  // sum (-1)^k C(2n,n+k) = C(2n,n)/2
    bool unit_values;      // f(n,(-1)^r) = (1+(-1)^r) 2^{2n-1} + C(2n,n), r in {0,1}
    bool negated_square;   // f(n,-a^2) = (-1)^n (a - 1/a)^{2n} + C(2n,n)

    bool all() const { return row_sum && alternating_sum && unit_values && negated_square; }
};

Cor1Result cor1_checks(const Integer& n, const QuadElem& a);

}  // namespace binsum
