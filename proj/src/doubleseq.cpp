#include "binsum/doubleseq.hpp"

#include <vector>

#include "binsum/halfsum.hpp"

namespace binsum {

namespace {

DoublePair iterate_pair(const Integer& k, const Integer& d,
                        Integer a0, Integer b0, Integer a1, Integer b1) {
    if (k < 0)
        throw std::domain_error("pair index must be nonnegative");
    if (k == 0)
        return DoublePair{std::move(a0), std::move(b0), k};
    const unsigned long steps = to_ulong(k);
    for (unsigned long i = 1; i < steps; ++i) {
        Integer a2 = d * b1 + a0;
        Integer b2 = a1 + b0;
        a0 = std::move(a1);
        b0 = std::move(b1);
        a1 = std::move(a2);
        b1 = std::move(b2);
    }
    return DoublePair{std::move(a1), std::move(b1), k};
}

}  // namespace

DoublePair ab_pair(const Integer& k, const DoubleSeqParams& params) {
    return iterate_pair(k, params.d, 0, 0, 1, 0);
}

DoublePair cd_pair(const Integer& k, const DoubleSeqParams& params) {
    return iterate_pair(k, params.d, 2, 0, 0, 1);
}

std::pair<Rational, Rational> rep_power_sum(const Integer& w, const Integer& n) {
    if (w < 4)
        throw std::domain_error("base w must be at least 4, got " + w.get_str());
    if (n < 1)
        throw std::domain_error("rep_power_sum needs n >= 1");
    const DoubleSeqParams params{Integer(w - 4)};
    std::vector<QuadElem> terms;
    terms.reserve(to_ulong(n) + 1);
    Integer a0 = 0, b0 = 0, a1 = 1, b1 = 0;
    for (Integer k = 0; k <= n; ++k) {
        terms.emplace_back(Rational(Integer(a0 * a0 + params.d * b0 * b0)));
        Integer a2 = params.d * b1 + a0;
        Integer b2 = a1 + b0;
        a0 = std::move(a1);
        b0 = std::move(b1);
        a1 = std::move(a2);
        b1 = std::move(b2);
    }
    QuadElem lhs = half_sum(n, terms);
    Rational rhs = pow(Rational(w), Integer(n - 1));
    return {lhs.rational_part(), rhs};
}

bool zero_product_check(const Integer& k_max, const DoubleSeqParams& params) {
    Integer a0 = 0, b0 = 0, a1 = 1, b1 = 0;
    for (Integer k = 0; k <= k_max; ++k) {
        const Integer& a = (k == 0) ? a0 : a1;
        const Integer& b = (k == 0) ? b0 : b1;
        if (a * b != 0)
            return false;
        if (is_odd(k) && b != 0)
            return false;
        if (is_even(k) && k >= 2 && a != 0)
            return false;
        if (k == 1 && a != 1)
            return false;
        if (k > 0) {
            Integer a2 = params.d * b1 + a0;
            Integer b2 = a1 + b0;
            a0 = std::move(a1);
            b0 = std::move(b1);
            a1 = std::move(a2);
            b1 = std::move(b2);
        }
    }
    return true;
}

}  // namespace binsum
