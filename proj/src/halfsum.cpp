#include "binsum/halfsum.hpp"

namespace binsum {

QuadElem half_sum(const Integer& n, std::span<const QuadElem> values) {
    if (n < 0)
        throw std::domain_error("half_sum needs n >= 0");
    if (values.size() != to_ulong(n) + 1)
        throw std::invalid_argument("half_sum needs exactly n+1 values");
    Integer weight = binom(Integer(2 * n), n);  // C(2n, n+k), advanced in-place
    QuadElem acc(0);
    Integer k = 0;
    for (const QuadElem& g : values) {
        acc += QuadElem(weight) * g;
        weight *= n - k;
        if (k < n)
            mpz_divexact(weight.get_mpz_t(), weight.get_mpz_t(), Integer(n + k + 1).get_mpz_t());
        ++k;
    }
    return acc;
}

QuadElem f_direct(const Integer& n, const QuadElem& a) {
    if (n < 0)
        throw std::domain_error("f_direct needs n >= 0");
    const QuadElem a_inv = inverse(a);  // rejects non-invertible a up front
    std::vector<QuadElem> terms;
    terms.reserve(to_ulong(n) + 1);
    QuadElem up(1);
    QuadElem down(1);
    for (Integer k = 0; k <= n; ++k) {
        terms.push_back(up + down);
        up *= a;
        down *= a_inv;
    }
    return half_sum(n, terms);
}

QuadElem f_closed(const Integer& n, const QuadElem& a) {
    if (n < 0)
        throw std::domain_error("f_closed needs n >= 0");
    if (norm(a).is_zero())
        throw std::domain_error("f_closed needs an invertible a");
    QuadElem numer = pow(a + QuadElem(1), Integer(2 * n));
    return numer * pow(a, Integer(-n)) + QuadElem(binom(Integer(2 * n), n));
}

Cor1Result cor1_checks(const Integer& n, const QuadElem& a) {
    if (n < 0)
        throw std::domain_error("cor1_checks needs n >= 0");
    const Integer central = binom(Integer(2 * n), n);
    const Rational half_central(central, Integer(2));
    const Rational two_pow = pow(Rational(2), Integer(2 * n - 1));

    std::vector<QuadElem> ones(to_ulong(n) + 1, QuadElem(1));
    QuadElem row_sum = half_sum(n, ones);

    std::vector<QuadElem> alt;
    alt.reserve(ones.size());
    for (Integer k = 0; k <= n; ++k)
        alt.push_back(QuadElem(neg_one_pow(k)));
    QuadElem alt_sum = half_sum(n, alt);

    Cor1Result out;
    out.row_sum = row_sum == QuadElem(two_pow + half_central);
    out.alternating_sum = alt_sum == QuadElem(half_central);
    out.unit_values =
        f_direct(n, QuadElem(1)) == QuadElem(Rational(2) * two_pow + Rational(central)) &&
        f_direct(n, QuadElem(-1)) == QuadElem(central);
    QuadElem lhs = f_direct(n, -(a * a));
    QuadElem diff = a - inverse(a);
    QuadElem rhs = QuadElem(neg_one_pow(n)) * pow(diff, Integer(2 * n)) + QuadElem(central);
    out.negated_square = lhs == rhs;
    return out;
}

}  // namespace binsum
