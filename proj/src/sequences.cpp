#include "binsum/sequences.hpp"

namespace binsum {

namespace {

// Iterate the shared recurrence x_{k+1} = p*x_k + x_{k-1} from (x_0, x_1).
QuadElem iterate(const Integer& n, const QuadElem& p, QuadElem x0, QuadElem x1) {
    if (n == 0)
        return x0;
    const unsigned long steps = to_ulong(n);
    for (unsigned long i = 1; i < steps; ++i) {
        QuadElem next = p * x1 + x0;
        x0 = std::move(x1);
        x1 = std::move(next);
    }
    return x1;
}

}  // namespace

QuadElem seq_u(const Integer& n, const SeqParams& params) {
    if (n < 0) {
        QuadElem val = seq_u(Integer(-n), params);
        return is_even(n) ? -val : val;  // u_{-n} = (-1)^{n+1} u_n
    }
    return iterate(n, params.p, QuadElem(0), QuadElem(1));
}

QuadElem seq_v(const Integer& n, const SeqParams& params) {
    if (n < 0) {
        QuadElem val = seq_v(Integer(-n), params);
        return is_even(n) ? val : -val;  // v_{-n} = (-1)^n v_n
    }
    return iterate(n, params.p, QuadElem(2), params.p);
}

SeqPair seq_pair_fastdouble(const Integer& n, const SeqParams& params) {
    if (n < 0)
        throw std::domain_error("fast doubling needs n >= 0, got " + n.get_str());
    QuadElem u(0);
    QuadElem v(2);
    if (n > 0) {
        const QuadElem half(Rational(1, 2));
        const size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
        bool index_odd = false;
        for (size_t i = bits; i-- > 0;) {
            // (u, v) = (u_k, v_k) -> index 2k, then 2k+1 when the bit is set
            QuadElem u2 = u * v;
            QuadElem v2 = v * v + QuadElem(index_odd ? 2 : -2);
            if (mpz_tstbit(n.get_mpz_t(), i)) {
                u = (params.p * u2 + v2) * half;
                v = (params.p * v2 + params.disc * u2) * half;
                index_odd = true;
            } else {
                u = std::move(u2);
                v = std::move(v2);
                index_odd = false;
            }
        }
    }
    return SeqPair{std::move(u), std::move(v), n};
}

bool binet_check(const Integer& n, const SeqParams& params) {
    if (n < 0)
        throw std::domain_error("binet_check needs n >= 0");
    if (!params.p.is_rational())
        throw std::domain_error("binet_check needs a rational p; alpha for a surd p "
                                "lies outside the quadratic ring");
    // disc is a rational N/D here; sqrt(N/D) = sqrt(N*D)/D.
    const Rational disc = params.disc.rational_part();
    const Integer rad = disc.num() * disc.den();
    const QuadElem root(Rational(0), Rational(1, disc.den()), rad);
    const QuadElem half(Rational(1, 2));
    QuadElem alpha = (params.p + root) * half;
    QuadElem beta = (params.p - root) * half;

    QuadElem an = pow(alpha, n);
    QuadElem bn = pow(beta, n);
    QuadElem u_closed = (an - bn) * inverse(alpha - beta);
    QuadElem v_closed = an + bn;
    return u_closed == seq_u(n, params) && v_closed == seq_v(n, params);
}

bool identity4_check(const Integer& n, const Integer& m, const SeqParams& params) {
    if (m < 0 || m > n)
        throw std::domain_error("identity4_check needs 0 <= m <= n");
    QuadElem lhs = seq_v(Integer(n + m), params);
    QuadElem vnm = seq_v(Integer(n - m), params);
    lhs = is_even(m) ? lhs - vnm : lhs + vnm;
    QuadElem rhs = params.disc * seq_u(n, params) * seq_u(m, params);
    return lhs == rhs;
}

}  // namespace binsum
