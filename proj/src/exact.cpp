#include "binsum/exact.hpp"

namespace binsum {

bool fits_ulong(const Integer& n) {
    return mpz_fits_ulong_p(n.get_mpz_t()) != 0;
}

unsigned long to_ulong(const Integer& n) {
    if (n < 0 || !fits_ulong(n))
        throw std::overflow_error("integer does not fit an unsigned long: " + n.get_str());
    return mpz_get_ui(n.get_mpz_t());
}

Integer pow(const Integer& base, const Integer& exp) {
    if (exp < 0)
        throw std::domain_error("negative exponent on an integer base");
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), to_ulong(exp));
    return out;
}

Integer mod_pow(const Integer& base, const Integer& exp, const Integer& mod) {
    if (mod <= 0)
        throw std::domain_error("modulus must be positive");
    if (exp < 0)
        throw std::domain_error("negative exponent in mod_pow");
    Integer b;
    mpz_fdiv_r(b.get_mpz_t(), base.get_mpz_t(), mod.get_mpz_t());
    Integer out;
    mpz_powm(out.get_mpz_t(), b.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return out;
}

Integer binom(const Integer& n, const Integer& k) {
    if (n < 0)
        throw std::domain_error("binom: negative row " + n.get_str());
    if (k < 0 || k > n)
        return 0;
    Integer kk = k;
    if (Integer(n - k) < kk)
        kk = n - k;
    Integer out = 1;
    const unsigned long steps = to_ulong(kk);
    for (unsigned long i = 1; i <= steps; ++i) {
        out *= n - kk + static_cast<long>(i);
        mpz_divexact_ui(out.get_mpz_t(), out.get_mpz_t(), i);
    }
    return out;
}

Rational::Rational(const Integer& num, const Integer& den) : q_(num, den) {
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    q_.canonicalize();
}

Rational operator/(const Rational& x, const Rational& y) {
    if (y.is_zero())
        throw std::domain_error("rational division by zero");
    return Rational(mpq_class(x.q_ / y.q_));
}

Rational pow(const Rational& base, const Integer& exp) {
    if (exp < 0) {
        if (base.is_zero())
            throw std::domain_error("negative power of zero");
        return pow(Rational(base.den(), base.num()), Integer(-exp));
    }
    Integer num = pow(base.num(), exp);
    Integer den = pow(base.den(), exp);
    return Rational(num, den);
}

Rational abs(const Rational& x) {
    return x.sign() < 0 ? -x : x;
}

QuadElem::QuadElem(Rational a, Rational b, Integer d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    if (d_ < 0)
        throw std::domain_error("negative radicand " + d_.get_str());
    if (!b_.is_zero() && mpz_perfect_square_p(d_.get_mpz_t())) {
        Integer root;
        mpz_sqrt(root.get_mpz_t(), d_.get_mpz_t());
        a_ += b_ * Rational(root);
        b_ = 0;
    }
    if (b_.is_zero())
        d_ = 0;
}

std::string QuadElem::str() const {
    if (is_rational())
        return a_.str();
    std::string out = a_.str();
    out += b_.sign() < 0 ? "-" : "+";
    out += abs(b_).str();
    out += "*sqrt(" + d_.get_str() + ")";
    return out;
}

namespace {

// Common radicand of two canonical elements; rationals adopt the other side's.
const Integer& merge_radicand(const QuadElem& x, const QuadElem& y) {
    if (x.is_rational())
        return y.radicand();
    if (y.is_rational() || x.radicand() == y.radicand())
        return x.radicand();
    throw std::domain_error("mismatched radicands sqrt(" + x.radicand().get_str() +
                            ") and sqrt(" + y.radicand().get_str() + ")");
}

}  // namespace

QuadElem operator-(const QuadElem& x) {
    return QuadElem(-x.a_, -x.b_, x.d_);
}

QuadElem operator+(const QuadElem& x, const QuadElem& y) {
    const Integer& d = merge_radicand(x, y);
    return QuadElem(x.a_ + y.a_, x.b_ + y.b_, d);
}

QuadElem operator-(const QuadElem& x, const QuadElem& y) {
    const Integer& d = merge_radicand(x, y);
    return QuadElem(x.a_ - y.a_, x.b_ - y.b_, d);
}

QuadElem operator*(const QuadElem& x, const QuadElem& y) {
    const Integer& d = merge_radicand(x, y);
    Rational a = x.a_ * y.a_ + Rational(d) * (x.b_ * y.b_);
    Rational b = x.a_ * y.b_ + x.b_ * y.a_;
    return QuadElem(std::move(a), std::move(b), d);
}

QuadElem conj(const QuadElem& x) {
    return QuadElem(x.rational_part(), -x.surd_coeff(), x.radicand());
}

Rational norm(const QuadElem& x) {
    const Rational& a = x.rational_part();
    const Rational& b = x.surd_coeff();
    return a * a - Rational(x.radicand()) * (b * b);
}

QuadElem inverse(const QuadElem& x) {
    Rational n = norm(x);
    if (n.is_zero())
        throw std::domain_error("inverse of a zero-norm element");
    Rational inv_n = Rational(1) / n;
    return conj(x) * QuadElem(inv_n);
}

QuadElem pow(const QuadElem& x, const Integer& exp) {
    if (exp < 0)
        return pow(inverse(x), Integer(-exp));
    QuadElem acc(1);
    QuadElem base = x;
    Integer e = exp;
    while (e > 0) {
        if (is_odd(e))
            acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

}  // namespace binsum
