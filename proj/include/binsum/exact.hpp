#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>

namespace binsum {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

bool fits_ulong(const Integer& n);
unsigned long to_ulong(const Integer& n);

inline bool is_even(const Integer& n) { return mpz_even_p(n.get_mpz_t()) != 0; }
inline bool is_odd(const Integer& n) { return mpz_odd_p(n.get_mpz_t()) != 0; }

/// (-1)^e as an int, for exponent parity bookkeeping.
inline int neg_one_pow(const Integer& e) { return is_odd(e) ? -1 : 1; }

Integer pow(const Integer& base, const Integer& exp);

/// b^e mod m, m > 0; result in [0, m).
Integer mod_pow(const Integer& base, const Integer& exp, const Integer& mod);

/// C(n, k) for n >= 0; zero when k < 0 or k > n. Computed by the
/// multiplicative formula with running exact division, so intermediates
/// never exceed the result times n.
Integer binom(const Integer& n, const Integer& k);

/// Exact rational, kept in lowest terms with positive denominator.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int n) : q_(n) {}
    Rational(long n) : q_(n) {}
    Rational(const Integer& n) : q_(n) {}
    Rational(const Integer& num, const Integer& den);

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// "p" when the denominator is 1, otherwise "p/q".
    std::string str() const { return q_.get_str(); }

    friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.q_)); }
    friend Rational operator+(const Rational& x, const Rational& y) { return Rational(mpq_class(x.q_ + y.q_)); }
    friend Rational operator-(const Rational& x, const Rational& y) { return Rational(mpq_class(x.q_ - y.q_)); }
    friend Rational operator*(const Rational& x, const Rational& y) { return Rational(mpq_class(x.q_ * y.q_)); }
    friend Rational operator/(const Rational& x, const Rational& y);

    Rational& operator+=(const Rational& y) { q_ += y.q_; return *this; }
    Rational& operator-=(const Rational& y) { q_ -= y.q_; return *this; }
    Rational& operator*=(const Rational& y) { q_ *= y.q_; return *this; }
    Rational& operator/=(const Rational& y) { *this = *this / y; return *this; }

    friend bool operator==(const Rational& x, const Rational& y) { return x.q_ == y.q_; }
    friend bool operator!=(const Rational& x, const Rational& y) { return x.q_ != y.q_; }
    friend bool operator<(const Rational& x, const Rational& y) { return x.q_ < y.q_; }
    friend bool operator<=(const Rational& x, const Rational& y) { return x.q_ <= y.q_; }
    friend bool operator>(const Rational& x, const Rational& y) { return x.q_ > y.q_; }
    friend bool operator>=(const Rational& x, const Rational& y) { return x.q_ >= y.q_; }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}

    mpq_class q_;  // canonical: lowest terms, den > 0
};

Rational pow(const Rational& base, const Integer& exp);
Rational abs(const Rational& x);

inline std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

/// Element a + b*sqrt(d) of a real quadratic ring, with rational a, b and a
/// fixed nonnegative integer radicand d. Canonical form: perfect-square
/// radicands are collapsed at construction, and b == 0 forces d == 0, so
/// operator== is field equality.
class QuadElem {
public:
    QuadElem() : a_(0), b_(0), d_(0) {}
    QuadElem(int n) : a_(n), b_(0), d_(0) {}
    QuadElem(long n) : a_(n), b_(0), d_(0) {}
    QuadElem(const Integer& n) : a_(n), b_(0), d_(0) {}
    QuadElem(const Rational& a) : a_(a), b_(0), d_(0) {}
    QuadElem(Rational a, Rational b, Integer d);

    const Rational& rational_part() const { return a_; }
    const Rational& surd_coeff() const { return b_; }
    const Integer& radicand() const { return d_; }

    bool is_rational() const { return b_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    /// "a" / "a/b" for pure rationals, "a+b*sqrt(d)" otherwise.
    std::string str() const;

    friend QuadElem operator-(const QuadElem& x);
    friend QuadElem operator+(const QuadElem& x, const QuadElem& y);
    friend QuadElem operator-(const QuadElem& x, const QuadElem& y);
    friend QuadElem operator*(const QuadElem& x, const QuadElem& y);

    QuadElem& operator+=(const QuadElem& y) { *this = *this + y; return *this; }
    QuadElem& operator-=(const QuadElem& y) { *this = *this - y; return *this; }
    QuadElem& operator*=(const QuadElem& y) { *this = *this * y; return *this; }

    friend bool operator==(const QuadElem& x, const QuadElem& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    }
    friend bool operator!=(const QuadElem& x, const QuadElem& y) { return !(x == y); }

private:
    Rational a_, b_;
    Integer d_;
};

QuadElem conj(const QuadElem& x);

/// a^2 - d*b^2. Multiplicative; zero exactly for x == 0.
Rational norm(const QuadElem& x);

/// conj(x)/norm(x); throws std::domain_error when norm(x) == 0.
QuadElem inverse(const QuadElem& x);

/// Square-and-multiply; pow(x, 0) == 1 for every x, negative exponents
/// require an invertible x.
QuadElem pow(const QuadElem& x, const Integer& exp);

inline std::ostream& operator<<(std::ostream& os, const QuadElem& x) { return os << x.str(); }

}  // namespace binsum
