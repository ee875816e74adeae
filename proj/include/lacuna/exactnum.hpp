#pragma once

// Exact arithmetic: big rationals, elements of Q(sqrt d) for d in {-1, -3},
// dense univariate polynomials over either ring, binomial coefficients.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lacuna/errors.hpp"

namespace lacuna {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical text form: optional '-', digits, optional "/den" with den > 1.
std::string to_string(const Rational& q);

/// Parses the canonical text form (non-reduced input such as "2/4" is
/// accepted and reduced). Throws std::invalid_argument on malformed text or
/// a zero denominator.
Rational parse_rational(std::string_view text);

/// gcd(|num|, den) == 1 and den >= 1.
bool is_canonical(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// num/den reduced to canonical form; den must be nonzero.
Rational make_rational(long num, long den = 1);

Integer binomial(unsigned long n, unsigned long k);

/// base^e for any integer e (negative e requires base != 0). 0^0 == 1.
Rational power(const Rational& base, long e);

/// Integer-valued sign helper: (-1)^e.
inline int neg_one_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

/// a + b*sqrt(d), d in {-1, -3}.
///
/// Values whose sqrt(d) part is zero are plain rationals and combine freely
/// with elements of either field; combining two genuinely non-real values from
/// different fields throws std::domain_error.
class QuadraticRational {
public:
    QuadraticRational(int d, Rational a, Rational b = 0);

    /// (-1 + sqrt(-3)) / 2
    static QuadraticRational omega();
    /// sqrt(-1)
    static QuadraticRational imag_unit();

    int d() const noexcept { return d_; }
    const Rational& real() const noexcept { return a_; }
    const Rational& surd() const noexcept { return b_; }

    bool is_rational() const { return lacuna::is_zero(b_); }
    bool is_zero() const { return lacuna::is_zero(a_) && lacuna::is_zero(b_); }

    QuadraticRational conj() const { return {d_, a_, -b_}; }

    QuadraticRational& operator+=(const QuadraticRational& o);
    QuadraticRational& operator-=(const QuadraticRational& o);
    QuadraticRational& operator*=(const QuadraticRational& o);
    QuadraticRational& operator*=(const Rational& r);

    friend QuadraticRational operator+(QuadraticRational l, const QuadraticRational& r) { return l += r; }
    friend QuadraticRational operator-(QuadraticRational l, const QuadraticRational& r) { return l -= r; }
    friend QuadraticRational operator*(QuadraticRational l, const QuadraticRational& r) { return l *= r; }
    friend QuadraticRational operator*(QuadraticRational l, const Rational& r) { return l *= r; }
    friend QuadraticRational operator*(const Rational& r, QuadraticRational l) { return l *= r; }
    QuadraticRational operator-() const { return {d_, -a_, -b_}; }

    /// Same field and component-wise equal.
    friend bool operator==(const QuadraticRational& l, const QuadraticRational& r) {
        return l.d_ == r.d_ && l.a_ == r.a_ && l.b_ == r.b_;
    }

private:
    int common_field(const QuadraticRational& o) const;

    int d_;
    Rational a_;
    Rational b_;
};

std::string to_string(const QuadraticRational& z);

inline bool is_zero(const QuadraticRational& z) { return z.is_zero(); }

/// z^e by repeated squaring; z^0 == 1.
QuadraticRational quad_pow(const QuadraticRational& z, unsigned long e);

/// z^e + conj(z)^e. The sqrt(d) parts cancel; a nonzero remainder is a bug
/// and throws std::logic_error.
Rational trace_power(const QuadraticRational& z, unsigned long e);

// Ring helpers so generic code can materialise 0 and 1 in the ring of a
// sample element.
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline QuadraticRational zero_like(const QuadraticRational& z) { return {z.d(), 0, 0}; }
inline QuadraticRational one_like(const QuadraticRational& z) { return {z.d(), 1, 0}; }

/// Dense polynomial, coefficients in ascending degree. The empty coefficient
/// vector is the zero polynomial; otherwise the top coefficient is nonzero.
template <class R>
class Polynomial {
public:
    using coefficient_type = R;

    Polynomial() = default;
    explicit Polynomial(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial constant(R c) { return Polynomial(std::vector<R>{std::move(c)}); }

    /// c * x^deg
    static Polynomial monomial(const R& c, std::size_t deg) {
        std::vector<R> v(deg + 1, zero_like(c));
        v[deg] = c;
        return Polynomial(std::move(v));
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<R>& coeffs() const noexcept { return coeffs_; }
    const R& operator[](std::size_t k) const { return coeffs_.at(k); }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.reserve(o.coeffs_.size());
            for (std::size_t k = coeffs_.size(); k < o.coeffs_.size(); ++k) coeffs_.push_back(zero_like(o.coeffs_[k]));
        }
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) {
            for (std::size_t k = coeffs_.size(); k < o.coeffs_.size(); ++k) coeffs_.push_back(zero_like(o.coeffs_[k]));
        }
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
        trim();
        return *this;
    }

    Polynomial& operator*=(const R& c) {
        for (auto& a : coeffs_) a *= c;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial l, const Polynomial& r) { return l += r; }
    friend Polynomial operator-(Polynomial l, const Polynomial& r) { return l -= r; }
    friend Polynomial operator*(Polynomial l, const R& c) { return l *= c; }
    friend Polynomial operator*(const R& c, Polynomial l) { return l *= c; }
    Polynomial operator-() const {
        Polynomial p = *this;
        for (auto& a : p.coeffs_) a = -a;
        return p;
    }

    friend Polynomial operator*(const Polynomial& l, const Polynomial& r) {
        if (l.is_zero() || r.is_zero()) return {};
        std::vector<R> out(l.coeffs_.size() + r.coeffs_.size() - 1, zero_like(l.coeffs_[0]));
        for (std::size_t i = 0; i < l.coeffs_.size(); ++i) {
            if (lacuna::is_zero(l.coeffs_[i])) continue;
            for (std::size_t j = 0; j < r.coeffs_.size(); ++j) out[i + j] += l.coeffs_[i] * r.coeffs_[j];
        }
        return Polynomial(std::move(out));
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& l, const Polynomial& r) { return l.coeffs_ == r.coeffs_; }

    /// Horner evaluation at a point of the coefficient ring.
    R operator()(const R& x) const {
        if (coeffs_.empty()) return zero_like(x);
        R acc = coeffs_.back();
        for (std::size_t k = coeffs_.size() - 1; k-- > 0;) {
            acc *= x;
            acc += coeffs_[k];
        }
        return acc;
    }

private:
    void trim() {
        while (!coeffs_.empty() && lacuna::is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<R> coeffs_;
};

using RationalPoly = Polynomial<Rational>;
using QuadPoly = Polynomial<QuadraticRational>;

/// The polynomial x.
template <class R>
Polynomial<R> identity_poly(const R& sample) {
    return Polynomial<R>::monomial(one_like(sample), 1);
}

/// p^e by repeated squaring; p^0 == 1 (p must be nonzero or e > 0 when the
/// ring sample cannot be inferred, so the caller passes one).
template <class R>
Polynomial<R> poly_pow(Polynomial<R> p, unsigned long e, const R& sample) {
    Polynomial<R> acc = Polynomial<R>::constant(one_like(sample));
    while (e != 0) {
        if (e & 1UL) acc *= p;
        e >>= 1;
        if (e != 0) p *= p;
    }
    return acc;
}

/// q(x) = p(x + c), by binomial expansion.
template <class R>
Polynomial<R> poly_shift(const Polynomial<R>& p, const R& c) {
    if (p.is_zero()) return {};
    const auto n = p.coeffs().size();
    std::vector<R> cpow;
    cpow.reserve(n);
    cpow.push_back(one_like(c));
    for (std::size_t k = 1; k < n; ++k) cpow.push_back(cpow.back() * c);

    std::vector<R> out(n, zero_like(c));
    for (std::size_t j = 0; j < n; ++j) {
        const R& pj = p.coeffs()[j];
        if (is_zero(pj)) continue;
        for (std::size_t i = 0; i <= j; ++i) {
            R term = pj * cpow[j - i];
            term *= Rational(binomial(j, i));
            out[i] += term;
        }
    }
    return Polynomial<R>(std::move(out));
}

/// Embeds a rational polynomial into Q(sqrt d)[x].
QuadPoly lift(const RationalPoly& p, int d);

/// (x + c)-shift of a rational polynomial by an element of Q(sqrt d).
QuadPoly poly_shift(const RationalPoly& p, const QuadraticRational& c);

/// Drops the sqrt(d) parts, requiring each to be exactly zero. Throws
/// NonRealResidue naming the lowest offending degree otherwise.
RationalPoly poly_reduce_to_rational(const QuadPoly& p);

/// Coefficients as canonical rational strings, ascending degree.
std::vector<std::string> coefficient_strings(const RationalPoly& p);

/// JSON-style array of quoted coefficient strings, e.g. ["0","-1","1"].
std::string to_string(const RationalPoly& p);

} // namespace lacuna
