#include "lacuna/exactnum.hpp"

#include <cctype>
#include <stdexcept>

namespace lacuna {

std::string to_string(const Rational& q) { return q.get_str(10); }

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && body.front() == '-') body.remove_prefix(1);
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    if (!all_digits(num)) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    if (slash != std::string_view::npos) {
        const std::string_view den = body.substr(slash + 1);
        if (!all_digits(den)) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        if (den.find_first_not_of('0') == std::string_view::npos)
            throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    }
    Rational q(std::string(text), 10);
    q.canonicalize();
    return q;
}

bool is_canonical(const Rational& q) {
    if (sgn(q.get_den()) <= 0) return false;
    Integer g;
    mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return g == 1;
}

Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer out;
    if (k > n) return out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Rational power(const Rational& base, long e) {
    if (e < 0) {
        if (is_zero(base)) throw std::domain_error("zero to a negative power");
        Rational inv = 1 / base;
        return power(inv, -e);
    }
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
    return out;
}

// ---------------------------------------------------------------------------

QuadraticRational::QuadraticRational(int d, Rational a, Rational b) : d_(d), a_(std::move(a)), b_(std::move(b)) {
    if (d_ != -1 && d_ != -3) throw std::invalid_argument("unsupported discriminant " + std::to_string(d_));
}

QuadraticRational QuadraticRational::omega() { return {-3, Rational(-1, 2), Rational(1, 2)}; }

QuadraticRational QuadraticRational::imag_unit() { return {-1, 0, 1}; }

int QuadraticRational::common_field(const QuadraticRational& o) const {
    if (d_ == o.d_ || o.is_rational()) return d_;
    if (is_rational()) return o.d_;
    throw std::domain_error("mixing sqrt(" + std::to_string(d_) + ") and sqrt(" + std::to_string(o.d_) + ")");
}

QuadraticRational& QuadraticRational::operator+=(const QuadraticRational& o) {
    d_ = common_field(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadraticRational& QuadraticRational::operator-=(const QuadraticRational& o) {
    d_ = common_field(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadraticRational& QuadraticRational::operator*=(const QuadraticRational& o) {
    d_ = common_field(o);
    // (a + b r)(a' + b' r) = (aa' + bb'd) + (ab' + a'b) r
    Rational re = a_ * o.a_ + b_ * o.b_ * d_;
    Rational im = a_ * o.b_ + o.a_ * b_;
    a_ = std::move(re);
    b_ = std::move(im);
    return *this;
}

QuadraticRational& QuadraticRational::operator*=(const Rational& r) {
    a_ *= r;
    b_ *= r;
    return *this;
}

std::string to_string(const QuadraticRational& z) {
    if (z.is_rational()) return to_string(z.real());
    std::string out;
    if (!is_zero(z.real())) out = to_string(z.real()) + (sgn(z.surd()) > 0 ? "+" : "");
    return out + to_string(z.surd()) + "*sqrt(" + std::to_string(z.d()) + ")";
}

QuadraticRational quad_pow(const QuadraticRational& z, unsigned long e) {
    QuadraticRational acc = one_like(z);
    QuadraticRational base = z;
    while (e != 0) {
        if (e & 1UL) acc *= base;
        e >>= 1;
        if (e != 0) base *= base;
    }
    return acc;
}

Rational trace_power(const QuadraticRational& z, unsigned long e) {
    const QuadraticRational sum = quad_pow(z, e) + quad_pow(z.conj(), e);
    if (!sum.is_rational()) throw std::logic_error("trace_power: conjugate powers left a surd part " + to_string(sum));
    return sum.real();
}

// ---------------------------------------------------------------------------

QuadPoly lift(const RationalPoly& p, int d) {
    std::vector<QuadraticRational> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.emplace_back(d, c, 0);
    return QuadPoly(std::move(out));
}

QuadPoly poly_shift(const RationalPoly& p, const QuadraticRational& c) { return poly_shift(lift(p, c.d()), c); }

RationalPoly poly_reduce_to_rational(const QuadPoly& p) {
    std::vector<Rational> out;
    out.reserve(p.coeffs().size());
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        const auto& c = p.coeffs()[k];
        if (!c.is_rational()) throw NonRealResidue(k, to_string(c));
        out.push_back(c.real());
    }
    return RationalPoly(std::move(out));
}

std::vector<std::string> coefficient_strings(const RationalPoly& p) {
    std::vector<std::string> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(to_string(c));
    return out;
}

std::string to_string(const RationalPoly& p) {
    std::string out = "[";
    bool first = true;
    for (const auto& c : p.coeffs()) {
        if (!first) out += ',';
        first = false;
        out += '"' + to_string(c) + '"';
    }
    return out + "]";
}

} // namespace lacuna
