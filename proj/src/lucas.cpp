#include "lacuna/lucas.hpp"

namespace lacuna {

namespace {

Rational ratio(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool exact_sqrt(const Integer& v, Integer& root) {
    if (sgn(v) < 0) return false;
    if (!mpz_perfect_square_p(v.get_mpz_t())) return false;
    mpz_sqrt(root.get_mpz_t(), v.get_mpz_t());
    return true;
}

} // namespace

DiscriminantSplit split_discriminant(const Rational& disc) {
    if (is_zero(disc)) throw ZeroDiscriminant("b^2 - 4c = 0");
    if (sgn(disc) > 0) throw UnsupportedDiscriminant("real discriminant " + to_string(disc));

    // disc = p/q = (p q) / q^2; look for |p q| = s^2 or 3 s^2.
    const Integer den = disc.get_den();
    const Integer cleared = -(disc.get_num() * den);
    Integer root;
    if (exact_sqrt(cleared, root)) return {ratio(root, den), -1};
    if (cleared % 3 == 0) {
        const Integer third = cleared / 3;
        if (exact_sqrt(third, root)) return {ratio(root, den), -3};
    }
    throw UnsupportedDiscriminant("squarefree part of " + to_string(disc) + " is not -1 or -3");
}

Rational lucas_closed(const LucasParams<Rational>& p, unsigned long n, LucasKind kind) {
    Rational disc = p.b * p.b - 4 * p.c;
    const DiscriminantSplit split = split_discriminant(disc);
    Rational half_b = p.b / 2;
    Rational half_s = split.scale / 2;
    const QuadraticRational alpha(split.d, half_b, half_s);
    const QuadraticRational alpha_n = quad_pow(alpha, n);
    if (kind == LucasKind::V) return trace_power(alpha, n);
    // (alpha^n - conj(alpha)^n) / (s sqrt d) = 2 * surd(alpha^n) / s
    return Rational(2 * alpha_n.surd() / split.scale);
}

} // namespace lacuna
