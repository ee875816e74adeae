#pragma once

// Lucas sequences U_n(b,c), V_n(b,c) over any ring in the project.

#include "lacuna/exactnum.hpp"

namespace lacuna {

inline RationalPoly zero_like(const RationalPoly&) { return {}; }
inline RationalPoly one_like(const RationalPoly&) { return RationalPoly::constant(Rational(1)); }

template <class R>
struct LucasParams {
    R b;
    R c;
};

enum class LucasKind { U, V };

namespace detail {

template <class R>
R lucas_step(const LucasParams<R>& p, R x0, R x1, unsigned long n) {
    if (n == 0) return x0;
    // X_{k+1} = b X_k - c X_{k-1}
    for (unsigned long k = 1; k < n; ++k) {
        R next = p.b * x1 - p.c * x0;
        x0 = std::move(x1);
        x1 = std::move(next);
    }
    return x1;
}

} // namespace detail

template <class R>
R lucas_u(const LucasParams<R>& p, unsigned long n) {
    return detail::lucas_step(p, zero_like(p.b), one_like(p.b), n);
}

template <class R>
R lucas_v(const LucasParams<R>& p, unsigned long n) {
    R two = one_like(p.b) + one_like(p.b);
    return detail::lucas_step(p, std::move(two), p.b, n);
}

/// b^2 - 4c written as scale^2 * d with d in {-1, -3} and scale > 0.
struct DiscriminantSplit {
    Rational scale;
    int d;
};

/// Throws ZeroDiscriminant or UnsupportedDiscriminant.
DiscriminantSplit split_discriminant(const Rational& disc);

/// U_n or V_n from the closed form in the roots (b +- sqrt(b^2-4c)) / 2,
/// evaluated in Q(sqrt d).
Rational lucas_closed(const LucasParams<Rational>& p, unsigned long n, LucasKind kind);

} // namespace lacuna
