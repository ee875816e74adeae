#pragma once

// Both sides of the gap-4 / gap-6 identities for Bernoulli and Euler numbers
// and polynomials, plus solvers that compute B_n and E_n while reading only
// every 6th (or 4th) lower value.

#include <optional>
#include <string>
#include <variant>

#include "lacuna/exactnum.hpp"
#include "lacuna/seqcore.hpp"

namespace lacuna {

using Value = std::variant<Rational, QuadraticRational, RationalPoly>;

/// lhs - rhs; both must hold the same alternative (std::logic_error otherwise).
Value subtract(const Value& lhs, const Value& rhs);
bool is_zero(const Value& v);
std::string to_string(const Value& v);
/// Polynomials are evaluated at x; numbers are returned unchanged.
Value evaluate_at(const Value& v, const Rational& x);
bool is_polynomial(const Value& v);

struct IdentityParams {
    long n = 0;
    std::optional<long> m;
    std::optional<Rational> x;
    std::optional<Rational> y;
    std::optional<QuadraticRational> z;
    std::optional<std::string> variant;
};

std::string to_string(const IdentityParams& p);

struct IdentityInstance {
    std::string name;
    IdentityParams params;
    Value lhs;
    Value rhs;
    std::optional<Rational> rhs_aux;

    Value residual() const { return subtract(lhs, rhs); }
    bool holds() const { return is_zero(residual()); }
};

/// The four-case correction term of the scaled gap-6 sum. n odd, n >= 3.
Rational delta_mn(long m, long n);

/// sum_{k = 3 (mod 6)} C(n,k) B_{n-k} against -n/6 or n/3. n odd >= 3.
IdentityInstance eq15_pair(SequenceCache& cache, long n);

/// sum_{k = 3 (6)} C(n,k) B_{n-k}(x) = n/6 (x^{n-1} + (x-1)^{n-1} - (x+w)^{n-1} - (x+w^2)^{n-1}).
IdentityInstance thm21_pair(SequenceCache& cache, long n);

/// sum_{k = 3 (6)} C(n,k) m^k B_{n-k}
Rational gap6_scaled_lhs(SequenceCache& cache, long m, long n);

/// General-m closed form, rhs_aux = delta_mn(m, n). n odd >= 3.
IdentityInstance thm22_pair(SequenceCache& cache, long m, long n);

/// Specialised closed forms for m in {2, 3, 4} (Lucas V for m = 3, 4).
Rational gap6_scaled_closed_rhs(SequenceCache& cache, long m, long n);

/// The m = 2, 3, 4 closed forms as identity instances (name "cor21".."cor23").
IdentityInstance gap6_corollary_pair(SequenceCache& cache, long m, long n);

/// sum_{k = 2 (4)} C(n,k) B_{n-k}(x) (-1)^{(k-2)/4} 2^{n+1-k/2} = n i ((2x-1-i)^{n-1} - (2x-1+i)^{n-1}).
IdentityInstance thm23_pair(SequenceCache& cache, long n);

/// sum_{k = 2 (4)} C(n,k) (-1)^{(k-2)/4} 2^{n-k/2} m^k B_{n-k}; n even >= 2.
IdentityInstance thm24_pair(SequenceCache& cache, long m, long n);

/// Direct sum in the normalisation used by the m-specific closed form.
Rational gap4_scaled_lhs(SequenceCache& cache, long m, long n);
/// Closed forms for m in {1, 2, 3, 4} (Lucas U for m = 3, 4).
Rational gap4_scaled_closed_rhs(SequenceCache& cache, long m, long n);
/// Named "cor24" (m=1), "cor25" (m=2), "cor27" (m=3), "cor26" (m=4).
IdentityInstance gap4_corollary_pair(SequenceCache& cache, long m, long n);

/// sum_{k = 0 (4), k >= 4} C(n,k) B_{n-k}(x) ((-1)^{k/4} 2^{k/2-1} - 1), n >= 1.
IdentityInstance thm25_pair(SequenceCache& cache, long n);

/// x = 0 specialisation: sum_{k = 0 (4), k >= 4} C(n,k) ((-4)^{k/4} - 2) B_{n-k}; n even >= 2.
IdentityInstance cor28_pair(SequenceCache& cache, long n);

/// sum_{k = 0 (4)} C(n,k) (-1)^{k/4} 2^{-k/2} E_{n-k}(x) = ((x-1/2+i/2)^n + (x-1/2-i/2)^n) / 2.
IdentityInstance thm31_pair(SequenceCache& cache, long n);

/// sum_{k = 0 (4)} C(n,k) (-4)^{k/4} E_{n-k} = (-1)^{n/2}; n even >= 2.
IdentityInstance cor31_pair(SequenceCache& cache, long n);

/// sum_{k = 0 (4), k < n} C(n,k) (-1)^{k/4} 2^{(n-k)/2} (2^{n-k} - 1) B_{n-k}; n even >= 2.
IdentityInstance cor32_pair(SequenceCache& cache, long n);

enum class Thm32Variant { Printed, Corrected };

/// sum_{k = 0 (4)} C(n,k) ((-1)^{k/4} 2^{k/2-1} + 1) E_{n-k}(x) against the
/// printed right-hand side, or the one carrying the extra -2E_n(x)/4 term.
IdentityInstance thm32_pair(SequenceCache& cache, long n, Thm32Variant variant);

/// 4E_n(x) + 3 sum_{k>=1} C(n,6k) E_{n-6k}(x) = x^n + (x-1)^n + (-1)^n V_n(1-2x, x^2-x+1).
IdentityInstance thm33_pair(SequenceCache& cache, long n);

/// 4E_n against 2(1 + (-3)^{n/2}) - 3 sum_{k>=1} C(n,6k) 2^{6k} E_{n-6k}; n even >= 2.
IdentityInstance eq16_pair(SequenceCache& cache, long n);

enum class Lemma { BernoulliShift, EulerShift };

/// BernoulliShift: sum_{k<n} C(n,k) B_k(x0) ((1+z)^{n-k} - z^{n-k}) = n (x0+z)^{n-1}, n >= 1.
/// EulerShift:     sum_{k<=n} C(n,k) E_k(x0) (z^{n-k} + (1+z)^{n-k}) = 2 (x0+z)^n.
/// Evaluated in the field of z with 0^0 = 1.
IdentityInstance lemma_pair(SequenceCache& cache, Lemma which, long n, const Rational& x0,
                            const QuadraticRational& z);

/// B_n from the gap-6 rearrangement with N = n + 3; reads only B_{n-6}, B_{n-12}, ...
Rational solve_bernoulli_gap6(SequenceCache& cache, long n);

/// E_n = (-1)^{n/2} - sum_{k = 0 (4), k >= 4} C(n,k) (-4)^{k/4} E_{n-k}. Odd n gives 0.
Rational solve_euler_gap4(SequenceCache& cache, long n);

/// 4E_n = 2(1 + (-3)^{n/2}) - 3 sum_{k>=1} C(n,6k) 2^{6k} E_{n-6k}. Odd n throws BadParity.
Rational solve_euler_gap6(SequenceCache& cache, long n);

} // namespace lacuna
