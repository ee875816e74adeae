#include "lacuna/lacunary.hpp"

#include <stdexcept>

#include "lacuna/lucas.hpp"

namespace lacuna {

namespace {

Rational binom(long n, long k) {
    return Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
}

Rational pow2(long e) { return power(Rational(2), e); }

Rational ipow(long base, long e) { return power(Rational(base), e); }

void require_odd_from_three(long n, const char* what) {
    if (n < 3 || n % 2 == 0) throw BadParity(std::string(what) + ": n must be odd and >= 3, got " + std::to_string(n));
}

void require_even_from_two(long n, const char* what) {
    if (n < 2 || n % 2 != 0) throw BadParity(std::string(what) + ": n must be even and >= 2, got " + std::to_string(n));
}

void require_positive_n(long n, const char* what) {
    if (n < 1) throw BadN(std::string(what) + ": n must be >= 1, got " + std::to_string(n));
}

void require_natural_n(long n, const char* what) {
    if (n < 0) throw BadN(std::string(what) + ": n must be >= 0, got " + std::to_string(n));
}

void require_positive_m(long m, const char* what) {
    if (m < 1) throw BadM(std::string(what) + ": m must be >= 1, got " + std::to_string(m));
}

std::size_t idx(long n) { return static_cast<std::size_t>(n); }

RationalPoly x_power(long e) { return RationalPoly::monomial(Rational(1), idx(e)); }

/// (x + c)^e over Q(sqrt d)
QuadPoly shifted_power(const QuadraticRational& c, long e) { return poly_shift(x_power(e), c); }

/// (x + c)^e over Q
RationalPoly shifted_power(const Rational& c, long e) { return poly_shift(x_power(e), c); }

QuadraticRational qr(int d, Rational a, Rational b = 0) { return {d, std::move(a), std::move(b)}; }

IdentityInstance make_instance(std::string name, IdentityParams params, Value lhs, Value rhs) {
    IdentityInstance inst;
    inst.name = std::move(name);
    inst.params = std::move(params);
    inst.lhs = std::move(lhs);
    inst.rhs = std::move(rhs);
    return inst;
}

IdentityParams with_n(long n) {
    IdentityParams p;
    p.n = n;
    return p;
}

IdentityParams with_nm(long n, long m) {
    IdentityParams p;
    p.n = n;
    p.m = m;
    return p;
}

} // namespace

// ---------------------------------------------------------------------------
// Value helpers

Value subtract(const Value& lhs, const Value& rhs) {
    if (lhs.index() != rhs.index()) throw std::logic_error("identity sides live in different rings");
    return std::visit(
        [&](const auto& l) -> Value {
            using T = std::decay_t<decltype(l)>;
            const auto& r = std::get<T>(rhs);
            if constexpr (std::is_same_v<T, Rational>) {
                return Rational(l - r);
            } else {
                return l - r;
            }
        },
        lhs);
}

bool is_zero(const Value& v) {
    return std::visit(
        [](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, RationalPoly>) {
                return x.is_zero();
            } else {
                return lacuna::is_zero(x);
            }
        },
        v);
}

std::string to_string(const Value& v) {
    return std::visit([](const auto& x) { return lacuna::to_string(x); }, v);
}

Value evaluate_at(const Value& v, const Rational& x) {
    if (const auto* p = std::get_if<RationalPoly>(&v)) return (*p)(x);
    return v;
}

bool is_polynomial(const Value& v) { return std::holds_alternative<RationalPoly>(v); }

std::string to_string(const IdentityParams& p) {
    std::string out = "n=" + std::to_string(p.n);
    if (p.m) out += ", m=" + std::to_string(*p.m);
    if (p.x) out += ", x=" + to_string(*p.x);
    if (p.y) out += ", y=" + to_string(*p.y);
    if (p.z) out += ", z=" + to_string(*p.z);
    if (p.variant) out += ", variant=" + *p.variant;
    return out;
}

// ---------------------------------------------------------------------------
// gap-6 Bernoulli identities

Rational delta_mn(long m, long n) {
    require_positive_m(m, "delta_mn");
    require_odd_from_three(n, "delta_mn");
    const Rational mpow = ipow(m, n - 1);
    Rational out = ((n - 1) % 3 == 0) ? Rational(-mpow / 2) : mpow;
    if (m % 2 == 0) out -= ipow(-3, (n - 1) / 2) * ipow(m / 2, n - 1);
    return out;
}

IdentityInstance eq15_pair(SequenceCache& cache, long n) {
    require_odd_from_three(n, "eq15");
    Rational lhs = 0;
    for (long k = 3; k <= n; k += 6) lhs += binom(n, k) * bernoulli_number(cache, idx(n - k));
    const Rational rhs = (n % 6 == 1) ? make_rational(-n, 6) : make_rational(n, 3);
    return make_instance("eq15", with_n(n), lhs, rhs);
}

IdentityInstance thm21_pair(SequenceCache& cache, long n) {
    require_positive_n(n, "thm21");
    RationalPoly lhs;
    for (long k = 3; k <= n; k += 6) lhs += bernoulli_poly(cache, idx(n - k)) * binom(n, k);

    const long e = n - 1;
    const QuadraticRational w = QuadraticRational::omega();
    const QuadPoly bracket = lift(x_power(e) + shifted_power(Rational(-1), e), -3) - shifted_power(w, e) -
                             shifted_power(w * w, e);
    const RationalPoly rhs = poly_reduce_to_rational(bracket) * make_rational(n, 6);
    return make_instance("thm21", with_n(n), lhs, rhs);
}

Rational gap6_scaled_lhs(SequenceCache& cache, long m, long n) {
    Rational lhs = 0;
    for (long k = 3; k <= n; k += 6) lhs += binom(n, k) * ipow(m, k) * bernoulli_number(cache, idx(n - k));
    return lhs;
}

IdentityInstance thm22_pair(SequenceCache& cache, long m, long n) {
    require_positive_m(m, "thm22");
    require_odd_from_three(n, "thm22");
    const Rational lhs = gap6_scaled_lhs(cache, m, n);

    Rational bracket = 0;
    for (long r = 1; r <= m - 1; ++r) bracket += ipow(r, n - 1);
    const QuadraticRational w = QuadraticRational::omega();
    for (long r = 1; r <= (m - 1) / 2; ++r) {
        const QuadraticRational base = qr(-3, r) + w * Rational(m);
        bracket -= trace_power(base, static_cast<unsigned long>(n - 1));
    }
    const Rational delta = delta_mn(m, n);
    bracket += delta;

    IdentityInstance inst = make_instance("thm22", with_nm(n, m), lhs, Rational(make_rational(n, 3) * bracket));
    inst.rhs_aux = delta;
    return inst;
}

Rational gap6_scaled_closed_rhs(SequenceCache& /*cache*/, long m, long n) {
    require_odd_from_three(n, "gap6_scaled_closed_rhs");
    const Rational third = make_rational(n, 3);
    const bool one_mod_six = (n - 1) % 6 == 0;
    switch (m) {
    case 2: {
        const Rational sign_term = ipow(-3, (n - 1) / 2);
        if (one_mod_six) return third * (1 - pow2(n - 2) - sign_term);
        return third * (1 + pow2(n - 1) - sign_term);
    }
    case 3: {
        const Rational v = lucas_v(LucasParams<Rational>{1, 7}, static_cast<unsigned long>(n - 1));
        if (one_mod_six) return third * (1 + pow2(n - 1) - ipow(3, n - 1) / 2 - v);
        return third * (1 + pow2(n - 1) + ipow(3, n - 1) - v);
    }
    case 4: {
        const Rational v = lucas_v(LucasParams<Rational>{2, 13}, static_cast<unsigned long>(n - 1));
        const Rational common = 1 + pow2(n - 1) + ipow(3, n - 1) - ipow(-12, (n - 1) / 2) - v;
        if (one_mod_six) return third * (common - pow2(2 * n - 3));
        return third * (common + ipow(4, n - 1));
    }
    default:
        throw BadM("gap6_scaled_closed_rhs: m must be 2, 3 or 4, got " + std::to_string(m));
    }
}

IdentityInstance gap6_corollary_pair(SequenceCache& cache, long m, long n) {
    Rational rhs = gap6_scaled_closed_rhs(cache, m, n);
    return make_instance("cor2" + std::to_string(m - 1), with_nm(n, m), gap6_scaled_lhs(cache, m, n), std::move(rhs));
}

// ---------------------------------------------------------------------------
// gap-4 Bernoulli identities

IdentityInstance thm23_pair(SequenceCache& cache, long n) {
    require_positive_n(n, "thm23");
    RationalPoly lhs;
    for (long k = 2; k <= n; k += 4) {
        lhs += bernoulli_poly(cache, idx(n - k)) * (binom(n, k) * neg_one_pow((k - 2) / 4) * pow2(n + 1 - k / 2));
    }

    // (2x - 1 -+ i)^e = 2^e (x + (-1 -+ i)/2)^e
    const long e = n - 1;
    const QuadPoly minus = shifted_power(qr(-1, Rational(-1, 2), Rational(-1, 2)), e);
    const QuadPoly plus = shifted_power(qr(-1, Rational(-1, 2), Rational(1, 2)), e);
    const QuadraticRational scale = QuadraticRational::imag_unit() * Rational(pow2(e) * n);
    const RationalPoly rhs = poly_reduce_to_rational((minus - plus) * scale);
    return make_instance("thm23", with_n(n), lhs, rhs);
}

IdentityInstance thm24_pair(SequenceCache& cache, long m, long n) {
    require_positive_m(m, "thm24");
    require_even_from_two(n, "thm24");
    Rational lhs = 0;
    for (long k = 2; k <= n; k += 4) {
        lhs += binom(n, k) * neg_one_pow((k - 2) / 4) * pow2(n - k / 2) * ipow(m, k) * bernoulli_number(cache, idx(n - k));
    }

    Rational bracket = ipow(m, n - 1) * (neg_one_pow((n - 2) / 4) * pow2(n / 2) - (1 + neg_one_pow(m)) * neg_one_pow(n / 2));
    const QuadraticRational two_i = QuadraticRational::imag_unit() * Rational(2);
    for (long r = 1; r <= (m - 1) / 2; ++r) {
        const QuadraticRational a = qr(-1, 2 * r - m, -m);
        const QuadraticRational term =
            two_i * (quad_pow(a, static_cast<unsigned long>(n - 1)) - quad_pow(a.conj(), static_cast<unsigned long>(n - 1)));
        if (!term.is_rational()) throw std::logic_error("thm24: conjugate difference left a surd part");
        bracket += term.real();
    }
    return make_instance("thm24", with_nm(n, m), lhs, Rational(make_rational(n, 2) * bracket));
}

Rational gap4_scaled_lhs(SequenceCache& cache, long m, long n) {
    require_even_from_two(n, "gap4_scaled_lhs");
    Rational lhs = 0;
    for (long k = 2; k <= n; k += 4) {
        Rational weight;
        switch (m) {
        case 1: weight = pow2((n - k) / 2); break;
        case 2: weight = pow2(k / 2); break;
        case 3: weight = pow2(n - k / 2) * ipow(3, k); break;
        case 4: weight = pow2(3 * k / 2); break;
        default: throw BadM("gap4_scaled_lhs: m must be 1, 2, 3 or 4, got " + std::to_string(m));
        }
        lhs += binom(n, k) * neg_one_pow((k - 2) / 4) * weight * bernoulli_number(cache, idx(n - k));
    }
    return lhs;
}

Rational gap4_scaled_closed_rhs(SequenceCache& /*cache*/, long m, long n) {
    require_even_from_two(n, "gap4_scaled_closed_rhs");
    const Rational half = make_rational(n, 2);
    const int lead_sign = neg_one_pow((n - 2) / 4);
    switch (m) {
    case 1:
        return half * lead_sign;
    case 2:
        return half * (lead_sign * pow2((n - 2) / 2) + neg_one_pow((n - 2) / 2));
    case 3: {
        const Rational u = lucas_u(LucasParams<Rational>{2, 10}, static_cast<unsigned long>(n - 1));
        return half * (lead_sign * pow2(n / 2) * ipow(3, n - 1) + 12 * u);
    }
    case 4: {
        const Rational u = lucas_u(LucasParams<Rational>{2, 5}, static_cast<unsigned long>(n - 1));
        return half * (lead_sign * pow2(3 * n / 2 - 2) - neg_one_pow(n / 2) * pow2(n - 1) + 4 * u);
    }
    default:
        throw BadM("gap4_scaled_closed_rhs: m must be 1, 2, 3 or 4, got " + std::to_string(m));
    }
}

IdentityInstance gap4_corollary_pair(SequenceCache& cache, long m, long n) {
    static constexpr const char* names[] = {"", "cor24", "cor25", "cor27", "cor26"};
    Rational rhs = gap4_scaled_closed_rhs(cache, m, n);
    return make_instance(names[m], with_nm(n, m), gap4_scaled_lhs(cache, m, n), std::move(rhs));
}

IdentityInstance thm25_pair(SequenceCache& cache, long n) {
    require_positive_n(n, "thm25");
    RationalPoly lhs;
    for (long k = 4; k <= n; k += 4) {
        const Rational weight = neg_one_pow(k / 4) * pow2(k / 2 - 1) - 1;
        lhs += bernoulli_poly(cache, idx(n - k)) * (binom(n, k) * weight);
    }

    const long e = n - 1;
    const QuadraticRational i = QuadraticRational::imag_unit();
    const QuadraticRational one = qr(-1, 1);
    const RationalPoly real_part = shifted_power(Rational(-1), e) * Rational(2) - x_power(e) * Rational(2);
    const QuadPoly bracket = lift(real_part, -1) + shifted_power(i, e) + shifted_power(-i, e) -
                             shifted_power(i - one, e) - shifted_power(-i - one, e);
    const RationalPoly rhs = poly_reduce_to_rational(bracket) * make_rational(n, 8);
    return make_instance("thm25", with_n(n), lhs, rhs);
}

IdentityInstance cor28_pair(SequenceCache& cache, long n) {
    require_even_from_two(n, "cor28");
    Rational lhs = 0;
    for (long k = 4; k <= n; k += 4) lhs += binom(n, k) * (ipow(-4, k / 4) - 2) * bernoulli_number(cache, idx(n - k));
    const Rational rhs = make_rational(n, 2) * (neg_one_pow(n / 4) * pow2(n / 2 - 1) - 1);
    return make_instance("cor28", with_n(n), lhs, rhs);
}

// ---------------------------------------------------------------------------
// Euler identities

IdentityInstance thm31_pair(SequenceCache& cache, long n) {
    require_natural_n(n, "thm31");
    RationalPoly lhs;
    for (long k = 0; k <= n; k += 4) {
        lhs += euler_poly(cache, idx(n - k)) * (binom(n, k) * neg_one_pow(k / 4) * pow2(-k / 2));
    }
    const QuadraticRational c = qr(-1, Rational(-1, 2), Rational(1, 2));
    const QuadPoly sum = shifted_power(c, n) + shifted_power(c.conj(), n);
    const RationalPoly rhs = poly_reduce_to_rational(sum) * Rational(1, 2);
    return make_instance("thm31", with_n(n), lhs, rhs);
}

IdentityInstance cor31_pair(SequenceCache& cache, long n) {
    require_even_from_two(n, "cor31");
    Rational lhs = 0;
    for (long k = 0; k <= n; k += 4) lhs += binom(n, k) * ipow(-4, k / 4) * euler_number(cache, idx(n - k));
    return make_instance("cor31", with_n(n), lhs, Rational(neg_one_pow(n / 2)));
}

IdentityInstance cor32_pair(SequenceCache& cache, long n) {
    require_even_from_two(n, "cor32");
    Rational lhs = 0;
    for (long k = 0; k < n; k += 4) {
        lhs += binom(n, k) * neg_one_pow(k / 4) * pow2((n - k) / 2) * (pow2(n - k) - 1) *
               bernoulli_number(cache, idx(n - k));
    }
    return make_instance("cor32", with_n(n), lhs, Rational(make_rational(n, 2) * neg_one_pow(n / 4)));
}

IdentityInstance thm32_pair(SequenceCache& cache, long n, Thm32Variant variant) {
    require_natural_n(n, "thm32");
    RationalPoly lhs;
    for (long k = 0; k <= n; k += 4) {
        const Rational weight = neg_one_pow(k / 4) * pow2(k / 2 - 1) + 1;
        lhs += euler_poly(cache, idx(n - k)) * (binom(n, k) * weight);
    }

    const QuadraticRational i = QuadraticRational::imag_unit();
    const QuadraticRational one = qr(-1, 1);
    const QuadPoly four_powers =
        shifted_power(i, n) + shifted_power(-i, n) + shifted_power(i - one, n) + shifted_power(-i - one, n);
    RationalPoly bracket = poly_reduce_to_rational(four_powers) + x_power(n) * Rational(2) +
                           shifted_power(Rational(-1), n) * Rational(2);
    if (variant == Thm32Variant::Corrected) bracket -= euler_poly(cache, idx(n)) * Rational(2);

    IdentityParams params = with_n(n);
    params.variant = (variant == Thm32Variant::Printed) ? "printed" : "corrected";
    const std::string name = (variant == Thm32Variant::Printed) ? "thm32_printed" : "thm32_corrected";
    return make_instance(name, std::move(params), lhs, RationalPoly(bracket * Rational(1, 4)));
}

IdentityInstance thm33_pair(SequenceCache& cache, long n) {
    require_natural_n(n, "thm33");
    RationalPoly lhs = euler_poly(cache, idx(n)) * Rational(4);
    for (long k = 6; k <= n; k += 6) lhs += euler_poly(cache, idx(n - k)) * (binom(n, k) * 3);

    const LucasParams<RationalPoly> params{
        RationalPoly(std::vector<Rational>{Rational(1), Rational(-2)}),
        RationalPoly(std::vector<Rational>{Rational(1), Rational(-1), Rational(1)}),
    };
    const RationalPoly v = lucas_v(params, static_cast<unsigned long>(n));
    const RationalPoly rhs = x_power(n) + shifted_power(Rational(-1), n) + v * Rational(neg_one_pow(n));
    return make_instance("thm33", with_n(n), lhs, rhs);
}

IdentityInstance eq16_pair(SequenceCache& cache, long n) {
    require_even_from_two(n, "eq16");
    const Rational lhs = 4 * euler_number(cache, idx(n));
    Rational rhs = 2 * (1 + ipow(-3, n / 2));
    for (long k = 6; k <= n; k += 6) rhs -= 3 * binom(n, k) * pow2(k) * euler_number(cache, idx(n - k));
    return make_instance("eq16", with_n(n), lhs, rhs);
}

IdentityInstance lemma_pair(SequenceCache& cache, Lemma which, long n, const Rational& x0, const QuadraticRational& z) {
    const QuadraticRational one = one_like(z);
    const QuadraticRational one_plus_z = one + z;
    const QuadraticRational shifted_x = qr(z.d(), x0) + z;
    QuadraticRational lhs = zero_like(z);
    IdentityParams params = with_n(n);
    params.x = x0;
    params.z = z;

    if (which == Lemma::BernoulliShift) {
        require_positive_n(n, "lemma21");
        for (long k = 0; k < n; ++k) {
            const auto e = static_cast<unsigned long>(n - k);
            const Rational weight = binom(n, k) * bernoulli_poly(cache, idx(k))(x0);
            lhs += (quad_pow(one_plus_z, e) - quad_pow(z, e)) * weight;
        }
        QuadraticRational rhs = quad_pow(shifted_x, static_cast<unsigned long>(n - 1)) * Rational(n);
        return make_instance("lemma21", std::move(params), lhs, std::move(rhs));
    }

    require_natural_n(n, "lemma31");
    for (long k = 0; k <= n; ++k) {
        const auto e = static_cast<unsigned long>(n - k);
        const Rational weight = binom(n, k) * euler_poly(cache, idx(k))(x0);
        lhs += (quad_pow(z, e) + quad_pow(one_plus_z, e)) * weight;
    }
    QuadraticRational rhs = quad_pow(shifted_x, static_cast<unsigned long>(n)) * Rational(2);
    return make_instance("lemma31", std::move(params), lhs, std::move(rhs));
}

// ---------------------------------------------------------------------------
// Solvers

Rational solve_bernoulli_gap6(SequenceCache& cache, long n) {
    require_natural_n(n, "solve_bernoulli_gap6");
    if (n == 1) return Rational(-1, 2);
    if (n % 2 == 1) return Rational(0);

    for (long j = n % 6; j <= n; j += 6) {
        if (cache.find_number(Table::Bernoulli, idx(j))) continue;
        if (j == 0) {
            cache.store_number(Table::Bernoulli, 0, Rational(1));
            continue;
        }
        // C(N,3) B_j = rhs(N) - sum_{k = 3 (6), k >= 9} C(N,k) B_{N-k},  N = j + 3
        const long big = j + 3;
        Rational acc = (big % 6 == 1) ? make_rational(-big, 6) : make_rational(big, 3);
        for (long k = 9; k <= big; k += 6) {
            acc -= binom(big, k) * cache.read_number(Table::Bernoulli, idx(big - k));
            cache.count_mults();
        }
        cache.store_number(Table::Bernoulli, idx(j), Rational(acc / binom(big, 3)));
    }
    return *cache.find_number(Table::Bernoulli, idx(n));
}

Rational solve_euler_gap4(SequenceCache& cache, long n) {
    require_natural_n(n, "solve_euler_gap4");
    if (n % 2 == 1) return Rational(0);

    for (long j = n % 4; j <= n; j += 4) {
        if (cache.find_number(Table::Euler, idx(j))) continue;
        if (j == 0) {
            cache.store_number(Table::Euler, 0, Rational(1));
            continue;
        }
        Rational acc = neg_one_pow(j / 2);
        for (long k = 4; k <= j; k += 4) {
            acc -= binom(j, k) * ipow(-4, k / 4) * cache.read_number(Table::Euler, idx(j - k));
            cache.count_mults();
        }
        cache.store_number(Table::Euler, idx(j), std::move(acc));
    }
    return *cache.find_number(Table::Euler, idx(n));
}

Rational solve_euler_gap6(SequenceCache& cache, long n) {
    require_natural_n(n, "solve_euler_gap6");
    if (n % 2 == 1) throw BadParity("solve_euler_gap6: n must be even, got " + std::to_string(n));

    for (long j = n % 6; j <= n; j += 6) {
        if (cache.find_number(Table::Euler, idx(j))) continue;
        if (j == 0) {
            cache.store_number(Table::Euler, 0, Rational(1));
            continue;
        }
        Rational acc = 2 * (1 + ipow(-3, j / 2));
        for (long k = 6; k <= j; k += 6) {
            acc -= 3 * binom(j, k) * pow2(k) * cache.read_number(Table::Euler, idx(j - k));
            cache.count_mults();
        }
        cache.store_number(Table::Euler, idx(j), Rational(acc / 4));
    }
    return *cache.find_number(Table::Euler, idx(n));
}

} // namespace lacuna
