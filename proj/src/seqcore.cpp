#include "lacuna/seqcore.hpp"

#include <stdexcept>

namespace lacuna {

namespace {

std::size_t slot(Table t) { return static_cast<std::size_t>(t); }

std::size_t poly_slot(Table t) {
    if (t == Table::BernoulliPoly) return 0;
    if (t == Table::EulerPoly) return 1;
    throw std::invalid_argument("not a polynomial table");
}

std::size_t number_slot(Table t) {
    if (t == Table::Bernoulli) return 0;
    if (t == Table::Euler) return 1;
    throw std::invalid_argument("not a number table");
}

template <class T>
void grow(std::vector<T>& v, std::size_t n) {
    if (v.size() <= n) v.resize(n + 1);
}

} // namespace

const Rational* SequenceCache::find_number(Table t, std::size_t n) const {
    const auto& v = numbers_[number_slot(t)];
    return (n < v.size() && v[n]) ? &*v[n] : nullptr;
}

const RationalPoly* SequenceCache::find_poly(Table t, std::size_t n) const {
    const auto& v = polys_[poly_slot(t)];
    return (n < v.size() && v[n]) ? &*v[n] : nullptr;
}

TouchCount& SequenceCache::counter(Table t, std::size_t n) {
    auto& v = counts_[slot(t)];
    grow(v, n);
    return v[n];
}

const Rational& SequenceCache::read_number(Table t, std::size_t n) {
    const Rational* p = find_number(t, n);
    if (p == nullptr) throw std::logic_error("read of uncached sequence value at index " + std::to_string(n));
    ++counter(t, n).reads;
    return *p;
}

const RationalPoly& SequenceCache::read_poly(Table t, std::size_t n) {
    const RationalPoly* p = find_poly(t, n);
    if (p == nullptr) throw std::logic_error("read of uncached polynomial at index " + std::to_string(n));
    ++counter(t, n).reads;
    return *p;
}

void SequenceCache::store_number(Table t, std::size_t n, Rational value) {
    auto& v = numbers_[number_slot(t)];
    grow(v, n);
    if (v[n]) {
        if (*v[n] != value) throw std::logic_error("conflicting write at index " + std::to_string(n));
        return;
    }
    v[n] = std::move(value);
    ++counter(t, n).writes;
}

void SequenceCache::store_poly(Table t, std::size_t n, RationalPoly value) {
    auto& v = polys_[poly_slot(t)];
    grow(v, n);
    if (v[n]) {
        if (!(*v[n] == value)) throw std::logic_error("conflicting polynomial write at index " + std::to_string(n));
        return;
    }
    v[n] = std::move(value);
    ++counter(t, n).writes;
}

TouchCount SequenceCache::counts(Table t, std::size_t n) const {
    const auto& v = counts_[slot(t)];
    return n < v.size() ? v[n] : TouchCount{};
}

std::vector<std::size_t> SequenceCache::read_indices(Table t) const {
    std::vector<std::size_t> out;
    const auto& v = counts_[slot(t)];
    for (std::size_t n = 0; n < v.size(); ++n) {
        if (v[n].reads > 0) out.push_back(n);
    }
    return out;
}

std::uint64_t SequenceCache::total_reads(Table t) const {
    std::uint64_t s = 0;
    for (const auto& c : counts_[slot(t)]) s += c.reads;
    return s;
}

std::uint64_t SequenceCache::total_writes(Table t) const {
    std::uint64_t s = 0;
    for (const auto& c : counts_[slot(t)]) s += c.writes;
    return s;
}

// ---------------------------------------------------------------------------

namespace {

// Fills B_0..B_n (odd zeros included when shortcuts are on).
void fill_bernoulli(SequenceCache& cache, std::size_t n) {
    if (cache.find_number(Table::Bernoulli, n)) return;
    cache.store_number(Table::Bernoulli, 0, Rational(1));
    for (std::size_t j = 1; j <= n; ++j) {
        if (cache.find_number(Table::Bernoulli, j)) continue;
        if (cache.odd_shortcuts() && j >= 3 && j % 2 == 1) {
            cache.store_number(Table::Bernoulli, j, Rational(0));
            continue;
        }
        // sum_{k<=j} C(j+1,k) B_k = 0, solved for B_j.
        Rational acc = 0;
        for (std::size_t k = 0; k < j; ++k) {
            const Rational& bk = cache.read_number(Table::Bernoulli, k);
            if (is_zero(bk)) continue;
            acc += Rational(binomial(j + 1, k)) * bk;
            cache.count_mults();
        }
        Rational bj = -acc / Rational(static_cast<unsigned long>(j + 1));
        cache.store_number(Table::Bernoulli, j, std::move(bj));
    }
}

} // namespace

Rational bernoulli_number(SequenceCache& cache, std::size_t n) {
    if (const Rational* hit = cache.find_number(Table::Bernoulli, n)) return *hit;
    if (cache.odd_shortcuts() && n >= 3 && n % 2 == 1) return Rational(0);
    fill_bernoulli(cache, n);
    return *cache.find_number(Table::Bernoulli, n);
}

Rational euler_number(SequenceCache& cache, std::size_t n) {
    if (n % 2 == 1) return Rational(0);
    if (const Rational* hit = cache.find_number(Table::Euler, n)) return *hit;

    cache.store_number(Table::Euler, 0, Rational(1));
    for (std::size_t j = 2; j <= n; j += 2) {
        if (cache.find_number(Table::Euler, j)) continue;
        Rational acc = 0;
        for (std::size_t r = 0; r < j; r += 2) {
            acc += Rational(binomial(j, r)) * cache.read_number(Table::Euler, r);
            cache.count_mults();
        }
        cache.store_number(Table::Euler, j, -acc);
    }
    return *cache.find_number(Table::Euler, n);
}

RationalPoly bernoulli_poly(SequenceCache& cache, std::size_t n) {
    if (const RationalPoly* hit = cache.find_poly(Table::BernoulliPoly, n)) return *hit;
    fill_bernoulli(cache, n);

    std::vector<Rational> coeffs(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        coeffs[n - k] = Rational(binomial(n, k)) * cache.read_number(Table::Bernoulli, k);
    }
    RationalPoly p(std::move(coeffs));
    cache.store_poly(Table::BernoulliPoly, n, p);
    return p;
}

RationalPoly euler_poly(SequenceCache& cache, std::size_t n) {
    if (const RationalPoly* hit = cache.find_poly(Table::EulerPoly, n)) return *hit;

    for (std::size_t j = 0; j <= n; ++j) {
        if (cache.find_poly(Table::EulerPoly, j)) continue;
        // 2 E_j(x) = 2 x^j - sum_{r<j} C(j,r) E_r(x)
        RationalPoly acc = RationalPoly::monomial(Rational(2), j);
        for (std::size_t r = 0; r < j; ++r) {
            acc -= cache.read_poly(Table::EulerPoly, r) * Rational(binomial(j, r));
            cache.count_mults();
        }
        acc *= Rational(1, 2);
        cache.store_poly(Table::EulerPoly, j, std::move(acc));
    }
    return *cache.find_poly(Table::EulerPoly, n);
}

RationalPoly scale_argument(const RationalPoly& p, const Rational& s) {
    std::vector<Rational> out = p.coeffs();
    Rational sk = 1;
    for (auto& c : out) {
        c *= sk;
        sk *= s;
    }
    return RationalPoly(std::move(out));
}

EulerPolyForms euler_poly_via_bernoulli(SequenceCache& cache, std::size_t n) {
    EulerPolyForms out;

    // 2^{-n} sum_r C(n,r) (2x-1)^{n-r} E_r
    const RationalPoly two_x_minus_one(std::vector<Rational>{Rational(-1), Rational(2)});
    RationalPoly acc;
    RationalPoly lin_pow = RationalPoly::constant(Rational(1));
    for (std::size_t j = 0; j <= n; ++j) {
        // j = n - r
        const std::size_t r = n - j;
        const Rational er = euler_number(cache, r);
        if (!is_zero(er)) acc += lin_pow * (Rational(binomial(n, r)) * er);
        lin_pow *= two_x_minus_one;
    }
    out.via_euler_numbers = acc * power(Rational(2), -static_cast<long>(n));

    const RationalPoly b_next = bernoulli_poly(cache, n + 1);
    const RationalPoly b_half = scale_argument(b_next, Rational(1, 2));
    const Rational inv = Rational(1) / Rational(static_cast<unsigned long>(n + 1));

    // 2/(n+1) (B_{n+1}(x) - 2^{n+1} B_{n+1}(x/2))
    out.via_bernoulli_half = (b_next - b_half * power(Rational(2), static_cast<long>(n + 1))) * (Rational(2) * inv);

    // 2^{n+1}/(n+1) (B_{n+1}((x+1)/2) - B_{n+1}(x/2))
    const RationalPoly b_shift_half = scale_argument(poly_shift(b_next, Rational(1, 2)), Rational(1, 2));
    out.via_bernoulli_shift = (b_shift_half - b_half) * (power(Rational(2), static_cast<long>(n + 1)) * inv);
    return out;
}

EulerNumberForms euler_number_identities(SequenceCache& cache, std::size_t n) {
    const RationalPoly en = euler_poly(cache, n);
    const long ln = static_cast<long>(n);
    EulerNumberForms out{
        euler_number(cache, n),
        power(Rational(2), ln) * en(Rational(1, 2)),
        en(Rational(0)),
        Rational(0),
    };
    out.from_bernoulli = Rational(2) * (Rational(1) - power(Rational(2), ln + 1)) * bernoulli_number(cache, n + 1) /
                         Rational(static_cast<unsigned long>(n + 1));
    return out;
}

std::pair<Rational, Rational> raabe_sum(SequenceCache& cache, std::size_t n, std::size_t m) {
    if (m == 0) throw std::invalid_argument("raabe_sum: m must be positive");
    const RationalPoly bn = bernoulli_poly(cache, n);
    Rational sum = 0;
    for (std::size_t r = 0; r < m; ++r) sum += bn(make_rational(static_cast<long>(r), static_cast<long>(m)));
    Rational scaled = power(Rational(static_cast<unsigned long>(m)), 1 - static_cast<long>(n)) * bernoulli_number(cache, n);
    return {sum, scaled};
}

TranslateForms bernoulli_translate(SequenceCache& cache, std::size_t n, const Rational& y) {
    TranslateForms out;
    for (std::size_t k = 0; k <= n; ++k) {
        out.expanded += bernoulli_poly(cache, k) * (Rational(binomial(n, k)) * power(y, static_cast<long>(n - k)));
    }
    const RationalPoly bn = bernoulli_poly(cache, n);
    out.shifted = poly_shift(bn, y);
    out.forward_difference = poly_shift(bn, Rational(1)) - bn;
    if (n > 0) out.power_term = RationalPoly::monomial(Rational(static_cast<unsigned long>(n)), n - 1);
    return out;
}

} // namespace lacuna
