#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lacuna/exactnum.hpp"

namespace lacuna {

enum class Table : std::size_t { Bernoulli = 0, Euler = 1, BernoulliPoly = 2, EulerPoly = 3 };

struct TouchCount {
    std::uint64_t reads = 0;
    std::uint64_t writes = 0;
};

/// Memo tables for B_n, E_n, B_n(x) and E_n(x).
///
/// Entries are write-once. Reads made by recurrences go through read_*(),
/// which bumps the per-index touch counter; find_*() peeks without counting.
/// Not internally synchronised: confine a cache to one thread.
class SequenceCache {
public:
    /// With odd_shortcuts off, odd-index Bernoulli numbers are computed by
    /// the full recurrence instead of being returned as 0.
    explicit SequenceCache(bool odd_shortcuts = true) : odd_shortcuts_(odd_shortcuts) {}

    bool odd_shortcuts() const noexcept { return odd_shortcuts_; }

    const Rational* find_number(Table t, std::size_t n) const;
    const RationalPoly* find_poly(Table t, std::size_t n) const;

    const Rational& read_number(Table t, std::size_t n);
    const RationalPoly& read_poly(Table t, std::size_t n);

    /// Throws std::logic_error if n is already cached with a different value.
    void store_number(Table t, std::size_t n, Rational value);
    void store_poly(Table t, std::size_t n, RationalPoly value);

    TouchCount counts(Table t, std::size_t n) const;
    /// Indices with at least one recorded read, ascending.
    std::vector<std::size_t> read_indices(Table t) const;
    std::size_t touched(Table t) const { return read_indices(t).size(); }
    std::uint64_t total_reads(Table t) const;
    std::uint64_t total_writes(Table t) const;

    void count_mults(std::uint64_t k = 1) noexcept { mults_ += k; }
    std::uint64_t mults() const noexcept { return mults_; }

private:
    TouchCount& counter(Table t, std::size_t n);

    bool odd_shortcuts_;
    std::vector<std::optional<Rational>> numbers_[2];
    std::vector<std::optional<RationalPoly>> polys_[2];
    std::vector<TouchCount> counts_[4];
    std::uint64_t mults_ = 0;
};

/// B_n from B_0 = 1 and sum_{k<n} C(n,k) B_k = 0, filled bottom-up.
Rational bernoulli_number(SequenceCache& cache, std::size_t n);

/// E_n from E_0 = 1, E_odd = 0 and sum_r C(2n,2r) E_{2r} = 0.
Rational euler_number(SequenceCache& cache, std::size_t n);

/// B_n(x) = sum_k C(n,k) B_k x^{n-k}
RationalPoly bernoulli_poly(SequenceCache& cache, std::size_t n);

/// E_n(x), solving E_n(x) + sum_{r<=n} C(n,r) E_r(x) = 2x^n for the top term.
RationalPoly euler_poly(SequenceCache& cache, std::size_t n);

/// Three classical closed forms of E_n(x): through the Euler numbers, and two
/// through B_{n+1} at halved arguments.
struct EulerPolyForms {
    RationalPoly via_euler_numbers;
    RationalPoly via_bernoulli_half;
    RationalPoly via_bernoulli_shift;
};
EulerPolyForms euler_poly_via_bernoulli(SequenceCache& cache, std::size_t n);

struct EulerNumberForms {
    Rational euler;           // E_n
    Rational scaled_half;     // 2^n E_n(1/2)
    Rational at_zero;         // E_n(0)
    Rational from_bernoulli;  // 2(1 - 2^{n+1}) B_{n+1} / (n+1)
};
EulerNumberForms euler_number_identities(SequenceCache& cache, std::size_t n);

/// (sum_{r<m} B_n(r/m), m^{1-n} B_n). Requires m >= 1.
std::pair<Rational, Rational> raabe_sum(SequenceCache& cache, std::size_t n, std::size_t m);

struct TranslateForms {
    RationalPoly expanded;           // sum_k C(n,k) B_k(x) y^{n-k}
    RationalPoly shifted;            // B_n(x + y)
    RationalPoly forward_difference; // B_n(x + 1) - B_n(x)
    RationalPoly power_term;         // n x^{n-1}
};
TranslateForms bernoulli_translate(SequenceCache& cache, std::size_t n, const Rational& y);

/// p(s*x)
RationalPoly scale_argument(const RationalPoly& p, const Rational& s);

} // namespace lacuna
