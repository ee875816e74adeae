#pragma once

// Identity registry and verification engine.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "lacuna/lacunary.hpp"
#include "lacuna/seqcore.hpp"

namespace lacuna {

enum class Mode { Symbolic, Points };
enum class Parity { Any, Odd, Even };

std::string to_string(Mode mode);
Mode parse_mode(std::string_view text);

struct ParamDomain {
    long min_n = 0;
    Parity parity = Parity::Any;
    long default_n_to = 100;
    bool uses_m = false;
    long min_m = 1;
    long default_m_to = 8;

    bool admits(long n) const;
    std::string describe() const;
};

/// Caches shared by the evaluators of one verification run. Each solver
/// entry fills its own cache through one gap recurrence only, so its results
/// never come from values computed by another method.
struct VerifyContext {
    SequenceCache main;
    SequenceCache bernoulli_gap6;
    SequenceCache euler_gap4;
    SequenceCache euler_gap6;
};

struct IdentityEntry {
    std::string name;
    std::string statement;
    ParamDomain domain;
    bool symbolic = true;
    bool points = true;
    /// Reported but excluded from the pass/fail gate of a full run.
    bool informational = false;
    std::function<std::vector<IdentityInstance>(VerifyContext&, long n, long m)> evaluate;

    bool supports(Mode mode) const { return mode == Mode::Symbolic ? symbolic : points; }
};

const std::vector<IdentityEntry>& registry();

/// Throws UnknownIdentity.
const IdentityEntry& find_entry(std::string_view name);

/// Fixed, deterministic sample abscissae for points mode.
const std::vector<Rational>& sample_points();

struct RangeSpec {
    std::optional<long> n_from;
    std::optional<long> n_to;
    std::optional<long> m_from;
    std::optional<long> m_to;
};

struct Counterexample {
    IdentityParams params;
    std::optional<Rational> point;
    std::string residual;
    /// (n, m, position within the sweep at that (n, m)); smaller is earlier.
    std::tuple<long, long, std::size_t> order;
};

struct CacheStats {
    std::uint64_t bernoulli_reads = 0;
    std::uint64_t euler_reads = 0;
    std::uint64_t bernoulli_poly_reads = 0;
    std::uint64_t euler_poly_reads = 0;
    std::uint64_t writes = 0;
};

struct Report {
    std::string identity;
    Mode mode = Mode::Symbolic;
    long n_from = 0;
    long n_to = 0;
    std::optional<long> m_from;
    std::optional<long> m_to;
    std::size_t tried = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::optional<Counterexample> first_counterexample;
    std::int64_t elapsed_us = 0;
    CacheStats touches;
    bool informational = false;

    bool pass() const { return failed == 0; }
};

/// Throws UnknownIdentity, or DomainViolation when the range or mode does not
/// fit the entry.
Report verify_identity(std::string_view name, const RangeSpec& range, Mode mode);
Report verify_identity(VerifyContext& ctx, const IdentityEntry& entry, const RangeSpec& range, Mode mode);

/// Every registry entry, sorted by name. Ranges are clamped to each entry's
/// domain; a mode an entry does not support falls back to the one it does.
std::vector<Report> verify_all(const RangeSpec& range, std::optional<Mode> mode);

/// Combines reports for disjoint parameter sets of one identity: counts add,
/// the earliest counterexample wins.
Report merge(Report a, const Report& b);

/// Term-by-term recomputation of an identity's summation side, with its own
/// binomial table and its own B/E tables (no odd-index shortcuts, no shared
/// cache). Throws UnknownIdentity or DomainViolation.
Value oracle_direct(std::string_view name, const IdentityParams& params);

} // namespace lacuna
