#pragma once

// Command-line front end: compute, verify, bench.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "lacuna/verify.hpp"

namespace lacuna::cli {

enum class BenchTarget { Bernoulli, Euler };

struct BenchRecord {
    std::string method;
    long n = 0;
    std::int64_t micros = 0;
    /// Distinct lower-index entries of the target table that were read.
    std::size_t touched = 0;
    std::uint64_t mults = 0;
};

/// Cold-cache run of every method at every even n in [n_from, n_to] stepping
/// by `step`. Throws std::invalid_argument on an unknown method.
std::vector<BenchRecord> bench(BenchTarget target, long n_from, long n_to, long step,
                               const std::vector<std::string>& methods);

std::string bench_csv(const std::vector<BenchRecord>& records);
std::string bench_json(const std::vector<BenchRecord>& records);

std::string report_json(const Report& report);
std::string report_text(const Report& report);

/// Exit status of a full run: 0 when every gating report passes.
int gate(const std::vector<Report>& reports);

/// args excludes the program name. Returns 0 on success, 1 when a
/// verification fails, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lacuna::cli
