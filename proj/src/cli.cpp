#include "lacuna/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include "lacuna/lacunary.hpp"
#include "lacuna/lucas.hpp"
#include "lacuna/seqcore.hpp"

namespace lacuna::cli {

namespace {

using nlohmann::json;

std::size_t idx(long n) { return static_cast<std::size_t>(n); }

json params_json(const IdentityParams& p) {
    json j = {{"n", p.n}};
    if (p.m) j["m"] = *p.m;
    if (p.x) j["x"] = to_string(*p.x);
    if (p.y) j["y"] = to_string(*p.y);
    if (p.z) j["z"] = to_string(*p.z);
    if (p.variant) j["variant"] = *p.variant;
    return j;
}

json residual_json(const std::string& text) {
    if (!text.empty() && text.front() == '[') return json::parse(text);
    return text;
}

struct BenchMethod {
    std::string name;
    Table table;
    Rational (*compute)(SequenceCache&, long);
};

Rational classic_bernoulli(SequenceCache& c, long n) { return bernoulli_number(c, idx(n)); }
Rational classic_euler(SequenceCache& c, long n) { return euler_number(c, idx(n)); }

BenchMethod bench_method(BenchTarget target, const std::string& name) {
    if (target == BenchTarget::Bernoulli) {
        if (name == "classic") return {name, Table::Bernoulli, classic_bernoulli};
        if (name == "gap6") return {name, Table::Bernoulli, solve_bernoulli_gap6};
    } else {
        if (name == "classic") return {name, Table::Euler, classic_euler};
        if (name == "gap4") return {name, Table::Euler, solve_euler_gap4};
        if (name == "gap6") return {name, Table::Euler, solve_euler_gap6};
    }
    throw std::invalid_argument("unknown method '" + name + "' for this target");
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

// ---------------------------------------------------------------------------

struct ComputeArgs {
    std::string target;
    long n = -1;
    std::string method;
    std::string kind = "u";
    std::string b;
    std::string c;
};

std::string run_compute(const ComputeArgs& a) {
    if (a.n < 0) throw BadN("--n must be >= 0");
    SequenceCache cache;
    const std::string& method = a.method;
    if (a.target == "bernoulli") {
        if (method.empty() || method == "classic") return to_string(bernoulli_number(cache, idx(a.n)));
        if (method == "gap6") return to_string(solve_bernoulli_gap6(cache, a.n));
    } else if (a.target == "euler") {
        if (method.empty() || method == "classic") return to_string(euler_number(cache, idx(a.n)));
        if (method == "gap4") return to_string(solve_euler_gap4(cache, a.n));
        if (method == "gap6") return to_string(solve_euler_gap6(cache, a.n));
    } else if (a.target == "bernoulli-poly") {
        if (method.empty() || method == "classic") return to_string(bernoulli_poly(cache, idx(a.n)));
    } else if (a.target == "euler-poly") {
        if (method.empty() || method == "classic") return to_string(euler_poly(cache, idx(a.n)));
    } else if (a.target == "lucas") {
        if (a.b.empty() || a.c.empty()) throw std::invalid_argument("lucas needs --b and --c");
        const LucasParams<Rational> p{parse_rational(a.b), parse_rational(a.c)};
        const LucasKind kind = a.kind == "v" ? LucasKind::V : LucasKind::U;
        const auto n = static_cast<unsigned long>(a.n);
        if (method.empty() || method == "recurrence") return to_string(kind == LucasKind::V ? lucas_v(p, n) : lucas_u(p, n));
        if (method == "closed") return to_string(lucas_closed(p, n, kind));
    }
    throw std::invalid_argument("unknown method '" + method + "' for " + a.target);
}

struct VerifyArgs {
    std::string identity;
    bool all = false;
    RangeSpec range;
    std::string mode;
    bool json = false;
};

int run_verify(const VerifyArgs& a, std::ostream& out) {
    std::optional<Mode> mode;
    if (!a.mode.empty()) mode = parse_mode(a.mode);

    std::vector<Report> reports;
    if (a.all) {
        reports = verify_all(a.range, mode);
    } else {
        const IdentityEntry& entry = find_entry(a.identity);
        Mode m = mode.value_or(entry.symbolic ? Mode::Symbolic : Mode::Points);
        VerifyContext ctx;
        reports.push_back(verify_identity(ctx, entry, a.range, m));
    }

    if (a.json) {
        json arr = json::array();
        for (const Report& r : reports) arr.push_back(json::parse(report_json(r)));
        out << (a.all ? arr.dump(2) : arr.front().dump(2)) << '\n';
    } else {
        for (const Report& r : reports) out << report_text(r);
    }
    if (!a.all) return reports.front().pass() ? 0 : 1;
    return gate(reports);
}

struct BenchArgs {
    std::string target = "bernoulli";
    long n_from = 2;
    long n_to = 60;
    long step = 2;
    std::string methods;
    std::string format = "csv";
};

std::string run_bench(const BenchArgs& a) {
    const BenchTarget target = a.target == "euler" ? BenchTarget::Euler : BenchTarget::Bernoulli;
    std::string methods = a.methods;
    if (methods.empty()) methods = target == BenchTarget::Euler ? "classic,gap4,gap6" : "classic,gap6";
    const auto records = bench(target, a.n_from, a.n_to, a.step, split_list(methods));
    return a.format == "json" ? bench_json(records) : bench_csv(records);
}

} // namespace

// ---------------------------------------------------------------------------

std::vector<BenchRecord> bench(BenchTarget target, long n_from, long n_to, long step,
                               const std::vector<std::string>& methods) {
    if (step < 1) throw std::invalid_argument("--step must be >= 1");
    if (n_from < 0) throw std::invalid_argument("--n-from must be >= 0");
    std::vector<BenchMethod> resolved;
    for (const auto& name : methods) resolved.push_back(bench_method(target, name));
    if (resolved.empty()) throw std::invalid_argument("no methods given");

    std::vector<BenchRecord> out;
    for (long n = n_from; n <= n_to; n += step) {
        if (n % 2 != 0) continue;
        for (const BenchMethod& m : resolved) {
            SequenceCache cache;
            const auto start = std::chrono::steady_clock::now();
            const Rational value = m.compute(cache, n);
            const auto stop = std::chrono::steady_clock::now();
            (void)value;
            BenchRecord rec;
            rec.method = m.name;
            rec.n = n;
            rec.micros = std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
            rec.touched = cache.touched(m.table);
            rec.mults = cache.mults();
            out.push_back(std::move(rec));
        }
    }
    return out;
}

std::string bench_csv(const std::vector<BenchRecord>& records) {
    std::string out = "method,n,micros,touched,mults\n";
    for (const auto& r : records) {
        out += r.method + ',' + std::to_string(r.n) + ',' + std::to_string(r.micros) + ',' + std::to_string(r.touched) +
               ',' + std::to_string(r.mults) + '\n';
    }
    return out;
}

std::string bench_json(const std::vector<BenchRecord>& records) {
    json arr = json::array();
    for (const auto& r : records) {
        arr.push_back({{"method", r.method}, {"n", r.n}, {"micros", r.micros}, {"touched", r.touched}, {"mults", r.mults}});
    }
    return arr.dump(2) + '\n';
}

std::string report_json(const Report& r) {
    json params = {{"n_from", r.n_from}, {"n_to", r.n_to}, {"mode", to_string(r.mode)}};
    if (r.m_from) params["m_from"] = *r.m_from;
    if (r.m_to) params["m_to"] = *r.m_to;

    json ce = nullptr;
    if (r.first_counterexample) {
        const Counterexample& c = *r.first_counterexample;
        ce = {{"params", params_json(c.params)}, {"residual", residual_json(c.residual)}};
        ce["point"] = c.point ? json(to_string(*c.point)) : json(nullptr);
    }
    json j = {
        {"identity", r.identity},
        {"params", params},
        {"pass", r.pass()},
        {"counterexample", ce},
        {"elapsed_us", r.elapsed_us},
        {"tried", r.tried},
        {"passed", r.passed},
        {"failed", r.failed},
        {"informational", r.informational},
        {"touches",
         {{"bernoulli", r.touches.bernoulli_reads},
          {"euler", r.touches.euler_reads},
          {"bernoulli_poly", r.touches.bernoulli_poly_reads},
          {"euler_poly", r.touches.euler_poly_reads},
          {"writes", r.touches.writes}}},
    };
    return j.dump();
}

std::string report_text(const Report& r) {
    std::ostringstream os;
    os << r.identity << ' ' << to_string(r.mode) << " n=" << r.n_from << ".." << r.n_to;
    if (r.m_from && r.m_to) os << " m=" << *r.m_from << ".." << *r.m_to;
    os << " tried=" << r.tried << " failed=" << r.failed << ' ' << (r.pass() ? "PASS" : "FAIL");
    if (r.informational) os << " (informational)";
    os << ' ' << r.elapsed_us << "us\n";
    if (r.first_counterexample) {
        const Counterexample& c = *r.first_counterexample;
        os << "  counterexample: " << to_string(c.params);
        if (c.point) os << " at x=" << to_string(*c.point);
        os << " residual=" << c.residual << '\n';
    }
    return os.str();
}

int gate(const std::vector<Report>& reports) {
    const bool ok =
        std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.informational || r.pass(); });
    return ok ? 0 : 1;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Bernoulli/Euler numbers, lacunary recurrences and identity checks", "lacuna"};
    app.require_subcommand(1);

    ComputeArgs ca;
    auto* compute = app.add_subcommand("compute", "Compute one value exactly");
    compute->add_option("target", ca.target, "bernoulli | euler | bernoulli-poly | euler-poly | lucas")
        ->required()
        ->check(CLI::IsMember({"bernoulli", "euler", "bernoulli-poly", "euler-poly", "lucas"}));
    compute->add_option("--n", ca.n, "Index")->required();
    compute->add_option("--method", ca.method, "classic | gap4 | gap6 | recurrence | closed");
    compute->add_option("--kind", ca.kind, "Lucas kind")->check(CLI::IsMember({"u", "v"}));
    compute->add_option("--b", ca.b, "Lucas b (rational)");
    compute->add_option("--c", ca.c, "Lucas c (rational)");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Verify identities over a parameter range");
    auto* id_opt = verify->add_option("--identity", va.identity, "Registry name");
    auto* all_flag = verify->add_flag("--all", va.all, "Every registry entry");
    id_opt->excludes(all_flag);
    verify->add_option("--n-from", va.range.n_from);
    verify->add_option("--n-to", va.range.n_to);
    verify->add_option("--m-from", va.range.m_from);
    verify->add_option("--m-to", va.range.m_to);
    verify->add_option("--mode", va.mode)->check(CLI::IsMember({"symbolic", "points"}));
    verify->add_flag("--json", va.json);

    BenchArgs ba;
    auto* bench_cmd = app.add_subcommand("bench", "Cold-cache timing and touch counts");
    bench_cmd->add_option("--target", ba.target)->check(CLI::IsMember({"bernoulli", "euler"}));
    bench_cmd->add_option("--n-from", ba.n_from);
    bench_cmd->add_option("--n-to", ba.n_to);
    bench_cmd->add_option("--step", ba.step);
    bench_cmd->add_option("--methods", ba.methods, "Comma-separated");
    bench_cmd->add_option("--format", ba.format)->check(CLI::IsMember({"csv", "json"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (verify->parsed() && !va.all && va.identity.empty())
            throw CLI::RequiredError("verify needs --identity or --all");
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (compute->parsed()) {
            out << run_compute(ca) << '\n';
            return 0;
        }
        if (verify->parsed()) return run_verify(va, out);
        out << run_bench(ba);
        return 0;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace lacuna::cli
