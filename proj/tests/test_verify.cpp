#include <gtest/gtest.h>

#include <algorithm>

#include "lacuna/cli.hpp"
#include "lacuna/verify.hpp"

using namespace lacuna;

namespace {

RangeSpec range(long from, long to) {
    RangeSpec r;
    r.n_from = from;
    r.n_to = to;
    return r;
}

/// Wraps an entry so that its RHS is perturbed before checking.
IdentityEntry mutated(const IdentityEntry& base, std::function<void(IdentityInstance&)> mutate) {
    IdentityEntry e = base;
    e.evaluate = [inner = base.evaluate, mutate](VerifyContext& ctx, long n, long m) {
        auto out = inner(ctx, n, m);
        for (auto& inst : out) mutate(inst);
        return out;
    };
    return e;
}

Value negate(const Value& v) {
    return std::visit([](const auto& x) -> Value { return std::decay_t<decltype(x)>(-x); }, v);
}

} // namespace

TEST(Registry, ExactNamesSorted) {
    std::vector<std::string> names;
    for (const auto& e : registry()) names.push_back(e.name);
    std::vector<std::string> expected = {
        "eq12", "eq13", "eq14", "eq15", "eq16", "eq21", "raabe", "lemma21", "lemma31", "thm21", "thm22",
        "cor21", "cor22", "cor23", "thm23", "thm24", "cor24", "cor25", "cor26", "cor27", "thm25", "cor28",
        "thm31", "cor31", "cor32", "thm32_printed", "thm32_corrected", "thm33", "solver_b_gap6",
        "solver_e_gap4", "solver_e_gap6"};
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(names, expected);
    for (const auto& e : registry()) {
        EXPECT_FALSE(e.statement.empty()) << e.name;
        EXPECT_EQ(e.informational, e.name == "thm32_printed");
    }
}

TEST(Registry, Errors) {
    EXPECT_THROW(find_entry("thm99"), UnknownIdentity);
    EXPECT_THROW(verify_identity("eq15", range(2, 10), Mode::Symbolic), DomainViolation);
    EXPECT_THROW(verify_identity("eq15", range(4, 4), Mode::Symbolic), DomainViolation);
    EXPECT_THROW(verify_identity("lemma21", range(1, 4), Mode::Symbolic), DomainViolation);
    EXPECT_THROW(verify_identity("lemma21", range(0, 4), Mode::Points), DomainViolation);
    RangeSpec bad_m = range(3, 9);
    bad_m.m_from = 0;
    EXPECT_THROW(verify_identity("thm22", bad_m, Mode::Symbolic), DomainViolation);
    RangeSpec stray_m = range(3, 9);
    stray_m.m_to = 3;
    EXPECT_THROW(verify_identity("eq15", stray_m, Mode::Symbolic), DomainViolation);
    EXPECT_THROW(parse_mode("fuzzy"), std::invalid_argument);
}

TEST(Engine, Eq15Counts) {
    const Report r = verify_identity("eq15", range(3, 101), Mode::Symbolic);
    EXPECT_TRUE(r.pass());
    EXPECT_EQ(r.tried, 50U);
    EXPECT_EQ(r.passed, 50U);
    EXPECT_FALSE(r.first_counterexample);
    EXPECT_GT(r.touches.bernoulli_reads, 0U);
}

TEST(Engine, PrintedCounterexampleIsEarliest) {
    const Report r = verify_identity("thm32_printed", range(0, 4), Mode::Symbolic);
    EXPECT_FALSE(r.pass());
    EXPECT_EQ(r.failed, 5U);
    ASSERT_TRUE(r.first_counterexample);
    EXPECT_EQ(r.first_counterexample->params.n, 0);
    EXPECT_EQ(r.first_counterexample->residual, R"(["-1/2"])");
    EXPECT_TRUE(r.informational);

    const Report p = verify_identity("thm32_printed", range(2, 2), Mode::Points);
    ASSERT_TRUE(p.first_counterexample);
    // first sample point with E_2(x) != 0 is x = -1: residual -(1 + 1)/2
    EXPECT_EQ(to_string(*p.first_counterexample->point), "-1");
    EXPECT_EQ(p.first_counterexample->residual, "-1");
}

TEST(Engine, SymbolicAndPointsAgree) {
    for (const auto& e : registry()) {
        if (!e.symbolic || !e.points) continue;
        RangeSpec r;
        r.n_from = e.domain.min_n;
        r.n_to = std::min<long>(e.domain.min_n + 14, e.domain.default_n_to);
        if (e.domain.uses_m) r.m_to = 3;
        VerifyContext c1;
        VerifyContext c2;
        const Report s = verify_identity(c1, e, r, Mode::Symbolic);
        const Report p = verify_identity(c2, e, r, Mode::Points);
        EXPECT_EQ(s.failed, p.failed) << e.name;
        EXPECT_EQ(s.tried, p.tried) << e.name;
    }
}

TEST(Engine, MergeOfSplitRangesEqualsWhole) {
    const Report whole = verify_identity("thm32_printed", range(0, 9), Mode::Symbolic);
    const Report lo = verify_identity("thm32_printed", range(0, 4), Mode::Symbolic);
    const Report hi = verify_identity("thm32_printed", range(5, 9), Mode::Symbolic);
    for (const Report& m : {merge(lo, hi), merge(hi, lo)}) {
        EXPECT_EQ(m.tried, whole.tried);
        EXPECT_EQ(m.failed, whole.failed);
        EXPECT_EQ(m.n_from, 0);
        EXPECT_EQ(m.n_to, 9);
        ASSERT_TRUE(m.first_counterexample);
        EXPECT_EQ(m.first_counterexample->params.n, 0);
    }
    EXPECT_THROW(merge(lo, verify_identity("eq15", range(3, 5), Mode::Symbolic)), std::invalid_argument);
}

TEST(Engine, VerifyAllGates) {
    RangeSpec r;
    r.n_to = 24;
    const auto reports = verify_all(r, std::nullopt);
    EXPECT_EQ(reports.size(), registry().size());
    EXPECT_EQ(cli::gate(reports), 0);
    for (const auto& rep : reports) {
        if (rep.identity == "thm32_printed") {
            EXPECT_FALSE(rep.pass());
        } else {
            EXPECT_TRUE(rep.pass()) << rep.identity;
            EXPECT_GT(rep.tried, 0U) << rep.identity;
        }
        if (rep.identity.rfind("lemma", 0) == 0) EXPECT_EQ(rep.mode, Mode::Points);
    }
}

TEST(Oracle, DirectMatchesLhs) {
    VerifyContext ctx;
    for (const auto& e : registry()) {
        std::vector<std::string> skip = {"eq12", "eq13", "eq14", "eq21", "raabe", "lemma21", "lemma31"};
        if (std::find(skip.begin(), skip.end(), e.name) != skip.end()) {
            IdentityParams p;
            p.n = std::max<long>(e.domain.min_n, 2);
            EXPECT_THROW(oracle_direct(e.name, p), DomainViolation) << e.name;
            continue;
        }
        const long m_to = e.domain.uses_m ? 4 : 1;
        for (long n = e.domain.min_n; n <= e.domain.min_n + 24; ++n) {
            if (!e.domain.admits(n)) continue;
            for (long m = 1; m <= m_to; ++m) {
                for (const IdentityInstance& inst : e.evaluate(ctx, n, m)) {
                    // eq16 keeps its summation on the right
                    const Value& side = e.name == "eq16" ? inst.rhs : inst.lhs;
                    ASSERT_EQ(oracle_direct(e.name, inst.params), side) << e.name << ' ' << to_string(inst.params);
                }
            }
        }
    }
}

TEST(Mutation, SignFlipsAreDetected) {
    // one flipped sign in a right-hand side must turn a passing run red
    RangeSpec small;
    small.n_to = 20;
    small.m_to = 4;
    for (const auto& e : registry()) {
        if (e.informational) continue;
        const Mode mode = e.symbolic ? Mode::Symbolic : Mode::Points;
        RangeSpec r = small;
        if (!e.domain.uses_m) r.m_to.reset();
        VerifyContext ctx;
        const Report clean = verify_identity(ctx, e, r, mode);
        ASSERT_TRUE(clean.pass()) << e.name;

        VerifyContext ctx_neg;
        const Report neg = verify_identity(ctx_neg, mutated(e, [](IdentityInstance& i) { i.rhs = negate(i.rhs); }), r, mode);
        EXPECT_FALSE(neg.pass()) << e.name;

        // flip the sign of the top coefficient of polynomial right-hand sides
        if (std::holds_alternative<RationalPoly>(e.evaluate(ctx, e.domain.min_n + 2, 1).front().rhs)) {
            VerifyContext ctx_top;
            const Report top = verify_identity(ctx_top, mutated(e, [](IdentityInstance& i) {
                auto& p = std::get<RationalPoly>(i.rhs);
                if (p.is_zero()) return;
                const auto k = static_cast<std::size_t>(p.degree());
                p -= RationalPoly::monomial(Rational(2 * p[k]), k);
            }), r, mode);
            EXPECT_FALSE(top.pass()) << e.name;
        }
    }
}

TEST(Mutation, DeltaTermSignFlip) {
    // thm22 with the delta(m,n) term entering with the opposite sign
    const IdentityEntry& base = find_entry("thm22");
    const IdentityEntry flipped = mutated(base, [](IdentityInstance& i) {
        const Rational n3 = make_rational(i.params.n, 3);
        i.rhs = Rational(std::get<Rational>(i.rhs) - 2 * n3 * *i.rhs_aux);
    });
    RangeSpec r;
    r.n_to = 31;
    r.m_to = 8;
    VerifyContext ctx;
    const Report rep = verify_identity(ctx, flipped, r, Mode::Symbolic);
    EXPECT_EQ(rep.passed, 0U);
    EXPECT_EQ(cli::gate({rep}), 1);
}
