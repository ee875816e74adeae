#include <gtest/gtest.h>

#include <json.hpp>

#include <sstream>

#include "lacuna/cli.hpp"

using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = lacuna::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(cell);
        rows.push_back(row);
    }
    return rows;
}

} // namespace

TEST(Compute, Examples) {
    EXPECT_EQ(run({"compute", "bernoulli", "--n", "10", "--method", "gap6"}).out, "5/66\n");
    EXPECT_EQ(run({"compute", "bernoulli", "--n", "10"}).out, "5/66\n");
    EXPECT_EQ(run({"compute", "euler-poly", "--n", "2"}).out, "[\"0\",\"-1\",\"1\"]\n");
    EXPECT_EQ(run({"compute", "lucas", "--kind", "v", "--b", "1", "--c", "7", "--n", "4"}).out, "71\n");
    EXPECT_EQ(run({"compute", "lucas", "--kind", "u", "--b", "2", "--c", "5", "--n", "3", "--method", "closed"}).out,
              "-1\n");
    EXPECT_EQ(run({"compute", "euler", "--n", "10", "--method", "gap4"}).out, "-50521\n");
    EXPECT_EQ(run({"compute", "euler", "--n", "8", "--method", "gap6"}).out, "1385\n");
    EXPECT_EQ(run({"compute", "bernoulli-poly", "--n", "1"}).out, "[\"-1/2\",\"1\"]\n");
    EXPECT_EQ(run({"compute", "lucas", "--kind", "v", "--b", "1/2", "--c", "-3/4", "--n", "2"}).out, "7/4\n");
}

TEST(Compute, UsageErrors) {
    EXPECT_EQ(run({"compute", "bernoulli", "--n", "4", "--method", "gap4"}).code, 2);
    EXPECT_EQ(run({"compute", "euler", "--n", "5", "--method", "gap6"}).code, 2);
    EXPECT_EQ(run({"compute", "euler-poly", "--n", "3", "--method", "gap6"}).code, 2);
    EXPECT_EQ(run({"compute", "lucas", "--b", "1/0", "--c", "7", "--n", "4"}).code, 2);
    EXPECT_EQ(run({"compute", "lucas", "--b", "x", "--c", "7", "--n", "4"}).code, 2);
    EXPECT_EQ(run({"compute", "lucas", "--b", "1", "--c", "7", "--n", "4", "--method", "closed", "--kind", "w"}).code, 2);
    EXPECT_EQ(run({"compute", "lucas", "--b", "2", "--c", "1", "--n", "4", "--method", "closed"}).code, 2);
    EXPECT_EQ(run({"compute", "zeta", "--n", "4"}).code, 2);
    EXPECT_EQ(run({"compute", "bernoulli"}).code, 2);
    EXPECT_EQ(run({"compute", "bernoulli", "--n", "-2"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    const Result r = run({"frobnicate"});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(r.out.empty());
    EXPECT_FALSE(r.err.empty());
}

TEST(Compute, RoundTripsCanonicalText) {
    for (int n = 0; n <= 30; n += 2) {
        const Result r = run({"compute", "bernoulli", "--n", std::to_string(n)});
        const std::string text = r.out.substr(0, r.out.size() - 1);
        EXPECT_EQ(lacuna::to_string(lacuna::parse_rational(text)), text);
    }
}

TEST(Verify, ExitCodes) {
    EXPECT_EQ(run({"verify", "--identity", "eq15", "--n-from", "3", "--n-to", "101"}).code, 0);
    const Result printed = run({"verify", "--identity", "thm32_printed", "--n-from", "0", "--n-to", "4"});
    EXPECT_EQ(printed.code, 1);
    EXPECT_NE(printed.out.find("counterexample: n=0"), std::string::npos);
    EXPECT_EQ(run({"verify", "--identity", "nope"}).code, 2);
    EXPECT_EQ(run({"verify"}).code, 2);
    EXPECT_EQ(run({"verify", "--identity", "eq15", "--all"}).code, 2);
    EXPECT_EQ(run({"verify", "--identity", "eq15", "--n-from", "1"}).code, 2);
    EXPECT_EQ(run({"verify", "--identity", "eq15", "--mode", "sloppy"}).code, 2);
    EXPECT_EQ(run({"verify", "--identity", "lemma21", "--mode", "symbolic"}).code, 2);
    EXPECT_EQ(run({"verify", "--identity", "lemma21", "--n-to", "6"}).code, 0);
}

TEST(Verify, JsonSchema) {
    const Result one = run({"verify", "--identity", "thm32_printed", "--n-from", "0", "--n-to", "4", "--json"});
    const json j = json::parse(one.out);
    EXPECT_EQ(j["identity"], "thm32_printed");
    EXPECT_FALSE(j["pass"].get<bool>());
    EXPECT_TRUE(j["params"].is_object());
    EXPECT_TRUE(j["elapsed_us"].is_number_integer());
    EXPECT_EQ(j["counterexample"]["params"]["n"], 0);
    EXPECT_EQ(j["counterexample"]["residual"], json::array({"-1/2"}));

    const Result all = run({"verify", "--all", "--n-to", "20", "--json"});
    EXPECT_EQ(all.code, 0);
    const json arr = json::parse(all.out);
    ASSERT_TRUE(arr.is_array());
    EXPECT_EQ(arr.size(), lacuna::registry().size());
    std::string prev;
    for (const auto& r : arr) {
        for (const char* key : {"identity", "params", "pass", "counterexample", "elapsed_us"})
            EXPECT_TRUE(r.contains(key)) << key;
        const std::string name = r["identity"];
        EXPECT_LT(prev, name);
        prev = name;
        if (name != "thm32_printed") EXPECT_TRUE(r["counterexample"].is_null()) << name;
    }
}

TEST(Bench, HeaderOnlyForEmptyRange) {
    const Result r = run({"bench", "--target", "bernoulli", "--n-to", "0"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "method,n,micros,touched,mults\n");
}

TEST(Bench, TouchedCountInvariants) {
    const Result r = run({"bench", "--target", "bernoulli", "--n-to", "120", "--methods", "classic,gap6", "--format", "csv"});
    ASSERT_EQ(r.code, 0);
    const auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.front(), (std::vector<std::string>{"method", "n", "micros", "touched", "mults"}));
    std::size_t gap_rows = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        ASSERT_EQ(rows[i].size(), 5U);
        const long n = std::stol(rows[i][1]);
        const long touched = std::stol(rows[i][3]);
        if (rows[i][0] == "gap6") {
            ++gap_rows;
            EXPECT_LE(6 * touched, n + 6) << n;
            EXPECT_GE(6 * (touched + 1), n) << n;
        } else {
            EXPECT_GE(touched, n - 1) << n;
            EXPECT_LE(touched, n + 1) << n;
        }
    }
    EXPECT_EQ(gap_rows, 60U);
}

TEST(Bench, EulerMethodsAndJson) {
    const Result r = run({"bench", "--target", "euler", "--n-to", "24", "--methods", "classic,gap4,gap6", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const json arr = json::parse(r.out);
    EXPECT_EQ(arr.size(), 36U);
    for (const auto& rec : arr) {
        const long n = rec["n"];
        const long touched = rec["touched"];
        if (rec["method"] == "gap6") EXPECT_EQ(touched, n / 6);
        if (rec["method"] == "gap4") EXPECT_EQ(touched, n / 4);
    }
    EXPECT_EQ(run({"bench", "--target", "euler", "--methods", "gap5"}).code, 2);
    EXPECT_EQ(run({"bench", "--target", "zeta"}).code, 2);
    EXPECT_EQ(run({"bench", "--step", "0"}).code, 2);
}
