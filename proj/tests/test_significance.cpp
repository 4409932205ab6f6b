#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "enumeration_oracle.hpp"
#include "significance.hpp"

#include <cmath>
#include <limits>
#include <tuple>

using namespace seqnet;

namespace {

ZScoreTable table_of(const std::string& text, std::uint64_t seed, std::size_t realizations,
                     bool include_absent = false, unsigned threads = 1) {
    const ShufflePlan plan{seed, realizations, threads};
    return ZScoreTable::compute(Corpus::parse(text), plan, include_absent);
}

} // namespace

TEST_CASE("single two-sign sequence gives z = +1 for its observed order") {
    const ZScoreTable table = table_of("A B", 11, 10000);
    const ZScoreRow* row = table.find("A", "B");
    REQUIRE(row);
    CHECK(row->count == 1);
    CHECK(table.p_emp(*row) == doctest::Approx(1.0));
    // null: count is Bernoulli(1/2); mean 1/2, population std 1/2 -> z = +1
    CHECK(row->count_mean == doctest::Approx(0.5).epsilon(0.03));
    CHECK(row->z == doctest::Approx(1.0).epsilon(0.05));
    CHECK_FALSE(row->infinite);
}

TEST_CASE("pair absent empirically but possible under shuffle has negative z") {
    // (A, B) never adjacent in the data, but half of the shuffles create it
    const ZScoreTable table = table_of("A C B\nB C A", 13, 4000, /*include_absent=*/true);
    const ZScoreRow* row = table.find("A", "B");
    REQUIRE(row);
    CHECK(row->count == 0);
    CHECK(row->count_mean > 0.0);
    CHECK(row->z < 0.0);
}

TEST_CASE("absent pairs are excluded unless requested") {
    const ZScoreTable plain = table_of("A C B\nB C A", 13, 500);
    CHECK(plain.find("A", "B") == nullptr);
    const ZScoreTable with_absent = table_of("A C B\nB C A", 13, 500, true);
    CHECK(with_absent.find("A", "B") != nullptr);
}

TEST_CASE("constant pairs under the null get z = 0, not an infinite flag") {
    // "A A" has one arrangement class: count(A,A) = 1 in every realization
    const ZScoreTable table = table_of("A A", 3, 100);
    const ZScoreRow* row = table.find("A", "A");
    REQUIRE(row);
    CHECK(row->count_std == 0.0);
    CHECK(row->z == 0.0);
    CHECK_FALSE(row->infinite);
}

TEST_CASE("empirical pair never produced by a small ensemble is flagged +inf") {
    // (A, E) adjacency probability per realization is 1/5; with seed 5 and
    // only 2 realizations it does not occur, which is the sigma = 0 case
    const std::string text = "A B C D E";
    bool found_inf = false;
    for (std::uint64_t seed = 1; seed < 50 && !found_inf; ++seed) {
        const ZScoreTable table = table_of(text, seed, 2);
        for (const ZScoreRow& row : table.rows())
            if (row.infinite) {
                found_inf = true;
                CHECK(row.z == std::numeric_limits<double>::infinity());
                CHECK(row.count >= 1);
            }
    }
    CHECK(found_inf);
}

TEST_CASE("bigram-free corpora and tiny plans are rejected") {
    const ShufflePlan plan{1, 100, 1};
    CHECK_THROWS_AS(ZScoreTable::compute(Corpus::parse("A\nB"), plan), DomainError);
    const ShufflePlan tiny{1, 1, 1};
    CHECK_THROWS_AS(ZScoreTable::compute(Corpus::parse("A B"), tiny), ArgumentError);
}

TEST_CASE("Monte Carlo matches exhaustive enumeration within 3 standard errors") {
    const std::string text = "A B C A\nB C\nC C B";
    const Corpus corpus = Corpus::parse(text);
    const std::size_t R = 20000;
    const ZScoreTable table = table_of(text, 271828, R, true, 2);
    const auto exact = oracle::pair_null_moments(corpus);
    REQUIRE(!exact.empty());
    for (const auto& [pair, moments] : exact) {
        const ZScoreRow* row = table.find(pair.first, pair.second);
        const double mc_mean = row ? row->count_mean : 0.0;
        const double mc_var = row ? row->count_std * row->count_std : 0.0;
        CAPTURE(pair.first);
        CAPTURE(pair.second);
        CHECK(std::abs(mc_mean - moments.mean) <= 3.0 * oracle::mean_se(moments, R) + 1e-12);
        CHECK(std::abs(mc_var - moments.var) <= 3.0 * oracle::var_se(moments, R) + 1e-12);
    }
}

TEST_CASE("tables are bit-identical across runs and thread counts") {
    const std::string text = "A B C D\nD C B A\nA A B\nE F";
    const ZScoreTable one = table_of(text, 55, 300, false, 1);
    const ZScoreTable four = table_of(text, 55, 300, false, 4);
    REQUIRE(one.rows().size() == four.rows().size());
    for (std::size_t i = 0; i < one.rows().size(); ++i) {
        CHECK(one.rows()[i].first == four.rows()[i].first);
        CHECK(one.rows()[i].second == four.rows()[i].second);
        CHECK(one.rows()[i].count == four.rows()[i].count);
        CHECK(one.rows()[i].count_mean == four.rows()[i].count_mean);
        CHECK(one.rows()[i].count_std == four.rows()[i].count_std);
        CHECK(one.rows()[i].z == four.rows()[i].z);
    }
}

TEST_CASE("rows sort by z descending with +inf first and stable pair order") {
    const ZScoreTable table = table_of("A B C D\nB A D C\nA A", 9, 50, true);
    const auto& rows = table.rows();
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const bool ordered =
            rows[i - 1].z > rows[i].z ||
            (rows[i - 1].z == rows[i].z &&
             std::tie(rows[i - 1].first, rows[i - 1].second) <=
                 std::tie(rows[i].first, rows[i].second));
        CHECK(ordered);
    }
}

TEST_CASE("z-score CCDF covers finite rows and reports flags separately") {
    const ZScoreTable table = table_of("A B C\nC B A\nB B", 17, 400, true);
    const ZScoreCcdf cdf = zscore_ccdf(table);
    std::size_t finite = 0;
    for (const ZScoreRow& row : table.rows())
        if (!row.infinite)
            ++finite;
    CHECK(cdf.finite_rows == finite);
    REQUIRE(!cdf.points.empty());
    CHECK(cdf.points.front().second == doctest::Approx(1.0));
    for (std::size_t i = 1; i < cdf.points.size(); ++i) {
        CHECK(cdf.points[i].first > cdf.points[i - 1].first);
        CHECK(cdf.points[i].second <= cdf.points[i - 1].second);
    }
}

TEST_CASE("simple CCDF fractions: {1,2,3} has P_c(2) = 2/3") {
    // build a table whose finite z values are exactly three distinct numbers
    // via a hand-made corpus is brittle; instead check the fraction rule on
    // whatever distinct values the table produced
    const ZScoreTable table = table_of("A B\nC D\nE F\nA C", 23, 200);
    const ZScoreCcdf cdf = zscore_ccdf(table);
    for (const auto& [z, pc] : cdf.points) {
        std::size_t ge = 0;
        for (const ZScoreRow& row : table.rows())
            if (!row.infinite && row.z >= z)
                ++ge;
        CHECK(pc == doctest::Approx(static_cast<double>(ge) / static_cast<double>(cdf.finite_rows)));
    }
}

TEST_CASE("significant network: thresholding, monotonicity, empirical subset") {
    const std::string text = "A B C\nA B\nB C\nA B C D\nD A";
    const Corpus corpus = Corpus::parse(text);
    const ZScoreTable table = table_of(text, 77, 2000, true);
    const SignNetwork empirical = build_network(corpus);

    const SignNetwork loose = significant_network(table, -100.0);
    const SignNetwork tight = significant_network(table, 1.0);
    const SignNetwork empty = significant_network(table, 1e9);

    CHECK(empty.edge_count() == 0);
    CHECK(tight.edge_count() <= loose.edge_count());
    for (const auto& [pair, w] : loose.edges) {
        CHECK(empirical.edges.count(pair) == 1); // significant edges are empirical edges
        CHECK(w == empirical.edges.at(pair));
    }
    for (const auto& [pair, w] : tight.edges)
        CHECK(loose.edges.count(pair) == 1); // monotone in the threshold

    CHECK_THROWS_AS(significant_network(table, std::numeric_limits<double>::infinity()),
                    ArgumentError);
}

TEST_CASE("weak components ignore direction and sort deterministically") {
    SignNetwork net;
    net.nodes = {"A", "B", "C", "D", "E"};
    net.edges[{"A", "B"}] = 9;
    net.edges[{"B", "C"}] = 9;
    net.edges[{"D", "E"}] = 9;
    const auto components = weak_components(net);
    REQUIRE(components.size() == 2);
    CHECK(components[0] == std::vector<SignId>{"A", "B", "C"});
    CHECK(components[1] == std::vector<SignId>{"D", "E"});
}
