#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "network.hpp"
#include "rng.hpp"

using namespace seqnet;

namespace {

Corpus ref4() { return Corpus::parse("A B C\nA B\nB C\nD\n"); }

} // namespace

TEST_CASE("REF4 network: weighted bigram edges, isolated node kept") {
    const SignNetwork net = build_network(ref4());
    CHECK(net.node_count() == 4);
    CHECK(net.edge_count() == 2);
    CHECK(net.edges.at({"A", "B"}) == 2);
    CHECK(net.edges.at({"B", "C"}) == 2);
    CHECK(net.total_weight() == 4);
    CHECK(net.loop_count() == 0);
    CHECK(net.has_edge("A", "B"));
    CHECK_FALSE(net.has_edge("B", "A"));
}

TEST_CASE("repeated sign forms a self-loop") {
    const SignNetwork net = build_network(Corpus::parse("A A"));
    CHECK(net.edge_count() == 1);
    CHECK(net.edges.at({"A", "A"}) == 1);
    CHECK(net.loop_count() == 1);
}

TEST_CASE("edge weights conserve the corpus bigram count") {
    const Corpus c = Corpus::parse("A B C D\nB B\nE\nA C");
    CHECK(build_network(c).total_weight() == c.bigram_count());
}

TEST_CASE("reciprocity") {
    CHECK(reciprocity(build_network(Corpus::parse("A B\nB A"))) == doctest::Approx(1.0));
    CHECK(reciprocity(build_network(ref4())) == doctest::Approx(0.0));
    // loops are excluded from both sides of the ratio
    CHECK(reciprocity(build_network(Corpus::parse("A A\nA B\nB A\nC D"))) ==
          doctest::Approx(2.0 / 3.0));
    CHECK_THROWS_AS(reciprocity(build_network(Corpus::parse("A A"))), DomainError);
    CHECK_THROWS_AS(reciprocity(build_network(Corpus::parse("A\nB"))), DomainError);
}

TEST_CASE("connectivity counts loops in the numerator and N^2 below") {
    CHECK(connectivity(build_network(ref4())) == doctest::Approx(2.0 / 16.0));
    // complete digraph with loops on 3 nodes
    const Corpus complete = Corpus::parse("A A\nA B\nA C\nB A\nB B\nB C\nC A\nC B\nC C");
    CHECK(connectivity(build_network(complete)) == doctest::Approx(1.0));
}

TEST_CASE("degree CCDF uses distinct neighbours and anchors at P_c(0)=1") {
    const auto out_cdf = degree_ccdf(build_network(ref4()), Direction::Out);
    REQUIRE(out_cdf.size() == 2);
    CHECK(out_cdf[0] == std::pair<std::uint64_t, double>{0, 1.0});
    CHECK(out_cdf[1].first == 1);
    CHECK(out_cdf[1].second == doctest::Approx(0.5));

    const auto isolated = degree_ccdf(build_network(Corpus::parse("A\nB")), Direction::In);
    REQUIRE(isolated.size() == 1);
    CHECK(isolated[0] == std::pair<std::uint64_t, double>{0, 1.0});
}

TEST_CASE("self-loop contributes one to both directions") {
    const SignNetwork net = build_network(Corpus::parse("A A"));
    for (Direction dir : {Direction::In, Direction::Out}) {
        const auto cdf = degree_ccdf(net, dir);
        REQUIRE(cdf.size() == 2);
        CHECK(cdf[1].second == doctest::Approx(1.0));
    }
}

TEST_CASE("strength CCDF sums weights") {
    const auto out_cdf = strength_ccdf(build_network(ref4()), Direction::Out);
    REQUIRE(out_cdf.size() == 3);
    CHECK(out_cdf[2].first == 2);
    CHECK(out_cdf[2].second == doctest::Approx(0.5)); // A and B have out-strength 2
    CHECK(out_cdf[0].second == doctest::Approx(1.0));

    // five raw copies of "A B": single edge of weight 5, source out-strength 5
    const auto single =
        strength_ccdf(build_network(Corpus::parse("A B\nA B\nA B\nA B\nA B")), Direction::Out);
    CHECK(single.back().first == 5);
    CHECK(single.back().second == doctest::Approx(0.5));
}

TEST_CASE("in- and out-strength totals both equal the bigram count") {
    const Corpus c = Corpus::parse("A B C\nC A\nB B A");
    const SignNetwork net = build_network(c);
    for (Direction dir : {Direction::In, Direction::Out}) {
        const auto cdf = strength_ccdf(net, dir);
        // recover the total strength from the CCDF by summing node strengths
        std::uint64_t total = 0;
        for (std::size_t s = 1; s < cdf.size(); ++s) {
            const double nodes_ge = cdf[s].second * static_cast<double>(net.node_count());
            total += static_cast<std::uint64_t>(nodes_ge + 0.5); // sum over s of #(>=s)
        }
        CHECK(total == c.bigram_count());
    }
}

TEST_CASE("top-q connectivity follows the frequency ranking") {
    // REF4 ranking: B(3), A(2), C(2), D(1); top-2 = {A, B}, edges: A->B
    CHECK(top_q_connectivity(ref4(), 2) == doctest::Approx(0.25));
    CHECK(top_q_connectivity(ref4(), 4) == doctest::Approx(connectivity(build_network(ref4()))));
    CHECK_THROWS_AS(top_q_connectivity(ref4(), 1), ArgumentError);
    CHECK_THROWS_AS(top_q_connectivity(ref4(), 5), ArgumentError);
}

TEST_CASE("top-q profile matches pointwise evaluation") {
    const Corpus c = Corpus::parse("A B C\nB A\nC C\nA D\nD B C");
    const auto profile = top_q_profile(c);
    REQUIRE(profile.size() == c.inventory().size() - 1);
    for (const auto& [q, value] : profile)
        CHECK(value == doctest::Approx(top_q_connectivity(c, q)));
}

TEST_CASE("R = 1 exactly when every non-loop edge is reciprocated") {
    Rng rng = make_rng(808);
    for (int trial = 0; trial < 60; ++trial) {
        SignNetwork net;
        const std::size_t n = 3 + uniform_below(rng, 6);
        for (std::size_t i = 0; i < n; ++i)
            net.nodes.push_back("v" + std::to_string(i));
        for (const SignId& a : net.nodes)
            for (const SignId& b : net.nodes)
                if (uniform_unit(rng) < 0.3)
                    net.edges[{a, b}] = 1;
        if (net.nonloop_edge_count() == 0)
            continue;
        bool all_reciprocated = true;
        for (const auto& [pair, w] : net.edges)
            if (pair.first != pair.second && !net.has_edge(pair.second, pair.first))
                all_reciprocated = false;
        const double r = reciprocity(net);
        CHECK(r >= 0.0);
        CHECK(r <= 1.0);
        CHECK((r == 1.0) == all_reciprocated);
    }
}

TEST_CASE("complementary CDFs are non-increasing and anchored at 1") {
    Rng rng = make_rng(424);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Sequence> seqs;
        const std::size_t count = 3 + uniform_below(rng, 10);
        for (std::size_t s = 0; s < count; ++s) {
            Sequence seq;
            const std::size_t len = 1 + uniform_below(rng, 6);
            for (std::size_t t = 0; t < len; ++t)
                seq.signs.push_back("g" + std::to_string(uniform_below(rng, 8)));
            seqs.push_back(std::move(seq));
        }
        const SignNetwork net = build_network(Corpus::from_sequences(std::move(seqs)));
        for (Direction dir : {Direction::In, Direction::Out}) {
            for (const auto& cdf : {degree_ccdf(net, dir), strength_ccdf(net, dir)}) {
                REQUIRE(!cdf.empty());
                CHECK(cdf.front().first == 0);
                CHECK(cdf.front().second == doctest::Approx(1.0));
                for (std::size_t i = 1; i < cdf.size(); ++i)
                    CHECK(cdf[i].second <= cdf[i - 1].second);
            }
        }
    }
}

TEST_CASE("build_network is deterministic") {
    const Corpus c = Corpus::parse("X Y\nY Z\nZ X\nX Y Z");
    const SignNetwork a = build_network(c);
    const SignNetwork b = build_network(c);
    CHECK(a.nodes == b.nodes);
    CHECK(a.edges == b.edges);
}
