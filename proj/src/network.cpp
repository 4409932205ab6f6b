#include "network.hpp"

#include <algorithm>
#include <set>

namespace seqnet {

std::size_t SignNetwork::loop_count() const {
    std::size_t n = 0;
    for (const auto& [pair, w] : edges)
        if (pair.first == pair.second)
            ++n;
    return n;
}

std::uint64_t SignNetwork::total_weight() const {
    std::uint64_t sum = 0;
    for (const auto& [pair, w] : edges)
        sum += w;
    return sum;
}

bool SignNetwork::has_edge(const SignId& from, const SignId& to) const {
    return edges.count({from, to}) != 0;
}

SignNetwork build_network(const Corpus& corpus) {
    SignNetwork net;
    net.nodes = corpus.inventory();
    for (const Sequence& seq : corpus.sequences())
        for (std::size_t t = 0; t + 1 < seq.size(); ++t)
            ++net.edges[{seq.signs[t], seq.signs[t + 1]}];
    return net;
}

double reciprocity(const SignNetwork& net) {
    std::size_t nonloop = 0;
    std::size_t reciprocated = 0;
    for (const auto& [pair, w] : net.edges) {
        if (pair.first == pair.second)
            continue;
        ++nonloop;
        if (net.has_edge(pair.second, pair.first))
            ++reciprocated;
    }
    if (nonloop == 0)
        throw DomainError("reciprocity undefined: network has no non-loop edges");
    return static_cast<double>(reciprocated) / static_cast<double>(nonloop);
}

double connectivity(const SignNetwork& net) {
    const double n = static_cast<double>(net.node_count());
    if (net.node_count() == 0)
        throw DomainError("connectivity undefined for an empty network");
    return static_cast<double>(net.edge_count()) / (n * n);
}

namespace {

std::vector<std::pair<std::uint64_t, double>> ccdf_from_values(
    const std::vector<std::uint64_t>& values) {
    const std::size_t n = values.size();
    std::uint64_t max = 0;
    for (std::uint64_t v : values)
        max = std::max(max, v);
    // tail[v] = #values >= v
    std::vector<std::size_t> at(max + 1, 0);
    for (std::uint64_t v : values)
        ++at[v];
    std::vector<std::pair<std::uint64_t, double>> out;
    out.reserve(max + 1);
    std::size_t ge = n;
    for (std::uint64_t v = 0; v <= max; ++v) {
        out.emplace_back(v, n == 0 ? 0.0 : static_cast<double>(ge) / static_cast<double>(n));
        ge -= at[v];
    }
    return out;
}

} // namespace

std::vector<std::pair<std::uint64_t, double>> degree_ccdf(const SignNetwork& net, Direction dir) {
    std::map<SignId, std::uint64_t> deg;
    for (const SignId& id : net.nodes)
        deg[id] = 0;
    for (const auto& [pair, w] : net.edges)
        ++deg[dir == Direction::Out ? pair.first : pair.second];
    std::vector<std::uint64_t> values;
    values.reserve(deg.size());
    for (const auto& [id, d] : deg)
        values.push_back(d);
    return ccdf_from_values(values);
}

std::vector<std::pair<std::uint64_t, double>> strength_ccdf(const SignNetwork& net, Direction dir) {
    std::map<SignId, std::uint64_t> strength;
    for (const SignId& id : net.nodes)
        strength[id] = 0;
    for (const auto& [pair, w] : net.edges)
        strength[dir == Direction::Out ? pair.first : pair.second] += w;
    std::vector<std::uint64_t> values;
    values.reserve(strength.size());
    for (const auto& [id, s] : strength)
        values.push_back(s);
    return ccdf_from_values(values);
}

namespace {

std::vector<double> top_q_profile_impl(const Corpus& corpus, std::size_t q_max) {
    const SignNetwork net = build_network(corpus);
    const auto ranked = corpus.sign_frequencies();

    std::map<SignId, std::size_t> rank;
    for (std::size_t i = 0; i < ranked.size(); ++i)
        rank[ranked[i].first] = i;

    // edges_within[q] = edges among the q top-ranked signs, built incrementally
    std::map<SignId, std::vector<SignId>> out_nbrs, in_nbrs;
    for (const auto& [pair, w] : net.edges) {
        out_nbrs[pair.first].push_back(pair.second);
        if (pair.first != pair.second)
            in_nbrs[pair.second].push_back(pair.first);
    }

    std::vector<double> connectivity_at(q_max + 1, 0.0);
    std::vector<bool> inside(ranked.size(), false);
    std::size_t edges_within = 0;
    for (std::size_t q = 1; q <= q_max; ++q) {
        const SignId& id = ranked[q - 1].first;
        for (const SignId& nbr : out_nbrs[id]) {
            const std::size_t r = rank[nbr];
            if (r == q - 1 || inside[r])
                ++edges_within;
        }
        for (const SignId& nbr : in_nbrs[id]) {
            const std::size_t r = rank[nbr];
            if (inside[r])
                ++edges_within;
        }
        inside[q - 1] = true;
        connectivity_at[q] =
            static_cast<double>(edges_within) / (static_cast<double>(q) * static_cast<double>(q));
    }
    return connectivity_at;
}

} // namespace

double top_q_connectivity(const Corpus& corpus, std::size_t q) {
    const std::size_t n = corpus.inventory().size();
    if (q < 2 || q > n)
        throw ArgumentError("q must lie in [2, number of distinct signs]");
    return top_q_profile_impl(corpus, q)[q];
}

std::vector<std::pair<std::size_t, double>> top_q_profile(const Corpus& corpus) {
    const std::size_t n = corpus.inventory().size();
    if (n < 2)
        throw ArgumentError("top-q profile needs at least 2 distinct signs");
    const auto prof = top_q_profile_impl(corpus, n);
    std::vector<std::pair<std::size_t, double>> out;
    out.reserve(n - 1);
    for (std::size_t q = 2; q <= n; ++q)
        out.emplace_back(q, prof[q]);
    return out;
}

} // namespace seqnet
