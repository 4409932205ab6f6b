#include "cores.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace seqnet {

namespace {

struct IndexedGraph {
    std::vector<SignId> nodes;
    // adjacency as (neighbour, weight); loops stored once under both lists
    std::vector<std::vector<std::pair<std::int32_t, std::uint64_t>>> out, in;
};

IndexedGraph index_graph(const SignNetwork& net) {
    IndexedGraph g;
    g.nodes = net.nodes;
    std::map<SignId, std::int32_t> lookup;
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        lookup[g.nodes[i]] = static_cast<std::int32_t>(i);
    g.out.resize(g.nodes.size());
    g.in.resize(g.nodes.size());
    for (const auto& [pair, w] : net.edges) {
        const std::int32_t a = lookup.at(pair.first);
        const std::int32_t b = lookup.at(pair.second);
        g.out[a].emplace_back(b, w);
        g.in[b].emplace_back(a, w);
    }
    return g;
}

} // namespace

std::set<SignId> core_set(const SignNetwork& net, std::uint64_t order, Direction dir,
                          CoreMode mode) {
    const IndexedGraph g = index_graph(net);
    const std::size_t n = g.nodes.size();
    if (order == 0) {
        return {g.nodes.begin(), g.nodes.end()};
    }

    // metric[v] = degree or strength of v in the chosen direction
    std::vector<std::uint64_t> metric(n, 0);
    const auto& fwd = dir == Direction::Out ? g.out : g.in;
    for (std::size_t v = 0; v < n; ++v)
        for (const auto& [nbr, w] : fwd[v])
            metric[v] += mode == CoreMode::Degree ? 1 : w;

    std::vector<bool> removed(n, false);
    std::queue<std::int32_t> pending;
    for (std::size_t v = 0; v < n; ++v)
        if (metric[v] < order) {
            removed[v] = true;
            pending.push(static_cast<std::int32_t>(v));
        }

    // removing v lowers the metric of nodes that reach v in the chosen
    // direction: for out-degree those are v's in-neighbours, and vice versa
    const auto& rev = dir == Direction::Out ? g.in : g.out;
    while (!pending.empty()) {
        const std::int32_t v = pending.front();
        pending.pop();
        for (const auto& [u, w] : rev[v]) {
            if (removed[u])
                continue;
            const std::uint64_t loss = mode == CoreMode::Degree ? 1 : w;
            metric[u] = metric[u] > loss ? metric[u] - loss : 0;
            if (metric[u] < order) {
                removed[u] = true;
                pending.push(u);
            }
        }
    }

    std::set<SignId> survivors;
    for (std::size_t v = 0; v < n; ++v)
        if (!removed[v])
            survivors.insert(g.nodes[v]);
    return survivors;
}

CoreProfile core_profile(const SignNetwork& net, Direction dir, CoreMode mode) {
    CoreProfile profile;
    profile.direction = dir;
    profile.mode = mode;
    profile.innermost_order = 0;
    profile.innermost_set = {net.nodes.begin(), net.nodes.end()};
    for (std::uint64_t order = 1;; ++order) {
        std::set<SignId> core = core_set(net, order, dir, mode);
        if (core.empty())
            break;
        profile.sizes.emplace_back(order, core.size());
        profile.innermost_order = order;
        profile.innermost_set = std::move(core);
    }
    return profile;
}

LexiconSets lexicon_sets(const SignNetwork& net, CoreMode mode) {
    const CoreProfile out_core = core_profile(net, Direction::Out, mode);
    const CoreProfile in_core = core_profile(net, Direction::In, mode);
    LexiconSets sets;
    std::set_intersection(out_core.innermost_set.begin(), out_core.innermost_set.end(),
                          in_core.innermost_set.begin(), in_core.innermost_set.end(),
                          std::inserter(sets.medial, sets.medial.begin()));
    std::set_difference(out_core.innermost_set.begin(), out_core.innermost_set.end(),
                        sets.medial.begin(), sets.medial.end(),
                        std::inserter(sets.preceders, sets.preceders.begin()));
    std::set_difference(in_core.innermost_set.begin(), in_core.innermost_set.end(),
                        sets.medial.begin(), sets.medial.end(),
                        std::inserter(sets.followers, sets.followers.begin()));
    return sets;
}

} // namespace seqnet
