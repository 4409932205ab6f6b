#ifndef SEQNET_NETWORK_HPP
#define SEQNET_NETWORK_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "corpus.hpp"

namespace seqnet {

enum class Direction { In, Out };

// Directed weighted adjacency network over sign ids. Nodes include signs that
// occur only in length-1 sequences (isolated nodes). Edge weight = number of
// adjacent bigram occurrences; self-loops are ordinary edges.
struct SignNetwork {
    std::vector<SignId> nodes;                              // sorted ascending
    std::map<std::pair<SignId, SignId>, std::uint64_t> edges;

    std::size_t node_count() const { return nodes.size(); }
    std::size_t edge_count() const { return edges.size(); } // includes loops
    std::size_t loop_count() const;
    std::size_t nonloop_edge_count() const { return edge_count() - loop_count(); }
    std::uint64_t total_weight() const;
    bool has_edge(const SignId& from, const SignId& to) const;
};

SignNetwork build_network(const Corpus& corpus);

// Fraction of non-loop edges whose reverse edge also exists; loops are
// excluded from numerator and denominator.
double reciprocity(const SignNetwork& net);

// Distinct edges (loops included) over node_count^2.
double connectivity(const SignNetwork& net);

// Complementary CDF: for every integer value 0..max, the fraction of nodes
// whose degree (distinct neighbours) / strength (weight sum) in the given
// direction is >= that value. A self-loop contributes to both directions.
std::vector<std::pair<std::uint64_t, double>> degree_ccdf(const SignNetwork& net, Direction dir);
std::vector<std::pair<std::uint64_t, double>> strength_ccdf(const SignNetwork& net, Direction dir);

// Connectivity of the sub-network induced by the q most frequent signs
// (sign_frequencies order). q must lie in [2, N].
double top_q_connectivity(const Corpus& corpus, std::size_t q);

// (q, connectivity) for q = 2..N.
std::vector<std::pair<std::size_t, double>> top_q_profile(const Corpus& corpus);

} // namespace seqnet

#endif
