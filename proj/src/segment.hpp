#ifndef SEQNET_SEGMENT_HPP
#define SEQNET_SEGMENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "significance.hpp"

namespace seqnet {

// z-score attached to the boundary between adjacent leaves; infinite
// boundaries outrank every finite one (positive before negative).
struct BoundaryScore {
    double z = 0.0;
    bool infinite = false;
};

// Binary tree over one sequence. Scores live on the n-1 original boundaries;
// each merge consumes the highest-ranked remaining boundary (ties leftmost)
// and joins the two adjacent units. Merged units never receive new scores.
class SegmentationTree {
public:
    struct Node {
        std::int32_t left = -1;   // node index, -1 for leaves
        std::int32_t right = -1;
        std::size_t span_begin = 0; // leaf range [begin, end)
        std::size_t span_end = 0;
        std::size_t rank = 0;       // merge step, 1..n-1 (internal nodes only)
        double z = 0.0;
        bool infinite = false;
    };

    static SegmentationTree build(const Sequence& seq, const ZScoreTable& table);
    static SegmentationTree build_from_boundaries(const Sequence& seq,
                                                  const std::vector<BoundaryScore>& boundaries);

    const Sequence& sequence() const { return sequence_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    std::int32_t root() const { return root_; }
    bool is_leaf(const Node& node) const { return node.left < 0; }

    // Edge count of the deepest leaf; 0 for a single-sign sequence.
    std::size_t height() const;

    std::vector<SignId> span_signs(const Node& node) const;

    // Nested binary parentheses, e.g. "((520 919) 140)".
    std::string to_parens() const;

private:
    Sequence sequence_;
    std::vector<Node> nodes_;
    std::int32_t root_ = -1;
};

// (occurrences as a contiguous subsequence, occurrences as a complete
// sequence); overlapping matches within one sequence all count.
std::pair<std::size_t, std::size_t> span_occurrences(const Corpus& corpus,
                                                     const std::vector<SignId>& span);

struct ParsedSequence {
    std::size_t corpus_index = 0;
    SegmentationTree tree;
};

struct ParseReport {
    std::vector<ParsedSequence> sequences;
    double mean_height = 0.0;
    double std_height = 0.0; // sample std; 0 when fewer than 2 trees
};

// Builds a tree for every sequence of length >= min_len.
ParseReport parse_long_sequences(const Corpus& corpus, std::size_t min_len,
                                 const ZScoreTable& table);

} // namespace seqnet

#endif
