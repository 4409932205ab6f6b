#include "segment.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace seqnet {

SegmentationTree SegmentationTree::build(const Sequence& seq, const ZScoreTable& table) {
    std::vector<BoundaryScore> boundaries;
    boundaries.reserve(seq.size() > 0 ? seq.size() - 1 : 0);
    for (std::size_t t = 0; t + 1 < seq.size(); ++t) {
        const ZScoreRow* row = table.find(seq.signs[t], seq.signs[t + 1]);
        if (!row)
            throw ArgumentError("no z-score for adjacent pair (" + seq.signs[t] + ", " +
                                seq.signs[t + 1] + "); build the table from a corpus containing "
                                "this sequence");
        boundaries.push_back({row->z, row->infinite});
    }
    return build_from_boundaries(seq, boundaries);
}

SegmentationTree SegmentationTree::build_from_boundaries(
    const Sequence& seq, const std::vector<BoundaryScore>& boundaries) {
    const std::size_t n = seq.size();
    if (n == 0)
        throw ArgumentError("cannot segment an empty sequence");
    if (boundaries.size() != n - 1)
        throw ArgumentError("expected one boundary score per adjacent pair");

    SegmentationTree tree;
    tree.sequence_ = seq;
    tree.nodes_.reserve(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        Node leaf;
        leaf.span_begin = i;
        leaf.span_end = i + 1;
        tree.nodes_.push_back(leaf);
    }
    if (n == 1) {
        tree.root_ = 0;
        return tree;
    }

    // descending z, +inf above all finite, -inf below; ties leftmost
    std::vector<std::size_t> order(n - 1);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (boundaries[a].z != boundaries[b].z)
            return boundaries[a].z > boundaries[b].z;
        return a < b;
    });

    // unit_starting_at[i] / unit_ending_at[i]: active unit whose leaf span
    // starts/ends at leaf i (indexes into nodes_)
    std::vector<std::int32_t> unit_starting_at(n), unit_ending_at(n);
    for (std::size_t i = 0; i < n; ++i) {
        unit_starting_at[i] = static_cast<std::int32_t>(i);
        unit_ending_at[i] = static_cast<std::int32_t>(i);
    }

    std::size_t rank = 0;
    for (std::size_t b : order) {
        const std::int32_t left = unit_ending_at[b];
        const std::int32_t right = unit_starting_at[b + 1];
        Node merged;
        merged.left = left;
        merged.right = right;
        merged.span_begin = tree.nodes_[left].span_begin;
        merged.span_end = tree.nodes_[right].span_end;
        merged.rank = ++rank;
        merged.z = boundaries[b].z;
        merged.infinite = boundaries[b].infinite;
        const std::int32_t id = static_cast<std::int32_t>(tree.nodes_.size());
        tree.nodes_.push_back(merged);
        unit_starting_at[merged.span_begin] = id;
        unit_ending_at[merged.span_end - 1] = id;
    }
    tree.root_ = static_cast<std::int32_t>(tree.nodes_.size() - 1);
    return tree;
}

std::size_t SegmentationTree::height() const {
    if (root_ < 0)
        return 0;
    // nodes were appended children-first, so a single forward pass works
    std::vector<std::size_t> depth(nodes_.size(), 0);
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const Node& node = nodes_[i];
        if (!is_leaf(node))
            depth[i] = 1 + std::max(depth[node.left], depth[node.right]);
    }
    return depth[static_cast<std::size_t>(root_)];
}

std::vector<SignId> SegmentationTree::span_signs(const Node& node) const {
    return {sequence_.signs.begin() + static_cast<std::ptrdiff_t>(node.span_begin),
            sequence_.signs.begin() + static_cast<std::ptrdiff_t>(node.span_end)};
}

std::string SegmentationTree::to_parens() const {
    if (root_ < 0)
        return "";
    std::string out;
    // iterative in-order rendering to avoid recursion on ladder trees
    struct Frame {
        std::int32_t node;
        int stage;
    };
    std::vector<Frame> stack{{root_, 0}};
    while (!stack.empty()) {
        Frame& f = stack.back();
        const Node& node = nodes_[f.node];
        if (is_leaf(node)) {
            out += sequence_.signs[node.span_begin];
            stack.pop_back();
            continue;
        }
        if (f.stage == 0) {
            out += '(';
            f.stage = 1;
            stack.push_back({node.left, 0});
        } else if (f.stage == 1) {
            out += ' ';
            f.stage = 2;
            stack.push_back({node.right, 0});
        } else {
            out += ')';
            stack.pop_back();
        }
    }
    return out;
}

std::pair<std::size_t, std::size_t> span_occurrences(const Corpus& corpus,
                                                     const std::vector<SignId>& span) {
    if (span.empty())
        throw ArgumentError("span must contain at least one sign");
    std::size_t subsequence = 0;
    std::size_t complete = 0;
    for (const Sequence& seq : corpus.sequences()) {
        if (seq.signs == span)
            ++complete;
        if (seq.size() < span.size())
            continue;
        for (std::size_t start = 0; start + span.size() <= seq.size(); ++start) {
            if (std::equal(span.begin(), span.end(), seq.signs.begin() + static_cast<std::ptrdiff_t>(start)))
                ++subsequence;
        }
    }
    return {subsequence, complete};
}

ParseReport parse_long_sequences(const Corpus& corpus, std::size_t min_len,
                                 const ZScoreTable& table) {
    ParseReport report;
    std::vector<double> heights;
    for (std::size_t i = 0; i < corpus.sequence_count(); ++i) {
        const Sequence& seq = corpus.sequences()[i];
        if (seq.size() < min_len)
            continue;
        ParsedSequence parsed;
        parsed.corpus_index = i;
        parsed.tree = SegmentationTree::build(seq, table);
        heights.push_back(static_cast<double>(parsed.tree.height()));
        report.sequences.push_back(std::move(parsed));
    }
    if (!heights.empty()) {
        double sum = 0.0;
        for (double h : heights)
            sum += h;
        report.mean_height = sum / static_cast<double>(heights.size());
        if (heights.size() > 1) {
            double ss = 0.0;
            for (double h : heights)
                ss += (h - report.mean_height) * (h - report.mean_height);
            report.std_height = std::sqrt(ss / static_cast<double>(heights.size() - 1));
        }
    }
    return report;
}

} // namespace seqnet
