#ifndef SEQNET_CORPUS_HPP
#define SEQNET_CORPUS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"

namespace seqnet {

// A sign is an opaque token; comparison is exact string equality.
using SignId = std::string;

// One inscription line, stored in reading order (first element = first sign
// read). `line` is the 1-based line in the source file, 0 for synthetic data.
struct Sequence {
    std::vector<SignId> signs;
    std::string source;
    std::size_t line = 0;

    std::size_t size() const { return signs.size(); }

    friend bool operator==(const Sequence& a, const Sequence& b) {
        return a.signs == b.signs && a.source == b.source;
    }
};

struct DuplicateRecord {
    std::size_t kept_index = 0;   // position in the input corpus
    std::size_t dropped_index = 0;
    std::size_t kept_line = 0;    // 0 when not file-backed
    std::size_t dropped_line = 0;
};

struct LengthDistribution {
    std::map<std::size_t, std::size_t> counts; // length -> number of sequences
    double median = 0.0;
};

// Immutable after construction; safe to share across threads read-only.
class Corpus {
public:
    Corpus() = default;
    static Corpus parse(const std::string& text);
    static Corpus load_file(const std::string& path);
    static Corpus from_sequences(std::vector<Sequence> sequences);

    // Keeps the first occurrence of each distinct sign list.
    Corpus dedup(std::vector<DuplicateRecord>* log = nullptr) const;

    const std::vector<Sequence>& sequences() const { return sequences_; }
    std::size_t sequence_count() const { return sequences_.size(); }
    bool empty() const { return sequences_.empty(); }

    // Sorted ascending by SignId.
    const std::vector<SignId>& inventory() const { return inventory_; }
    const std::map<SignId, std::size_t>& frequencies() const { return frequencies_; }
    std::size_t frequency(const SignId& id) const;
    std::size_t total_sign_occurrences() const { return total_occurrences_; }

    // Sum over sequences of (n - 1).
    std::size_t bigram_count() const { return bigram_count_; }

    LengthDistribution length_distribution() const;

    // Descending frequency; ties broken by ascending SignId.
    std::vector<std::pair<SignId, std::size_t>> sign_frequencies() const;

    std::string serialize() const;

    friend bool operator==(const Corpus& a, const Corpus& b) {
        return a.sequences_ == b.sequences_;
    }

private:
    explicit Corpus(std::vector<Sequence> sequences);
    void rebuild_derived();

    std::vector<Sequence> sequences_;
    std::vector<SignId> inventory_;
    std::map<SignId, std::size_t> frequencies_;
    std::size_t total_occurrences_ = 0;
    std::size_t bigram_count_ = 0;
};

// Dense integer view of a corpus; sign indexes follow sorted inventory order.
class SignIndex {
public:
    explicit SignIndex(const Corpus& corpus);

    std::size_t size() const { return signs_.size(); }
    const SignId& sign(std::size_t index) const { return signs_[index]; }
    std::int64_t index_of(const SignId& id) const;
    const std::vector<std::vector<std::int32_t>>& sequences() const { return sequences_; }

private:
    std::vector<SignId> signs_;
    std::map<SignId, std::int32_t> lookup_;
    std::vector<std::vector<std::int32_t>> sequences_;
};

} // namespace seqnet

#endif
