#ifndef SEQNET_SYNTHGEN_HPP
#define SEQNET_SYNTHGEN_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "corpus.hpp"

namespace seqnet {

// Null corpora: sequence lengths and signs drawn independently from fixed
// weight tables. Generation is sequential in sequence order under one seeded
// generator, so a (spec, count, seed) triple pins the corpus exactly.
struct NullSpec {
    std::vector<std::pair<SignId, double>> sign_weights;
    std::vector<std::pair<std::size_t, double>> length_weights;
};

NullSpec uniform_null_spec(std::size_t sign_count, std::size_t len_min, std::size_t len_max);

// Sign r (1-based rank) gets weight r^(-1/(gamma-1)), so realized sign
// frequencies follow a complementary CDF ~ f^-(gamma-1).
NullSpec power_law_null_spec(std::size_t sign_count, double gamma, std::size_t len_min,
                             std::size_t len_max);

Corpus generate_null_corpus(const NullSpec& spec, std::size_t count, std::uint64_t seed);

// Flat phrase grammar: classes of fixed weighted sign-tuples expanded along a
// slot template. Text format, one declaration per line:
//   phrase <CLASS> <weight> <sign> [sign ...]
//   slot <CLASS> <inclusion-probability>
// '#' comments and blank lines are ignored. At least one slot must have
// probability 1 so every expansion is non-empty.
struct PhraseGrammar {
    struct Alternative {
        std::vector<SignId> signs;
        double weight = 1.0;
    };
    struct Slot {
        std::string cls;
        double probability = 1.0;
    };

    std::map<std::string, std::vector<Alternative>> classes;
    std::vector<Slot> slots;

    static PhraseGrammar parse(const std::string& text);
    void validate() const;
};

struct PhraseTruth {
    std::size_t sequence = 0; // 1-based corpus position
    std::size_t slot = 0;     // 1-based template position
    std::string cls;
    std::size_t start = 0;    // 0-based sign offset within the sequence
    std::vector<SignId> signs;
};

struct GrammarCorpus {
    Corpus corpus;
    std::vector<PhraseTruth> truth; // ground-truth spans, for evaluation only
};

GrammarCorpus generate_grammar_corpus(const PhraseGrammar& grammar, std::size_t count,
                                      std::uint64_t seed);

} // namespace seqnet

#endif
