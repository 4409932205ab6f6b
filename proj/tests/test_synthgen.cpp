#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ensemble.hpp"
#include "powerfit.hpp"
#include "segment.hpp"
#include "synthgen.hpp"

#include <cmath>

using namespace seqnet;

namespace {

const char* kGrammar4 = R"(# four fixed phrase classes
phrase INITIAL 1 i1 i2 i3
phrase INITIAL 1 i4 i5 i6
phrase LINK 2 l1 l2
phrase LINK 1 l3 l4
phrase MEDIAL 1 m1 m2 m3
phrase TERMINAL 1 t1 t2
slot INITIAL 1.0
slot LINK 0.5
slot MEDIAL 1.0
slot TERMINAL 1.0
)";

} // namespace

TEST_CASE("null corpus: pair frequencies of a uniform spec stay near 1/16") {
    const NullSpec spec = uniform_null_spec(4, 3, 3);
    const Corpus corpus = generate_null_corpus(spec, 1000, 41);
    REQUIRE(corpus.sequence_count() == 1000);
    CHECK(corpus.bigram_count() == 2000);

    std::map<std::pair<SignId, SignId>, std::size_t> pairs;
    for (const Sequence& seq : corpus.sequences())
        for (std::size_t t = 0; t + 1 < seq.size(); ++t)
            ++pairs[{seq.signs[t], seq.signs[t + 1]}];
    const double total = static_cast<double>(corpus.bigram_count());
    const double p = 1.0 / 16.0;
    const double sigma = std::sqrt(total * p * (1 - p));
    for (const auto& [pair, count] : pairs)
        CHECK(std::abs(static_cast<double>(count) - total * p) <= 3.0 * sigma);
    CHECK(pairs.size() == 16);
}

TEST_CASE("single-sign spec yields self-loop chains") {
    const NullSpec spec = uniform_null_spec(1, 2, 5);
    const Corpus corpus = generate_null_corpus(spec, 20, 9);
    for (const Sequence& seq : corpus.sequences()) {
        CHECK(seq.size() >= 2);
        for (const SignId& id : seq.signs)
            CHECK(id == "001");
    }
}

TEST_CASE("power-law null corpus round-trips through the fitter") {
    // enough signs that the [1, 30] window sits inside the power-law tail
    const NullSpec spec = power_law_null_spec(2000, 1.66, 4, 10);
    const Corpus corpus = generate_null_corpus(spec, 3000, 20240202);
    std::vector<std::uint64_t> freqs;
    for (const auto& [id, f] : corpus.frequencies())
        freqs.push_back(f);
    const PowerLawFit fit = fit_power_law(freqs, 1, 30);
    CHECK(std::abs(fit.gamma - 1.66) <= 0.15);
}

TEST_CASE("null generation is deterministic under its seed") {
    const NullSpec spec = uniform_null_spec(10, 1, 8);
    const Corpus a = generate_null_corpus(spec, 100, 7);
    const Corpus b = generate_null_corpus(spec, 100, 7);
    const Corpus c = generate_null_corpus(spec, 100, 8);
    CHECK(a == b);
    CHECK_FALSE(a == c);
}

TEST_CASE("null spec validation") {
    CHECK_THROWS_AS(generate_null_corpus(NullSpec{}, 10, 1), ArgumentError);
    NullSpec no_lengths;
    no_lengths.sign_weights = {{"A", 1.0}};
    CHECK_THROWS_AS(generate_null_corpus(no_lengths, 10, 1), ArgumentError);
    NullSpec zero_len;
    zero_len.sign_weights = {{"A", 1.0}};
    zero_len.length_weights = {{0, 1.0}};
    CHECK_THROWS_AS(generate_null_corpus(zero_len, 10, 1), ArgumentError);
    CHECK_THROWS_AS(uniform_null_spec(0, 1, 3), ArgumentError);
    CHECK_THROWS_AS(power_law_null_spec(10, 0.9, 1, 3), ArgumentError);
}

TEST_CASE("grammar parses classes, weights, and slots") {
    const PhraseGrammar grammar = PhraseGrammar::parse(kGrammar4);
    CHECK(grammar.classes.size() == 4);
    CHECK(grammar.classes.at("LINK").size() == 2);
    CHECK(grammar.classes.at("LINK")[0].weight == doctest::Approx(2.0));
    REQUIRE(grammar.slots.size() == 4);
    CHECK(grammar.slots[1].probability == doctest::Approx(0.5));
}

TEST_CASE("grammar rejects malformed declarations") {
    CHECK_THROWS_AS(PhraseGrammar::parse("phrase X 0 a"), ParseError);   // weight <= 0
    CHECK_THROWS_AS(PhraseGrammar::parse("phrase X 1"), ParseError);     // no signs
    CHECK_THROWS_AS(PhraseGrammar::parse("slot X 1.5"), ParseError);     // bad probability
    CHECK_THROWS_AS(PhraseGrammar::parse("banana Y 1 a"), ParseError);   // unknown keyword
    CHECK_THROWS_AS(PhraseGrammar::parse("phrase X 1 a\nslot Y 1.0"),
                    ArgumentError);                                      // undefined class
    CHECK_THROWS_AS(PhraseGrammar::parse("phrase X 1 a\nslot X 0.5"),
                    ArgumentError);                                      // possible empty expansion
    CHECK_THROWS_AS(PhraseGrammar::parse("phrase X 1 a"), ArgumentError); // no slots
}

TEST_CASE("always-present phrases appear as contiguous spans in every sequence") {
    const GrammarCorpus out = generate_grammar_corpus(PhraseGrammar::parse(kGrammar4), 60, 3);
    REQUIRE(out.corpus.sequence_count() == 60);
    for (const PhraseTruth& truth : out.truth) {
        const Sequence& seq = out.corpus.sequences()[truth.sequence - 1];
        REQUIRE(truth.start + truth.signs.size() <= seq.size());
        for (std::size_t i = 0; i < truth.signs.size(); ++i)
            CHECK(seq.signs[truth.start + i] == truth.signs[i]);
        CHECK(span_occurrences(out.corpus, truth.signs).first >= 1);
    }
    // INITIAL, MEDIAL, TERMINAL are always present
    std::size_t initial_rows = 0;
    for (const PhraseTruth& truth : out.truth)
        if (truth.cls == "INITIAL")
            ++initial_rows;
    CHECK(initial_rows == 60);
}

TEST_CASE("a sign used only at slot one is classified as beginner") {
    const char* grammar_text =
        "phrase HEAD 1 h0\nphrase BODY 1 b1 b2\nphrase BODY 1 b3 b4\nslot HEAD 1.0\nslot BODY 1.0\n";
    const GrammarCorpus out = generate_grammar_corpus(PhraseGrammar::parse(grammar_text), 30, 11);
    const PositionalClasses cls = classify_positions(out.corpus);
    CHECK(cls.beginners.count("h0") == 1);
}

TEST_CASE("grammar generation is deterministic under its seed") {
    const PhraseGrammar grammar = PhraseGrammar::parse(kGrammar4);
    const GrammarCorpus a = generate_grammar_corpus(grammar, 40, 12);
    const GrammarCorpus b = generate_grammar_corpus(grammar, 40, 12);
    CHECK(a.corpus == b.corpus);
    REQUIRE(a.truth.size() == b.truth.size());
    for (std::size_t i = 0; i < a.truth.size(); ++i) {
        CHECK(a.truth[i].sequence == b.truth[i].sequence);
        CHECK(a.truth[i].start == b.truth[i].start);
        CHECK(a.truth[i].signs == b.truth[i].signs);
    }
}

TEST_CASE("null corpus z-scores are centred and rarely exceed 3") {
    // loose Gaussian-tail bound at 10^3 realizations on a small uniform corpus
    const NullSpec spec = uniform_null_spec(12, 2, 8);
    const Corpus corpus = generate_null_corpus(spec, 400, 6);
    const ShufflePlan plan{61, 1000, 4};
    const ZScoreTable table = ZScoreTable::compute(corpus, plan);
    double sum_z = 0.0;
    std::size_t over3 = 0, finite = 0;
    for (const ZScoreRow& row : table.rows()) {
        if (row.infinite)
            continue;
        ++finite;
        sum_z += row.z;
        if (row.z > 3.0)
            ++over3;
    }
    REQUIRE(finite > 0);
    CHECK(std::abs(sum_z / static_cast<double>(finite)) <= 0.1);
    CHECK(static_cast<double>(over3) / static_cast<double>(finite) <= 0.02);
}
