#include "synthgen.hpp"

#include <cmath>
#include <sstream>

#include "rng.hpp"

namespace seqnet {

namespace {

std::string padded_sign(std::size_t rank, std::size_t sign_count) {
    std::size_t width = 3;
    for (std::size_t cap = 1000; cap < sign_count; cap *= 10)
        ++width;
    std::string digits = std::to_string(rank);
    return std::string(width > digits.size() ? width - digits.size() : 0, '0') + digits;
}

std::vector<std::pair<std::size_t, double>> uniform_lengths(std::size_t len_min,
                                                            std::size_t len_max) {
    if (len_min < 1 || len_max < len_min)
        throw ArgumentError("invalid length range");
    std::vector<std::pair<std::size_t, double>> out;
    for (std::size_t n = len_min; n <= len_max; ++n)
        out.emplace_back(n, 1.0);
    return out;
}

std::vector<double> cumulative_of(const std::vector<double>& weights) {
    std::vector<double> cum;
    cum.reserve(weights.size());
    double acc = 0.0;
    for (double w : weights) {
        if (!(w > 0.0))
            throw ArgumentError("weights must be positive");
        acc += w;
        cum.push_back(acc);
    }
    return cum;
}

} // namespace

NullSpec uniform_null_spec(std::size_t sign_count, std::size_t len_min, std::size_t len_max) {
    if (sign_count == 0)
        throw ArgumentError("sign count must be positive");
    NullSpec spec;
    for (std::size_t r = 1; r <= sign_count; ++r)
        spec.sign_weights.emplace_back(padded_sign(r, sign_count), 1.0);
    spec.length_weights = uniform_lengths(len_min, len_max);
    return spec;
}

NullSpec power_law_null_spec(std::size_t sign_count, double gamma, std::size_t len_min,
                             std::size_t len_max) {
    if (sign_count == 0)
        throw ArgumentError("sign count must be positive");
    if (gamma <= 1.0)
        throw ArgumentError("gamma must exceed 1 (alpha = gamma - 1 must be positive)");
    const double zipf = 1.0 / (gamma - 1.0);
    NullSpec spec;
    for (std::size_t r = 1; r <= sign_count; ++r)
        spec.sign_weights.emplace_back(padded_sign(r, sign_count),
                                       std::pow(static_cast<double>(r), -zipf));
    spec.length_weights = uniform_lengths(len_min, len_max);
    return spec;
}

Corpus generate_null_corpus(const NullSpec& spec, std::size_t count, std::uint64_t seed) {
    if (spec.sign_weights.empty())
        throw ArgumentError("null spec has no signs");
    if (spec.length_weights.empty())
        throw ArgumentError("null spec has no lengths");
    for (const auto& [len, w] : spec.length_weights)
        if (len < 1)
            throw ArgumentError("sequence lengths must be at least 1");

    std::vector<double> sign_w, len_w;
    for (const auto& [id, w] : spec.sign_weights)
        sign_w.push_back(w);
    for (const auto& [len, w] : spec.length_weights)
        len_w.push_back(w);
    const std::vector<double> sign_cum = cumulative_of(sign_w);
    const std::vector<double> len_cum = cumulative_of(len_w);

    Rng rng = make_rng(seed);
    std::vector<Sequence> sequences;
    sequences.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = spec.length_weights[pick_cumulative(len_cum, rng)].first;
        Sequence seq;
        seq.signs.reserve(n);
        for (std::size_t t = 0; t < n; ++t)
            seq.signs.push_back(spec.sign_weights[pick_cumulative(sign_cum, rng)].first);
        sequences.push_back(std::move(seq));
    }
    return Corpus::from_sequences(std::move(sequences));
}

PhraseGrammar PhraseGrammar::parse(const std::string& text) {
    PhraseGrammar grammar;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos || line.front() == '#')
            continue;
        std::istringstream fields(line);
        std::string kind;
        fields >> kind;
        if (kind == "phrase") {
            std::string cls;
            double weight = 0.0;
            if (!(fields >> cls >> weight))
                throw ParseError(line_no, "expected: phrase <class> <weight> <sign...>");
            if (!(weight > 0.0))
                throw ParseError(line_no, "phrase weight must be positive");
            Alternative alt;
            alt.weight = weight;
            std::string sign;
            while (fields >> sign)
                alt.signs.push_back(sign);
            if (alt.signs.empty())
                throw ParseError(line_no, "phrase must contain at least one sign");
            grammar.classes[cls].push_back(std::move(alt));
        } else if (kind == "slot") {
            Slot slot;
            if (!(fields >> slot.cls >> slot.probability))
                throw ParseError(line_no, "expected: slot <class> <probability>");
            if (slot.probability < 0.0 || slot.probability > 1.0)
                throw ParseError(line_no, "slot probability must lie in [0, 1]");
            std::string extra;
            if (fields >> extra)
                throw ParseError(line_no, "unexpected trailing field: " + extra);
            grammar.slots.push_back(std::move(slot));
        } else {
            throw ParseError(line_no, "unknown declaration: " + kind);
        }
    }
    grammar.validate();
    return grammar;
}

void PhraseGrammar::validate() const {
    if (slots.empty())
        throw ArgumentError("grammar has no template slots");
    bool always_present = false;
    for (const Slot& slot : slots) {
        if (!classes.count(slot.cls))
            throw ArgumentError("slot references undefined phrase class: " + slot.cls);
        if (slot.probability == 1.0)
            always_present = true;
    }
    if (!always_present)
        throw ArgumentError("at least one slot must have probability 1 so sequences are non-empty");
}

GrammarCorpus generate_grammar_corpus(const PhraseGrammar& grammar, std::size_t count,
                                      std::uint64_t seed) {
    grammar.validate();

    std::map<std::string, std::vector<double>> cumulative;
    for (const auto& [cls, alts] : grammar.classes) {
        std::vector<double> w;
        for (const PhraseGrammar::Alternative& alt : alts)
            w.push_back(alt.weight);
        cumulative[cls] = cumulative_of(w);
    }

    Rng rng = make_rng(seed);
    GrammarCorpus out;
    std::vector<Sequence> sequences;
    sequences.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        Sequence seq;
        for (std::size_t s = 0; s < grammar.slots.size(); ++s) {
            const PhraseGrammar::Slot& slot = grammar.slots[s];
            const double u = uniform_unit(rng);
            if (u >= slot.probability)
                continue;
            const auto& alts = grammar.classes.at(slot.cls);
            const std::size_t pick = pick_cumulative(cumulative.at(slot.cls), rng);
            PhraseTruth truth;
            truth.sequence = i + 1;
            truth.slot = s + 1;
            truth.cls = slot.cls;
            truth.start = seq.signs.size();
            truth.signs = alts[pick].signs;
            seq.signs.insert(seq.signs.end(), alts[pick].signs.begin(), alts[pick].signs.end());
            out.truth.push_back(std::move(truth));
        }
        sequences.push_back(std::move(seq));
    }
    out.corpus = Corpus::from_sequences(std::move(sequences));
    return out;
}

} // namespace seqnet
