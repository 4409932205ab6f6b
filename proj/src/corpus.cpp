#include "corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace seqnet {

namespace {

bool is_blank(const std::string& line) {
    return line.find_first_not_of(" \t") == std::string::npos;
}

} // namespace

Corpus::Corpus(std::vector<Sequence> sequences) : sequences_(std::move(sequences)) {
    rebuild_derived();
}

void Corpus::rebuild_derived() {
    frequencies_.clear();
    inventory_.clear();
    total_occurrences_ = 0;
    bigram_count_ = 0;
    for (const Sequence& seq : sequences_) {
        if (seq.signs.empty())
            throw ArgumentError("corpus sequence must contain at least one sign");
        for (const SignId& id : seq.signs)
            ++frequencies_[id];
        total_occurrences_ += seq.size();
        bigram_count_ += seq.size() - 1;
    }
    inventory_.reserve(frequencies_.size());
    for (const auto& [id, f] : frequencies_)
        inventory_.push_back(id);
}

Corpus Corpus::parse(const std::string& text) {
    std::vector<Sequence> sequences;
    std::size_t line_no = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (is_blank(line) || line.front() == '#')
            continue;

        Sequence seq;
        seq.line = line_no;
        std::string body = line;
        const std::size_t tabs = static_cast<std::size_t>(std::count(line.begin(), line.end(), '\t'));
        if (tabs > 1)
            throw ParseError(line_no, "more than one tab; expected at most one source-label prefix");
        if (tabs == 1) {
            const std::size_t pos = line.find('\t');
            seq.source = line.substr(0, pos);
            body = line.substr(pos + 1);
        }

        std::size_t start = 0;
        while (true) {
            const std::size_t sp = body.find(' ', start);
            const std::string token =
                sp == std::string::npos ? body.substr(start) : body.substr(start, sp - start);
            if (token.empty())
                throw ParseError(line_no, "empty sign token (check doubled or trailing spaces)");
            seq.signs.push_back(token);
            if (sp == std::string::npos)
                break;
            start = sp + 1;
        }
        sequences.push_back(std::move(seq));
    }
    return Corpus(std::move(sequences));
}

Corpus Corpus::load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open corpus file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

Corpus Corpus::from_sequences(std::vector<Sequence> sequences) {
    for (const Sequence& s : sequences)
        if (s.source.find('\t') != std::string::npos)
            throw ArgumentError("sequence source label must not contain a tab");
    return Corpus(std::move(sequences));
}

Corpus Corpus::dedup(std::vector<DuplicateRecord>* log) const {
    std::vector<Sequence> kept;
    std::map<std::vector<SignId>, std::size_t> first_seen; // sign list -> input index
    for (std::size_t i = 0; i < sequences_.size(); ++i) {
        const Sequence& seq = sequences_[i];
        auto [it, inserted] = first_seen.emplace(seq.signs, i);
        if (inserted) {
            kept.push_back(seq);
        } else if (log) {
            DuplicateRecord rec;
            rec.kept_index = it->second;
            rec.dropped_index = i;
            rec.kept_line = sequences_[it->second].line;
            rec.dropped_line = seq.line;
            log->push_back(rec);
        }
    }
    return Corpus(std::move(kept));
}

std::size_t Corpus::frequency(const SignId& id) const {
    const auto it = frequencies_.find(id);
    return it == frequencies_.end() ? 0 : it->second;
}

LengthDistribution Corpus::length_distribution() const {
    if (sequences_.empty())
        throw DomainError("length distribution of an empty corpus is undefined");
    LengthDistribution dist;
    std::vector<std::size_t> lengths;
    lengths.reserve(sequences_.size());
    for (const Sequence& seq : sequences_) {
        ++dist.counts[seq.size()];
        lengths.push_back(seq.size());
    }
    std::sort(lengths.begin(), lengths.end());
    const std::size_t n = lengths.size();
    dist.median = n % 2 == 1 ? static_cast<double>(lengths[n / 2])
                             : (static_cast<double>(lengths[n / 2 - 1]) +
                                static_cast<double>(lengths[n / 2])) /
                                   2.0;
    return dist;
}

std::vector<std::pair<SignId, std::size_t>> Corpus::sign_frequencies() const {
    std::vector<std::pair<SignId, std::size_t>> out(frequencies_.begin(), frequencies_.end());
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second)
            return a.second > b.second;
        return a.first < b.first;
    });
    return out;
}

std::string Corpus::serialize() const {
    std::ostringstream out;
    for (const Sequence& seq : sequences_) {
        if (!seq.source.empty())
            out << seq.source << '\t';
        for (std::size_t i = 0; i < seq.signs.size(); ++i) {
            if (i)
                out << ' ';
            out << seq.signs[i];
        }
        out << '\n';
    }
    return out.str();
}

SignIndex::SignIndex(const Corpus& corpus) {
    signs_ = corpus.inventory();
    for (std::size_t i = 0; i < signs_.size(); ++i)
        lookup_[signs_[i]] = static_cast<std::int32_t>(i);
    sequences_.reserve(corpus.sequence_count());
    for (const Sequence& seq : corpus.sequences()) {
        std::vector<std::int32_t> ix;
        ix.reserve(seq.size());
        for (const SignId& id : seq.signs)
            ix.push_back(lookup_.at(id));
        sequences_.push_back(std::move(ix));
    }
}

std::int64_t SignIndex::index_of(const SignId& id) const {
    const auto it = lookup_.find(id);
    return it == lookup_.end() ? -1 : it->second;
}

} // namespace seqnet
