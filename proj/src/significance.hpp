#ifndef SEQNET_SIGNIFICANCE_HPP
#define SEQNET_SIGNIFICANCE_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "corpus.hpp"
#include "ensemble.hpp"
#include "network.hpp"

namespace seqnet {

// Per ordered pair: empirical adjacency count vs the shuffle-null ensemble.
// Relative frequencies divide by the corpus bigram total, which shuffling
// preserves, so the z-score is identical on the count and frequency scales.
struct ZScoreRow {
    SignId first, second;
    std::uint64_t count = 0;      // empirical adjacency count
    double count_mean = 0.0;      // ensemble mean of the count
    double count_std = 0.0;       // sample std (divisor R-1)
    double z = 0.0;               // +inf / -inf when flagged infinite
    bool infinite = false;        // ensemble variance exactly zero, count != mean
};

class ZScoreTable {
public:
    // Tabulates adjacent ordered pairs per realization. Rows cover every
    // empirically observed pair; with include_absent also pairs seen only in
    // the ensemble. Rows are sorted by z descending (+inf first), then by
    // pair ascending.
    static ZScoreTable compute(const Corpus& corpus, const ShufflePlan& plan,
                               bool include_absent = false);

    const std::vector<ZScoreRow>& rows() const { return rows_; }
    const ZScoreRow* find(const SignId& first, const SignId& second) const;

    std::uint64_t bigram_total() const { return bigram_total_; }
    std::size_t realizations() const { return realizations_; }
    std::uint64_t master_seed() const { return master_seed_; }

    double p_emp(const ZScoreRow& row) const;
    double p_mean(const ZScoreRow& row) const;
    double p_std(const ZScoreRow& row) const;

private:
    std::vector<ZScoreRow> rows_;
    std::unordered_map<std::string, std::size_t> lookup_; // "first\x1fsecond" -> row
    std::uint64_t bigram_total_ = 0;
    std::size_t realizations_ = 0;
    std::uint64_t master_seed_ = 0;
};

struct ZScoreCcdf {
    std::vector<std::pair<double, double>> points; // (z, fraction of finite rows >= z)
    std::size_t finite_rows = 0;
    std::size_t positive_infinite = 0;
    std::size_t negative_infinite = 0;
};

ZScoreCcdf zscore_ccdf(const ZScoreTable& table);

// Network of empirically observed pairs with z > z_c (rows flagged +inf
// included); edge weight = empirical count.
SignNetwork significant_network(const ZScoreTable& table, double z_c);

// Weakly connected components, ignoring direction; nodes sorted within a
// component, components ordered by size descending then first node.
std::vector<std::vector<SignId>> weak_components(const SignNetwork& net);

} // namespace seqnet

#endif
