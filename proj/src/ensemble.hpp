#ifndef SEQNET_ENSEMBLE_HPP
#define SEQNET_ENSEMBLE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "rng.hpp"

namespace seqnet {

// Null model: every sequence independently and uniformly permuted.
// Realization i always uses child_seed(master_seed, i), so per-realization
// results are identical for any thread count or evaluation order.
struct ShufflePlan {
    std::uint64_t master_seed = 0;
    std::size_t realizations = 0;
    unsigned threads = 1;
};

Sequence shuffle_sequence(const Sequence& seq, Rng& rng);
Corpus shuffle_corpus(const Corpus& corpus, Rng& rng);

struct EnsembleStats {
    double mean = 0.0;
    double stddev = 0.0; // sample standard deviation (divisor n-1)
    std::vector<double> values;
};

using CorpusMetric = std::function<double(const Corpus&)>;

EnsembleStats randomized_metric(const Corpus& corpus, const CorpusMetric& metric,
                                const ShufflePlan& plan);

// Runs fn(i) for i in [0, count) across up to `threads` workers. fn must
// confine writes to its own realization slot.
void for_each_realization(std::size_t count, unsigned threads,
                          const std::function<void(std::size_t)>& fn);

// Named metrics for the CLI / C API ("reciprocity", "connectivity", ...).
const std::vector<std::string>& metric_names();
CorpusMetric metric_by_name(const std::string& name);

struct PositionalClasses {
    std::set<SignId> solos;       // in-degree 0 and out-degree 0
    std::set<SignId> beginners;   // in-degree 0, out-degree > 0
    std::set<SignId> enders;      // out-degree 0, in-degree > 0
    std::set<SignId> dual;        // first in some sequence (n>=2) and last in another
    std::set<SignId> medial_only; // never first or last in any sequence
};

PositionalClasses classify_positions(const Corpus& corpus);

enum class PositionalClass { Beginner, Ender };

// For each beginner (ender): the number of distinct sequences it begins
// (ends); histogram of that count over signs of the class.
std::map<std::size_t, std::size_t> positional_frequency_histogram(const Corpus& corpus,
                                                                  PositionalClass cls);

struct HistogramEnsemble {
    // bin -> (mean, sample std) of the per-realization bin value
    std::map<std::size_t, std::pair<double, double>> bins;
};

HistogramEnsemble positional_histogram_ensemble(const Corpus& corpus, PositionalClass cls,
                                                const ShufflePlan& plan);

struct NeverRandomRoles {
    std::set<SignId> beginners;
    std::set<SignId> enders;
};

// Empirical beginners/enders that hold the same role in zero realizations.
NeverRandomRoles never_random_roles(const Corpus& corpus, const ShufflePlan& plan);

} // namespace seqnet

#endif
