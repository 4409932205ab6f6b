#include "ensemble.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "cores.hpp"
#include "network.hpp"

namespace seqnet {

Sequence shuffle_sequence(const Sequence& seq, Rng& rng) {
    Sequence out = seq;
    shuffle_values(out.signs, rng);
    return out;
}

Corpus shuffle_corpus(const Corpus& corpus, Rng& rng) {
    std::vector<Sequence> shuffled;
    shuffled.reserve(corpus.sequence_count());
    for (const Sequence& seq : corpus.sequences())
        shuffled.push_back(shuffle_sequence(seq, rng));
    return Corpus::from_sequences(std::move(shuffled));
}

void for_each_realization(std::size_t count, unsigned threads,
                          const std::function<void(std::size_t)>& fn) {
    const unsigned nthreads =
        std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    if (nthreads == 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) {
        pool.emplace_back([&]() {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count)
                    return;
                fn(i);
            }
        });
    }
    for (std::thread& th : pool)
        th.join();
}

namespace {

std::pair<double, double> mean_and_sample_std(const std::vector<double>& values) {
    const std::size_t n = values.size();
    double sum = 0.0;
    for (double v : values)
        sum += v;
    const double mean = sum / static_cast<double>(n);
    double ss = 0.0;
    for (double v : values)
        ss += (v - mean) * (v - mean);
    return {mean, std::sqrt(ss / static_cast<double>(n - 1))};
}

} // namespace

EnsembleStats randomized_metric(const Corpus& corpus, const CorpusMetric& metric,
                                const ShufflePlan& plan) {
    if (plan.realizations < 2)
        throw ArgumentError("ensemble standard deviation needs at least 2 realizations");
    EnsembleStats stats;
    stats.values.resize(plan.realizations);
    for_each_realization(plan.realizations, plan.threads, [&](std::size_t i) {
        Rng rng = make_rng(child_seed(plan.master_seed, i));
        stats.values[i] = metric(shuffle_corpus(corpus, rng));
    });
    const auto [mean, sd] = mean_and_sample_std(stats.values);
    stats.mean = mean;
    stats.stddev = sd;
    return stats;
}

const std::vector<std::string>& metric_names() {
    static const std::vector<std::string> names = {
        "reciprocity",     "connectivity", "distinct_pairs", "solos",    "beginners",
        "enders",          "dual",         "medial_only",    "bigrams",  "kcore_in",
        "kcore_out",       "score_in",     "score_out",
    };
    return names;
}

CorpusMetric metric_by_name(const std::string& name) {
    if (name == "reciprocity")
        return [](const Corpus& c) { return reciprocity(build_network(c)); };
    if (name == "connectivity")
        return [](const Corpus& c) { return connectivity(build_network(c)); };
    if (name == "distinct_pairs")
        return [](const Corpus& c) { return static_cast<double>(build_network(c).edge_count()); };
    if (name == "solos")
        return [](const Corpus& c) { return static_cast<double>(classify_positions(c).solos.size()); };
    if (name == "beginners")
        return
            [](const Corpus& c) { return static_cast<double>(classify_positions(c).beginners.size()); };
    if (name == "enders")
        return [](const Corpus& c) { return static_cast<double>(classify_positions(c).enders.size()); };
    if (name == "dual")
        return [](const Corpus& c) { return static_cast<double>(classify_positions(c).dual.size()); };
    if (name == "medial_only")
        return [](const Corpus& c) {
            return static_cast<double>(classify_positions(c).medial_only.size());
        };
    if (name == "bigrams")
        return [](const Corpus& c) { return static_cast<double>(c.bigram_count()); };
    if (name == "kcore_in")
        return [](const Corpus& c) {
            return static_cast<double>(
                core_profile(build_network(c), Direction::In, CoreMode::Degree).innermost_order);
        };
    if (name == "kcore_out")
        return [](const Corpus& c) {
            return static_cast<double>(
                core_profile(build_network(c), Direction::Out, CoreMode::Degree).innermost_order);
        };
    if (name == "score_in")
        return [](const Corpus& c) {
            return static_cast<double>(
                core_profile(build_network(c), Direction::In, CoreMode::Strength).innermost_order);
        };
    if (name == "score_out")
        return [](const Corpus& c) {
            return static_cast<double>(
                core_profile(build_network(c), Direction::Out, CoreMode::Strength).innermost_order);
        };
    throw ArgumentError("unknown metric: " + name);
}

PositionalClasses classify_positions(const Corpus& corpus) {
    std::map<SignId, bool> has_in, has_out, first_any, last_any, first_long, last_long;
    for (const SignId& id : corpus.inventory()) {
        has_in[id] = has_out[id] = false;
        first_any[id] = last_any[id] = first_long[id] = last_long[id] = false;
    }
    for (const Sequence& seq : corpus.sequences()) {
        for (std::size_t t = 0; t + 1 < seq.size(); ++t) {
            has_out[seq.signs[t]] = true;
            has_in[seq.signs[t + 1]] = true;
        }
        first_any[seq.signs.front()] = true;
        last_any[seq.signs.back()] = true;
        if (seq.size() >= 2) {
            first_long[seq.signs.front()] = true;
            last_long[seq.signs.back()] = true;
        }
    }
    PositionalClasses cls;
    for (const SignId& id : corpus.inventory()) {
        const bool in = has_in[id];
        const bool out = has_out[id];
        if (!in && !out)
            cls.solos.insert(id);
        else if (!in)
            cls.beginners.insert(id);
        else if (!out)
            cls.enders.insert(id);
        if (first_long[id] && last_long[id])
            cls.dual.insert(id);
        if (!first_any[id] && !last_any[id])
            cls.medial_only.insert(id);
    }
    return cls;
}

std::map<std::size_t, std::size_t> positional_frequency_histogram(const Corpus& corpus,
                                                                  PositionalClass which) {
    const PositionalClasses cls = classify_positions(corpus);
    const std::set<SignId>& members =
        which == PositionalClass::Beginner ? cls.beginners : cls.enders;
    // distinct sequences only, in case the corpus was not deduplicated
    std::map<SignId, std::set<std::vector<SignId>>> per_sign;
    for (const Sequence& seq : corpus.sequences()) {
        const SignId& at = which == PositionalClass::Beginner ? seq.signs.front() : seq.signs.back();
        if (members.count(at))
            per_sign[at].insert(seq.signs);
    }
    std::map<std::size_t, std::size_t> hist;
    for (const auto& [id, distinct] : per_sign)
        ++hist[distinct.size()];
    return hist;
}

HistogramEnsemble positional_histogram_ensemble(const Corpus& corpus, PositionalClass cls,
                                                const ShufflePlan& plan) {
    if (plan.realizations < 2)
        throw ArgumentError("ensemble standard deviation needs at least 2 realizations");
    std::vector<std::map<std::size_t, std::size_t>> hists(plan.realizations);
    for_each_realization(plan.realizations, plan.threads, [&](std::size_t i) {
        Rng rng = make_rng(child_seed(plan.master_seed, i));
        hists[i] = positional_frequency_histogram(shuffle_corpus(corpus, rng), cls);
    });

    std::set<std::size_t> bins;
    for (const auto& h : hists)
        for (const auto& [bin, count] : h)
            bins.insert(bin);

    HistogramEnsemble out;
    const double r = static_cast<double>(plan.realizations);
    for (std::size_t bin : bins) {
        double sum = 0.0, sumsq = 0.0;
        for (const auto& h : hists) {
            const auto it = h.find(bin);
            const double v = it == h.end() ? 0.0 : static_cast<double>(it->second);
            sum += v;
            sumsq += v * v;
        }
        const double mean = sum / r;
        const double var = (sumsq - r * mean * mean) / (r - 1.0);
        out.bins[bin] = {mean, std::sqrt(std::max(0.0, var))};
    }
    return out;
}

NeverRandomRoles never_random_roles(const Corpus& corpus, const ShufflePlan& plan) {
    if (plan.realizations < 1)
        throw ArgumentError("never-random roles need at least 1 realization");
    const PositionalClasses empirical = classify_positions(corpus);

    std::vector<PositionalClasses> observed(plan.realizations);
    for_each_realization(plan.realizations, plan.threads, [&](std::size_t i) {
        Rng rng = make_rng(child_seed(plan.master_seed, i));
        observed[i] = classify_positions(shuffle_corpus(corpus, rng));
    });

    NeverRandomRoles roles;
    roles.beginners = empirical.beginners;
    roles.enders = empirical.enders;
    for (const PositionalClasses& cls : observed) {
        for (const SignId& id : cls.beginners)
            roles.beginners.erase(id);
        for (const SignId& id : cls.enders)
            roles.enders.erase(id);
    }
    return roles;
}

} // namespace seqnet
