#include "significance.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <thread>

namespace seqnet {

namespace {

using PairKey = std::uint64_t;

inline PairKey pair_key(std::int32_t a, std::int32_t b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
}

struct PairAccum {
    std::uint64_t sum = 0;   // sum of per-realization counts
    std::uint64_t sumsq = 0; // sum of squared counts
};

std::string lookup_key(const SignId& a, const SignId& b) { return a + '\x1f' + b; }

} // namespace

ZScoreTable ZScoreTable::compute(const Corpus& corpus, const ShufflePlan& plan,
                                 bool include_absent) {
    if (plan.realizations < 2)
        throw ArgumentError("z-scores need at least 2 realizations");
    if (corpus.bigram_count() == 0)
        throw DomainError("z-scores undefined: corpus has no adjacent sign pairs");

    const SignIndex index(corpus);
    const std::size_t R = plan.realizations;

    std::unordered_map<PairKey, std::uint64_t> empirical;
    empirical.reserve(corpus.bigram_count() * 2);
    for (const auto& seq : index.sequences())
        for (std::size_t t = 0; t + 1 < seq.size(); ++t)
            ++empirical[pair_key(seq[t], seq[t + 1])];

    // Each worker owns an accumulator map; sums are merged afterwards, so the
    // result does not depend on how realizations are distributed.
    const unsigned nthreads =
        std::max(1u, std::min<unsigned>(plan.threads, static_cast<unsigned>(R)));
    std::vector<std::unordered_map<PairKey, PairAccum>> partial(nthreads);
    std::atomic<std::size_t> next{0};

    auto worker = [&](unsigned slot) {
        auto& accum = partial[slot];
        accum.reserve(empirical.size() * 2);
        // every realization permutes the ORIGINAL ordering, so results are
        // independent of which realizations share a worker
        std::vector<std::int32_t> work;
        std::unordered_map<PairKey, std::uint64_t> counts;
        counts.reserve(empirical.size() * 2);
        while (true) {
            const std::size_t r = next.fetch_add(1);
            if (r >= R)
                return;
            Rng rng = make_rng(child_seed(plan.master_seed, r));
            counts.clear();
            for (const auto& seq : index.sequences()) {
                work.assign(seq.begin(), seq.end());
                shuffle_values(work, rng);
                for (std::size_t t = 0; t + 1 < work.size(); ++t)
                    ++counts[pair_key(work[t], work[t + 1])];
            }
            for (const auto& [key, c] : counts) {
                PairAccum& a = accum[key];
                a.sum += c;
                a.sumsq += c * c;
            }
        }
    };

    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (unsigned t = 0; t < nthreads; ++t)
            pool.emplace_back(worker, t);
        for (std::thread& th : pool)
            th.join();
    }

    std::unordered_map<PairKey, PairAccum> accum = std::move(partial[0]);
    for (unsigned t = 1; t < nthreads; ++t)
        for (const auto& [key, a] : partial[t]) {
            PairAccum& dst = accum[key];
            dst.sum += a.sum;
            dst.sumsq += a.sumsq;
        }

    std::vector<PairKey> keys;
    keys.reserve(accum.size());
    for (const auto& [key, c] : empirical)
        keys.push_back(key);
    if (include_absent)
        for (const auto& [key, a] : accum)
            if (!empirical.count(key))
                keys.push_back(key);

    ZScoreTable table;
    table.bigram_total_ = corpus.bigram_count();
    table.realizations_ = R;
    table.master_seed_ = plan.master_seed;
    table.rows_.reserve(keys.size());

    for (PairKey key : keys) {
        const auto ait = accum.find(key);
        const std::uint64_t sum = ait == accum.end() ? 0 : ait->second.sum;
        const std::uint64_t sumsq = ait == accum.end() ? 0 : ait->second.sumsq;
        const auto eit = empirical.find(key);
        const std::uint64_t c = eit == empirical.end() ? 0 : eit->second;

        ZScoreRow row;
        row.first = index.sign(static_cast<std::size_t>(key >> 32));
        row.second = index.sign(static_cast<std::size_t>(key & 0xFFFFFFFFu));
        row.count = c;
        row.count_mean = static_cast<double>(sum) / static_cast<double>(R);

        // variance numerator R*sumsq - sum^2 is exact in 128-bit integers, so
        // sigma == 0 is detected without floating-point tolerance
        const unsigned __int128 rsumsq =
            static_cast<unsigned __int128>(sumsq) * static_cast<unsigned __int128>(R);
        const unsigned __int128 sum2 =
            static_cast<unsigned __int128>(sum) * static_cast<unsigned __int128>(sum);
        if (rsumsq == sum2) {
            row.count_std = 0.0;
            if (c * R == sum) {
                row.z = 0.0;
            } else {
                row.infinite = true;
                row.z = c * R > sum ? std::numeric_limits<double>::infinity()
                                    : -std::numeric_limits<double>::infinity();
            }
        } else {
            const double var = static_cast<double>(rsumsq - sum2) /
                               (static_cast<double>(R) * static_cast<double>(R - 1));
            row.count_std = std::sqrt(var);
            row.z = (static_cast<double>(c) - row.count_mean) / row.count_std;
        }
        table.rows_.push_back(std::move(row));
    }

    std::sort(table.rows_.begin(), table.rows_.end(), [](const ZScoreRow& a, const ZScoreRow& b) {
        if (a.z != b.z)
            return a.z > b.z;
        if (a.first != b.first)
            return a.first < b.first;
        return a.second < b.second;
    });
    table.lookup_.reserve(table.rows_.size() * 2);
    for (std::size_t i = 0; i < table.rows_.size(); ++i)
        table.lookup_[lookup_key(table.rows_[i].first, table.rows_[i].second)] = i;
    return table;
}

const ZScoreRow* ZScoreTable::find(const SignId& first, const SignId& second) const {
    const auto it = lookup_.find(lookup_key(first, second));
    return it == lookup_.end() ? nullptr : &rows_[it->second];
}

double ZScoreTable::p_emp(const ZScoreRow& row) const {
    return static_cast<double>(row.count) / static_cast<double>(bigram_total_);
}

double ZScoreTable::p_mean(const ZScoreRow& row) const {
    return row.count_mean / static_cast<double>(bigram_total_);
}

double ZScoreTable::p_std(const ZScoreRow& row) const {
    return row.count_std / static_cast<double>(bigram_total_);
}

ZScoreCcdf zscore_ccdf(const ZScoreTable& table) {
    ZScoreCcdf out;
    std::vector<double> finite;
    for (const ZScoreRow& row : table.rows()) {
        if (row.infinite) {
            if (row.z > 0)
                ++out.positive_infinite;
            else
                ++out.negative_infinite;
        } else {
            finite.push_back(row.z);
        }
    }
    out.finite_rows = finite.size();
    std::sort(finite.begin(), finite.end());
    const double n = static_cast<double>(finite.size());
    for (std::size_t i = 0; i < finite.size(); ++i) {
        if (i > 0 && finite[i] == finite[i - 1])
            continue;
        out.points.emplace_back(finite[i], static_cast<double>(finite.size() - i) / n);
    }
    return out;
}

SignNetwork significant_network(const ZScoreTable& table, double z_c) {
    if (!std::isfinite(z_c))
        throw ArgumentError("significance threshold must be finite");
    SignNetwork net;
    std::set<SignId> nodes;
    for (const ZScoreRow& row : table.rows()) {
        if (row.count == 0)
            continue; // ensemble-only rows are never edges
        if (row.z > z_c) {
            net.edges[{row.first, row.second}] = row.count;
            nodes.insert(row.first);
            nodes.insert(row.second);
        }
    }
    net.nodes.assign(nodes.begin(), nodes.end());
    return net;
}

std::vector<std::vector<SignId>> weak_components(const SignNetwork& net) {
    std::map<SignId, SignId> parent;
    for (const SignId& id : net.nodes)
        parent[id] = id;

    std::function<SignId(const SignId&)> find = [&](const SignId& x) -> SignId {
        SignId root = x;
        while (parent[root] != root)
            root = parent[root];
        SignId cur = x;
        while (parent[cur] != root) {
            SignId next = parent[cur];
            parent[cur] = root;
            cur = next;
        }
        return root;
    };

    for (const auto& [pair, w] : net.edges) {
        const SignId ra = find(pair.first);
        const SignId rb = find(pair.second);
        if (ra != rb)
            parent[std::max(ra, rb)] = std::min(ra, rb);
    }

    std::map<SignId, std::vector<SignId>> groups;
    for (const SignId& id : net.nodes)
        groups[find(id)].push_back(id);

    std::vector<std::vector<SignId>> components;
    components.reserve(groups.size());
    for (auto& [root, members] : groups) {
        std::sort(members.begin(), members.end());
        components.push_back(std::move(members));
    }
    std::sort(components.begin(), components.end(),
              [](const std::vector<SignId>& a, const std::vector<SignId>& b) {
                  if (a.size() != b.size())
                      return a.size() > b.size();
                  return a.front() < b.front();
              });
    return components;
}

} // namespace seqnet
