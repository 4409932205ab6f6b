#include "textio.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace seqnet::textio {

namespace {

void join_signs(std::ostringstream& out, const std::set<SignId>& ids) {
    bool first = true;
    for (const SignId& id : ids) {
        if (!first)
            out << ' ';
        out << id;
        first = false;
    }
}

void join_signs(std::ostringstream& out, const std::vector<SignId>& ids) {
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i)
            out << ' ';
        out << ids[i];
    }
}

} // namespace

std::string format_double(double v) {
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

const char* direction_name(Direction dir) { return dir == Direction::In ? "in" : "out"; }

const char* mode_name(CoreMode mode) { return mode == CoreMode::Degree ? "degree" : "strength"; }

std::string corpus_stats(const Corpus& raw) {
    std::vector<DuplicateRecord> dups;
    const Corpus unique = raw.dedup(&dups);

    std::ostringstream out;
    out << "sequences_raw: " << raw.sequence_count() << '\n';
    out << "sequences_unique: " << unique.sequence_count() << '\n';
    out << "duplicates_removed: " << dups.size() << '\n';
    out << "inventory_size: " << unique.inventory().size() << '\n';
    out << "total_sign_occurrences: " << unique.total_sign_occurrences() << '\n';
    out << "total_bigrams: " << unique.bigram_count() << '\n';
    if (!unique.empty()) {
        const LengthDistribution lengths = unique.length_distribution();
        out << "min_length: " << lengths.counts.begin()->first << '\n';
        out << "median_length: " << format_double(lengths.median) << '\n';
        out << "max_length: " << lengths.counts.rbegin()->first << '\n';
        out << "length_histogram:";
        for (const auto& [len, count] : lengths.counts)
            out << ' ' << len << ':' << count;
        out << '\n';
    }
    for (const DuplicateRecord& d : dups) {
        out << "duplicate:";
        if (d.dropped_line)
            out << " line " << d.dropped_line << " repeats line " << d.kept_line;
        else
            out << " sequence " << d.dropped_index + 1 << " repeats sequence " << d.kept_index + 1;
        out << '\n';
    }
    return out.str();
}

std::string network_summary(const SignNetwork& net) {
    std::ostringstream out;
    out << "nodes: " << net.node_count() << '\n';
    out << "edges: " << net.edge_count() << '\n';
    out << "self_loops: " << net.loop_count() << '\n';
    out << "total_weight: " << net.total_weight() << '\n';
    try {
        out << "reciprocity: " << format_double(reciprocity(net)) << '\n';
    } catch (const DomainError&) {
        out << "reciprocity: undefined\n";
    }
    out << "connectivity: " << format_double(connectivity(net)) << '\n';
    return out.str();
}

std::string network_dot(const SignNetwork& net, const std::string& graph_name) {
    std::ostringstream out;
    out << "digraph " << graph_name << " {\n";
    for (const SignId& id : net.nodes)
        out << "  \"" << id << "\";\n";
    for (const auto& [pair, w] : net.edges)
        out << "  \"" << pair.first << "\" -> \"" << pair.second << "\" [weight=" << w << "];\n";
    out << "}\n";
    return out.str();
}

std::string network_edges_csv(const SignNetwork& net) {
    std::ostringstream out;
    out << "source,target,weight\n";
    for (const auto& [pair, w] : net.edges)
        out << pair.first << ',' << pair.second << ',' << w << '\n';
    return out.str();
}

std::string cdf_csv(const std::vector<std::pair<std::uint64_t, double>>& points,
                    const std::string& value_header) {
    std::ostringstream out;
    out << value_header << ",p_c\n";
    for (const auto& [value, pc] : points)
        out << value << ',' << format_double(pc) << '\n';
    return out.str();
}

std::string top_q_csv(const std::vector<std::pair<std::size_t, double>>& profile) {
    std::ostringstream out;
    out << "q,connectivity\n";
    for (const auto& [q, c] : profile)
        out << q << ',' << format_double(c) << '\n';
    return out.str();
}

std::string ensemble_metric_summary(const std::string& name, double empirical,
                                    const EnsembleStats& stats, const ShufflePlan& plan) {
    std::ostringstream out;
    out << "metric: " << name << '\n';
    out << "realizations: " << plan.realizations << '\n';
    out << "seed: " << plan.master_seed << '\n';
    out << "empirical: " << format_double(empirical) << '\n';
    out << "ensemble_mean: " << format_double(stats.mean) << '\n';
    out << "ensemble_std: " << format_double(stats.stddev) << '\n';
    return out.str();
}

std::string ensemble_metric_values_csv(const std::string& name, double empirical,
                                       const EnsembleStats& stats, const ShufflePlan& plan) {
    std::ostringstream out;
    out << "# metric: " << name << '\n';
    out << "# seed: " << plan.master_seed << '\n';
    out << "# empirical: " << format_double(empirical) << '\n';
    out << "# ensemble_mean: " << format_double(stats.mean) << '\n';
    out << "# ensemble_std: " << format_double(stats.stddev) << '\n';
    out << "realization,value\n";
    for (std::size_t i = 0; i < stats.values.size(); ++i)
        out << i << ',' << format_double(stats.values[i]) << '\n';
    return out.str();
}

std::string classes_text(const PositionalClasses& classes, std::size_t inventory_size) {
    std::ostringstream out;
    out << "solos: ";
    join_signs(out, classes.solos);
    out << "\nbeginners: ";
    join_signs(out, classes.beginners);
    out << "\nenders: ";
    join_signs(out, classes.enders);
    out << "\ndual: ";
    join_signs(out, classes.dual);
    out << "\nmedial_only: ";
    join_signs(out, classes.medial_only);
    const std::size_t other = inventory_size - classes.solos.size() - classes.beginners.size() -
                              classes.enders.size();
    out << "\ncounts: solos=" << classes.solos.size() << " beginners=" << classes.beginners.size()
        << " enders=" << classes.enders.size() << " dual=" << classes.dual.size()
        << " medial_only=" << classes.medial_only.size() << " other=" << other << '\n';
    return out.str();
}

std::string positional_histogram_csv(const std::map<std::size_t, std::size_t>& empirical,
                                     const HistogramEnsemble* ensemble) {
    std::ostringstream out;
    if (!ensemble) {
        out << "sequences,signs\n";
        for (const auto& [bin, count] : empirical)
            out << bin << ',' << count << '\n';
        return out.str();
    }
    std::set<std::size_t> bins;
    for (const auto& [bin, count] : empirical)
        bins.insert(bin);
    for (const auto& [bin, stats] : ensemble->bins)
        bins.insert(bin);
    out << "sequences,signs,rand_mean,rand_std\n";
    for (std::size_t bin : bins) {
        const auto eit = empirical.find(bin);
        out << bin << ',' << (eit == empirical.end() ? 0 : eit->second);
        const auto rit = ensemble->bins.find(bin);
        if (rit == ensemble->bins.end())
            out << ",0,0\n";
        else
            out << ',' << format_double(rit->second.first) << ','
                << format_double(rit->second.second) << '\n';
    }
    return out.str();
}

std::string never_random_text(const NeverRandomRoles& roles, const ShufflePlan& plan) {
    std::ostringstream out;
    out << "realizations: " << plan.realizations << '\n';
    out << "seed: " << plan.master_seed << '\n';
    out << "never_random_beginners: ";
    join_signs(out, roles.beginners);
    out << "\nnever_random_enders: ";
    join_signs(out, roles.enders);
    out << '\n';
    return out.str();
}

std::string core_profile_csv(const CoreProfile& profile) {
    std::ostringstream out;
    out << "# direction: " << direction_name(profile.direction) << '\n';
    out << "# mode: " << mode_name(profile.mode) << '\n';
    out << "# innermost_order: " << profile.innermost_order << '\n';
    out << "order,size\n";
    for (const auto& [order, size] : profile.sizes)
        out << order << ',' << size << '\n';
    return out.str();
}

std::string core_profile_ensemble_csv(const CoreProfile& empirical,
                                      const std::vector<CoreProfile>& realizations) {
    const double r = static_cast<double>(realizations.size());
    std::uint64_t max_order = empirical.innermost_order;
    double order_sum = 0.0, order_sumsq = 0.0;
    for (const CoreProfile& p : realizations) {
        max_order = std::max(max_order, p.innermost_order);
        const double o = static_cast<double>(p.innermost_order);
        order_sum += o;
        order_sumsq += o * o;
    }
    const double order_mean = order_sum / r;
    const double order_var = (order_sumsq - r * order_mean * order_mean) / (r - 1.0);

    std::vector<double> mean(max_order + 1, 0.0), var(max_order + 1, 0.0);
    for (std::uint64_t order = 1; order <= max_order; ++order) {
        double sum = 0.0, sumsq = 0.0;
        for (const CoreProfile& p : realizations) {
            const double size = order <= p.innermost_order && order - 1 < p.sizes.size()
                                    ? static_cast<double>(p.sizes[order - 1].second)
                                    : 0.0;
            sum += size;
            sumsq += size * size;
        }
        mean[order] = sum / r;
        var[order] = std::max(0.0, (sumsq - r * mean[order] * mean[order]) / (r - 1.0));
    }
    std::uint64_t mean_profile_innermost = 0;
    for (std::uint64_t order = 1; order <= max_order; ++order)
        if (mean[order] >= 1.0)
            mean_profile_innermost = order;

    std::ostringstream out;
    out << "# direction: " << direction_name(empirical.direction) << '\n';
    out << "# mode: " << mode_name(empirical.mode) << '\n';
    out << "# innermost_order: " << empirical.innermost_order << '\n';
    out << "# rand_innermost_order_mean: " << format_double(order_mean) << '\n';
    out << "# rand_innermost_order_std: " << format_double(std::sqrt(std::max(0.0, order_var)))
        << '\n';
    out << "# rand_mean_profile_innermost_order: " << mean_profile_innermost << '\n';
    out << "order,size,rand_mean,rand_std\n";
    for (std::uint64_t order = 1; order <= max_order; ++order) {
        const std::size_t size = order <= empirical.innermost_order &&
                                         order - 1 < empirical.sizes.size()
                                     ? empirical.sizes[order - 1].second
                                     : 0;
        out << order << ',' << size << ',' << format_double(mean[order]) << ','
            << format_double(std::sqrt(var[order])) << '\n';
    }
    return out.str();
}

std::string core_sets_text(const CoreProfile& profile) {
    std::ostringstream out;
    out << "direction: " << direction_name(profile.direction) << '\n';
    out << "mode: " << mode_name(profile.mode) << '\n';
    out << "innermost_order: " << profile.innermost_order << '\n';
    out << "innermost_size: " << profile.innermost_set.size() << '\n';
    out << "innermost_set: ";
    join_signs(out, profile.innermost_set);
    out << '\n';
    return out.str();
}

std::string lexicon_text(const LexiconSets& sets, CoreMode mode) {
    std::set<SignId> lexicon;
    lexicon.insert(sets.medial.begin(), sets.medial.end());
    lexicon.insert(sets.preceders.begin(), sets.preceders.end());
    lexicon.insert(sets.followers.begin(), sets.followers.end());
    std::ostringstream out;
    out << "mode: " << mode_name(mode) << '\n';
    out << "medial: ";
    join_signs(out, sets.medial);
    out << "\npreceders: ";
    join_signs(out, sets.preceders);
    out << "\nfollowers: ";
    join_signs(out, sets.followers);
    out << "\nlexicon: ";
    join_signs(out, lexicon);
    out << "\ncounts: medial=" << sets.medial.size() << " preceders=" << sets.preceders.size()
        << " followers=" << sets.followers.size() << " lexicon=" << lexicon.size() << '\n';
    return out.str();
}

std::string ztable_csv(const ZScoreTable& table) {
    std::ostringstream out;
    out << "# realizations: " << table.realizations() << '\n';
    out << "# seed: " << table.master_seed() << '\n';
    out << "# total_bigrams: " << table.bigram_total() << '\n';
    out << "i,j,count,p_emp,mean,std,z,flag\n";
    for (const ZScoreRow& row : table.rows()) {
        out << row.first << ',' << row.second << ',' << row.count << ','
            << format_double(table.p_emp(row)) << ',' << format_double(table.p_mean(row)) << ','
            << format_double(table.p_std(row)) << ',' << format_double(row.z) << ','
            << (row.infinite ? 1 : 0) << '\n';
    }
    return out.str();
}

std::string zscore_cdf_csv(const ZScoreTable& table) {
    const ZScoreCcdf cdf = zscore_ccdf(table);
    std::ostringstream out;
    out << "# finite_rows: " << cdf.finite_rows << '\n';
    out << "# positive_infinite: " << cdf.positive_infinite << '\n';
    out << "# negative_infinite: " << cdf.negative_infinite << '\n';
    out << "z,p_c\n";
    for (const auto& [z, pc] : cdf.points)
        out << format_double(z) << ',' << format_double(pc) << '\n';
    return out.str();
}

std::string significant_dot(const ZScoreTable& table, double z_c) {
    const SignNetwork net = significant_network(table, z_c);
    std::ostringstream out;
    out << "digraph significant_signs {\n";
    for (const SignId& id : net.nodes)
        out << "  \"" << id << "\";\n";
    for (const auto& [pair, w] : net.edges) {
        const ZScoreRow* row = table.find(pair.first, pair.second);
        out << "  \"" << pair.first << "\" -> \"" << pair.second << "\" [weight=" << w
            << ", z=" << format_double(row->z) << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string significant_components_text(const ZScoreTable& table, double z_c) {
    const SignNetwork net = significant_network(table, z_c);
    const auto components = weak_components(net);
    std::ostringstream out;
    out << "threshold: " << format_double(z_c) << '\n';
    out << "edges: " << net.edge_count() << '\n';
    out << "signs: " << net.node_count() << '\n';
    out << "components: " << components.size() << '\n';
    for (std::size_t i = 0; i < components.size(); ++i) {
        out << "component " << i + 1 << " (" << components[i].size() << "): ";
        join_signs(out, components[i]);
        out << '\n';
    }
    return out.str();
}

std::string parse_report_text(const ParseReport& report, const Corpus& corpus) {
    std::ostringstream out;
    out << "sequences_parsed: " << report.sequences.size() << '\n';
    out << "mean_height: " << format_double(report.mean_height) << '\n';
    out << "std_height: " << format_double(report.std_height) << '\n';
    for (const ParsedSequence& parsed : report.sequences) {
        const Sequence& seq = parsed.tree.sequence();
        out << '\n';
        out << "sequence " << parsed.corpus_index + 1 << " length " << seq.size() << " height "
            << parsed.tree.height() << '\n';
        if (!seq.source.empty())
            out << "source: " << seq.source << '\n';
        out << "tree: " << parsed.tree.to_parens() << '\n';
        for (const auto& node : parsed.tree.nodes()) {
            if (parsed.tree.is_leaf(node))
                continue;
            const std::vector<SignId> span = parsed.tree.span_signs(node);
            const auto [subseq, complete] = span_occurrences(corpus, span);
            out << "merge " << node.rank << ": z " << format_double(node.z) << " span "
                << node.span_begin << ".." << node.span_end - 1 << " signs ";
            join_signs(out, span);
            out << " subsequence " << subseq << " complete " << complete << '\n';
        }
    }
    return out.str();
}

std::string fit_text(const PowerLawFit& fit) {
    std::ostringstream out;
    out << "samples_in_range: " << fit.samples << '\n';
    out << "f_min: " << fit.f_min << '\n';
    out << "f_max: " << fit.f_max << '\n';
    out << "alpha: " << format_double(fit.alpha) << '\n';
    out << "gamma: " << format_double(fit.gamma) << '\n';
    out << "zipf_exponent: " << format_double(fit.zipf) << '\n';
    out << "log_likelihood: " << format_double(fit.log_likelihood) << '\n';
    return out.str();
}

std::string truth_csv(const std::vector<PhraseTruth>& truth) {
    std::ostringstream out;
    out << "sequence,slot,class,start,length,signs\n";
    for (const PhraseTruth& row : truth) {
        out << row.sequence << ',' << row.slot << ',' << row.cls << ',' << row.start << ','
            << row.signs.size() << ',';
        for (std::size_t i = 0; i < row.signs.size(); ++i) {
            if (i)
                out << ' ';
            out << row.signs[i];
        }
        out << '\n';
    }
    return out.str();
}

} // namespace seqnet::textio
