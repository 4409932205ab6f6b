// seqnet command-line tool. Everything goes through the C API in seqnet.h;
// this file owns argument parsing, file IO, and exit codes only.
#include "seqnet.h"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

[[noreturn]] void fail(seqnet_status status) {
    std::cerr << "seqnet: " << seqnet_last_error() << '\n';
    std::exit(status == SEQNET_ERR_ARGUMENT ? kExitUsage : kExitData);
}

void check(seqnet_status status) {
    if (status != SEQNET_OK)
        fail(status);
}

struct CorpusDeleter {
    void operator()(seqnet_corpus* c) const { seqnet_corpus_free(c); }
};
struct NetworkDeleter {
    void operator()(seqnet_network* n) const { seqnet_network_free(n); }
};
struct ZTableDeleter {
    void operator()(seqnet_ztable* t) const { seqnet_ztable_free(t); }
};
using CorpusPtr = std::unique_ptr<seqnet_corpus, CorpusDeleter>;
using NetworkPtr = std::unique_ptr<seqnet_network, NetworkDeleter>;
using ZTablePtr = std::unique_ptr<seqnet_ztable, ZTableDeleter>;

std::string take_string(char* s) {
    std::string out = s ? s : "";
    seqnet_string_free(s);
    return out;
}

// Analysis inputs are deduplicated on load; `stats` reads the raw corpus.
CorpusPtr load_corpus(const std::string& path, bool dedup) {
    seqnet_corpus* raw = nullptr;
    check(seqnet_corpus_load(path.c_str(), &raw));
    CorpusPtr corpus(raw);
    if (!dedup)
        return corpus;
    seqnet_corpus* unique = nullptr;
    check(seqnet_corpus_dedup(corpus.get(), &unique));
    return CorpusPtr(unique);
}

NetworkPtr build_network(const seqnet_corpus* corpus) {
    seqnet_network* net = nullptr;
    check(seqnet_network_build(corpus, &net));
    return NetworkPtr(net);
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::fwrite(content.data(), 1, content.size(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << content)) {
        std::cerr << "seqnet: cannot write output file: " << path << '\n';
        std::exit(kExitData);
    }
}

struct CommonOpts {
    std::string input;
    std::string output;
    unsigned threads = 1;
};

struct PlanOpts {
    std::uint64_t seed = 0;
    std::size_t realizations = 0;
};

void add_input(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("input", opts.input, "corpus file")->required();
}

void add_plan(CLI::App* cmd, PlanOpts& plan, bool required = true) {
    auto* n = cmd->add_option("--n", plan.realizations, "number of shuffle realizations");
    auto* seed = cmd->add_option("--seed", plan.seed, "master seed (stochastic runs demand one)");
    if (required) {
        n->required();
        seed->required();
    } else {
        n->needs(seed);
        seed->needs(n);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"statistical network analysis of sign-sequence corpora"};
    app.require_subcommand(1);
    app.set_version_flag("--version", seqnet_version());

    CommonOpts opts;
    app.add_option("--threads", opts.threads, "worker thread cap (default 1)")
        ->check(CLI::Range(1u, 256u));
    app.add_option("-o,--output", opts.output, "write output to a file instead of stdout");

    // stats ------------------------------------------------------------
    auto* stats = app.add_subcommand("stats", "corpus summary (counts, lengths, duplicates)");
    add_input(stats, opts);

    // network ----------------------------------------------------------
    auto* network = app.add_subcommand("network", "adjacency network exports and statistics");
    add_input(network, opts);
    bool net_dot = false, net_edges = false, net_topq = false;
    std::string net_cdf, net_direction;
    network->add_flag("--dot", net_dot, "emit the graph in DOT format");
    network->add_flag("--edges", net_edges, "emit edges as CSV (source,target,weight)");
    network->add_option("--cdf", net_cdf, "emit a complementary CDF: degree or strength")
        ->check(CLI::IsMember({"degree", "strength"}));
    network->add_option("--direction", net_direction, "in or out (with --cdf)")
        ->check(CLI::IsMember({"in", "out"}));
    network->add_flag("--topq", net_topq, "emit connectivity of top-q subnetworks, q=2..N");

    // ensemble ----------------------------------------------------------
    auto* ensemble = app.add_subcommand("ensemble", "shuffle-null comparisons");
    ensemble->require_subcommand(1);
    auto* ens_metric = ensemble->add_subcommand("metric", "empirical vs ensemble value of a metric");
    add_input(ens_metric, opts);
    std::string metric_name;
    bool metric_values = false;
    ens_metric->add_option("--name", metric_name, "metric name (see README)")->required();
    ens_metric->add_flag("--values", metric_values, "emit per-realization values as CSV");
    PlanOpts metric_plan;
    add_plan(ens_metric, metric_plan);

    auto* ens_posfreq = ensemble->add_subcommand("posfreq",
                                                 "distinct-sequence histogram for a class");
    add_input(ens_posfreq, opts);
    std::string posfreq_class;
    ens_posfreq->add_option("--class", posfreq_class, "beginner or ender")
        ->required()
        ->check(CLI::IsMember({"beginner", "ender"}));
    PlanOpts posfreq_plan;
    add_plan(ens_posfreq, posfreq_plan, /*required=*/false);

    auto* ens_never = ensemble->add_subcommand("never",
                                               "signs never holding their role in any realization");
    add_input(ens_never, opts);
    PlanOpts never_plan;
    add_plan(ens_never, never_plan);

    // classify -----------------------------------------------------------
    auto* classify = app.add_subcommand("classify", "solo/beginner/ender/dual/medial sign classes");
    add_input(classify, opts);

    // cores ---------------------------------------------------------------
    auto* cores = app.add_subcommand("cores", "k-core / s-core decomposition");
    add_input(cores, opts);
    std::string core_mode = "degree", core_direction = "in";
    bool core_sets = false, core_lexicon = false;
    cores->add_option("--mode", core_mode, "degree or strength")
        ->check(CLI::IsMember({"degree", "strength"}));
    cores->add_option("--direction", core_direction, "in or out")
        ->check(CLI::IsMember({"in", "out"}));
    cores->add_flag("--sets", core_sets, "emit the innermost core set instead of the profile");
    cores->add_flag("--lexicon", core_lexicon,
                    "emit medial/preceder/follower sets from both directions");
    PlanOpts core_plan;
    add_plan(cores, core_plan, /*required=*/false);

    // zscore ---------------------------------------------------------------
    auto* zscore = app.add_subcommand("zscore", "pair z-scores against the shuffle null");
    add_input(zscore, opts);
    bool z_cdf = false, z_absent = false;
    zscore->add_flag("--cdf", z_cdf, "emit the z-score complementary CDF");
    zscore->add_flag("--include-absent", z_absent,
                     "also tabulate pairs seen only in the ensemble");
    PlanOpts z_plan;
    add_plan(zscore, z_plan);

    // signet -----------------------------------------------------------------
    auto* signet = app.add_subcommand("signet", "network of significant pairs above a threshold");
    add_input(signet, opts);
    double z_c = 0.0;
    bool signet_components = false;
    signet->add_option("--zc", z_c, "z-score threshold")->required();
    signet->add_flag("--components", signet_components,
                     "emit the component listing instead of DOT");
    PlanOpts signet_plan;
    add_plan(signet, signet_plan);

    // parse ---------------------------------------------------------------
    auto* parse = app.add_subcommand("parse", "segmentation trees of long sequences");
    add_input(parse, opts);
    std::size_t min_len = 10;
    parse->add_option("--min-len", min_len, "minimum sequence length (default 10)");
    PlanOpts parse_plan;
    add_plan(parse, parse_plan);

    // fit ------------------------------------------------------------------
    auto* fit = app.add_subcommand("fit", "power-law fit of the sign-frequency distribution");
    add_input(fit, opts);
    std::uint64_t f_min = 1, f_max = 30;
    bool fit_cdf = false;
    fit->add_option("--fmin", f_min, "lower fit bound (default 1)");
    fit->add_option("--fmax", f_max, "upper fit bound (default 30)");
    fit->add_flag("--cdf", fit_cdf, "emit the frequency complementary CDF instead of fitting");

    // synth -------------------------------------------------------------------
    auto* synth = app.add_subcommand("synth", "synthetic corpus generation");
    synth->require_subcommand(1);
    auto* synth_null = synth->add_subcommand("null", "independent-sign null corpus");
    std::size_t null_signs = 0, null_count = 0, null_min_len = 1, null_max_len = 13;
    double null_gamma = 0.0;
    std::uint64_t null_seed = 0;
    synth_null->add_option("--signs", null_signs, "inventory size")->required();
    synth_null->add_option("--count", null_count, "number of sequences")->required();
    synth_null->add_option("--seed", null_seed, "generator seed")->required();
    synth_null->add_option("--gamma", null_gamma,
                           "frequency-distribution pmf exponent (omit for uniform signs)");
    synth_null->add_option("--min-len", null_min_len, "minimum sequence length (default 1)");
    synth_null->add_option("--max-len", null_max_len, "maximum sequence length (default 13)");

    auto* synth_grammar = synth->add_subcommand("grammar", "phrase-grammar corpus");
    std::string grammar_spec, truth_path;
    std::size_t grammar_count = 0;
    std::uint64_t grammar_seed = 0;
    synth_grammar->add_option("--spec", grammar_spec, "grammar definition file")->required();
    synth_grammar->add_option("--count", grammar_count, "number of sequences")->required();
    synth_grammar->add_option("--seed", grammar_seed, "generator seed")->required();
    synth_grammar->add_option("--truth", truth_path,
                              "also write ground-truth phrase spans (CSV) to this file");

    // global --threads / -o may appear anywhere, including after subcommands
    for (CLI::App* sub : app.get_subcommands(nullptr)) {
        sub->fallthrough();
        for (CLI::App* nested : sub->get_subcommands(nullptr))
            nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion")
            return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    const unsigned threads = opts.threads;

    if (*stats) {
        const CorpusPtr corpus = load_corpus(opts.input, /*dedup=*/false);
        char* text = nullptr;
        check(seqnet_corpus_stats_text(corpus.get(), &text));
        write_output(opts.output, take_string(text));
    } else if (*network) {
        const int picked = (net_dot ? 1 : 0) + (net_edges ? 1 : 0) + (!net_cdf.empty() ? 1 : 0) +
                           (net_topq ? 1 : 0);
        if (picked > 1) {
            std::cerr << "seqnet: choose at most one of --dot, --edges, --cdf, --topq\n";
            return kExitUsage;
        }
        const CorpusPtr corpus = load_corpus(opts.input, true);
        char* text = nullptr;
        if (net_topq) {
            check(seqnet_top_q_profile_csv(corpus.get(), &text));
        } else {
            const NetworkPtr net = build_network(corpus.get());
            if (net_dot) {
                check(seqnet_network_dot(net.get(), &text));
            } else if (net_edges) {
                check(seqnet_network_edges_csv(net.get(), &text));
            } else if (!net_cdf.empty()) {
                if (net_direction.empty()) {
                    std::cerr << "seqnet: --cdf needs --direction in|out\n";
                    return kExitUsage;
                }
                check(seqnet_network_cdf_csv(
                    net.get(), net_direction == "in" ? SEQNET_DIR_IN : SEQNET_DIR_OUT,
                    net_cdf == "degree" ? SEQNET_MODE_DEGREE : SEQNET_MODE_STRENGTH, &text));
            } else {
                check(seqnet_network_summary_text(net.get(), &text));
            }
        }
        write_output(opts.output, take_string(text));
    } else if (*ens_metric) {
        const CorpusPtr corpus = load_corpus(opts.input, true);
        char* text = nullptr;
        check(seqnet_ensemble_metric_text(corpus.get(), metric_name.c_str(), metric_plan.seed,
                                          metric_plan.realizations, threads,
                                          metric_values ? 1 : 0, &text));
        write_output(opts.output, take_string(text));
    } else if (*ens_posfreq) {
        const CorpusPtr corpus = load_corpus(opts.input, true);
        char* text = nullptr;
        check(seqnet_positional_histogram_csv(corpus.get(), posfreq_class.c_str(),
                                              posfreq_plan.seed, posfreq_plan.realizations,
                                              threads, &text));
        write_output(opts.output, take_string(text));
    } else if (*ens_never) {
        const CorpusPtr corpus = load_corpus(opts.input, true);
        char* text = nullptr;
        check(seqnet_never_random_text(corpus.get(), never_plan.seed, never_plan.realizations,
                                       threads, &text));
        write_output(opts.output, take_string(text));
    } else if (*classify) {
        const CorpusPtr corpus = load_corpus(opts.input, true);
        char* text = nullptr;
        check(seqnet_classify_text(corpus.get(), &text));
        write_output(opts.output, take_string(text));
    } else if (*cores) {
        if (core_lexicon && core_sets) {
            std::cerr << "seqnet: choose at most one of --sets, --lexicon\n";
            return kExitUsage;
        }
        if (core_plan.realizations > 0 && (core_sets || core_lexicon)) {
            std::cerr << "seqnet: the ensemble comparison applies to the profile output only\n";
            return kExitUsage;
        }
        const CorpusPtr corpus = load_corpus(opts.input, true);
        const seqnet_direction dir = core_direction == "in" ? SEQNET_DIR_IN : SEQNET_DIR_OUT;
        const seqnet_mode mode =
            core_mode == "degree" ? SEQNET_MODE_DEGREE : SEQNET_MODE_STRENGTH;
        char* text = nullptr;
        if (core_plan.realizations > 0 && !core_sets && !core_lexicon) {
            check(seqnet_core_profile_ensemble_csv(corpus.get(), dir, mode, core_plan.seed,
                                                   core_plan.realizations, threads, &text));
        } else {
            const NetworkPtr net = build_network(corpus.get());
            if (core_lexicon)
                check(seqnet_lexicon_text(net.get(), mode, &text));
            else if (core_sets)
                check(seqnet_core_sets_text(net.get(), dir, mode, &text));
            else
                check(seqnet_core_profile_csv(net.get(), dir, mode, &text));
        }
        write_output(opts.output, take_string(text));
    } else if (*zscore) {
        const CorpusPtr corpus = load_corpus(opts.input, true);
        seqnet_ztable* raw = nullptr;
        check(seqnet_ztable_compute(corpus.get(), z_plan.seed, z_plan.realizations, threads,
                                    z_absent ? 1 : 0, &raw));
        const ZTablePtr table(raw);
        char* text = nullptr;
        if (z_cdf)
            check(seqnet_ztable_cdf_csv(table.get(), &text));
        else
            check(seqnet_ztable_csv(table.get(), &text));
        write_output(opts.output, take_string(text));
    } else if (*signet) {
        const CorpusPtr corpus = load_corpus(opts.input, true);
        seqnet_ztable* raw = nullptr;
        check(seqnet_ztable_compute(corpus.get(), signet_plan.seed, signet_plan.realizations,
                                    threads, 0, &raw));
        const ZTablePtr table(raw);
        char* text = nullptr;
        if (signet_components)
            check(seqnet_significant_components_text(table.get(), z_c, &text));
        else
            check(seqnet_significant_dot(table.get(), z_c, &text));
        write_output(opts.output, take_string(text));
    } else if (*parse) {
        const CorpusPtr corpus = load_corpus(opts.input, true);
        seqnet_ztable* raw = nullptr;
        check(seqnet_ztable_compute(corpus.get(), parse_plan.seed, parse_plan.realizations,
                                    threads, 0, &raw));
        const ZTablePtr table(raw);
        char* text = nullptr;
        check(seqnet_parse_report_text(corpus.get(), table.get(), min_len, &text));
        write_output(opts.output, take_string(text));
    } else if (*fit) {
        const CorpusPtr corpus = load_corpus(opts.input, true);
        char* text = nullptr;
        if (fit_cdf)
            check(seqnet_frequency_cdf_csv(corpus.get(), &text));
        else
            check(seqnet_fit_power_law_text(corpus.get(), f_min, f_max, &text));
        write_output(opts.output, take_string(text));
    } else if (*synth_null) {
        seqnet_corpus* raw = nullptr;
        check(seqnet_generate_null(null_signs, null_gamma, null_min_len, null_max_len, null_count,
                                   null_seed, &raw));
        const CorpusPtr corpus(raw);
        char* text = nullptr;
        check(seqnet_corpus_serialize(corpus.get(), &text));
        write_output(opts.output, take_string(text));
    } else if (*synth_grammar) {
        std::ifstream in(grammar_spec, std::ios::binary);
        if (!in) {
            std::cerr << "seqnet: cannot open grammar file: " << grammar_spec << '\n';
            return kExitData;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        const std::string grammar_text = buf.str();
        seqnet_corpus* raw = nullptr;
        char* truth = nullptr;
        check(seqnet_generate_grammar(grammar_text.c_str(), grammar_count, grammar_seed, &raw,
                                      truth_path.empty() ? nullptr : &truth));
        const CorpusPtr corpus(raw);
        if (!truth_path.empty())
            write_output(truth_path, take_string(truth));
        char* text = nullptr;
        check(seqnet_corpus_serialize(corpus.get(), &text));
        write_output(opts.output, take_string(text));
    }
    return 0;
}
