#include "seqnet.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "cores.hpp"
#include "corpus.hpp"
#include "ensemble.hpp"
#include "errors.hpp"
#include "network.hpp"
#include "powerfit.hpp"
#include "segment.hpp"
#include "significance.hpp"
#include "synthgen.hpp"
#include "textio.hpp"

struct seqnet_corpus {
    seqnet::Corpus impl;
};
struct seqnet_network {
    seqnet::SignNetwork impl;
};
struct seqnet_ztable {
    seqnet::ZScoreTable impl;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Runs fn, translating C++ errors into status codes.
template <typename Fn>
seqnet_status guarded(Fn&& fn) {
    try {
        fn();
        return SEQNET_OK;
    } catch (const seqnet::ParseError& e) {
        set_error(e.what());
        return SEQNET_ERR_PARSE;
    } catch (const seqnet::ArgumentError& e) {
        set_error(e.what());
        return SEQNET_ERR_ARGUMENT;
    } catch (const seqnet::DomainError& e) {
        set_error(e.what());
        return SEQNET_ERR_DOMAIN;
    } catch (const seqnet::IoError& e) {
        set_error(e.what());
        return SEQNET_ERR_IO;
    } catch (const std::exception& e) {
        set_error(e.what());
        return SEQNET_ERR_INTERNAL;
    }
}

seqnet_status require(bool ok, const char* message) {
    if (ok)
        return SEQNET_OK;
    set_error(message);
    return SEQNET_ERR_ARGUMENT;
}

void emit(char** out, const std::string& text) {
    *out = dup_string(text);
    if (!*out)
        throw std::bad_alloc();
}

seqnet::Direction to_direction(seqnet_direction dir) {
    return dir == SEQNET_DIR_IN ? seqnet::Direction::In : seqnet::Direction::Out;
}

seqnet::CoreMode to_mode(seqnet_mode mode) {
    return mode == SEQNET_MODE_DEGREE ? seqnet::CoreMode::Degree : seqnet::CoreMode::Strength;
}

seqnet::ShufflePlan make_plan(uint64_t seed, size_t realizations, unsigned threads) {
    seqnet::ShufflePlan plan;
    plan.master_seed = seed;
    plan.realizations = realizations;
    plan.threads = threads == 0 ? 1 : threads;
    return plan;
}

} // namespace

extern "C" {

const char* seqnet_version(void) { return "1.0.0"; }

const char* seqnet_last_error(void) { return g_last_error.c_str(); }

void seqnet_string_free(char* s) { std::free(s); }

/* ---- corpus ------------------------------------------------------------ */

seqnet_status seqnet_corpus_parse(const char* text, seqnet_corpus** out) {
    if (seqnet_status s = require(text && out, "null argument"))
        return s;
    return guarded([&] { *out = new seqnet_corpus{seqnet::Corpus::parse(text)}; });
}

seqnet_status seqnet_corpus_load(const char* path, seqnet_corpus** out) {
    if (seqnet_status s = require(path && out, "null argument"))
        return s;
    return guarded([&] { *out = new seqnet_corpus{seqnet::Corpus::load_file(path)}; });
}

seqnet_status seqnet_corpus_dedup(const seqnet_corpus* corpus, seqnet_corpus** out) {
    if (seqnet_status s = require(corpus && out, "null argument"))
        return s;
    return guarded([&] { *out = new seqnet_corpus{corpus->impl.dedup()}; });
}

void seqnet_corpus_free(seqnet_corpus* corpus) { delete corpus; }

size_t seqnet_corpus_sequences(const seqnet_corpus* corpus) {
    return corpus ? corpus->impl.sequence_count() : 0;
}

size_t seqnet_corpus_inventory_size(const seqnet_corpus* corpus) {
    return corpus ? corpus->impl.inventory().size() : 0;
}

uint64_t seqnet_corpus_tokens(const seqnet_corpus* corpus) {
    return corpus ? corpus->impl.total_sign_occurrences() : 0;
}

uint64_t seqnet_corpus_bigrams(const seqnet_corpus* corpus) {
    return corpus ? corpus->impl.bigram_count() : 0;
}

seqnet_status seqnet_corpus_stats_text(const seqnet_corpus* corpus, char** out) {
    if (seqnet_status s = require(corpus && out, "null argument"))
        return s;
    return guarded([&] { emit(out, seqnet::textio::corpus_stats(corpus->impl)); });
}

seqnet_status seqnet_corpus_serialize(const seqnet_corpus* corpus, char** out) {
    if (seqnet_status s = require(corpus && out, "null argument"))
        return s;
    return guarded([&] { emit(out, corpus->impl.serialize()); });
}

/* ---- adjacency network -------------------------------------------------- */

seqnet_status seqnet_network_build(const seqnet_corpus* corpus, seqnet_network** out) {
    if (seqnet_status s = require(corpus && out, "null argument"))
        return s;
    return guarded([&] { *out = new seqnet_network{seqnet::build_network(corpus->impl)}; });
}

void seqnet_network_free(seqnet_network* net) { delete net; }

size_t seqnet_network_nodes(const seqnet_network* net) { return net ? net->impl.node_count() : 0; }

size_t seqnet_network_edges(const seqnet_network* net) { return net ? net->impl.edge_count() : 0; }

seqnet_status seqnet_network_reciprocity(const seqnet_network* net, double* out) {
    if (seqnet_status s = require(net && out, "null argument"))
        return s;
    return guarded([&] { *out = seqnet::reciprocity(net->impl); });
}

seqnet_status seqnet_network_connectivity(const seqnet_network* net, double* out) {
    if (seqnet_status s = require(net && out, "null argument"))
        return s;
    return guarded([&] { *out = seqnet::connectivity(net->impl); });
}

seqnet_status seqnet_network_summary_text(const seqnet_network* net, char** out) {
    if (seqnet_status s = require(net && out, "null argument"))
        return s;
    return guarded([&] { emit(out, seqnet::textio::network_summary(net->impl)); });
}

seqnet_status seqnet_network_dot(const seqnet_network* net, char** out) {
    if (seqnet_status s = require(net && out, "null argument"))
        return s;
    return guarded([&] { emit(out, seqnet::textio::network_dot(net->impl)); });
}

seqnet_status seqnet_network_edges_csv(const seqnet_network* net, char** out) {
    if (seqnet_status s = require(net && out, "null argument"))
        return s;
    return guarded([&] { emit(out, seqnet::textio::network_edges_csv(net->impl)); });
}

seqnet_status seqnet_network_cdf_csv(const seqnet_network* net, seqnet_direction dir,
                                     seqnet_mode mode, char** out) {
    if (seqnet_status s = require(net && out, "null argument"))
        return s;
    return guarded([&] {
        const auto points = mode == SEQNET_MODE_DEGREE
                                ? seqnet::degree_ccdf(net->impl, to_direction(dir))
                                : seqnet::strength_ccdf(net->impl, to_direction(dir));
        emit(out, seqnet::textio::cdf_csv(points, mode == SEQNET_MODE_DEGREE ? "k" : "s"));
    });
}

seqnet_status seqnet_top_q_connectivity(const seqnet_corpus* corpus, size_t q, double* out) {
    if (seqnet_status s = require(corpus && out, "null argument"))
        return s;
    return guarded([&] { *out = seqnet::top_q_connectivity(corpus->impl, q); });
}

seqnet_status seqnet_top_q_profile_csv(const seqnet_corpus* corpus, char** out) {
    if (seqnet_status s = require(corpus && out, "null argument"))
        return s;
    return guarded([&] { emit(out, seqnet::textio::top_q_csv(seqnet::top_q_profile(corpus->impl))); });
}

/* ---- shuffle ensemble ---------------------------------------------------- */

seqnet_status seqnet_ensemble_metric_text(const seqnet_corpus* corpus, const char* metric,
                                          uint64_t seed, size_t realizations, unsigned threads,
                                          int with_values, char** out) {
    if (seqnet_status s = require(corpus && metric && out, "null argument"))
        return s;
    return guarded([&] {
        const seqnet::CorpusMetric fn = seqnet::metric_by_name(metric);
        const seqnet::ShufflePlan plan = make_plan(seed, realizations, threads);
        const double empirical = fn(corpus->impl);
        const seqnet::EnsembleStats stats = seqnet::randomized_metric(corpus->impl, fn, plan);
        emit(out, with_values
                      ? seqnet::textio::ensemble_metric_values_csv(metric, empirical, stats, plan)
                      : seqnet::textio::ensemble_metric_summary(metric, empirical, stats, plan));
    });
}

seqnet_status seqnet_classify_text(const seqnet_corpus* corpus, char** out) {
    if (seqnet_status s = require(corpus && out, "null argument"))
        return s;
    return guarded([&] {
        emit(out, seqnet::textio::classes_text(seqnet::classify_positions(corpus->impl),
                                               corpus->impl.inventory().size()));
    });
}

seqnet_status seqnet_positional_histogram_csv(const seqnet_corpus* corpus, const char* class_name,
                                              uint64_t seed, size_t realizations, unsigned threads,
                                              char** out) {
    if (seqnet_status s = require(corpus && class_name && out, "null argument"))
        return s;
    return guarded([&] {
        const std::string name = class_name;
        seqnet::PositionalClass cls;
        if (name == "beginner")
            cls = seqnet::PositionalClass::Beginner;
        else if (name == "ender")
            cls = seqnet::PositionalClass::Ender;
        else
            throw seqnet::ArgumentError("class must be 'beginner' or 'ender'");
        const auto empirical = seqnet::positional_frequency_histogram(corpus->impl, cls);
        if (realizations == 0) {
            emit(out, seqnet::textio::positional_histogram_csv(empirical, nullptr));
            return;
        }
        const seqnet::ShufflePlan plan = make_plan(seed, realizations, threads);
        const auto ensemble = seqnet::positional_histogram_ensemble(corpus->impl, cls, plan);
        emit(out, seqnet::textio::positional_histogram_csv(empirical, &ensemble));
    });
}

seqnet_status seqnet_never_random_text(const seqnet_corpus* corpus, uint64_t seed,
                                       size_t realizations, unsigned threads, char** out) {
    if (seqnet_status s = require(corpus && out, "null argument"))
        return s;
    return guarded([&] {
        const seqnet::ShufflePlan plan = make_plan(seed, realizations, threads);
        emit(out, seqnet::textio::never_random_text(seqnet::never_random_roles(corpus->impl, plan),
                                                    plan));
    });
}

/* ---- core decomposition -------------------------------------------------- */

seqnet_status seqnet_core_profile_csv(const seqnet_network* net, seqnet_direction dir,
                                      seqnet_mode mode, char** out) {
    if (seqnet_status s = require(net && out, "null argument"))
        return s;
    return guarded([&] {
        emit(out, seqnet::textio::core_profile_csv(
                      seqnet::core_profile(net->impl, to_direction(dir), to_mode(mode))));
    });
}

seqnet_status seqnet_core_profile_ensemble_csv(const seqnet_corpus* corpus, seqnet_direction dir,
                                               seqnet_mode mode, uint64_t seed,
                                               size_t realizations, unsigned threads, char** out) {
    if (seqnet_status s = require(corpus && out, "null argument"))
        return s;
    return guarded([&] {
        if (realizations < 2)
            throw seqnet::ArgumentError("ensemble standard deviation needs at least 2 realizations");
        const seqnet::CoreProfile empirical =
            seqnet::core_profile(seqnet::build_network(corpus->impl), to_direction(dir), to_mode(mode));
        std::vector<seqnet::CoreProfile> profiles(realizations);
        seqnet::for_each_realization(realizations, threads == 0 ? 1 : threads, [&](size_t i) {
            seqnet::Rng rng = seqnet::make_rng(seqnet::child_seed(seed, i));
            profiles[i] = seqnet::core_profile(
                seqnet::build_network(seqnet::shuffle_corpus(corpus->impl, rng)), to_direction(dir),
                to_mode(mode));
        });
        emit(out, seqnet::textio::core_profile_ensemble_csv(empirical, profiles));
    });
}

seqnet_status seqnet_core_sets_text(const seqnet_network* net, seqnet_direction dir,
                                    seqnet_mode mode, char** out) {
    if (seqnet_status s = require(net && out, "null argument"))
        return s;
    return guarded([&] {
        emit(out, seqnet::textio::core_sets_text(
                      seqnet::core_profile(net->impl, to_direction(dir), to_mode(mode))));
    });
}

seqnet_status seqnet_lexicon_text(const seqnet_network* net, seqnet_mode mode, char** out) {
    if (seqnet_status s = require(net && out, "null argument"))
        return s;
    return guarded([&] {
        emit(out, seqnet::textio::lexicon_text(seqnet::lexicon_sets(net->impl, to_mode(mode)),
                                               to_mode(mode)));
    });
}

/* ---- pair significance ---------------------------------------------------- */

seqnet_status seqnet_ztable_compute(const seqnet_corpus* corpus, uint64_t seed,
                                    size_t realizations, unsigned threads, int include_absent,
                                    seqnet_ztable** out) {
    if (seqnet_status s = require(corpus && out, "null argument"))
        return s;
    return guarded([&] {
        const seqnet::ShufflePlan plan = make_plan(seed, realizations, threads);
        *out = new seqnet_ztable{
            seqnet::ZScoreTable::compute(corpus->impl, plan, include_absent != 0)};
    });
}

void seqnet_ztable_free(seqnet_ztable* table) { delete table; }

size_t seqnet_ztable_rows(const seqnet_ztable* table) {
    return table ? table->impl.rows().size() : 0;
}

seqnet_status seqnet_ztable_csv(const seqnet_ztable* table, char** out) {
    if (seqnet_status s = require(table && out, "null argument"))
        return s;
    return guarded([&] { emit(out, seqnet::textio::ztable_csv(table->impl)); });
}

seqnet_status seqnet_ztable_cdf_csv(const seqnet_ztable* table, char** out) {
    if (seqnet_status s = require(table && out, "null argument"))
        return s;
    return guarded([&] { emit(out, seqnet::textio::zscore_cdf_csv(table->impl)); });
}

seqnet_status seqnet_significant_dot(const seqnet_ztable* table, double z_c, char** out) {
    if (seqnet_status s = require(table && out, "null argument"))
        return s;
    return guarded([&] { emit(out, seqnet::textio::significant_dot(table->impl, z_c)); });
}

seqnet_status seqnet_significant_components_text(const seqnet_ztable* table, double z_c,
                                                 char** out) {
    if (seqnet_status s = require(table && out, "null argument"))
        return s;
    return guarded([&] { emit(out, seqnet::textio::significant_components_text(table->impl, z_c)); });
}

/* ---- segmentation trees --------------------------------------------------- */

seqnet_status seqnet_parse_report_text(const seqnet_corpus* corpus, const seqnet_ztable* table,
                                       size_t min_len, char** out) {
    if (seqnet_status s = require(corpus && table && out, "null argument"))
        return s;
    return guarded([&] {
        const seqnet::ParseReport report =
            seqnet::parse_long_sequences(corpus->impl, min_len, table->impl);
        emit(out, seqnet::textio::parse_report_text(report, corpus->impl));
    });
}

/* ---- sign-frequency power law --------------------------------------------- */

seqnet_status seqnet_frequency_cdf_csv(const seqnet_corpus* corpus, char** out) {
    if (seqnet_status s = require(corpus && out, "null argument"))
        return s;
    return guarded([&] {
        const auto points = seqnet::frequency_ccdf(corpus->impl.sign_frequencies());
        emit(out, seqnet::textio::cdf_csv(points, "f"));
    });
}

seqnet_status seqnet_fit_power_law_text(const seqnet_corpus* corpus, uint64_t f_min,
                                        uint64_t f_max, char** out) {
    if (seqnet_status s = require(corpus && out, "null argument"))
        return s;
    return guarded([&] {
        std::vector<uint64_t> samples;
        for (const auto& [id, f] : corpus->impl.frequencies())
            samples.push_back(f);
        emit(out, seqnet::textio::fit_text(seqnet::fit_power_law(samples, f_min, f_max)));
    });
}

/* ---- synthetic corpora ----------------------------------------------------- */

seqnet_status seqnet_generate_null(size_t sign_count, double gamma, size_t len_min,
                                   size_t len_max, size_t count, uint64_t seed,
                                   seqnet_corpus** out) {
    if (seqnet_status s = require(out != nullptr, "null argument"))
        return s;
    return guarded([&] {
        const seqnet::NullSpec spec =
            gamma == 0.0 ? seqnet::uniform_null_spec(sign_count, len_min, len_max)
                         : seqnet::power_law_null_spec(sign_count, gamma, len_min, len_max);
        *out = new seqnet_corpus{seqnet::generate_null_corpus(spec, count, seed)};
    });
}

seqnet_status seqnet_generate_grammar(const char* grammar_text, size_t count, uint64_t seed,
                                      seqnet_corpus** out, char** truth_csv) {
    if (seqnet_status s = require(grammar_text && out, "null argument"))
        return s;
    return guarded([&] {
        const seqnet::PhraseGrammar grammar = seqnet::PhraseGrammar::parse(grammar_text);
        seqnet::GrammarCorpus result = seqnet::generate_grammar_corpus(grammar, count, seed);
        if (truth_csv)
            emit(truth_csv, seqnet::textio::truth_csv(result.truth));
        *out = new seqnet_corpus{std::move(result.corpus)};
    });
}

} // extern "C"
