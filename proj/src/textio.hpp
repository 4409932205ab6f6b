#ifndef SEQNET_TEXTIO_HPP
#define SEQNET_TEXTIO_HPP

#include <string>

#include "cores.hpp"
#include "corpus.hpp"
#include "ensemble.hpp"
#include "network.hpp"
#include "powerfit.hpp"
#include "segment.hpp"
#include "significance.hpp"
#include "synthgen.hpp"

// Plain-text output documents shared by the C API and the CLI. All tabular
// output is CSV with a header row (optional leading '#' summary comments);
// graphs are DOT; everything else is "key: value" lines.
namespace seqnet::textio {

std::string format_double(double v);

std::string corpus_stats(const Corpus& raw);

std::string network_summary(const SignNetwork& net);
std::string network_dot(const SignNetwork& net, const std::string& graph_name = "signs");
std::string network_edges_csv(const SignNetwork& net);
std::string cdf_csv(const std::vector<std::pair<std::uint64_t, double>>& points,
                    const std::string& value_header);
std::string top_q_csv(const std::vector<std::pair<std::size_t, double>>& profile);

std::string ensemble_metric_summary(const std::string& name, double empirical,
                                    const EnsembleStats& stats, const ShufflePlan& plan);
std::string ensemble_metric_values_csv(const std::string& name, double empirical,
                                       const EnsembleStats& stats, const ShufflePlan& plan);
std::string classes_text(const PositionalClasses& classes, std::size_t inventory_size);
std::string positional_histogram_csv(const std::map<std::size_t, std::size_t>& empirical,
                                     const HistogramEnsemble* ensemble);
std::string never_random_text(const NeverRandomRoles& roles, const ShufflePlan& plan);

std::string core_profile_csv(const CoreProfile& profile);
std::string core_profile_ensemble_csv(const CoreProfile& empirical,
                                      const std::vector<CoreProfile>& realizations);
std::string core_sets_text(const CoreProfile& profile);
std::string lexicon_text(const LexiconSets& sets, CoreMode mode);

std::string ztable_csv(const ZScoreTable& table);
std::string zscore_cdf_csv(const ZScoreTable& table);
std::string significant_dot(const ZScoreTable& table, double z_c);
std::string significant_components_text(const ZScoreTable& table, double z_c);

std::string parse_report_text(const ParseReport& report, const Corpus& corpus);

std::string fit_text(const PowerLawFit& fit);

std::string truth_csv(const std::vector<PhraseTruth>& truth);

const char* direction_name(Direction dir);
const char* mode_name(CoreMode mode);

} // namespace seqnet::textio

#endif
