#ifndef SEQNET_POWERFIT_HPP
#define SEQNET_POWERFIT_HPP

#include <cstdint>
#include <vector>

#include "corpus.hpp"
#include "rng.hpp"

namespace seqnet {

// (f, fraction of signs with frequency >= f) at every observed frequency.
std::vector<std::pair<std::uint64_t, double>> frequency_ccdf(
    const std::vector<std::pair<SignId, std::size_t>>& frequencies);

// Discrete truncated power law on integers [f_min, f_max] with probability
// mass p(f) proportional to f^-(alpha+1). alpha is the exponent of the
// complementary CDF; the Zipf exponent is 1/alpha.
struct PowerLawFit {
    double alpha = 0.0;
    double gamma = 0.0; // pmf exponent, alpha + 1
    double zipf = 0.0;  // 1 / alpha
    std::uint64_t f_min = 0;
    std::uint64_t f_max = 0;
    std::size_t samples = 0;
    double log_likelihood = 0.0;
};

// Maximum-likelihood fit over the samples falling inside [f_min, f_max];
// golden-section search on alpha in (0.01, 10], absolute tolerance 1e-4.
PowerLawFit fit_power_law(const std::vector<std::uint64_t>& samples, std::uint64_t f_min,
                          std::uint64_t f_max);

// Normalized mass function of the fitted law (index 0 = f_min).
std::vector<double> truncated_power_law_pmf(double gamma, std::uint64_t f_min,
                                            std::uint64_t f_max);

class TruncatedPowerLawSampler {
public:
    TruncatedPowerLawSampler(double gamma, std::uint64_t f_min, std::uint64_t f_max);
    std::uint64_t operator()(Rng& rng) const;

private:
    std::uint64_t f_min_;
    std::vector<double> cumulative_;
};

} // namespace seqnet

#endif
