#include "powerfit.hpp"

#include <algorithm>
#include <cmath>

namespace seqnet {

std::vector<std::pair<std::uint64_t, double>> frequency_ccdf(
    const std::vector<std::pair<SignId, std::size_t>>& frequencies) {
    if (frequencies.empty())
        throw ArgumentError("frequency table is empty");
    std::vector<std::uint64_t> values;
    values.reserve(frequencies.size());
    for (const auto& [id, f] : frequencies)
        values.push_back(f);
    std::sort(values.begin(), values.end());
    const double n = static_cast<double>(values.size());
    std::vector<std::pair<std::uint64_t, double>> out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0 && values[i] == values[i - 1])
            continue;
        out.emplace_back(values[i], static_cast<double>(values.size() - i) / n);
    }
    return out;
}

namespace {

double log_partition(double gamma, std::uint64_t f_min, std::uint64_t f_max) {
    double z = 0.0;
    for (std::uint64_t f = f_min; f <= f_max; ++f)
        z += std::pow(static_cast<double>(f), -gamma);
    return std::log(z);
}

} // namespace

PowerLawFit fit_power_law(const std::vector<std::uint64_t>& samples, std::uint64_t f_min,
                          std::uint64_t f_max) {
    if (f_min < 1)
        throw ArgumentError("f_min must be at least 1");
    if (f_max <= f_min)
        throw ArgumentError("f_max must exceed f_min");

    std::vector<std::uint64_t> in_range;
    for (std::uint64_t f : samples)
        if (f >= f_min && f <= f_max)
            in_range.push_back(f);
    if (in_range.size() < 10)
        throw ArgumentError("power-law fit needs at least 10 samples inside [f_min, f_max]");
    const bool degenerate =
        std::all_of(in_range.begin(), in_range.end(), [&](std::uint64_t f) { return f == in_range.front(); });
    if (degenerate)
        throw DomainError("power-law likelihood has no finite optimum: all samples equal");

    double log_sum = 0.0;
    for (std::uint64_t f : in_range)
        log_sum += std::log(static_cast<double>(f));
    const double n = static_cast<double>(in_range.size());

    const auto nll = [&](double alpha) {
        const double gamma = alpha + 1.0;
        return gamma * log_sum + n * log_partition(gamma, f_min, f_max);
    };

    // golden-section search; the likelihood is unimodal in this family
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = 0.01, hi = 10.0;
    double a = hi - inv_phi * (hi - lo);
    double b = lo + inv_phi * (hi - lo);
    double fa = nll(a), fb = nll(b);
    while (hi - lo > 1e-4) {
        if (fa < fb) {
            hi = b;
            b = a;
            fb = fa;
            a = hi - inv_phi * (hi - lo);
            fa = nll(a);
        } else {
            lo = a;
            a = b;
            fa = fb;
            b = lo + inv_phi * (hi - lo);
            fb = nll(b);
        }
    }

    PowerLawFit fit;
    fit.alpha = (lo + hi) / 2.0;
    fit.gamma = fit.alpha + 1.0;
    fit.zipf = 1.0 / fit.alpha;
    fit.f_min = f_min;
    fit.f_max = f_max;
    fit.samples = in_range.size();
    fit.log_likelihood = -nll(fit.alpha);
    return fit;
}

std::vector<double> truncated_power_law_pmf(double gamma, std::uint64_t f_min,
                                            std::uint64_t f_max) {
    if (f_min < 1 || f_max <= f_min)
        throw ArgumentError("invalid power-law support");
    std::vector<double> pmf;
    pmf.reserve(f_max - f_min + 1);
    double total = 0.0;
    for (std::uint64_t f = f_min; f <= f_max; ++f) {
        const double w = std::pow(static_cast<double>(f), -gamma);
        pmf.push_back(w);
        total += w;
    }
    for (double& p : pmf)
        p /= total;
    return pmf;
}

TruncatedPowerLawSampler::TruncatedPowerLawSampler(double gamma, std::uint64_t f_min,
                                                   std::uint64_t f_max)
    : f_min_(f_min) {
    const std::vector<double> pmf = truncated_power_law_pmf(gamma, f_min, f_max);
    cumulative_.reserve(pmf.size());
    double acc = 0.0;
    for (double p : pmf) {
        acc += p;
        cumulative_.push_back(acc);
    }
}

std::uint64_t TruncatedPowerLawSampler::operator()(Rng& rng) const {
    return f_min_ + pick_cumulative(cumulative_, rng);
}

} // namespace seqnet
