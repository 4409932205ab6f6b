#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "powerfit.hpp"

#include <cmath>
#include <numeric>

using namespace seqnet;

TEST_CASE("frequency CCDF at observed values") {
    const std::vector<std::pair<SignId, std::size_t>> freqs = {{"A", 2}, {"B", 1}, {"C", 1}};
    const auto cdf = frequency_ccdf(freqs);
    REQUIRE(cdf.size() == 2);
    CHECK(cdf[0] == std::pair<std::uint64_t, double>{1, 1.0});
    CHECK(cdf[1].first == 2);
    CHECK(cdf[1].second == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("all-equal frequencies give a single-point CCDF") {
    const auto cdf = frequency_ccdf({{"A", 4}, {"B", 4}, {"C", 4}});
    REQUIRE(cdf.size() == 1);
    CHECK(cdf[0] == std::pair<std::uint64_t, double>{4, 1.0});
}

TEST_CASE("REF4 frequencies: P_c(2) = 3/4") {
    const Corpus ref4 = Corpus::parse("A B C\nA B\nB C\nD");
    const auto cdf = frequency_ccdf(ref4.sign_frequencies());
    // frequencies: B=3, A=C=2, D=1
    REQUIRE(cdf.size() == 3);
    CHECK(cdf[0].second == doctest::Approx(1.0));      // P_c(1)
    CHECK(cdf[1].second == doctest::Approx(0.75));     // P_c(2)
    CHECK(cdf[2].second == doctest::Approx(0.25));     // P_c(3)
}

TEST_CASE("truncated pmf is normalized") {
    for (double gamma : {1.2, 1.66, 2.5}) {
        const auto pmf = truncated_power_law_pmf(gamma, 1, 30);
        const double total = std::accumulate(pmf.begin(), pmf.end(), 0.0);
        CHECK(std::abs(total - 1.0) <= 1e-10);
    }
}

TEST_CASE("MLE recovers the generating exponent from 1e5 samples") {
    TruncatedPowerLawSampler sampler(1.66, 1, 30);
    Rng rng = make_rng(802701);
    std::vector<std::uint64_t> samples(100000);
    for (auto& s : samples)
        s = sampler(rng);
    const PowerLawFit fit = fit_power_law(samples, 1, 30);
    CHECK(fit.alpha == doctest::Approx(0.66).epsilon(0.08)); // 0.66 +- 0.05
    CHECK(std::abs(fit.alpha - 0.66) <= 0.05);
    CHECK(fit.gamma == doctest::Approx(fit.alpha + 1.0));
    CHECK(fit.zipf * fit.alpha == doctest::Approx(1.0));
    CHECK(fit.samples == samples.size());
}

TEST_CASE("duplicating every sample leaves the estimate unchanged") {
    TruncatedPowerLawSampler sampler(1.8, 1, 40);
    Rng rng = make_rng(5);
    std::vector<std::uint64_t> samples(2000);
    for (auto& s : samples)
        s = sampler(rng);
    const PowerLawFit once = fit_power_law(samples, 1, 40);
    std::vector<std::uint64_t> doubled = samples;
    doubled.insert(doubled.end(), samples.begin(), samples.end());
    const PowerLawFit twice = fit_power_law(doubled, 1, 40);
    CHECK(once.alpha == doctest::Approx(twice.alpha).epsilon(1e-9));
}

TEST_CASE("degenerate and undersized sample sets are rejected") {
    CHECK_THROWS_AS(fit_power_law({1, 2, 3}, 1, 30), ArgumentError); // < 10 samples
    const std::vector<std::uint64_t> all_fmin(50, 1);
    CHECK_THROWS_AS(fit_power_law(all_fmin, 1, 30), DomainError);
    const std::vector<std::uint64_t> all_same(50, 7);
    CHECK_THROWS_AS(fit_power_law(all_same, 1, 30), DomainError);
    CHECK_THROWS_AS(fit_power_law({1, 2, 1, 2, 1, 2, 1, 2, 1, 2}, 0, 30), ArgumentError);
    CHECK_THROWS_AS(fit_power_law({1, 2, 1, 2, 1, 2, 1, 2, 1, 2}, 5, 5), ArgumentError);
}

TEST_CASE("out-of-range samples are ignored") {
    TruncatedPowerLawSampler sampler(1.66, 1, 30);
    Rng rng = make_rng(12);
    std::vector<std::uint64_t> samples(20000);
    for (auto& s : samples)
        s = sampler(rng);
    std::vector<std::uint64_t> padded = samples;
    for (int i = 0; i < 500; ++i)
        padded.push_back(1000 + static_cast<std::uint64_t>(i)); // outside [1, 30]
    const PowerLawFit a = fit_power_law(samples, 1, 30);
    const PowerLawFit b = fit_power_law(padded, 1, 30);
    CHECK(a.alpha == doctest::Approx(b.alpha).epsilon(1e-9));
    CHECK(b.samples == a.samples);
}

TEST_CASE("sampler draws match the pmf") {
    const double gamma = 1.5;
    TruncatedPowerLawSampler sampler(gamma, 2, 12);
    const auto pmf = truncated_power_law_pmf(gamma, 2, 12);
    Rng rng = make_rng(77);
    std::vector<std::size_t> counts(pmf.size(), 0);
    const std::size_t draws = 200000;
    for (std::size_t i = 0; i < draws; ++i) {
        const std::uint64_t v = sampler(rng);
        REQUIRE(v >= 2);
        REQUIRE(v <= 12);
        ++counts[v - 2];
    }
    for (std::size_t k = 0; k < pmf.size(); ++k) {
        const double expected = pmf[k] * static_cast<double>(draws);
        CHECK(std::abs(counts[k] - expected) <= 4.0 * std::sqrt(expected) + 1.0);
    }
}
