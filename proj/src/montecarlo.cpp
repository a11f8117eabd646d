#include "catphase/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <random>
#include <stdexcept>

#include "catphase/parallel.hpp"

namespace catphase::mc {

namespace {

constexpr double kTableTail = 1e-12;
constexpr long long kShardSize = 1 << 16;

// Cumulative probability table; the last entry absorbs the residual tail
// so a uniform draw always lands in a bin.
std::vector<double> build_cdf(const analytic::CatParams& params) {
    const double mu = params.alpha * params.alpha + params.delta * params.delta;
    const int n_limit = static_cast<int>(4.0 * mu) + 1024;
    std::vector<double> cdf;
    double cum = 0.0;
    for (int n = 0; n <= n_limit; ++n) {
        cum += analytic::photon_probability(params, n);
        cdf.push_back(cum);
        if (cum >= 1.0 - kTableTail) {
            break;
        }
    }
    if (cdf.back() < 1.0 - kTableTail) {
        throw std::runtime_error("mc: probability table failed to accumulate to 1");
    }
    cdf.back() = 1.0;
    return cdf;
}

// Uniform in [0, 1) from the top 53 bits of the generator word.
double uniform53(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

} // namespace

void RngSpec::validate() const {
    if (algorithm != "mt19937_64") {
        throw std::invalid_argument("mc: unknown rng algorithm '" + algorithm + "'");
    }
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double wilson_halfwidth(long long successes, long long trials, double z) {
    if (trials <= 0 || successes < 0 || successes > trials) {
        throw std::invalid_argument("mc: invalid Wilson interval counts");
    }
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    return (z / (1.0 + z2 / n)) * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
}

std::vector<long long> sample_counts(const analytic::CatParams& params, long long shots,
                                     const RngSpec& rng) {
    rng.validate();
    if (shots < 1) {
        throw std::invalid_argument("mc: shots must be >= 1");
    }
    const std::vector<double> cdf = build_cdf(params);
    const long long shards = (shots + kShardSize - 1) / kShardSize;
    std::vector<long long> histogram(cdf.size(), 0);
    std::mutex merge;
    par::parallel_for(shards, [&](long long shard) {
        const long long begin = shard * kShardSize;
        const long long count = std::min(kShardSize, shots - begin);
        std::mt19937_64 gen(derive_seed(rng.seed, static_cast<std::uint64_t>(shard)));
        std::vector<long long> local(cdf.size(), 0);
        for (long long i = 0; i < count; ++i) {
            const double u = uniform53(gen);
            const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
            ++local[static_cast<size_t>(it - cdf.begin())];
        }
        const std::lock_guard<std::mutex> lock(merge);
        for (size_t n = 0; n < local.size(); ++n) {
            histogram[n] += local[n];
        }
    });
    return histogram;
}

DetectionStats detection_experiment(double alpha, double delta_signal, long long shots,
                                    const RngSpec& rng) {
    rng.validate();
    if (shots < 1) {
        throw std::invalid_argument("mc: shots must be >= 1");
    }
    RngSpec signal_rng = rng;
    signal_rng.seed = derive_seed(rng.seed, 0);
    RngSpec null_rng = rng;
    null_rng.seed = derive_seed(rng.seed, 1);

    const std::vector<long long> signal =
        sample_counts(analytic::CatParams(alpha, delta_signal), shots, signal_rng);
    const std::vector<long long> null_run =
        sample_counts(analytic::CatParams(alpha, 0.0), shots, null_rng);

    DetectionStats stats;
    stats.shots = shots;
    stats.seed = rng.seed;
    for (size_t n = 0; n < signal.size(); ++n) {
        if (n % 2 == 1) {
            stats.odd_count += signal[n];
        } else {
            stats.even_count += signal[n];
        }
    }
    long long null_odd = 0;
    for (size_t n = 1; n < null_run.size(); n += 2) {
        null_odd += null_run[n];
    }
    stats.false_negative_rate = static_cast<double>(stats.even_count) / static_cast<double>(shots);
    stats.false_positive_rate = static_cast<double>(null_odd) / static_cast<double>(shots);
    stats.ci_halfwidth = wilson_halfwidth(stats.even_count, shots);
    return stats;
}

} // namespace catphase::mc
