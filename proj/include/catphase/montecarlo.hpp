#ifndef CATPHASE_MONTECARLO_HPP
#define CATPHASE_MONTECARLO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "catphase/analytic.hpp"

// Simulated photon-counting campaigns on the displaced cat state. Photon
// numbers are drawn by inverse-CDF lookup on the exact probability table,
// so outcomes with exactly zero mass (odd levels at delta = 0) can never
// be sampled, whatever the seed.

namespace catphase::mc {

struct RngSpec {
    std::uint64_t seed = 0;
    // Only "mt19937_64" is implemented: std::mt19937_64 streams, uniforms
    // formed from the top 53 bits. Recorded in outputs for replayability.
    std::string algorithm = "mt19937_64";

    void validate() const;
};

struct DetectionStats {
    long long shots = 0;
    long long odd_count = 0;          // signal campaign, "signal present" verdicts
    long long even_count = 0;         // signal campaign misses
    double false_negative_rate = 0.0; // even fraction of signal runs
    double false_positive_rate = 0.0; // odd fraction of null runs
    double ci_halfwidth = 0.0;        // Wilson 95% half-width on false_negative_rate
    std::uint64_t seed = 0;
};

// Sub-stream seed for shard/campaign `index`, splitmix64 finalizer over
// seed + (index+1) * golden ratio increment. Documented so shards can be
// regenerated independently.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// Wilson score interval half-width at confidence z (default 95%).
double wilson_halfwidth(long long successes, long long trials,
                        double z = 1.959963984540054);

// Draws `shots` i.i.d. photon numbers; histogram[n] counts outcomes with n
// photons and sums to shots. Sampling shards into fixed-size blocks with
// derived sub-seeds, so the result is independent of the worker count.
std::vector<long long> sample_counts(const analytic::CatParams& params, long long shots,
                                     const RngSpec& rng);

// Signal campaign at delta_signal plus a null campaign at delta = 0 under
// derived sub-seeds; odd outcome means "signal present".
DetectionStats detection_experiment(double alpha, double delta_signal, long long shots,
                                    const RngSpec& rng);

} // namespace catphase::mc

#endif
