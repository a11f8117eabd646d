#ifndef CATPHASE_ANALYTIC_HPP
#define CATPHASE_ANALYTIC_HPP

#include <stdexcept>

// Closed-form expressions for the displaced even cat state: state overlap
// and its zeros, parity, photon-number statistics, and the detectable
// phase shift, plus the scalar shot-noise / squeezed / Heisenberg
// sensitivity baselines. Everything here is cross-checked against the
// truncated-basis engine in fock.hpp by the test suites.

namespace catphase::analytic {

// Cat amplitude alpha (real, >= 0) and displacement parameter delta.
struct CatParams {
    double alpha;
    double delta;

    CatParams(double alpha_, double delta_);
};

// Carrier photon number N and logarithmic squeeze factor r.
struct ReferenceLimits {
    double n_photons;
    double squeeze_factor;

    ReferenceLimits(double n_photons_, double squeeze_factor_);
};

struct EvenOdd {
    double even;
    double odd;
};

struct SensitivityLimits {
    double shot_noise; // 1 / (2 sqrt(N))
    double squeezed;   // e^{-r} / (2 sqrt(N))
    double heisenberg; // 1 / N
};

// K = 2 (1 + e^{-2 alpha^2}), the cat normalization; in (2, 4].
double normalization_K(double alpha);

// <Psi_0|Psi_delta> = (2 e^{-delta^2/2} / K) (cos 2 alpha delta + e^{-2 alpha^2})
double overlap(const CatParams& params);

// k-th zero of the overlap: (arccos(-e^{-2 alpha^2}) + 2 pi k) / (2 alpha).
// Throws std::domain_error for alpha == 0 (the overlap never vanishes).
double overlap_zero(double alpha, int k);

// Smallest unambiguously detectable phase: overlap_zero(alpha, 0) / sqrt(N).
double detectable_phase(double alpha, double n_photons);

// Large-alpha approximation pi / (4 alpha sqrt(N)).
double detectable_phase_approx(double alpha, double n_photons);

// P_delta = e^{-2 delta^2} (cos 4 alpha delta + e^{-2 alpha^2}) / (1 + e^{-2 alpha^2})
double parity(const CatParams& params);

// p_even = (1 + P)/2, p_odd = 1 - p_even.
EvenOdd even_odd_probabilities(const CatParams& params);

// Same probabilities summed level-by-level into cosh/sinh form; independent
// route used to validate even_odd_probabilities.
EvenOdd even_odd_probabilities_hyperbolic(const CatParams& params);

// Photon-number distribution of the displaced cat. Evaluated in log space
// so large n stays finite; odd levels at delta == 0 are exact zeros.
double photon_probability(const CatParams& params, int n);

SensitivityLimits reference_limits(const ReferenceLimits& limits);

} // namespace catphase::analytic

#endif
