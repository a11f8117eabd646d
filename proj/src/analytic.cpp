#include "catphase/analytic.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

namespace catphase::analytic {

namespace {

void require_finite(double v, const char* name) {
    if (!std::isfinite(v))
        throw std::invalid_argument(std::string(name) + " must be finite");
}

} // namespace

CatParams::CatParams(double alpha_, double delta_) : alpha(alpha_), delta(delta_) {
    require_finite(alpha, "alpha");
    require_finite(delta, "delta");
    if (alpha < 0.0)
        throw std::invalid_argument("CatParams: alpha must be >= 0");
}

ReferenceLimits::ReferenceLimits(double n_photons_, double squeeze_factor_)
    : n_photons(n_photons_), squeeze_factor(squeeze_factor_) {
    require_finite(n_photons, "n_photons");
    require_finite(squeeze_factor, "squeeze_factor");
    if (!(n_photons > 0.0))
        throw std::invalid_argument("ReferenceLimits: n_photons must be > 0");
    if (squeeze_factor < 0.0)
        throw std::invalid_argument("ReferenceLimits: squeeze_factor must be >= 0");
}

double normalization_K(double alpha) {
    require_finite(alpha, "alpha");
    if (alpha < 0.0)
        throw std::invalid_argument("normalization_K: alpha must be >= 0");
    return 2.0 * (1.0 + std::exp(-2.0 * alpha * alpha));
}

double overlap(const CatParams& p) {
    const double a = p.alpha;
    const double d = p.delta;
    const double e2a = std::exp(-2.0 * a * a);
    // Written with 2/K = 1/(1+E) so the shared 1+E rounding cancels and
    // the overlap at delta = 0 is exactly 1.
    return std::exp(-d * d / 2.0) * (std::cos(2.0 * a * d) + e2a) / (1.0 + e2a);
}

double overlap_zero(double alpha, int k) {
    require_finite(alpha, "alpha");
    if (alpha < 0.0)
        throw std::invalid_argument("overlap_zero: alpha must be >= 0");
    if (alpha == 0.0)
        throw std::domain_error("overlap_zero: no zero exists at alpha = 0");
    if (k < 0)
        throw std::invalid_argument("overlap_zero: k must be >= 0");
    return (std::acos(-std::exp(-2.0 * alpha * alpha)) + 2.0 * std::numbers::pi * k) /
           (2.0 * alpha);
}

double detectable_phase(double alpha, double n_photons) {
    if (!std::isfinite(n_photons) || !(n_photons > 0.0))
        throw std::invalid_argument("detectable_phase: n_photons must be > 0");
    return overlap_zero(alpha, 0) / std::sqrt(n_photons);
}

double detectable_phase_approx(double alpha, double n_photons) {
    require_finite(alpha, "alpha");
    if (!(alpha > 0.0))
        throw std::domain_error("detectable_phase_approx: alpha must be > 0");
    if (!std::isfinite(n_photons) || !(n_photons > 0.0))
        throw std::invalid_argument("detectable_phase_approx: n_photons must be > 0");
    return std::numbers::pi / (4.0 * alpha * std::sqrt(n_photons));
}

double parity(const CatParams& p) {
    const double a = p.alpha;
    const double d = p.delta;
    const double e2a = std::exp(-2.0 * a * a);
    return std::exp(-2.0 * d * d) * (std::cos(4.0 * a * d) + e2a) / (1.0 + e2a);
}

EvenOdd even_odd_probabilities(const CatParams& p) {
    const double even = (1.0 + parity(p)) / 2.0;
    return {even, 1.0 - even};
}

EvenOdd even_odd_probabilities_hyperbolic(const CatParams& p) {
    const double a = p.alpha;
    const double d = p.delta;
    const double mu = a * a + d * d;
    const std::complex<double> arg(a * a - d * d, 2.0 * a * d);
    const std::complex<double> phase = std::polar(1.0, 2.0 * a * d);
    const double pref = 2.0 * std::exp(-mu) / normalization_K(a);
    const double even = pref * (std::cosh(mu) + (phase * std::cosh(arg)).real());
    const double odd = pref * (std::sinh(mu) - (phase * std::sinh(arg)).real());
    return {even, odd};
}

double photon_probability(const CatParams& p, int n) {
    if (n < 0)
        throw std::invalid_argument("photon_probability: n must be >= 0");
    const double a = p.alpha;
    const double d = p.delta;
    const double mu = a * a + d * d;
    const double k = normalization_K(a);

    if (mu == 0.0) return n == 0 ? 1.0 : 0.0;

    // log of the Poisson-like weight e^{-mu} mu^n / n!
    const double log_weight = -mu + n * std::log(mu) - std::lgamma(n + 1.0);

    if (d == 0.0) {
        // Even cat: odd levels carry exactly zero population.
        if (n % 2 == 1) return 0.0;
        return 4.0 / k * std::exp(log_weight);
    }

    // Re{e^{2 i a d} [-(a + i d)^2]^n} = mu^n cos(n theta + 2 a d),
    // theta = arg(-(a + i d)^2).
    const double theta = std::numbers::pi + 2.0 * std::atan2(d, a);
    return 2.0 / k * std::exp(log_weight) *
           (1.0 + std::cos(n * theta + 2.0 * a * d));
}

SensitivityLimits reference_limits(const ReferenceLimits& limits) {
    const double root_n = std::sqrt(limits.n_photons);
    return {1.0 / (2.0 * root_n),
            std::exp(-limits.squeeze_factor) / (2.0 * root_n),
            1.0 / limits.n_photons};
}

} // namespace catphase::analytic
