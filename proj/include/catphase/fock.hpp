#ifndef CATPHASE_FOCK_HPP
#define CATPHASE_FOCK_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

// Truncated Fock-space engine. States live in the first n_max+1 number
// levels; every constructor guarantees the discarded probability tail is
// below the policy tolerance, so these states serve as a brute-force
// numerical reference for the closed forms in analytic.hpp.

namespace catphase::fock {

using cxd = std::complex<double>;

// Signals that the requested state does not fit the truncated basis to
// the required tail tolerance.
class truncation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TruncationPolicy {
    int n_max = 0;                 // highest retained Fock level
    double tail_tolerance = 1e-12; // admissible discarded-probability tail, in (0,1)

    void validate() const;
};

class FockVector {
public:
    FockVector() = default;
    explicit FockVector(std::vector<cxd> amplitudes);

    int n_max() const { return static_cast<int>(amps_.size()) - 1; }
    std::size_t size() const { return amps_.size(); }
    cxd operator[](std::size_t n) const { return amps_[n]; }
    const std::vector<cxd>& amplitudes() const { return amps_; }

    double norm_sq() const;

private:
    std::vector<cxd> amps_;
};

// Smallest n_max whose Poisson tail (mean alpha^2 + delta^2) is below
// tail_tolerance, by direct summation of e^{-mu} mu^n / n!.
int required_truncation(double alpha, double delta, double tail_tolerance);

// required_truncation plus a fixed headroom of levels, so that applying a
// displacement to a state built under this policy stays inside tolerance.
TruncationPolicy policy_for(double alpha, double delta, double tail_tolerance);

// |beta>: c_n = e^{-|beta|^2/2} beta^n / sqrt(n!)
FockVector coherent_state(cxd beta, const TruncationPolicy& policy);

// Normalized (|alpha> + |-alpha>); odd amplitudes are identically zero.
FockVector cat_state(double alpha, const TruncationPolicy& policy);

// Number state |n>.
FockVector basis_state(int n, const TruncationPolicy& policy);

// exp(i delta (a^dag + a)) applied via eigendecomposition of the
// tridiagonal generator. The policy supplies the tolerance for the
// post-hoc norm check; the state's own dimension is used.
FockVector displace(const FockVector& state, double delta, const TruncationPolicy& policy);

cxd inner(const FockVector& a, const FockVector& b);

// |<a|b>|^2 / (|a|^2 |b|^2): phase-insensitive state comparison.
double fidelity(const FockVector& a, const FockVector& b);

std::vector<double> photon_distribution(const FockVector& state);

// <(-1)^n> = sum_n (-1)^n |c_n|^2
double parity_expectation(const FockVector& state);

} // namespace catphase::fock

#endif
