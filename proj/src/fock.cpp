#include "catphase/fock.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>

namespace catphase::fock {

namespace {

// Displacement mixes population upward; a constant headroom above the
// Poisson tail estimate keeps the matrix exponential accurate.
constexpr int kHeadroomLevels = 10;

void require_finite(double v, const char* name) {
    if (!std::isfinite(v))
        throw std::invalid_argument(std::string(name) + " must be finite");
}

} // namespace

void TruncationPolicy::validate() const {
    if (n_max < 0)
        throw std::invalid_argument("TruncationPolicy: n_max must be >= 0");
    if (!(tail_tolerance > 0.0) || !(tail_tolerance < 1.0))
        throw std::invalid_argument("TruncationPolicy: tail_tolerance must lie in (0,1)");
}

FockVector::FockVector(std::vector<cxd> amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.empty())
        throw std::invalid_argument("FockVector: needs at least the n=0 amplitude");
    for (const cxd& c : amps_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw std::invalid_argument("FockVector: non-finite amplitude");
    }
}

double FockVector::norm_sq() const {
    double s = 0.0;
    for (const cxd& c : amps_) s += std::norm(c);
    return s;
}

int required_truncation(double alpha, double delta, double tail_tolerance) {
    require_finite(alpha, "alpha");
    require_finite(delta, "delta");
    if (alpha < 0.0)
        throw std::invalid_argument("required_truncation: alpha must be >= 0");
    if (!(tail_tolerance > 0.0) || !(tail_tolerance < 1.0))
        throw std::invalid_argument("required_truncation: tail_tolerance must lie in (0,1)");

    const double mu = alpha * alpha + delta * delta;
    if (mu == 0.0) return 0;

    // Direct tail summation of the Poisson weights with mean mu.
    double term = std::exp(-mu);
    double cumulative = term;
    int n = 0;
    const int n_limit = static_cast<int>(4.0 * mu) + 1024;
    while (1.0 - cumulative >= tail_tolerance) {
        if (++n > n_limit)
            throw truncation_error("required_truncation: tail sum failed to converge");
        term *= mu / n;
        cumulative += term;
    }
    return n;
}

TruncationPolicy policy_for(double alpha, double delta, double tail_tolerance) {
    TruncationPolicy p;
    p.n_max = required_truncation(alpha, delta, tail_tolerance) + kHeadroomLevels;
    p.tail_tolerance = tail_tolerance;
    return p;
}

FockVector coherent_state(cxd beta, const TruncationPolicy& policy) {
    policy.validate();
    if (!std::isfinite(beta.real()) || !std::isfinite(beta.imag()))
        throw std::invalid_argument("coherent_state: beta must be finite");

    std::vector<cxd> c(policy.n_max + 1);
    c[0] = std::exp(-std::norm(beta) / 2.0);
    for (int n = 1; n <= policy.n_max; ++n)
        c[n] = c[n - 1] * beta / std::sqrt(static_cast<double>(n));

    FockVector state(std::move(c));
    if (std::abs(1.0 - state.norm_sq()) > policy.tail_tolerance)
        throw truncation_error("coherent_state: n_max too small for |beta|^2 = " +
                               std::to_string(std::norm(beta)));
    return state;
}

FockVector cat_state(double alpha, const TruncationPolicy& policy) {
    require_finite(alpha, "alpha");
    if (alpha < 0.0)
        throw std::invalid_argument("cat_state: alpha must be >= 0");

    // Build from the coherent branch; the +alpha/-alpha superposition
    // doubles even levels and cancels odd ones. The cancellation is exact,
    // so odd amplitudes are written as literal zeros.
    FockVector branch = coherent_state(cxd(alpha, 0.0), policy);

    std::vector<cxd> c(policy.n_max + 1, cxd(0.0, 0.0));
    double nsq = 0.0;
    for (int n = 0; n <= policy.n_max; n += 2) {
        const double v = 2.0 * branch[n].real();
        c[n] = v;
        nsq += v * v;
    }
    const double inv = 1.0 / std::sqrt(nsq);
    for (int n = 0; n <= policy.n_max; n += 2) c[n] *= inv;
    return FockVector(std::move(c));
}

FockVector basis_state(int n, const TruncationPolicy& policy) {
    policy.validate();
    if (n < 0 || n > policy.n_max)
        throw std::invalid_argument("basis_state: n outside truncated basis");
    std::vector<cxd> c(policy.n_max + 1, cxd(0.0, 0.0));
    c[n] = 1.0;
    return FockVector(std::move(c));
}

FockVector displace(const FockVector& state, double delta, const TruncationPolicy& policy) {
    policy.validate();
    require_finite(delta, "delta");
    if (state.size() == 0)
        throw std::invalid_argument("displace: empty state");
    if (delta == 0.0) return state;

    const int dim = static_cast<int>(state.size());

    // Generator delta (a^dag + a): real symmetric tridiagonal with zero
    // diagonal and subdiagonal delta sqrt(n+1). exp(iH) = V e^{i lambda} V^T.
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(dim);
    Eigen::VectorXd sub(dim - 1);
    for (int n = 0; n + 1 < dim; ++n)
        sub[n] = delta * std::sqrt(static_cast<double>(n + 1));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("displace: eigendecomposition failed");

    Eigen::Map<const Eigen::VectorXcd> psi(state.amplitudes().data(), dim);
    Eigen::MatrixXcd v = es.eigenvectors().cast<cxd>();
    Eigen::VectorXcd coeffs = v.transpose() * psi;
    for (int j = 0; j < dim; ++j)
        coeffs[j] *= std::exp(cxd(0.0, es.eigenvalues()[j]));
    Eigen::VectorXcd out = v * coeffs;

    // exp of the truncated generator is exactly unitary, so an undersized
    // basis shows up as weight reflected into the top (headroom) levels,
    // never as norm drift. The prepared tail bound applies before the
    // displacement; allow two orders for redistribution during evolution.
    const int guard = std::min(kHeadroomLevels, dim);
    double top = 0.0;
    for (int n = dim - guard; n < dim; ++n)
        top += std::norm(out[n]);
    if (top > 100.0 * policy.tail_tolerance)
        throw truncation_error("displace: headroom occupancy exceeds tail tolerance (n_max too small)");
    return FockVector(std::vector<cxd>(out.data(), out.data() + dim));
}

cxd inner(const FockVector& a, const FockVector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("inner: dimension mismatch");
    cxd s(0.0, 0.0);
    for (std::size_t n = 0; n < a.size(); ++n)
        s += std::conj(a[n]) * b[n];
    return s;
}

double fidelity(const FockVector& a, const FockVector& b) {
    const double na = a.norm_sq();
    const double nb = b.norm_sq();
    if (na == 0.0 || nb == 0.0)
        throw std::invalid_argument("fidelity: zero-norm state");
    return std::norm(inner(a, b)) / (na * nb);
}

std::vector<double> photon_distribution(const FockVector& state) {
    std::vector<double> p(state.size());
    for (std::size_t n = 0; n < state.size(); ++n) p[n] = std::norm(state[n]);
    return p;
}

double parity_expectation(const FockVector& state) {
    double s = 0.0;
    double sign = 1.0;
    for (std::size_t n = 0; n < state.size(); ++n) {
        s += sign * std::norm(state[n]);
        sign = -sign;
    }
    return s;
}

} // namespace catphase::fock
