#include "catphase/interferometer.hpp"

#include <cmath>
#include <stdexcept>

namespace catphase::ifo {

namespace {

constexpr double kUnitarityTol = 1e-12;
constexpr double kPhiHardLimit = 0.1;
constexpr double kPhiCaution = 0.01;

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

} // namespace

void IfoConfig::validate() const {
    if (!std::isfinite(reflectivity) || !std::isfinite(transmissivity) ||
        !std::isfinite(phi1) || !std::isfinite(phi2) ||
        !std::isfinite(carrier_amplitude)) {
        throw std::invalid_argument("ifo: config values must be finite");
    }
    if (reflectivity < 0.0 || transmissivity < 0.0) {
        throw std::invalid_argument("ifo: R and T must be non-negative");
    }
    const double closure = reflectivity * reflectivity + transmissivity * transmissivity;
    if (std::abs(closure - 1.0) > kUnitarityTol) {
        throw std::invalid_argument("ifo: R^2 + T^2 must equal 1");
    }
    if (carrier_amplitude <= 0.0) {
        throw std::invalid_argument("ifo: carrier amplitude must be positive");
    }
    if (topology == Topology::antisymmetric) {
        if (std::abs(reflectivity - kInvSqrt2) > kUnitarityTol ||
            std::abs(transmissivity - kInvSqrt2) > kUnitarityTol) {
            throw std::invalid_argument("ifo: antisymmetric topology needs balanced splitters");
        }
        if (std::abs(phi1 + phi2) > kUnitarityTol) {
            throw std::invalid_argument("ifo: antisymmetric topology needs phi1 = -phi2");
        }
    }
}

IfoConfig IfoConfig::asymmetric(double transmissivity, double carrier_amplitude,
                                double signal_phase) {
    IfoConfig config;
    config.transmissivity = transmissivity;
    config.reflectivity = std::sqrt(std::max(0.0, 1.0 - transmissivity * transmissivity));
    config.phi1 = signal_phase;
    config.phi2 = 0.0;
    config.carrier_amplitude = carrier_amplitude;
    config.topology = Topology::asymmetric;
    config.validate();
    return config;
}

IfoConfig IfoConfig::antisymmetric(double carrier_amplitude, double signal_phase) {
    IfoConfig config;
    config.reflectivity = kInvSqrt2;
    config.transmissivity = kInvSqrt2;
    config.phi1 = signal_phase;
    config.phi2 = -signal_phase;
    config.carrier_amplitude = carrier_amplitude;
    config.topology = Topology::antisymmetric;
    config.validate();
    return config;
}

IfoConfig IfoConfig::general(double reflectivity, double transmissivity, double phi1,
                             double phi2, double carrier_amplitude) {
    IfoConfig config;
    config.reflectivity = reflectivity;
    config.transmissivity = transmissivity;
    config.phi1 = phi1;
    config.phi2 = phi2;
    config.carrier_amplitude = carrier_amplitude;
    config.topology = Topology::general;
    config.validate();
    return config;
}

Eigen::Matrix2cd transfer_matrix(const IfoConfig& config) {
    config.validate();
    const double R = config.reflectivity;
    const double T = config.transmissivity;
    // Equal arm phases commute through both splitters; with R^2 + T^2 = 1 the
    // matrix is exactly a global phase times the identity, so build it that
    // way instead of leaving R^2 + T^2 rounding in the diagonal.
    if (config.phi1 == config.phi2) {
        const cxd phase = std::polar(1.0, -config.phi1);
        Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
        m(0, 0) = phase;
        m(1, 1) = phase;
        return m;
    }
    const cxd e1 = std::polar(1.0, -config.phi1);
    const cxd e2 = std::polar(1.0, -config.phi2);
    Eigen::Matrix2cd m;
    m(0, 0) = T * T * e1 + R * R * e2;
    m(0, 1) = R * T * (e2 - e1);
    m(1, 0) = R * T * (e2 - e1);
    m(1, 1) = R * R * e1 + T * T * e2;
    return m;
}

std::pair<cxd, cxd> propagate_classical(const IfoConfig& config, cxd a1, cxd a2) {
    const Eigen::Matrix2cd m = transfer_matrix(config);
    Eigen::Vector2cd in;
    in << a1, a2;
    const Eigen::Vector2cd out = m * in;
    return {out(0), out(1)};
}

cxd dark_port_amplitude(const IfoConfig& config) {
    const Eigen::Matrix2cd m = transfer_matrix(config);
    return m(1, 0) * config.carrier_amplitude;
}

Displacement displacement_of(const IfoConfig& config, double phi) {
    config.validate();
    if (!std::isfinite(phi)) {
        throw std::invalid_argument("ifo: phi must be finite");
    }
    if (std::abs(phi) > kPhiHardLimit) {
        throw std::range_error("ifo: phi outside the linearized regime (|phi| <= 0.1)");
    }
    Displacement d;
    d.phi_caution = std::abs(phi) > kPhiCaution;
    const double A = config.carrier_amplitude;
    switch (config.topology) {
    case Topology::asymmetric:
        d.carrier_gain = config.transmissivity * A;
        d.delta = d.carrier_gain * phi;
        break;
    case Topology::antisymmetric:
        d.carrier_gain = A;
        d.delta = d.carrier_gain * phi;
        break;
    case Topology::general: {
        // No single signal phase exists here; use the configured arm phases.
        const double R = config.reflectivity;
        const double T = config.transmissivity;
        d.carrier_gain = R * T * A;
        d.delta = d.carrier_gain * (config.phi1 - config.phi2);
        d.phi_caution = d.phi_caution ||
                        std::abs(config.phi1 - config.phi2) > kPhiCaution;
        break;
    }
    }
    d.photons = d.carrier_gain * d.carrier_gain;
    return d;
}

fock::FockVector end_to_end_state(const IfoConfig& config, double alpha, double phi,
                                  const fock::TruncationPolicy& policy) {
    const Displacement d = displacement_of(config, phi);
    const fock::FockVector cat = fock::cat_state(alpha, policy);
    return fock::displace(cat, d.delta, policy);
}

} // namespace catphase::ifo
