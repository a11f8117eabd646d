#ifndef CATPHASE_INTERFEROMETER_HPP
#define CATPHASE_INTERFEROMETER_HPP

#include <Eigen/Dense>

#include <complex>
#include <utility>

#include "catphase/fock.hpp"

// Two-arm Mach-Zehnder model: exact two-port transfer matrices for the
// classical carrier, and the linearized map from a small arm phase shift
// to the displacement parameter acting on the dark-port quantum state.

namespace catphase::ifo {

using cxd = std::complex<double>;

enum class Topology {
    asymmetric,    // signal phase in arm 1 only, B = T A
    antisymmetric, // balanced splitters, phi1 = -phi2, B = A
    general,       // free R, T, phi1, phi2
};

struct IfoConfig {
    double reflectivity = 0.0;
    double transmissivity = 1.0;
    double phi1 = 0.0;
    double phi2 = 0.0;
    double carrier_amplitude = 1.0; // A = sqrt(input carrier photons), > 0
    Topology topology = Topology::general;

    // R^2 + T^2 = 1 within 1e-12; antisymmetric requires R = T = 1/sqrt(2)
    // and phi1 = -phi2; A > 0.
    void validate() const;

    static IfoConfig asymmetric(double transmissivity, double carrier_amplitude,
                                double signal_phase);
    static IfoConfig antisymmetric(double carrier_amplitude, double signal_phase);
    static IfoConfig general(double reflectivity, double transmissivity, double phi1,
                             double phi2, double carrier_amplitude);
};

// Linearized dark-port response. delta = B * phi for the asymmetric and
// antisymmetric topologies; for the general topology delta is the raw
// dark-port classical amplitude R T A (phi1 - phi2) with B = R T A.
struct Displacement {
    double carrier_gain; // B
    double photons;      // N = B^2, photons that see the signal phase
    double delta;
    bool phi_caution;    // |phi| above the comfortable linearization range
};

// Input/output map d = M a for the full interferometer.
Eigen::Matrix2cd transfer_matrix(const IfoConfig& config);

std::pair<cxd, cxd> propagate_classical(const IfoConfig& config, cxd a1, cxd a2);

// Exact classical amplitude appearing at the dark output port when the
// carrier (A, 0) is fed in: M21 * A.
cxd dark_port_amplitude(const IfoConfig& config);

// Valid for |phi| <= 0.1 (std::range_error beyond); phi_caution is set
// above 0.01. For the general topology the configured arm phases are used
// and the phi argument is ignored apart from the range check.
Displacement displacement_of(const IfoConfig& config, double phi);

// Displaced cat state at the dark output: displace(cat(alpha), delta).
fock::FockVector end_to_end_state(const IfoConfig& config, double alpha, double phi,
                                  const fock::TruncationPolicy& policy);

} // namespace catphase::ifo

#endif
