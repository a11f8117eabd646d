#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "catphase/analytic.hpp"
#include "catphase/fock.hpp"
#include "catphase/interferometer.hpp"

using namespace catphase;
using ifo::cxd;
using ifo::IfoConfig;

namespace {

double unitarity_defect(const Eigen::Matrix2cd& m) {
    const Eigen::Matrix2cd defect =
        m.adjoint() * m - Eigen::Matrix2cd::Identity();
    return defect.cwiseAbs().maxCoeff();
}

} // namespace

TEST_CASE("config validation") {
    CHECK_THROWS_AS(IfoConfig::general(0.8, 0.8, 0.0, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(IfoConfig::general(0.6, 0.8, 0.0, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(IfoConfig::general(-0.6, 0.8, 0.0, 0.0, 1.0), std::invalid_argument);
    CHECK_NOTHROW(IfoConfig::general(0.6, 0.8, 0.3, -0.1, 2.0));

    // Antisymmetric tuning is enforced, not silently fixed up.
    IfoConfig bad = IfoConfig::antisymmetric(1.0, 0.01);
    bad.phi2 = 0.02;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = IfoConfig::antisymmetric(1.0, 0.01);
    bad.reflectivity = 0.6;
    bad.transmissivity = 0.8;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("equal arm phases give exactly a global phase") {
    const Eigen::Matrix2cd id = ifo::transfer_matrix(IfoConfig::antisymmetric(1.0, 0.0));
    CHECK(id(0, 0) == cxd(1.0, 0.0));
    CHECK(id(1, 1) == cxd(1.0, 0.0));
    CHECK(id(0, 1) == cxd(0.0, 0.0));
    CHECK(id(1, 0) == cxd(0.0, 0.0));

    const Eigen::Matrix2cd m =
        ifo::transfer_matrix(IfoConfig::general(0.6, 0.8, 0.25, 0.25, 1.0));
    CHECK(m(0, 0) == std::polar(1.0, -0.25));
    CHECK(m(0, 1) == cxd(0.0, 0.0));
}

TEST_CASE("identity configuration reproduces inputs exactly") {
    const IfoConfig config = IfoConfig::antisymmetric(3.0, 0.0);
    const cxd a1(0.7, -0.2);
    const cxd a2(-1.3, 0.45);
    const auto [d1, d2] = ifo::propagate_classical(config, a1, a2);
    CHECK(d1 == a1);
    CHECK(d2 == a2);
}

TEST_CASE("transfer matrix is unitary across random configurations") {
    std::mt19937_64 gen(12345);
    std::uniform_real_distribution<double> angle(0.0, std::numbers::pi / 2.0);
    std::uniform_real_distribution<double> phase(-std::numbers::pi, std::numbers::pi);
    for (int i = 0; i < 100; ++i) {
        const double theta = angle(gen);
        const IfoConfig config = IfoConfig::general(std::sin(theta), std::cos(theta),
                                                    phase(gen), phase(gen), 1.0);
        CHECK(unitarity_defect(ifo::transfer_matrix(config)) < 1e-12);
    }
}

TEST_CASE("balanced interferometer with opposite arm phases") {
    const double phi = 0.37;
    const IfoConfig config = IfoConfig::antisymmetric(2.0, phi);
    const Eigen::Matrix2cd m = ifo::transfer_matrix(config);
    // M11 = cos(phi), M21 = i sin(phi) up to rounding in R T = 1/2.
    CHECK(m(0, 0).real() == doctest::Approx(std::cos(phi)).epsilon(1e-15));
    CHECK(m(0, 0).imag() == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(m(1, 0).real() == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(m(1, 0).imag() == doctest::Approx(std::sin(phi)).epsilon(1e-15));

    const auto [d1, d2] = ifo::propagate_classical(config, cxd(2.0, 0.0), cxd(0.0, 0.0));
    CHECK(std::abs(d1) == doctest::Approx(2.0 * std::cos(phi)).epsilon(1e-14));
    CHECK(std::abs(d2) == doctest::Approx(2.0 * std::sin(phi)).epsilon(1e-14));
    CHECK(ifo::dark_port_amplitude(config) == m(1, 0) * 2.0);
}

TEST_CASE("linearized displacement per topology") {
    const ifo::Displacement anti = ifo::displacement_of(IfoConfig::antisymmetric(100.0, 1e-3), 1e-3);
    CHECK(anti.carrier_gain == 100.0);
    CHECK(anti.delta == 100.0 * 1e-3);
    CHECK(anti.photons == 100.0 * 100.0);
    CHECK_FALSE(anti.phi_caution);

    const ifo::Displacement asym = ifo::displacement_of(IfoConfig::asymmetric(0.6, 10.0, 2e-3), 2e-3);
    CHECK(asym.carrier_gain == 0.6 * 10.0);
    CHECK(asym.delta == 0.6 * 10.0 * 2e-3);

    // General topology takes the phase difference from the configured arms.
    const ifo::Displacement gen =
        ifo::displacement_of(IfoConfig::general(0.6, 0.8, 3e-3, 1e-3, 10.0), 0.0);
    CHECK(gen.carrier_gain == doctest::Approx(0.6 * 0.8 * 10.0).epsilon(1e-15));
    CHECK(gen.delta == doctest::Approx(0.6 * 0.8 * 10.0 * 2e-3).epsilon(1e-14));
}

TEST_CASE("phase range guard and caution flag") {
    const IfoConfig config = IfoConfig::antisymmetric(1.0, 0.05);
    CHECK(ifo::displacement_of(config, 0.05).phi_caution);
    CHECK_FALSE(ifo::displacement_of(IfoConfig::antisymmetric(1.0, 0.005), 0.005).phi_caution);
    CHECK_THROWS_AS(ifo::displacement_of(IfoConfig::antisymmetric(1.0, 0.0), 0.2),
                    std::range_error);
}

TEST_CASE("linearization error stays cubic in the phase") {
    const double amp = 1000.0;
    for (double phi : {1e-2, 1e-3, 1e-4}) {
        const IfoConfig config = IfoConfig::antisymmetric(amp, phi);
        const double exact = std::abs(ifo::dark_port_amplitude(config));
        const double linear = ifo::displacement_of(config, phi).delta;
        CHECK(std::abs(exact - linear) <= amp * phi * phi * phi / 6.0 * (1.0 + 1e-6));
    }
}

TEST_CASE("end-to-end state is the displaced cat") {
    const double alpha = 1.5;
    const double phi = analytic::overlap_zero(alpha, 0) / 100.0;
    const IfoConfig config = IfoConfig::antisymmetric(100.0, phi);
    const fock::TruncationPolicy policy = fock::policy_for(alpha, 1.0, 1e-13);

    const fock::FockVector state = ifo::end_to_end_state(config, alpha, phi, policy);
    const fock::FockVector cat = fock::cat_state(alpha, policy);
    const fock::FockVector displaced =
        fock::displace(cat, ifo::displacement_of(config, phi).delta, policy);

    CHECK(std::abs(fock::inner(displaced, state) - cxd(1.0, 0.0)) < 1e-12);
    // The drive sits on the first overlap zero, so the output state is
    // orthogonal to the unshifted cat.
    CHECK(std::abs(fock::inner(cat, state)) < 1e-8);
}
