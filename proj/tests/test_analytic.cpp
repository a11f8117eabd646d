#include "doctest.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "catphase/analytic.hpp"

using namespace catphase;
using analytic::CatParams;

namespace {

const std::vector<double> kAlphaGrid{0.3, 0.8, 1.5, 2.5, 3.5};
const std::vector<double> kDeltaGrid{0.0, 0.17, 0.3, 0.52, 1.1, 2.0};

} // namespace

TEST_CASE("parameter structs validate their inputs") {
    CHECK_THROWS_AS(CatParams(-0.1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(CatParams(std::nan(""), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(CatParams(1.0, std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(analytic::ReferenceLimits(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(analytic::ReferenceLimits(100.0, -1.0), std::invalid_argument);
}

TEST_CASE("cat normalization constant") {
    CHECK(analytic::normalization_K(0.0) == 4.0);
    CHECK(analytic::normalization_K(1.5) == doctest::Approx(2.0222179930764846).epsilon(1e-15));
    CHECK(analytic::normalization_K(6.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK_THROWS_AS(analytic::normalization_K(-1.0), std::invalid_argument);
}

TEST_CASE("overlap closed form") {
    // No displacement: the states coincide, bit-exactly.
    for (double a : kAlphaGrid) {
        CHECK(analytic::overlap(CatParams(a, 0.0)) == 1.0);
    }
    CHECK(analytic::overlap(CatParams(1.5, 0.2)) ==
          doctest::Approx(0.81087390305385985).epsilon(1e-15));
    // Large displacement suppresses the overlap through the Gaussian factor.
    CHECK(std::abs(analytic::overlap(CatParams(1.5, 3.0))) < 2.0 * std::exp(-4.5));
}

TEST_CASE("overlap zeros") {
    const double d0 = analytic::overlap_zero(1.5, 0);
    CHECK(d0 == doctest::Approx(0.52730185061300339).epsilon(1e-15));
    CHECK(analytic::overlap_zero(1.5, 1) ==
          doctest::Approx(2.6216969530061989).epsilon(1e-15));

    // The overlap vanishes and changes sign there.
    CHECK(std::abs(analytic::overlap(CatParams(1.5, d0))) < 1e-15);
    CHECK(analytic::overlap(CatParams(1.5, d0 - 1e-4)) > 0.0);
    CHECK(analytic::overlap(CatParams(1.5, d0 + 1e-4)) < 0.0);

    // Consecutive zeros are spaced by pi / alpha.
    CHECK(analytic::overlap_zero(1.5, 1) - analytic::overlap_zero(1.5, 0) ==
          doctest::Approx(std::numbers::pi / 1.5).epsilon(1e-15));

    CHECK_THROWS_AS(analytic::overlap_zero(0.0, 0), std::domain_error);
    CHECK_THROWS_AS(analytic::overlap_zero(1.5, -1), std::invalid_argument);
    CHECK_THROWS_AS(analytic::overlap_zero(-1.0, 0), std::invalid_argument);
}

TEST_CASE("detectable phase and its large-alpha approximation") {
    // sqrt(2^20) = 1024 is exact, so the quotient is reproduced bit-for-bit.
    CHECK(analytic::detectable_phase(1.5, 1048576.0) ==
          analytic::overlap_zero(1.5, 0) / 1024.0);

    CHECK(analytic::detectable_phase(1.5, 1e6) ==
          doctest::Approx(5.2730185061300339e-4).epsilon(1e-14));
    CHECK(analytic::detectable_phase_approx(1.5, 1e6) ==
          doctest::Approx(5.2359877559829887e-4).epsilon(1e-14));

    // Relative gap between exact and approximate forms: about 0.70% at
    // alpha = 1.5, an order of magnitude larger at alpha = 1.
    const double gap15 = (analytic::detectable_phase(1.5, 1e6) -
                          analytic::detectable_phase_approx(1.5, 1e6)) /
                         analytic::detectable_phase(1.5, 1e6);
    CHECK(gap15 == doctest::Approx(0.0070226854132971133).epsilon(1e-10));
    const double gap10 = (analytic::detectable_phase(1.0, 1e6) -
                          analytic::detectable_phase_approx(1.0, 1e6)) /
                         analytic::detectable_phase(1.0, 1e6);
    CHECK(gap10 == doctest::Approx(0.079547623053738141).epsilon(1e-10));

    CHECK_THROWS_AS(analytic::detectable_phase(1.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(analytic::detectable_phase_approx(0.0, 1e6), std::domain_error);
}

TEST_CASE("parity closed form") {
    for (double a : {0.0, 0.5, 1.5, 3.0}) {
        CHECK(analytic::parity(CatParams(a, 0.0)) == 1.0); // exact, not approximate
    }
    CHECK(analytic::parity(CatParams(1.5, 0.5236)) ==
          doctest::Approx(-0.56522419165850179).epsilon(1e-15));
    // alpha = 0 degenerates to the vacuum: P = e^{-2 delta^2}.
    CHECK(analytic::parity(CatParams(0.0, 0.7)) ==
          doctest::Approx(std::exp(-0.98)).epsilon(1e-15));
    for (double a : kAlphaGrid) {
        for (double d : kDeltaGrid) {
            const double p = analytic::parity(CatParams(a, d));
            CHECK(p <= 1.0);
            CHECK(p >= -1.0);
        }
    }
}

TEST_CASE("even/odd probabilities") {
    const analytic::EvenOdd eo = analytic::even_odd_probabilities(CatParams(1.5, 0.5236));
    CHECK(eo.even == doctest::Approx(0.21738790417074911).epsilon(1e-15));
    CHECK(eo.odd == doctest::Approx(0.78261209582925089).epsilon(1e-15));

    for (double a : kAlphaGrid) {
        // Undisplaced cat: odd outcomes are impossible, exactly.
        const analytic::EvenOdd rest = analytic::even_odd_probabilities(CatParams(a, 0.0));
        CHECK(rest.even == 1.0);
        CHECK(rest.odd == 0.0);
        for (double d : kDeltaGrid) {
            const analytic::EvenOdd p = analytic::even_odd_probabilities(CatParams(a, d));
            CHECK(p.even + p.odd == 1.0); // odd is defined as the exact complement
            CHECK(p.even >= 0.0);
            CHECK(p.odd >= 0.0);
        }
    }
}

TEST_CASE("hyperbolic route reproduces the closed form") {
    CHECK(analytic::even_odd_probabilities_hyperbolic(CatParams(1.5, 0.3)).even ==
          doctest::Approx(0.4107434864103263).epsilon(1e-14));
    for (double a : kAlphaGrid) {
        for (double d : kDeltaGrid) {
            const analytic::EvenOdd direct = analytic::even_odd_probabilities(CatParams(a, d));
            const analytic::EvenOdd hyp =
                analytic::even_odd_probabilities_hyperbolic(CatParams(a, d));
            CHECK(std::abs(direct.even - hyp.even) < 1e-12);
            CHECK(std::abs(direct.odd - hyp.odd) < 1e-12);
            CHECK(hyp.even + hyp.odd == doctest::Approx(1.0).epsilon(1e-13));
        }
    }
}

TEST_CASE("photon number probabilities") {
    CHECK(analytic::photon_probability(CatParams(0.0, 0.0), 0) == 1.0);
    CHECK(analytic::photon_probability(CatParams(0.0, 0.0), 3) == 0.0);
    CHECK(analytic::photon_probability(CatParams(1.5, 0.0), 0) ==
          doctest::Approx(0.20848241865658825).epsilon(1e-15));
    CHECK(analytic::photon_probability(CatParams(1.5, 0.0), 2) ==
          doctest::Approx(0.52772112222448901).epsilon(1e-15));
    CHECK(analytic::photon_probability(CatParams(1.5, 0.3), 3) ==
          doctest::Approx(0.30339826902382841).epsilon(1e-14));
    CHECK(analytic::photon_probability(CatParams(1.5, 0.4), 7) ==
          doctest::Approx(0.0071935482924342467).epsilon(1e-14));
    CHECK_THROWS_AS(analytic::photon_probability(CatParams(1.5, 0.3), -1),
                    std::invalid_argument);

    // Odd levels of the undisplaced cat carry mass zero, exactly.
    for (int n = 1; n < 30; n += 2) {
        CHECK(analytic::photon_probability(CatParams(2.0, 0.0), n) == 0.0);
    }
}

TEST_CASE("photon probabilities are a distribution consistent with the parity") {
    for (double a : kAlphaGrid) {
        for (double d : kDeltaGrid) {
            const CatParams params(a, d);
            double sum = 0.0;
            double even = 0.0;
            double alternating = 0.0;
            double sign = 1.0;
            for (int n = 0; n < 220; ++n) {
                const double p = analytic::photon_probability(params, n);
                CHECK(p >= 0.0);
                sum += p;
                if (n % 2 == 0) even += p;
                alternating += sign * p;
                sign = -sign;
            }
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
            CHECK(even ==
                  doctest::Approx(analytic::even_odd_probabilities(params).even).epsilon(1e-12));
            CHECK(alternating == doctest::Approx(analytic::parity(params)).epsilon(1e-12));
        }
    }
}

TEST_CASE("photon probabilities decay under a strictly falling envelope") {
    // Termwise monotonicity fails (the interference factor oscillates), but
    // beyond n = 4 mu every p_n sits under 4/K times the Poisson weight,
    // and that envelope falls strictly.
    for (double a : {1.0, 1.5, 2.5}) {
        for (double d : {0.0, 0.4, 1.3}) {
            const CatParams params(a, d);
            const double mu = a * a + d * d;
            const double k = analytic::normalization_K(a);
            const int start = static_cast<int>(4.0 * mu) + 1;
            double weight = std::exp(-mu + start * std::log(mu) - std::lgamma(start + 1.0));
            for (int n = start; n < start + 40; ++n) {
                CHECK(analytic::photon_probability(params, n) <= 4.0 / k * weight * (1.0 + 1e-12));
                const double next = weight * mu / (n + 1);
                CHECK(next < weight);
                weight = next;
            }
        }
    }
}

TEST_CASE("sensitivity baselines") {
    const analytic::SensitivityLimits lims =
        analytic::reference_limits(analytic::ReferenceLimits(1e6, 1.0));
    CHECK(lims.shot_noise == doctest::Approx(5.0e-4).epsilon(1e-15));
    CHECK(lims.squeezed == doctest::Approx(1.8393972058572116e-4).epsilon(1e-15));
    CHECK(lims.heisenberg == doctest::Approx(1.0e-6).epsilon(1e-15));
    CHECK(lims.heisenberg < lims.squeezed);
    CHECK(lims.squeezed < lims.shot_noise);
}
