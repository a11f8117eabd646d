#ifndef CATPHASE_OPTIMIZER_HPP
#define CATPHASE_OPTIMIZER_HPP

#include <stdexcept>
#include <vector>

// Locates the displacement that minimizes the cat-state parity (equivalently
// the even-outcome false-negative probability) for a given cat size.

namespace catphase::opt {

struct bracketing_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Optimum {
    double delta_star;     // argmin of the parity over delta > 0
    double parity_at_min;  // negative for any alpha > 0
    double p_even_at_min;  // (1 + parity) / 2, the false-negative probability
    int iterations;        // objective evaluations spent
    double bracket_lo;
    double bracket_hi;
};

struct ErrorCurvePoint {
    double alpha;
    double delta_star;
    double p_even;
    double p_odd;
};

// Solves the stationarity condition delta (cos 4 alpha delta + E) +
// alpha sin 4 alpha delta = 0, E = exp(-2 alpha^2), by Brent root-finding
// on [pi/(8 alpha), 1.05 pi/(4 alpha)]. Falls back to a dense scan of the
// parity itself when the bracket does not straddle a sign change (small
// alpha). tolerance bounds the abscissa error.
Optimum minimize_parity(double alpha, double tolerance = 1e-12);

// Large-alpha expansion of the minimizer:
// (pi / 4 alpha) (1 - 1/(4 alpha^2) + 1/(16 alpha^4)).
double parity_min_series(double alpha);

// p_even at the per-alpha optimal displacement on an inclusive alpha grid.
std::vector<ErrorCurvePoint> false_negative_curve(double alpha_min, double alpha_max,
                                                  int steps, double tolerance = 1e-12);

} // namespace catphase::opt

#endif
