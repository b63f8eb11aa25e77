#pragma once

#include "wecp/oracle.hpp"
#include "wecp/protocol.hpp"

namespace wecp {

/// Largest absolute deviation between the closed-form round description and
/// the exhaustive statevector enumeration at one parameter point. Covers
/// branch probabilities, completeness (sum to 1), and posterior coefficient
/// magnitudes. `perturb_p0` shifts the closed-form success probability and
/// exists for fault-injection tests.
double crosscheck_round_one_point(const WCoefficients& w, double perturb_p0 = 0.0);

double crosscheck_round_two_point(const WCoefficients& w, Side side);

struct CrosscheckReport {
    double max_deviation = 0.0;
    int points = 0;
};

/// Round-one comparison over a steps x steps grid of (alpha^2, gamma^2)
/// with every coefficient strictly positive.
CrosscheckReport crosscheck_round_one_grid(int steps, double perturb_p0 = 0.0);

/// Round-two comparison over a 1-D grid of (b, b, c) and (a, b, b) patterns.
CrosscheckReport crosscheck_round_two_grid(int steps);

}  // namespace wecp
