#pragma once

#include "wecp/protocol.hpp"
#include "wecp/statevec.hpp"

namespace wecp {

/// Wootters concurrence of a two-qubit density matrix:
/// max(0, l1 - l2 - l3 - l4) over the decreasing square-rooted eigenvalues
/// of rho * rho~, with rho~ the spin-flipped conjugate.
double concurrence(const DensityMatrix& rho);

struct ConcurrenceReport {
    double c_ab;
    double c_ac;
    double c_a_bc;
    double three_tangle;
};

/// Closed-form concurrences of a W-class triple:
/// C_AB = 2|ab|, C_AC = 2|ac|, C_A(BC) = 2|a| sqrt(b^2 + c^2), tangle 0.
ConcurrenceReport analytic_concurrences(const WCoefficients& w);

/// CKW residual tangle C_A(BC)^2 - C_AB^2 - C_AC^2 of a three-qubit pure
/// state (bipartition qubit = first label). Round-off negatives above
/// -kPatternTol are clamped to 0.
double three_tangle(const PureState& s);

struct PostEcpConcurrences {
    double c_ab;
    double c_ac;
    double c_a_bc;
};

/// Expected concurrences after one full round: the probability-weighted sum
/// of each branch posterior's concurrence, in closed form.
PostEcpConcurrences post_ecp_concurrences(const WCoefficients& w);

struct EfficiencyReport {
    double eta_ab;
    double eta_ac;
    double eta_a_bc;
    ConcurrenceReport before;
    PostEcpConcurrences after;
};

/// Transformation efficiencies eta = C'/C per bipartition. Requires all
/// initial concurrences strictly positive.
EfficiencyReport efficiencies(const WCoefficients& w);

}  // namespace wecp
