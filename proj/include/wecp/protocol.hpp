#pragma once

#include <string>
#include <vector>

#include "wecp/statevec.hpp"

namespace wecp {

/// Coefficient pattern of a W-class triple, tested on absolute values.
enum class WPattern {
    General,     // all magnitudes distinct
    TwoEqualAB,  // |a| == |b|: Charlie-side single-photon round applies
    TwoEqualBC,  // |b| == |c|: Alice-side single-photon round applies
    Maximal,     // |a| == |b| == |c| == 1/sqrt(3)
};

/// The (a, b, c) triple of a|VHH> + b|HVH> + c|HHV>. Signs permitted;
/// normalization a^2 + b^2 + c^2 = 1 is required by every protocol round.
struct WCoefficients {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    /// Scale an arbitrary nonzero triple onto the unit sphere.
    static WCoefficients normalized(double a, double b, double c);

    bool is_normalized(double tol = kPatternTol) const;
    WPattern pattern(double tol = kPatternTol) const;

    /// Coefficients after the protocol's phase-flip sign normalization.
    WCoefficients abs() const { return {std::abs(a), std::abs(b), std::abs(c)}; }
};

/// a|VHH> + b|HVH> + c|HHV> over the given labels (default a1, b1, c1).
PureState build_w_state(const WCoefficients& w,
                        const std::vector<std::string>& labels = {"a1", "b1", "c1"});

/// One-photon measurement direction cos|H> + sin|V> on a named ancilla.
struct MeasBasis {
    double cos_component;
    double sin_component;
    std::string target;
};

/// Alice's round-one basis (a, b)/sqrt(a^2+b^2) on ancilla a2.
MeasBasis alice_basis(const WCoefficients& w);
/// Charlie's round-one basis (c, b)/sqrt(c^2+b^2) on ancilla c2.
MeasBasis charlie_basis(const WCoefficients& w);

struct Branch {
    std::string outcome;     // which basis vectors fired
    double probability;
    WCoefficients posterior;
    bool is_success;         // the designated success outcome of the round
};

struct RoundReport {
    std::vector<Branch> branches;
    // Probability mass of the PCM parity outcomes feeding the branches.
    // Equals 1: every parity combination is recovered by the bit-flip
    // correction, so round probabilities condition on the corrected state.
    double parity_prefactor = 1.0;

    const Branch& success() const;
};

/// Full round: two PCMs plus the two rotated-basis measurements, reported
/// as the four classified branches. Requires all coefficients nonzero.
RoundReport run_round_one(const WCoefficients& w);

/// Single-photon round on Charlie's side for the (b, b, c) pattern.
RoundReport run_round_two_charlie(const WCoefficients& w);

/// Mirror round on Alice's side for the (a, b, b) pattern.
RoundReport run_round_two_alice(const WCoefficients& w);

struct RecursionLeaf {
    std::string path;        // e.g. "phi1.phi2_perp/phi2p"
    double probability;      // joint probability of reaching this leaf
    WCoefficients posterior;
    bool success;
};

struct RecursionResult {
    int depth;
    double total_success_probability;
    std::vector<RecursionLeaf> leaves;  // success leaves and depth-limited failures
};

/// Expand every failure branch to `max_depth` rounds, dispatching each node
/// by its coefficient pattern, and accumulate the success probability.
RecursionResult recurse(const WCoefficients& w, int max_depth);

}  // namespace wecp
