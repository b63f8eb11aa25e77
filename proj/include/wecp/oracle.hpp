#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wecp/protocol.hpp"
#include "wecp/statevec.hpp"

namespace wecp {

/// One exhaustively-enumerated measurement history.
struct OutcomeLeaf {
    std::vector<std::pair<std::string, std::string>> path;  // (measurement, outcome)
    double probability;
    PureState posterior;  // remaining a1/b1/c1 photons
    bool vanished;        // probability is numerically zero
};

enum class Side { Alice, Charlie };

/// Run round one literally at the statevector level: tensor the five-photon
/// state, apply both PCMs, correct odd parities, project both ancillas.
/// Returns all 16 leaves (2 parities x 2 parities x 2 x 2 basis outcomes).
std::vector<OutcomeLeaf> enumerate_round_one(const WCoefficients& w);

/// Run a single-photon round literally: one ancilla, one PCM, one rotated
/// basis measurement. Returns all 4 leaves.
std::vector<OutcomeLeaf> enumerate_round_two(const WCoefficients& w, Side side);

/// Coefficient triple of a three-qubit leaf posterior in the W basis.
/// Throws InvalidStateError if the state has weight outside span{VHH, HVH, HHV}
/// or a non-real amplitude beyond kAlgebraTol.
WCoefficients w_coefficients_of(const PureState& s);

}  // namespace wecp
