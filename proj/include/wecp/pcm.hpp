#pragma once

#include <array>
#include <string_view>

#include "wecp/statevec.hpp"

namespace wecp {

/// Outcome of the cross-Kerr parity check: Even = {HH, VV}, Odd = {HV, VH}.
enum class Parity { Even, Odd };

struct PcmBranch {
    Parity parity;
    double probability;
    PureState state;  // normalized posterior, both photons retained
};

struct PcmResult {
    std::array<PcmBranch, 2> branches;  // Even first, then Odd

    const PcmBranch& even() const { return branches[0]; }
    const PcmBranch& odd() const { return branches[1]; }
};

/// Ideal two-outcome parity measurement on the (l1, l2) photon pair.
/// Both photons survive (quantum nondemolition). Probabilities sum to 1.
PcmResult apply_pcm(const PureState& s, std::string_view l1, std::string_view l2);

/// Map an odd-parity branch into the even-parity reference branch by a
/// bit flip on `flip_label`; even branches are returned unchanged.
PureState correct_to_even(Parity parity, const PureState& s, std::string_view flip_label);

}  // namespace wecp
