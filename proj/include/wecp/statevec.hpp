#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "wecp/errors.hpp"

namespace wecp {

using cx = std::complex<double>;

/// Polarization basis labels. Encoding: H = 0, V = 1.
enum class Polarization : int { H = 0, V = 1 };

/// Exact pure state over labeled polarization qubits.
///
/// Basis-string indexing: H = 0, V = 1, leftmost label is the most
/// significant bit. Instances are immutable after construction.
class PureState {
public:
    PureState(std::vector<std::string> labels, Eigen::VectorXcd amplitudes);

    const std::vector<std::string>& labels() const { return labels_; }
    const Eigen::VectorXcd& amplitudes() const { return amps_; }
    std::size_t num_qubits() const { return labels_.size(); }
    std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }

    double norm() const { return amps_.norm(); }
    PureState normalized() const;

    /// Position of a label in the label list; throws LabelError if absent.
    int label_index(std::string_view label) const;
    bool has_label(std::string_view label) const;

    /// Amplitude of a basis string such as "HVH" (one character per label).
    cx amplitude(std::string_view basis) const;

private:
    std::vector<std::string> labels_;
    Eigen::VectorXcd amps_;
};

/// Two-qubit-or-more reduced density matrix with its retained labels.
struct DensityMatrix {
    std::vector<std::string> labels;
    Eigen::MatrixXcd matrix;
};

/// One-photon state c_H|H> + c_V|V>, normalized. Throws InvalidStateError
/// if both amplitudes vanish.
PureState make_single_photon(cx c_h, cx c_v, std::string label);

/// Product state with concatenated labels. Throws LabelError on collision.
PureState tensor(const PureState& s1, const PureState& s2);

struct Projection {
    double probability = 0.0;
    PureState state;       // label removed; renormalized unless vanished
    bool vanished = false; // probability was (numerically) zero
};

/// Project one qubit onto the direction d_h|H> + d_v|V> (must be normalized)
/// and remove it from the state.
Projection project(const PureState& s, std::string_view label, cx d_h, cx d_v);

/// Apply a 2x2 unitary to one qubit. Throws NonUnitaryError if the gate is
/// not unitary within kAlgebraTol.
PureState apply_one_qubit(const PureState& s, std::string_view label,
                          const Eigen::Matrix2cd& gate);

/// Partial trace over the complement of `keep` (output qubit order = keep order).
DensityMatrix reduce(const PureState& s, const std::vector<std::string>& keep);

Eigen::Matrix2cd sigma_x();
Eigen::Matrix2cd sigma_z();

}  // namespace wecp
