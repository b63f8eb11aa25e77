#include "wecp/statevec.hpp"

#include <algorithm>
#include <set>

namespace wecp {

namespace {

// Position of a qubit's bit inside a basis index (leftmost label = MSB).
inline int bit_shift(std::size_t n, int pos) {
    return static_cast<int>(n) - 1 - pos;
}

// Remove the bit at `shift` from index `j`, compacting the remaining bits.
inline Eigen::Index drop_bit(Eigen::Index j, int shift) {
    const Eigen::Index high = j >> (shift + 1);
    const Eigen::Index low = j & ((Eigen::Index{1} << shift) - 1);
    return (high << shift) | low;
}

}  // namespace

PureState::PureState(std::vector<std::string> labels, Eigen::VectorXcd amplitudes)
    : labels_(std::move(labels)), amps_(std::move(amplitudes)) {
    const auto expected = Eigen::Index{1} << labels_.size();
    if (amps_.size() != expected) {
        throw DimensionError("amplitude vector length " + std::to_string(amps_.size()) +
                             " does not match 2^" + std::to_string(labels_.size()));
    }
    std::set<std::string> unique(labels_.begin(), labels_.end());
    if (unique.size() != labels_.size()) {
        throw LabelError("duplicate qubit labels in state");
    }
}

PureState PureState::normalized() const {
    const double n = norm();
    if (n < 1e-12) {
        throw InvalidStateError("cannot normalize a zero state");
    }
    return PureState(labels_, amps_ / n);
}

int PureState::label_index(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) return static_cast<int>(i);
    }
    throw LabelError("unknown qubit label: " + std::string(label));
}

bool PureState::has_label(std::string_view label) const {
    return std::any_of(labels_.begin(), labels_.end(),
                       [&](const std::string& l) { return l == label; });
}

cx PureState::amplitude(std::string_view basis) const {
    if (basis.size() != labels_.size()) {
        throw DimensionError("basis string length does not match qubit count");
    }
    Eigen::Index idx = 0;
    for (char ch : basis) {
        if (ch != 'H' && ch != 'V') {
            throw InvalidStateError("basis string must contain only H and V");
        }
        idx = (idx << 1) | (ch == 'V' ? 1 : 0);
    }
    return amps_(idx);
}

PureState make_single_photon(cx c_h, cx c_v, std::string label) {
    const double n2 = std::norm(c_h) + std::norm(c_v);
    if (n2 <= 0.0) {
        throw InvalidStateError("single-photon state with both amplitudes zero");
    }
    Eigen::VectorXcd amps(2);
    amps << c_h, c_v;
    return PureState({std::move(label)}, amps / std::sqrt(n2));
}

PureState tensor(const PureState& s1, const PureState& s2) {
    for (const auto& l : s2.labels()) {
        if (s1.has_label(l)) {
            throw LabelError("label collision in tensor product: " + l);
        }
    }
    std::vector<std::string> labels = s1.labels();
    labels.insert(labels.end(), s2.labels().begin(), s2.labels().end());
    Eigen::VectorXcd amps(s1.dim() * s2.dim());
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(s1.dim()); ++i) {
        for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(s2.dim()); ++j) {
            amps(i * static_cast<Eigen::Index>(s2.dim()) + j) =
                s1.amplitudes()(i) * s2.amplitudes()(j);
        }
    }
    return PureState(std::move(labels), std::move(amps));
}

Projection project(const PureState& s, std::string_view label, cx d_h, cx d_v) {
    const double dn = std::norm(d_h) + std::norm(d_v);
    if (std::abs(dn - 1.0) > kAlgebraTol) {
        throw InvalidStateError("projection direction is not normalized");
    }
    const int pos = s.label_index(label);
    const int shift = bit_shift(s.num_qubits(), pos);

    std::vector<std::string> labels;
    labels.reserve(s.num_qubits() - 1);
    for (std::size_t i = 0; i < s.num_qubits(); ++i) {
        if (static_cast<int>(i) != pos) labels.push_back(s.labels()[i]);
    }
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(s.dim()) / 2);
    for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(s.dim()); ++j) {
        const int bit = static_cast<int>((j >> shift) & 1);
        const cx overlap = (bit == 0) ? std::conj(d_h) : std::conj(d_v);
        out(drop_bit(j, shift)) += overlap * s.amplitudes()(j);
    }
    const double p = out.squaredNorm();
    if (p < 1e-24) {
        return Projection{0.0, PureState(std::move(labels), std::move(out)), true};
    }
    return Projection{p, PureState(std::move(labels), out / std::sqrt(p)), false};
}

PureState apply_one_qubit(const PureState& s, std::string_view label,
                          const Eigen::Matrix2cd& gate) {
    if ((gate.adjoint() * gate - Eigen::Matrix2cd::Identity()).norm() > kAlgebraTol) {
        throw NonUnitaryError("one-qubit gate is not unitary");
    }
    const int pos = s.label_index(label);
    const int shift = bit_shift(s.num_qubits(), pos);
    Eigen::VectorXcd out(s.dim());
    for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(s.dim()); ++j) {
        if ((j >> shift) & 1) continue;  // handle each (0,1) pair once
        const Eigen::Index j1 = j | (Eigen::Index{1} << shift);
        const cx a0 = s.amplitudes()(j);
        const cx a1 = s.amplitudes()(j1);
        out(j) = gate(0, 0) * a0 + gate(0, 1) * a1;
        out(j1) = gate(1, 0) * a0 + gate(1, 1) * a1;
    }
    return PureState(s.labels(), std::move(out));
}

DensityMatrix reduce(const PureState& s, const std::vector<std::string>& keep) {
    if (keep.empty()) {
        throw DimensionError("reduce requires a nonempty keep-set");
    }
    std::vector<int> keep_pos;
    keep_pos.reserve(keep.size());
    for (const auto& l : keep) keep_pos.push_back(s.label_index(l));

    const std::size_t n = s.num_qubits();
    const std::size_t k = keep.size();
    const Eigen::Index dim_keep = Eigen::Index{1} << k;
    const Eigen::Index dim_full = static_cast<Eigen::Index>(s.dim());

    // keep-index and trace-index of each full basis index
    std::vector<Eigen::Index> kidx(dim_full), tidx(dim_full);
    std::vector<bool> kept(n, false);
    for (int p : keep_pos) kept[p] = true;
    for (Eigen::Index j = 0; j < dim_full; ++j) {
        Eigen::Index ki = 0;
        for (std::size_t m = 0; m < k; ++m) {
            const int bit = static_cast<int>((j >> bit_shift(n, keep_pos[m])) & 1);
            ki = (ki << 1) | bit;
        }
        Eigen::Index ti = 0;
        for (std::size_t p = 0; p < n; ++p) {
            if (kept[p]) continue;
            ti = (ti << 1) | static_cast<int>((j >> bit_shift(n, static_cast<int>(p))) & 1);
        }
        kidx[j] = ki;
        tidx[j] = ti;
    }
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim_keep, dim_keep);
    for (Eigen::Index i = 0; i < dim_full; ++i) {
        for (Eigen::Index j = 0; j < dim_full; ++j) {
            if (tidx[i] != tidx[j]) continue;
            rho(kidx[i], kidx[j]) += s.amplitudes()(i) * std::conj(s.amplitudes()(j));
        }
    }
    return DensityMatrix{keep, std::move(rho)};
}

Eigen::Matrix2cd sigma_x() {
    Eigen::Matrix2cd m;
    m << 0, 1, 1, 0;
    return m;
}

Eigen::Matrix2cd sigma_z() {
    Eigen::Matrix2cd m;
    m << 1, 0, 0, -1;
    return m;
}

}  // namespace wecp
