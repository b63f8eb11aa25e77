#include "wecp/pcm.hpp"

namespace wecp {

PcmResult apply_pcm(const PureState& s, std::string_view l1, std::string_view l2) {
    if (l1 == l2) {
        throw LabelError("parity check requires two distinct photons");
    }
    const int p1 = s.label_index(l1);
    const int p2 = s.label_index(l2);
    const int sh1 = static_cast<int>(s.num_qubits()) - 1 - p1;
    const int sh2 = static_cast<int>(s.num_qubits()) - 1 - p2;

    Eigen::VectorXcd even = Eigen::VectorXcd::Zero(s.dim());
    Eigen::VectorXcd odd = Eigen::VectorXcd::Zero(s.dim());
    for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(s.dim()); ++j) {
        const int b1 = static_cast<int>((j >> sh1) & 1);
        const int b2 = static_cast<int>((j >> sh2) & 1);
        (b1 == b2 ? even : odd)(j) = s.amplitudes()(j);
    }
    const double pe = even.squaredNorm();
    const double po = odd.squaredNorm();
    if (pe > 1e-24) even /= std::sqrt(pe);
    if (po > 1e-24) odd /= std::sqrt(po);
    return PcmResult{{PcmBranch{Parity::Even, pe, PureState(s.labels(), std::move(even))},
                      PcmBranch{Parity::Odd, po, PureState(s.labels(), std::move(odd))}}};
}

PureState correct_to_even(Parity parity, const PureState& s, std::string_view flip_label) {
    if (parity == Parity::Even) return s;
    return apply_one_qubit(s, flip_label, sigma_x());
}

}  // namespace wecp
