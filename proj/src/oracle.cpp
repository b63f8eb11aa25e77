#include "wecp/oracle.hpp"

#include <cmath>

#include "wecp/pcm.hpp"

namespace wecp {

namespace {

constexpr double kZeroCoeffTol = 1e-12;

struct Direction {
    std::string name;
    double h;
    double v;
};

// {cos|H> + sin|V>, sin|H> - cos|V>} measurement pair.
std::array<Direction, 2> basis_pair(const std::string& name, double cos_c, double sin_c) {
    return {Direction{name, cos_c, sin_c}, Direction{name + "_perp", sin_c, -cos_c}};
}

PureState plus_ancilla(std::string label) {
    const double r = 1.0 / std::sqrt(2.0);
    return make_single_photon(r, r, std::move(label));
}

std::string parity_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

}  // namespace

WCoefficients w_coefficients_of(const PureState& s) {
    if (s.num_qubits() != 3) {
        throw DimensionError("expected a three-qubit posterior");
    }
    double residual = 0.0;
    for (Eigen::Index j = 0; j < 8; ++j) {
        if (j == 0b100 || j == 0b010 || j == 0b001) continue;
        residual += std::norm(s.amplitudes()(j));
    }
    if (residual > kAlgebraTol) {
        throw InvalidStateError("posterior has weight outside the W basis");
    }
    const cx a = s.amplitude("VHH");
    const cx b = s.amplitude("HVH");
    const cx c = s.amplitude("HHV");
    if (std::abs(a.imag()) > kAlgebraTol || std::abs(b.imag()) > kAlgebraTol ||
        std::abs(c.imag()) > kAlgebraTol) {
        throw InvalidStateError("posterior has non-real W coefficients");
    }
    return WCoefficients{a.real(), b.real(), c.real()};
}

std::vector<OutcomeLeaf> enumerate_round_one(const WCoefficients& w) {
    if (!w.is_normalized()) {
        throw InvalidStateError("W coefficients are not normalized");
    }
    if (std::abs(w.a) < kZeroCoeffTol || std::abs(w.b) < kZeroCoeffTol ||
        std::abs(w.c) < kZeroCoeffTol) {
        throw DegenerateCoefficientsError("round-one enumeration needs nonzero coefficients");
    }
    const PureState five =
        tensor(tensor(build_w_state(w), plus_ancilla("a2")), plus_ancilla("c2"));

    const double na = std::sqrt(w.a * w.a + w.b * w.b);
    const double nc = std::sqrt(w.c * w.c + w.b * w.b);
    const auto alice_dirs = basis_pair("phi1", w.a / na, w.b / na);
    const auto charlie_dirs = basis_pair("phi2", w.c / nc, w.b / nc);

    std::vector<OutcomeLeaf> leaves;
    leaves.reserve(16);
    for (const PcmBranch& pa : apply_pcm(five, "a1", "a2").branches) {
        const PureState after_a = correct_to_even(pa.parity, pa.state, "a2");
        for (const PcmBranch& pc : apply_pcm(after_a, "c1", "c2").branches) {
            const PureState after_c = correct_to_even(pc.parity, pc.state, "c2");
            for (const Direction& da : alice_dirs) {
                const Projection proj_a = project(after_c, "a2", da.h, da.v);
                for (const Direction& dc : charlie_dirs) {
                    const Projection proj_c = project(proj_a.state, "c2", dc.h, dc.v);
                    OutcomeLeaf leaf{
                        {{"pcm_alice", parity_name(pa.parity)},
                         {"pcm_charlie", parity_name(pc.parity)},
                         {"alice_basis", da.name},
                         {"charlie_basis", dc.name}},
                        pa.probability * pc.probability * proj_a.probability *
                            proj_c.probability,
                        proj_c.state,
                        proj_a.vanished || proj_c.vanished};
                    leaves.push_back(std::move(leaf));
                }
            }
        }
    }
    return leaves;
}

std::vector<OutcomeLeaf> enumerate_round_two(const WCoefficients& w, Side side) {
    if (!w.is_normalized()) {
        throw InvalidStateError("W coefficients are not normalized");
    }
    const WCoefficients v = w.abs();
    const WPattern pattern = v.pattern();
    const WPattern wanted = (side == Side::Charlie) ? WPattern::TwoEqualAB : WPattern::TwoEqualBC;
    if (pattern != wanted && pattern != WPattern::Maximal) {
        throw PatternMismatchError("coefficient pattern does not match the requested side");
    }

    const bool charlie = (side == Side::Charlie);
    const std::string w_photon = charlie ? "c1" : "a1";
    const std::string ancilla = charlie ? "c2" : "a2";
    const double eq = charlie ? v.a : v.b;    // repeated coefficient
    const double rest = charlie ? v.c : v.a;  // odd-one-out coefficient
    const double n = std::sqrt(eq * eq + rest * rest);
    const auto dirs = basis_pair(charlie ? "phi2p" : "phi1p", rest / n, eq / n);

    const PureState four = tensor(build_w_state(v), plus_ancilla(ancilla));

    std::vector<OutcomeLeaf> leaves;
    leaves.reserve(4);
    for (const PcmBranch& pb : apply_pcm(four, w_photon, ancilla).branches) {
        const PureState corrected = correct_to_even(pb.parity, pb.state, ancilla);
        for (const Direction& d : dirs) {
            const Projection proj = project(corrected, ancilla, d.h, d.v);
            leaves.push_back(OutcomeLeaf{{{"pcm", parity_name(pb.parity)}, {"basis", d.name}},
                                         pb.probability * proj.probability,
                                         proj.state,
                                         proj.vanished});
        }
    }
    return leaves;
}

}  // namespace wecp
