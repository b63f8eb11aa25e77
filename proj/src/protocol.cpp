#include "wecp/protocol.hpp"

#include <cmath>

namespace wecp {

namespace {

constexpr double kZeroCoeffTol = 1e-12;

void require_normalized(const WCoefficients& w) {
    if (!w.is_normalized()) {
        throw InvalidStateError("W coefficients are not normalized");
    }
}

WCoefficients normalize_triple(double a, double b, double c) {
    const double n = std::sqrt(a * a + b * b + c * c);
    return {a / n, b / n, c / n};
}

const double kInvSqrt3 = 1.0 / std::sqrt(3.0);

}  // namespace

WCoefficients WCoefficients::normalized(double a, double b, double c) {
    const double n2 = a * a + b * b + c * c;
    if (n2 <= 0.0) {
        throw InvalidStateError("cannot normalize an all-zero coefficient triple");
    }
    const double n = std::sqrt(n2);
    return {a / n, b / n, c / n};
}

bool WCoefficients::is_normalized(double tol) const {
    return std::abs(a * a + b * b + c * c - 1.0) <= tol;
}

WPattern WCoefficients::pattern(double tol) const {
    const double aa = std::abs(a), ab = std::abs(b), ac = std::abs(c);
    const bool eq_ab = std::abs(aa - ab) <= tol;
    const bool eq_bc = std::abs(ab - ac) <= tol;
    if (eq_ab && eq_bc) return WPattern::Maximal;
    if (eq_ab) return WPattern::TwoEqualAB;
    if (eq_bc) return WPattern::TwoEqualBC;
    return WPattern::General;
}

PureState build_w_state(const WCoefficients& w, const std::vector<std::string>& labels) {
    require_normalized(w);
    if (labels.size() != 3) {
        throw DimensionError("a W state needs exactly three labels");
    }
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(8);
    amps(0b100) = w.a;  // |VHH>
    amps(0b010) = w.b;  // |HVH>
    amps(0b001) = w.c;  // |HHV>
    return PureState(labels, std::move(amps));
}

MeasBasis alice_basis(const WCoefficients& w) {
    const double n2 = w.a * w.a + w.b * w.b;
    if (n2 <= kZeroCoeffTol * kZeroCoeffTol) {
        throw DegenerateCoefficientsError("alice basis undefined: a = b = 0");
    }
    const double n = std::sqrt(n2);
    return MeasBasis{w.a / n, w.b / n, "a2"};
}

MeasBasis charlie_basis(const WCoefficients& w) {
    const double n2 = w.c * w.c + w.b * w.b;
    if (n2 <= kZeroCoeffTol * kZeroCoeffTol) {
        throw DegenerateCoefficientsError("charlie basis undefined: b = c = 0");
    }
    const double n = std::sqrt(n2);
    return MeasBasis{w.c / n, w.b / n, "c2"};
}

const Branch& RoundReport::success() const {
    for (const auto& br : branches) {
        if (br.is_success) return br;
    }
    throw Error("round report has no success branch");
}

RoundReport run_round_one(const WCoefficients& w) {
    require_normalized(w);
    const double al = std::abs(w.a), be = std::abs(w.b), ga = std::abs(w.c);
    if (al < kZeroCoeffTol || be < kZeroCoeffTol || ga < kZeroCoeffTol) {
        throw DegenerateCoefficientsError(
            "round one requires all three coefficients nonzero (W-class state)");
    }
    const double a2 = al * al, b2 = be * be, g2 = ga * ga;
    const double d = (a2 + b2) * (b2 + g2);

    const double p0 = 3.0 * a2 * b2 * g2 / d;
    const double p1 = (2.0 * a2 * b2 * b2 + a2 * g2 * g2) / d;
    const double p2 = (a2 * a2 * g2 + 2.0 * b2 * b2 * g2) / d;
    const double p3 = (a2 * a2 * b2 + b2 * b2 * b2 + b2 * g2 * g2) / d;

    RoundReport report;
    report.branches = {
        Branch{"phi1.phi2", p0, {kInvSqrt3, kInvSqrt3, kInvSqrt3}, true},
        Branch{"phi1.phi2_perp", p1, normalize_triple(b2, b2, -g2), false},
        Branch{"phi1_perp.phi2", p2, normalize_triple(-a2, b2, b2), false},
        Branch{"phi1_perp.phi2_perp", p3, normalize_triple(a2, b2, g2), false},
    };
    return report;
}

namespace {

// Shared core of the two single-photon rounds: one PCM against a fresh
// ancilla plus one rotated-basis measurement on the side holding the
// odd-one-out coefficient. `eq` is the repeated magnitude, `rest` the
// remaining one. Returns {success branch, failure branch} probabilities
// and the failure posterior pattern (eq^2, eq^2, -rest^2) up to ordering.
struct TwoEqualRound {
    double p_success;
    double p_failure;
    double eq2;    // squared repeated coefficient (unnormalized posterior entry)
    double rest2;  // squared odd coefficient
};

TwoEqualRound two_equal_round(double eq, double rest) {
    if (eq < kZeroCoeffTol) {
        throw DegenerateCoefficientsError(
            "single-photon round undefined: repeated coefficient is zero");
    }
    const double e2 = eq * eq, r2 = rest * rest;
    const double d = (2.0 * e2 + r2) * (e2 + r2);
    return TwoEqualRound{3.0 * e2 * r2 / d, (2.0 * e2 * e2 + r2 * r2) / d, e2, r2};
}

}  // namespace

RoundReport run_round_two_charlie(const WCoefficients& w) {
    require_normalized(w);
    const WCoefficients v = w.abs();
    const WPattern p = v.pattern();
    if (p != WPattern::TwoEqualAB && p != WPattern::Maximal) {
        throw PatternMismatchError("charlie-side round requires the (b, b, c) pattern");
    }
    const auto r = two_equal_round(v.a, v.c);
    RoundReport report;
    report.branches = {
        Branch{"phi2p", r.p_success, {kInvSqrt3, kInvSqrt3, kInvSqrt3}, true},
        Branch{"phi2p_perp", r.p_failure, normalize_triple(r.eq2, r.eq2, -r.rest2), false},
    };
    return report;
}

RoundReport run_round_two_alice(const WCoefficients& w) {
    require_normalized(w);
    const WCoefficients v = w.abs();
    const WPattern p = v.pattern();
    if (p != WPattern::TwoEqualBC && p != WPattern::Maximal) {
        throw PatternMismatchError("alice-side round requires the (a, b, b) pattern");
    }
    const auto r = two_equal_round(v.b, v.a);
    RoundReport report;
    report.branches = {
        Branch{"phi1p", r.p_success, {kInvSqrt3, kInvSqrt3, kInvSqrt3}, true},
        Branch{"phi1p_perp", r.p_failure, normalize_triple(-r.rest2, r.eq2, r.eq2), false},
    };
    return report;
}

namespace {

RoundReport dispatch_round(const WCoefficients& w) {
    switch (w.pattern()) {
        case WPattern::TwoEqualAB:
            return run_round_two_charlie(w);
        case WPattern::TwoEqualBC:
            return run_round_two_alice(w);
        case WPattern::General:
        case WPattern::Maximal:
            return run_round_one(w);
    }
    throw Error("unreachable");
}

// A residual whose coefficients have effectively collapsed onto fewer than
// the terms its round requires can no longer be concentrated; such leaves
// terminate instead of dispatching another round.
bool round_is_defined(const WCoefficients& v) {
    switch (v.pattern()) {
        case WPattern::TwoEqualAB:
            return v.a >= kZeroCoeffTol;
        case WPattern::TwoEqualBC:
            return v.b >= kZeroCoeffTol;
        default:
            return v.a >= kZeroCoeffTol && v.b >= kZeroCoeffTol && v.c >= kZeroCoeffTol;
    }
}

void expand(const WCoefficients& w, int remaining, double mass, const std::string& path,
            RecursionResult& out) {
    if (remaining == 0 || !round_is_defined(w.abs())) {
        out.leaves.push_back({path, mass, w, false});
        return;
    }
    // Phase-flip sign normalization before dispatching the next round.
    const RoundReport report = dispatch_round(w.abs());
    for (const auto& br : report.branches) {
        const std::string leaf_path = path.empty() ? br.outcome : path + "/" + br.outcome;
        if (br.is_success) {
            out.total_success_probability += mass * br.probability;
            out.leaves.push_back({leaf_path, mass * br.probability, br.posterior, true});
        } else {
            expand(br.posterior, remaining - 1, mass * br.probability, leaf_path, out);
        }
    }
}

}  // namespace

RecursionResult recurse(const WCoefficients& w, int max_depth) {
    if (max_depth < 0) {
        throw Error("recursion depth must be nonnegative");
    }
    require_normalized(w);
    RecursionResult result{max_depth, 0.0, {}};
    expand(w, max_depth, 1.0, "", result);
    return result;
}

}  // namespace wecp
