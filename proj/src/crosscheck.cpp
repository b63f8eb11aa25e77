#include "wecp/crosscheck.hpp"

#include <cmath>
#include <functional>
#include <map>

namespace wecp {

namespace {

double triple_deviation(const WCoefficients& x, const WCoefficients& y) {
    double dev = std::abs(std::abs(x.a) - std::abs(y.a));
    dev = std::max(dev, std::abs(std::abs(x.b) - std::abs(y.b)));
    dev = std::max(dev, std::abs(std::abs(x.c) - std::abs(y.c)));
    return dev;
}

// Compare a set of enumerated leaves, keyed by basis outcome, against the
// closed-form branches of one round. Posterior coefficients are compared in
// magnitude: the protocol removes residual signs by local phase flips.
double compare(const std::vector<OutcomeLeaf>& leaves,
               const std::map<std::string, const Branch*>& branches,
               const std::function<std::string(const OutcomeLeaf&)>& key_of,
               double perturb_success) {
    std::map<std::string, double> grouped;
    double total = 0.0;
    double dev = 0.0;
    for (const auto& leaf : leaves) {
        const std::string key = key_of(leaf);
        grouped[key] += leaf.probability;
        total += leaf.probability;
        if (!leaf.vanished) {
            dev = std::max(dev, triple_deviation(w_coefficients_of(leaf.posterior),
                                                 branches.at(key)->posterior));
        }
    }
    dev = std::max(dev, std::abs(total - 1.0));
    for (const auto& [key, branch] : branches) {
        double expected = branch->probability;
        if (branch->is_success) expected += perturb_success;
        dev = std::max(dev, std::abs(grouped.at(key) - expected));
    }
    return dev;
}

}  // namespace

double crosscheck_round_one_point(const WCoefficients& w, double perturb_p0) {
    const RoundReport round = run_round_one(w);
    std::map<std::string, const Branch*> branches;
    for (const auto& br : round.branches) branches[br.outcome] = &br;
    const auto leaves = enumerate_round_one(w);
    return compare(leaves, branches,
                   [](const OutcomeLeaf& leaf) {
                       return leaf.path[2].second + "." + leaf.path[3].second;
                   },
                   perturb_p0);
}

double crosscheck_round_two_point(const WCoefficients& w, Side side) {
    const RoundReport round =
        (side == Side::Charlie) ? run_round_two_charlie(w) : run_round_two_alice(w);
    std::map<std::string, const Branch*> branches;
    for (const auto& br : round.branches) branches[br.outcome] = &br;
    const auto leaves = enumerate_round_two(w, side);
    return compare(leaves, branches,
                   [](const OutcomeLeaf& leaf) { return leaf.path[1].second; }, 0.0);
}

CrosscheckReport crosscheck_round_one_grid(int steps, double perturb_p0) {
    if (steps < 2) {
        throw Error("crosscheck grid needs at least 2 steps per axis");
    }
    CrosscheckReport report;
    for (int i = 1; i <= steps; ++i) {
        const double a2 = static_cast<double>(i) / (steps + 1);
        for (int j = 1; j <= steps; ++j) {
            // gamma^2 fills a fraction of the remaining mass so beta^2 > 0.
            const double g2 = (static_cast<double>(j) / (steps + 1)) * (1.0 - a2);
            const double b2 = 1.0 - a2 - g2;
            const WCoefficients w{std::sqrt(a2), std::sqrt(b2), std::sqrt(g2)};
            report.max_deviation =
                std::max(report.max_deviation, crosscheck_round_one_point(w, perturb_p0));
            ++report.points;
        }
    }
    return report;
}

CrosscheckReport crosscheck_round_two_grid(int steps) {
    if (steps < 2) {
        throw Error("crosscheck grid needs at least 2 steps");
    }
    CrosscheckReport report;
    for (int i = 1; i <= steps; ++i) {
        const double c2 = static_cast<double>(i) / (steps + 1);
        const double b = std::sqrt((1.0 - c2) / 2.0);
        const double c = std::sqrt(c2);
        const WCoefficients charlie_w{b, b, c};
        const WCoefficients alice_w{c, b, b};
        report.max_deviation =
            std::max(report.max_deviation, crosscheck_round_two_point(charlie_w, Side::Charlie));
        report.max_deviation =
            std::max(report.max_deviation, crosscheck_round_two_point(alice_w, Side::Alice));
        report.points += 2;
    }
    return report;
}

}  // namespace wecp
