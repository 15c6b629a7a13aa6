#include "rkhs/applications.hpp"

#include <cmath>
#include <stdexcept>

namespace rkhs {

void DiscreteRandomVariable::validate() const {
    if (values.empty()) throw std::invalid_argument("DiscreteRandomVariable: empty sample space");
    if (static_cast<std::size_t>(probabilities.size()) != values.size())
        throw std::invalid_argument("DiscreteRandomVariable: probabilities/values mismatch");
    if (!(probabilities.array() >= 0.0).all())
        throw std::invalid_argument("DiscreteRandomVariable: negative probability");
    if (std::abs(probabilities.sum() - 1.0) > 1e-12)
        throw std::invalid_argument("DiscreteRandomVariable: probabilities must sum to 1");
}

SignedMeasure pushforward(const DiscreteRandomVariable& rv) {
    rv.validate();
    PointSet atoms;
    std::vector<double> mass;
    for (std::size_t i = 0; i < rv.omega_size(); ++i) {
        const Point& x = rv.values[i];
        bool merged = false;
        for (std::size_t a = 0; a < atoms.size(); ++a) {
            if (atoms[a] == x) {
                mass[a] += rv.probabilities[static_cast<Eigen::Index>(i)];
                merged = true;
                break;
            }
        }
        if (!merged) {
            atoms.points.push_back(x);
            mass.push_back(rv.probabilities[static_cast<Eigen::Index>(i)]);
        }
    }
    return SignedMeasure::atomic(std::move(atoms), mass);
}

IsometryReport isometry_check(const Kernel& k, const DiscreteRandomVariable& rv) {
    rv.validate();
    const std::size_t m = rv.omega_size();
    double lhs = 0.0;
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = 0; v < m; ++v)
            lhs += rv.probabilities[static_cast<Eigen::Index>(u)] *
                   rv.probabilities[static_cast<Eigen::Index>(v)] * k(rv.values[u], rv.values[v]);
    const SignedMeasure push = pushforward(rv);
    const double rhs = measure_pair(k, push, push).value;
    return IsometryReport{lhs, rhs, std::abs(lhs - rhs)};
}

double rkhs_distance(const Kernel& k, const SignedMeasure& mu, const SignedMeasure& nu) {
    const double pmm = measure_pair(k, mu, mu).value;
    const double pnn = measure_pair(k, nu, nu).value;
    const double pmn = measure_pair(k, mu, nu).value;
    return std::sqrt(std::max(0.0, pmm - 2.0 * pmn + pnn));
}

LipschitzReport lipschitz_certificate(const Kernel& k, const RkhsFunction& f,
                                      const std::vector<std::pair<Point, Point>>& probe_pairs) {
    if (probe_pairs.empty())
        throw std::invalid_argument("lipschitz_certificate: no probe pairs");
    const double bound = std::sqrt(f.norm_sq());
    double max_ratio = 0.0;
    for (const auto& [t, s] : probe_pairs) {
        const double d = dk_metric(k, t, s);
        if (!(d > 0.0))
            throw std::invalid_argument("lipschitz_certificate: probe pair at zero d_k distance");
        max_ratio = std::max(max_ratio, std::abs(f(t) - f(s)) / d);
    }
    return LipschitzReport{max_ratio, bound, max_ratio <= bound + 1e-9};
}

double integrate_against(const Kernel& k, const RkhsFunction& f, const SignedMeasure& mu) {
    // int f dmu = sum_j c_j int k(t, s_j) dmu(t) = sum_j c_j (T_k mu)(s_j)
    const FunctionSource tk_mu = embed(k, mu);
    double acc = 0.0;
    for (std::size_t j = 0; j < f.support.size(); ++j)
        acc += f.coeffs[static_cast<Eigen::Index>(j)] * tk_mu(f.support[j]);
    return acc;
}

HausdorffReport hausdorff_lower_bound(const Kernel& k, const SignedMeasure& mu,
                                      const SignedMeasure& nu,
                                      const std::vector<RkhsFunction>& witnesses) {
    const double dist = rkhs_distance(k, mu, nu);
    double best = 0.0;
    for (const auto& f : witnesses) {
        const double norm = std::sqrt(f.norm_sq());
        if (norm > 1.0 + 1e-9)
            throw std::invalid_argument("hausdorff_lower_bound: witness norm " +
                                        std::to_string(norm) + " exceeds the unit ball");
        best = std::max(best, std::abs(integrate_against(k, f, mu) - integrate_against(k, f, nu)));
    }
    return HausdorffReport{best, dist, best <= dist + 1e-9};
}

}  // namespace rkhs
