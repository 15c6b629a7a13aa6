#include "rkhs/gaussian.hpp"

#include <cmath>
#include <stdexcept>

#include "rkhs/quadrature.hpp"

namespace rkhs {

double gaussian_even_moment(int n, double h_norm) {
    if (n < 0) throw std::invalid_argument("gaussian_even_moment: n must be nonnegative");
    if (n > 150) throw std::invalid_argument("gaussian_even_moment: n > 150 exceeds the guard");
    if (!(h_norm > 0.0)) throw std::invalid_argument("gaussian_even_moment: h_norm must be > 0");
    if (n == 0) return 1.0;
    const double log_val = std::lgamma(2.0 * n + 1.0) - n * std::log(2.0) -
                           std::lgamma(n + 1.0) + 2.0 * n * std::log(h_norm);
    if (log_val > 709.0) throw std::overflow_error("gaussian_even_moment: value overflows double");
    return std::exp(log_val);
}

double gaussian_moment(int n, double h_norm) {
    if (n < 0) throw std::invalid_argument("gaussian_moment: n must be nonnegative");
    if (n % 2 == 1) return 0.0;
    return gaussian_even_moment(n / 2, h_norm);
}

static double raw_moment(const SignedMeasure& mu, int n) {
    mu.validate();
    double acc = 0.0;
    if (mu.form == SignedMeasure::Form::atomic) {
        for (std::size_t i = 0; i < mu.points.size(); ++i)
            acc += mu.weights[static_cast<Eigen::Index>(i)] * std::pow(mu.points[i][0], n);
    } else {
        for (std::size_t i = 0; i < mu.nodes.size(); ++i)
            acc += mu.quad_weights[static_cast<Eigen::Index>(i)] *
                   mu.density[static_cast<Eigen::Index>(i)] * std::pow(mu.nodes[i][0], n);
    }
    if (!std::isfinite(acc))
        throw std::domain_error("moment_membership: moment of order " + std::to_string(n) +
                                " is not finite");
    return acc;
}

MomentMembershipReport moment_membership(const SignedMeasure& mu, int N) {
    if (N < 0) throw std::invalid_argument("moment_membership: N must be nonnegative");
    MomentMembershipReport report;
    report.partial_sums.reserve(static_cast<std::size_t>(N) + 1);
    double sum = 0.0;
    std::vector<double> increments;
    for (int n = 0; n <= N; ++n) {
        const double m = raw_moment(mu, n);
        double term = 0.0;
        if (m != 0.0) {
            const double log_term = 2.0 * (std::log(std::abs(m)) - std::lgamma(n + 1.0));
            if (log_term > 709.0)
                throw std::domain_error("moment_membership: series term overflows double");
            term = std::exp(log_term);
        }
        sum += term;
        increments.push_back(term);
        report.partial_sums.push_back(sum);
    }
    const int window = 3;
    if (static_cast<int>(increments.size()) > window && sum >= 0.0) {
        bool vanished = true;
        bool growing = true;
        for (int i = 0; i < window; ++i) {
            const double inc = increments[increments.size() - 1 - static_cast<std::size_t>(i)];
            const double prev = increments[increments.size() - 2 - static_cast<std::size_t>(i)];
            if (inc >= 1e-14 * std::max(sum, 1e-300)) vanished = false;
            if (inc <= prev) growing = false;
        }
        if (vanished)
            report.verdict = TraceVerdict::bounded;
        else if (growing)
            report.verdict = TraceVerdict::diverging;
    }
    return report;
}

double bessel_pairing_closed_form(double h1_norm, double h2_norm, int series_truncation) {
    if (!(h1_norm > 0.0) || !(h2_norm > 0.0))
        throw std::invalid_argument("bessel_pairing_closed_form: norms must be positive");
    const KernelSpec spec = KernelSpec::bessel(series_truncation);
    return eval_kernel(spec, Point::scalar(h1_norm * h1_norm / 2.0),
                       Point::scalar(h2_norm * h2_norm / 2.0));
}

SignedMeasure materialize_gaussian(const GaussianMeasureSpec& spec) {
    if (!(spec.h_norm > 0.0))
        throw std::invalid_argument("materialize_gaussian: h_norm must be positive");
    if (spec.gh_order < 2) throw std::invalid_argument("materialize_gaussian: gh_order too small");
    const QuadRule gh = gauss_hermite_rule(spec.gh_order);
    const double scale = std::sqrt(2.0) * spec.h_norm;
    const double inv_norm = 1.0 / (std::sqrt(2.0 * M_PI) * spec.h_norm);
    PointSet nodes;
    std::vector<double> density, quad;
    for (std::size_t i = 0; i < gh.nodes.size(); ++i) {
        const double x = gh.nodes[i];
        const double t = scale * x;
        nodes.points.push_back(Point::scalar(t));
        density.push_back(inv_norm * std::exp(-x * x));  // exp(-t^2/(2 h^2))
        quad.push_back(gh.weights[i] * std::exp(x * x) * scale);
    }
    return SignedMeasure::grid(std::move(nodes), density, quad, QuadKind::gauss_hermite);
}

}  // namespace rkhs
