#include "rkhs/kernels.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "rkhs/gram.hpp"

namespace rkhs {

std::string to_string(KernelKind kind) {
    switch (kind) {
        case KernelKind::brownian_min: return "brownian_min";
        case KernelKind::bessel_series: return "bessel_series";
        case KernelKind::fbm_singular: return "fbm_singular";
        case KernelKind::gauss_rbf: return "gauss_rbf";
    }
    throw std::logic_error("unreachable kernel kind");
}

KernelKind kernel_kind_from_string(const std::string& name) {
    if (name == "brownian_min") return KernelKind::brownian_min;
    if (name == "bessel_series") return KernelKind::bessel_series;
    if (name == "fbm_singular") return KernelKind::fbm_singular;
    if (name == "gauss_rbf") return KernelKind::gauss_rbf;
    throw std::invalid_argument("unknown kernel kind: " + name);
}

double KernelSpec::hurst() const {
    auto it = params.find("hurst");
    if (it == params.end()) throw std::invalid_argument("fbm_singular requires param 'hurst'");
    return it->second;
}

int KernelSpec::truncation_order() const {
    auto it = params.find("truncation_order");
    if (it == params.end()) return 60;
    return static_cast<int>(it->second);
}

double KernelSpec::width() const {
    auto it = params.find("width");
    if (it == params.end()) return 1.0;
    return it->second;
}

void KernelSpec::validate() const {
    if (domain_dim != 1) throw std::invalid_argument("built-in kernels are 1-d");
    std::vector<std::string> allowed;
    switch (kind) {
        case KernelKind::brownian_min: break;
        case KernelKind::bessel_series: {
            allowed = {"truncation_order"};
            if (truncation_order() < 1)
                throw std::invalid_argument("bessel_series requires truncation_order >= 1");
            break;
        }
        case KernelKind::fbm_singular: {
            allowed = {"hurst"};
            const double h = hurst();
            if (!(h >= 0.5 && h < 1.0))
                throw std::invalid_argument("fbm_singular requires hurst in [1/2, 1)");
            break;
        }
        case KernelKind::gauss_rbf: {
            allowed = {"width"};
            if (!(width() > 0.0)) throw std::invalid_argument("gauss_rbf requires width > 0");
            break;
        }
    }
    for (const auto& [name, value] : params) {
        (void)value;
        if (std::find(allowed.begin(), allowed.end(), name) == allowed.end())
            throw std::invalid_argument("kernel param '" + name + "' not valid for kind " +
                                        to_string(kind));
    }
}

KernelSpec KernelSpec::brownian() { return KernelSpec{KernelKind::brownian_min, {}, 1}; }

KernelSpec KernelSpec::bessel(int truncation_order) {
    return KernelSpec{KernelKind::bessel_series,
                      {{"truncation_order", static_cast<double>(truncation_order)}}, 1};
}

KernelSpec KernelSpec::fbm(double hurst) {
    return KernelSpec{KernelKind::fbm_singular, {{"hurst", hurst}}, 1};
}

KernelSpec KernelSpec::rbf(double width) {
    return KernelSpec{KernelKind::gauss_rbf, {{"width", width}}, 1};
}

// Partial sum of sum_n x^n/(n!)^2 with early stop on relative term size.
// The remainder after the last term is dominated by a geometric series with
// ratio |x|/(N+2)^2; if that bound is not negligible the truncation order
// was too small for this argument and we refuse to return a bad value.
static double bessel_series_sum(double x, int max_terms) {
    double term = 1.0;
    double sum = 1.0;
    for (int n = 1; n <= max_terms; ++n) {
        term *= x / (static_cast<double>(n) * static_cast<double>(n));
        sum += term;
        if (std::abs(term) < 1e-16 * std::abs(sum)) return sum;
    }
    const double np1 = static_cast<double>(max_terms) + 1.0;
    const double np2 = static_cast<double>(max_terms) + 2.0;
    const double next = std::abs(term) * std::abs(x) / (np1 * np1);
    const double ratio = std::abs(x) / (np2 * np2);
    if (ratio < 1.0 && next / (1.0 - ratio) <= 1e-12 * std::max(1.0, std::abs(sum))) return sum;
    std::ostringstream msg;
    msg << "bessel_series: truncation_order " << max_terms << " too small for |t*s| = "
        << std::abs(x);
    throw std::domain_error(msg.str());
}

Kernel Kernel::from_spec(const KernelSpec& spec) {
    spec.validate();
    switch (spec.kind) {
        case KernelKind::brownian_min:
            return Kernel(
                "brownian_min", 1, false,
                [](const Point& t, const Point& s) { return std::min(t[0], s[0]); },
                [](const Point& p) { return p[0] >= 0.0; });
        case KernelKind::bessel_series: {
            const int order = spec.truncation_order();
            return Kernel("bessel_series", 1, false,
                          [order](const Point& t, const Point& s) {
                              return bessel_series_sum(t[0] * s[0], order);
                          });
        }
        case KernelKind::fbm_singular: {
            const double expo = 2.0 * spec.hurst() - 2.0;
            return Kernel("fbm_singular", 1, true, [expo](const Point& t, const Point& s) {
                return std::pow(std::abs(t[0] - s[0]), expo);
            });
        }
        case KernelKind::gauss_rbf: {
            const double inv2s2 = 1.0 / (2.0 * spec.width() * spec.width());
            return Kernel("gauss_rbf", 1, false, [inv2s2](const Point& t, const Point& s) {
                const double d = t[0] - s[0];
                return std::exp(-d * d * inv2s2);
            });
        }
    }
    throw std::logic_error("unreachable kernel kind");
}

void Kernel::require_in_domain(const Point& p) const {
    if (static_cast<int>(p.dim()) != domain_dim_)
        throw std::domain_error("point dimension " + std::to_string(p.dim()) +
                                " does not match kernel domain dimension " +
                                std::to_string(domain_dim_));
    for (double c : p.coords)
        if (!std::isfinite(c)) throw std::domain_error("point has non-finite coordinate");
    if (in_domain_ && !in_domain_(p))
        throw std::domain_error("point outside the domain of kernel " + name_);
}

double Kernel::operator()(const Point& t, const Point& s) const {
    require_in_domain(t);
    require_in_domain(s);
    if (diagonal_singular_ && t == s)
        throw std::domain_error("kernel " + name_ + " is singular on the diagonal");
    return eval_(t, s);
}

double eval_kernel(const KernelSpec& spec, const Point& t, const Point& s) {
    return Kernel::from_spec(spec)(t, s);
}

double dk_metric(const Kernel& k, const Point& t, const Point& s) {
    if (k.diagonal_singular())
        throw std::domain_error("d_k undefined: kernel " + k.name() +
                                " has a singular diagonal");
    const double d2 = k(t, t) - 2.0 * k(t, s) + k(s, s);
    return std::sqrt(std::max(d2, 0.0));  // PD slack
}

double dk_metric(const KernelSpec& spec, const Point& t, const Point& s) {
    return dk_metric(Kernel::from_spec(spec), t, s);
}

PdReport check_pd(const Kernel& k, const PointSet& F, double tol) {
    if (F.empty()) throw std::invalid_argument("check_pd: empty point set");
    const Eigen::MatrixXd K = gram_matrix(k, F);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(K, Eigen::EigenvaluesOnly);
    const double min_eig = es.eigenvalues().minCoeff();
    const double scale = std::max(1.0, K.diagonal().maxCoeff());
    return PdReport{min_eig, min_eig >= -tol * scale};
}

std::vector<std::vector<std::size_t>> detect_equivalent_points(const Kernel& k, const PointSet& F,
                                                               double tol) {
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < F.size(); ++i) {
        bool placed = false;
        for (auto& cls : classes) {
            bool close_to_all = true;
            for (std::size_t j : cls) {
                if (dk_metric(k, F[i], F[j]) > tol) {
                    close_to_all = false;
                    break;
                }
            }
            if (close_to_all) {
                cls.push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back({i});
    }
    return classes;
}

}  // namespace rkhs
