#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "rkhs/point.hpp"

namespace rkhs {

enum class KernelKind { brownian_min, bessel_series, fbm_singular, gauss_rbf };

std::string to_string(KernelKind kind);
KernelKind kernel_kind_from_string(const std::string& name);

/// Serializable description of a built-in positive definite kernel.
///
/// Built-ins (all real, symmetric, 1-d):
///   brownian_min   k(t,s) = min(t,s) on [0,inf)
///   bessel_series  k(t,s) = sum_{n>=0} (t s)^n / (n!)^2, truncated at
///                  `truncation_order` terms with early stop
///   fbm_singular   k(t,s) = |t-s|^(2H-2), H in [1/2,1); infinite on the
///                  diagonal
///   gauss_rbf      k(t,s) = exp(-(t-s)^2 / (2 sigma^2))
struct KernelSpec {
    KernelKind kind = KernelKind::brownian_min;
    std::map<std::string, double> params;  // hurst, truncation_order, width
    int domain_dim = 1;

    bool diagonal_singular() const { return kind == KernelKind::fbm_singular; }

    double hurst() const;            // fbm_singular only
    int truncation_order() const;    // bessel_series only, default 60
    double width() const;            // gauss_rbf only, default 1

    /// Throws std::invalid_argument if params are inconsistent with kind
    /// (unknown names, H outside [1/2,1), truncation_order < 1, width <= 0).
    void validate() const;

    static KernelSpec brownian();
    static KernelSpec bessel(int truncation_order = 60);
    static KernelSpec fbm(double hurst);
    static KernelSpec rbf(double width = 1.0);
};

/// Runtime kernel: an evaluator plus the metadata the library operations
/// need. Built from a KernelSpec, or directly, which is how the tests
/// inject doubles such as the constant kernel or an indefinite function.
class Kernel {
public:
    using EvalFn = std::function<double(const Point&, const Point&)>;
    using DomainFn = std::function<bool(const Point&)>;

    Kernel(std::string name, int domain_dim, bool diagonal_singular, EvalFn eval,
           DomainFn in_domain = nullptr)
        : name_(std::move(name)),
          domain_dim_(domain_dim),
          diagonal_singular_(diagonal_singular),
          eval_(std::move(eval)),
          in_domain_(std::move(in_domain)) {}

    static Kernel from_spec(const KernelSpec& spec);

    const std::string& name() const { return name_; }
    int domain_dim() const { return domain_dim_; }
    bool diagonal_singular() const { return diagonal_singular_; }

    /// k(t,s). Throws std::domain_error on out-of-domain points (domains are
    /// validated, never clamped) and on diagonal evaluation of a
    /// diagonal-singular kernel.
    double operator()(const Point& t, const Point& s) const;

    void require_in_domain(const Point& p) const;

private:
    std::string name_;
    int domain_dim_;
    bool diagonal_singular_;
    EvalFn eval_;
    DomainFn in_domain_;
};

double eval_kernel(const KernelSpec& spec, const Point& t, const Point& s);

/// The kernel-induced distance d_k(t,s) = sqrt(k(t,t) - 2 k(t,s) + k(s,s)).
/// Rejects diagonal-singular kernels.
double dk_metric(const Kernel& k, const Point& t, const Point& s);
double dk_metric(const KernelSpec& spec, const Point& t, const Point& s);

struct PdReport {
    double min_eigenvalue;
    bool pass;
};

/// Numerical positive-definiteness screen: pass iff the minimum eigenvalue
/// of the Gram matrix over F is >= -tol * max(1, max diagonal entry).
PdReport check_pd(const Kernel& k, const PointSet& F, double tol = 1e-10);

/// Partition of {0,...,|F|-1} into classes of d_k-equivalent points. Points
/// in one class are pairwise within tol; the representative is the first
/// occurrence. Mirrors the quotient S/~.
std::vector<std::vector<std::size_t>> detect_equivalent_points(const Kernel& k, const PointSet& F,
                                                               double tol = 1e-9);

}  // namespace rkhs
