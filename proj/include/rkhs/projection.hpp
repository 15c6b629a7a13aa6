#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "rkhs/gram.hpp"
#include "rkhs/kernels.hpp"
#include "rkhs/point.hpp"

namespace rkhs {

/// A black-box function on S. Must be deterministic: repeated evaluation at
/// the same point agrees, and evaluation must tolerate concurrent calls.
class FunctionSource {
public:
    using Fn = std::function<double(const Point&)>;

    FunctionSource(Fn fn) : fn_(std::move(fn)) {}

    double operator()(const Point& p) const { return fn_(p); }

    static FunctionSource constant(double c) {
        return FunctionSource([c](const Point&) { return c; });
    }
    static FunctionSource coordinate(std::size_t axis = 0) {
        return FunctionSource([axis](const Point& p) { return p[axis]; });
    }
    static FunctionSource kernel_section(const Kernel& k, const Point& at) {
        return FunctionSource([k, at](const Point& p) { return k(p, at); });
    }
    /// Table lookup by exact coordinate match; off-table points are errors.
    static FunctionSource from_values(const PointSet& F, std::vector<double> values);

    Eigen::VectorXd restrict_to(const PointSet& F) const;  // f|_F

private:
    Fn fn_;
};

/// Finite kernel expansion f(.) = sum_j coeffs[j] k(., support[j]), an
/// element of the span L_F(k).
struct RkhsFunction {
    Kernel kernel;
    PointSet support;
    Eigen::VectorXd coeffs;

    double operator()(const Point& p) const;
    /// coeffs^T K_F coeffs, clamped at 0 (PD slack is -1e-12 scale).
    double norm_sq() const;
    FunctionSource as_source() const;
};

/// Interpolation projection Q_F: coeffs = K_F^[-1] (f|_F). F is expected to
/// be full rank (run select_independent first); otherwise the Moore-Penrose
/// action is used.
RkhsFunction qf_project(const Kernel& k, const PointSet& F, const FunctionSource& f);

/// ||Q_F f||^2 = (f|_F)^T K_F^[-1] (f|_F), >= 0.
double qf_norm_sq(const Kernel& k, const PointSet& F, const FunctionSource& f);

/// |(Q_F f)(s0) - f(s0)| for s0 in F (exact-match membership required).
double reproduce_check(const Kernel& k, const PointSet& F, const FunctionSource& f,
                       const Point& s0);

enum class TraceVerdict { bounded, diverging, inconclusive };
std::string to_string(TraceVerdict v);

struct NormTraceStage {
    std::size_t set_size;
    double norm_sq;
    double condition_estimate;
    std::string flags;  // empty, "pinv", or "dependent"
};

struct NormTrace {
    std::vector<NormTraceStage> stages;
    TraceVerdict verdict = TraceVerdict::inconclusive;
    double sup_estimate = 0.0;
};

struct TraceOptions {
    double plateau_tol = 1e-6;       // last plateau_window relative increments below => bounded
    int plateau_window = 3;
    double divergence_slope = 0.2;   // log norm_sq vs log |F| slope over the last half
    double condition_limit = 1e12;   // beyond this a stage is recomputed via the pinv path
    double dependent_tol = 1e-13;    // relative pivot floor in the incremental factor
};

/// Norm trace ||Q_{F_i} f||^2 along a nested chain F_0 c F_1 c ... and the
/// finite-machine verdict on the supremum. The chain is evaluated through
/// one incremental Cholesky factor in chain order, so the reported trace is
/// nondecreasing by construction (each stage extends a sum of squares);
/// points whose pivot collapses are skipped and flagged, and stages whose
/// condition estimate exceeds condition_limit are recomputed through the
/// pseudo-inverse and flagged "pinv".
///
/// Verdicts are heuristic by nature: a chain samples the filter of finite
/// subsets, it cannot certify membership for arbitrary f.
NormTrace norm_sup_estimate(const Kernel& k, const std::vector<PointSet>& nested,
                            const FunctionSource& f, const TraceOptions& opt = {});

void write_norm_trace_csv(std::ostream& out, const NormTrace& trace);

/// Dyadic refinement chain on [a,b]: level l holds the points
/// a + j (b-a) / 2^l for j = (include_left ? 0 : 1) .. 2^l.
std::vector<PointSet> dyadic_chain(double a, double b, int levels, bool include_left = true);

/// Lowest-index-first chain over a discrete set: prefixes of F at the given
/// sizes (each size clamped to |F|, strictly increasing).
std::vector<PointSet> prefix_chain(const PointSet& F, const std::vector<std::size_t>& sizes);

}  // namespace rkhs
