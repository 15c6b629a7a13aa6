#include "rkhs/projection.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "rkhs/csv.hpp"

namespace rkhs {

FunctionSource FunctionSource::from_values(const PointSet& F, std::vector<double> values) {
    if (F.size() != values.size())
        throw std::invalid_argument("FunctionSource::from_values: size mismatch");
    auto pts = F;
    return FunctionSource([pts, values = std::move(values)](const Point& p) {
        return values[pts.index_of(p)];
    });
}

Eigen::VectorXd FunctionSource::restrict_to(const PointSet& F) const {
    Eigen::VectorXd v(F.size());
    for (std::size_t i = 0; i < F.size(); ++i) v[static_cast<Eigen::Index>(i)] = fn_(F[i]);
    return v;
}

double RkhsFunction::operator()(const Point& p) const {
    double acc = 0.0;
    for (std::size_t j = 0; j < support.size(); ++j)
        acc += coeffs[static_cast<Eigen::Index>(j)] * kernel(p, support[j]);
    return acc;
}

double RkhsFunction::norm_sq() const {
    if (support.empty()) return 0.0;
    const Eigen::MatrixXd K = gram_matrix(kernel, support);
    return std::max(0.0, coeffs.dot(K * coeffs));
}

FunctionSource RkhsFunction::as_source() const {
    auto self = *this;
    return FunctionSource([self](const Point& p) { return self(p); });
}

RkhsFunction qf_project(const Kernel& k, const PointSet& F, const FunctionSource& f) {
    GramFactor G = build_gram(k, F);
    return RkhsFunction{k, F, G.pinv_apply(f.restrict_to(F))};
}

double qf_norm_sq(const Kernel& k, const PointSet& F, const FunctionSource& f) {
    GramFactor G = build_gram(k, F);
    return G.quadratic_form(f.restrict_to(F));
}

double reproduce_check(const Kernel& k, const PointSet& F, const FunctionSource& f,
                       const Point& s0) {
    if (!F.contains(s0)) throw std::invalid_argument("reproduce_check: s0 not in F");
    GramFactor G = build_gram(k, F);
    const Eigen::VectorXd c = G.pinv_apply(f.restrict_to(F));
    const Eigen::Index row = static_cast<Eigen::Index>(F.index_of(s0));
    return std::abs(G.matrix().row(row).dot(c) - f(s0));
}

std::string to_string(TraceVerdict v) {
    switch (v) {
        case TraceVerdict::bounded: return "bounded";
        case TraceVerdict::diverging: return "diverging";
        case TraceVerdict::inconclusive: return "inconclusive";
    }
    throw std::logic_error("unreachable verdict");
}

namespace {

// Growing unpivoted Cholesky in chain order. Appending a point extends the
// factor by one row and the running norm by one square, which is what makes
// the reported trace monotone: the supremum in the filter construction is an
// increasing limit, and the factored prefix sums reproduce that exactly.
struct IncrementalChol {
    std::vector<Point> pts;          // accepted points
    std::vector<std::vector<double>> rows;  // L rows
    std::vector<double> z;           // L^{-1} (f restricted to accepted)
    double norm_sq = 0.0;
    double pivot2_max = 0.0, pivot2_min = 0.0;

    // Returns false when the candidate is numerically dependent.
    bool push(const Kernel& k, const Point& p, double fp, double dependent_tol) {
        const std::size_t n = pts.size();
        std::vector<double> w(n);
        for (std::size_t j = 0; j < n; ++j) {
            double v = k(p, pts[j]);
            for (std::size_t c = 0; c < j; ++c) v -= rows[j][c] * w[c];
            w[j] = v / rows[j][j];
        }
        double pivot2 = k(p, p);
        for (double wj : w) pivot2 -= wj * wj;
        const double scale = std::max(pivot2_max, k(p, p));
        if (!(pivot2 > dependent_tol * std::max(scale, 1e-300))) return false;
        double zn = fp;
        for (std::size_t j = 0; j < n; ++j) zn -= w[j] * z[j];
        const double ljj = std::sqrt(pivot2);
        zn /= ljj;
        w.push_back(ljj);
        rows.push_back(std::move(w));
        pts.push_back(p);
        z.push_back(zn);
        norm_sq += zn * zn;
        pivot2_max = std::max(pivot2_max, pivot2);
        pivot2_min = pivot2_min == 0.0 ? pivot2 : std::min(pivot2_min, pivot2);
        return true;
    }
};

TraceVerdict judge(const std::vector<NormTraceStage>& stages, const TraceOptions& opt) {
    const std::size_t n = stages.size();
    if (n < 2) return TraceVerdict::inconclusive;

    const std::size_t window = std::min<std::size_t>(static_cast<std::size_t>(opt.plateau_window),
                                                     n - 1);
    bool plateau = true;
    for (std::size_t i = n - window; i < n; ++i) {
        const double cur = stages[i].norm_sq;
        const double inc = cur - stages[i - 1].norm_sq;
        const double rel = std::abs(inc) / std::max(std::abs(cur), 1e-300);
        if (stages[i].norm_sq != 0.0 || stages[i - 1].norm_sq != 0.0) {
            if (rel >= opt.plateau_tol) plateau = false;
        }
    }
    if (plateau) return TraceVerdict::bounded;

    // least-squares slope of log(norm_sq) against log(set size), last half
    std::vector<double> xs, ys;
    for (std::size_t i = n / 2; i < n; ++i) {
        if (stages[i].norm_sq > 0.0 && stages[i].set_size > 0) {
            xs.push_back(std::log(static_cast<double>(stages[i].set_size)));
            ys.push_back(std::log(stages[i].norm_sq));
        }
    }
    if (xs.size() >= 2) {
        double mx = 0, my = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            mx += xs[i];
            my += ys[i];
        }
        mx /= static_cast<double>(xs.size());
        my /= static_cast<double>(xs.size());
        double sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sxx += (xs[i] - mx) * (xs[i] - mx);
            sxy += (xs[i] - mx) * (ys[i] - my);
        }
        if (sxx > 0 && sxy / sxx > opt.divergence_slope) return TraceVerdict::diverging;
    }
    return TraceVerdict::inconclusive;
}

}  // namespace

NormTrace norm_sup_estimate(const Kernel& k, const std::vector<PointSet>& nested,
                            const FunctionSource& f, const TraceOptions& opt) {
    if (nested.empty()) throw std::invalid_argument("norm_sup_estimate: empty chain");
    for (std::size_t i = 0; i + 1 < nested.size(); ++i)
        if (!nested[i].subset_of(nested[i + 1]))
            throw std::invalid_argument("norm_sup_estimate: nesting violation at stage " +
                                        std::to_string(i));

    NormTrace trace;
    IncrementalChol chol;
    PointSet seen;
    for (const auto& F : nested) {
        bool dependent_here = false;
        for (const auto& p : F.points) {
            if (seen.contains(p)) continue;
            seen.points.push_back(p);
            if (!chol.push(k, p, f(p), opt.dependent_tol)) dependent_here = true;
        }
        NormTraceStage stage;
        stage.set_size = F.size();
        stage.norm_sq = chol.norm_sq;
        stage.condition_estimate =
            chol.pivot2_min > 0.0 ? chol.pivot2_max / chol.pivot2_min
                                  : std::numeric_limits<double>::infinity();
        if (dependent_here) stage.flags = "dependent";
        if (stage.condition_estimate > opt.condition_limit) {
            stage.norm_sq = qf_norm_sq(k, F, f);
            stage.flags = stage.flags.empty() ? "pinv" : stage.flags + "+pinv";
        }
        trace.stages.push_back(std::move(stage));
    }
    trace.verdict = judge(trace.stages, opt);
    trace.sup_estimate = trace.stages.back().norm_sq;
    return trace;
}

void write_norm_trace_csv(std::ostream& out, const NormTrace& trace) {
    out << "set_size,norm_sq,condition_estimate,flags\n";
    for (const auto& st : trace.stages) {
        out << st.set_size << ',' << format_double(st.norm_sq) << ','
            << format_double(st.condition_estimate) << ',' << st.flags << '\n';
    }
}

std::vector<PointSet> dyadic_chain(double a, double b, int levels, bool include_left) {
    if (!(b > a)) throw std::invalid_argument("dyadic_chain: need b > a");
    if (levels < 0) throw std::invalid_argument("dyadic_chain: negative level count");
    std::vector<PointSet> chain;
    for (int l = 0; l <= levels; ++l) {
        const std::size_t n = static_cast<std::size_t>(1) << l;
        PointSet F;
        for (std::size_t j = include_left ? 0 : 1; j <= n; ++j)
            F.points.push_back(Point::scalar(a + (b - a) * static_cast<double>(j) /
                                                       static_cast<double>(n)));
        chain.push_back(std::move(F));
    }
    return chain;
}

std::vector<PointSet> prefix_chain(const PointSet& F, const std::vector<std::size_t>& sizes) {
    if (F.empty()) throw std::invalid_argument("prefix_chain: empty base set");
    std::vector<PointSet> chain;
    std::size_t last = 0;
    for (std::size_t s : sizes) {
        const std::size_t n = std::min(s, F.size());
        if (n <= last) continue;
        PointSet stage;
        stage.points.assign(F.points.begin(), F.points.begin() + static_cast<long>(n));
        chain.push_back(std::move(stage));
        last = n;
    }
    if (chain.empty()) throw std::invalid_argument("prefix_chain: no usable stage sizes");
    return chain;
}

}  // namespace rkhs
