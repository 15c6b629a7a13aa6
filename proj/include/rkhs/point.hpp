#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace rkhs {

/// A point of the index set S, stored as a real coordinate vector.
struct Point {
    std::vector<double> coords;

    Point() = default;
    explicit Point(std::vector<double> c) : coords(std::move(c)) {}
    Point(std::initializer_list<double> c) : coords(c) {}
    /// 1-d convenience; all built-in kernels live on subsets of the real line.
    static Point scalar(double t) { return Point{std::vector<double>{t}}; }

    std::size_t dim() const { return coords.size(); }
    double operator[](std::size_t i) const { return coords[i]; }

    /// Exact coordinate equality. Quotienting by the kernel metric is a
    /// separate, explicit operation (detect_equivalent_points).
    friend bool operator==(const Point& a, const Point& b) { return a.coords == b.coords; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

/// An ordered finite subset F of S. Order is significant: it fixes the row
/// and column indexing of every Gram matrix built from the set.
struct PointSet {
    std::vector<Point> points;
    std::vector<std::string> labels;  // optional, empty or one per point

    PointSet() = default;
    explicit PointSet(std::vector<Point> pts) : points(std::move(pts)) {}

    static PointSet scalars(const std::vector<double>& ts) {
        PointSet F;
        F.points.reserve(ts.size());
        for (double t : ts) F.points.push_back(Point::scalar(t));
        return F;
    }

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
    const Point& operator[](std::size_t i) const { return points[i]; }

    bool contains(const Point& p) const {
        for (const auto& q : points)
            if (q == p) return true;
        return false;
    }

    /// First index holding p, or throws.
    std::size_t index_of(const Point& p) const {
        for (std::size_t i = 0; i < points.size(); ++i)
            if (points[i] == p) return i;
        throw std::invalid_argument("PointSet::index_of: point not in set");
    }

    /// Set-wise inclusion under exact coordinate equality.
    bool subset_of(const PointSet& other) const {
        for (const auto& p : points)
            if (!other.contains(p)) return false;
        return true;
    }
};

}  // namespace rkhs
