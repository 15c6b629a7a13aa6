#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rkhs/kernels.hpp"
#include "rkhs/point.hpp"
#include "rkhs/rng.hpp"

namespace rkhs {

struct PropertyResult {
    std::string name;
    std::size_t trials;
    double max_violation;  // worst observed excess over the asserted bound
    double tolerance;
    bool pass;             // max_violation <= tolerance
};

/// Randomized invariant battery over the built-in kernels: metric axioms,
/// continuity bounds, Penrose identities, projection laws, pairing
/// inequalities, the closed-form cross-checks and the fbm two-route
/// agreement. Deterministic for a fixed seed.
std::vector<PropertyResult> run_verify_suite(std::uint64_t seed);

bool all_pass(const std::vector<PropertyResult>& results);

void write_verify_csv(std::ostream& out, const std::vector<PropertyResult>& results);

/// Well-separated random points inside the kernel's comfortable range (the
/// separation keeps Gram conditioning compatible with the tolerances the
/// battery asserts).
PointSet sample_points(Rng& rng, KernelKind kind, std::size_t n);

/// Sampling box and minimum separation used by sample_points.
void sampling_box(KernelKind kind, double& lo, double& hi, double& min_sep);

}  // namespace rkhs
