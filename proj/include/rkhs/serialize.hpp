#pragma once

#include <json.hpp>

#include "rkhs/applications.hpp"
#include "rkhs/fbm.hpp"
#include "rkhs/gaussian.hpp"
#include "rkhs/kernels.hpp"
#include "rkhs/measures.hpp"
#include "rkhs/projection.hpp"

namespace rkhs {

using nlohmann::json;

/// Throws std::invalid_argument when obj holds a key outside `allowed`.
/// Schemas are closed: a typo never silently becomes a default.
void require_keys(const json& obj, const std::vector<std::string>& allowed,
                  const std::string& where);

json to_json(const KernelSpec& spec);
KernelSpec kernel_spec_from_json(const json& j);

json to_json(const SignedMeasure& m);
SignedMeasure signed_measure_from_json(const json& j);

json to_json(const PdReport& r);
json to_json(const PairingResult& r);
json to_json(const DualNormReport& r);
json to_json(const IsometryReport& r);
json to_json(const LipschitzReport& r);
json to_json(const HausdorffReport& r);
json to_json(const NormTrace& t);
json to_json(const MomentMembershipReport& r);

Point point_from_json(const json& j);
PointSet point_set_from_json(const json& j);
json to_json(const Point& p);
json to_json(const PointSet& ps);

DiscreteRandomVariable random_variable_from_json(const json& j);

/// Function specs for the CLI: {"type":"constant","value":v},
/// {"type":"coordinate"}, {"type":"kernel_section","at":[...]},
/// {"type":"values","points":[[...]],"values":[...]},
/// {"type":"combination","points":[[...]],"coeffs":[...]}.
FunctionSource function_from_json(const Kernel& k, const json& j);

}  // namespace rkhs
