#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "powerpoly/groebner.hpp"
#include "powerpoly/hypotheses.hpp"
#include "powerpoly/power.hpp"
#include "powerpoly/threshold.hpp"
#include "powerpoly/umpu.hpp"

namespace powerpoly::io {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Exact scalars: JSON integers or "p/q" strings. Floats are refused.
Rational rational_from_json(const json& j, const std::string& what);
json rational_to_json(const Rational& r);
RationalVector vector_from_json(const json& j, const std::string& what);
RationalMatrix matrix_from_json(const json& j, const std::string& what);
json vector_to_json(const RationalVector& v);
json exponents_to_json(const Exponents& e);

HypothesisSpec hypothesis_spec_from_json(const json& j);
json hypothesis_to_json(const NullHypothesis& h);

TestFunction test_from_json(const json& j);
json test_to_json(const TestFunction& phi);

json basis_to_json(const GroebnerBasis& gb, const std::vector<std::string>& vars);
json threshold_to_json(const ThresholdReport& r, const std::vector<std::string>& vars);
json umpu_power_to_json(const UMPUPower& u, const std::vector<std::string>& vars);
json existence_to_json(const ExistenceVerdict& v, const std::vector<std::string>& vars);
json polytope_to_json(const CoefficientPolytope& p, const std::vector<std::string>& vars);
json verdict_to_json(const UMPUVerdict& v, const CoefficientPolytope& p, const std::vector<std::string>& vars);

json read_json_file(const std::string& path);

}  // namespace powerpoly::io
