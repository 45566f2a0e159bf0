#pragma once

#include <string>

#include <json.hpp>

#include "hconv/analysis.hpp"
#include "hconv/complex_poly.hpp"
#include "hconv/geometry.hpp"
#include "hconv/harmonic.hpp"

namespace hconv {

/// All CLI documents use ordered_json so that key order is fixed and
/// repeated runs emit identical bytes.
using Json = nlohmann::ordered_json;

Json to_json(const ZeroLocationReport& rep);
Json to_json(const TheoremVerdict& v);
Json to_json(const HarmonicMap& f);

std::string zero_method_token(ZeroMethod m);
std::string zero_verdict_token(ZeroVerdict v);
ZeroMethod parse_zero_method(const std::string& token);

/// Accepts "pi", "pi/2", "2pi/3", "-pi/4", and plain decimal radians.
double parse_theta(const std::string& text);

/// Curve sampling spec "count@samples", e.g. "10@512".
struct CurveCountSpec {
  int count = 0;
  int samples = 0;
};
CurveCountSpec parse_curve_count_spec(const std::string& text);

}  // namespace hconv
