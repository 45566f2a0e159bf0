#include "hconv/json_io.hpp"

#include <cmath>
#include <numbers>

namespace hconv {

std::string zero_method_token(ZeroMethod m) {
  switch (m) {
    case ZeroMethod::schur_cohn: return "schur_cohn";
    case ZeroMethod::cohn_chain: return "cohn_chain";
    case ZeroMethod::root_oracle: return "root_oracle";
    case ZeroMethod::auto_select: return "auto";
  }
  return "?";
}

ZeroMethod parse_zero_method(const std::string& token) {
  if (token == "schur_cohn") return ZeroMethod::schur_cohn;
  if (token == "cohn_chain") return ZeroMethod::cohn_chain;
  if (token == "root_oracle") return ZeroMethod::root_oracle;
  if (token == "auto") return ZeroMethod::auto_select;
  throw error("unknown zero-location mode '" + token + "'");
}

std::string zero_verdict_token(ZeroVerdict v) {
  switch (v) {
    case ZeroVerdict::all_inside: return "all_inside";
    case ZeroVerdict::boundary_cases: return "boundary_cases";
    case ZeroVerdict::has_outside: return "has_outside";
  }
  return "?";
}

Json to_json(const ZeroLocationReport& rep) {
  Json j;
  j["degree"] = rep.degree;
  j["inside"] = rep.inside;
  j["on"] = rep.on_circle;
  j["outside"] = rep.outside;
  j["determinants"] = rep.determinants;
  j["method"] = zero_method_token(rep.method);
  j["verdict"] = zero_verdict_token(rep.verdict);
  return j;
}

Json to_json(const TheoremVerdict& v) {
  Json j;
  j["statement_id"] = statement_token(v.statement);
  Json params = Json::object();
  for (const auto& [key, value] : v.params) params[key] = value;
  j["params"] = params;
  j["branch"] = branch_token(v.branch);
  j["pass"] = v.pass;
  Json witnesses = Json::array();
  for (const ModulusWitness& w : v.witnesses)
    witnesses.push_back(Json{{"z", {w.z.real(), w.z.imag()}}, {"modulus", w.modulus}});
  j["witnesses"] = witnesses;
  j["determinants"] = v.determinants;
  j["max_modulus"] = v.max_modulus;
  return j;
}

Json to_json(const HarmonicMap& f) {
  Json j;
  j["N"] = f.order();
  Json h = Json::array(), g = Json::array();
  for (int k = 0; k <= f.order(); ++k) {
    h.push_back({f.h.coeff(k).real(), f.h.coeff(k).imag()});
    g.push_back({f.g.coeff(k).real(), f.g.coeff(k).imag()});
  }
  j["h"] = h;
  j["g"] = g;
  j["closed_form"] = f.closed_form.to_string();
  return j;
}

double parse_theta(const std::string& text) { return parse_angle(text); }

CurveCountSpec parse_curve_count_spec(const std::string& text) {
  const auto at = text.find('@');
  if (at == std::string::npos) throw error("expected count@samples, got '" + text + "'");
  CurveCountSpec spec;
  spec.count = std::stoi(text.substr(0, at));
  spec.samples = std::stoi(text.substr(at + 1));
  if (spec.count < 1 || spec.samples < 2)
    throw error("curve spec out of range: '" + text + "'");
  return spec;
}

}  // namespace hconv
