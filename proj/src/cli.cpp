#include "hconv/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "hconv/geometry.hpp"

namespace hconv::cli {

namespace {

int default_truncation() {
  if (const char* env = std::getenv("HC_TRUNCATION")) {
    const int n = std::atoi(env);
    if (n >= 8) return n;
  }
  return kDefaultTruncation;
}

struct Range {
  double lo = 0.0, hi = 0.0;
  int count = 1;
};

Range parse_range(const std::string& text) {
  Range r;
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() < 2 || parts.size() > 3)
    throw error("range must be lo:hi or lo:hi:count, got '" + text + "'");
  r.lo = parse_theta(parts[0]);  // accepts plain numbers and pi literals
  r.hi = parse_theta(parts[1]);
  r.count = parts.size() == 3 ? std::stoi(parts[2]) : 0;
  if (parts.size() == 3 && r.count < 1) throw error("range count must be >= 1");
  return r;
}

double range_value(const Range& r, int i) {
  if (r.count <= 1) return r.lo;
  return r.lo + (r.hi - r.lo) * i / (r.count - 1);
}

void emit(const RunConfig& config, const std::string& payload, std::ostream& out) {
  if (config.output_path.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(config.output_path, std::ios::binary);
  if (!file) throw error("cannot open output file '" + config.output_path + "'");
  file << payload;
}

HarmonicMap build_convolution(double a, const KernelSpec& kernel, int order, bool renorm) {
  HarmonicMap conv = convolve_half_plane_pair(a, shear_half_plane(kernel, order));
  return renorm ? renormalized(conv) : conv;
}

Json complex_pair(Complex z) { return Json{z.real(), z.imag()}; }

Json poly_json(const ComplexPolynomial& p) {
  Json arr = Json::array();
  for (const Complex& c : p.coeffs()) arr.push_back(complex_pair(c));
  return arr;
}

int run_shear(const RunConfig& config, std::ostream& out) {
  const KernelSpec kernel = KernelSpec::parse(config.params.at("kernel"));
  const HarmonicMap f = shear_half_plane(kernel, config.params.at("order"));
  emit(config, to_json(f).dump(2) + "\n", out);
  return 0;
}

int run_convolve(const RunConfig& config, std::ostream& out) {
  const KernelSpec kernel = KernelSpec::parse(config.params.at("kernel"));
  const HarmonicMap conv =
      build_convolution(config.params.at("a"), kernel, config.params.at("order"),
                        config.params.at("renormalize"));
  emit(config, to_json(conv).dump(2) + "\n", out);
  return 0;
}

int run_dilatation(const RunConfig& config, std::ostream& out) {
  const double a = config.params.at("a");
  const KernelSpec kernel = KernelSpec::parse(config.params.at("kernel"));
  const DilatationRational d = kernel.family == KernelSpec::Family::monomial
                                   ? dilatation_monomial(a, kernel.n, kernel.theta)
                                   : dilatation_mobius(a, kernel.b);
  Json j;
  j["a"] = a;
  j["kernel"] = kernel.to_string();
  j["phase"] = complex_pair(d.phase);
  j["power"] = d.monomial_power;
  j["numerator"] = poly_json(d.numerator);
  j["denominator"] = poly_json(d.denominator);
  if (config.params.contains("z")) {
    const Complex z = parse_complex(config.params.at("z"));
    j["z"] = complex_pair(z);
    j["value"] = complex_pair(d.value(z));
  }
  if (config.params.at("max_scan")) {
    PolarGrid grid;
    grid.radii = config.params.at("radii");
    grid.angles = config.params.at("angles");
    grid.r_max = config.params.at("rmax");
    const ScanResult scan = scan_modulus(d, grid);
    j["scan"] = Json{{"max_modulus", scan.max_modulus},
                     {"argmax", complex_pair(scan.argmax)},
                     {"skipped", scan.skipped}};
  }
  emit(config, j.dump(2) + "\n", out);
  return 0;
}

int run_zeros(const RunConfig& config, std::ostream& out) {
  const ComplexPolynomial p = parse_polynomial(config.params.at("poly"));
  if (p.degree() < 1) throw error("zeros: polynomial degree must be >= 1");
  const ZeroLocationReport rep =
      count_zeros_unit_disk(p, parse_zero_method(config.params.at("mode")));
  if (config.format == "text") {
    std::ostringstream os;
    os << "degree " << rep.degree << ": inside " << rep.inside << ", on " << rep.on_circle
       << ", outside " << rep.outside << " [" << zero_method_token(rep.method) << "] "
       << zero_verdict_token(rep.verdict) << "\n";
    emit(config, os.str(), out);
  } else {
    emit(config, to_json(rep).dump(2) + "\n", out);
  }
  return 0;
}

int run_verify(const RunConfig& config, std::ostream& out) {
  const std::string statement = config.params.at("statement");
  TheoremVerdict v;
  if (statement == "thm22")
    v = verify_monomial_convolution(config.params.at("n"), config.params.at("a"),
                                    config.params.at("theta"));
  else if (statement == "thm24")
    v = verify_moebius_convolution(config.params.at("a"), config.params.at("b"));
  else if (statement == "cor25")
    v = verify_self_convolution(config.params.at("a"));
  else if (statement == "example23")
    v = verify_counterexample();
  else
    throw error("unknown statement '" + statement + "'");
  if (config.format == "text") {
    emit(config, statement + ": " + (v.pass ? "pass" : "fail") + "\n", out);
  } else {
    emit(config, to_json(v).dump(2) + "\n", out);
  }
  return v.pass ? 0 : 2;
}

int run_scan(const RunConfig& config, std::ostream& out) {
  const Range nr = parse_range(config.params.at("n_range"));
  const Range ar = parse_range(config.params.at("a_range"));
  const Range tr = parse_range(config.params.at("theta_range"));
  const int n_lo = static_cast<int>(std::lround(nr.lo));
  const int n_hi = static_cast<int>(std::lround(nr.hi));
  Json cells = Json::array();
  int passed = 0, total = 0;
  for (int n = n_lo; n <= n_hi; ++n) {
    const int acount = ar.count > 0 ? ar.count : 5;
    const int tcount = tr.count > 0 ? tr.count : 4;
    for (int ia = 0; ia < acount; ++ia) {
      const double a = range_value({ar.lo, ar.hi, acount}, ia);
      if (std::abs(a) >= 1.0) continue;
      for (int it = 0; it < tcount; ++it) {
        const double theta = range_value({tr.lo, tr.hi, tcount}, it);
        const TheoremVerdict v = verify_monomial_convolution(n, a, theta);
        cells.push_back(Json{{"n", n},
                             {"a", a},
                             {"theta", normalize_angle(theta)},
                             {"branch", branch_token(v.branch)},
                             {"pass", v.pass},
                             {"max_modulus", v.max_modulus}});
        ++total;
        if (v.pass) ++passed;
      }
    }
  }
  Json j;
  j["total"] = total;
  j["passed"] = passed;
  j["cells"] = cells;
  emit(config, j.dump(2) + "\n", out);
  return 0;
}

int run_render(const RunConfig& config, std::ostream& out) {
  const double a = config.params.at("a");
  const KernelSpec kernel = KernelSpec::parse(config.params.at("kernel"));
  const double rmax = config.params.at("rmax");
  const CurveCountSpec circles = parse_curve_count_spec(config.params.at("circles"));
  const CurveCountSpec rays = parse_curve_count_spec(config.params.at("rays"));
  int order = config.params.at("order");
  if (order == 0) order = truncation_for_radius(rmax);

  const HarmonicMap conv = build_convolution(a, kernel, order, false);
  std::vector<std::pair<Polyline, SvgStyle>> curves;
  for (int j = 1; j <= circles.count; ++j)
    curves.emplace_back(sample_image(conv, CurveSpec::circle(rmax * j / circles.count),
                                     circles.samples),
                        SvgStyle{"#1f4e9c", 1.0});
  for (int k = 0; k < rays.count; ++k)
    curves.emplace_back(
        sample_image(conv, CurveSpec::ray(2.0 * std::numbers::pi * k / rays.count, rmax),
                     rays.samples),
        SvgStyle{"#888888", 0.6});

  // Half-plane images are unbounded near |z| = 1; a window keeps the figure
  // readable. "auto" fits the central mass, "full" is the raw bounding box.
  const std::string window_spec = config.params.at("window");
  if (window_spec == "full") {
    emit(config, render_svg(curves), out);
    return 0;
  }
  ViewWindow window;
  if (window_spec == "auto") {
    window = robust_window(curves);
  } else {
    std::vector<double> vals;
    std::stringstream ss(window_spec);
    std::string item;
    while (std::getline(ss, item, ':')) vals.push_back(std::stod(item));
    if (vals.size() != 4) throw error("window must be x0:x1:y0:y1, 'auto', or 'full'");
    window = ViewWindow{vals[0], vals[1], vals[2], vals[3]};
  }
  emit(config, render_svg(curves, 800.0, 800.0, &window), out);
  return 0;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "shear") return run_shear(config, out);
    if (config.command == "convolve") return run_convolve(config, out);
    if (config.command == "dilatation") return run_dilatation(config, out);
    if (config.command == "zeros") return run_zeros(config, out);
    if (config.command == "verify") return run_verify(config, out);
    if (config.command == "scan") return run_scan(config, out);
    if (config.command == "render") return run_render(config, out);
    err << "unknown command '" << config.command << "'\n";
    return 1;
  } catch (const numerical_error& e) {
    err << "numerical integrity error: " << e.what() << "\n";
    return 3;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Right half-plane harmonic mappings: shears, convolutions, dilatations,\n"
               "unit-circle zero location, and figure rendering."};
  app.require_subcommand(1);

  RunConfig config;
  config.format = "json";

  std::string kernel_str, poly_str, z_str, theta_str = "0";
  std::string circles_str = "10@512", rays_str = "16@256";
  std::string n_range, a_range, theta_range;
  double a = 0.0, b = 0.0, rmax = 0.999;
  int n = 1, order = default_truncation();
  int radii = 64, angles = 256;
  bool renorm = false, max_scan = false;

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("-o,--output", config.output_path, "write the artifact to this file");
    cmd->add_option("--format", config.format, "json|text|svg")
        ->check(CLI::IsMember({"json", "text", "svg"}));
  };

  CLI::App* shear = app.add_subcommand("shear", "construct a half-plane shear");
  shear->add_option("--kernel", kernel_str, "monomial:n=..,theta=.. or moebius:b=..")->required();
  shear->add_option("--order", order, "series truncation order");
  add_output(shear);

  CLI::App* conv = app.add_subcommand("convolve", "convolve f_a with a shear");
  conv->add_option("--a", a, "half-plane parameter, |a|<1")->required();
  conv->add_option("--kernel", kernel_str)->required();
  conv->add_option("--order", order);
  conv->add_flag("--renormalize", renorm, "rescale so h'(0)=1");
  add_output(conv);

  CLI::App* dil = app.add_subcommand("dilatation", "rational dilatation of a convolution");
  dil->add_option("--a", a)->required();
  dil->add_option("--kernel", kernel_str)->required();
  dil->add_option("--z", z_str, "evaluate at this point, e.g. 0.3+0.1i");
  dil->add_flag("--max-scan", max_scan, "scan |dilatation| over a polar grid");
  dil->add_option("--radii", radii);
  dil->add_option("--angles", angles);
  dil->add_option("--rmax", rmax);
  add_output(dil);

  CLI::App* zeros = app.add_subcommand("zeros", "locate polynomial zeros vs the unit circle");
  std::string mode = "auto";
  zeros->add_option("--poly", poly_str, "coefficients a0,a1,... with entries x+yi")->required();
  zeros->add_option("--mode", mode)->check(CLI::IsMember({"auto", "schur_cohn", "cohn_chain", "root_oracle"}));
  add_output(zeros);

  CLI::App* verify = app.add_subcommand("verify", "run a statement verifier");
  verify->require_subcommand(1);
  CLI::App* thm22 = verify->add_subcommand("thm22", "monomial-kernel convolution family");
  thm22->add_option("--n", n)->required();
  thm22->add_option("--a", a)->required();
  thm22->add_option("--theta", theta_str, "radians; accepts pi literals")->required();
  add_output(thm22);
  CLI::App* thm24 = verify->add_subcommand("thm24", "moebius-kernel convolution pair");
  thm24->add_option("--a", a)->required();
  thm24->add_option("--b", b)->required();
  add_output(thm24);
  CLI::App* cor25 = verify->add_subcommand("cor25", "self-convolution threshold");
  cor25->add_option("--a", a)->required();
  add_output(cor25);
  CLI::App* ex23 = verify->add_subcommand("example23", "fixed failing configuration");
  add_output(ex23);

  CLI::App* scan = app.add_subcommand("scan", "sweep the monomial-family verifier");
  scan->add_option("--n-range", n_range, "lo:hi")->required();
  scan->add_option("--a-range", a_range, "lo:hi:count")->required();
  scan->add_option("--theta-range", theta_range, "lo:hi:count (pi literals ok)")->required();
  add_output(scan);

  CLI::App* render = app.add_subcommand("render", "SVG image of circles and rays under f_a * f");
  render->add_option("--a", a)->required();
  render->add_option("--n", n, "monomial kernel power");
  render->add_option("--theta", theta_str, "monomial kernel phase");
  render->add_option("--kernel", kernel_str, "overrides --n/--theta");
  render->add_option("--circles", circles_str, "count@samples");
  render->add_option("--rays", rays_str, "count@samples");
  render->add_option("--rmax", rmax, "outermost sampled radius");
  render->add_option("--order", order, "series truncation (0 = pick from rmax)");
  std::string window_str = "auto";
  render->add_option("--window", window_str, "x0:x1:y0:y1 view box, 'auto', or 'full'");
  add_output(render);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 1;
  }

  try {
    if (shear->parsed()) {
      config.command = "shear";
      config.params = {{"kernel", kernel_str}, {"order", order}};
    } else if (conv->parsed()) {
      config.command = "convolve";
      config.params = {{"a", a}, {"kernel", kernel_str}, {"order", order}, {"renormalize", renorm}};
    } else if (dil->parsed()) {
      config.command = "dilatation";
      config.params = {{"a", a},       {"kernel", kernel_str}, {"max_scan", max_scan},
                       {"radii", radii}, {"angles", angles},     {"rmax", rmax}};
      if (!z_str.empty()) config.params["z"] = z_str;
    } else if (zeros->parsed()) {
      config.command = "zeros";
      config.params = {{"poly", poly_str}, {"mode", mode}};
    } else if (verify->parsed()) {
      config.command = "verify";
      std::string statement;
      if (thm22->parsed()) {
        statement = "thm22";
        config.params = {{"statement", statement}, {"n", n}, {"a", a},
                         {"theta", parse_theta(theta_str)}};
      } else if (thm24->parsed()) {
        statement = "thm24";
        config.params = {{"statement", statement}, {"a", a}, {"b", b}};
      } else if (cor25->parsed()) {
        statement = "cor25";
        config.params = {{"statement", statement}, {"a", a}};
      } else {
        statement = "example23";
        config.params = {{"statement", statement}};
      }
    } else if (scan->parsed()) {
      config.command = "scan";
      config.params = {{"n_range", n_range}, {"a_range", a_range}, {"theta_range", theta_range}};
    } else if (render->parsed()) {
      config.command = "render";
      config.format = "svg";
      if (kernel_str.empty())
        kernel_str = KernelSpec::monomial(n, parse_theta(theta_str)).to_string();
      const bool order_given = render->count("--order") > 0;
      const bool env_given = std::getenv("HC_TRUNCATION") != nullptr;
      config.params = {{"a", a},
                       {"kernel", kernel_str},
                       {"circles", circles_str},
                       {"rays", rays_str},
                       {"rmax", rmax},
                       {"order", (order_given || env_given) ? order : 0},
                       {"window", window_str}};
    }
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  return run(config, out, err);
}

}  // namespace hconv::cli
