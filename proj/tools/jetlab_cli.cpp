// Command-line front end: exact jet-differential algebra, value-distribution
// sweeps, and the degree-bound tables, emitting deterministic text/CSV/JSON.
//
// Exit codes: 0 success, 1 tolerance verdict failed, 2 usage error,
// 3 hypothesis violation (pole, containment, singular circle, bad input
// data), 4 numerical non-convergence.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "jetlab/bounds.hpp"
#include "jetlab/errors.hpp"
#include "jetlab/faa_di_bruno.hpp"
#include "jetlab/germ.hpp"
#include "jetlab/io.hpp"
#include "jetlab/minimal_geometry.hpp"
#include "jetlab/nevanlinna.hpp"
#include "jetlab/wronskian.hpp"

using namespace jetlab;
using nlohmann::json;

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Usage("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "a:b:steps" -> inclusive linear grid
std::vector<double> parse_grid(const std::string& text) {
  double a = 0, b = 0;
  int steps = 0;
  char c1 = 0, c2 = 0;
  std::istringstream ss(text);
  if (!(ss >> a >> c1 >> b >> c2 >> steps) || c1 != ':' || c2 != ':' || steps < 1)
    throw Usage("bad grid '" + text + "', expected a:b:steps");
  std::vector<double> grid;
  if (steps == 1) return {a};
  for (int i = 0; i < steps; ++i) grid.push_back(a + (b - a) * i / (steps - 1));
  return grid;
}

// "1..6" or "4"
std::pair<long, long> parse_range(const std::string& text) {
  auto to_long = [&](const std::string& s) {
    size_t used = 0;
    long v = 0;
    try {
      v = std::stol(s, &used);
    } catch (const std::exception&) {
      throw Usage("bad integer '" + s + "' in range '" + text + "'");
    }
    if (used != s.size()) throw Usage("bad integer '" + s + "' in range '" + text + "'");
    return v;
  };
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    long v = to_long(text);
    return {v, v};
  }
  return {to_long(text.substr(0, dots)), to_long(text.substr(dots + 2))};
}

struct Output {
  std::string path;
  void emit(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) throw Usage("cannot write file: " + path);
    out << text;
  }
};

std::string csv_row(const std::vector<double>& values) {
  std::string row;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) row += ",";
    row += format_double(values[i]);
  }
  return row + "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"symbolic-numeric laboratory for logarithmic jet differentials and "
               "value distribution on the unit disc"};
  app.require_subcommand(1);

  std::string out_path;
  bool as_json = false;
  double tol = 1e-6;
  app.add_option("--out", out_path, "write output to a file instead of stdout");
  app.add_flag("--json", as_json, "emit JSON instead of text/CSV where supported");
  app.add_option("--tol", tol, "verdict tolerance for sweep subcommands");

  // bounds
  auto* cmd_bounds = app.add_subcommand("bounds", "degree-bound table");
  std::string bounds_range = "1..6";
  cmd_bounds->add_option("--n", bounds_range, "dimension or range, e.g. 3 or 1..6");

  // faa
  auto* cmd_faa = app.add_subcommand("faa", "Faa di Bruno expansion of d^j log z");
  int faa_order = 3;
  int faa_var = 1;
  bool faa_inverse = false;
  cmd_faa->add_option("--order", faa_order, "derivative order j")->required();
  cmd_faa->add_option("--var", faa_var, "variable index");
  cmd_faa->add_flag("--inverse", faa_inverse, "expand (d^j z)/z in log coordinates instead");

  // jet-eval
  auto* cmd_jet = app.add_subcommand("jet-eval", "evaluate a jet polynomial on germ jets");
  std::string jet_poly_text;
  std::vector<std::string> jet_germs;
  std::string jet_point = "0";
  std::vector<int> jet_divisors;
  int jet_order_k = 0;
  cmd_jet->add_option("--poly", jet_poly_text, "jet polynomial, e.g. 3*(dlog[1]^2)*(d[2]^1)^2")
      ->required();
  cmd_jet->add_option("--germ", jet_germs, "germ literal per variable (repeat)")->required();
  cmd_jet->add_option("--at", jet_point, "evaluation point, complex rational");
  cmd_jet->add_option("--divisor", jet_divisors, "divisor variable indices");
  cmd_jet->add_option("--k", jet_order_k, "jet order (default: polynomial's max order)");

  // wronskian
  auto* cmd_wron = app.add_subcommand("wronskian", "weight/vanishing-order report");
  std::string wron_file;
  cmd_wron->add_option("--file", wron_file, "arrangement JSON")->required();

  // fmt-check
  auto* cmd_fmt = app.add_subcommand("fmt-check", "First Main Theorem sweep");
  std::string fmt_curve, fmt_hyp, fmt_grid = "0.5:0.95:6";
  cmd_fmt->add_option("--curve", fmt_curve, "curve JSON")->required();
  cmd_fmt->add_option("--hypersurface", fmt_hyp, "hypersurface JSON")->required();
  cmd_fmt->add_option("--grid", fmt_grid, "r grid a:b:steps");

  // transcendence
  auto* cmd_tr = app.add_subcommand("transcendence", "order-function growth ratios");
  std::string tr_curve, tr_grid = "0.5:0.99:25";
  std::vector<std::string> tr_germs;
  int tr_truncation = 64;
  cmd_tr->add_option("--curve", tr_curve, "curve JSON");
  cmd_tr->add_option("--germ", tr_germs, "germ-backed curve components (repeat)");
  cmd_tr->add_option("--grid", tr_grid, "r grid a:b:steps");
  cmd_tr->add_option("--truncation", tr_truncation, "germ truncation order");

  // ldl
  auto* cmd_ldl = app.add_subcommand("ldl", "logarithmic-derivative integral ratios");
  std::vector<std::string> ldl_phis;
  std::vector<int> ldl_lambdas;
  std::string ldl_grid = "0.5:0.99:25";
  double ldl_t = 0.0;
  cmd_ldl->add_option("--phi", ldl_phis, "exp(z), 1/(1-z), or a rational expression (repeat)")
      ->required();
  cmd_ldl->add_option("--lambda", ldl_lambdas, "derivative order per phi")->required();
  cmd_ldl->add_option("--t", ldl_t, "product exponent (enables the product estimate)");
  cmd_ldl->add_option("--grid", ldl_grid, "r grid a:b:steps");

  // gauss
  auto* cmd_gauss = app.add_subcommand("gauss", "Gauss map of Weierstrass data");
  std::string gauss_preset, gauss_file, gauss_check;
  double gauss_radius = 0.3;
  cmd_gauss->add_option("--preset", gauss_preset, "plane or enneper");
  cmd_gauss->add_option("--surface", gauss_file, "surface JSON");
  cmd_gauss->add_option("--check", gauss_check, "holomorphy: residual report");
  cmd_gauss->add_option("--samples-radius", gauss_radius, "radius of the sample circle");

  // area
  auto* cmd_area = app.add_subcommand("area", "area-form density / divergence sweep");
  std::string area_preset = "plane", area_file, area_at = "0", area_norm = "euclidean";
  std::string area_sweep, area_eps = "0.5:0.01:8";
  double area_p = 1.0;
  cmd_area->add_option("--preset", area_preset, "plane or enneper");
  cmd_area->add_option("--surface", area_file, "surface JSON");
  cmd_area->add_option("--at", area_at, "evaluation point (complex rational)");
  cmd_area->add_option("--norm", area_norm, "euclidean or max");
  cmd_area->add_option("--sweep", area_sweep, "'yau' emits partial-integral CSV");
  std::string area_h = "one";
  cmd_area->add_option("--model", area_h, "yau model: one or inv1mz");
  cmd_area->add_option("--p", area_p, "yau exponent p > 0");
  cmd_area->add_option("--eps", area_eps, "eps grid a:b:steps (decreasing)");

  // proof-integral
  auto* cmd_proof = app.add_subcommand("proof-integral", "closing-integral convergence sweep");
  double proof_ratio = 0.5;
  std::string proof_eps = "1e-2:1e-8:4";
  cmd_proof->add_option("--ratio", proof_ratio, "exponent 2m/m~")->required();
  cmd_proof->add_option("--eps", proof_eps, "eps grid a:b:steps (log-interpolated)");

  // jet-norm-integral
  auto* cmd_norm = app.add_subcommand("jet-norm-integral", "normalized jet-norm circle integrals");
  std::string norm_arr, norm_curve, norm_grid = "0.5:0.95:10";
  cmd_norm->add_option("--arrangement", norm_arr, "arrangement JSON")->required();
  cmd_norm->add_option("--curve", norm_curve, "curve JSON")->required();
  cmd_norm->add_option("--grid", norm_grid, "r grid a:b:steps");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  Output out{out_path};

  if (*cmd_bounds) {
    auto [lo, hi] = parse_range(bounds_range);
    if (lo < 1 || hi < lo) throw Usage("bounds: bad dimension range");
    bool all_ok = true;
    if (as_json) {
      json rows = json::array();
      for (long n = lo; n <= hi; ++n) {
        JetParameters p = jet_parameters(n);
        ThresholdComparison t = threshold_vs_stated_bound(n);
        all_ok = all_ok && t.ok;
        rows.push_back({{"n", n},
                        {"k", p.k.str()},
                        {"k_prime", p.k_prime.str()},
                        {"delta", p.delta.str()},
                        {"r0", p.r0.str()},
                        {"threshold", t.threshold.str()},
                        {"stated_bound", t.stated.str()},
                        {"ok", t.ok}});
      }
      out.emit(rows.dump(2) + "\n");
    } else {
      std::string table = "n,k,k',delta,r0,threshold,stated_bound,ok\n";
      for (long n = lo; n <= hi; ++n) {
        JetParameters p = jet_parameters(n);
        ThresholdComparison t = threshold_vs_stated_bound(n);
        all_ok = all_ok && t.ok;
        table += std::to_string(n) + "," + p.k.str() + "," + p.k_prime.str() + "," +
                 p.delta.str() + "," + p.r0.str() + "," + t.threshold.str() + "," +
                 t.stated.str() + "," + (t.ok ? "true" : "false") + "\n";
      }
      out.emit(table);
    }
    return all_ok ? 0 : 1;
  }

  if (*cmd_faa) {
    JetPolynomial p = faa_inverse ? faa_di_bruno_inverse(faa_var, faa_order)
                                  : faa_di_bruno_log(faa_var, faa_order);
    if (as_json) {
      json j = {{"order", faa_order},
                {"var", faa_var},
                {"direction", faa_inverse ? "inverse" : "log"},
                {"weight", *p.weight()},
                {"expansion", p.to_string()}};
      out.emit(j.dump(2) + "\n");
    } else {
      out.emit(p.to_string() + "\n");
    }
    return 0;
  }

  if (*cmd_jet) {
    JetPolynomial p = parse_jet_polynomial(jet_poly_text);
    int k = jet_order_k;
    if (k <= 0)
      for (const auto& coord : p.support()) k = std::max(k, coord.order);
    if (k <= 0) k = 1;
    std::vector<ExactGerm> germs;
    for (const auto& text : jet_germs)
      germs.push_back(parse_germ(text, default_truncation_order(k)));
    std::set<int> divisors(jet_divisors.begin(), jet_divisors.end());
    CRat z = parse_crat(jet_point);
    CRat value = evaluate(p, jet_of(germs, k, z, divisors));
    if (as_json) {
      json j = {{"value", to_string(value)},
                {"value_re", format_double(to_double(value.re))},
                {"value_im", format_double(to_double(value.im))}};
      out.emit(j.dump(2) + "\n");
    } else {
      out.emit(to_string(value) + "\n");
    }
    return 0;
  }

  if (*cmd_wron) {
    HyperplaneArrangement a = arrangement_from_json(read_file(wron_file));
    bool gp = check_general_position(a);
    if (!gp) {
      if (as_json)
        out.emit(json{{"general_position", false}}.dump(2) + "\n");
      else
        out.emit("general_position,false\n");
      return 3;
    }
    WronskianDifferential w = build_wronskian(a);
    if (as_json) {
      json j = {{"general_position", true},
                {"n", a.n},
                {"q", a.count()},
                {"weight", w.weight},
                {"vanishing_order", w.vanishing_order},
                {"numerator_terms", w.numerator.terms().size()},
                {"twist_exceeds_2m", w.vanishing_order > 2 * w.weight}};
      out.emit(j.dump(2) + "\n");
    } else {
      out.emit("general_position,true\nweight," + std::to_string(w.weight) +
               "\nvanishing_order," + std::to_string(w.vanishing_order) + "\n");
    }
    return 0;
  }

  if (*cmd_fmt) {
    ProjectiveCurve f = curve_from_json(read_file(fmt_curve));
    Hypersurface d = hypersurface_from_json(read_file(fmt_hyp));
    std::vector<double> grid = parse_grid(fmt_grid);
    auto rows = fmt_sweep(f, d, grid);
    std::string csv = "r,m,N,T,defect\n";
    double lo = rows.front().defect, hi = rows.front().defect;
    for (const auto& row : rows) {
      csv += csv_row({row.r, row.proximity, row.counting, row.order, row.defect});
      lo = std::min(lo, row.defect);
      hi = std::max(hi, row.defect);
    }
    out.emit(csv);
    return (hi - lo) <= tol ? 0 : 1;
  }

  if (*cmd_tr) {
    std::vector<double> grid = parse_grid(tr_grid);
    std::vector<double> ratios;
    if (!tr_curve.empty()) {
      ratios = transcendence_ratio(curve_from_json(read_file(tr_curve)), grid);
    } else if (!tr_germs.empty()) {
      GermCurve g;
      for (const auto& text : tr_germs)
        g.components.push_back(to_float(parse_germ(text, tr_truncation)));
      ratios = transcendence_ratio(g, grid);
    } else {
      throw Usage("transcendence: need --curve or --germ");
    }
    std::string csv = "r,ratio\n";
    for (size_t i = 0; i < grid.size(); ++i) csv += csv_row({grid[i], ratios[i]});
    out.emit(csv);
    return 0;
  }

  if (*cmd_ldl) {
    std::vector<double> grid = parse_grid(ldl_grid);
    if (ldl_phis.size() != ldl_lambdas.size())
      throw Usage("ldl: need one --lambda per --phi");
    double r_max = *std::max_element(grid.begin(), grid.end());
    std::vector<NowhereZeroFn> phis;
    for (const auto& text : ldl_phis) {
      std::string stripped;
      for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) stripped.push_back(ch);
      if (stripped == "exp(z)")
        phis.push_back(NowhereZeroFn::exponential());
      else if (stripped == "1/(1-z)")
        phis.push_back(NowhereZeroFn::geometric());
      else
        phis.push_back(NowhereZeroFn::from_rational(parse_rational_fn(text), r_max, text));
    }
    std::vector<double> ratios;
    if (ldl_t > 0.0)
      ratios = ldl_product_ratio(phis, ldl_lambdas, ldl_t, grid);
    else if (phis.size() == 1)
      ratios = ldl_ratio(phis[0], ldl_lambdas[0], grid);
    else
      throw Usage("ldl: multiple phis need --t for the product estimate");
    std::string csv = "r,ratio\n";
    for (size_t i = 0; i < grid.size(); ++i) csv += csv_row({grid[i], ratios[i]});
    out.emit(csv);
    return 0;
  }

  if (*cmd_gauss) {
    WeierstrassSurface s;
    if (!gauss_file.empty())
      s = surface_from_json(read_file(gauss_file));
    else if (gauss_preset == "plane")
      s = plane_surface();
    else if (gauss_preset == "enneper")
      s = enneper_surface();
    else
      throw Usage("gauss: need --preset plane|enneper or --surface FILE");

    bool conformal = verify_conformality(s);
    json j = {{"conformal", conformal}};
    if (conformal) {
      ProjectiveCurve g = gauss_map(s);
      j["constant"] = g.is_constant();
      std::vector<std::string> comps;
      for (const auto& c : g.components()) comps.push_back(to_string(c));
      j["components"] = comps;
      if (gauss_check == "holomorphy") {
        std::vector<std::complex<double>> samples;
        for (int i = 0; i < 16; ++i)
          samples.push_back(std::polar(gauss_radius, 2.0 * std::numbers::pi * i / 16));
        j["holomorphy_residual"] = format_double(holomorphy_residual(g, samples));
        j["conjugated_control"] =
            format_double(holomorphy_residual_conjugated(g, 0, samples));
      }
    }
    if (as_json) {
      out.emit(j.dump(2) + "\n");
    } else {
      std::string text = std::string("conformal,") + (conformal ? "true" : "false") + "\n";
      if (conformal) {
        text += std::string("constant,") + (j["constant"].get<bool>() ? "true" : "false") + "\n";
        if (j.contains("holomorphy_residual")) {
          text += "holomorphy_residual," + j["holomorphy_residual"].get<std::string>() + "\n";
          text += "conjugated_control," + j["conjugated_control"].get<std::string>() + "\n";
        }
      }
      out.emit(text);
    }
    return conformal ? 0 : 3;
  }

  if (*cmd_area) {
    WeierstrassSurface s;
    if (!area_file.empty())
      s = surface_from_json(read_file(area_file));
    else if (area_preset == "plane")
      s = plane_surface();
    else if (area_preset == "enneper")
      s = enneper_surface();
    else
      throw Usage("area: need --preset plane|enneper or --surface FILE");

    if (area_sweep == "yau") {
      HModel model;
      if (area_h == "one")
        model = HModel::One;
      else if (area_h == "inv1mz")
        model = HModel::InvOneMinusZ;
      else
        throw Usage("area: --model must be one or inv1mz");
      std::vector<double> eps = parse_grid(area_eps);
      auto values = yau_partial_integrals(area_p, model, eps);
      std::string csv = "eps,integral\n";
      for (size_t i = 0; i < eps.size(); ++i) csv += csv_row({eps[i], values[i]});
      csv += "# caveat: the plane model on the disc carries an incomplete metric;\n"
             "# bounded partial integrals for h=1 reflect that, not a counterexample\n";
      out.emit(csv);
      return 0;
    }

    NormKind norm;
    if (area_norm == "euclidean")
      norm = NormKind::Euclidean;
    else if (area_norm == "max")
      norm = NormKind::Max;
    else
      throw Usage("area: --norm must be euclidean or max");
    std::complex<double> z = to_complex(parse_crat(area_at));
    out.emit(format_double(area_form_density(s, z, norm)) + "\n");
    return 0;
  }

  if (*cmd_proof) {
    // log-interpolated eps ladder between the endpoints
    double a = 0, b = 0;
    int steps = 0;
    {
      char c1 = 0, c2 = 0;
      std::istringstream ss(proof_eps);
      if (!(ss >> a >> c1 >> b >> c2 >> steps) || c1 != ':' || c2 != ':' || steps < 2)
        throw Usage("proof-integral: bad eps grid");
    }
    std::vector<double> eps;
    for (int i = 0; i < steps; ++i)
      eps.push_back(a * std::pow(b / a, static_cast<double>(i) / (steps - 1)));
    ProofIntegral result = proof_integral_convergence(proof_ratio, eps);
    std::string csv = "eps,integral\n";
    for (size_t i = 0; i < eps.size(); ++i) csv += csv_row({eps[i], result.partial_values[i]});
    csv += std::string("verdict,") +
           (result.verdict == ProofIntegral::Verdict::Converging ? "converging" : "diverging") +
           "\n";
    if (result.verdict == ProofIntegral::Verdict::Converging)
      csv += "tail_bound," + format_double(result.tail_bound) + "\n";
    out.emit(csv);
    return 0;
  }

  if (*cmd_norm) {
    HyperplaneArrangement a = arrangement_from_json(read_file(norm_arr));
    WronskianDifferential w = build_wronskian(a);
    ProjectiveCurve f = curve_from_json(read_file(norm_curve));
    std::vector<double> grid = parse_grid(norm_grid);
    auto ratios = jet_norm_circle_ratios(w, f, grid);
    std::string csv = "r,ratio\n";
    for (size_t i = 0; i < grid.size(); ++i) csv += csv_row({grid[i], ratios[i]});
    out.emit(csv);
    return 0;
  }

  throw Usage("no subcommand selected");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Usage& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ConvergenceError& e) {
    std::cerr << "non-convergence: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << "hypothesis violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
