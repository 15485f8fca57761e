#include <CLI11.hpp>

#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "evanslewis/cartesian.hpp"
#include "evanslewis/jsonio.hpp"
#include "evanslewis/quadrature.hpp"
#include "evanslewis/rayleigh.hpp"
#include "evanslewis/sharp.hpp"
#include "evanslewis/spectral.hpp"
#include "evanslewis/suite.hpp"

namespace {

using namespace evanslewis;
using jsonio::Json;

struct GlobalOpts {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  bool json = false, csv = false, stamp = false;
  std::string out_dir;
  QuadratureConfig quad() const { return {rel_tol, abs_tol, 4000}; }
};

struct Assertion {
  std::string name;
  bool pass = false;
  double value = 0.0;
  double threshold = 0.0;
};

bool all_pass(const std::vector<Assertion>& as) {
  for (const Assertion& a : as)
    if (!a.pass) return false;
  return true;
}

Json assertions_json(const std::vector<Assertion>& as) {
  Json arr = Json::array();
  for (const Assertion& a : as) {
    Json j = Json::object();
    j["name"] = a.name;
    j["pass"] = a.pass;
    j["value"] = a.value;
    j["threshold"] = a.threshold;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string assertions_text(const std::vector<Assertion>& as) {
  std::string out;
  for (const Assertion& a : as)
    out += std::string("  [") + (a.pass ? "PASS" : "FAIL") + "] " + a.name + " (value " +
           jsonio::format_double(a.value) + ", threshold " +
           jsonio::format_double(a.threshold) + ")\n";
  return out;
}

std::string scalar_str(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return jsonio::dump(v);
}

std::string csv_manifest_header(const Json& m) {
  std::string out;
  out += "# engine: " + m.at("engine").at("name").get<std::string>() + " " +
         m.at("engine").at("version").get<std::string>() + "\n";
  out += "# command: " + m.at("command").get<std::string>() + "\n";
  for (const auto& item : m.at("parameters").items())
    out += "# " + item.key() + ": " + scalar_str(item.value()) + "\n";
  out += "# rel_tol: " + scalar_str(m.at("tolerances").at("rel_tol")) + "\n";
  out += "# abs_tol: " + scalar_str(m.at("tolerances").at("abs_tol")) + "\n";
  out += "# timestamp: " + m.at("timestamp").get<std::string>() + "\n";
  return out;
}

void write_file(const std::string& dir, const std::string& name, const std::string& text) {
  std::filesystem::create_directories(dir);
  const std::string path = dir + "/" + name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

// stdout: --json wins, then --csv, else human text; --out mirrors the
// structured forms into files without changing what is printed.
void emit(const GlobalOpts& g, const std::string& stem, const Json& doc,
          const std::string& csv_text, const std::string& human) {
  if (g.json)
    std::cout << jsonio::dump(doc) << "\n";
  else if (g.csv && !csv_text.empty())
    std::cout << csv_text;
  else
    std::cout << human;
  if (!g.out_dir.empty()) {
    write_file(g.out_dir, stem + ".json", jsonio::dump(doc) + "\n");
    if (!csv_text.empty()) write_file(g.out_dir, stem + ".csv", csv_text);
  }
}

double rel_dev(double got, double want) {
  return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

int cmd_verify(const GlobalOpts& g, const std::string& demo, const std::string& file) {
  if (!demo.empty() && !file.empty())
    throw UsageError("give either --demo or a spec file, not both");
  TestFunction f;
  if (demo == "worked") {
    f.components.push_back({1, 0, mu_k(1), make_polyexp(1.0, 1.0)});
  } else if (demo == "two-mode") {
    f.components.push_back({1, 0, mu_k(1), make_polyexp(1.0, 1.0)});
    f.components.push_back({3, 0, mu_k(3), make_polyexp(2.0, 1.0)});
  } else if (!demo.empty()) {
    throw UsageError("unknown demo: " + demo + " (use worked | two-mode)");
  } else if (!file.empty()) {
    f = jsonio::function_from_file(file);
  } else {
    throw UsageError("verify needs a function spec file or --demo");
  }

  const QuadratureConfig cfg = g.quad();
  const NormReport rep = norms_report(f, cfg);
  const SlackTable slacks = check_inequalities(rep);
  const CrossTerm x = cross_term(f, cfg);

  std::vector<Assertion> as;
  as.push_back({"identity_residual", std::abs(rep.identity_residual) <= 1e-8 * rep.lap_sq,
                std::abs(rep.identity_residual), 1e-8 * rep.lap_sq});
  const double floor = 1e-9 * std::max(1.0, rep.lap_sq);
  const auto slack_assert = [&as, floor](const char* name, double v) {
    as.push_back({name, v >= -floor, v, -floor});
  };
  slack_assert("radial_slack", slacks.radial_slack);
  slack_assert("spherical_slack", slacks.spherical_slack);
  slack_assert("improved_slack", slacks.improved_slack);
  slack_assert("weighted_slack", slacks.weighted_slack);
  slack_assert("radial_rellich_slack", slacks.radial_rellich_slack);
  slack_assert("cross_term_slack", x.slack);
  as.push_back({"weights_proven", slacks.weights_proven, slacks.weights_proven ? 1.0 : 0.0, 1.0});

  if (demo == "worked") {
    const double want[6] = {7.0 / 4, 3.0 / 4, 2.0, 1.0, 1.0 / 2, 1.0 / 4};
    const double got[6] = {rep.lap_sq,      rep.lap_r_sq, rep.lap_s_sq,
                           rep.sph_grad_sq, rep.inv_sq,   rep.fstar_term};
    double worst = 0.0;
    for (int i = 0; i < 6; ++i) worst = std::max(worst, rel_dev(got[i], want[i]));
    as.push_back({"worked_values", worst <= 1e-9, worst, 1e-9});
  }
  if (demo == "two-mode") {
    std::array<double, 6> sums{};
    for (const ModeComponent& c : f.components) {
      TestFunction single;
      single.components.push_back(c);
      const NormReport r1 = norms_report(single, cfg);
      const double parts[6] = {r1.lap_sq,      r1.lap_r_sq, r1.lap_s_sq,
                               r1.sph_grad_sq, r1.inv_sq,   r1.fstar_term};
      for (int i = 0; i < 6; ++i) sums[static_cast<std::size_t>(i)] += parts[i];
    }
    const double totals[6] = {rep.lap_sq,      rep.lap_r_sq, rep.lap_s_sq,
                              rep.sph_grad_sq, rep.inv_sq,   rep.fstar_term};
    double worst = 0.0;
    for (int i = 0; i < 6; ++i)
      worst = std::max(worst, rel_dev(totals[i], sums[static_cast<std::size_t>(i)]));
    as.push_back({"mode_additivity", worst <= 1e-8, worst, 1e-8});
  }

  Json params = Json::object();
  params["demo"] = demo;
  params["file"] = file;
  Json doc = Json::object();
  doc["manifest"] = jsonio::manifest("verify", std::move(params), g.rel_tol, g.abs_tol, g.stamp);
  doc["report"] = jsonio::norm_report_to_json(rep);
  doc["slacks"] = jsonio::slack_table_to_json(slacks);
  Json xj = Json::object();
  xj["x_value"] = x.x_value;
  xj["x_direct"] = x.x_direct;
  xj["lower_bound"] = x.lower_bound;
  xj["slack"] = x.slack;
  doc["cross_term"] = std::move(xj);
  doc["assertions"] = assertions_json(as);
  doc["pass"] = all_pass(as);

  std::string csv = csv_manifest_header(doc.at("manifest"));
  csv += "k,m,eigenvalue,lap_sq,lap_r_sq,lap_s_sq,sph_grad_sq,inv_sq,fstar_term\n";
  for (const ModeQuantities& q : rep.per_mode) {
    csv += std::to_string(q.k) + "," + std::to_string(q.m) + "," +
           jsonio::format_double(q.eigenvalue) + "," + jsonio::format_double(q.lap_sq) + "," +
           jsonio::format_double(q.lap_r_sq) + "," + jsonio::format_double(q.lap_s_sq) + "," +
           jsonio::format_double(q.sph_grad_sq) + "," + jsonio::format_double(q.inv_sq) + "," +
           jsonio::format_double(q.fstar_term) + "\n";
  }

  std::string human = "norm report over " + std::to_string(rep.per_mode.size()) + " mode(s)\n";
  const auto line = [&human](const char* name, double v) {
    human += std::string("  ") + name + " " + jsonio::format_double(v) + "\n";
  };
  line("lap_sq      ", rep.lap_sq);
  line("lap_r_sq    ", rep.lap_r_sq);
  line("lap_s_sq    ", rep.lap_s_sq);
  line("sph_grad_sq ", rep.sph_grad_sq);
  line("inv_sq      ", rep.inv_sq);
  line("fstar_term  ", rep.fstar_term);
  line("identity residual", rep.identity_residual);
  human += "assertions\n" + assertions_text(as);
  human += all_pass(as) ? "PASS\n" : "FAIL\n";

  emit(g, "verify", doc, csv, human);
  return all_pass(as) ? 0 : 1;
}

int cmd_sharp(const GlobalOpts& g, bool sphere, int k_max, const std::string& file) {
  if (sphere && !file.empty()) throw UsageError("give either --sphere or a spectrum file");
  if (!sphere && file.empty()) throw UsageError("sharp needs --sphere or a spectrum file");
  const SpectrumSpec spec = sphere ? sphere_spectrum(k_max) : jsonio::spectrum_from_file(file);
  const SharpConstantResult res = global_spherical_constant(spec);

  Json params = Json::object();
  params["sphere"] = sphere;
  if (sphere) params["k_max"] = k_max;
  params["file"] = file;
  Json doc = Json::object();
  doc["manifest"] = jsonio::manifest("sharp", std::move(params), g.rel_tol, g.abs_tol, g.stamp);
  doc["constant"] = res.constant;
  doc["k0"] = res.attaining_index;
  doc["attaining_eigenvalue"] = spec.eigenvalues[static_cast<std::size_t>(res.attaining_index)];
  doc["attaining_t"] = res.attaining_t;
  doc["method"] = res.method == Method::closed_form ? "closed_form" : "scan";
  doc["warning"] = res.warning;
  Json table = Json::array();
  std::string csv = csv_manifest_header(doc.at("manifest"));
  csv += "eigenvalue,alpha,mode_constant\n";
  for (const double lambda : spec.eigenvalues) {
    if (lambda == 0.0) continue;
    Json row = Json::object();
    row["eigenvalue"] = lambda;
    row["alpha"] = generalized_alpha(lambda);
    row["mode_constant"] = mode_spherical_constant(lambda).constant;
    csv += jsonio::format_double(lambda) + "," +
           jsonio::format_double(row.at("alpha").get<double>()) + "," +
           jsonio::format_double(row.at("mode_constant").get<double>()) + "\n";
    table.push_back(std::move(row));
  }
  doc["alpha_table"] = std::move(table);

  std::string human = "sharp constant " + std::string(jsonio::format_double(res.constant)) +
                      " attained at spectrum index " + std::to_string(res.attaining_index) +
                      " (eigenvalue " +
                      jsonio::format_double(
                          spec.eigenvalues[static_cast<std::size_t>(res.attaining_index)]) +
                      ", t " + jsonio::format_double(res.attaining_t) + ", method " +
                      (res.method == Method::closed_form ? "closed_form" : "scan") + ")\n";
  if (!res.warning.empty()) human += "warning: " + res.warning + "\n";
  human += "eigenvalue, alpha threshold, mode constant\n";
  for (const Json& row : doc.at("alpha_table"))
    human += "  " + scalar_str(row.at("eigenvalue")) + "  " + scalar_str(row.at("alpha")) +
             "  " + scalar_str(row.at("mode_constant")) + "\n";

  emit(g, "sharp", doc, csv, human);
  return 0;
}

int cmd_region(const GlobalOpts& g, int grid_n) {
  if (grid_n < 2) throw UsageError("--k1-grid needs at least 2 points");
  Json rows = Json::array();
  std::string body = "k1,k2_max,closed_form,abs_diff\n";
  double worst = 0.0;
  for (int i = 0; i < grid_n; ++i) {
    const double k1 = static_cast<double>(i) / (grid_n - 1);
    const ScanResult r = region_boundary(k1);
    const double want = (25.0 - 9.0 * k1) / 64.0;
    const double diff = std::abs(r.value - want);
    worst = std::max(worst, diff);
    Json row = Json::object();
    row["k1"] = k1;
    row["k2_max"] = r.value;
    row["closed_form"] = want;
    row["abs_diff"] = diff;
    row["attaining_k"] = r.attaining_k;
    row["attaining_t"] = r.attaining_t;
    rows.push_back(std::move(row));
    body += jsonio::format_double(k1) + "," + jsonio::format_double(r.value) + "," +
            jsonio::format_double(want) + "," + jsonio::format_double(diff) + "\n";
  }
  std::vector<Assertion> as;
  as.push_back({"region_matches_closed_form", worst <= 1e-6, worst, 1e-6});

  Json params = Json::object();
  params["k1_grid"] = grid_n;
  Json doc = Json::object();
  doc["manifest"] = jsonio::manifest("region", std::move(params), g.rel_tol, g.abs_tol, g.stamp);
  doc["rows"] = std::move(rows);
  doc["assertions"] = assertions_json(as);
  doc["pass"] = all_pass(as);

  const std::string csv = csv_manifest_header(doc.at("manifest")) + body;
  std::string human = "region boundary on a " + std::to_string(grid_n) +
                      "-point k1 grid: max |k2_max - (25 - 9 k1)/64| = " +
                      jsonio::format_double(worst) + "\n";
  human += all_pass(as) ? "PASS\n" : "FAIL\n";
  emit(g, "region", doc, csv, human);
  return all_pass(as) ? 0 : 1;
}

double quadrature_form(const FormKind& kind, double lambda, const RadialProfile& p,
                       const QuadratureConfig& cfg) {
  switch (kind.kind) {
    case FormKind::INV: return weighted_norm_sq(p, -2, cfg).value;
    case FormKind::LAP_S: return lambda * lambda * weighted_norm_sq(p, -2, cfg).value;
    case FormKind::LAP_R: {
      const auto h = radial_laplacian_mode(p);
      return integrate_log(
                 [&h](double r) {
                   const double v = h(r);
                   return v * v * r * r;
                 },
                 window_of(p), cfg)
          .value;
    }
    case FormKind::LAP: {
      const auto h = laplacian_mode(lambda, p);
      return integrate_log(
                 [&h](double r) {
                   const double v = h(r);
                   return v * v * r * r;
                 },
                 window_of(p), cfg)
          .value;
    }
    case FormKind::MIX:
      return kind.k1 * quadrature_form(FormKind::lap_r(), lambda, p, cfg) +
             kind.k2 * quadrature_form(FormKind::lap_s(), lambda, p, cfg);
  }
  throw UsageError("unknown form kind");
}

int cmd_extremize(const GlobalOpts& g, double lambda, const std::string& num_name,
                  const std::string& den_name, double L, int n_flag, double mk1, double mk2) {
  FormKind num = form_kind_from_name(num_name);
  FormKind den = form_kind_from_name(den_name);
  if (num.kind == FormKind::MIX) num = FormKind::mix(mk1, mk2);
  if (den.kind == FormKind::MIX) den = FormKind::mix(mk1, mk2);
  if (!(L > 1.0)) throw UsageError("--L must exceed 1");

  std::vector<double> sweep;
  for (double l = 5.0; l < L; l *= 2.0) sweep.push_back(l);
  std::vector<ThetaRow> rows;
  if (!sweep.empty()) rows = convergence_study(lambda, num, den, sweep);

  const int n = n_flag > 0 ? n_flag : static_cast<int>(std::lround(40.0 * L)) + 1;
  const FormMatrices F = assemble_forms(lambda, LogGrid{-L, L, n}, num, den);
  const EigResult e = max_generalized_eig(F);
  rows.push_back({L, n, e.value});

  const RadialProfile tab = extremizer_profile(e);
  const double num_val = quadrature_form(num, lambda, tab, g.quad());
  const double den_val = quadrature_form(den, lambda, tab, g.quad());
  const double rescored = num_val / den_val;

  std::vector<Assertion> as;
  if (e.value > 1e-9)
    as.push_back({"rescored_within_1pct", rel_dev(rescored, e.value) <= 0.01,
                  rel_dev(rescored, e.value), 0.01});
  else
    as.push_back({"rescored_near_zero", std::abs(rescored) <= 1e-9, std::abs(rescored), 1e-9});

  Json params = Json::object();
  params["mode_eigenvalue"] = lambda;
  params["numerator"] = form_kind_name(num);
  params["denominator"] = form_kind_name(den);
  params["L"] = L;
  params["n"] = n;
  if (num.kind == FormKind::MIX || den.kind == FormKind::MIX) {
    params["k1"] = mk1;
    params["k2"] = mk2;
  }
  Json doc = Json::object();
  doc["manifest"] =
      jsonio::manifest("extremize", std::move(params), g.rel_tol, g.abs_tol, g.stamp);
  Json jrows = Json::array();
  std::string body = "L,n,theta\n";
  for (const ThetaRow& r : rows) {
    Json row = Json::object();
    row["L"] = r.L;
    row["n"] = r.n;
    row["theta"] = r.theta;
    jrows.push_back(std::move(row));
    body += jsonio::format_double(r.L) + "," + std::to_string(r.n) + "," +
            jsonio::format_double(r.theta) + "\n";
  }
  doc["rows"] = std::move(jrows);
  doc["theta"] = e.value;
  doc["eig_residual"] = e.residual;
  doc["rescored_quotient"] = rescored;
  doc["extremizer"] = jsonio::profile_to_json(tab);
  doc["assertions"] = assertions_json(as);
  doc["pass"] = all_pass(as);

  const std::string csv = csv_manifest_header(doc.at("manifest")) + body;
  std::string human = "theta(L) sweep (" + form_kind_name(num) + " / " + form_kind_name(den) +
                      ", eigenvalue " + jsonio::format_double(lambda) + ")\n";
  for (const ThetaRow& r : rows)
    human += "  L " + jsonio::format_double(r.L) + "  n " + std::to_string(r.n) + "  theta " +
             jsonio::format_double(r.theta) + "\n";
  human += "extremizer re-scored through quadrature: " + std::string(jsonio::format_double(rescored)) + "\n";
  human += assertions_text(as);
  human += all_pass(as) ? "PASS\n" : "FAIL\n";
  emit(g, "extremize", doc, csv, human);
  return all_pass(as) ? 0 : 1;
}

RadialProfile xcheck_profile(int k) {
  switch (k) {
    case 0: return make_polyexp(1.5, 1.0);
    case 1: return make_polyexp(1.0, 1.0);
    case 2: return make_power_bump(2.0, 0.25, 4.5, 1.2, 1.0);
    case 3: return make_power_bump(0.0, 0.25, 4.5, 1.2, 1.0);
    default: throw UsageError("unsupported mode degree k = " + std::to_string(k));
  }
}

int cmd_xcheck(const GlobalOpts& g, double h, int k_flag, int points_n) {
  if (!(h > 0.0)) throw UsageError("--h must be positive");
  if (points_n < 10) throw UsageError("--points needs at least 10");
  std::vector<int> ks;
  if (k_flag >= 0)
    ks.push_back(k_flag);
  else
    ks = {1, 2, 3};
  const auto pts = default_points(points_n);
  const bool asserting = h <= 1e-3;  // coarse runs report only

  std::vector<Assertion> as;
  Json cases = Json::array();
  std::string body = "k,x,y,z,exact,fd,rel_err,diff_exact,diff_fd,diff_rel_err\n";
  std::string human = std::string("FD cross-check at h = ") + jsonio::format_double(h) +
                      (asserting ? "" : " (coarse run, report only)") + "\n";
  for (const int k : ks) {
    const ConsistencyReport rep = consistency_report(k, 0, xcheck_profile(k), pts, {h});
    for (const PointRow& row : rep.rows)
      body += std::to_string(k) + "," + jsonio::format_double(row.x[0]) + "," +
              jsonio::format_double(row.x[1]) + "," + jsonio::format_double(row.x[2]) + "," +
              jsonio::format_double(row.exact) + "," + jsonio::format_double(row.fd) + "," +
              jsonio::format_double(row.rel_err) + "," + jsonio::format_double(row.diff_exact) +
              "," + jsonio::format_double(row.diff_fd) + "," +
              jsonio::format_double(row.diff_rel_err) + "\n";
    Json cj = Json::object();
    cj["k"] = rep.k;
    cj["m"] = rep.m;
    cj["h"] = rep.h;
    cj["max_rel_err"] = rep.max_rel_err;
    cj["order_ratio"] = rep.order_ratio;
    cj["diff_max_rel_err"] = rep.diff_max_rel_err;
    cj["diff_order_ratio"] = rep.diff_order_ratio;
    cases.push_back(std::move(cj));
    human += "  k " + std::to_string(k) + ": max rel err " +
             jsonio::format_double(rep.max_rel_err) + ", order ratio " +
             jsonio::format_double(rep.order_ratio) + ", diff err " +
             jsonio::format_double(rep.diff_max_rel_err) + ", diff ratio " +
             jsonio::format_double(rep.diff_order_ratio) + "\n";
    if (asserting) {
      const std::string tag = "k" + std::to_string(k);
      as.push_back({tag + "_rel_err", rep.max_rel_err <= 1e-4, rep.max_rel_err, 1e-4});
      as.push_back({tag + "_order_ratio",
                    rep.order_ratio >= 3.5 && rep.order_ratio <= 4.5, rep.order_ratio, 4.5});
      if (k >= 1) {
        as.push_back(
            {tag + "_diff_rel_err", rep.diff_max_rel_err <= 1e-4, rep.diff_max_rel_err, 1e-4});
        as.push_back({tag + "_diff_order_ratio",
                      rep.diff_order_ratio >= 3.5 && rep.diff_order_ratio <= 4.5,
                      rep.diff_order_ratio, 4.5});
      }
    }
  }

  Json params = Json::object();
  params["h"] = h;
  params["k"] = k_flag;
  params["points"] = points_n;
  Json doc = Json::object();
  doc["manifest"] = jsonio::manifest("xcheck", std::move(params), g.rel_tol, g.abs_tol, g.stamp);
  doc["cases"] = std::move(cases);
  doc["assertions"] = assertions_json(as);
  doc["pass"] = all_pass(as);

  const std::string csv = csv_manifest_header(doc.at("manifest")) + body;
  human += assertions_text(as);
  human += all_pass(as) ? "PASS\n" : "FAIL\n";
  emit(g, "xcheck", doc, csv, human);
  return all_pass(as) ? 0 : 1;
}

int cmd_suite(const GlobalOpts& g) {
  const std::vector<CriterionResult> rows = run_acceptance();
  bool all = true;
  Json jrows = Json::array();
  std::string body = "id,name,pass\n";
  std::string human;
  for (const CriterionResult& r : rows) {
    all = all && r.pass;
    Json row = Json::object();
    row["id"] = r.id;
    row["name"] = r.name;
    row["pass"] = r.pass;
    row["detail"] = r.detail;
    jrows.push_back(std::move(row));
    body += std::to_string(r.id) + "," + r.name + "," + (r.pass ? "true" : "false") + "\n";
    human += "criterion " + std::to_string(r.id) + " (" + r.name + "): " +
             (r.pass ? "PASS" : "FAIL") + " -- " + r.detail + "\n";
  }
  human += all ? "all criteria passed\n" : "some criteria failed\n";

  Json doc = Json::object();
  doc["manifest"] =
      jsonio::manifest("suite", Json::object(), g.rel_tol, g.abs_tol, g.stamp);
  doc["criteria"] = std::move(jrows);
  doc["pass"] = all;
  const std::string csv = csv_manifest_header(doc.at("manifest")) + body;
  emit(g, "suite", doc, csv, human);
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification and sharp-constant engine for Rellich-type inequalities"};
  GlobalOpts g;
  app.add_option("--rel-tol", g.rel_tol, "quadrature relative tolerance")->capture_default_str();
  app.add_option("--abs-tol", g.abs_tol, "quadrature absolute tolerance")->capture_default_str();
  app.add_flag("--json", g.json, "print the JSON document to stdout");
  app.add_flag("--csv", g.csv, "print the CSV table to stdout");
  app.add_option("--out", g.out_dir, "directory to mirror JSON/CSV artifacts into");
  app.add_flag("--stamp", g.stamp,
               "timestamp the run manifest (breaks byte-identical reruns)");
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "norm identity and inequality slacks");
  std::string demo, spec_file;
  verify->add_option("--demo", demo, "built-in example: worked | two-mode");
  verify->add_option("file", spec_file, "function spec JSON file");

  auto* sharp = app.add_subcommand("sharp", "sharp constant for a spectrum");
  bool sphere = false;
  int k_max = 8;
  std::string spectrum_file;
  sharp->add_flag("--sphere", sphere, "use the sphere spectrum");
  sharp->add_option("--k-max", k_max, "sphere spectrum truncation degree")
      ->capture_default_str();
  sharp->add_option("file", spectrum_file, "spectrum spec JSON file");

  auto* region = app.add_subcommand("region", "k2_max sweep over k1 in [0, 1]");
  int k1_grid = 21;
  region->add_option("--k1-grid", k1_grid, "number of k1 grid points")->capture_default_str();

  auto* extremize = app.add_subcommand("extremize", "variational extremizer study");
  double lambda = 2.0, L = 20.0, mk1 = 1.0, mk2 = 0.25;
  int n = 0;
  std::string num_name = "LAP_S", den_name = "LAP";
  extremize->add_option("--mode-eigenvalue", lambda, "spherical eigenvalue")
      ->capture_default_str();
  extremize->add_option("--numerator", num_name, "LAP | LAP_R | LAP_S | INV | MIX")
      ->capture_default_str();
  extremize->add_option("--denominator", den_name, "LAP | LAP_R | LAP_S | INV | MIX")
      ->capture_default_str();
  extremize->add_option("--L", L, "half-width of the log grid")->capture_default_str();
  extremize->add_option("--n", n, "node count at the final L (default 40L + 1)");
  extremize->add_option("--k1", mk1, "MIX weight on LAP_R")->capture_default_str();
  extremize->add_option("--k2", mk2, "MIX weight on LAP_S")->capture_default_str();

  auto* xcheck = app.add_subcommand("xcheck", "Cartesian finite-difference cross-check");
  double h = 1e-3;
  int k_flag = -1, points_n = 12;
  xcheck->set_help_flag("--help", "print help and exit");  // frees -h for the step flag
  xcheck->add_option("--h", h, "FD step (assertions apply for h <= 1e-3)")
      ->capture_default_str();
  xcheck->add_option("--k", k_flag, "single mode degree (default: degrees 1..3)")
      ->check(CLI::Range(0, 3));
  xcheck->add_option("--points", points_n, "sample point count")->capture_default_str();

  auto* suite = app.add_subcommand("suite", "full acceptance battery");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(verify)) return cmd_verify(g, demo, spec_file);
    if (app.got_subcommand(sharp)) return cmd_sharp(g, sphere, k_max, spectrum_file);
    if (app.got_subcommand(region)) return cmd_region(g, k1_grid);
    if (app.got_subcommand(extremize))
      return cmd_extremize(g, lambda, num_name, den_name, L, n, mk1, mk2);
    if (app.got_subcommand(xcheck)) return cmd_xcheck(g, h, k_flag, points_n);
    if (app.got_subcommand(suite)) return cmd_suite(g);
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const SingularSpectrumError& e) {
    std::cerr << "singular spectrum: " << e.what() << "\n";
    return 2;
  } catch (const ConvergenceError& e) {
    std::cerr << "quadrature did not converge: " << e.what() << "\n";
    return 3;
  } catch (const AssemblyError& e) {
    std::cerr << "assembly failed: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
