#include "evanslewis/jsonio.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <fstream>

namespace evanslewis::jsonio {

std::string format_double(double v) {
  if (!std::isfinite(v)) throw std::runtime_error("non-finite value in JSON output");
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void write_value(const Json& j, std::string& out, int indent, int depth) {
  using value_t = Json::value_t;
  const auto newline = [&](int d) {
    out.push_back('\n');
    out.append(static_cast<std::size_t>(indent) * static_cast<std::size_t>(d), ' ');
  };
  switch (j.type()) {
    case value_t::null: out += "null"; break;
    case value_t::boolean: out += j.get<bool>() ? "true" : "false"; break;
    case value_t::number_integer: out += std::to_string(j.get<std::int64_t>()); break;
    case value_t::number_unsigned: out += std::to_string(j.get<std::uint64_t>()); break;
    case value_t::number_float: out += format_double(j.get<double>()); break;
    case value_t::string: out += Json(j.get<std::string>()).dump(); break;
    case value_t::array: {
      if (j.empty()) {
        out += "[]";
        break;
      }
      out += '[';
      bool first = true;
      for (const Json& el : j) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        write_value(el, out, indent, depth + 1);
      }
      newline(depth);
      out += ']';
      break;
    }
    case value_t::object: {
      if (j.empty()) {
        out += "{}";
        break;
      }
      out += '{';
      bool first = true;
      for (const auto& item : j.items()) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += Json(item.key()).dump();
        out += ": ";
        write_value(item.value(), out, indent, depth + 1);
      }
      newline(depth);
      out += '}';
      break;
    }
    default: throw std::runtime_error("unsupported JSON value type");
  }
}

const Json& need(const Json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) throw UsageError(std::string("missing field \"") + key + "\"");
  return *it;
}

double num(const Json& j, const char* key) { return need(j, key).get<double>(); }

Vec vec_field(const Json& j, const char* key) {
  const auto v = need(j, key).get<std::vector<double>>();
  return Eigen::Map<const Vec>(v.data(), static_cast<Eigen::Index>(v.size()));
}

std::string iso_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::string dump(const Json& j, int indent) {
  std::string out;
  write_value(j, out, indent, 0);
  return out;
}

Json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Json profile_to_json(const RadialProfile& p) {
  Json j = Json::object();
  j["family"] = family_name(p.family);
  Json params = Json::object();
  switch (p.family) {
    case Family::PolyExp: {
      const auto& q = std::get<PolyExpP<double>>(p.params);
      params["a"] = q.a;
      params["b"] = q.b;
      break;
    }
    case Family::GaussianLog: {
      const auto& q = std::get<GaussianLogP<double>>(p.params);
      params["q"] = q.q;
      params["c"] = q.c;
      break;
    }
    case Family::PowerBump: {
      const auto& q = std::get<PowerBumpP<double>>(p.params);
      params["beta"] = q.beta;
      params["lo"] = q.lo;
      params["hi"] = q.hi;
      params["w1"] = q.w1;
      params["w2"] = q.w2;
      break;
    }
    case Family::Plateau: {
      params["L"] = std::get<PlateauP<double>>(p.params).L;
      break;
    }
    case Family::Tabulated: {
      const auto& q = std::get<TabulatedP<double>>(p.params);
      params["u"] = std::vector<double>(q.u.begin(), q.u.end());
      params["y"] = std::vector<double>(q.y.begin(), q.y.end());
      break;
    }
  }
  j["params"] = std::move(params);
  j["window"] = Json{{"r_lo", p.r_lo}, {"r_hi", p.r_hi}};
  j["amp"] = p.amp;
  j["shift"] = p.shift;
  return j;
}

RadialProfile profile_from_json(const Json& j) {
  try {
    const Family fam = family_from_name(need(j, "family").get<std::string>());
    const Json& params = need(j, "params");
    RadialProfile p;
    switch (fam) {
      case Family::PolyExp:
        p = make_polyexp(num(params, "a"), num(params, "b"));
        break;
      case Family::GaussianLog:
        p = make_gaussian_log(num(params, "q"), num(params, "c"));
        break;
      case Family::PowerBump:
        p = make_power_bump(num(params, "beta"), std::exp(num(params, "lo")),
                            std::exp(num(params, "hi")), num(params, "w1"), num(params, "w2"));
        break;
      case Family::Plateau:
        p = plateau_family(num(params, "L"));
        break;
      case Family::Tabulated:
        p = make_tabulated(vec_field(params, "u"), vec_field(params, "y"));
        break;
    }
    p.amp = j.value("amp", 1.0);
    const double shift = j.value("shift", 0.0);
    if (shift != 0.0) p = dilate(p, std::exp(shift));
    if (j.contains("window")) {
      const Json& w = j.at("window");
      p.r_lo = num(w, "r_lo");
      p.r_hi = num(w, "r_hi");
      if (!(p.r_lo > 0 && p.r_hi > p.r_lo)) throw UsageError("profile window invalid");
    }
    return p;
  } catch (const Json::exception& e) {
    throw UsageError(std::string("profile JSON: ") + e.what());
  }
}

Json function_to_json(const TestFunction& f) {
  Json j = Json::object();
  j["spectrum"] = f.spectrum_kind == SpectrumKind::Sphere ? "sphere" : "custom";
  Json modes = Json::array();
  for (const ModeComponent& c : f.components) {
    Json mj = Json::object();
    mj["k"] = c.k;
    mj["m"] = c.m;
    mj["eigenvalue"] = c.eigenvalue;
    mj["profile"] = profile_to_json(c.profile);
    modes.push_back(std::move(mj));
  }
  j["modes"] = std::move(modes);
  return j;
}

TestFunction function_from_json(const Json& j) {
  try {
    TestFunction f;
    const Json* modes = &j;
    if (!j.is_array()) {
      const std::string kind = j.value("spectrum", "sphere");
      if (kind == "custom")
        f.spectrum_kind = SpectrumKind::Custom;
      else if (kind != "sphere")
        throw UsageError("unknown spectrum kind: " + kind);
      modes = &need(j, "modes");
    }
    if (!modes->is_array()) throw UsageError("\"modes\" must be an array");
    for (const Json& mj : *modes) {
      ModeComponent c;
      c.k = need(mj, "k").get<int>();
      c.m = mj.value("m", 0);
      c.eigenvalue = mj.contains("eigenvalue") ? mj.at("eigenvalue").get<double>()
                                               : mu_k(c.k);
      c.profile = profile_from_json(need(mj, "profile"));
      f.components.push_back(std::move(c));
    }
    validate(f);
    return f;
  } catch (const Json::exception& e) {
    throw UsageError(std::string("function spec: ") + e.what());
  }
}

TestFunction function_from_file(const std::string& path) {
  return function_from_json(load_file(path));
}

SpectrumSpec spectrum_from_json(const Json& j) {
  try {
    const std::string kind = need(j, "kind").get<std::string>();
    if (kind == "sphere") return sphere_spectrum(need(j, "k_max").get<int>());
    if (kind == "custom") {
      SpectrumSpec s;
      s.eigenvalues = need(j, "eigenvalues").get<std::vector<double>>();
      validate(s);
      return s;
    }
    throw UsageError("unknown spectrum kind: " + kind);
  } catch (const Json::exception& e) {
    throw UsageError(std::string("spectrum spec: ") + e.what());
  }
}

SpectrumSpec spectrum_from_file(const std::string& path) {
  return spectrum_from_json(load_file(path));
}

Json norm_report_to_json(const NormReport& r) {
  Json j = Json::object();
  j["lap_sq"] = r.lap_sq;
  j["lap_r_sq"] = r.lap_r_sq;
  j["lap_s_sq"] = r.lap_s_sq;
  j["sph_grad_sq"] = r.sph_grad_sq;
  j["inv_sq"] = r.inv_sq;
  j["fstar_term"] = r.fstar_term;
  j["identity_residual"] = r.identity_residual;
  Json modes = Json::array();
  for (const ModeQuantities& q : r.per_mode) {
    Json mj = Json::object();
    mj["k"] = q.k;
    mj["m"] = q.m;
    mj["eigenvalue"] = q.eigenvalue;
    mj["lap_sq"] = q.lap_sq;
    mj["lap_r_sq"] = q.lap_r_sq;
    mj["lap_s_sq"] = q.lap_s_sq;
    mj["sph_grad_sq"] = q.sph_grad_sq;
    mj["inv_sq"] = q.inv_sq;
    mj["fstar_term"] = q.fstar_term;
    modes.push_back(std::move(mj));
  }
  j["per_mode"] = std::move(modes);
  return j;
}

Json slack_table_to_json(const SlackTable& s) {
  Json j = Json::object();
  j["radial_slack"] = s.radial_slack;
  j["spherical_slack"] = s.spherical_slack;
  j["improved_slack"] = s.improved_slack;
  j["weighted_slack"] = s.weighted_slack;
  j["radial_rellich_slack"] = s.radial_rellich_slack;
  j["k1"] = s.k1;
  j["k2"] = s.k2;
  j["weights_proven"] = s.weights_proven;
  return j;
}

Json proof_ledger_to_json(const ProofLedger& l) {
  Json j = Json::object();
  j["alpha"] = l.alpha;
  j["n1"] = l.n1;
  j["n2_lower"] = l.n2_lower;
  return j;
}

Json manifest(const std::string& command, Json parameters, double rel_tol, double abs_tol,
              bool stamp) {
  Json j = Json::object();
  j["command"] = command;
  j["parameters"] = std::move(parameters);
  j["tolerances"] = Json{{"rel_tol", rel_tol}, {"abs_tol", abs_tol}};
  j["engine"] = Json{{"name", kEngineName}, {"version", kEngineVersion}};
  j["timestamp"] = stamp ? iso_now() : "";
  return j;
}

}  // namespace evanslewis::jsonio
