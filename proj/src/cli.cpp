#include "fht/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "fht/acceptance.hpp"
#include "fht/errors.hpp"
#include "fht/identities.hpp"
#include "fht/measure_lab.hpp"
#include "fht/ri_norms.hpp"
#include "fht/rybakov.hpp"
#include "fht/transform.hpp"

namespace fht::cli {

namespace {

using json = nlohmann::ordered_json;

struct RunConfig {
  std::string subcommand;
  QuadratureConfig quad;
  std::string scheme = "chebyshev_weighted";
  std::vector<std::string> sets;
  std::vector<std::string> gsets;
  std::vector<int> n;
  std::vector<double> p;
  std::vector<int> only;
  std::vector<std::string> witnesses;
  std::string f;
  std::string g;
  int levels = 3;
  std::uint64_t seed = 20240611;
  std::string format = "json";
  std::string out;
  bool rate = false;
};

using Cell = std::variant<double, long long, std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

struct Outcome {
  json results;
  Table table;
  bool pass = false;
  std::string summary;
};

// ---- parsing helpers -------------------------------------------------------

std::vector<double> parse_numbers(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double v = 0.0;
    const char* first = item.data();
    const char* last = first + item.size();
    while (first < last && *first == ' ') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) throw ConfigError("cannot parse number '" + item + "'");
    values.push_back(v);
  }
  return values;
}

IntervalSet parse_set(const std::string& text) {
  const std::vector<double> ends = parse_numbers(text);
  if (ends.empty() || ends.size() % 2 != 0) {
    throw ConfigError("set '" + text + "' needs an even number of endpoints a,b[,a2,b2,...]");
  }
  try {
    return IntervalSet::from_endpoints(ends);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("set '") + text + "': " + e.what());
  }
}

std::vector<IntervalSet> sets_or(const RunConfig& rc, std::vector<IntervalSet> fallback) {
  if (rc.sets.empty()) return fallback;
  std::vector<IntervalSet> out;
  for (const std::string& s : rc.sets) out.push_back(parse_set(s));
  return out;
}

IntervalSet set_or(const RunConfig& rc, IntervalSet fallback) {
  return sets_or(rc, {std::move(fallback)}).front();
}

/// "x^k" or "chi:a,b,..." (a bare endpoint list also means an indicator).
Function parse_function(const std::string& spec) {
  if (spec.rfind("x^", 0) == 0) {
    const std::vector<double> k = parse_numbers(spec.substr(2));
    if (k.size() != 1 || k[0] < 0 || k[0] != std::floor(k[0])) {
      throw ConfigError("monomial '" + spec + "' needs a non-negative integer power");
    }
    return monomial<Complex>(static_cast<int>(k[0]));
  }
  const std::string body = spec.rfind("chi:", 0) == 0 ? spec.substr(4) : spec;
  return indicator<Complex>(parse_set(body));
}

Function named_witness(const std::string& name) {
  if (name == "one") return constant<Complex>(1.0);
  if (name == "chi01") return indicator<Complex>(IntervalSet{{0.0, 1.0}});
  if (name == "x") return monomial<Complex>(1);
  return parse_function(name);
}

// ---- serialization ---------------------------------------------------------

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json set_json(const IntervalSet& S) {
  json arr = json::array();
  for (const Interval& i : S.intervals()) arr.push_back(json::array({i.lo, i.hi}));
  return arr;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

std::string csv_field(const Cell& c) {
  if (const double* d = std::get_if<double>(&c)) return format_double(*d);
  if (const long long* i = std::get_if<long long>(&c)) return std::to_string(*i);
  const std::string& s = std::get<std::string>(c);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + '"';
}

void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << t.header[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
    os << '\n';
  }
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json config_json(const RunConfig& rc) {
  json c;
  c["nodes"] = rc.quad.nodes;
  c["grid_size"] = rc.quad.grid_size;
  c["clearance"] = rc.quad.clearance;
  c["scheme"] = to_string(rc.quad.scheme);
  c["panel_order"] = rc.quad.panel_order();
  c["seed"] = rc.seed;
  if (!rc.sets.empty()) c["sets"] = rc.sets;
  if (!rc.gsets.empty()) c["gsets"] = rc.gsets;
  if (!rc.n.empty()) c["n"] = rc.n;
  if (!rc.p.empty()) c["p"] = rc.p;
  if (!rc.f.empty()) c["f"] = rc.f;
  if (!rc.g.empty()) c["g"] = rc.g;
  if (!rc.witnesses.empty()) c["witnesses"] = rc.witnesses;
  if (rc.subcommand == "envelope") c["levels"] = rc.levels;
  if (!rc.only.empty()) c["only"] = rc.only;
  return c;
}

// ---- subcommands -----------------------------------------------------------

Eigen::ArrayXd clear_grid(const QuadratureConfig& cfg, const std::vector<double>& avoid) {
  std::vector<double> kept;
  for (double t : chebyshev_grid(cfg.grid_size)) {
    if (1.0 - std::abs(t) < cfg.clearance) continue;
    if (std::any_of(avoid.begin(), avoid.end(), [&](double e) { return std::abs(t - e) < cfg.clearance; })) {
      continue;
    }
    kept.push_back(t);
  }
  return Eigen::Map<Eigen::ArrayXd>(kept.data(), static_cast<Eigen::Index>(kept.size()));
}

Outcome cmd_transform(const RunConfig& rc) {
  constexpr double tol = 1e-6;
  Outcome o;
  o.table.header = {"t", "value_re", "value_im", "exact", "error"};
  double worst = 0.0;
  json points = json::array();
  const auto record = [&](double t, Complex v, double exact) {
    const double err = std::abs(v - exact);
    worst = std::max(worst, err);
    points.push_back({{"t", t}, {"value", complex_json(v)}, {"exact", exact}, {"error", err}});
    o.table.rows.push_back({t, v.real(), v.imag(), exact, err});
  };
  if (!rc.f.empty()) {
    Function phi;
    std::function<double(double)> exact;
    if (rc.f == "one") {
      phi = constant<Complex>(1.0);
      exact = [](double) { return 0.0; };
    } else if (rc.f == "x") {
      phi = monomial<Complex>(1);
      exact = [](double) { return 1.0; };
    } else if (rc.f == "x2") {
      phi = monomial<Complex>(2);
      exact = [](double t) { return t; };
    } else {
      throw ConfigError("transform --f must be one of one, x, x2");
    }
    const WeightedTransform<Complex> T(phi, rc.quad);
    for (double t : clear_grid(rc.quad, {})) record(t, T(t), exact(t));
    o.results["operator"] = "T(phi/w)";
    o.results["phi"] = rc.f;
  } else {
    const IntervalSet S = set_or(rc, IntervalSet::whole());
    const Function chi = indicator<Complex>(S);
    for (double t : clear_grid(rc.quad, S.endpoints())) record(t, fht_pv(chi, t, rc.quad), fht_indicator(S, t));
    o.results["operator"] = "T(chi_S)";
    o.results["set"] = set_json(S);
  }
  o.results["max_error"] = worst;
  o.results["tolerance"] = tol;
  o.results["points"] = std::move(points);
  o.pass = worst < tol;
  o.summary = "transform: max error " + format_double(worst);
  return o;
}

Outcome cmd_norms(const RunConfig& rc) {
  const IntervalSet S = set_or(rc, IntervalSet::whole());
  Function f;
  std::string label;
  if (rc.f.empty() || rc.f == "indicator") {
    f = indicator<Complex>(S);
    label = "chi_S";
  } else if (rc.f == "abs") {
    f = Function([](double x) { return Complex(std::abs(x)); });
    f.with_kinks({0.0});
    label = "|x|";
  } else if (rc.f == "transform") {
    f = m_of(S);
    label = "T(chi_S)";
  } else {
    throw ConfigError("norms --f must be one of indicator, abs, transform");
  }
  const double pmax = rc.p.empty() ? 40.0 : rc.p.front();
  const RearrangementProfile prof = decreasing_rearrangement(f);
  const LexpEquivalence eq = lexp_equivalence_check(f, pmax, rc.quad);
  Outcome o;
  o.results["function"] = label;
  o.results["set"] = set_json(S);
  o.results["cells"] = prof.source_cells;
  o.results["l1"] = norm_lp(f, 1.0, rc.quad);
  o.results["rearranged_mass"] = prof.mass();
  o.results["llogl"] = norm_llogl(prof);
  o.results["lexp"] = norm_lexp(prof);
  o.results["equivalence"] = {{"pmax", pmax},          {"R", eq.R},
                              {"S", eq.S},             {"argmax_p", eq.argmax_p},
                              {"R_maximal", eq.R_maximal}, {"pass", eq.pass},
                              {"pass_maximal", eq.pass_maximal}};
  o.table.header = {"t", "fstar", "fstarstar"};
  for (double t : sup_grid()) o.table.rows.push_back({t, prof.fstar_at(t), maximal_fn(prof, t)});
  o.pass = eq.pass;
  o.summary = "norms " + label + ": R=" + format_double(eq.R) + " S=" + format_double(eq.S);
  return o;
}

Outcome cmd_rybakov(const RunConfig& rc) {
  constexpr double tol = 5e-3;
  const RybakovData d = rybakov_compute(rc.quad);
  Outcome o;
  o.results["a"] = d.a;
  o.results["psi_at_a"] = d.psi_at_a;
  o.results["K_F"] = d.K_F;
  o.results["moment_F"] = complex_json(d.moment_F);
  o.results["max_abs_F_deviation"] = d.max_abs_F_deviation;
  o.results["max_g0"] = d.max_g0;
  o.results["holder_bound"] = holder_bound(0.5, d.K_F);
  o.results["max_inversion_residual"] = d.max_inversion_residual;
  o.results["max_modulus_residual"] = d.max_modulus_residual;
  o.results["density_error"] = d.density_error;
  json dens = json::array();
  for (const DensityCheck& c : d.densities) {
    dens.push_back({{"set", set_json(c.set)}, {"integral", c.integral}, {"error", c.error}});
  }
  o.results["densities"] = std::move(dens);
  o.results["tolerance"] = tol;
  if (rc.rate) {
    const RybakovData coarse = rybakov_compute(rc.quad.with_nodes(rc.quad.nodes / 2));
    o.results["coarse_nodes"] = rc.quad.nodes / 2;
    o.results["coarse_inversion_residual"] = coarse.max_inversion_residual;
    o.results["observed_order"] = std::log2(coarse.max_inversion_residual / d.max_inversion_residual);
  }
  o.table.header = {"t", "inversion_residual"};
  for (Eigen::Index j = 0; j < d.grid.size(); ++j) o.table.rows.push_back({d.grid(j), d.inversion_residuals(j)});
  o.pass = d.max_inversion_residual < tol && d.max_modulus_residual < tol && d.density_error < tol &&
           std::abs(d.moment_F) < 1e-6 && d.holder_bound_excess <= 1e-6;
  o.summary = "rybakov: a=" + format_double(d.a) + " inversion=" + format_double(d.max_inversion_residual) +
              " density=" + format_double(d.density_error);
  return o;
}

Outcome cmd_variation(const RunConfig& rc) {
  const IntervalSet A = set_or(rc, IntervalSet{{0.0, 1.0}});
  std::vector<int> ns = rc.n.empty() ? std::vector<int>{4, 16, 64, 256} : rc.n;
  std::sort(ns.begin(), ns.end());
  Outcome o;
  o.pass = true;
  o.table.header = {"n", "k", "cell_norm", "total", "lower_bound", "margin"};
  json reports = json::array();
  double prev = -1.0;
  for (int n : ns) {
    const VariationReport r = variation_experiment(A, n, rc.quad);
    o.pass = o.pass && r.margin >= -1e-6 && r.total > prev;
    prev = r.total;
    reports.push_back({{"n", r.n}, {"cell_norms", r.cell_norms}, {"total", r.total},
                       {"lower_bound", r.lower_bound}, {"margin", r.margin}});
    for (std::size_t k = 0; k < r.cell_norms.size(); ++k) {
      o.table.rows.push_back({static_cast<long long>(n), static_cast<long long>(k + 1), r.cell_norms[k],
                              r.total, r.lower_bound, r.margin});
    }
  }
  o.results["set"] = set_json(A);
  o.results["reports"] = std::move(reports);
  o.summary = "variation: " + std::to_string(ns.size()) + " partitions, last total " + format_double(prev);
  return o;
}

Outcome cmd_envelope(const RunConfig& rc) {
  const IntervalSet A = set_or(rc, IntervalSet{{0.0, 1.0}});
  const EnvelopeReport r = order_envelope(A, rc.levels, rc.quad, rc.seed);
  const std::vector<double> v = r.values();
  Outcome o;
  o.results["set"] = set_json(A);
  o.results["seed"] = r.seed;
  o.results["nodes"] = r.nodes;
  json levels = json::array();
  o.table.header = {"level", "cells", "unions", "exhaustive", "l1_norm"};
  for (const EnvelopeLevel& l : r.levels) {
    levels.push_back({{"level", l.level}, {"cells", l.cells}, {"unions", l.unions},
                      {"exhaustive", l.exhaustive}, {"l1_norm", l.l1_norm}});
    o.table.rows.push_back({static_cast<long long>(l.level), static_cast<long long>(l.cells),
                            static_cast<long long>(l.unions), std::string(l.exhaustive ? "true" : "false"),
                            l.l1_norm});
  }
  o.results["levels"] = std::move(levels);
  o.pass = std::is_sorted(v.begin(), v.end()) && (v.size() < 2 || v.back() > 1.01 * v.front());
  o.summary = "envelope: level " + std::to_string(rc.levels) + " value " + format_double(v.back());
  return o;
}

Outcome cmd_laeng(const RunConfig& rc) {
  constexpr double tol = 1e-3;
  const std::vector<IntervalSet> sets = sets_or(rc, {IntervalSet{{-0.3, 0.4}}});
  const std::vector<double> ps = rc.p.empty() ? std::vector<double>{2.0, 3.0, 4.0} : rc.p;
  Outcome o;
  o.pass = true;
  o.table.header = {"set", "p", "lhs", "rhs", "rel_err", "rhs_interval", "rel_err_interval"};
  json reports = json::array();
  double worst = 0.0;
  for (const IntervalSet& A : sets) {
    for (double p : ps) {
      const LaengReport r = laeng_check(A, p, rc.quad);
      o.pass = o.pass && r.rel_err < tol;
      worst = std::max(worst, r.rel_err);
      reports.push_back({{"set", set_json(A)}, {"p", r.p}, {"measure", r.measure}, {"lhs", r.lhs},
                         {"rhs", r.rhs}, {"rel_err", r.rel_err}, {"rhs_interval", r.rhs_interval},
                         {"rel_err_interval", r.rel_err_interval}});
      o.table.rows.push_back({A.to_string(), p, r.lhs, r.rhs, r.rel_err, r.rhs_interval, r.rel_err_interval});
    }
  }
  o.results["reports"] = std::move(reports);
  o.results["tolerance"] = tol;
  o.summary = "laeng: max rel_err " + format_double(worst);
  return o;
}

Outcome cmd_lexp(const RunConfig& rc) {
  const std::vector<IntervalSet> sets =
      sets_or(rc, {IntervalSet::whole(), IntervalSet{{0.0, 1.0}}, IntervalSet{{0.0, 0.1}},
                   IntervalSet{{0.0, 0.01}}, IntervalSet{{-0.005, 0.005}}});
  Outcome o;
  o.pass = true;
  o.table.header = {"set", "lexp_norm", "floor", "pass"};
  json reports = json::array();
  double lowest = INFINITY;
  for (const IntervalSet& S : sets) {
    const LexpReport r = lexp_lower_experiment(S, rc.quad);
    o.pass = o.pass && r.pass;
    lowest = std::min(lowest, r.lexp_norm);
    reports.push_back({{"set", set_json(S)}, {"lexp_norm", r.lexp_norm}, {"floor", r.floor_value},
                       {"pass", r.pass}});
    o.table.rows.push_back({S.to_string(), r.lexp_norm, r.floor_value, std::string(r.pass ? "true" : "false")});
  }
  o.results["reports"] = std::move(reports);
  o.summary = "lexp: smallest norm " + format_double(lowest) + " vs floor " + format_double(lexp_floor());
  return o;
}

Outcome cmd_parseval(const RunConfig& rc) {
  constexpr double tol = 1e-5;
  const Function f = !rc.f.empty() ? parse_function(rc.f) : indicator<Complex>(set_or(rc, IntervalSet{{-1.0, 0.0}}));
  const Function g = !rc.g.empty()        ? parse_function(rc.g)
                     : !rc.gsets.empty() ? indicator<Complex>(parse_set(rc.gsets.front()))
                                         : indicator<Complex>(IntervalSet{{0.0, 1.0}});
  const ParsevalReport r = parseval(f, g, rc.quad);
  Outcome o;
  o.results["f_Tg"] = complex_json(r.f_Tg);
  o.results["g_Tf"] = complex_json(r.g_Tf);
  o.results["residual"] = r.residual;
  o.results["tolerance"] = tol;
  o.table.header = {"f_Tg_re", "f_Tg_im", "g_Tf_re", "g_Tf_im", "residual"};
  o.table.rows.push_back({r.f_Tg.real(), r.f_Tg.imag(), r.g_Tf.real(), r.g_Tf.imag(), r.residual});
  o.pass = r.residual < tol;
  o.summary = "parseval: residual " + format_double(r.residual);
  return o;
}

Outcome cmd_inversion(const RunConfig& rc) {
  constexpr double tol = 1e-3;
  const std::vector<IntervalSet> sets = sets_or(rc, {IntervalSet{{0.0, 1.0}}});
  Outcome o;
  o.pass = true;
  o.table.header = {"set", "max_residual", "worst_x", "points"};
  json reports = json::array();
  double worst = 0.0;
  for (const IntervalSet& S : sets) {
    const InversionReport r = inversion_check(S, rc.quad);
    o.pass = o.pass && r.max_residual < tol;
    worst = std::max(worst, r.max_residual);
    reports.push_back({{"set", set_json(S)}, {"max_residual", r.max_residual}, {"worst_x", r.worst_x},
                       {"points", r.points}});
    o.table.rows.push_back({S.to_string(), r.max_residual, r.worst_x, static_cast<long long>(r.points)});
  }
  o.results["reports"] = std::move(reports);
  o.results["tolerance"] = tol;
  o.summary = "inversion: max residual " + format_double(worst);
  return o;
}

Outcome cmd_probe(const RunConfig& rc) {
  const std::string fname = rc.f.empty() ? "arcsine" : rc.f;
  Function f;
  if (fname == "arcsine") {
    f = Function([](double x) { return Complex(1.0 / weight(x)); });
  } else if (fname == "pole") {
    f = Function([](double x) { return Complex(1.0 / (1.0 - x)); });
  } else if (fname == "bounded") {
    f = Function([](double x) { return Complex(std::cos(3.0 * x)); });
  } else {
    throw ConfigError("probe --f must be one of arcsine, pole, bounded");
  }
  const std::vector<std::string> names =
      !rc.witnesses.empty() ? rc.witnesses
      : fname == "pole"     ? std::vector<std::string>{"one"}
                            : std::vector<std::string>{"one", "chi01", "x"};
  std::vector<Function> witnesses;
  for (const std::string& w : names) witnesses.push_back(named_witness(w));
  const ProbeReport r = llogl_membership_probe(f, witnesses, rc.quad);
  Outcome o;
  o.results["f"] = fname;
  json ws = json::array();
  o.table.header = {"witness", "step", "truncation", "integral"};
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
    const ProbeWitness& w = r.witnesses[i];
    ws.push_back({{"witness", names[i]}, {"verdict", to_string(w.verdict)}, {"truncations", w.truncations},
                  {"integrals", w.integrals}});
    for (std::size_t s = 0; s < w.integrals.size(); ++s) {
      o.table.rows.push_back({names[i], static_cast<long long>(s), w.truncations[s], w.integrals[s]});
    }
  }
  o.results["witnesses"] = std::move(ws);
  o.results["verdict"] = to_string(r.verdict);
  o.pass = r.pass();
  o.summary = "probe " + fname + ": " + to_string(r.verdict);
  return o;
}

Outcome cmd_verify_all(const RunConfig& rc, std::ostream& err) {
  AcceptanceOptions opts;
  opts.seed = rc.seed;
  opts.only = rc.only;
  opts.on_result = [&err](const CriterionResult& r) {
    err << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ' ' << r.name << ": " << r.detail << '\n';
  };
  const std::vector<CriterionResult> results = run_acceptance(opts);
  Outcome o;
  o.pass = true;
  o.table.header = {"id", "name", "pass", "seconds", "detail"};
  json arr = json::array();
  int failed = 0;
  for (const CriterionResult& r : results) {
    o.pass = o.pass && r.pass;
    failed += r.pass ? 0 : 1;
    arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    o.table.rows.push_back({static_cast<long long>(r.id), r.name, std::string(r.pass ? "true" : "false"),
                            r.seconds, r.detail});
  }
  o.results["criteria"] = std::move(arr);
  o.summary = "verify-all: " + std::to_string(results.size() - failed) + "/" + std::to_string(results.size()) +
              " criteria passed";
  return o;
}

Outcome dispatch(const RunConfig& rc, std::ostream& err) {
  const std::string& s = rc.subcommand;
  if (s == "transform") return cmd_transform(rc);
  if (s == "norms") return cmd_norms(rc);
  if (s == "rybakov") return cmd_rybakov(rc);
  if (s == "variation") return cmd_variation(rc);
  if (s == "envelope") return cmd_envelope(rc);
  if (s == "laeng") return cmd_laeng(rc);
  if (s == "lexp") return cmd_lexp(rc);
  if (s == "parseval") return cmd_parseval(rc);
  if (s == "inversion") return cmd_inversion(rc);
  if (s == "probe") return cmd_probe(rc);
  if (s == "verify-all") return cmd_verify_all(rc, err);
  throw ConfigError("unknown subcommand " + s);
}

void add_common(CLI::App* sub, RunConfig& rc) {
  sub->add_option("--nodes", rc.quad.nodes, "quadrature node count N")->capture_default_str();
  sub->add_option("--grid", rc.quad.grid_size, "evaluation grid size M")->capture_default_str();
  sub->add_option("--clearance", rc.quad.clearance, "clearance delta from +-1 and jumps")->capture_default_str();
  sub->add_option("--scheme", rc.scheme, "chebyshev_weighted or subtraction_legendre")
      ->check(CLI::IsMember({"chebyshev_weighted", "subtraction_legendre"}))
      ->capture_default_str();
  sub->add_option("--set", rc.sets, "interval set a,b[,a2,b2,...]; may repeat")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
      ->expected(1);
  sub->add_option("--n", rc.n, "partition parameters, comma separated")->delimiter(',');
  sub->add_option("--p", rc.p, "exponents, comma separated")->delimiter(',');
  sub->add_option("--seed", rc.seed, "seed for sampled experiments")->capture_default_str();
  sub->add_option("--format", rc.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  sub->add_option("--out", rc.out, "write the report to this path");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig rc;
  CLI::App app{"Finite Hilbert transform experiments on (-1,1)", "fht"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  const std::vector<std::pair<const char*, const char*>> subs{
      {"transform", "T(chi_S) against its closed form, or T(phi/w) for phi in {one, x, x2}"},
      {"norms", "rearrangement, LlogL, L_exp and the sup_p ||f||_p/p sandwich"},
      {"rybakov", "construct g0 = -w T(F/w) and check T(g0) = F, |T(g0)| = 1"},
      {"variation", "sum of ||m(A_k(n))||_1 against the logarithmic lower bound"},
      {"envelope", "L1 norm of the order envelope over dyadic unions"},
      {"laeng", "int_A |T(chi_A)|^p against the zeta/Gamma formula"},
      {"lexp", "||T(chi_S)||_{L_exp} against 1/(e^2 pi)"},
      {"parseval", "int f T(g) + int g T(f) = 0"},
      {"inversion", "T^(T(chi_S)) + mu(S)/(pi w) = chi_S on a clearance grid"},
      {"probe", "LlogL membership probe via int |f T(g)| under truncation refinement"},
      {"verify-all", "run every acceptance criterion"}};
  for (const auto& [name, help] : subs) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub, rc);
    sub->callback([&rc, n = std::string(name)] { rc.subcommand = n; });
    const std::string sname = name;
    if (sname == "envelope") sub->add_option("--levels", rc.levels, "finest dyadic level (<= 12)")->capture_default_str();
    if (sname == "parseval") {
      sub->add_option("--gset", rc.gsets, "set B for g = chi_B")->expected(1);
      sub->add_option("--f", rc.f, "f as x^k or chi:a,b,... (overrides --set)");
      sub->add_option("--g", rc.g, "g as x^k or chi:a,b,... (overrides --gset)");
    }
    if (sname == "transform") sub->add_option("--f", rc.f, "weighted transform of one, x or x2");
    if (sname == "norms") sub->add_option("--f", rc.f, "indicator, abs or transform (of --set)");
    if (sname == "probe") {
      sub->add_option("--f", rc.f, "arcsine, pole or bounded")->capture_default_str();
      sub->add_option("--witness", rc.witnesses, "witnesses: one, chi01, x, x^k, chi:a,b")->delimiter(';');
    }
    if (sname == "rybakov") sub->add_flag("--rate", rc.rate, "also run at N/2 and report the observed order");
    if (sname == "verify-all") sub->add_option("--only", rc.only, "criterion ids, comma separated")->delimiter(',');
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  Outcome outcome;
  try {
    rc.quad.scheme = scheme_from_string(rc.scheme);
    rc.quad.validate();
    outcome = dispatch(rc, err);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    err << "precondition error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetError& e) {
    err << "budget error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  std::ofstream file;
  if (!rc.out.empty()) {
    file.open(rc.out);
    if (!file) {
      err << "error: cannot open " << rc.out << " for writing\n";
      return 2;
    }
  }
  std::ostream& sink = rc.out.empty() ? out : file;
  if (rc.format == "csv") {
    write_csv(sink, outcome.table);
  } else {
    json doc;
    doc["subcommand"] = rc.subcommand;
    doc["version"] = kVersion;
    doc["config"] = config_json(rc);
    doc["results"] = std::move(outcome.results);
    doc["pass"] = outcome.pass;
    doc["timestamp"] = utc_timestamp();
    sink << doc.dump(2) << '\n';
  }
  err << (outcome.pass ? "PASS " : "FAIL ") << outcome.summary << '\n';
  return outcome.pass ? 0 : 1;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace fht::cli
