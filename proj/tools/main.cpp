// Command-line front end: parameter scans written as CSV.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "config.hpp"
#include "vdwaccel/vdwaccel.h"

namespace {

using vdwcli::ConfigError;
using vdwcli::RunConfig;

constexpr int exit_ok = 0;
constexpr int exit_config = 2;
constexpr int exit_numeric = 3;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

struct ContextDeleter {
  void operator()(vdw_context* c) const { vdw_context_destroy(c); }
};
struct ModelDeleter {
  void operator()(vdw_model* m) const { vdw_model_destroy(m); }
};
using ContextPtr = std::unique_ptr<vdw_context, ContextDeleter>;
using ModelPtr = std::unique_ptr<vdw_model, ModelDeleter>;

bool is_numeric_failure(vdw_status s) {
  return s == VDW_NON_CONVERGENCE || s == VDW_DIVERGENCE ||
         s == VDW_INSUFFICIENT_SAMPLING;
}

std::string describe(const vdw_model* m) {
  size_t needed = 0;
  vdw_model_describe(m, nullptr, 0, &needed);
  std::string s(needed, '\0');
  vdw_model_describe(m, s.data(), s.size(), nullptr);
  s.resize(needed ? needed - 1 : 0);
  return s;
}

const char* regime_name(vdw_regime r) {
  switch (r) {
    case VDW_REGIME_NEAR: return "near";
    case VDW_REGIME_INTERMEDIATE: return "intermediate";
    case VDW_REGIME_FAR: return "far";
  }
  return "unknown";
}

std::string validity_flag(const vdw_validity& v) {
  std::string s;
  auto add = [&](const char* f) {
    if (!s.empty()) s += ';';
    s += f;
  };
  if (!v.nonrelativistic) add("relativistic");
  if (!v.locally_inertial) add("noninertial");
  if (v.zone_mismatch) add("zone_mismatch");
  return s.empty() ? "ok" : s;
}

// Shared state of one run: context, models and the output header.
class Session {
public:
  Session(const std::string& verb, const RunConfig& cfg) : verb_(verb), cfg_(cfg) {
    vdw_context* ctx = nullptr;
    const auto units = cfg.units == "natural" ? VDW_UNITS_NATURAL : VDW_UNITS_GAUSSIAN;
    check(vdw_context_create(units, &ctx));
    ctx_.reset(ctx);
    if (cfg.rel_tol) check(vdw_context_set_rel_tol(ctx, *cfg.rel_tol));
    vdw_model* m = nullptr;
    check(vdw_model_parse(cfg.alpha_A.c_str(), &m));
    a_.reset(m);
    check(vdw_model_parse(cfg.alpha_B.c_str(), &m));
    b_.reset(m);
  }

  const vdw_context* ctx() const { return ctx_.get(); }

  vdw_pair pair(double R, double t) const { return {a_.get(), b_.get(), R, cfg_.a, t}; }

  void header(std::ostream& out) const {
    out << "# vdwaccel " << verb_ << '\n';
    if (cfg_.units == "natural")
      out << "# units: natural (hbar = c = k_B = 1)\n";
    else
      out << "# units: gaussian (erg, cm, s)\n";
    out << "# alphaA: " << describe(a_.get()) << '\n';
    out << "# alphaB: " << describe(b_.get()) << '\n';
    out << "# a: " << num(cfg_.a) << '\n';
    if (cfg_.rel_tol) out << "# rel_tol: " << num(*cfg_.rel_tol) << '\n';
  }

  static void check(vdw_status s) {
    if (s != VDW_OK) throw ConfigError(std::string(vdw_status_string(s)) + ": " + vdw_last_error());
  }

private:
  std::string verb_;
  const RunConfig& cfg_;
  ContextPtr ctx_;
  ModelPtr a_;
  ModelPtr b_;
};

struct Row {
  std::string text;
  vdw_status status = VDW_OK;
  bool converged = true;
  std::string message;
};

// Evaluates rows on `threads` workers; output order is the index order.
template <class F>
std::vector<Row> compute_rows(std::size_t n, std::size_t threads, const F& f) {
  std::vector<Row> rows(n);
  const std::size_t workers = std::min(threads, std::max<std::size_t>(n, 1));
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) rows[i] = f(i);
    });
  for (auto& th : pool) th.join();
  return rows;
}

// Row-level quadrature failures go into the status column; anything else
// is an input problem and aborts the run.
int emit(std::ostream& out, const std::vector<Row>& rows) {
  int code = exit_ok;
  for (const auto& r : rows) {
    if (r.status != VDW_OK && !is_numeric_failure(r.status))
      throw ConfigError(std::string(vdw_status_string(r.status)) + ": " + r.message);
    if (r.status != VDW_OK || !r.converged) code = exit_numeric;
  }
  for (const auto& r : rows) out << r.text << '\n';
  return code;
}

std::string status_of(const Row& r) {
  if (r.status != VDW_OK) return vdw_status_string(r.status);
  return r.converged ? "ok" : "unconverged";
}

Row failed_row(vdw_status s, std::string prefix, std::size_t blanks) {
  Row r;
  r.status = s;
  r.message = vdw_last_error();
  r.text = std::move(prefix);
  for (std::size_t i = 0; i < blanks; ++i) r.text += ",nan";
  r.text += ',' + status_of(r);
  return r;
}

int cmd_rest(const Session& s, const RunConfig& cfg, std::ostream& out) {
  s.header(out);
  out << "# axis: " << cfg.axis << '\n';
  out << "R,E_rest,err,regime,status\n";
  const auto axis = cfg.axis == "real" ? VDW_AXIS_REAL : VDW_AXIS_IMAGINARY;
  const auto rows = compute_rows(cfg.R.count, cfg.threads, [&](std::size_t i) {
    const double R = cfg.R.at(i);
    const auto p = s.pair(R, 0.0);
    double value = 0.0, err = 0.0;
    int converged = 0;
    const auto st = vdw_rest_energy(s.ctx(), &p, axis, &value, &err, &converged);
    if (st != VDW_OK) return failed_row(st, num(R), 3);
    const auto v = vdw_assess_validity(s.ctx(), &p);
    Row r;
    r.converged = converged != 0;
    r.text = num(R) + ',' + num(value) + ',' + num(err) + ',' + regime_name(v.regime);
    r.text += ',' + status_of(r);
    return r;
  });
  return emit(out, rows);
}

enum class EnergyKind { accel, near, far };

int cmd_energy(const Session& s, const RunConfig& cfg, std::ostream& out,
               EnergyKind kind) {
  s.header(out);
  if (kind == EnergyKind::far) out << "# form: " << cfg.form << '\n';
  out << "R,t,a,E_rest,E_a2t,E_a2t2,E_total,err_rest,err_a2t,err_a2t2,"
         "at_over_c,aR_over_c2,regime,validity,status\n";
  const auto form = cfg.form == "integral" ? VDW_FAR_INTEGRAL : VDW_FAR_CLOSED;
  const std::size_t nt = cfg.t.count;
  const auto rows = compute_rows(cfg.R.count * nt, cfg.threads, [&](std::size_t i) {
    const double R = cfg.R.at(i / nt);
    const double t = cfg.t.at(i % nt);
    const auto p = s.pair(R, t);
    vdw_energy e{};
    vdw_status st = VDW_OK;
    switch (kind) {
      case EnergyKind::accel: st = vdw_accelerated_energy(s.ctx(), &p, &e); break;
      case EnergyKind::near: st = vdw_near_zone_energy(s.ctx(), &p, &e); break;
      case EnergyKind::far: st = vdw_far_zone_energy(s.ctx(), &p, form, &e); break;
    }
    const std::string prefix = num(R) + ',' + num(t) + ',' + num(cfg.a);
    if (st != VDW_OK) return failed_row(st, prefix, 11);
    Row r;
    r.converged = e.converged;
    r.text = prefix;
    for (double v : {e.rest, e.a2t_term, e.a2t2_term, e.total, e.rest_error,
                     e.a2t_error, e.a2t2_error, e.validity.at_over_c,
                     e.validity.aR_over_c2})
      r.text += ',' + num(v);
    r.text += std::string(",") + regime_name(e.validity.regime) + ',' +
              validity_flag(e.validity) + ',' + status_of(r);
    return r;
  });
  return emit(out, rows);
}

int cmd_consistency(const Session& s, const RunConfig& cfg, std::ostream& out) {
  const double R = cfg.R.at(0);
  const double t = cfg.t.at(0);
  const auto p = s.pair(R, t);
  vdw_consistency c{};
  const auto st = vdw_consistency_report(s.ctx(), &p, cfg.tolerance, &c);
  if (st != VDW_OK) {
    if (is_numeric_failure(st)) {
      std::cerr << "error: " << vdw_status_string(st) << ": " << vdw_last_error() << '\n';
      return exit_numeric;
    }
    Session::check(st);
  }
  s.header(out);
  out << "# probe: R = " << num(R) << ", t = " << num(t)
      << ", at_over_c = " << num(c.probe.at_over_c)
      << ", aR_over_c2 = " << num(c.probe.aR_over_c2) << '\n';
  out << "# tolerance: " << num(c.tolerance) << '\n';
  out << "# a2t2: production " << num(c.a2t2_production) << " vs regulated "
      << num(c.a2t2_regulated) << ", ratio " << num(c.a2t2_ratio)
      << (c.a2t2_discrepancy ? " (known discrepancy)" : "") << '\n';
  out << "term,expected,imaginary_axis,real_axis,contraction,status\n";
  auto flag = [](int ok) { return ok ? "consistent" : "inconsistent"; };
  out << "rest," << num(c.rest_expected) << ',' << num(c.rest_imaginary) << ','
      << num(c.rest_real) << ',' << num(c.rest_contraction) << ','
      << flag(c.rest_consistent) << '\n';
  out << "a2t," << num(c.a2t_expected) << ',' << num(c.a2t_imaginary) << ','
      << num(c.a2t_real) << ',' << num(c.a2t_contraction) << ','
      << flag(c.a2t_consistent) << '\n';
  out << "a2t2," << num(7.0 / 24.0) << ',' << num(c.a2t2_production) << ','
      << num(c.a2t2_regulated) << ',' << num(c.a2t2_contraction) << ','
      << (c.a2t2_discrepancy ? "discrepancy" : "consistent") << '\n';

  std::cerr << "rest coefficient: " << c.rest_imaginary << " (imaginary axis), "
            << c.rest_real << " (real axis), expected 23/4: "
            << flag(c.rest_consistent) << '\n'
            << "a2t coefficient: " << c.a2t_imaginary << " (imaginary axis), "
            << c.a2t_real << " (real axis), expected 11/8: "
            << flag(c.a2t_consistent) << '\n'
            << "a2t2 coefficient: " << c.a2t2_production
            << " (production, 27/24) vs " << c.a2t2_regulated
            << " (regulated, 7/24)\n";
  return c.ok ? exit_ok : exit_numeric;
}

int cmd_tensor_dump(const Session& s, const RunConfig& cfg, std::ostream& out) {
  s.header(out);
  out << "# k: " << num(cfg.k) << '\n';
  out << "k,R,a,t,samples";
  for (const char* prefix : {"C", "N"})
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) out << ',' << prefix << i << j;
  out << ",max_diff,max_entry,numeric_error,short_window,status\n";
  const std::size_t nt = cfg.t.count;
  const auto rows = compute_rows(cfg.R.count * nt, cfg.threads, [&](std::size_t i) {
    const double R = cfg.R.at(i / nt);
    const double t = cfg.t.at(i % nt);
    vdw_tensor_dump d{};
    const auto st = vdw_tensor_dump_compute(s.ctx(), cfg.k, R, cfg.a, t, cfg.samples, &d);
    const std::string prefix = num(cfg.k) + ',' + num(R) + ',' + num(cfg.a) + ',' + num(t);
    if (st != VDW_OK) return failed_row(st, prefix, 23);
    Row r;
    r.text = prefix + ',' + std::to_string(d.samples);
    for (double v : d.closed) r.text += ',' + num(v);
    for (double v : d.numeric) r.text += ',' + num(v);
    r.text += ',' + num(d.max_diff) + ',' + num(d.max_entry) + ',' +
              num(d.numeric_error) + ',' + (d.short_window ? "1" : "0") + ",ok";
    return r;
  });
  return emit(out, rows);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Van der Waals energy of two uniformly accelerated atoms"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::optional<double> R_start, R_stop, a, t_start, t_stop, rel_tol, k, tolerance;
  std::optional<std::size_t> R_count, t_count, samples, threads;
  std::optional<std::string> R_spacing, units, alpha_A, alpha_B, out_path, axis, form;

  app.add_option("--config", config_path, "INI-style config file");
  app.add_option("--R-start", R_start, "first separation");
  app.add_option("--R-stop", R_stop, "last separation");
  app.add_option("--R-count", R_count, "number of separations");
  app.add_option("--R-spacing", R_spacing, "linear | log")->check(CLI::IsMember({"linear", "log"}));
  app.add_option("--a", a, "proper acceleration");
  app.add_option("--t-start", t_start, "first observation time");
  app.add_option("--t-stop", t_stop, "last observation time");
  app.add_option("--t-count", t_count, "number of observation times");
  app.add_option("--units", units, "gaussian | natural")->check(CLI::IsMember({"gaussian", "natural"}));
  app.add_option("--alphaA", alpha_A, "static:A0 | lorentz:A0:K0 | table:PATH");
  app.add_option("--alphaB", alpha_B, "static:A0 | lorentz:A0:K0 | table:PATH");
  app.add_option("--out", out_path, "output file (default stdout)");
  app.add_option("--rel-tol", rel_tol, "relative quadrature tolerance");
  app.add_option("--axis", axis, "rest: imaginary | real")->check(CLI::IsMember({"imaginary", "real"}));
  app.add_option("--form", form, "far: closed | integral")->check(CLI::IsMember({"closed", "integral"}));
  app.add_option("--k", k, "tensor-dump: mode wavenumber");
  app.add_option("--samples", samples, "tensor-dump: time samples (0 = automatic)");
  app.add_option("--tolerance", tolerance, "consistency: relative tolerance");
  app.add_option("--threads", threads, "worker threads");

  auto* rest = app.add_subcommand("rest", "rest-frame dispersion energy over R");
  auto* accel = app.add_subcommand("accel", "energy with acceleration corrections over R and t");
  auto* near = app.add_subcommand("near", "near-zone approximation over R and t");
  auto* far = app.add_subcommand("far", "far-zone approximation over R and t");
  auto* consistency = app.add_subcommand("consistency", "cross-check of the coefficients");
  auto* tensor = app.add_subcommand("tensor-dump", "time-averaged potential tensor");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_config;
  }

  RunConfig cfg;
  std::string verb = app.get_subcommands().front()->get_name();
  try {
    if (!config_path.empty()) cfg.apply(vdwcli::IniFile::load(config_path));
    if (R_start) {
      cfg.R.start = *R_start;
      if (!R_stop && !R_count) cfg.R.stop = *R_start;
    }
    if (R_stop) cfg.R.stop = *R_stop;
    if (R_count) cfg.R.count = *R_count;
    if (R_spacing) cfg.R.spacing = vdwcli::parse_spacing(*R_spacing);
    if (a) cfg.a = *a;
    if (t_start) {
      cfg.t.start = *t_start;
      if (!t_stop && !t_count) cfg.t.stop = *t_start;
    }
    if (t_stop) cfg.t.stop = *t_stop;
    if (t_count) cfg.t.count = *t_count;
    if (units) cfg.units = *units;
    if (alpha_A) cfg.alpha_A = *alpha_A;
    if (alpha_B) cfg.alpha_B = *alpha_B;
    if (out_path) cfg.out = *out_path;
    if (rel_tol) cfg.rel_tol = *rel_tol;
    if (axis) cfg.axis = *axis;
    if (form) cfg.form = *form;
    if (k) cfg.k = *k;
    if (samples) cfg.samples = *samples;
    if (tolerance) cfg.tolerance = *tolerance;
    if (threads) cfg.threads = *threads;
    cfg.validate();

    const Session session(verb, cfg);
    std::ostringstream buffer;
    int rc = exit_ok;
    if (rest->parsed()) rc = cmd_rest(session, cfg, buffer);
    else if (accel->parsed()) rc = cmd_energy(session, cfg, buffer, EnergyKind::accel);
    else if (near->parsed()) rc = cmd_energy(session, cfg, buffer, EnergyKind::near);
    else if (far->parsed()) rc = cmd_energy(session, cfg, buffer, EnergyKind::far);
    else if (consistency->parsed()) rc = cmd_consistency(session, cfg, buffer);
    else if (tensor->parsed()) rc = cmd_tensor_dump(session, cfg, buffer);

    if (cfg.out.empty()) {
      std::cout << buffer.str() << std::flush;
    } else {
      std::ofstream file(cfg.out, std::ios::binary);
      if (!file) throw ConfigError("cannot open output file '" + cfg.out + "'");
      file << buffer.str();
      if (!file.flush()) throw ConfigError("failed writing '" + cfg.out + "'");
    }
    if (rc == exit_numeric) std::cerr << "error: numerical checks failed\n";
    return rc;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_config;
  }
}
