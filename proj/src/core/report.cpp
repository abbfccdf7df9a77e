#include "alegeo/core/report.hpp"

#include "alegeo/core/asymptotics.hpp"
#include "alegeo/core/error.hpp"
#include "alegeo/core/numerics.hpp"
#include "alegeo/core/obstruction.hpp"
#include "alegeo/core/poisson.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace alegeo {

namespace {

using Json = nlohmann::ordered_json;

void emit(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      os << (first ? "" : ",\n") << pad << Json(k).dump() << ": ";
      emit(os, v, indent + 2);
      first = false;
    }
    os << '\n' << close << '}';
  } else if (j.is_array()) {
    if (j.empty()) {
      os << "[]";
      return;
    }
    // Arrays of scalars stay on one line.
    const bool flat = std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); });
    os << '[' << (flat ? "" : "\n");
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) os << (flat ? ", " : ",\n");
      if (!flat) os << pad;
      emit(os, j[i], indent + 2);
    }
    if (!flat) os << '\n' << close;
    os << ']';
  } else if (j.is_number_float()) {
    const double x = j.get<double>();
    if (!std::isfinite(x)) {
      os << "null";
      return;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    os << buf;
  } else {
    os << j.dump();
  }
}

std::string dump(const Json& j) {
  std::ostringstream os;
  emit(os, j, 0);
  os << '\n';
  return os.str();
}

Json weyl_json(const WeylTensor& w) {
  const int m = w.dim();
  Json out = Json::array();
  for (int a = 0; a < m; ++a) {
    Json ja = Json::array();
    for (int b = 0; b < m; ++b) {
      Json jb = Json::array();
      for (int c = 0; c < m; ++c) {
        Json jc = Json::array();
        for (int d = 0; d < m; ++d) jc.push_back(w.tensor()(a, b, c, d));
        jb.push_back(jc);
      }
      ja.push_back(jb);
    }
    out.push_back(ja);
  }
  return out;
}

Json inputs_json(const RunConfig& c, const std::vector<double>& schedule) {
  Json in;
  in["seed"] = c.seed;
  in["quick"] = c.quick;
  in["model"] = {{"name", c.model}, {"a", c.a}, {"dim", c.dim}, {"gamma", c.gamma}};
  if (c.command == "obstruction") {
    Json o = {{"preset", c.orbifold}};
    if (c.orbifold == "custom") {
      o["mu"] = c.mu;
      o["weyl"] = c.weyl;
      if (c.weyl == "random") o["weyl_scale"] = c.weyl_scale;
    }
    o["gamma"] = c.orbifold_gamma.value_or(c.gamma);
    in["orbifold"] = o;
  }
  in["schedule"] = schedule;
  in["tolerances"] = {{"route", c.route_tolerance}};
  if (c.command == "verify") in["mc_samples"] = c.mc_samples;
  return in;
}

Json base_json(const RunConfig& c) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = c.command;
  return j;
}

Json invariants_json(const AleInvariants& inv) {
  return {{"V", inv.renormalized_volume},
          {"V_error", inv.volume_error},
          {"W_inf", weyl_json(inv.asymptotic_weyl)},
          {"W_inf_norm", inv.asymptotic_weyl.norm()},
          {"W_inf_extrapolation_error", inv.extrapolation_error},
          {"gauge_residual", inv.gauge_residual},
          {"bianchi_residual", inv.bianchi_residual}};
}

struct PoissonSummary {
  double b = 0.0;
  double v_cross = 0.0;
  double discrepancy = 0.0;
  double laplacian_residual = 0.0;
};

PoissonSummary summarize_poisson(const RadialPoissonSolution& sol, double v_direct,
                                 const std::vector<double>& schedule) {
  PoissonSummary p;
  p.b = sol.b_coeff();
  p.v_cross = poisson_volume(sol.model(), sol);
  const double scale = std::max(std::abs(v_direct), std::abs(p.v_cross));
  p.discrepancy = scale > 0.0 ? std::abs(p.v_cross - v_direct) / scale : 0.0;
  const int m = sol.model().dim();
  for (double r : schedule) {
    Vector x = Vector::Zero(m);
    x(0) = r;
    p.laplacian_residual = std::max(p.laplacian_residual, std::abs(sol.laplacian_residual(x)));
  }
  return p;
}

Json poisson_json(const PoissonSummary& p, const ExplicitDeformation& d) {
  return {{"b", p.b},
          {"V_cross", p.v_cross},
          {"V_route_discrepancy", p.discrepancy},
          {"laplacian_residual", p.laplacian_residual},
          {"volume_block", d.volume_block},
          {"weyl_block_norm", d.weyl_block.norm()},
          {"expansion_remainder_slope", d.residual_slope},
          {"l2_norm", d.l2_norm}};
}

Json model_diagnostics(const RadialAleModel& model, const std::vector<double>& schedule) {
  Json d;
  d["ricci_residual"] = ricci_residual(model, schedule);
  if (model.core_radius() > 0.0) d["decay_exponent"] = ale_decay_exponent(model, schedule);
  return d;
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

}  // namespace

CommandResult run_invariants(const RunConfig& cfg) {
  const auto model = make_model(cfg);
  const std::vector<double> schedule = make_schedule(cfg, *model);
  const AleInvariants inv = compute_invariants(*model, schedule);
  const auto sol = std::make_shared<RadialPoissonSolution>(solve_poisson_radial(model));
  const ExplicitDeformation def = explicit_deformation(sol, schedule);
  const PoissonSummary ps = summarize_poisson(*sol, inv.renormalized_volume, schedule);

  Json j = base_json(cfg);
  j["inputs"] = inputs_json(cfg, schedule);
  j["ale_invariants"] = invariants_json(inv);
  j["poisson"] = poisson_json(ps, def);
  Json diag = model_diagnostics(*model, schedule);
  diag["V_routes_agree"] = ps.discrepancy <= 5e-3;
  j["diagnostics"] = diag;

  CommandResult out;
  out.command = cfg.command;
  out.json = dump(j);
  out.tables = {{"renormalized_volume", inv.volume_table.to_csv()},
                {"asymptotic_weyl", inv.weyl_table.to_csv()},
                {"poisson_solution", sol->to_csv()}};
  out.summary = "model " + model->name() + ": V = " + fmt(inv.renormalized_volume) + " +- " +
                fmt(inv.volume_error) + ", V (Poisson) = " + fmt(ps.v_cross) + ", |W_inf| = " +
                fmt(inv.asymptotic_weyl.norm()) + ", b = " + fmt(ps.b) + "\n";
  return out;
}

CommandResult run_obstruction(const RunConfig& cfg) {
  const auto model = make_model(cfg);
  const OrbifoldPointData data = make_orbifold(cfg);
  const std::vector<double> schedule = make_schedule(cfg, *model);
  const ObstructionPipeline p = evaluate_obstruction(model, data, schedule, cfg.route_tolerance);
  const ObstructionReport& r = p.report;
  const PoissonSummary ps = summarize_poisson(*p.poisson, p.invariants.renormalized_volume, schedule);

  Json j = base_json(cfg);
  j["inputs"] = inputs_json(cfg, schedule);
  j["ale_invariants"] = invariants_json(p.invariants);
  j["poisson"] = poisson_json(ps, p.deformation);
  j["obstruction"] = {{"mu", r.mu},
                      {"W0_norm", data.weyl.norm()},
                      {"contraction", r.contraction},
                      {"lambda0_pairing", r.lambda0_pairing},
                      {"lambda0_pairing_error", r.pairing_error},
                      {"lambda0_closed", r.lambda0_closed},
                      {"route_discrepancy", r.route_discrepancy},
                      {"l2_norm", r.l2_norm},
                      {"value", r.value},
                      {"value_error", r.value_error},
                      {"verdict", to_string(r.verdict)}};
  Json diag = model_diagnostics(*model, schedule);
  diag["einstein_residual"] = einstein_residual(data);
  diag["V_routes_agree"] = ps.discrepancy <= 5e-3;
  diag["lambda0_routes_agree"] = r.route_discrepancy <= cfg.route_tolerance;
  j["diagnostics"] = diag;

  CommandResult out;
  out.command = cfg.command;
  out.json = dump(j);
  out.tables = {{"renormalized_volume", p.invariants.volume_table.to_csv()},
                {"asymptotic_weyl", p.invariants.weyl_table.to_csv()},
                {"lambda_pairing", r.pairing_table.to_csv()},
                {"poisson_solution", p.poisson->to_csv()}};
  out.summary = "obstruction value = " + fmt(r.value) + " +- " + fmt(r.value_error) +
                " (verdict: " + to_string(r.verdict) + ")\nlambda0: closed form " +
                fmt(r.lambda0_closed) + ", sphere-integral limit " + fmt(r.lambda0_pairing) + "\n";
  return out;
}

CommandResult run_verify(const RunConfig& cfg, const VerifyOptions* overrides) {
  VerifyOptions opt = overrides ? *overrides : VerifyOptions{};
  opt.seed = cfg.seed;
  opt.quick = cfg.quick;
  opt.mc_samples = cfg.mc_samples;
  const VerifyReport rep = run_verification(opt);

  Json props = Json::array();
  for (const auto& p : rep.properties)
    props.push_back({{"module", p.module},
                     {"name", p.name},
                     {"measured", p.measured},
                     {"relation", p.relation},
                     {"threshold", p.threshold},
                     {"passed", p.passed},
                     {"detail", p.detail}});
  Json j = base_json(cfg);
  j["inputs"] = inputs_json(cfg, {});
  j["verify"] = {{"all_passed", rep.all_passed()},
                 {"checked", rep.properties.size()},
                 {"failed", rep.failed()},
                 {"properties", props}};

  CommandResult out;
  out.command = cfg.command;
  out.json = dump(j);
  out.summary = "seed " + std::to_string(cfg.seed) + (cfg.quick ? " (quick)" : "") + "\n" + rep.table();
  out.exit_status = rep.all_passed() ? 0 : 1;
  return out;
}

CommandResult run_command(const RunConfig& cfg) {
  validate_config(cfg);
  if (cfg.command == "invariants") return run_invariants(cfg);
  if (cfg.command == "obstruction") return run_obstruction(cfg);
  return run_verify(cfg);
}

}  // namespace alegeo
