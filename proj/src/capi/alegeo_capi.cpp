#include "alegeo/alegeo.h"

#include "alegeo/core/asymptotics.hpp"
#include "alegeo/core/config.hpp"
#include "alegeo/core/error.hpp"
#include "alegeo/core/obstruction.hpp"
#include "alegeo/core/poisson.hpp"
#include "alegeo/core/report.hpp"

#include <cstring>
#include <new>
#include <string>

struct alegeo_config {
  alegeo::RunConfig cfg;
};
struct alegeo_report {
  alegeo::CommandResult result;
};
struct alegeo_model {
  std::shared_ptr<const alegeo::RadialAleModel> model;
};
struct alegeo_orbifold {
  alegeo::OrbifoldPointData data;
};
struct alegeo_invariants {
  alegeo::AleInvariants inv;
};

namespace {

thread_local std::string g_last_error;

static_assert(static_cast<int>(alegeo::ErrorCode::GridTooCoarse) + 1 == ALEGEO_ERR_GRID_TOO_COARSE,
              "status codes mirror ErrorCode");

alegeo_status status_of(alegeo::ErrorCode c) { return static_cast<alegeo_status>(static_cast<int>(c) + 1); }

template <class F>
alegeo_status guarded(F&& f) {
  try {
    f();
    return ALEGEO_OK;
  } catch (const alegeo::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown error";
  }
  return ALEGEO_ERR_INTERNAL;
}

void need(const void* p, const char* what) {
  alegeo::require(p != nullptr, alegeo::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<double> radii_of(const double* radii, size_t n) {
  return radii ? std::vector<double>(radii, radii + n) : std::vector<double>{};
}

}  // namespace

extern "C" {

const char* alegeo_version(void) { return "1.0.0"; }

const char* alegeo_last_error(void) { return g_last_error.c_str(); }

const char* alegeo_status_name(alegeo_status status) {
  if (status == ALEGEO_OK) return "Ok";
  if (status == ALEGEO_ERR_INTERNAL) return "Internal";
  if (status >= ALEGEO_ERR_INVALID_ARGUMENT && status <= ALEGEO_ERR_GRID_TOO_COARSE)
    return alegeo::to_string(static_cast<alegeo::ErrorCode>(status - 1)).data();
  return "Unknown";
}

int alegeo_status_is_input_error(alegeo_status status) {
  if (status >= ALEGEO_ERR_INVALID_ARGUMENT && status <= ALEGEO_ERR_GRID_TOO_COARSE)
    return alegeo::is_input_error(static_cast<alegeo::ErrorCode>(status - 1)) ? 1 : 0;
  return 0;
}

void alegeo_string_free(char* s) { delete[] s; }

alegeo_status alegeo_config_new(alegeo_config** out) {
  return guarded([&] {
    need(out, "out");
    *out = new alegeo_config{};
  });
}

alegeo_status alegeo_config_parse(const char* ini_text, alegeo_config** out) {
  return guarded([&] {
    need(out, "out");
    need(ini_text, "ini_text");
    *out = nullptr;
    auto c = std::make_unique<alegeo_config>();
    c->cfg = alegeo::parse_config(ini_text);
    *out = c.release();
  });
}

alegeo_status alegeo_config_merge(alegeo_config* cfg, const char* ini_text) {
  return guarded([&] {
    need(cfg, "config");
    need(ini_text, "ini_text");
    alegeo::RunConfig next = cfg->cfg;
    alegeo::merge_config(next, ini_text);
    cfg->cfg = next;
  });
}

alegeo_status alegeo_config_set(alegeo_config* cfg, const char* key, const char* value) {
  return guarded([&] {
    need(cfg, "config");
    need(key, "key");
    need(value, "value");
    alegeo::set_config_value(cfg->cfg, key, value);
  });
}

alegeo_status alegeo_config_get(const alegeo_config* cfg, const char* key, char** out) {
  return guarded([&] {
    need(cfg, "config");
    need(key, "key");
    need(out, "out");
    *out = copy_string(alegeo::get_config_value(cfg->cfg, key));
  });
}

alegeo_status alegeo_config_to_ini(const alegeo_config* cfg, char** out) {
  return guarded([&] {
    need(cfg, "config");
    need(out, "out");
    *out = copy_string(alegeo::serialize_config(cfg->cfg));
  });
}

alegeo_status alegeo_config_validate(const alegeo_config* cfg) {
  return guarded([&] {
    need(cfg, "config");
    alegeo::validate_config(cfg->cfg);
  });
}

void alegeo_config_free(alegeo_config* cfg) { delete cfg; }

alegeo_status alegeo_run(const alegeo_config* cfg, alegeo_report** out) {
  return guarded([&] {
    need(cfg, "config");
    need(out, "out");
    *out = nullptr;
    auto r = std::make_unique<alegeo_report>();
    r->result = alegeo::run_command(cfg->cfg);
    *out = r.release();
  });
}

const char* alegeo_report_json(const alegeo_report* r) { return r ? r->result.json.c_str() : ""; }

const char* alegeo_report_summary(const alegeo_report* r) { return r ? r->result.summary.c_str() : ""; }

int alegeo_report_exit_status(const alegeo_report* r) { return r ? r->result.exit_status : 0; }

size_t alegeo_report_table_count(const alegeo_report* r) { return r ? r->result.tables.size() : 0; }

const char* alegeo_report_table_name(const alegeo_report* r, size_t i) {
  return r && i < r->result.tables.size() ? r->result.tables[i].name.c_str() : nullptr;
}

const char* alegeo_report_table_csv(const alegeo_report* r, size_t i) {
  return r && i < r->result.tables.size() ? r->result.tables[i].csv.c_str() : nullptr;
}

void alegeo_report_free(alegeo_report* r) { delete r; }

alegeo_status alegeo_model_eguchi_hanson(double a, alegeo_model** out) {
  return guarded([&] {
    need(out, "out");
    *out = new alegeo_model{alegeo::model_eguchi_hanson(a)};
  });
}

alegeo_status alegeo_model_flat_cone(int dim, int group_order, alegeo_model** out) {
  return guarded([&] {
    need(out, "out");
    *out = new alegeo_model{alegeo::model_flat_cone(dim, group_order)};
  });
}

int alegeo_model_dim(const alegeo_model* m) { return m ? m->model->dim() : 0; }

int alegeo_model_group_order(const alegeo_model* m) { return m ? m->model->group_order() : 0; }

alegeo_status alegeo_model_ricci_residual(const alegeo_model* m, const double* radii, size_t n,
                                          double* out) {
  return guarded([&] {
    need(m, "model");
    need(radii, "radii");
    need(out, "out");
    *out = alegeo::ricci_residual(*m->model, radii_of(radii, n));
  });
}

alegeo_status alegeo_model_poisson_volume(const alegeo_model* m, double* volume, double* b) {
  return guarded([&] {
    need(m, "model");
    const alegeo::RadialPoissonSolution sol = alegeo::solve_poisson_radial(m->model);
    if (volume) *volume = alegeo::poisson_volume(*m->model, sol);
    if (b) *b = sol.b_coeff();
  });
}

void alegeo_model_free(alegeo_model* m) { delete m; }

alegeo_status alegeo_invariants_compute(const alegeo_model* m, const double* radii, size_t n,
                                        alegeo_invariants** out) {
  return guarded([&] {
    need(m, "model");
    need(out, "out");
    *out = nullptr;
    const std::vector<double> sched =
        radii ? radii_of(radii, n) : alegeo::default_schedule(*m->model);
    *out = new alegeo_invariants{alegeo::compute_invariants(*m->model, sched)};
  });
}

alegeo_status alegeo_invariants_volume(const alegeo_invariants* inv, double* value, double* error) {
  return guarded([&] {
    need(inv, "invariants");
    if (value) *value = inv->inv.renormalized_volume;
    if (error) *error = inv->inv.volume_error;
  });
}

alegeo_status alegeo_invariants_weyl(const alegeo_invariants* inv, double* out, size_t len) {
  return guarded([&] {
    need(inv, "invariants");
    need(out, "out");
    const auto& data = inv->inv.asymptotic_weyl.tensor().data();
    alegeo::require(len == data.size(), alegeo::ErrorCode::DimensionMismatch,
                    "buffer must hold dim^4 = " + std::to_string(data.size()) + " values");
    std::copy(data.begin(), data.end(), out);
  });
}

alegeo_status alegeo_invariants_gauge_residual(const alegeo_invariants* inv, double* out) {
  return guarded([&] {
    need(inv, "invariants");
    need(out, "out");
    *out = inv->inv.gauge_residual;
  });
}

void alegeo_invariants_free(alegeo_invariants* inv) { delete inv; }

alegeo_status alegeo_orbifold_hyperbolic(int dim, int group_order, alegeo_orbifold** out) {
  return guarded([&] {
    need(out, "out");
    *out = new alegeo_orbifold{alegeo::orbifold_hyperbolic(dim, group_order)};
  });
}

alegeo_status alegeo_orbifold_custom(int dim, double mu, const double* weyl, size_t len,
                                     int group_order, alegeo_orbifold** out) {
  return guarded([&] {
    need(out, "out");
    if (!weyl) {
      *out = new alegeo_orbifold{
          alegeo::orbifold_custom(dim, mu, alegeo::WeylTensor::zero(dim), group_order)};
      return;
    }
    alegeo::require(dim >= 3, alegeo::ErrorCode::InvalidDimension, "dimension must be at least 3");
    const std::vector<double> flat(weyl, weyl + len);
    *out = new alegeo_orbifold{
        alegeo::orbifold_custom(dim, mu, alegeo::Tensor4::from_flat(dim, flat), group_order)};
  });
}

void alegeo_orbifold_free(alegeo_orbifold* o) { delete o; }

alegeo_status alegeo_obstruction_value(const alegeo_orbifold* orb, const alegeo_invariants* inv,
                                       double* value, double* error, alegeo_verdict* verdict) {
  return guarded([&] {
    need(orb, "orbifold");
    need(inv, "invariants");
    const alegeo::ObstructionReport r = alegeo::obstruction_value(orb->data, inv->inv);
    if (value) *value = r.value;
    if (error) *error = r.value_error;
    if (verdict) *verdict = static_cast<alegeo_verdict>(static_cast<int>(r.verdict));
  });
}

}  // extern "C"
