#include "pfz.h"

#include <cstring>
#include <string>

#include "json_io.hpp"
#include "lifting.hpp"
#include "oracle.hpp"
#include "projective.hpp"
#include "ring.hpp"
#include "solvers.hpp"
#include "verify.hpp"

using namespace pfz;

struct pfz_ctx {
  std::uint64_t budget = kDefaultEnumBudget;
  std::uint64_t seed = 0;
  std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs a handler that maps a parsed request to a (status, reply) pair and
// translates exceptions into status codes.
template <typename Fn>
pfz_status guarded(pfz_ctx* ctx, const char* request_json, char** out_json, Fn&& fn) {
  if (!ctx) return PFZ_ERR_INTERNAL;
  if (out_json) *out_json = nullptr;
  ctx->last_error.clear();
  if (!request_json || !out_json) {
    ctx->last_error = "null argument";
    return PFZ_ERR_INTERNAL;
  }
  try {
    Json request = Json::parse(request_json);
    auto [status, reply] = fn(request);
    *out_json = dup_string(reply.dump());
    return status;
  } catch (const Json::exception& e) {
    ctx->last_error = e.what();
    return PFZ_ERR_PARSE;
  } catch (const schema_error& e) {
    ctx->last_error = e.what();
    return PFZ_ERR_PARSE;
  } catch (const input_error& e) {
    ctx->last_error = e.what();
    return PFZ_ERR_DOMAIN;
  } catch (const budget_error& e) {
    ctx->last_error = e.what();
    return PFZ_ERR_DOMAIN;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return PFZ_ERR_INTERNAL;
  }
}

std::vector<ProjPoint> points_field(const Json& request, const char* key) {
  if (!request.is_object() || !request.contains(key))
    throw schema_error(std::string("missing field: ") + key);
  const Json& arr = request.at(key);
  if (!arr.is_array() || arr.empty())
    throw schema_error(std::string(key) + " must be a non-empty array of points");
  std::vector<ProjPoint> out;
  out.reserve(arr.size());
  for (const Json& j : arr) out.push_back(point_from_json(j));
  return out;
}

}  // namespace

extern "C" {

const char* pfz_version(void) { return "1.0.0"; }

pfz_ctx* pfz_ctx_new(void) { return new pfz_ctx; }

void pfz_ctx_free(pfz_ctx* ctx) { delete ctx; }

void pfz_ctx_set_enum_budget(pfz_ctx* ctx, uint64_t budget) {
  if (ctx) ctx->budget = budget;
}

void pfz_ctx_set_seed(pfz_ctx* ctx, uint64_t seed) {
  if (ctx) ctx->seed = seed;
}

const char* pfz_last_error(const pfz_ctx* ctx) {
  return ctx ? ctx->last_error.c_str() : "null context";
}

pfz_status pfz_enumerate(pfz_ctx* ctx, const char* request_json, char** out_json) {
  return guarded(ctx, request_json, out_json, [&](const Json& req) {
    if (!req.is_object() || !req.contains("modulus") || !req.contains("dim"))
      throw schema_error("expected {\"modulus\": n, \"dim\": k}");
    Ideal ideal(int_from_json(req.at("modulus")));
    unsigned dim = req.at("dim").get<unsigned>();
    std::vector<CanonicalForm> forms = enumerate_space(ideal, dim, ctx->budget);
    Json reply;
    reply["count"] = forms.size();
    Json points = Json::array();
    for (const CanonicalForm& f : forms) points.push_back(form_to_json(f));
    reply["points"] = points;
    return std::pair<pfz_status, Json>(PFZ_OK, reply);
  });
}

pfz_status pfz_lift_sl(pfz_ctx* ctx, const char* request_json, char** out_json) {
  return guarded(ctx, request_json, out_json, [&](const Json& req) {
    if (!req.is_object() || !req.contains("modulus") || !req.contains("matrix"))
      throw schema_error("expected {\"modulus\": n, \"matrix\": rows}");
    Ideal ideal(int_from_json(req.at("modulus")));
    Mat input = matrix_from_json(req.at("matrix"));
    ResidueMatrix residue(ideal, input);
    UnimodularMatrix lift = sl_lift(residue);
    bool matches = lift.entries().reduced_mod(ideal.modulus()) == residue.entries();
    Json reply;
    reply["lift"] = matrix_to_json(lift.entries())["rows"];
    reply["determinant"] = int_to_json(determinant(lift.entries()));
    reply["reduction_matches"] = matches;
    reply["pass"] = matches;
    return std::pair<pfz_status, Json>(matches ? PFZ_OK : PFZ_ERR_VERIFY, reply);
  });
}

pfz_status pfz_crt_lift(pfz_ctx* ctx, const char* request_json, char** out_json) {
  return guarded(ctx, request_json, out_json, [&](const Json& req) {
    std::vector<ProjPoint> targets = points_field(req, "points");
    ProjPoint lifted = crt_lift_point(targets);
    bool ok = true;
    for (const ProjPoint& t : targets)
      ok = ok && points_equal(ProjPoint(t.ideal(), lifted.coords()), t);
    Json reply;
    reply["point"] = point_to_json(lifted);
    reply["reductions_match"] = ok;
    return std::pair<pfz_status, Json>(ok ? PFZ_OK : PFZ_ERR_VERIFY, reply);
  });
}

pfz_status pfz_sigma_solve(pfz_ctx* ctx, const char* request_json, char** out_json) {
  return guarded(ctx, request_json, out_json, [&](const Json& req) {
    SolveReport report = sigma_preimage(points_field(req, "targets"));
    return std::pair<pfz_status, Json>(report.pass ? PFZ_OK : PFZ_ERR_VERIFY,
                                       report_to_json(report));
  });
}

pfz_status pfz_grassmann_solve(pfz_ctx* ctx, const char* request_json, char** out_json) {
  return guarded(ctx, request_json, out_json, [&](const Json& req) {
    if (!req.is_object() || !req.contains("cols"))
      throw schema_error("expected {\"rows\": r, \"cols\": k, \"targets\": [...]}");
    std::vector<ProjPoint> targets = points_field(req, "targets");
    unsigned cols = req.at("cols").get<unsigned>();
    if (req.contains("rows") && req.at("rows").get<std::size_t>() != targets.size())
      throw schema_error("rows does not match the number of targets");
    SolveReport report = grassmann_preimage(targets, cols);
    return std::pair<pfz_status, Json>(report.pass ? PFZ_OK : PFZ_ERR_VERIFY,
                                       report_to_json(report));
  });
}

pfz_status pfz_sumproduct_solve(pfz_ctx* ctx, const char* request_json, char** out_json) {
  return guarded(ctx, request_json, out_json, [&](const Json& req) {
    SolveReport report = sumproduct_preimage(points_field(req, "targets"));
    return std::pair<pfz_status, Json>(report.pass ? PFZ_OK : PFZ_ERR_VERIFY,
                                       report_to_json(report));
  });
}

pfz_status pfz_verify_suite(pfz_ctx* ctx, const char* request_json, char** out_json) {
  return guarded(ctx, request_json, out_json, [&](const Json& req) {
    if (!req.is_object() || !req.contains("suite"))
      throw schema_error("expected {\"suite\": name, \"max_modulus\": m}");
    std::string name = req.at("suite").get<std::string>();
    Int max_modulus = req.contains("max_modulus") ? int_from_json(req.at("max_modulus"))
                                                  : Int(36);
    SuiteResult result = run_suite(name, max_modulus, ctx->seed, ctx->budget);
    return std::pair<pfz_status, Json>(result.pass() ? PFZ_OK : PFZ_ERR_VERIFY,
                                       suite_to_json(result));
  });
}

void pfz_string_free(char* s) { delete[] s; }

}  // extern "C"
