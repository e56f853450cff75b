// Command-line front end over the pfz C API. Subcommand payloads are inline
// JSON or @path to a file; replies are printed as JSON (TSV on request for
// enumerations). Exit codes: 0 pass, 1 verification failure, 2 malformed
// JSON, 3 precondition/budget failure.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pfz.h"

namespace {

using Json = nlohmann::ordered_json;

std::string load_payload(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) {
    std::cerr << "error: cannot read file " << arg.substr(1) << "\n";
    std::exit(3);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Ctx {
  pfz_ctx* handle = nullptr;
  Ctx() : handle(pfz_ctx_new()) {}
  ~Ctx() { pfz_ctx_free(handle); }
};

int finish(pfz_ctx* ctx, pfz_status status, char* reply, bool tsv_points = false) {
  if (reply) {
    if (tsv_points) {
      Json parsed = Json::parse(reply);
      for (const Json& p : parsed.at("points")) {
        std::string line = p.at("modulus").dump();
        for (const Json& c : p.at("coords")) line += "\t" + c.dump();
        std::cout << line << "\n";
      }
    } else {
      std::cout << reply << "\n";
    }
    pfz_string_free(reply);
  }
  if (status != PFZ_OK) std::cerr << "error: " << pfz_last_error(ctx) << "\n";
  return static_cast<int>(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solvers for projective spaces over Z/n"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "seed for randomized suites");

  std::int64_t modulus = 0;
  unsigned dim = 1;
  unsigned rows = 0, cols = 0;
  std::string payload, format = "json", suite;
  std::int64_t max_modulus = 36;

  CLI::App* cmd_enum = app.add_subcommand("enumerate", "list the space mod N");
  cmd_enum->add_option("--modulus", modulus, "modulus N")->required();
  cmd_enum->add_option("--dim", dim, "dimension K")->required();
  cmd_enum->add_option("--format", format, "json|tsv")
      ->check(CLI::IsMember({"json", "tsv"}));

  CLI::App* cmd_lift = app.add_subcommand("lift-sl", "integer determinant-one lift");
  cmd_lift->add_option("--modulus", modulus, "modulus N")->required();
  cmd_lift->add_option("--matrix", payload, "matrix rows as JSON or @file")->required();

  CLI::App* cmd_crt = app.add_subcommand("crt-lift", "lift a tuple of points");
  cmd_crt->add_option("--points", payload, "JSON array of points or @file")->required();

  CLI::App* cmd_sigma = app.add_subcommand("sigma-solve", "row-class preimage in SL_k");
  cmd_sigma->add_option("--targets", payload, "JSON array of points or @file")->required();

  CLI::App* cmd_grass = app.add_subcommand("grassmann-solve", "rectangular preimage");
  cmd_grass->add_option("--rows", rows, "row count R")->required();
  cmd_grass->add_option("--cols", cols, "column count K")->required();
  cmd_grass->add_option("--targets", payload, "JSON array of points or @file")->required();

  CLI::App* cmd_sum = app.add_subcommand("sumproduct-solve", "sum-product preimage");
  cmd_sum->add_option("--targets", payload, "JSON array of points or @file")->required();

  CLI::App* cmd_verify = app.add_subcommand("verify", "aggregated oracle suites");
  cmd_verify->add_option("--suite", suite, "crt|sl|sigma|sumproduct|fixedpoint")
      ->required()
      ->check(CLI::IsMember({"crt", "sl", "sigma", "sumproduct", "fixedpoint"}));
  cmd_verify->add_option("--max-modulus", max_modulus, "cap on suite moduli");

  CLI11_PARSE(app, argc, argv);

  Ctx ctx;
  pfz_ctx_set_seed(ctx.handle, seed);
  if (const char* budget = std::getenv("PFZ_ENUM_BUDGET"))
    pfz_ctx_set_enum_budget(ctx.handle, std::strtoull(budget, nullptr, 10));

  char* reply = nullptr;
  if (cmd_enum->parsed()) {
    Json req{{"modulus", modulus}, {"dim", dim}};
    pfz_status st = pfz_enumerate(ctx.handle, req.dump().c_str(), &reply);
    return finish(ctx.handle, st, reply, format == "tsv" && st == PFZ_OK);
  }
  if (cmd_lift->parsed()) {
    std::string req = std::string("{\"modulus\": ") + std::to_string(modulus) +
                      ", \"matrix\": " + load_payload(payload) + "}";
    pfz_status st = pfz_lift_sl(ctx.handle, req.c_str(), &reply);
    return finish(ctx.handle, st, reply);
  }
  if (cmd_crt->parsed()) {
    std::string req = "{\"points\": " + load_payload(payload) + "}";
    pfz_status st = pfz_crt_lift(ctx.handle, req.c_str(), &reply);
    return finish(ctx.handle, st, reply);
  }
  if (cmd_sigma->parsed()) {
    std::string req = "{\"targets\": " + load_payload(payload) + "}";
    pfz_status st = pfz_sigma_solve(ctx.handle, req.c_str(), &reply);
    return finish(ctx.handle, st, reply);
  }
  if (cmd_grass->parsed()) {
    std::string req = "{\"rows\": " + std::to_string(rows) +
                      ", \"cols\": " + std::to_string(cols) +
                      ", \"targets\": " + load_payload(payload) + "}";
    pfz_status st = pfz_grassmann_solve(ctx.handle, req.c_str(), &reply);
    return finish(ctx.handle, st, reply);
  }
  if (cmd_sum->parsed()) {
    std::string req = "{\"targets\": " + load_payload(payload) + "}";
    pfz_status st = pfz_sumproduct_solve(ctx.handle, req.c_str(), &reply);
    return finish(ctx.handle, st, reply);
  }
  if (cmd_verify->parsed()) {
    Json req{{"suite", suite}, {"max_modulus", max_modulus}};
    pfz_status st = pfz_verify_suite(ctx.handle, req.dump().c_str(), &reply);
    return finish(ctx.handle, st, reply);
  }
  return 0;
}
