// psc: classify group diagrams / homogeneous spaces and certify warped metrics.
//
// Exit codes: 0 success, 1 invalid input or parameters, 2 numerical
// certificate failed, 3 unparseable input.

#include "psc/catalog.hpp"
#include "psc/classifier.hpp"
#include "psc/curvature.hpp"
#include "psc/io.hpp"
#include "psc/oracle.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kNumericFailure = 2;
constexpr int kParseFailure = 3;

struct ProfileOptions {
  std::string in_path;
  std::string variant = "modified";
  std::optional<double> a, b, c, epsilon, delta, t_max;
  std::optional<int> d0, d1, d2;
  std::size_t grid = 4096;
};

void add_profile_options(CLI::App* cmd, ProfileOptions& o) {
  cmd->add_option("--in", o.in_path, "JSON file with profile parameters (flags override it)");
  cmd->add_option("--variant", o.variant, "gz or modified")->check(CLI::IsMember({"gz", "modified"}));
  cmd->add_option("--a", o.a, "ratio a");
  cmd->add_option("--b", o.b, "ratio b");
  cmd->add_option("--c", o.c, "scale c");
  cmd->add_option("--d0", o.d0, "dim p0");
  cmd->add_option("--d1", o.d1, "dim p1");
  cmd->add_option("--d2", o.d2, "dim p2");
  cmd->add_option("--epsilon", o.epsilon, "extension offset (modified variant)");
  cmd->add_option("--delta", o.delta, "smoothing half-width");
  cmd->add_option("--tmax", o.t_max, "evaluation horizon (default 3c)");
  cmd->add_option("--grid", o.grid, "number of grid points")->check(CLI::PositiveNumber);
}

psc::io::ProfileRequest profile_request(const ProfileOptions& o, bool variant_given) {
  psc::io::ProfileRequest req;
  req.params.t_max = -1.0;
  if (!o.in_path.empty()) req = psc::io::parse_profile_request(psc::io::read_file(o.in_path), req);
  if (variant_given || o.in_path.empty()) req.variant = o.variant;
  auto& p = req.params;
  if (o.a) p.a = *o.a;
  if (o.b) p.b = *o.b;
  if (o.c) p.c = *o.c;
  if (o.d0) p.dims[0] = *o.d0;
  if (o.d1) p.dims[1] = *o.d1;
  if (o.d2) p.dims[2] = *o.d2;
  if (o.epsilon) p.epsilon = *o.epsilon;
  if (o.delta) req.delta = *o.delta;
  if (o.t_max) p.t_max = *o.t_max;
  if (p.t_max < 0.0) p.t_max = 3.0 * p.c;
  return req;
}

double default_tol() {
  if (const char* env = std::getenv("PSC_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v >= 0.0))
      throw std::invalid_argument(std::string("PSC_TOL is not a non-negative number: ") + env);
    return v;
  }
  return 1e-6;
}

/// Writes to `path`, or standard output when empty.
template <class Fn>
void emit(const std::string& path, Fn&& write) {
  if (path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  write(out);
  if (!out) throw std::invalid_argument("failed writing '" + path + "'");
}

int cmd_classify(const std::string& in_path, const std::string& catalog_name, const std::string& out_path) {
  psc::io::Json input;
  if (!catalog_name.empty()) {
    input = {{"catalog", catalog_name}};
  } else if (!in_path.empty()) {
    input = psc::io::read_file(in_path);
  } else {
    throw std::invalid_argument("classify needs --in FILE or --catalog NAME");
  }
  const auto parsed = psc::io::parse_classify_input(input);
  const psc::Verdict v = std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, psc::GroupDiagram>) return psc::classify_cohom1(x);
        else return psc::classify_homogeneous(x);
      },
      parsed);
  emit(out_path, [&](std::ostream& os) { os << psc::io::to_json(v).dump(2) << '\n'; });
  return kOk;
}

int cmd_metric_build(const psc::io::ProfileRequest& req, std::size_t grid, const std::string& out_path) {
  const auto profile = psc::io::build_profile(req);
  emit(out_path, [&](std::ostream& os) { psc::io::write_samples_csv(os, profile, grid); });
  return kOk;
}

int cmd_metric_verify(const psc::io::ProfileRequest& req, std::size_t grid, double tol, bool require_uniform,
                      const std::string& out_path, const std::string& csv_path) {
  const auto profile = psc::io::build_profile(req);
  const psc::CurvatureReport report = psc::verify_profile(profile, grid, tol);
  const psc::OracleReport oracle = psc::fd_oracle(profile, grid);
  const bool passed = require_uniform ? report.uniformly_positive : report.nonnegative;

  psc::io::Json out;
  out["profile"] = psc::io::to_json(profile);
  out["report"] = psc::io::to_json(report);
  out["oracle"] = psc::io::to_json(oracle);
  out["required"] = require_uniform ? "uniformly_positive" : "nonnegative";
  out["passed"] = passed;
  emit(out_path, [&](std::ostream& os) { os << out.dump(2) << '\n'; });
  if (!csv_path.empty()) emit(csv_path, [&](std::ostream& os) { psc::io::write_samples_csv(os, profile, grid); });

  if (!passed) {
    std::cerr << "psc: certificate failed: uniform lower bound " << report.uniform_lower_bound
              << (require_uniform ? " < " : " < -") << tol << '\n';
    return kNumericFailure;
  }
  return kOk;
}

int cmd_catalog(bool as_json) {
  if (as_json) {
    psc::io::Json out = psc::io::Json::array();
    for (const auto& item : psc::catalog_items()) {
      const auto entry = psc::catalog_lookup(item.name);
      const char* type = entry.index() == 0 ? "algebra" : entry.index() == 1 ? "diagram" : "homogeneous";
      out.push_back({{"name", item.name}, {"type", type}, {"description", item.description}});
    }
    std::cout << out.dump(2) << '\n';
  } else {
    for (const auto& item : psc::catalog_items())
      std::cout << item.name << std::string(item.name.size() < 32 ? 32 - item.name.size() : 1, ' ')
                << item.description << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Positive scalar curvature for homogeneous and cohomogeneity one manifolds"};
  app.require_subcommand(1);

  std::string in_path, out_path, catalog_name;
  auto* classify = app.add_subcommand("classify", "classify a group diagram or homogeneous pair");
  classify->add_option("--in", in_path, "JSON input file");
  classify->add_option("--catalog", catalog_name, "use a catalog entry instead of a file");
  classify->add_option("--out", out_path, "verdict JSON (default: stdout)");

  auto* metric = app.add_subcommand("metric", "build and verify warped metrics");
  metric->require_subcommand(1);

  ProfileOptions build_opts;
  std::string build_out;
  auto* build = metric->add_subcommand("build", "sample a warping profile to CSV");
  add_profile_options(build, build_opts);
  build->add_option("--out", build_out, "CSV file (default: stdout)");

  ProfileOptions verify_opts;
  std::string verify_out, verify_csv;
  bool require_uniform = false;
  std::optional<double> tol_opt;
  auto* verify = metric->add_subcommand("verify", "certify the Ricci functions of a profile");
  add_profile_options(verify, verify_opts);
  verify->add_option("--out", verify_out, "report JSON (default: stdout)");
  verify->add_option("--csv", verify_csv, "also write the samples as CSV");
  verify->add_flag("--require-uniform", require_uniform, "require uniform positivity instead of non-negativity");
  verify->add_option("--tol", tol_opt, "tolerance (default $PSC_TOL or 1e-6)");

  bool catalog_json = false;
  auto* catalog = app.add_subcommand("catalog", "list built-in algebras, diagrams and pairs");
  catalog->add_flag("--json", catalog_json, "machine-readable listing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (classify->parsed()) return cmd_classify(in_path, catalog_name, out_path);
    if (build->parsed())
      return cmd_metric_build(profile_request(build_opts, build->count("--variant") > 0), build_opts.grid, build_out);
    if (verify->parsed()) {
      const double tol = tol_opt ? *tol_opt : default_tol();
      if (!(tol >= 0.0)) throw std::invalid_argument("--tol must be non-negative");
      return cmd_metric_verify(profile_request(verify_opts, verify->count("--variant") > 0), verify_opts.grid, tol,
                               require_uniform, verify_out, verify_csv);
    }
    if (catalog->parsed()) return cmd_catalog(catalog_json);
  } catch (const psc::io::ParseError& e) {
    std::cerr << "psc: parse error: " << e.what() << '\n';
    return kParseFailure;
  } catch (const psc::ValidationError& e) {
    std::cerr << "psc: invalid input: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "psc: " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}
