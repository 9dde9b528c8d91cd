// cmarr: command-line front end for the center-of-mass arrangement library.
//
// Every command prints one JSON report with sorted keys:
//   {"command", "parameters", "result", "versions", "deterministic"}
// Exit status: 0 success, 2 user error, 3 resource limit, 4 internal defect.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "cmarr/cmarr.hpp"
#include "cmarr/json_io.hpp"

namespace {

using cmarr::io::json;
using cmarr::io::to_json;

constexpr const char* kToolVersion = "0.1.0";
constexpr int kFormatVersion = 1;

constexpr int kExitOk = 0;
constexpr int kExitUser = 2;
constexpr int kExitResource = 3;
constexpr int kExitDefect = 4;

int exit_code_for(cmarr::ErrorKind kind) {
  switch (kind) {
    case cmarr::ErrorKind::parameter:
    case cmarr::ErrorKind::parse:
    case cmarr::ErrorKind::division_by_zero:
    case cmarr::ErrorKind::degenerate_form:
      return kExitUser;
    case cmarr::ErrorKind::size_limit:
    case cmarr::ErrorKind::exhausted:
    case cmarr::ErrorKind::bad_prime:
      return kExitResource;
    case cmarr::ErrorKind::internal:
      return kExitDefect;
  }
  return kExitDefect;
}

struct Output {
  bool pretty = false;

  void emit(const json& j) const { std::cout << (pretty ? j.dump(2) : j.dump()) << '\n'; }

  int report(const std::string& command, json parameters, json result, int code = kExitOk) const {
    emit({{"command", command},
          {"parameters", std::move(parameters)},
          {"result", std::move(result)},
          {"versions", {{"tool", kToolVersion}, {"format", kFormatVersion}}},
          {"deterministic", true}});
    return code;
  }

  int error(const std::string& command, const std::string& kind, const std::string& message,
            int code) const {
    emit({{"command", command},
          {"error", {{"kind", kind}, {"message", message}}},
          {"versions", {{"tool", kToolVersion}, {"format", kFormatVersion}}}});
    return code;
  }
};

cmarr::Configuration read_configuration(const std::string& path) {
  std::ifstream in(path);
  if (!in) cmarr::raise(cmarr::ErrorKind::parse, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return cmarr::io::parse_configuration(buffer.str());
}

std::vector<cmarr::GaussianRational> read_grid(const std::string& path) {
  std::ifstream in(path);
  if (!in) cmarr::raise(cmarr::ErrorKind::parse, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  json j = json::parse(buffer.str(), nullptr, false);
  if (j.is_discarded()) cmarr::raise(cmarr::ErrorKind::parse, "grid file is not valid JSON");
  if (j.is_object() && j.contains("points")) j = j["points"];
  if (!j.is_array() || j.empty())
    cmarr::raise(cmarr::ErrorKind::parse, "grid must be a nonempty array of points");
  std::vector<cmarr::GaussianRational> grid;
  for (const auto& p : j) grid.push_back(cmarr::io::gaussian_from_json(p));
  return grid;
}

std::size_t default_max_flats() {
  const char* env = std::getenv("CMARR_MAX_FLATS");
  if (!env || !*env) return cmarr::kDefaultMaxFlats;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0)
    cmarr::raise(cmarr::ErrorKind::parameter, std::string("CMARR_MAX_FLATS must be a positive integer, got '") + env + "'");
  return static_cast<std::size_t>(v);
}

json membership_json(const cmarr::Membership& m) {
  json out = {{"member", m.member}};
  if (m.witness) out["witness"] = to_json(*m.witness);
  return out;
}

std::vector<cmarr::GaussianRational> sorted_theta(std::size_t t, const cmarr::Configuration& c) {
  std::vector<cmarr::GaussianRational> v;
  for (const auto& e : cmarr::theta(t, c)) v.push_back(e.value);
  std::sort(v.begin(), v.end());
  return v;
}

// ---------------------------------------------------------------------------

struct Args {
  std::size_t t = 1;
  std::size_t k = 1;
  bool modified = false;
  bool oracle = false;
  std::optional<std::size_t> max_flats;
  std::string file;
  std::size_t count = 1;
  std::uint64_t seed = 0;
  std::int64_t bound = 2;
  std::uint64_t max_rejections = 10000;
  std::string mode = "conf";
};

json space_parameters(const Args& a) {
  return {{"t", a.t}, {"k", a.k}, {"modified", a.modified}};
}

int cmd_build(const Args& a, const Output& out) {
  auto arrangement = cmarr::build(a.t, a.k, a.modified);
  return out.report("build", space_parameters(a), to_json(arrangement));
}

int cmd_invariants(const Args& a, const Output& out) {
  const std::size_t cap = a.max_flats.value_or(default_max_flats());
  json params = space_parameters(a);
  params["oracle"] = a.oracle;
  params["max_flats"] = cap;

  auto arrangement = cmarr::build(a.t, a.k, a.modified);
  auto lattice = cmarr::build_lattice(arrangement, cap);
  auto chi = cmarr::char_poly(lattice);
  auto regions = cmarr::region_count(lattice);
  json result = {{"hyperplane_count", arrangement.size()},
                 {"flat_count", lattice.size()},
                 {"flats_by_codim", lattice.flats_by_codim()},
                 {"charpoly", to_json(chi)},
                 {"poincare", to_json(cmarr::poincare_poly(lattice))},
                 {"regions", to_json(regions.regions)},
                 {"bounded_regions", to_json(regions.bounded)},
                 {"regions_of", "real arrangement with the same integer forms"}};
  int code = kExitOk;
  if (a.oracle) {
    auto oracle = cmarr::finite_field_charpoly(arrangement);
    const bool agrees = oracle == chi;
    result["oracle_charpoly"] = to_json(oracle);
    result["oracle_agrees"] = agrees;
    if (!agrees) code = kExitDefect;
  }
  return out.report("invariants", std::move(params), std::move(result), code);
}

int cmd_lattice(const Args& a, const Output& out) {
  const std::size_t cap = a.max_flats.value_or(default_max_flats());
  json params = space_parameters(a);
  params["max_flats"] = cap;
  auto lattice = cmarr::build_lattice(cmarr::build(a.t, a.k, a.modified), cap);
  return out.report("lattice", std::move(params), to_json(lattice));
}

int cmd_check(const Args& a, const Output& out) {
  json params = {{"file", a.file}, {"t", a.t}, {"modified", a.modified}};
  auto c = read_configuration(a.file);
  auto m = cmarr::membership(a.t, c, a.modified);
  json result = membership_json(m);
  result["k"] = c.size();
  result["space"] = a.modified ? "M_prime" : "M";
  if (auto p = cmarr::find_parallelogram(c)) result["parallelogram"] = to_json(*p);
  return out.report("check", std::move(params), std::move(result));
}

int cmd_stabilize(const Args& a, const Output& out) {
  json params = {{"file", a.file}, {"t", a.t}};
  auto c = read_configuration(a.file);
  auto s = cmarr::stabilize(a.t, c);
  const bool input_in = cmarr::in_M_prime(a.t, c).member;
  json result = {{"configuration", to_json(s)},
                 {"appended", to_json(s[s.size() - 1])},
                 {"offset", to_json(cmarr::stabilization_offset(a.t, c))},
                 {"input_in_M_prime", input_in},
                 {"landing", cmarr::in_M_prime(a.t, s).member}};
  // inputs from M'(t,k) must land in M'(t,k+1); a miss is a defect
  const int code = (input_in && !result["landing"].get<bool>()) ? kExitDefect : kExitOk;
  return out.report("stabilize", std::move(params), std::move(result), code);
}

int cmd_theta(const Args& a, const Output& out) {
  json params = {{"file", a.file}, {"t", a.t}};
  auto c = read_configuration(a.file);
  auto report = cmarr::verify_pullback(a.t, c);
  json result = {{"theta", to_json(cmarr::theta(a.t, c))},
                 {"chi", to_json(cmarr::chi(a.t, c))},
                 {"theta_route", report.theta_route},
                 {"definitional_route", report.definitional_route}};
  if (report.theta_collision)
    result["theta_collision"] = {to_json(report.theta_collision->first),
                                 to_json(report.theta_collision->second)};
  return out.report("theta", std::move(params), std::move(result),
                    report.agree() ? kExitOk : kExitDefect);
}

int cmd_verify(const Args& a, const Output& out) {
  json params = space_parameters(a);
  params["count"] = a.count;
  params["seed"] = a.seed;
  params["bound"] = a.bound;
  if (a.count < 1) cmarr::raise(cmarr::ErrorKind::parameter, "--count must be >= 1");
  if (a.t > a.k) cmarr::raise(cmarr::ErrorKind::parameter, "verify needs t <= k");

  cmarr::ConfigurationSampler plain({.k = a.k, .t = a.t, .mode = cmarr::SampleMode::conf,
                                     .seed = a.seed, .coordinate_bound = a.bound,
                                     .max_rejections = a.max_rejections});
  cmarr::ConfigurationSampler modified({.k = a.k, .t = a.t, .mode = cmarr::SampleMode::M_prime,
                                        .seed = a.seed + 1, .coordinate_bound = a.bound,
                                        .max_rejections = a.max_rejections});
  cmarr::Rng permutations(a.seed + 2);

  std::uint64_t pullback_failures = 0, landing_failures = 0, equivariance_failures = 0;
  std::uint64_t members = 0;
  for (std::size_t i = 0; i < a.count; ++i) {
    const auto c = plain.next();
    const auto report = cmarr::verify_pullback(a.t, c);
    if (!report.agree()) ++pullback_failures;
    const bool member = cmarr::membership(a.t, c, a.modified).member;
    if (member) ++members;

    const auto g = cmarr::random_permutation(permutations, a.k);
    const auto moved = cmarr::permute(c, g);
    if (cmarr::membership(a.t, moved, a.modified).member != member ||
        sorted_theta(a.t, moved) != sorted_theta(a.t, c))
      ++equivariance_failures;

    const auto m = modified.next();
    if (!cmarr::in_M_prime(a.t, cmarr::stabilize(a.t, m)).member) ++landing_failures;
  }
  json result = {{"checked", a.count},
                 {"members", members},
                 {"pullback_failures", pullback_failures},
                 {"landing_failures", landing_failures},
                 {"equivariance_failures", equivariance_failures},
                 {"generator_id", std::string(cmarr::kGeneratorId)}};
  const bool clean = pullback_failures == 0 && landing_failures == 0 && equivariance_failures == 0;
  return out.report("verify", std::move(params), std::move(result), clean ? kExitOk : kExitDefect);
}

int cmd_sample(const Args& a, const Output& out) {
  cmarr::SamplerSpec spec{.k = a.k, .t = a.t, .mode = cmarr::parse_sample_mode(a.mode),
                          .seed = a.seed, .coordinate_bound = a.bound,
                          .max_rejections = a.max_rejections};
  const json spec_json = to_json(spec);
  json samples = json::array();
  std::size_t index = 0;
  for (const auto& c : cmarr::sample(spec, a.count)) {
    json item = to_json(c);
    item["spec"] = spec_json;
    item["generator_id"] = std::string(cmarr::kGeneratorId);
    item["index"] = index++;
    samples.push_back(std::move(item));
  }
  json params = spec_json;
  params["count"] = a.count;
  return out.report("sample", std::move(params), {{"samples", std::move(samples)}});
}

int cmd_census(const Args& a, const Output& out) {
  json params = {{"file", a.file}, {"t", a.t}, {"k", a.k}};
  const auto grid = read_grid(a.file);
  const auto census = cmarr::grid_census(a.k, a.t, grid);
  return out.report("census", std::move(params),
                    {{"grid_size", grid.size()}, {"total", census.total}, {"in_M", census.in_M}});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Center-of-mass arrangements: construction, invariants and membership"};
  app.require_subcommand(1);
  Args args;
  Output out;
  app.add_flag("--pretty", out.pretty, "Indent the JSON report");

  auto add_tk = [&](CLI::App* cmd) {
    cmd->add_option("-t,--t", args.t, "Subset size t")->required()->check(CLI::Range(1, 1000000));
    cmd->add_option("-k,--k", args.k, "Number of points k")->required()->check(CLI::Range(1, 1000000));
  };
  auto add_modified = [&](CLI::App* cmd) {
    cmd->add_flag("--modified", args.modified, "Use M'(t,k) instead of M(t,k)");
  };
  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", args.file, "Configuration JSON file")->required();
  };

  auto* build = app.add_subcommand("build", "Hyperplanes of the arrangement");
  add_tk(build);
  add_modified(build);

  auto* invariants = app.add_subcommand("invariants", "Characteristic/Poincare polynomials and regions");
  add_tk(invariants);
  add_modified(invariants);
  invariants->add_flag("--oracle", args.oracle, "Cross-check with finite-field point counts");
  invariants->add_option("--max-flats", args.max_flats, "Lattice size cap (default: $CMARR_MAX_FLATS or 200000)");

  auto* lattice = app.add_subcommand("lattice", "Export the intersection lattice");
  add_tk(lattice);
  add_modified(lattice);
  lattice->add_option("--max-flats", args.max_flats, "Lattice size cap");

  auto* check = app.add_subcommand("check", "Membership of a configuration");
  add_file(check);
  check->add_option("-t,--t", args.t, "Subset size t")->required()->check(CLI::Range(1, 1000000));
  add_modified(check);

  auto* stabilize = app.add_subcommand("stabilize", "Apply the stabilization map S");
  add_file(stabilize);
  stabilize->add_option("-t,--t", args.t, "Subset size t")->required()->check(CLI::Range(1, 1000000));

  auto* theta = app.add_subcommand("theta", "Subset sums (Theta) and symmetric tuples (chi)");
  add_file(theta);
  theta->add_option("-t,--t", args.t, "Subset size t")->required()->check(CLI::Range(1, 1000000));

  auto* verify = app.add_subcommand("verify", "Seeded pullback, equivariance and landing checks");
  add_tk(verify);
  add_modified(verify);
  verify->add_option("--count", args.count, "Number of configurations")->required();
  verify->add_option("--seed", args.seed, "Generator seed")->required();
  verify->add_option("--bound", args.bound, "Coordinate bound B")->check(CLI::Range(1, 1000000));
  verify->add_option("--max-rejections", args.max_rejections, "Draws per accepted sample");

  auto* sample = app.add_subcommand("sample", "Seeded configurations in Conf, M or M'");
  add_tk(sample);
  sample->add_option("--mode", args.mode, "conf, M or M_prime")->check(CLI::IsMember({"conf", "M", "M_prime"}));
  sample->add_option("--count", args.count, "Number of configurations")->check(CLI::Range(1, 1000000));
  sample->add_option("--seed", args.seed, "Generator seed")->required();
  sample->add_option("--bound", args.bound, "Coordinate bound B")->check(CLI::Range(1, 1000000));
  sample->add_option("--max-rejections", args.max_rejections, "Draws per accepted sample");

  auto* census = app.add_subcommand("census", "Count grid^k tuples in M(t,k)");
  census->add_option("file", args.file, "JSON array of grid points")->required();
  add_tk(census);

  std::string command = "cmarr";
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    for (const auto* sub : app.get_subcommands()) command = sub->get_name();
    return out.error(command, "usage", e.what(), kExitUser);
  }

  command = app.get_subcommands().front()->get_name();
  try {
    if (command == "build") return cmd_build(args, out);
    if (command == "invariants") return cmd_invariants(args, out);
    if (command == "lattice") return cmd_lattice(args, out);
    if (command == "check") return cmd_check(args, out);
    if (command == "stabilize") return cmd_stabilize(args, out);
    if (command == "theta") return cmd_theta(args, out);
    if (command == "verify") return cmd_verify(args, out);
    if (command == "sample") return cmd_sample(args, out);
    if (command == "census") return cmd_census(args, out);
  } catch (const cmarr::Error& e) {
    return out.error(command, std::string(cmarr::to_string(e.kind())), e.what(), exit_code_for(e.kind()));
  } catch (const std::exception& e) {
    return out.error(command, "internal", e.what(), kExitDefect);
  }
  return out.error(command, "usage", "unknown command", kExitUser);
}
