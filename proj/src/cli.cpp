#include "roadcover/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "roadcover/deploy.hpp"
#include "roadcover/instance.hpp"
#include "roadcover/sim.hpp"
#include "roadcover/svg.hpp"
#include "roadcover/verify.hpp"

namespace roadcover {

namespace {

constexpr int kExitUncovered = 2;
constexpr int kExitUsage = 64;
constexpr int kExitBadInstance = 65;
constexpr int kExitFile = 66;

struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw FileError("cannot read " + path);
  return buf.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError("cannot open " + path + " for writing");
  out << data;
  out.flush();
  if (!out) throw FileError("cannot write " + path);
}

void apply_eps_env(std::ostream& err) {
  const char* v = std::getenv("ROADCOVER_EPS");
  if (!v || !*v) return;
  char* end = nullptr;
  double eps = std::strtod(v, &end);
  if (end && *end == '\0' && eps > 0) {
    set_epsilon(eps);
  } else {
    err << "warning: ignoring invalid ROADCOVER_EPS value \"" << v << "\"\n";
  }
}

const char* status_name(RoadStatus s) {
  switch (s) {
    case RoadStatus::independent: return "independent";
    case RoadStatus::collaborative_only: return "collaborative";
    case RoadStatus::uncovered: return "uncovered";
  }
  return "uncovered";
}

int cmd_verify(const std::string& path, const std::string& mode, std::ostream& out,
               std::ostream& err) {
  Instance inst;
  try {
    inst = parse_instance(read_file(path));
  } catch (const FileError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFile;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInstance;
  }
  CoverageReport rep = mode == "independent" ? verify_independent(inst.roads, inst.sensors)
                                             : verify_collaborative(inst.roads, inst.sensors);
  bool all_covered = true;
  for (const auto& rc : rep.roads) {
    out << "road " << rc.road_id << ": " << status_name(rc.status);
    if (rc.status == RoadStatus::independent) {
      out << " witness " << rc.witness_sensor;
    } else if (rc.status == RoadStatus::collaborative_only) {
      out << " witness";
      for (const auto& id : rc.witness_set) out << " " << id;
    } else {
      all_covered = false;
    }
    out << "\n";
  }
  return all_covered ? 0 : kExitUncovered;
}

int cmd_deploy(const std::string& path, const std::string& mode, double radius_flag,
               const std::string& out_path, std::ostream& out, std::ostream& err) {
  Instance inst;
  try {
    inst = parse_instance(read_file(path));
  } catch (const FileError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFile;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInstance;
  }
  double rho = radius_flag;
  if (rho <= 0) {
    if (!inst.default_radius) {
      err << "error: no --radius given and instance has no default_radius\n";
      return kExitUsage;
    }
    rho = *inst.default_radius;
  }
  Deployment dep;
  try {
    dep = mode == "arbitrary" ? deploy_arbitrary(inst.roads, rho)
                              : deploy_side_boundary(inst.roads, rho);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInstance;
  }
  Instance result;
  result.region = inst.region;
  result.default_radius = rho;
  result.roads = inst.roads;
  result.sensors = dep.placed;
  try {
    write_file(out_path, serialize_instance(result));
  } catch (const FileError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFile;
  }
  out << "lb=" << dep.lower_bound() << " deployed=" << dep.placed.size() << "\n";
  return 0;
}

int cmd_gen(int n, std::uint64_t seed, const std::string& out_path, std::ostream& err) {
  GenSpec spec;
  spec.n = n;
  spec.seed = seed;
  Instance inst;
  try {
    inst = generate_random(spec);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    write_file(out_path, serialize_instance(inst));
  } catch (const FileError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFile;
  }
  return 0;
}

int cmd_simulate(int n, double radius, int trials, std::uint64_t seed,
                 const std::string& out_path, std::ostream& err) {
  SimReport rep;
  try {
    rep = aggregate_results({run_trials(n, radius, trials, seed)});
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    write_file(out_path, rep.csv);
  } catch (const FileError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFile;
  }
  return 0;
}

int cmd_render(const std::string& path, const std::string& out_path, bool show_capsules,
               std::ostream& err) {
  Instance inst;
  try {
    inst = parse_instance(read_file(path));
  } catch (const FileError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFile;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInstance;
  }
  try {
    write_file(out_path, render_svg(inst, nullptr, show_capsules));
  } catch (const FileError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFile;
  }
  return 0;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  apply_eps_env(err);

  CLI::App app{"road coverage verification, deployment and simulation"};
  app.require_subcommand(1);

  std::string instance_path, out_path, mode;
  double radius = 0;
  int n = 0, trials = 50;
  std::uint64_t seed = 1;
  bool show_capsules = false;

  CLI::App* verify = app.add_subcommand("verify", "check road coverage of an instance");
  verify->add_option("--instance", instance_path, "instance file")->required();
  verify->add_option("--mode", mode, "independent|collaborative")
      ->default_val("collaborative")
      ->check(CLI::IsMember({"independent", "collaborative"}));

  CLI::App* deploy = app.add_subcommand("deploy", "place sensors covering all roads");
  deploy->add_option("--instance", instance_path, "instance file")->required();
  deploy->add_option("--mode", mode, "arbitrary|side-boundary")
      ->required()
      ->check(CLI::IsMember({"arbitrary", "side-boundary"}));
  deploy->add_option("--radius", radius, "sensing radius (default: instance default_radius)");
  deploy->add_option("--out", out_path, "output instance file")->required();

  CLI::App* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--n", n, "number of road segments")->required();
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--out", out_path, "output instance file")->required();

  CLI::App* simulate = app.add_subcommand("simulate", "run seeded deployment trials");
  simulate->add_option("--n", n, "road segments per trial")->required();
  simulate->add_option("--radius", radius, "sensing radius")->required();
  simulate->add_option("--trials", trials, "number of trials");
  simulate->add_option("--seed", seed, "base seed");
  simulate->add_option("--out", out_path, "output CSV file")->required();

  CLI::App* render = app.add_subcommand("render", "draw an instance as SVG");
  render->add_option("--instance", instance_path, "instance file")->required();
  render->add_option("--out", out_path, "output SVG file")->required();
  render->add_flag("--show-capsules", show_capsules, "outline each road's capsule");

  std::vector<char*> argv;
  std::string prog = "roadcover";
  argv.push_back(prog.data());
  std::vector<std::string> copy = args;
  for (auto& a : copy) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  if (verify->parsed()) return cmd_verify(instance_path, mode, out, err);
  if (deploy->parsed()) return cmd_deploy(instance_path, mode, radius, out_path, out, err);
  if (gen->parsed()) return cmd_gen(n, seed, out_path, err);
  if (simulate->parsed()) return cmd_simulate(n, radius, trials, seed, out_path, err);
  if (render->parsed()) return cmd_render(instance_path, out_path, show_capsules, err);
  return kExitUsage;
}

}  // namespace roadcover
