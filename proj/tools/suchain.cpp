#include "suchain/angles.hpp"
#include "suchain/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using namespace suchain;

namespace {

std::string default_output_dir() {
  const char* env = std::getenv("SUCHAIN_OUTPUT_DIR");
  return env && *env ? env : ".";
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

void add_case_options(CLI::App* cmd, RunConfig& cfg, std::string& case_name_opt) {
  cmd->add_option("--case", case_name_opt, "regular or irregular")
      ->check(CLI::IsMember({"regular", "irregular"}))
      ->capture_default_str();
  cmd->add_option("--eps", cfg.eps, "magnetic parameter, nonzero")->capture_default_str();
  cmd->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  cmd->add_option("--output-dir", cfg.output_dir, "output directory (default $SUCHAIN_OUTPUT_DIR or .)");
}

int cmd_verify(RunConfig cfg) {
  CertificateReport rep = run_verify(cfg);
  const fs::path path = fs::path(cfg.output_dir) / ("verify_" + rep.case_tag + ".json");
  write_file(path, rep.json());
  for (const auto& c : rep.checks) {
    if (c.name == "pi1_rank") std::cout << "pi1_rank=" << c.observed.substr(0, c.observed.find(' ')) << "\n";
    std::cout << (c.informational ? "INFO " : c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.observed << "\n";
  }
  std::cout << (rep.pass() ? "all checks passed" : "some checks failed") << "; report " << path.string() << "\n";
  return rep.pass() ? 0 : 1;
}

int cmd_centralizer(const std::string& algebra, const std::string& sub_name, bool m_only, int max_degree,
                    const std::string& out_dir, bool dump) {
  LieAlgebra alg;
  Subalgebra sub;
  if (algebra == "su2") {
    if (sub_name != "torus") throw std::invalid_argument("su2 supports --sub torus only");
    alg = build_su2();
    sub = {{0}, {1, 2}};
  } else if (algebra == "su3") {
    if (sub_name == "torus") {
      alg = build_su3_chevalley();
      sub = centralizer_of(alg, regular_system(1.0).W);
    } else if (sub_name == "irregular-A") {
      alg = build_su3_gellmann();
      sub = centralizer_of(alg, irregular_system(1.0).W);
    } else {
      throw std::invalid_argument("unknown subalgebra " + sub_name);
    }
  } else {
    throw std::invalid_argument("unknown algebra " + algebra);
  }
  if (!check_subalgebra(alg, sub)) throw std::logic_error("split is not reductive");
  GeneratorSet gs = indecomposable_generators(alg, sub, max_degree, m_only);
  std::string text = "algebra " + alg.name + "\nsubalgebra " + sub_name + "\nm_only " + (m_only ? "true" : "false") +
                     "\nmax_degree " + std::to_string(max_degree) + "\n" + report(gs);
  const fs::path path = fs::path(out_dir) / ("centralizer_" + algebra + "_" + sub_name + ".txt");
  write_file(path, text);
  if (dump) write_file(fs::path(out_dir) / ("algebra_" + alg.name + ".txt"), serialize(alg));
  std::cout << text;
  return 0;
}

int cmd_flow(RunConfig cfg, int stride, bool with_angles) {
  MagneticSystem sys = make_system(cfg);
  std::mt19937_64 rng(cfg.seed);
  PhasePoint pt = random_point(sys, rng);
  FlowTrajectory traj = integrate_flow(sys, pt, cfg.t_end, cfg.dt, stride);
  auto fs_list = monitored_integrals(sys);
  std::string csv = trajectory_csv(sys, traj, fs_list);
  if (with_angles) {
    // append continuous torus angles, unwrapped by nearest continuation
    std::istringstream in(csv);
    std::ostringstream out;
    std::string line;
    std::getline(in, line);
    out << line << ",phi1,phi2\n";
    Eigen::Vector2d phi = torus_angles(sys, traj.points.front());
    Eigen::Vector3cd zprev = root_coordinates(sys, traj.points.front());
    for (std::size_t r = 0; std::getline(in, line); ++r) {
      Eigen::Vector3cd z = root_coordinates(sys, traj.points[r]);
      if (r > 0) {
        Eigen::Vector3d d;
        for (int k = 0; k < 3; ++k) d(k) = std::arg(z(k) / zprev(k));
        phi += Eigen::Vector2d(-(d(0) + d(2)) / 3, -(d(1) + d(2)) / 3);
      }
      zprev = z;
      out << line << "," << fmt_double(phi(0)) << "," << fmt_double(phi(1)) << "\n";
    }
    csv = out.str();
  }
  const std::string tag = case_name(sys.tag);
  write_file(fs::path(cfg.output_dir) / ("flow_" + tag + ".csv"), csv);
  auto report = conservation_report(sys, traj, fs_list, 1e-8);
  write_file(fs::path(cfg.output_dir) / ("conservation_" + tag + ".json"), conservation_json(report));
  bool ok = true;
  for (const auto& d : report) {
    std::cout << (d.pass ? "PASS " : "FAIL ") << d.function << " max_drift=" << fmt_double(d.max_drift) << "\n";
    ok = ok && d.pass;
  }
  return ok ? 0 : 1;
}

int cmd_brackets(RunConfig cfg) {
  MagneticSystem reg = regular_system(cfg.eps);
  BracketTable t = bracket_table_regular(reg);
  BracketTable t0 = specialize_eps(t, Q3(0));
  std::string text = "regular slice table, symbolic eps\n" + t.text() + "\nregular slice table, eps = 0\n" + t0.text() +
                     "\nmoment table (" + reg.alg->name + ")\n" + moment_table(*reg.alg) + "\nmoment table (" +
                     irregular_system(cfg.eps).alg->name + ")\n" + moment_table(*irregular_system(cfg.eps).alg);
  nlohmann::ordered_json j;
  j["eps"] = cfg.eps;
  j["regular"] = nlohmann::ordered_json::parse(t.json());
  j["regular_eps0"] = nlohmann::ordered_json::parse(t0.json());
  write_file(fs::path(cfg.output_dir) / "brackets.txt", text);
  write_file(fs::path(cfg.output_dir) / "brackets.json", j.dump(2) + "\n");
  std::cout << text;
  return t.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"magnetic geodesic chains on SU(3): invariants, flows and certificates"};
  app.set_config("--config", "", "config file mirroring the command-line flags");
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.output_dir = default_output_dir();
  std::string case_opt = "regular";

  auto* verify = app.add_subcommand("verify", "run the certificate suite for one case");
  add_case_options(verify, cfg, case_opt);
  verify->add_option("--samples", cfg.samples, "random points per check")->capture_default_str();
  verify->add_option("--t-end", cfg.t_end, "flow length")->capture_default_str();
  verify->add_option("--dt", cfg.dt, "RK4 step")->capture_default_str();

  std::string algebra = "su3", sub_name = "torus";
  bool m_only = false, dump = false;
  int max_degree = 4;
  auto* cent = app.add_subcommand("centralizer", "generators and relations of an invariant algebra");
  cent->add_option("--algebra", algebra, "su3 or su2")->capture_default_str();
  cent->add_option("--sub", sub_name, "torus or irregular-A")->capture_default_str();
  cent->add_flag("--m-only", m_only, "restrict to the m coordinates");
  cent->add_option("--max-degree", max_degree, "highest degree")->capture_default_str();
  cent->add_flag("--dump-algebra", dump, "also write the algebra spec");
  cent->add_option("--output-dir", cfg.output_dir, "output directory (default $SUCHAIN_OUTPUT_DIR or .)");

  int stride = 10;
  bool angles = false;
  auto* flow = app.add_subcommand("flow", "integrate the magnetic flow and monitor integrals");
  add_case_options(flow, cfg, case_opt);
  flow->add_option("--t-end", cfg.t_end, "flow length")->capture_default_str();
  flow->add_option("--dt", cfg.dt, "RK4 step")->capture_default_str();
  flow->add_option("--stride", stride, "record every n-th step")->capture_default_str();
  flow->add_flag("--angles", angles, "append torus angle columns");

  auto* brackets = app.add_subcommand("brackets", "symbolic bracket tables");
  brackets->add_option("--eps", cfg.eps, "magnetic parameter, nonzero")->capture_default_str();
  brackets->add_option("--output-dir", cfg.output_dir, "output directory (default $SUCHAIN_OUTPUT_DIR or .)");

  CLI11_PARSE(app, argc, argv);
  cfg.tag = case_opt == "irregular" ? Case::irregular : Case::regular;
  try {
    if (*verify) return cmd_verify(cfg);
    if (*cent) return cmd_centralizer(algebra, sub_name, m_only, max_degree, cfg.output_dir, dump);
    if (*flow) {
      validate(cfg);
      return cmd_flow(cfg, stride, angles);
    }
    if (*brackets) {
      validate(cfg);
      return cmd_brackets(cfg);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
