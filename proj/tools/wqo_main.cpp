// wqo: verify CAO families, check the oscillator identities, and enumerate
// solutions of the compatibility conditions for given (N, D).
//
// Exit status: 0 all checks passed, 1 a verification failed, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "wqo/cao.hpp"
#include "wqo/physics.hpp"
#include "wqo/report.hpp"
#include "wqo/verifier.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct FamilyArgs {
  std::string family;
  int m = -1;
  int n = -1;
  std::optional<int> l;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--family", family, "sl3|sl5a|sl5b|ospB|ospD1|ospD2")->required();
    cmd.add_option("--m", m, "first rank parameter")->required();
    cmd.add_option("--n", n, "second rank parameter")->required();
    cmd.add_option("--l", l, "split index for sl5a/sl5b");
  }
  wqo::FamilyParams params() const { return {m, n, l}; }
};

struct Options {
  FamilyArgs fam;
  std::optional<int> N;
  std::optional<int> D;
  int max_rank = 8;
  double mass = 1.0;
  double omega = 1.0;
  double hbar = 1.0;
  double tol = 1e-10;
  std::optional<int> mu;
  std::optional<double> c;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string out;
};

void add_format(CLI::App& cmd, Options& o) {
  cmd.add_option("--format", o.format, "text|json")->check(CLI::IsMember({"text", "json"}));
}

int run_verify(const Options& o) {
  const auto family = wqo::parse_family(o.fam.family);
  const auto params = o.fam.params();
  const int M = static_cast<int>(wqo::build(family, params).size());
  const int N = o.N.value_or(1);
  const int D = o.D.value_or(M / N);

  wqo::RecordOptions ropts;
  ropts.seed = o.seed;
  const auto v = wqo::verify_family(family, params, N, D, ropts);
  if (o.format == "json") {
    auto j = wqo::to_json(v.record);
    j["reports"] = nlohmann::json::array();
    for (const auto& r : v.reports) j["reports"].push_back(wqo::to_json(r));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << wqo::to_text(v.record);
    for (const auto& r : v.reports) std::cout << "    " << r.check_name << ": " << r.details << "\n";
  }
  return v.record.accepted() ? kPass : kFail;
}

int run_physics(const Options& o) {
  const auto family = wqo::parse_family(o.fam.family);
  const auto caos = wqo::build(family, o.fam.params());
  if (!o.N || !o.D) throw std::invalid_argument("physics needs --N and --D");
  auto ops = wqo::assign_nd(caos, *o.N, *o.D);

  const auto cc = wqo::cc_scalar(caos);
  wqo::PhysParams p{o.mass, o.omega, o.hbar, cc.c.to_double(), cc.mu};
  if (!cc.usable && !(o.mu && o.c)) {
    std::cerr << "compatibility scalar lambda = " << cc.lambda << " is unusable; pass --mu and --c to override\n";
    return kFail;
  }
  if (o.mu) p.mu = *o.mu;
  if (o.c) p.c = *o.c;
  p.validate();

  ops = wqo::build_rp(std::move(ops), p);
  double form_gap = 0.0;
  bool forms_agree = true;
  try {
    ops = wqo::build_h(std::move(ops), p);
  } catch (const wqo::HamiltonianMismatch& e) {
    std::cerr << e.what() << "\n";
    forms_agree = false;
    form_gap = e.gap;
  }
  if (!forms_agree) return kFail;
  form_gap = wqo::max_abs(ops.H - ops.H_prime);

  const auto hh = wqo::check_hamilton_heisenberg(ops, p, o.tol);
  const auto dag = wqo::dagger_report(caos);
  const double residual = wqo::cc_residual(ops, p).max;
  const std::string note = wqo::h_eigen_note(ops.H);

  if (o.format == "json") {
    nlohmann::json j{{"family", wqo::family_name(family)},
                     {"params", wqo::to_json(o.fam.params())},
                     {"algebra_name", wqo::algebra_name(family, o.fam.params())},
                     {"N", *o.N},
                     {"D", *o.D},
                     {"lambda", cc.lambda.to_string()},
                     {"physics",
                      {{"params", wqo::to_json(p)},
                       {"residual_max", residual},
                       {"tol", o.tol},
                       {"passed", hh.passed},
                       {"h_form_gap", form_gap},
                       {"ladder_residual", wqo::ladder_residual(ops, p)},
                       {"hermitian_defining", dag.passed},
                       {"H_eigen_note", note}}},
                     {"reports", {wqo::to_json(hh), wqo::to_json(dag)}}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << wqo::algebra_name(family, o.fam.params()) << " as N=" << *o.N << ", D=" << *o.D
              << " oscillator, lambda = " << cc.lambda << "\n"
              << "  mass=" << p.mass << " omega=" << p.omega << " hbar=" << p.hbar << " c=" << p.c
              << " mu=" << p.mu << "\n"
              << "  Hamilton = Heisenberg: " << (hh.passed ? "passed" : "FAILED") << ", " << hh.details << "\n"
              << "  |H - H'|_max = " << form_gap << "\n"
              << "  " << dag.details << "\n"
              << "  " << note << "\n";
  }
  return hh.passed ? kPass : kFail;
}

int run_enumerate(const Options& o) {
  const auto cat = wqo::enumerate_solutions(*o.N, *o.D, o.max_rank);
  if (o.format == "json")
    std::cout << wqo::to_json(cat).dump(2) << "\n";
  else
    std::cout << wqo::to_text(cat);
  for (const auto& r : cat.records)
    if (!r.accepted()) return kFail;
  return kPass;
}

int run_catalog(const Options& o) {
  const auto cat = wqo::enumerate_solutions(*o.N, *o.D, o.max_rank);
  std::ofstream file(o.out, std::ios::binary | std::ios::trunc);
  if (!file) {
    std::cerr << "cannot write " << o.out << "\n";
    return kUsage;
  }
  file << wqo::to_json(cat).dump(2) << "\n";
  if (!file) {
    std::cerr << "write to " << o.out << " failed\n";
    return kUsage;
  }
  std::cout << "wrote " << cat.records.size() << " records to " << o.out << "\n";
  for (const auto& r : cat.records)
    if (!r.accepted()) return kFail;
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wigner quantum oscillator compatibility-condition solutions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", wqo::kToolVersion);
  Options o;

  auto* verify = app.add_subcommand("verify", "verify one CAO family");
  o.fam.add_to(*verify);
  verify->add_option("--N", o.N, "particle count for the record");
  verify->add_option("--D", o.D, "dimension for the record");
  verify->add_option("--seed", o.seed, "super-Jacobi sampling seed");
  add_format(*verify, o);

  auto* physics = app.add_subcommand("physics", "check Hamilton = Heisenberg for an assigned family");
  o.fam.add_to(*physics);
  physics->add_option("--N", o.N, "particle count")->required();
  physics->add_option("--D", o.D, "dimension")->required();
  physics->add_option("--mass", o.mass, "particle mass");
  physics->add_option("--omega", o.omega, "frequency");
  physics->add_option("--hbar", o.hbar, "reduced Planck constant");
  physics->add_option("--tol", o.tol, "max-entry residual tolerance");
  physics->add_option("--mu", o.mu, "override mu (+1 or -1)");
  physics->add_option("--c", o.c, "override c > 0");
  add_format(*physics, o);

  auto* enumerate = app.add_subcommand("enumerate", "list all solutions for (N, D)");
  enumerate->add_option("--N", o.N, "particle count")->required();
  enumerate->add_option("--D", o.D, "dimension")->required();
  enumerate->add_option("--max-rank", o.max_rank, "bound on m and n");
  add_format(*enumerate, o);

  auto* catalog = app.add_subcommand("catalog", "write the solution catalog as JSON");
  catalog->add_option("--N", o.N, "particle count")->required();
  catalog->add_option("--D", o.D, "dimension")->required();
  catalog->add_option("--max-rank", o.max_rank, "bound on m and n");
  catalog->add_option("--out", o.out, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (verify->parsed()) return run_verify(o);
    if (physics->parsed()) return run_physics(o);
    if (enumerate->parsed()) return run_enumerate(o);
    if (catalog->parsed()) return run_catalog(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
