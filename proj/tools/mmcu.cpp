// mmcu — command line front end: solve, oracle, verify, reduce, gen.
//
// Exit codes: 0 yes / accepted, 1 no / rejected, 2 usage or input error,
// 3 audit failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mmcu/generators.hpp"
#include "mmcu/io.hpp"
#include "mmcu/oracle.hpp"
#include "mmcu/solver.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitAudit = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

mmcu::MmcuInstance to_mmcu(const mmcu::ParsedInstance& parsed) {
  if (std::holds_alternative<mmcu::MmcuInstance>(parsed))
    return std::get<mmcu::MmcuInstance>(parsed);
  if (std::holds_alternative<mmcu::MixedCutInstance>(parsed))
    return mmcu::mixedcut_to_mmcu(std::get<mmcu::MixedCutInstance>(parsed));
  return mmcu::mixedcut_to_mmcu(
      mmcu::bpvc_to_mixedcut(std::get<mmcu::BpvcInstance>(parsed)));
}

int run_solve(const std::string& path, const std::string& mode, int q_override,
              bool audit, bool crosscheck) {
  mmcu::SolverConfig cfg;
  cfg.mode = mode == "heuristic" ? mmcu::SolveMode::heuristic : mmcu::SolveMode::sound;
  if (q_override > 0) cfg.q_override = q_override;
  cfg.audit = audit;
  cfg.crosscheck_no_with_oracle = crosscheck;
  auto inst = to_mmcu(mmcu::parse_instance(read_file(path)));
  auto sol = mmcu::solve_mmcu(inst, cfg);
  std::cout << mmcu::serialize_witness(sol);
  return sol ? kExitYes : kExitNo;
}

int run_oracle(const std::string& path, bool all_minimal) {
  auto parsed = mmcu::parse_instance(read_file(path));
  if (std::holds_alternative<mmcu::BpvcInstance>(parsed)) {
    bool yes = mmcu::oracle_bpvc(std::get<mmcu::BpvcInstance>(parsed));
    std::cout << (yes ? "s YES\n" : "s NO\n");
    return yes ? kExitYes : kExitNo;
  }
  auto inst = to_mmcu(parsed);
  if (all_minimal) {
    auto sols = mmcu::oracle_all_minimal(inst);
    if (sols.empty()) {
      std::cout << "s NO\n";
      return kExitNo;
    }
    std::cout << "s YES\nc " << sols.size() << " minimal solutions\n";
    for (const auto& s : sols) {
      std::cout << "v";
      for (auto v : s.vertices) std::cout << ' ' << (v + 1);
      std::cout << "\nf";
      for (auto e : s.edges) std::cout << ' ' << (e + 1);
      std::cout << '\n';
    }
    return kExitYes;
  }
  auto sol = mmcu::oracle_solve(inst);
  std::cout << mmcu::serialize_witness(sol);
  return sol ? kExitYes : kExitNo;
}

int run_verify(const std::string& instance_path, const std::string& witness_path) {
  auto inst = to_mmcu(mmcu::parse_instance(read_file(instance_path)));
  auto witness = mmcu::parse_witness(read_file(witness_path));
  if (!witness) {
    std::cout << "c a NO witness certifies nothing\n";
    return kExitNo;
  }
  bool ok = mmcu::is_solution(inst, *witness);
  std::cout << (ok ? "s ACCEPTED\n" : "s REJECTED\n");
  return ok ? kExitYes : kExitNo;
}

int run_reduce(const std::string& kind, const std::string& path, const std::string& out) {
  auto parsed = mmcu::parse_instance(read_file(path));
  if (kind == "bpvc-to-mixedcut") {
    if (!std::holds_alternative<mmcu::BpvcInstance>(parsed))
      throw std::runtime_error("bpvc-to-mixedcut expects a bpvc instance");
    write_output(out, mmcu::serialize(
                          mmcu::bpvc_to_mixedcut(std::get<mmcu::BpvcInstance>(parsed))));
    return kExitYes;
  }
  if (!std::holds_alternative<mmcu::MixedCutInstance>(parsed))
    throw std::runtime_error("mixedcut-to-mmcu expects a mixedcut instance");
  write_output(out, mmcu::serialize(
                        mmcu::mixedcut_to_mmcu(std::get<mmcu::MixedCutInstance>(parsed))));
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mixed multiway cut-uncut solver"};
  app.require_subcommand(1);

  std::string path, witness_path, out_path;
  std::string mode = "sound";
  int q_override = 0;
  bool audit = false, crosscheck = false, all_minimal = false;

  auto* solve = app.add_subcommand("solve", "run the fixed-parameter pipeline");
  solve->add_option("instance", path)->required();
  solve->add_option("--mode", mode)->check(CLI::IsMember({"sound", "heuristic"}));
  solve->add_option("--q-override", q_override, "replace the recursion threshold q");
  solve->add_flag("--audit", audit, "verify every emitted solution");
  solve->add_flag("--crosscheck-no", crosscheck,
                  "check no answers against the oracle when feasible");

  auto* oracle = app.add_subcommand("oracle", "exhaustive brute-force answer");
  oracle->add_option("instance", path)->required();
  oracle->add_flag("--all-minimal", all_minimal, "list every minimal solution");

  auto* verify = app.add_subcommand("verify", "check a witness file");
  verify->add_option("instance", path)->required();
  verify->add_option("witness", witness_path)->required();

  std::string reduce_kind;
  auto* reduce = app.add_subcommand("reduce", "rewrite an instance");
  reduce->add_option("kind", reduce_kind)
      ->required()
      ->check(CLI::IsMember({"bpvc-to-mixedcut", "mixedcut-to-mmcu"}));
  reduce->add_option("instance", path)->required();
  reduce->add_option("-o,--output", out_path);

  std::string gen_kind;
  mmcu::RandomMmcuParams mp;
  mmcu::RandomBpvcParams bp;
  std::uint64_t seed = 1;
  auto* gen = app.add_subcommand("gen", "emit a seeded random instance");
  gen->add_option("kind", gen_kind)
      ->required()
      ->check(CLI::IsMember({"random-mmcu", "random-bpvc"}));
  gen->add_option("--seed", seed)->required();
  gen->add_option("--min-n", mp.min_vertices);
  gen->add_option("--max-n", mp.max_vertices);
  gen->add_option("--max-extra-edges", mp.max_extra_edges);
  gen->add_option("--max-terminals", mp.max_terminals);
  gen->add_option("--max-classes", mp.max_classes);
  gen->add_option("--max-k", mp.max_vertex_budget);
  gen->add_option("--max-l", mp.max_edge_budget);
  gen->add_option("--max-left", bp.max_left);
  gen->add_option("--max-right", bp.max_right);
  gen->add_option("-o,--output", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (solve->parsed()) return run_solve(path, mode, q_override, audit, crosscheck);
    if (oracle->parsed()) return run_oracle(path, all_minimal);
    if (verify->parsed()) return run_verify(path, witness_path);
    if (reduce->parsed()) return run_reduce(reduce_kind, path, out_path);
    if (gen->parsed()) {
      mp.seed = seed;
      bp.seed = seed;
      if (gen_kind == "random-mmcu")
        write_output(out_path, mmcu::serialize(mmcu::random_mmcu(mp)));
      else
        write_output(out_path, mmcu::serialize(mmcu::random_bpvc(bp)));
      return kExitYes;
    }
  } catch (const mmcu::AuditError& e) {
    std::cerr << "audit failure: " << e.what() << '\n';
    return kExitAudit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
