#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "gen32/constructions.hpp"
#include "gen32/errors.hpp"
#include "gen32/report.hpp"
#include "gen32/verify.hpp"

using namespace gen32;

namespace {

enum Exit { kOk = 0, kClaimFailure = 1, kUsage = 2, kPrecondition = 3 };

struct GroupArgs {
  std::string name;
  std::uint32_t q = 0, i = 0, m = 0, n = 0, r = 0, p = 0;
  std::string action;
  std::string mat;
  std::string file;
};

void add_group_flags(CLI::App* cmd, GroupArgs& a) {
  cmd->add_option("--q", a.q, "field order");
  cmd->add_option("--i", a.i, "table row");
  cmd->add_option("--m", a.m, "z-group m");
  cmd->add_option("--n", a.n, "z-group n, or degree for sym/cyclic/dicyclic");
  cmd->add_option("--r", a.r, "z-group r");
  cmd->add_option("--p", a.p, "prime for sl2");
  cmd->add_option("--action", a.action, "all | nonzero")->check(CLI::IsMember({"all", "nonzero"}));
  cmd->add_option("--mat", a.mat, "matrix group file for affine");
}

std::uint32_t need(std::uint32_t v, const char* flag) {
  if (v == 0) throw CLI::ValidationError(std::string(flag) + " is required");
  return v;
}

struct Built {
  PermGroup group;
  std::optional<MatrixGroup> g0;  // set for affine groups
  std::string label;
};

Built build(const GroupArgs& a) {
  const auto& n = a.name;
  auto linear = [&](const MatrixGroup& mg, const std::string& label) {
    const auto dom = a.action == "all" ? VectorDomain::All : VectorDomain::Nonzero;
    return Built{to_perm_group(mg, dom), std::nullopt, label};
  };
  auto affine = [&](const MatrixGroup& mg, const std::string& label) {
    if (a.action == "nonzero") return Built{to_perm_group(mg, VectorDomain::Nonzero), std::nullopt, label + "_0"};
    return Built{affine_group(mg), mg, label};
  };
  if (n == "s0") return linear(s0_group(need(a.q, "--q")), "s0_q" + std::to_string(a.q));
  if (n == "sl2") return linear(sl2(need(a.p, "--p")), "sl2_p" + std::to_string(a.p));
  if (n == "affine") {
    if (a.mat.empty()) throw CLI::ValidationError("--mat is required");
    return affine(read_matrix_group_file(a.mat), "affine");
  }
  if (n == "table1") return affine(table1_matrix_group(static_cast<int>(need(a.i, "--i"))), "G" + std::to_string(a.i));
  if (n == "table2") return affine(table2_matrix_group(static_cast<int>(need(a.i, "--i"))), "M" + std::to_string(a.i));
  if (n == "zgroup") {
    const ZGroupSpec s{need(a.m, "--m"), need(a.n, "--n"), need(a.r, "--r")};
    return {z_group(s), std::nullopt, "z_" + std::to_string(s.m) + "_" + std::to_string(s.n) + "_" + std::to_string(s.r)};
  }
  if (n == "agl1") return {agl1(need(a.q, "--q")), std::nullopt, "agl1_q" + std::to_string(a.q)};
  if (n == "sym") return {symmetric_group(need(a.n, "--n")), std::nullopt, "sym" + std::to_string(a.n)};
  if (n == "cyclic") return {cyclic_group(need(a.n, "--n")), std::nullopt, "cyclic" + std::to_string(a.n)};
  if (n == "dicyclic") return {dicyclic_group(need(a.n, "--n")), std::nullopt, "dicyclic" + std::to_string(a.n)};
  throw CLI::ValidationError("unknown construction: " + n);
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw PreconditionError("cannot write " + out);
  f << text;
}

std::vector<std::uint32_t> parse_list(const std::string& s) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      std::size_t used = 0;
      const long v = std::stol(tok, &used);
      if (used != tok.size() || v <= 0) throw std::invalid_argument(tok);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--q: bad list entry '" + tok + "'");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gen32: generation and transitivity checks for small permutation groups"};
  app.require_subcommand(1);

  GroupArgs cons, ana;
  std::string cons_out, ana_out;
  std::uint64_t ana_budget = kDefaultBudget;

  auto* construct = app.add_subcommand("construct", "print a group's generators");
  construct->add_option("name", cons.name, "s0 | affine | table1 | table2 | sl2 | zgroup | agl1 | sym | cyclic | dicyclic")
      ->required();
  add_group_flags(construct, cons);
  construct->add_option("--out", cons_out, "output file");

  auto* analyze_cmd = app.add_subcommand("analyze", "report invariants of a group as JSON");
  analyze_cmd->add_option("name", ana.name, "construction name (see construct)");
  add_group_flags(analyze_cmd, ana);
  analyze_cmd->add_option("--file", ana.file, "permutation group file");
  analyze_cmd->add_option("--out", ana_out, "output file");
  analyze_cmd->add_option("--budget", ana_budget, "tuple-test budget");

  std::string suite = "all", qlist, rep_out;
  VerifyOptions vopts;
  auto* reproduce = app.add_subcommand("reproduce", "run verification suites");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  reproduce->add_option("--suite", suite, "suite name")->check(CLI::IsMember(suites));
  reproduce->add_option("--q", qlist, "comma-separated q values for lemma7");
  reproduce->add_option("--out", rep_out, "JSON output file");
  reproduce->add_option("--budget", vopts.budget, "tuple-test budget");
  reproduce->add_option("--jobs", vopts.jobs, "worker threads")->check(CLI::Range(1u, 256u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*construct) {
      std::ostringstream os;
      write_perm_group(os, build(cons).group);
      emit(cons_out, os.str());
      return kOk;
    }
    if (*analyze_cmd) {
      DSearchOptions d;
      d.budget = ana_budget;
      GroupReport r;
      if (!ana.file.empty()) {
        std::ifstream f(ana.file);
        if (!f) throw FormatError("cannot read " + ana.file);
        r = analyze(ana.file, read_perm_group(f), d);
      } else {
        if (ana.name.empty()) throw CLI::ValidationError("give a construction name or --file");
        const Built b = build(ana);
        r = analyze(b.label, b.group, d, b.g0);
      }
      emit(ana_out, to_json(r).dump(2) + "\n");
      return kOk;
    }
    if (*reproduce) {
      const auto qs = qlist.empty() ? default_lemma7_qs() : parse_list(qlist);
      const auto vs = run_suite(suite, vopts, qs);
      const auto j = verdicts_json(suite, vs);
      std::ostream& table = rep_out.empty() ? std::cerr : std::cout;
      for (const auto& v : vs)
        table << (v.pass ? "PASS " : "FAIL ") << v.claim_id << "  expected=" << v.expected.dump()
              << " computed=" << v.computed.dump() << '\n';
      table << j["passed"] << " passed, " << j["failed"] << " failed\n";
      emit(rep_out, j.dump(2) + "\n");
      if (j["failed"].get<std::size_t>() > 0) {
        std::cerr << "failing claims:";
        for (const auto& id : j["failed_ids"]) std::cerr << ' ' << id.get<std::string>();
        std::cerr << '\n';
        return kClaimFailure;
      }
      return kOk;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return kPrecondition;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kPrecondition;
  } catch (const Indeterminate& e) {
    std::cerr << "indeterminate: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPrecondition;
  }
  return kUsage;
}
