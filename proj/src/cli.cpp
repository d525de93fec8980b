#include "unilat/cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "unilat/axioms.hpp"
#include "unilat/conditions.hpp"
#include "unilat/constructions.hpp"
#include "unilat/error.hpp"
#include "unilat/format.hpp"
#include "unilat/norms.hpp"
#include "unilat/theorem_lab.hpp"

namespace unilat {

OpTable resolve_sub_op(const BoundedLattice& L, Elem e, NormRole role, std::string_view spec) {
  require_proper_neutral(L, e);
  if (spec == "meet") {
    if (role != NormRole::TNorm) throw Error(ErrorCode::RoleMismatch, "meet is a t-norm; this kind needs a TConorm");
    return canonical_tnorm_meet(L, e);
  }
  if (spec == "join") {
    if (role != NormRole::TConorm) throw Error(ErrorCode::RoleMismatch, "join is a t-conorm; this kind needs a TNorm");
    return canonical_tconorm_join(L, e);
  }
  if (spec == "drastic") return role == NormRole::TNorm ? drastic_tnorm(L, e) : drastic_tconorm(L, e);
  if (spec.starts_with("index:")) {
    const std::string digits(spec.substr(6));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::SyntaxError, "bad sub-op index '" + digits + "'");
    const std::size_t k = std::stoul(digits);
    std::optional<OpTable> found;
    std::size_t seen = 0;
    for_each_norm(L, e, role, [&](const OpTable& op) {
      if (seen++ == k) {
        found = op;
        return false;
      }
      return true;
    });
    if (!found)
      throw Error(ErrorCode::IndexOutOfRange,
                  "sub-op index " + std::to_string(k) + " but only " + std::to_string(seen) + " exist");
    return *found;
  }
  throw Error(ErrorCode::SyntaxError, "unknown sub-op '" + std::string(spec) + "'");
}

namespace {

std::string set_text(const BoundedLattice& L, const ElemSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + L.label(s[i]);
  return out + "}";
}

std::string status_text(const BoundedLattice& L, const AxiomOutcome& o) {
  switch (o.status) {
    case CheckStatus::Passed: return "passed";
    case CheckStatus::Unchecked: return "unchecked";
    case CheckStatus::Failed: return "FAILED: " + describe(L, *o.witness);
  }
  return "?";
}

int report_conflicts(std::ostream& out, const BoundedLattice& L, ConstructionKind kind,
                     const std::vector<ConflictReport>& conflicts) {
  out << "ill-defined: " << conflicts.size() << " conflicting pair(s)\n";
  for (const auto& c : conflicts) out << "  " << describe(L, piecewise_spec(kind), c) << "\n";
  return kExitFails;
}

struct Args {
  std::string file;
  std::string e;
  std::string kind;
  std::string subop = "meet";
  std::vector<std::string> order;
  std::size_t max_n = 6;
  std::size_t min_n = 1;
  std::size_t norm_cap = kDefaultNormCap;
  std::string theorems = "all";
  std::string report;
  std::string axiom;
  std::string require;
  int jobs = 0;
};

int cmd_validate(const Args& a, std::ostream& out) {
  const BoundedLattice L = load_lattice(a.file);
  out << "valid bounded lattice: " << L.size() << " elements, bottom " << L.label(L.bottom()) << ", top "
      << L.label(L.top()) << "\n";
  return kExitOk;
}

int cmd_table(const Args& a, std::ostream& out) {
  const BoundedLattice L = load_lattice(a.file);
  const Elem e = L.at(a.e);
  const ConstructionKind kind = parse_kind(a.kind);
  const OpTable sub = resolve_sub_op(L, e, required_role(kind), a.subop);
  const Construction c = construct(L, e, kind, sub);
  if (!c.ok()) return report_conflicts(out, L, kind, c.conflicts);
  ElemSet order;
  if (a.order.empty()) {
    order = L.declared();
  } else {
    for (const auto& s : a.order) order.push_back(L.at(s));
  }
  out << render_cayley_table(L, *c.table, order, to_string(kind));
  return kExitOk;
}

int cmd_check(const Args& a, std::ostream& out) {
  const BoundedLattice L = load_lattice(a.file);
  const Elem e = L.at(a.e);
  const ConstructionKind kind = parse_kind(a.kind);
  const OpTable sub = resolve_sub_op(L, e, required_role(kind), a.subop);
  out << "kind: " << to_string(kind) << "\ne: " << a.e << "\nsub-op: " << a.subop << "\n";
  const Construction c = construct(L, e, kind, sub);
  if (!c.ok()) return report_conflicts(out, L, kind, c.conflicts);
  const UninormReport r = is_uninorm(L, *c.table, e);
  out << "Commutativity: " << status_text(L, r.commutative) << "\n";
  out << "Associativity: " << status_text(L, r.associative) << "\n";
  out << "Monotonicity: " << status_text(L, r.monotone) << "\n";
  out << "Neutrality: " << status_text(L, r.neutral) << "\n";
  out << "uninorm: " << (r.is_uninorm ? "yes" : "no") << "\n";
  return r.is_uninorm ? kExitOk : kExitFails;
}

int cmd_conditions(const Args& a, std::ostream& out) {
  const BoundedLattice L = load_lattice(a.file);
  const Elem e = L.at(a.e);
  const OpTable t = resolve_sub_op(L, e, NormRole::TNorm, a.subop);
  out << "I_e: " << set_text(L, incomparables(L, e)) << "\nP: " << set_text(L, p_set(L, e)) << "\n";
  bool all = true;
  for (ConditionId id : kAllConditions) {
    const ConditionResult r = evaluate_condition(L, e, id, &t);
    all = all && r.holds;
    out << to_string(id) << ": " << (r.holds ? "holds" : "fails");
    if (r.witness) out << " " << describe(L, *r.witness);
    out << "\n";
  }
  return all ? kExitOk : kExitFails;
}

std::vector<TheoremId> parse_theorem_list(const std::string& s) {
  if (s == "all") return {kAllTheorems.begin(), kAllTheorems.end()};
  std::vector<TheoremId> out;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, ',');)
    if (!part.empty()) out.push_back(parse_theorem(part));
  if (out.empty()) throw Error(ErrorCode::SyntaxError, "no theorems given");
  return out;
}

int cmd_sweep(const Args& a, std::ostream& out) {
  const auto theorems = parse_theorem_list(a.theorems);
  SweepOptions opts;
  opts.n_min = a.min_n;
  opts.norm_cap = a.norm_cap;
  opts.keep_cases = !a.report.empty();
  const SweepReport r = sweep(a.max_n, theorems, opts);
  r.write_summary(out);
  const auto missing = r.missing_branches(theorems);
  out << "branches not reached: " << missing.size();
  for (const auto& m : missing) out << " " << m;
  out << "\n";
  if (!a.report.empty()) {
    std::ofstream f(a.report, std::ios::binary);
    if (!f) throw Error(ErrorCode::SyntaxError, "cannot write '" + a.report + "'");
    r.write_cases(f);
  }
  return r.consistent() ? kExitOk : kExitFails;
}

ConditionId parse_condition(std::string_view name) {
  for (ConditionId id : kAllConditions)
    if (to_string(id) == name) return id;
  throw Error(ErrorCode::SyntaxError, "unknown condition '" + std::string(name) + "'");
}

int cmd_hunt(const Args& a, std::ostream& out) {
  const ConstructionKind kind = parse_kind(a.kind);
  HuntOptions opts;
  opts.norm_cap = a.norm_cap;
  if (!a.require.empty()) opts.require = parse_condition(a.require);
  const HuntResult h = search_counterexample(a.max_n, kind, parse_axiom(a.axiom), opts);
  out << "instances checked: " << h.instances_checked << "\n";
  if (h.outcome == HuntResult::Outcome::NotFound) {
    out << "no counterexample up to n=" << a.max_n << "\n";
    return kExitOk;
  }
  const BoundedLattice& L = *h.lattice;
  out << (h.outcome == HuntResult::Outcome::Found ? "counterexample" : "construction conflict") << " at n=" << L.size()
      << ", e=" << L.label(h.e) << "\n"
      << serialize_lattice(L) << "sub-op: " << render_compact(L, *h.sub_op) << "\n";
  if (h.witness) out << to_string(h.witness->axiom) << ": " << describe(L, *h.witness) << "\n";
  if (!h.conflicts.empty()) report_conflicts(out, L, kind, h.conflicts);
  return kExitFails;
}

int cmd_export_dot(const Args& a, std::ostream& out) {
  const BoundedLattice L = load_lattice(a.file);
  out << export_dot(L, std::filesystem::path(a.file).stem().string());
  return kExitOk;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite bounded lattices, uninorm constructions and characterization sweeps", "unilat"};
  app.require_subcommand(1);
  Args a;
  app.add_option("--jobs", a.jobs, "Worker threads (0: runtime default)")->check(CLI::NonNegativeNumber);

  auto* validate = app.add_subcommand("validate", "Parse and validate a .lat file");
  validate->add_option("file", a.file)->required();

  auto* table = app.add_subcommand("table", "Print a construction's Cayley table as TSV");
  auto* check = app.add_subcommand("check", "Check the uninorm axioms of a construction");
  for (auto* sub : {table, check}) {
    sub->add_option("file", a.file)->required();
    sub->add_option("--e", a.e, "Neutral element label")->required();
    sub->add_option("--kind", a.kind, "Construction kind")->required();
    sub->add_option("--subop", a.subop, "meet|join|drastic|index:<k>")->required();
  }
  table->add_option("--order", a.order, "Row and column order (default: declaration order)");

  auto* conditions = app.add_subcommand("conditions", "Evaluate the structural conditions at e");
  conditions->add_option("file", a.file)->required();
  conditions->add_option("--e", a.e)->required();
  conditions->add_option("--subop", a.subop, "t-norm read by PAnnihilation (default meet)");

  auto* sweep_cmd = app.add_subcommand("sweep", "Verify characterizations over all small lattices");
  sweep_cmd->add_option("--max-n", a.max_n)->required();
  sweep_cmd->add_option("--min-n", a.min_n);
  sweep_cmd->add_option("--theorems", a.theorems, "Comma-separated theorem ids or 'all'");
  sweep_cmd->add_option("--norm-cap", a.norm_cap, "Largest interval whose norms are all enumerated");
  sweep_cmd->add_option("--report", a.report, "Write one line per case to this file");

  auto* hunt = app.add_subcommand("hunt", "Search for the smallest axiom violation");
  hunt->add_option("--kind", a.kind)->required();
  hunt->add_option("--axiom", a.axiom)->required();
  hunt->add_option("--max-n", a.max_n)->required();
  hunt->add_option("--require", a.require, "Only instances where this condition holds");
  hunt->add_option("--norm-cap", a.norm_cap);

  auto* dot = app.add_subcommand("export-dot", "Print the Hasse diagram in DOT");
  dot->add_option("file", a.file)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }
  if (a.jobs > 0) omp_set_num_threads(a.jobs);

  std::ostringstream buffer;
  try {
    int code = kExitOk;
    if (*validate) code = cmd_validate(a, buffer);
    else if (*table) code = cmd_table(a, buffer);
    else if (*check) code = cmd_check(a, buffer);
    else if (*conditions) code = cmd_conditions(a, buffer);
    else if (*sweep_cmd) code = cmd_sweep(a, buffer);
    else if (*hunt) code = cmd_hunt(a, buffer);
    else if (*dot) code = cmd_export_dot(a, buffer);
    out << buffer.str();
    return code;
  } catch (const Error& e) {
    out << buffer.str();
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace unilat
