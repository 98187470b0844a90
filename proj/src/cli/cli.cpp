#include "casimir/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "casimir/closed_form.hpp"
#include "casimir/errors.hpp"
#include "casimir/lifted.hpp"
#include "casimir/normalization.hpp"
#include "casimir/render.hpp"
#include "casimir/sampling.hpp"
#include "casimir/serialize.hpp"
#include "casimir/suite.hpp"
#include "casimir/uea.hpp"
#include "casimir/verifier.hpp"

namespace casimir {

namespace {

using nlohmann::json;

// Thrown for bad arguments discovered after parsing.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

std::string title(AlgebraKind kind, int n) { return std::string(kind_name(kind)) + "(" + std::to_string(n) + ")"; }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string algebra_cmd(const RunConfig& c) {
  const AlgebraSpec alg = build_algebra(c.kind, c.n);
  if (c.format == Format::Json) {
    json brackets = json::array();
    for (std::size_t a = 0; a < alg.dim(); ++a) {
      for (std::size_t b = a + 1; b < alg.dim(); ++b) {
        const auto& terms = alg.bracket(a, b);
        if (terms.empty()) continue;
        json result = json::array();
        for (const StructureTerm& t : terms) result.push_back({{"c", alg.label(t.index).name()}, {"coeff", t.coeff.to_string()}});
        brackets.push_back({{"a", alg.label(a).name()}, {"b", alg.label(b).name()}, {"result", result}});
      }
    }
    json basis = json::array();
    for (const BasisLabel& l : alg.basis()) basis.push_back(l.name());
    return dump({{"kind", kind_name(c.kind)}, {"n", c.n}, {"dim", alg.dim()}, {"basis", basis}, {"brackets", brackets}});
  }
  std::ostringstream os;
  os << title(c.kind, c.n) << ", dim " << alg.dim() << "\n";
  os << "basis:";
  for (const BasisLabel& l : alg.basis()) os << " " << l.name();
  os << "\n";
  for (std::size_t a = 0; a < alg.dim(); ++a) {
    for (std::size_t b = a + 1; b < alg.dim(); ++b) {
      const auto& terms = alg.bracket(a, b);
      if (terms.empty()) continue;
      os << "[" << alg.label(a).name() << ", " << alg.label(b).name() << "] =";
      bool first = true;
      for (const StructureTerm& t : terms) {
        const bool neg = t.coeff.sign() < 0;
        const BigRational mag = neg ? -t.coeff : t.coeff;
        os << (first ? (neg ? " -" : "") : (neg ? " - " : " + "));
        if (first && !neg) os << " ";
        if (!(mag == BigRational(1))) os << mag.to_string() << "*";
        os << alg.label(t.index).name();
        first = false;
      }
      os << "\n";
    }
  }
  return os.str();
}

std::string lifted_cmd(const RunConfig& c) {
  if (c.kind == AlgebraKind::ST) throw UnsupportedKind("lifted invariants are available for t0 and t only");
  const LiftedInvariantMatrix m = lifted_invariant(c.kind, c.n);
  std::vector<std::pair<int, int>> positions;
  if (c.entry) {
    const auto [i, j] = *c.entry;
    if (i < 1 || j < 1 || i > c.n || j > c.n || !m.significant(i, j)) {
      throw InvalidArgument("entry (" + std::to_string(i) + ", " + std::to_string(j) + ") is not a coordinate position of " + title(c.kind, c.n));
    }
    positions.emplace_back(i, j);
  } else {
    for (int i = 1; i <= c.n; ++i) {
      for (int j = 1; j <= c.n; ++j) {
        if (m.significant(i, j)) positions.emplace_back(i, j);
      }
    }
  }
  const auto label = [](int i, int j) { return std::to_string(i) + (i > 9 || j > 9 ? "," : "") + std::to_string(j); };
  std::ostringstream os;
  if (c.format == Format::Json) {
    json entries = json::array();
    for (const auto& [i, j] : positions) {
      entries.push_back({{"i", i}, {"j", j}, {"text", m.at(i, j).to_string()}, {"value", to_json(m.at(i, j))}});
    }
    return dump({{"kind", kind_name(c.kind)}, {"n", c.n}, {"entries", entries}});
  }
  for (const auto& [i, j] : positions) {
    if (c.format == Format::Latex) {
      os << "\\mathcal{I}_{" << label(i, j) << "} = " << latex(m.at(i, j)) << "\n";
    } else if (c.entry) {
      os << m.at(i, j).to_string() << "\n";
    } else {
      os << "I_" << label(i, j) << " = " << m.at(i, j).to_string() << "\n";
    }
  }
  return os.str();
}

std::string normalize_cmd(const RunConfig& c) {
  if (c.kind == AlgebraKind::ST) throw UnsupportedKind("normalization is available for t0 and t only");
  const NormalizationPlan plan = build_plan(c.kind, c.n);
  const NormalizationResult r = run_normalization(c.kind, c.n);
  const std::vector<RationalExpr> basis = recombine(r);
  if (c.format == Format::Json) {
    json constraints = json::array();
    for (const Constraint& k : plan.constraints) {
      constraints.push_back({{"i", k.i}, {"j", k.j}, {"value", k.value ? json(*k.value) : json(nullptr)}});
    }
    json steps = json::array();
    if (c.show_steps) {
      for (const SolveStep& s : r.steps) {
        json sol = json::object();
        for (std::size_t u = 0; u < s.system.unknowns.size(); ++u) sol[s.system.unknowns[u].name()] = s.solution[u].to_string();
        json pos = json::array();
        for (const auto& [i, j] : s.system.positions) pos.push_back({i, j});
        steps.push_back({{"k", s.system.k}, {"part", part_name(s.system.part)}, {"positions", pos}, {"determinant", s.determinant.to_string()},
                         {"solution", sol}});
      }
    }
    json raw = json::array();
    for (std::size_t i = 0; i < r.raw_invariants.size(); ++i) raw.push_back({{"name", r.raw_names[i].name()}, {"value", r.raw_invariants[i].to_string()}});
    json out = json::array();
    for (const RationalExpr& e : basis) out.push_back(e.to_string());
    json assumptions = json::array();
    for (const MultiPoly& p : r.genericity_assumptions) assumptions.push_back(p.to_string());
    json free = json::array();
    for (VarId v : plan.free_parameters) free.push_back(v.name());
    json j = {{"kind", kind_name(c.kind)}, {"n", c.n}, {"constraints", constraints}, {"free_parameters", free}, {"raw_invariants", raw},
              {"basis", out}, {"genericity_assumptions", assumptions}};
    if (c.show_steps) j["steps"] = steps;
    return dump(j);
  }
  std::ostringstream os;
  os << "normalization of " << title(c.kind, c.n) << "\n";
  os << "constraints:\n";
  for (const Constraint& k : plan.constraints) {
    os << "  I_" << k.i << (k.i > 9 || k.j > 9 ? "," : "") << k.j << " = " << (k.value ? std::to_string(*k.value) : std::string("free")) << "\n";
  }
  os << "free group parameters:";
  if (plan.free_parameters.empty()) os << " none";
  for (VarId v : plan.free_parameters) os << " " << v.name();
  os << "\n";
  if (c.show_steps) {
    for (const SolveStep& s : r.steps) {
      os << "step k = " << s.system.k << ", " << part_name(s.system.part) << ":";
      for (const auto& [i, j] : s.system.positions) os << " (" << i << "," << j << ")";
      os << "\n  determinant: " << s.determinant.to_string() << "\n";
      for (std::size_t u = 0; u < s.system.unknowns.size(); ++u) {
        os << "  " << s.system.unknowns[u].name() << " = " << s.solution[u].to_string() << "\n";
      }
    }
  }
  os << "raw invariants:\n";
  for (std::size_t i = 0; i < r.raw_invariants.size(); ++i) os << "  " << r.raw_names[i].name() << " = " << r.raw_invariants[i].to_string() << "\n";
  os << "basis:\n";
  for (const RationalExpr& e : basis) os << "  " << e.to_string() << "\n";
  os << "genericity assumptions:\n";
  if (r.genericity_assumptions.empty()) os << "  none\n";
  for (const MultiPoly& p : r.genericity_assumptions) os << "  " << p.to_string() << " != 0\n";
  return os.str();
}

std::string basis_cmd(const RunConfig& c) {
  const InvariantBasis b = closed_form_basis(c.kind, c.n);
  std::ostringstream os;
  switch (c.format) {
    case Format::Text:
      for (const RationalExpr& e : b.elements) os << e.to_string() << "\n";
      break;
    case Format::Latex:
      for (const std::string& l : b.latex) os << l << "\n";
      break;
    case Format::Json: {
      json elements = json::array();
      for (std::size_t i = 0; i < b.elements.size(); ++i) {
        elements.push_back({{"text", b.elements[i].to_string()}, {"latex", b.latex[i]}, {"value", to_json(b.elements[i])}});
      }
      return dump({{"kind", kind_name(c.kind)}, {"n", c.n}, {"count", b.elements.size()}, {"elements", elements}});
    }
  }
  return os.str();
}

struct ElementVerdict {
  bool criterion = false;
  std::optional<std::size_t> failing_generator;
  std::optional<GroupCheckOutcome> group;
  std::string group_error;
  bool pass() const { return criterion && (!group || group->passed) && group_error.empty(); }
};

std::string verify_cmd(const RunConfig& c, bool& ok) {
  const AlgebraSpec alg = build_algebra(c.kind, c.n);
  const InvariantBasis b = closed_form_basis(c.kind, c.n);
  const BasisReport report = check_basis(alg, b, c.seed);
  std::vector<ElementVerdict> verdicts(b.elements.size());
  ok = report.pass;
  std::string failure = report.failure;
  for (std::size_t i = 0; i < b.elements.size(); ++i) {
    ElementVerdict& v = verdicts[i];
    v.criterion = report.elements[i].pass;
    v.failing_generator = report.elements[i].first_failure;
    if (!c.symbolic_only) {
      try {
        v.group = group_invariance_outcome(c.kind, c.n, b.elements[i], c.trials, c.seed);
      } catch (const DegeneratePoint& e) {
        v.group_error = e.what();
      }
    }
    if (!v.pass()) {
      ok = false;
      if (failure.empty()) failure = "element " + std::to_string(i + 1) + (v.criterion ? " fails the group check" : " fails the infinitesimal criterion");
    }
  }
  if (c.format == Format::Json) {
    json elements = json::array();
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
      const ElementVerdict& v = verdicts[i];
      json e = {{"index", i + 1}, {"text", b.elements[i].to_string()}, {"criterion", v.criterion}, {"pass", v.pass()}};
      e["failing_generator"] = v.failing_generator ? json(alg.label(*v.failing_generator).name()) : json(nullptr);
      if (v.group) {
        e["group"] = {{"passed", v.group->passed}, {"trials_run", v.group->trials_run},
                      {"first_failure", v.group->first_failure ? json(*v.group->first_failure) : json(nullptr)}};
      } else {
        e["group"] = v.group_error.empty() ? json(nullptr) : json({{"error", v.group_error}});
      }
      elements.push_back(e);
    }
    return dump({{"kind", kind_name(c.kind)},
                 {"n", c.n},
                 {"seed", std::to_string(c.seed)},
                 {"trials", c.symbolic_only ? 0 : c.trials},
                 {"dim", report.dim},
                 {"coadjoint_rank", report.coadjoint_rank},
                 {"invariant_count", b.elements.size()},
                 {"jacobian_rank", report.jacobian_rank},
                 {"elements", elements},
                 {"pass", ok},
                 {"failure", failure}});
  }
  std::ostringstream os;
  os << "verify " << title(c.kind, c.n) << "\n";
  os << "dim " << report.dim << ", coadjoint rank " << report.coadjoint_rank << "\n";
  os << b.elements.size() << " invariants, rank " << report.jacobian_rank << "\n";
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    const ElementVerdict& v = verdicts[i];
    os << "[" << i + 1 << "] " << b.elements[i].to_string() << "\n";
    os << "    criterion: " << (v.criterion ? "pass" : "FAIL");
    if (v.failing_generator) os << " (generator " << alg.label(*v.failing_generator).name() << ")";
    os << "\n";
    if (v.group) {
      os << "    group: " << (v.group->passed ? "pass" : "FAIL") << " (" << v.group->trials_run << " trials";
      if (v.group->first_failure) os << ", first failure at trial " << *v.group->first_failure;
      os << ")\n";
    } else if (!v.group_error.empty()) {
      os << "    group: FAIL (" << v.group_error << ")\n";
    }
  }
  os << (ok ? "PASS" : "FAIL: " + failure) << "\n";
  return os.str();
}

std::string casimir_check_cmd(const RunConfig& c, bool& ok) {
  const AlgebraSpec alg = build_algebra(AlgebraKind::T0, c.n);
  const std::vector<UeaElement> cs = symmetrize_t0(alg);
  std::vector<bool> central;
  for (const UeaElement& e : cs) central.push_back(casimir_check(e, alg));
  ok = std::all_of(central.begin(), central.end(), [](bool b) { return b; });
  if (c.format == Format::Json) {
    json rows = json::array();
    for (std::size_t k = 0; k < cs.size(); ++k) rows.push_back({{"k", k + 1}, {"element", to_string(cs[k], alg)}, {"central", static_cast<bool>(central[k])}});
    return dump({{"kind", "t0"}, {"n", c.n}, {"casimirs", rows}, {"pass", ok}});
  }
  std::ostringstream os;
  os << "Casimir operators of " << title(AlgebraKind::T0, c.n) << "\n";
  for (std::size_t k = 0; k < cs.size(); ++k) {
    os << "k=" << k + 1 << "  " << (central[k] ? "pass" : "FAIL") << "  " << to_string(cs[k], alg) << "\n";
  }
  return os.str();
}

std::string suite_cmd(const RunConfig& c, bool& ok, std::ostream& err) {
  const std::vector<CriterionResult> results = run_suite(c.seed, [&](const CriterionResult& r) {
    err << "criterion " << r.id << ": " << std::fixed << std::setprecision(2) << r.seconds << " s\n";
  });
  ok = std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.passed; });
  if (c.format == Format::Json) {
    json rows = json::array();
    for (const CriterionResult& r : results) rows.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
    return dump({{"seed", std::to_string(c.seed)}, {"criteria", rows}, {"pass", ok}});
  }
  std::ostringstream os;
  for (const CriterionResult& r : results) {
    os << "criterion " << r.id << " " << (r.passed ? "PASS" : "FAIL") << "  " << r.title << ": " << r.detail << "\n";
  }
  os << (ok ? "all criteria pass" : "some criteria fail") << "\n";
  return os.str();
}

}  // namespace

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  std::string artifact;
  bool ok = true;
  try {
    if (c.n < 2) throw InvalidSize("n must be >= 2");
    if (c.trials < 1) throw InvalidArgument("trials must be >= 1");
    switch (c.command) {
      case Command::Algebra: artifact = algebra_cmd(c); break;
      case Command::Lifted: artifact = lifted_cmd(c); break;
      case Command::Normalize: artifact = normalize_cmd(c); break;
      case Command::Basis: artifact = basis_cmd(c); break;
      case Command::Verify: artifact = verify_cmd(c, ok); break;
      case Command::CasimirCheck: artifact = casimir_check_cmd(c, ok); break;
      case Command::Suite: artifact = suite_cmd(c, ok, err); break;
    }
  } catch (const InvalidSize& e) {
    err << e.what() << "\n";
    return kExitInvalidArguments;
  } catch (const UnsupportedKind& e) {
    err << e.what() << "\n";
    return kExitInvalidArguments;
  } catch (const InvalidArgument& e) {
    err << e.what() << "\n";
    return kExitInvalidArguments;
  } catch (const Error& e) {
    err << "check failed: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  if (c.output_path) {
    std::ofstream f(*c.output_path, std::ios::binary);
    if (!f) {
      err << "cannot write " << *c.output_path << "\n";
      return kExitInvalidArguments;
    }
    f << artifact;
  } else {
    out << artifact;
  }
  if (!ok) err << "verification failed\n";
  return ok ? kExitOk : kExitVerificationFailed;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of triangular Lie algebras"};
  app.require_subcommand(1);

  RunConfig c;
  c.seed = default_seed();
  std::string kind = "t0";
  std::string format = "text";
  bool json_flag = false;
  std::vector<int> entry;

  const auto add_common = [&](CLI::App* sub, bool with_kind) {
    if (with_kind) sub->add_option("--kind", kind, "t0, t or st")->required()->check(CLI::IsMember({"t0", "t", "st"}));
    sub->add_option("--n", c.n, "matrix size")->required();
    sub->add_option("--format", format, "text, json or latex")->check(CLI::IsMember({"text", "json", "latex"}));
    sub->add_flag("--json", json_flag, "same as --format json");
    sub->add_option("--output", c.output_path, "write to this file instead of stdout");
  };

  CLI::App* algebra = app.add_subcommand("algebra", "basis and structure constants");
  add_common(algebra, true);
  CLI::App* lifted = app.add_subcommand("lifted", "lifted invariant matrix B X B^-1");
  add_common(lifted, true);
  lifted->add_option("--entry", entry, "single entry i j")->expected(2);
  CLI::App* normalize = app.add_subcommand("normalize", "run the normalization algorithm");
  add_common(normalize, true);
  normalize->add_flag("--show-steps", c.show_steps, "print every subsystem solve");
  CLI::App* basis = app.add_subcommand("basis", "closed-form invariant basis");
  add_common(basis, true);
  CLI::App* verify = app.add_subcommand("verify", "verify the closed-form basis");
  add_common(verify, true);
  verify->add_option("--trials", c.trials, "group-orbit trials per element");
  verify->add_option("--seed", c.seed, "random seed");
  verify->add_flag("--symbolic-only", c.symbolic_only, "skip the group-orbit trials");
  CLI::App* casimir = app.add_subcommand("casimir-check", "centrality of the t0(n) Casimir operators");
  add_common(casimir, false);
  CLI::App* suite = app.add_subcommand("suite", "run the acceptance criteria");
  suite->add_option("--seed", c.seed, "random seed");
  suite->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  suite->add_flag("--json", json_flag, "same as --format json");
  suite->add_option("--output", c.output_path, "write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidArguments;
  }

  if (algebra->parsed()) c.command = Command::Algebra;
  if (lifted->parsed()) c.command = Command::Lifted;
  if (normalize->parsed()) c.command = Command::Normalize;
  if (basis->parsed()) c.command = Command::Basis;
  if (verify->parsed()) c.command = Command::Verify;
  if (casimir->parsed()) c.command = Command::CasimirCheck;
  if (suite->parsed()) c.command = Command::Suite;
  if (suite->parsed()) c.n = 2;
  c.kind = *parse_kind(kind);
  c.format = json_flag ? Format::Json : format == "json" ? Format::Json : format == "latex" ? Format::Latex : Format::Text;
  if (entry.size() == 2) c.entry = std::make_pair(entry[0], entry[1]);
  return run(c, out, err);
}

}  // namespace casimir
