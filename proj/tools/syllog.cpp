// Command-line front end: solve single figure problems, run generalized
// deductions, enumerate the full figure tables, explain a derivation, and
// self-test against the shipped result tables.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "syllog/catalog.hpp"
#include "syllog/deduce.hpp"
#include "syllog/lp.hpp"
#include "syllog/model.hpp"
#include "syllog/statements.hpp"

namespace {

using json = nlohmann::json;
using namespace syllog;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitSelftestMismatch = 3;

struct RunConfig {
  Epsilon epsilon = Epsilon::standard();
  std::string format = "text";
  unsigned jobs = 0;  // 0 = auto

  unsigned effective_jobs() const {
    if (jobs > 0) return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
  }
};

Relation parse_relation_code(const std::string& text) {
  for (Relation r : kRelationOrder) {
    if (text == relation_code(r) || text == relation_code_ascii(r)) return r;
  }
  throw CLI::ValidationError("relation code",
                             "expected one of a, á (a+), e, é (e+), i, o, u");
}

std::string approx(const Rational& r) {
  std::ostringstream os;
  os << to_fraction(r) << " (\xE2\x89\x88 " << to_double(r) << ")";
  return os.str();
}

std::string render_constraint(const Constraint& c, const Epsilon& eps) {
  if (c.kind == Constraint::Kind::EqZero) {
    return to_string(c.form) + " = 0";
  }
  return to_string(c.form) + " >= " + to_fraction(eps.value);
}

std::string objective_name(const Model& model, const Literal& pred,
                           const Literal& subj, std::size_t j) {
  Literal p = (j == 0 || j == 2) ? pred : pred.negated();
  Literal s = (j <= 1) ? subj : subj.negated();
  return "P(" + model.literal_name(s) + "," + model.literal_name(p) + ")";
}

json result_to_json(const DeductionResult& r) {
  json cell;
  cell["feasible"] = r.feasible;
  json cls = json::array(), cmp = json::array();
  for (Relation code : r.classical.members()) cls.push_back(relation_code(code));
  for (Relation code : r.complementary.members()) {
    cmp.push_back(relation_code(code));
  }
  cell["classical"] = cls;
  cell["complementary"] = cmp;
  json alpha = json::array(), beta = json::array();
  if (r.feasible) {
    for (std::size_t j = 0; j < 4; ++j) {
      alpha.push_back(to_fraction(r.bounds.alpha[j]));
      beta.push_back(to_fraction(r.bounds.beta[j]));
    }
  }
  cell["alpha"] = alpha;
  cell["beta"] = beta;
  return cell;
}

void print_bounds(const BoundsProfile& b, const Model& model,
                  const Literal& pred, const Literal& subj) {
  static const char* kAlpha[] = {"\xCE\xB1""1", "\xCE\xB1""2", "\xCE\xB1""3",
                                 "\xCE\xB1""4"};
  static const char* kBeta[] = {"\xCE\xB2""1", "\xCE\xB2""2", "\xCE\xB2""3",
                                "\xCE\xB2""4"};
  for (std::size_t j = 0; j < 4; ++j) {
    std::cout << "  " << objective_name(model, pred, subj, j) << ": " << kAlpha[j]
              << " = " << approx(b.alpha[j]) << ", " << kBeta[j] << " = "
              << approx(b.beta[j]) << "\n";
  }
}

void print_deductions(const Problem& problem, const DeductionResult& r) {
  const Model& model = standard_model();
  auto [major, minor] = premises_of(problem);
  std::cout << "Premises: " << format_statement(model, major) << ", "
            << format_statement(model, minor) << " (figure "
            << problem.figure_id << ")\n";
  auto print_set = [&](const char* title, const RelationSet& set,
                       bool complementary) {
    std::cout << title << ": ";
    if (set.empty()) {
      std::cout << "(none)\n";
      return;
    }
    std::cout << "{" << set.joined(", ") << "}\n";
    for (Relation code : set.members()) {
      MoodLabel mood{problem.major, problem.minor, code, problem.figure_id,
                     complementary};
      std::cout << "  " << mood.text();
      if (auto name = medieval_name(mood)) std::cout << " (" << *name << ")";
      std::cout << "  A" << relation_code(code)
                << (complementary ? "~C" : "C") << "\n";
    }
  };
  print_set("Classical", r.classical, false);
  print_set("Complementary", r.complementary, true);
  if (r.feasible) {
    std::cout << "Bounds:\n";
    print_bounds(r.bounds, model, model.literal("A"), model.literal("C"));
  } else {
    std::cout << "INFEASIBLE premises\n";
  }
}

int cmd_solve(int figure_id, Relation major, Relation minor,
              const RunConfig& config) {
  Problem problem{figure_id, major, minor};
  const Model& model = standard_model();
  auto [maj, min] = premises_of(problem);
  DeductionResult r = deduce_general(model, {maj, min}, model.literal("A"),
                                     model.literal("C"), config.epsilon);
  if (config.format == "json") {
    json out = result_to_json(r);
    out["figure"] = figure_id;
    out["major"] = relation_code(major);
    out["minor"] = relation_code(minor);
    std::cout << out.dump(2) << "\n";
  } else {
    print_deductions(problem, r);
  }
  return kExitOk;
}

int cmd_deduce(const std::vector<std::string>& premise_texts,
               const std::string& query_text, const std::string& terms_csv,
               const RunConfig& config) {
  std::vector<std::string> names;
  if (!terms_csv.empty()) {
    std::stringstream ss(terms_csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) names.push_back(item);
    }
  } else {
    // Infer the term set from the statement texts, in order of appearance.
    auto scan = [&](const std::string& text) {
      for (std::size_t i = 0; i < text.size();) {
        if (text[i] >= 'A' && text[i] <= 'Z') {
          std::size_t start = i;
          while (i < text.size() &&
                 ((text[i] >= 'A' && text[i] <= 'Z') ||
                  (text[i] >= '0' && text[i] <= '9') || text[i] == '_')) {
            ++i;
          }
          std::string name = text.substr(start, i - start);
          if (std::find(names.begin(), names.end(), name) == names.end()) {
            names.push_back(name);
          }
        } else {
          ++i;
        }
      }
    };
    for (const std::string& t : premise_texts) scan(t);
    scan(query_text);
  }

  try {
    Model model(names);
    std::vector<CategoricalStatement> premises;
    for (const std::string& text : premise_texts) {
      premises.push_back(parse_statement(model, text));
    }
    auto [pred, subj] = parse_query(model, query_text);
    DeductionResult r =
        deduce_general(model, premises, pred, subj, config.epsilon);
    if (config.format == "json") {
      json out = result_to_json(r);
      out["query_predicate"] = model.literal_name(pred);
      out["query_subject"] = model.literal_name(subj);
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "Premises: ";
      if (premises.empty()) {
        std::cout << "(none)";
      } else {
        for (std::size_t i = 0; i < premises.size(); ++i) {
          std::cout << (i ? ", " : "") << format_statement(model, premises[i]);
        }
      }
      std::cout << "\nQuery: " << model.literal_name(pred) << "?"
                << model.literal_name(subj) << "\n";
      if (!r.feasible) {
        std::cout << "INFEASIBLE premises\n";
      } else {
        std::cout << "Classical (" << model.literal_name(subj) << "): "
                  << (r.classical.empty() ? "(none)"
                                          : "{" + r.classical.joined(", ") + "}")
                  << "\n";
        std::cout << "Complementary (" << model.literal_name(subj.negated())
                  << "): "
                  << (r.complementary.empty()
                          ? "(none)"
                          : "{" + r.complementary.joined(", ") + "}")
                  << "\n";
        std::cout << "Bounds:\n";
        print_bounds(r.bounds, model, pred, subj);
      }
    }
    return r.feasible ? kExitOk : kExitInfeasible;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

void render_grid(const std::vector<ProblemResult>& results, int fig,
                 bool complementary) {
  auto cell_of = [&](Relation major, Relation minor) -> const RelationSet& {
    std::size_t base = static_cast<std::size_t>(fig - 1) * 49;
    std::size_t idx = base + static_cast<std::size_t>(major) * 7 +
                      static_cast<std::size_t>(minor);
    return complementary ? results[idx].result.complementary
                         : results[idx].result.classical;
  };
  std::vector<std::vector<std::string>> cells(8, std::vector<std::string>(8));
  cells[0][0] = "";
  for (std::size_t c = 0; c < 7; ++c) {
    cells[0][c + 1] = relation_code(kRelationOrder[c]);
  }
  for (std::size_t rIdx = 0; rIdx < 7; ++rIdx) {
    cells[rIdx + 1][0] = relation_code(kRelationOrder[rIdx]);
    for (std::size_t c = 0; c < 7; ++c) {
      cells[rIdx + 1][c + 1] =
          cell_of(kRelationOrder[rIdx], kRelationOrder[c]).joined(", ");
    }
  }
  // Column widths in display characters (accents are 2 bytes, 1 column).
  auto width = [](const std::string& s) {
    std::size_t w = 0;
    for (unsigned char ch : s) {
      if ((ch & 0xC0) != 0x80) ++w;
    }
    return w;
  };
  std::vector<std::size_t> widths(8, 1);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < 8; ++c) {
      widths[c] = std::max(widths[c], width(row[c]));
    }
  }
  std::cout << "Figure " << fig
            << (complementary ? " (complementary, A?~C)" : " (classical, A?C)")
            << "\n";
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < 8; ++c) {
      std::cout << (c ? " | " : "  ") << row[c]
                << std::string(widths[c] - width(row[c]), ' ');
    }
    std::cout << "\n";
  }
  std::cout << "\n";
}

json enumeration_to_json(const std::vector<ProblemResult>& results) {
  json out = json::array();
  for (const ProblemResult& pr : results) {
    json cell = result_to_json(pr.result);
    cell["figure"] = pr.problem.figure_id;
    cell["major"] = relation_code(pr.problem.major);
    cell["minor"] = relation_code(pr.problem.minor);
    out.push_back(cell);
  }
  return out;
}

int cmd_enumerate(const RunConfig& config) {
  std::vector<ProblemResult> results =
      enumerate_all(config.epsilon, config.effective_jobs());
  if (config.format == "json") {
    std::cout << enumeration_to_json(results).dump(2) << "\n";
  } else if (config.format == "csv") {
    std::cout << "figure,kind,major,minor,deductions\n";
    for (const ProblemResult& pr : results) {
      for (bool complementary : {false, true}) {
        const RelationSet& set = complementary ? pr.result.complementary
                                               : pr.result.classical;
        std::cout << pr.problem.figure_id << ","
                  << (complementary ? "complementary" : "classical") << ","
                  << relation_code(pr.problem.major) << ","
                  << relation_code(pr.problem.minor) << ",\""
                  << set.joined(";") << "\"\n";
      }
    }
  } else {
    for (int fig = 1; fig <= 4; ++fig) {
      render_grid(results, fig, false);
      render_grid(results, fig, true);
    }
  }
  return kExitOk;
}

int cmd_explain(int figure_id, Relation major, Relation minor,
                const RunConfig& config) {
  const Model& model = standard_model();
  Problem problem{figure_id, major, minor};
  auto [maj, min] = premises_of(problem);
  std::cout << "Premises: " << format_statement(model, maj) << ", "
            << format_statement(model, min) << " (figure " << figure_id
            << ")\n\nConstraints:\n";
  std::vector<Constraint> constraints;
  for (const CategoricalStatement& stmt : {maj, min}) {
    std::cout << "  " << format_statement(model, stmt) << ":\n";
    for (const Constraint& c : translate(model, stmt)) {
      std::cout << "    " << render_constraint(c, config.epsilon) << "\n";
      constraints.push_back(c);
    }
  }
  std::cout << "  plus x1 + ... + x8 = 1 and 0 <= xi <= 1\n";

  Literal a = model.literal("A");
  Literal c = model.literal("C");
  DeductionResult r = deduce_general(model, {maj, min}, a, c, config.epsilon);
  if (!r.feasible) {
    std::cout << "\nINFEASIBLE premises\n";
    return kExitInfeasible;
  }
  std::cout << "\nOptimization problems:\n";
  for (const LpRecord& rec : r.solves) {
    std::cout << "  " << (rec.sense == Sense::Min ? "min" : "max") << " "
              << objective_name(model, a, c, rec.objective_index) << " = "
              << to_string(rec.objective) << "  ->  "
              << approx(rec.value) << "\n";
  }
  std::cout << "\nCriteria fired:\n";
  auto explain_set = [&](const RelationSet& set, bool complementary) {
    std::size_t lo = complementary ? 2 : 0;
    const char* subj = complementary ? "~C" : "C";
    std::string a_lo = complementary ? "\xCE\xB1""3" : "\xCE\xB1""1";
    std::string a_hi = complementary ? "\xCE\xB1""4" : "\xCE\xB1""2";
    std::string b_lo = complementary ? "\xCE\xB2""3" : "\xCE\xB2""1";
    std::string b_hi = complementary ? "\xCE\xB2""4" : "\xCE\xB2""2";
    for (Relation code : set.members()) {
      std::cout << "  ";
      switch (code) {
        case Relation::UniversalAffirmative:
          std::cout << b_hi << " = 0";
          break;
        case Relation::UniversalAffirmativeExist:
          std::cout << a_lo << " > 0 and " << b_hi << " = 0";
          break;
        case Relation::UniversalNegative:
          std::cout << b_lo << " = 0";
          break;
        case Relation::UniversalNegativeExist:
          std::cout << b_lo << " = 0 and " << a_hi << " > 0";
          break;
        case Relation::ParticularAffirmative:
          std::cout << a_lo << " > 0";
          break;
        case Relation::ParticularNegative:
          std::cout << a_hi << " > 0";
          break;
        case Relation::ParticularIntermediate:
          std::cout << a_lo << " > 0 and " << a_hi << " > 0";
          break;
      }
      std::cout << "  =>  A" << relation_code(code) << subj << "\n";
    }
    (void)lo;
  };
  explain_set(r.classical, false);
  explain_set(r.complementary, true);
  if (r.classical.empty() && r.complementary.empty()) {
    std::cout << "  (none: every bound is trivial)\n";
  }
  std::cout << "\nBounds:\n";
  print_bounds(r.bounds, model, a, c);
  return kExitOk;
}

int cmd_selftest(const RunConfig& config, const Epsilon& epsilon2) {
  unsigned jobs = config.effective_jobs();
  std::vector<ProblemResult> computed = enumerate_all(config.epsilon, jobs);
  int mismatches = 0;
  for (const ProblemResult& pr : computed) {
    GoldenCell expected =
        golden_cell(pr.problem.figure_id, pr.problem.major, pr.problem.minor);
    auto report = [&](const char* kind, const RelationSet& got,
                      const RelationSet& want) {
      if (got == want) return;
      ++mismatches;
      std::cout << "MISMATCH figure " << pr.problem.figure_id << " ("
                << relation_code(pr.problem.major) << ", "
                << relation_code(pr.problem.minor) << ") " << kind
                << ": computed {" << got.joined(", ") << "} expected {"
                << want.joined(", ") << "}\n";
    };
    report("classical", pr.result.classical, expected.classical);
    report("complementary", pr.result.complementary, expected.complementary);
  }
  std::vector<ProblemResult> recomputed = enumerate_all(epsilon2, jobs);
  int changed = 0;
  for (std::size_t i = 0; i < computed.size(); ++i) {
    if (computed[i].result.classical != recomputed[i].result.classical ||
        computed[i].result.complementary !=
            recomputed[i].result.complementary) {
      ++changed;
      std::cout << "EPSILON-SENSITIVE figure "
                << computed[i].problem.figure_id << " ("
                << relation_code(computed[i].problem.major) << ", "
                << relation_code(computed[i].problem.minor) << ")\n";
    }
  }
  int matched = 196 - mismatches;
  std::cout << matched << "/196 problems match; \xCE\xB5-stability: " << changed
            << " cells changed (\xCE\xB5 = " << to_fraction(config.epsilon.value)
            << " vs " << to_fraction(epsilon2.value) << ")\n";
  return mismatches == 0 ? kExitOk : kExitSelftestMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Aristotelian deduction by exact probability bounds"};
  app.require_subcommand(1);
  app.fallthrough();  // accept the global flags after the subcommand too

  std::string epsilon_text = "1/100";
  std::string format = "text";
  unsigned jobs = 0;
  app.add_option("--epsilon", epsilon_text, "strictness threshold, rational p/q")
      ->capture_default_str();
  app.add_option("--format", format, "output format: text, csv, json")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--jobs", jobs, "worker threads (0 = auto)");

  int figure_id = 1;
  std::string major_text, minor_text;
  auto add_problem_args = [&](CLI::App* cmd) {
    cmd->add_option("figure", figure_id, "figure number 1..4")
        ->required()
        ->check(CLI::Range(1, 4));
    cmd->add_option("major", major_text, "major premise relation code")
        ->required();
    cmd->add_option("minor", minor_text, "minor premise relation code")
        ->required();
  };

  CLI::App* solve_cmd =
      app.add_subcommand("solve", "solve one figure problem");
  add_problem_args(solve_cmd);

  CLI::App* explain_cmd = app.add_subcommand(
      "explain", "show constraints, optimization problems, and criteria");
  add_problem_args(explain_cmd);

  CLI::App* deduce_cmd =
      app.add_subcommand("deduce", "generalized deduction from premises");
  std::vector<std::string> premise_texts;
  std::string query_text;
  std::string terms_csv;
  deduce_cmd->add_option("-p,--premise", premise_texts,
                         "premise statement, e.g. BeA");
  deduce_cmd->add_option("-q,--query", query_text, "query, e.g. A?C")
      ->required();
  deduce_cmd->add_option("--terms", terms_csv,
                         "comma-separated term names (default: inferred)");

  CLI::App* enumerate_cmd =
      app.add_subcommand("enumerate", "run all 196 figure problems");

  CLI::App* selftest_cmd = app.add_subcommand(
      "selftest", "check the enumeration against the shipped result tables");
  std::string epsilon2_text = "1/1000";
  selftest_cmd
      ->add_option("--epsilon2", epsilon2_text,
                   "second epsilon for the stability check")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    RunConfig config{Epsilon(parse_rational(epsilon_text)), format, jobs};
    if (solve_cmd->parsed() || explain_cmd->parsed()) {
      Relation major = parse_relation_code(major_text);
      Relation minor = parse_relation_code(minor_text);
      return solve_cmd->parsed()
                 ? cmd_solve(figure_id, major, minor, config)
                 : cmd_explain(figure_id, major, minor, config);
    }
    if (deduce_cmd->parsed()) {
      return cmd_deduce(premise_texts, query_text, terms_csv, config);
    }
    if (enumerate_cmd->parsed()) return cmd_enumerate(config);
    if (selftest_cmd->parsed()) {
      return cmd_selftest(config, Epsilon(parse_rational(epsilon2_text)));
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
