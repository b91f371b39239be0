#include "bicrit/cli.hpp"

#include <algorithm>
#include <chrono>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "bicrit/errors.hpp"
#include "bicrit/exact_search.hpp"
#include "bicrit/io.hpp"
#include "bicrit/marathe.hpp"
#include "bicrit/oracle.hpp"
#include "bicrit/pareto.hpp"
#include "bicrit/sweep.hpp"

namespace bicrit::cli {

using nlohmann::ordered_json;

namespace {

struct UsageError : Error {
  using Error::Error;
};

struct Options {
  std::string input;
  std::string problem;
  std::string algorithm = "sweep";
  std::string budget;
  std::string epsilon = "1";
  std::string format = "json";
  std::string repro_case;
  bool verify = false;
  bool parallel = false;
};

Rational parse_flag(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

Epsilon parse_epsilon(const std::string& text) {
  try {
    return Epsilon(parse_flag("--epsilon", text));
  } catch (const InvalidArgument& e) {
    throw UsageError(std::string("--epsilon: ") + e.what());
  }
}

ordered_json record_json(const SolutionRecord& rec) {
  ordered_json j;
  j["token"] = rec.token;
  j["f1"] = rec.image.f1.to_string();
  j["f2"] = rec.image.f2.to_string();
  if (rec.produced_at) j["gamma"] = rec.produced_at->gamma().to_string();
  return j;
}

ordered_json records_json(const std::vector<SolutionRecord>& records) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : records) arr.push_back(record_json(r));
  return arr;
}

ordered_json certificate_json(const GuaranteeCertificate& c) {
  return ordered_json{{"alpha", c.alpha.to_string()},
                      {"budget_factor", c.budget_factor.to_string()},
                      {"cost_factor", c.cost_factor.to_string()},
                      {"budget", c.budget.to_string()},
                      {"oracle_calls", c.oracle_calls}};
}

void write_csv(std::ostream& out, const std::vector<SolutionRecord>& records) {
  out << "f1,f2\n";
  for (const auto& r : records) out << r.image.f1 << ',' << r.image.f2 << '\n';
}

class Session {
 public:
  Session(const std::vector<std::string>& args, const Options& opt, std::ostream& out)
      : opt_(opt), out_(out), start_(std::chrono::steady_clock::now()) {
    report_["command"] = args.empty() ? std::string() : args.front();
    report_["args"] = args;
  }

  Instance load() {
    if (opt_.input.empty()) throw UsageError("--input is required");
    Instance inst = load_instance(opt_.input);
    if (!opt_.problem.empty()) {
      ProblemKind wanted;
      try {
        wanted = parse_problem_kind(opt_.problem);
      } catch (const InvalidArgument& e) {
        throw UsageError(std::string("--problem: ") + e.what());
      }
      if (wanted != inst.kind) {
        throw ValidationError("kind: instance is '" + to_string(inst.kind) +
                              "' but --problem is '" + opt_.problem + "'");
      }
    }
    report_["instance_digest"] = instance_digest(inst);
    report_["problem"] = to_string(inst.kind);
    return inst;
  }

  int solve_budget() {
    if (opt_.budget.empty()) throw UsageError("--budget is required");
    const Rational budget = parse_flag("--budget", opt_.budget);
    if (!budget.is_positive()) throw UsageError("--budget: must be positive");
    const Epsilon eps = opt_.algorithm == "fixed" ? Epsilon(Rational{1}) : parse_epsilon(opt_.epsilon);
    const Instance inst = load();
    const auto problem = make_problem(inst);

    report_["algorithm"] = opt_.algorithm;
    report_["budget"] = budget.to_string();
    report_["epsilon"] = eps.value().to_string();

    const BudgetQuery query(budget, eps);
    BudgetResult result;
    if (opt_.algorithm == "sweep" || opt_.algorithm == "fixed") {
      result = solve_budget_sweep(*problem, query, opt_.parallel);
    } else if (opt_.algorithm == "binary") {
      result = solve_budget_binary(*problem, query);
    } else {
      result = solve_budget_parametric(*problem, query);
    }

    report_["status"] = result.certified() ? "certified" : "no_certificate";
    report_["certificate"] = certificate_json(result.certificate);
    report_["grid"] = {{"i_min", result.grid.i_min}, {"i_max", result.grid.i_max}};
    if (result.final_interval) {
      report_["final_interval"] = {{"lo", result.final_interval->lo.to_string()},
                                   {"hi", result.final_interval->hi.to_string()}};
      report_["comparisons"] = result.comparisons;
    }
    report_["solution"] = result.solution ? record_json(*result.solution) : ordered_json();
    if (!result.certified()) report_["transcript"] = records_json(result.transcript);
    report_["oracle_calls"] = result.certificate.oracle_calls;

    bool verified = true;
    if (opt_.verify) {
      const auto opt_value = oracle::exact_opt_budget(*problem, budget);
      const auto rule =
          opt_.algorithm == "parametric" ? oracle::FactorRule::parametric : oracle::FactorRule::sweep;
      if (opt_value) {
        verified = result.solution && oracle::verify_budget(*result.solution, budget, eps,
                                                            problem->alpha(), *opt_value, rule);
      } else {
        verified = !result.solution ||
                   result.solution->image.f1 <= result.certificate.budget_factor * budget;
      }
      report_["verification"] = {{"opt", opt_value ? ordered_json(opt_value->to_string()) : ordered_json()},
                                 {"passed", verified}};
    }

    if (opt_.format == "csv") {
      std::vector<SolutionRecord> rows;
      if (result.solution) rows.push_back(*result.solution);
      write_csv(out_, rows);
    } else {
      emit();
    }
    if (!verified) return failure;
    return result.certified() ? ok : no_certificate;
  }

  int pareto(bool parametric) {
    const Epsilon eps = parse_epsilon(opt_.epsilon);
    const Instance inst = load();
    const auto problem = make_problem(inst);

    ParetoSet set;
    if (parametric) {
      report_["algorithm"] = "parametric";
      set = pareto_from_parametric(*problem, eps);
    } else if (inst.relaxed()) {
      report_["algorithm"] = "extended";
      set = extended_pareto(*problem, eps, opt_.parallel);
    } else {
      report_["algorithm"] = "sweep";
      set = approximate_pareto(*problem, eps, opt_.parallel);
    }
    report_["epsilon"] = eps.value().to_string();
    report_["factor1"] = set.factor1.to_string();
    report_["factor2"] = set.factor2.to_string();
    report_["records"] = records_json(set.records);
    report_["oracle_calls"] = set.oracle_calls;

    bool verified = true;
    if (opt_.verify) {
      const auto all = oracle::enumerate_all(*problem);
      verified = oracle::verify_pareto_coverage(set, all, set.factor1, set.factor2);
      report_["verification"] = {{"solutions", all.size()}, {"passed", verified}};
    }

    if (opt_.format == "csv") {
      write_csv(out_, set.records);
    } else {
      emit();
    }
    return verified ? ok : failure;
  }

  int repro() {
    report_["case"] = opt_.repro_case;
    bool reproduced = false;
    if (opt_.repro_case == "marathe-ex1") {
      const auto r = marathe::reproduce_example1();
      report_["adversarial"] = trace_entries(r.adversarial);
      report_["exact"] = trace_entries(r.exact);
      report_["ratios"] = {{"adversarial_h3_over_3", r.ratio3_adversarial.to_string()},
                           {"adversarial_h4_over_4", r.ratio4_adversarial.to_string()},
                           {"exact_h3_over_3", r.ratio3_exact.to_string()},
                           {"exact_h4_over_4", r.ratio4_exact.to_string()}};
      report_["search"] = trace_json(r.search);
      reproduced = r.reproduced();
    } else {
      const auto r = marathe::reproduce_example2();
      report_["search"] = trace_json(r.trace);
      report_["outcome"] = r.trace.no_solution() ? "NoSolution" : "Solution";
      report_["opt_at_budget"] = r.opt_at_budget ? ordered_json(r.opt_at_budget->to_string())
                                                 : ordered_json();
      report_["feasible"] = records_json(r.feasible);
      reproduced = r.reproduced();
    }
    report_["reproduced"] = reproduced;
    emit();
    return reproduced ? ok : failure;
  }

 private:
  static ordered_json trace_entries(const std::vector<marathe::TraceEntry>& entries) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : entries) {
      ordered_json j{{"D", e.d.to_string()}, {"h", e.h.to_string()}};
      if (e.d.is_positive()) j["h_over_D"] = (e.h / e.d).to_string();
      j["solution"] = record_json(e.record);
      arr.push_back(std::move(j));
    }
    return arr;
  }

  static ordered_json trace_json(const marathe::MaratheTrace& t) {
    return ordered_json{{"budget", t.params.budget.to_string()},
                        {"eps", t.params.eps.to_string()},
                        {"ub2", t.params.ub2.to_string()},
                        {"alpha", t.alpha.to_string()},
                        {"tested", trace_entries(t.tested)},
                        {"outcome", t.no_solution() ? "NoSolution" : "Solution"},
                        {"solution", t.solution ? record_json(*t.solution) : ordered_json()}};
  }

  void emit() {
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    report_["wall_time_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
    out_ << report_.dump(2) << '\n';
  }

  const Options& opt_;
  std::ostream& out_;
  std::chrono::steady_clock::time_point start_;
  ordered_json report_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bicriteria approximation via weighted-sum oracles", "bicrit"};
  app.require_subcommand(1);
  Options opt;

  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("--input", opt.input, "instance JSON file")->required();
    sub->add_option("--problem", opt.problem, "expected problem kind")
        ->check(CLI::IsMember({"mst", "path", "cut", "vc"}));
    sub->add_option("--format", opt.format, "report format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_flag("--verify", opt.verify, "check the result against brute-force enumeration");
    sub->add_flag("--parallel", opt.parallel, "evaluate grid oracle calls concurrently");
  };

  auto* solve = app.add_subcommand("solve-budget", "minimize f2 subject to f1 <= budget");
  add_instance(solve);
  solve->add_option("--algorithm", opt.algorithm, "sweep, binary, parametric or fixed")
      ->check(CLI::IsMember({"sweep", "binary", "parametric", "fixed"}));
  solve->add_option("--budget", opt.budget, "budget p/q")->required();
  solve->add_option("--epsilon", opt.epsilon, "accuracy p/q in (0, 1]");

  auto* pareto = app.add_subcommand("pareto", "approximate Pareto curve by a weighted-sum grid");
  add_instance(pareto);
  pareto->add_option("--epsilon", opt.epsilon, "accuracy p/q in (0, 1]");

  auto* pareto_param =
      app.add_subcommand("pareto-parametric", "Pareto curve from all-gamma parametric solutions");
  add_instance(pareto_param);
  pareto_param->add_option("--epsilon", opt.epsilon, "accuracy p/q in (0, 1]");

  auto* repro = app.add_subcommand("repro", "reproduce the two parametric-search counterexamples");
  repro->add_option("--case", opt.repro_case, "marathe-ex1 or marathe-ex2")
      ->required()
      ->check(CLI::IsMember({"marathe-ex1", "marathe-ex2"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return usage;
  }

  try {
    Session session(args, opt, out);
    if (solve->parsed()) return session.solve_budget();
    if (pareto->parsed()) return session.pareto(false);
    if (pareto_param->parsed()) return session.pareto(true);
    return session.repro();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return usage;
  } catch (const ExactOracleRequired& e) {
    err << "usage error: " << e.what() << '\n';
    return usage;
  } catch (const NotParametricCapable& e) {
    err << "usage error: " << e.what() << '\n';
    return usage;
  } catch (const CapExceeded& e) {
    err << "usage error: --verify refuses this instance: " << e.what() << '\n';
    return usage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return bad_input;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return bad_input;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return failure;
  }
}

}  // namespace bicrit::cli
