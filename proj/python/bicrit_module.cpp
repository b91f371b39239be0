#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bicrit/errors.hpp"
#include "bicrit/exact_search.hpp"
#include "bicrit/io.hpp"
#include "bicrit/marathe.hpp"
#include "bicrit/oracle.hpp"
#include "bicrit/pareto.hpp"
#include "bicrit/sweep.hpp"

namespace py = pybind11;
using namespace bicrit;

namespace {

Rational to_rational(const py::handle& value) {
  try {
    return Rational::parse(py::str(value).cast<std::string>());
  } catch (const std::invalid_argument& e) {
    throw py::value_error(e.what());
  }
}

py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(r.to_string());
}

py::dict record_dict(const SolutionRecord& rec) {
  py::dict d;
  d["token"] = rec.token;
  d["f1"] = to_fraction(rec.image.f1);
  d["f2"] = to_fraction(rec.image.f2);
  d["gamma"] = rec.produced_at ? to_fraction(rec.produced_at->gamma()) : py::none();
  return d;
}

py::list record_list(const std::vector<SolutionRecord>& records) {
  py::list out;
  for (const auto& r : records) out.append(record_dict(r));
  return out;
}

py::dict pareto_dict(const ParetoSet& set) {
  py::dict d;
  d["records"] = record_list(set.records);
  d["factor1"] = to_fraction(set.factor1);
  d["factor2"] = to_fraction(set.factor2);
  d["oracle_calls"] = set.oracle_calls;
  return d;
}

py::list trace_list(const std::vector<marathe::TraceEntry>& entries) {
  py::list out;
  for (const auto& e : entries) {
    py::dict d;
    d["D"] = to_fraction(e.d);
    d["h"] = to_fraction(e.h);
    d["solution"] = record_dict(e.record);
    out.append(d);
  }
  return out;
}

py::dict solve_budget(const Instance& inst, const py::object& budget, const py::object& epsilon,
                      const std::string& algorithm, bool parallel) {
  const auto problem = make_problem(inst);
  const Epsilon eps = algorithm == "fixed" ? Epsilon(Rational{1}) : Epsilon(to_rational(epsilon));
  const BudgetQuery query(to_rational(budget), eps);
  BudgetResult r;
  if (algorithm == "sweep" || algorithm == "fixed") {
    r = solve_budget_sweep(*problem, query, parallel);
  } else if (algorithm == "binary") {
    r = solve_budget_binary(*problem, query);
  } else if (algorithm == "parametric") {
    r = solve_budget_parametric(*problem, query);
  } else {
    throw py::value_error("algorithm must be sweep, binary, parametric or fixed");
  }
  py::dict d;
  d["certified"] = r.certified();
  d["solution"] = r.solution ? py::object(record_dict(*r.solution)) : py::none();
  d["alpha"] = to_fraction(r.certificate.alpha);
  d["budget_factor"] = to_fraction(r.certificate.budget_factor);
  d["cost_factor"] = to_fraction(r.certificate.cost_factor);
  d["oracle_calls"] = r.certificate.oracle_calls;
  d["grid"] = py::make_tuple(r.grid.i_min, r.grid.i_max);
  d["transcript"] = record_list(r.transcript);
  return d;
}

}  // namespace

PYBIND11_MODULE(_bicrit, m) {
  m.doc() = "Bicriteria approximation through weighted-sum oracles";

  static py::exception<Error> base(m, "BicritError", PyExc_RuntimeError);
  static py::exception<ParseError> parse_error(m, "ParseError", base.ptr());
  static py::exception<ValidationError> validation_error(m, "ValidationError", base.ptr());
  static py::exception<ExactOracleRequired> exact_required(m, "ExactOracleRequired", base.ptr());
  static py::exception<NotParametricCapable> not_parametric(m, "NotParametricCapable", base.ptr());
  static py::exception<CapExceeded> cap_exceeded(m, "CapExceeded", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(parse_error, e.what());
    } catch (const ValidationError& e) {
      py::set_error(validation_error, e.what());
    } catch (const ExactOracleRequired& e) {
      py::set_error(exact_required, e.what());
    } catch (const NotParametricCapable& e) {
      py::set_error(not_parametric, e.what());
    } catch (const CapExceeded& e) {
      py::set_error(cap_exceeded, e.what());
    } catch (const InvalidArgument& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  py::class_<Instance>(m, "Instance")
      .def_property_readonly("kind", [](const Instance& i) { return to_string(i.kind); })
      .def_property_readonly("relaxed", &Instance::relaxed)
      .def_property_readonly("digest", &instance_digest)
      .def("dumps", &serialize_instance)
      .def("__eq__", [](const Instance& a, const Instance& b) { return a == b; })
      .def("__repr__", [](const Instance& i) {
        return "<bicrit.Instance kind=" + to_string(i.kind) + " digest=" + instance_digest(i) + ">";
      });

  m.def("loads", [](const std::string& text) { return parse_instance(text); }, py::arg("text"));
  m.def("load", [](const std::string& path) { return load_instance(path); }, py::arg("path"));

  m.def("solve_budget", &solve_budget, py::arg("instance"), py::arg("budget"),
        py::arg("epsilon") = 1, py::arg("algorithm") = "sweep", py::arg("parallel") = false);

  m.def(
      "approximate_pareto",
      [](const Instance& inst, const py::object& eps, bool parallel) {
        return pareto_dict(approximate_pareto(*make_problem(inst), Epsilon(to_rational(eps)), parallel));
      },
      py::arg("instance"), py::arg("epsilon") = 1, py::arg("parallel") = false);
  m.def(
      "extended_pareto",
      [](const Instance& inst, const py::object& eps, bool parallel) {
        return pareto_dict(extended_pareto(*make_problem(inst), Epsilon(to_rational(eps)), parallel));
      },
      py::arg("instance"), py::arg("epsilon") = 1, py::arg("parallel") = false);
  m.def(
      "pareto_from_parametric",
      [](const Instance& inst, const py::object& eps) {
        return pareto_dict(pareto_from_parametric(*make_problem(inst), Epsilon(to_rational(eps))));
      },
      py::arg("instance"), py::arg("epsilon") = 1);

  m.def(
      "enumerate_all",
      [](const Instance& inst) { return record_list(oracle::enumerate_all(*make_problem(inst))); },
      py::arg("instance"));
  m.def(
      "exact_opt_budget",
      [](const Instance& inst, const py::object& budget) -> py::object {
        const auto opt = oracle::exact_opt_budget(*make_problem(inst), to_rational(budget));
        return opt ? to_fraction(*opt) : py::none();
      },
      py::arg("instance"), py::arg("budget"));
  m.def(
      "exact_pareto",
      [](const Instance& inst) { return record_list(oracle::exact_pareto(*make_problem(inst)).records); },
      py::arg("instance"));

  m.def("reproduce_example1", [] {
    const auto r = marathe::reproduce_example1();
    py::dict d;
    d["adversarial"] = trace_list(r.adversarial);
    d["exact"] = trace_list(r.exact);
    d["ratio3_adversarial"] = to_fraction(r.ratio3_adversarial);
    d["ratio4_adversarial"] = to_fraction(r.ratio4_adversarial);
    d["ratio3_exact"] = to_fraction(r.ratio3_exact);
    d["ratio4_exact"] = to_fraction(r.ratio4_exact);
    d["reproduced"] = r.reproduced();
    return d;
  });
  m.def("reproduce_example2", [] {
    const auto r = marathe::reproduce_example2();
    py::dict d;
    d["tested"] = trace_list(r.trace.tested);
    d["no_solution"] = r.trace.no_solution();
    d["opt_at_budget"] = r.opt_at_budget ? to_fraction(*r.opt_at_budget) : py::none();
    d["feasible"] = record_list(r.feasible);
    d["reproduced"] = r.reproduced();
    return d;
  });
}
