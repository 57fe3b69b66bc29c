#include "starrep/cli.hpp"
#include "starrep/conditions.hpp"
#include "starrep/gram.hpp"
#include "starrep/hankel.hpp"
#include "starrep/presets.hpp"
#include "starrep/qdeform.hpp"
#include "starrep/rewrite.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace starrep;

namespace {

py::object fraction(const Rational& q) {
  // leaked on purpose: must outlive interpreter shutdown
  static auto* cls = new py::object(py::module_::import("fractions").attr("Fraction"));
  return (*cls)(q.get_str());
}

py::list fractions(const std::vector<Rational>& qs) {
  py::list out;
  for (auto& q : qs) out.append(fraction(q));
  return out;
}

// Python-side handle: a system plus the alphabet used to parse expressions.
struct System {
  RewriteSystem system;

  const Alphabet& alphabet() const { return system.alphabet(); }
  Polynomial parse(const std::string& expr) const { return parse_expression(expr, alphabet(), {}); }
};

Bindings to_bindings(const std::map<std::string, std::string>& params) {
  Bindings out;
  for (auto& [k, v] : params) out[k] = parse_scalar(v);
  return out;
}

System load(const std::string& source, const std::map<std::string, std::string>& params) {
  const std::string text = source.find('\n') != std::string::npos ? source : load_source(source);
  return {prepare_system(parse_presentation(text), to_bindings(params))};
}

py::dict report_dict(const ConditionReport& r, const Alphabet& a) {
  py::dict d;
  d["condition"] = r.condition;
  d["verdict"] = std::string(to_string(r.verdict));
  d["bound"] = r.bound ? py::cast(*r.bound) : py::none();
  d["note"] = r.note;
  d["parameters"] = r.parameters;
  py::list ws;
  for (auto& w : r.witnesses) {
    py::dict wd;
    wd["kind"] = w.kind;
    wd["relations"] = w.relations;
    std::vector<std::string> words;
    for (auto& x : w.words) words.push_back(a.format(x));
    wd["words"] = words;
    wd["polynomial"] = w.polynomial ? py::cast(w.polynomial->format(a)) : py::none();
    wd["note"] = w.note;
    ws.append(wd);
  }
  d["witnesses"] = ws;
  return d;
}

py::dict norms_dict(const HankelNorms& n) {
  py::dict d;
  d["norm2"] = fraction(n.norm2);
  d["right_image2"] = fraction(n.right_image2);
  d["left_image2"] = fraction(n.left_image2);
  return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Groebner and GNS tools for finitely presented *-algebras";

  static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  static py::exception<PreconditionError> precondition_error(m, "PreconditionError", PyExc_ValueError);
  static py::exception<NonExpandingViolation> violation(m, "NonExpandingViolation", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::object err = py::handle(parse_error)(py::str(e.what()));
      err.attr("line") = e.line;
      err.attr("column") = e.column;
      py::set_error(parse_error, err);
    } catch (const PreconditionError& e) {
      py::set_error(precondition_error, e.what());
    } catch (const NonExpandingViolation& e) {
      py::set_error(violation, e.what());
    }
  });

  py::class_<System>(m, "System")
      .def_property_readonly("relations",
                             [](const System& s) {
                               std::vector<std::string> out;
                               for (auto& r : s.system.relations()) out.push_back(r.format(s.alphabet()));
                               return out;
                             })
      .def_property_readonly("leading_words",
                             [](const System& s) {
                               std::vector<std::string> out;
                               for (auto& w : s.system.leading_words()) out.push_back(s.alphabet().format(w));
                               return out;
                             })
      .def_property_readonly("status", [](const System& s) { return std::string(to_string(s.system.status())); })
      .def("__len__", [](const System& s) { return s.system.size(); })
      .def("reduce", [](const System& s, const std::string& expr) {
        return normal_form(s.parse(expr), s.system).format(s.alphabet());
      }, py::arg("expr"), "Normal form R_S of an expression")
      .def("is_basis_word", [](const System& s, const std::string& w) {
        Polynomial p = s.parse(w);
        if (p.size() != 1) throw std::invalid_argument("not a single word: " + w);
        return is_basis_word(p.terms().begin()->first, s.system);
      })
      .def("basis_words", [](const System& s, std::size_t max_length) {
        std::vector<std::string> out;
        for (auto& w : enumerate_basis_words(s.system, max_length)) out.push_back(s.alphabet().format(w));
        return out;
      }, py::arg("max_length"))
      .def("complete", [](const System& s, std::size_t max_degree, std::size_t max_iterations) {
        return System{complete(s.system, max_degree, max_iterations)};
      }, py::arg("max_degree") = 12, py::arg("max_iterations") = 64)
      .def("check", [](const System& s, const std::string& condition, std::optional<std::size_t> max_length) {
        return report_dict(check_condition(s.system, condition, max_length), s.alphabet());
      }, py::arg("condition"), py::arg("max_length") = py::none())
      .def("gram", [](const System& s, std::size_t n) {
        GramSession g(s.system);
        g.choose_xi(n);
        py::dict d;
        std::vector<std::string> words;
        for (std::size_t k = 1; k <= n; ++k) words.push_back(s.alphabet().format(g.word(k)));
        d["words"] = words;
        d["xi"] = fractions(g.xi());
        d["minors"] = fractions(g.minors());
        return d;
      }, py::arg("size"), "Basis words, weights and leading minors of the Gram matrix")
      .def("qdeform_F", [](const System& s, const std::string& expr) {
        Scalar v = qdeform_F(s.parse(expr), s.system);
        if (!v.is_real()) throw std::domain_error("F is not real");
        return fraction(v.re());
      })
      .def("qdeform_F_prediction", [](const System& s, const std::string& z) {
        return fraction(qdeform_F_prediction(s.parse(z), s.system));
      });

  m.def("load", &load, py::arg("source"), py::arg("params") = std::map<std::string, std::string>{},
        "Load a preset name, a file path or DSL text");
  m.def("preset_names", &preset_names);
  m.def("preset_text", [](const std::string& spec) { return preset_text(spec); });
  m.def("conditions", &condition_names);
  m.def("hankel_moment", [](long k) { return fraction(hankel_moment(k)); });
  m.def("hankel_demo", [](std::size_t n) {
    HankelReport r = hankel_demo(n);
    py::dict d;
    d["moments"] = fractions(r.moments);
    d["minors_positive"] = r.minors_positive;
    d["block_diagonal"] = r.block_diagonal;
    d["example"] = norms_dict(r.example);
    d["example_contracts"] = r.example_contracts;
    return d;
  }, py::arg("size"));
  m.def("hankel_norms", [](const std::string& expr) {
    RewriteSystem s = monomial_x2_system();
    Polynomial g = parse_expression(expr, s.alphabet(), {});
    py::dict d;
    d["rewriting"] = norms_dict(hankel_norms_by_rewriting(g));
    d["integrals"] = norms_dict(hankel_norms_by_integrals(g));
    return d;
  }, py::arg("expr"), "Norms of g in the x^2 algebra by both routes");
  m.def("run", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Run one command line; returns (exit_code, stdout, stderr)");
}
