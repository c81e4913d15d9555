#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cocoa/export.hpp"

namespace py = pybind11;

namespace {

struct PyChain {
  cocoa::Cocoa chain;

  cocoa::LassoWord word(const std::string& text) const { return cocoa::parse_lasso(text, chain.alphabet()); }
};

py::object to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

cocoa::Alphabet alphabet_for(const std::string& text, std::optional<std::vector<std::string>> aps) {
  return cocoa::Alphabet(aps ? *aps : cocoa::collect_atoms(text));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Translate LTL formulas into chains of co-Büchi automata";

  static py::exception<cocoa::Error> base(m, "CocoaError");
  static py::exception<cocoa::ResourceLimit> limit(m, "ResourceLimitError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const cocoa::ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const cocoa::UnknownAtom& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const cocoa::ResourceLimit& e) {
      PyErr_SetString(limit.ptr(), e.what());
    } catch (const cocoa::Error& e) {
      PyErr_SetString(base.ptr(), e.what());
    }
  });

  py::class_<PyChain>(m, "Chain")
      .def_property_readonly("k", [](const PyChain& c) { return c.chain.k(); })
      .def_property_readonly("aps", [](const PyChain& c) { return c.chain.alphabet().aps(); })
      .def_property_readonly("formula", [](const PyChain& c) { return c.chain.formula.to_string(); })
      .def_property_readonly("sltm_states", [](const PyChain& c) { return c.chain.sltm->size(); })
      .def_property_readonly("level_sizes",
                             [](const PyChain& c) {
                               std::vector<std::size_t> out;
                               for (const auto& lv : c.chain.levels) out.push_back(lv.dfw.size());
                               return out;
                             },
                             "DFW state count per level")
      .def("color", [](const PyChain& c, const std::string& w) { return cocoa::natural_color(c.chain, c.word(w)); },
           py::arg("word"), "Natural color of a lasso word such as \"{a}{};{a}\"")
      .def("accepts", [](const PyChain& c, const std::string& w) { return cocoa::natural_color(c.chain, c.word(w)) % 2 == 0; },
           py::arg("word"))
      .def("memberships", [](const PyChain& c, const std::string& w) { return cocoa::level_memberships(c.chain, c.word(w)); },
           py::arg("word"), "Acceptance at each level, starting with level 1")
      .def(
          "verify",
          [](const PyChain& c, std::size_t prefix, std::size_t period) {
            const auto r = cocoa::verify_chain(c.chain, c.chain.formula, prefix, period);
            py::dict d;
            d["lassos"] = r.lassos;
            d["counterexamples"] = r.counterexamples;
            d["monotonicity_violations"] = r.monotonicity_violations;
            d["color_histogram"] = r.color_histogram;
            d["ok"] = r.ok();
            d["first"] = r.first ? py::object(py::str(cocoa::format_lasso(r.first->word, c.chain.alphabet())))
                                 : py::object(py::none());
            return d;
          },
          py::arg("prefix") = 2, py::arg("period") = 3)
      .def("to_json", [](const PyChain& c) { return to_python(cocoa::chain_to_json(c.chain)); })
      .def("to_dot", [](const PyChain& c) { return cocoa::chain_to_dot(c.chain); })
      .def(
          "to_hoa",
          [](const PyChain& c, std::size_t level) {
            if (level < 1 || level > c.chain.k()) throw py::index_error("level out of range");
            return cocoa::ncw_to_hoa(c.chain.levels[level - 1].ncw, "level" + std::to_string(level));
          },
          py::arg("level"))
      .def("__repr__", [](const PyChain& c) {
        return "<Chain k=" + std::to_string(c.chain.k()) + " formula='" + c.chain.formula.to_string() + "'>";
      });

  m.def(
      "translate",
      [](const std::string& text, std::optional<std::vector<std::string>> aps, std::size_t max_states,
         double timeout_s) {
        const auto al = alphabet_for(text, aps);
        const auto f = cocoa::parse_ltl(text, al.aps());
        py::gil_scoped_release release;
        return PyChain{cocoa::build_chain(f, al, cocoa::Budget(max_states, timeout_s))};
      },
      py::arg("formula"), py::arg("aps") = py::none(), py::arg("max_states") = cocoa::Budget::kDefaultMaxStates,
      py::arg("timeout_s") = cocoa::Budget::kDefaultTimeoutSeconds,
      "Build the chain for an LTL formula; atoms default to those appearing in it");

  m.def(
      "eval_lasso",
      [](const std::string& text, const std::string& word, std::optional<std::vector<std::string>> aps) {
        const auto al = alphabet_for(text, aps);
        return cocoa::eval_lasso(cocoa::parse_ltl(text, al.aps()), cocoa::parse_lasso(word, al));
      },
      py::arg("formula"), py::arg("word"), py::arg("aps") = py::none());

  m.def(
      "to_nnf",
      [](const std::string& text) {
        return cocoa::to_nnf(cocoa::parse_ltl(text, cocoa::collect_atoms(text))).to_string();
      },
      py::arg("formula"));

  m.def(
      "lower_bound_family", [](int n) { return cocoa::lower_bound_family(n).to_string(); }, py::arg("n"));
}
