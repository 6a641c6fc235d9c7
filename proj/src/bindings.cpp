#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "revsc/automata.hpp"
#include "revsc/io.hpp"
#include "revsc/order.hpp"
#include "revsc/regex.hpp"
#include "revsc/search.hpp"
#include "revsc/witness.hpp"

namespace py = pybind11;

namespace {

revsc::JTrivialMethod method_from_name(const std::string& name) {
  if (name == "reverse-po") return revsc::JTrivialMethod::kReversePo;
  if (name == "simon") return revsc::JTrivialMethod::kSimon;
  if (name == "trahtman") return revsc::JTrivialMethod::kTrahtman;
  throw std::invalid_argument(
      "method must be reverse-po, simon or trahtman");
}

py::dict record_to_dict(const revsc::SearchRecord& rec) {
  py::dict d;
  d["n"] = rec.n;
  d["k"] = rec.k;
  d["max_reverse_sc"] = rec.max_reverse_sc;
  d["candidates_scanned"] = rec.candidates_scanned;
  d["minimal_count"] = rec.minimal_count;
  if (rec.witness.has_value())
    d["witness"] = *rec.witness;
  else
    d["witness"] = py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "State complexity of the reverse of R-trivial and J-trivial regular "
      "languages";

  py::class_<revsc::Dfa>(m, "Dfa")
      .def(py::init([](int states, int alphabet_size,
                       const std::vector<std::vector<int>>& delta, int initial,
                       const std::vector<int>& accepting) {
             return revsc::build_dfa(states, alphabet_size, delta, initial,
                                     accepting);
           }),
           py::arg("states"), py::arg("alphabet_size"), py::arg("delta"),
           py::arg("initial"), py::arg("accepting"))
      .def_property_readonly("states", &revsc::Dfa::state_count)
      .def_property_readonly("alphabet_size", &revsc::Dfa::alphabet_size)
      .def_property_readonly("initial", &revsc::Dfa::initial)
      .def_property_readonly(
          "accepting",
          [](const revsc::Dfa& dfa) { return dfa.accepting().indices(); })
      .def_property_readonly("delta",
                             [](const revsc::Dfa& dfa) {
                               std::vector<std::vector<int>> rows;
                               for (int p = 0; p < dfa.state_count(); ++p) {
                                 std::vector<int> row;
                                 for (int a = 0; a < dfa.alphabet_size(); ++a)
                                   row.push_back(dfa.next(p, a));
                                 rows.push_back(std::move(row));
                               }
                               return rows;
                             })
      .def("next", &revsc::Dfa::next, py::arg("state"), py::arg("letter"))
      .def(
          "accepts",
          [](const revsc::Dfa& dfa, const std::vector<int>& word) {
            return dfa.accepts(word);
          },
          py::arg("word"))
      .def("__eq__", [](const revsc::Dfa& a,
                        const revsc::Dfa& b) { return a == b; })
      .def("__repr__", [](const revsc::Dfa& dfa) {
        return "Dfa(states=" + std::to_string(dfa.state_count()) +
               ", alphabet_size=" + std::to_string(dfa.alphabet_size()) + ")";
      });

  m.def("minimize", &revsc::minimize, py::arg("dfa"));
  m.def("complement", &revsc::complement, py::arg("dfa"));
  m.def(
      "dead_states",
      [](const revsc::Dfa& dfa) { return revsc::dead_states(dfa).indices(); },
      py::arg("dfa"));
  m.def("state_complexity", &revsc::state_complexity, py::arg("dfa"));
  m.def("reverse_state_complexity", &revsc::reverse_state_complexity,
        py::arg("dfa"));

  m.def("is_partially_ordered", &revsc::is_partially_ordered, py::arg("dfa"));
  m.def("is_r_trivial", &revsc::is_r_trivial, py::arg("dfa"));
  m.def(
      "is_j_trivial",
      [](const revsc::Dfa& dfa, const std::string& method) {
        return revsc::is_j_trivial(dfa, method_from_name(method));
      },
      py::arg("dfa"), py::arg("method") = "reverse-po");

  m.def("fig2_witness", &revsc::fig2_witness, py::arg("n"));
  m.def("fig5_witness", &revsc::fig5_witness, py::arg("n"));
  m.def("table1_witness", &revsc::table1_witness, py::arg("n"));
  m.def("table1_expression", &revsc::table1_expression, py::arg("n"));
  m.def("r_trivial_reverse_bound", &revsc::r_trivial_reverse_bound,
        py::arg("n"), py::arg("k"));
  m.def("binary_j_trivial_reverse_bound",
        &revsc::binary_j_trivial_reverse_bound, py::arg("n"));
  m.def(
      "j_trivial_alphabet_bound",
      [](int n, int k) -> py::object {
        const auto bound = revsc::j_trivial_alphabet_bound(n, k);
        if (bound.has_value()) return py::cast(*bound);
        return py::none();
      },
      py::arg("n"), py::arg("k"));

  m.def(
      "regex_to_min_dfa",
      [](const std::string& text, const std::vector<std::string>& alphabet) {
        return revsc::regex_to_min_dfa(text, alphabet);
      },
      py::arg("text"), py::arg("alphabet"));

  m.def("default_letter_names", &revsc::default_letter_names, py::arg("k"));
  m.def("dfa_to_json", &revsc::dfa_to_json, py::arg("dfa"),
        py::arg("letters") = std::vector<std::string>{});
  m.def(
      "dfa_from_json",
      [](const std::string& text) { return revsc::dfa_from_json(text); },
      py::arg("text"));
  m.def("dfa_to_dot", &revsc::dfa_to_dot, py::arg("dfa"),
        py::arg("letters") = std::vector<std::string>{});
  m.def(
      "dfa_from_dot",
      [](const std::string& text) { return revsc::dfa_from_dot(text); },
      py::arg("text"));

  m.def(
      "worst_case_reverse",
      [](int n, int k, const std::string& klass, const std::string& dead,
         bool symmetry, int jobs) {
        const auto class_filter = klass == "j"
                                      ? revsc::ClassFilter::kJTrivial
                                      : revsc::ClassFilter::kRTrivial;
        revsc::DeadMode dead_mode = revsc::DeadMode::kAny;
        if (dead == "require") dead_mode = revsc::DeadMode::kRequire;
        else if (dead == "forbid") dead_mode = revsc::DeadMode::kForbid;
        else if (dead != "any")
          throw std::invalid_argument("dead must be require, forbid or any");
        return record_to_dict(revsc::worst_case_reverse(
            n, k, class_filter, dead_mode,
            symmetry ? revsc::Symmetry::kFull : revsc::Symmetry::kNone,
            jobs));
      },
      py::arg("n"), py::arg("k"), py::arg("klass") = "r",
      py::arg("dead") = "any", py::arg("symmetry") = true,
      py::arg("jobs") = 1);
}
