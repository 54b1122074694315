#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kneading/entropy.hpp"
#include "kneading/enumerate.hpp"
#include "kneading/errors.hpp"
#include "kneading/family.hpp"
#include "kneading/inverse_iteration.hpp"

namespace py = pybind11;
using namespace kneading;

namespace {

const UnimodalFamily& family(const std::string& name) {
  static const FamilyRegistry registry = FamilyRegistry::with_builtins();
  return registry.get(name);
}

py::dict record_dict(const SuperstableRecord& r) {
  py::dict d;
  d["word"] = r.word.str();
  d["mu_star"] = r.mu_star;
  d["residual"] = r.residual;
  d["bracket_width"] = r.bracket_width;
  return d;
}

}  // namespace

PYBIND11_MODULE(pykneading, m) {
  m.doc() = "Kneading sequences and superstable parameters of unimodal families";

  auto base = py::register_exception<Error>(m, "KneadingError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<InvariantError>(m, "InvariantError", base.ptr());
  py::register_exception<RangeError>(m, "RangeError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<DomainViolation>(m, "DomainViolation", base.ptr());
  py::register_exception<SolveFailure>(m, "SolveFailure", base.ptr());

  m.def("families", [] { return FamilyRegistry::with_builtins().names(); });

  m.def("is_shift_maximal", [](const std::string& w) { return is_shift_maximal(parse_word(w)); });
  m.def(
      "compare",
      [](const std::string& a, const std::string& b) {
        const Ordering o = compare_parity_lex(parse_word(a), parse_word(b));
        return o == Ordering::Less ? -1 : o == Ordering::Equal ? 0 : 1;
      },
      "Parity-lexicographic comparison, -1/0/1.");

  m.def("count_kneading", &count_kneading, py::arg("n"));
  m.def("enumerate_kneading", [](int n) {
    std::vector<std::string> out;
    for (const auto& w : enumerate_kneading(n).enumerated) out.push_back(w.str());
    return out;
  }, py::arg("n"));

  m.def(
      "kneading_sequence",
      [](const std::string& fam, double mu, int depth) {
        return kneading_sequence(family(fam), mu, depth).str();
      },
      py::arg("family"), py::arg("mu"), py::arg("depth") = 25);

  m.def(
      "solve_superstable",
      [](const std::string& fam, const std::string& w) {
        return record_dict(solve_superstable(family(fam), parse_word(w)));
      },
      py::arg("family"), py::arg("word"));

  m.def(
      "superstable_table",
      [](const std::string& fam, int n_max) {
        std::vector<SuperstableRecord> table;
        {
          py::gil_scoped_release release;
          table = superstable_table(family(fam), n_max);
        }
        py::list rows;
        for (const auto& r : table) rows.append(record_dict(r));
        return rows;
      },
      py::arg("family"), py::arg("n_max"));

  m.def(
      "realize_ivt",
      [](const std::string& fam, const std::string& w, double mu1, double mu2, int depth) {
        return realize_ivt(family(fam), parse_word(w), mu1, mu2, depth);
      },
      py::arg("family"), py::arg("word"), py::arg("mu1"), py::arg("mu2"), py::arg("depth") = 25);

  m.def(
      "entropy",
      [](const std::string& fam, double mu, int max_depth, std::uint64_t node_cap) {
        return entropy_estimate(family(fam), mu, max_depth, node_cap).h_estimate;
      },
      py::arg("family"), py::arg("mu"), py::arg("max_depth") = kDefaultEntropyDepth,
      py::arg("node_cap") = kDefaultNodeCap);

  m.def(
      "lap_count",
      [](const std::string& fam, double mu, int n) { return lap_count(family(fam), mu, n); },
      py::arg("family"), py::arg("mu"), py::arg("n"));

  m.def(
      "check_class_c",
      [](const std::string& fam) {
        const auto& f = family(fam);
        const auto rep = check_class_C(f, default_mu_grid(f), default_x_grid());
        return py::make_tuple(rep.property1_ok, rep.property2_sufficient_ok, rep.property3_ok);
      },
      py::arg("family"));
}
