#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sds/cli.hpp"
#include "sds/ksds.hpp"
#include "sds/majorder.hpp"
#include "sds/report.hpp"

namespace py = pybind11;
using namespace sds;

namespace {

std::vector<Rational> to_rationals(const std::vector<std::string>& values) {
  std::vector<Rational> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(parse_rational(v));
  return out;
}

std::vector<std::string> to_strings(std::span<const Rational> values) {
  std::vector<std::string> out;
  for (const auto& v : values) out.push_back(to_fraction_string(v));
  return out;
}

std::vector<std::vector<std::string>> matrix_rows(const Matrix& m) {
  std::vector<std::vector<std::string>> rows(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) rows[i].push_back(to_fraction_string(m(i, j)));
  }
  return rows;
}

Matrix matrix_from_rows(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Rational>> values;
  for (const auto& row : rows) values.push_back(to_rationals(row));
  return Matrix(std::move(values));
}

}  // namespace

PYBIND11_MODULE(_sds, m) {
  m.doc() = "Exact successive difference substitution (KSDS) and monomial majorization.";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Form>(m, "Form")
      .def_property_readonly("variables", &Form::variables)
      .def_property_readonly("degree", &Form::degree)
      .def("terms",
           [](const Form& f) {
             std::vector<std::pair<std::vector<unsigned>, std::string>> out;
             for (const auto& [alpha, c] : f.terms()) {
               out.emplace_back(std::vector<unsigned>(alpha.entries().begin(), alpha.entries().end()),
                                to_fraction_string(c));
             }
             return out;
           })
      .def("evaluate",
           [](const Form& f, const std::vector<std::string>& point) {
             return to_fraction_string(evaluate(f, to_rationals(point)));
           })
      .def("is_trivially_positive", [](const Form& f) { return is_trivially_positive(f); })
      .def("is_trivially_negative", [](const Form& f) { return is_trivially_negative(f); })
      .def("content_normalize", [](const Form& f) { return content_normalize(f); })
      .def("__eq__", [](const Form& a, const Form& b) { return a == b; })
      .def("__str__", [](const Form& f) { return render(f); })
      .def("__repr__", [](const Form& f) { return "Form('" + render(f) + "')"; });

  m.def("parse_form", [](const std::string& text, std::optional<std::size_t> n_hint) {
        return parse_form(text, n_hint);
      }, py::arg("text"), py::arg("n_hint") = py::none());

  m.def("majorizes", [](const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    return majorizes(ExponentVector(a), ExponentVector(b));
  });
  m.def("majorizes_under", [](const std::vector<unsigned>& a, const std::vector<unsigned>& b,
                              const std::vector<unsigned>& sigma) {
    return majorizes_under(ExponentVector(a), ExponentVector(b), Permutation(sigma));
  });
  m.def("separating_point", [](const std::vector<unsigned>& a, const std::vector<unsigned>& b,
                               const std::vector<unsigned>& sigma) {
    return to_strings(separating_point(ExponentVector(a), ExponentVector(b), Permutation(sigma)).coords());
  });

  m.def("build_K", [](const std::vector<std::string>& q) {
    return matrix_rows(build_K(SubstitutionTemplate(to_rationals(q))));
  });
  m.def("build_B", [](const std::vector<unsigned>& sigma, const std::vector<std::string>& q) {
    return matrix_rows(build_B(Permutation(sigma), SubstitutionTemplate(to_rationals(q))));
  });
  m.def("apply_substitution", [](const Form& f, const std::vector<std::vector<std::string>>& rows) {
    return apply_substitution(f, matrix_from_rows(rows));
  });
  m.def("persistent_coefficient",
        [](const Form& f, const std::vector<unsigned>& sigma, const std::vector<std::string>& q,
           unsigned power, const std::vector<unsigned>& lambda) {
          return to_fraction_string(persistent_coefficient(
              f, Permutation(sigma), SubstitutionTemplate(to_rationals(q)), power,
              ExponentVector(lambda)));
        });

  m.def("necessary_condition_json", [](const Form& f) { return to_json(necessary_condition(f)).dump(); });

  m.def(
      "ksds_json",
      [](const Form& f, const std::string& matrix, std::size_t max_depth, bool check_necessary,
         bool dedup, std::uint64_t node_budget) {
        KsdsOptions opts;
        opts.check_necessary = check_necessary;
        opts.dedup = dedup;
        opts.node_budget = node_budget;
        const auto t = cli::make_template(cli::parse_matrix_choice(matrix), f.variables());
        Verdict v;
        {
          py::gil_scoped_release release;
          v = ksds_run(f, t, max_depth, opts);
        }
        return to_json(v).dump();
      },
      py::arg("form"), py::arg("matrix") = "an", py::arg("max_depth") = 6,
      py::arg("check_necessary") = false, py::arg("dedup") = true,
      py::arg("node_budget") = 1'000'000);
}
