// Python bindings. Inputs use the CLI text forms; qstar/__init__.py adds the
// list conveniences.

#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qstar/algebra.hpp"
#include "qstar/cubes.hpp"
#include "qstar/error.hpp"
#include "qstar/expansion.hpp"
#include "qstar/oracle.hpp"
#include "qstar/tables.hpp"
#include "qstar/words.hpp"

namespace py = pybind11;

namespace {

py::object to_pyint(const mpz_class& value) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(value.get_str().c_str(), nullptr, 10));
}

qstar::MultiIndex multi_index(const std::vector<qstar::Count>& entries) { return qstar::MultiIndex(entries); }

qstar::ProblemSpec make_spec(const std::vector<qstar::Count>& alpha, const std::vector<qstar::Count>& beta,
                             const std::string& p, const std::string& q, std::uint64_t n) {
  qstar::ProblemSpec spec{multi_index(alpha), multi_index(beta), qstar::parse_bare_monomials(p),
                          qstar::parse_bare_monomials(q), n};
  spec.validate();
  return spec;
}

qstar::Path parse_path(const std::string& path) {
  if (path == "lift") return qstar::Path::Lift;
  if (path == "enumerate") return qstar::Path::Enumerate;
  throw qstar::InputError("path must be 'lift' or 'enumerate'");
}

py::list matrices(const std::vector<qstar::CubicalMatrix>& list, const std::string& layout,
                  std::optional<std::size_t> levels, std::uint64_t m) {
  py::list out;
  for (const auto& gamma : list) {
    if (layout == "matrix") {
      out.append(qstar::to_string(gamma));
    } else if (layout == "by-level") {
      out.append(qstar::to_vector_by_level(gamma, levels.value_or(std::max<std::uint64_t>(m, 1) + 1)));
    } else {
      throw qstar::InputError("layout must be 'matrix' or 'by-level'");
    }
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_qstar, mod) {
  mod.doc() = "Star products of elementary multisymmetric functions";

  mod.def("parse_monomial", [](const std::string& text) {
    const auto term = qstar::parse_monomial(text);
    return py::make_tuple(to_pyint(term.coeff), term.mono.xExp, term.mono.yExp);
  }, "(coeff, x exponent, y exponent) of a monomial such as '-3x^2y'");

  mod.def("star_pair", [](const std::string& p, const std::string& q) {
    py::list out;
    const auto a = qstar::parse_bare_monomials(p);
    const auto b = qstar::parse_bare_monomials(q);
    if (a.size() != 1 || b.size() != 1) throw qstar::InputError("star_pair takes one monomial on each side");
    for (const auto& [k, term] : qstar::star_pair(a[0], b[0])) out.append(py::make_tuple(k, qstar::to_string(term)));
    return out;
  }, "Terms (k, 'coeff*monomial') of the Moyal product of two monomials");

  mod.def("b_list", [](const std::string& p, const std::string& q) {
    const qstar::BTable btable(qstar::parse_bare_monomials(p), qstar::parse_bare_monomials(q));
    std::vector<std::string> out;
    for (std::size_t pos = 0; pos < btable.flat_length(); ++pos) out.push_back(qstar::to_string(btable.flat_entry(pos)));
    return out;
  }, py::arg("p"), py::arg("q"));

  mod.def("b_length", [](const std::string& p, const std::string& q) {
    return qstar::b_length(qstar::parse_bare_monomials(p), qstar::parse_bare_monomials(q));
  }, py::arg("p"), py::arg("q"));

  mod.def("enumerate_l", [](const std::vector<qstar::Count>& alpha, const std::vector<qstar::Count>& beta,
                            std::uint64_t n, unsigned threads) {
    std::vector<std::string> out;
    for (const auto& gamma : qstar::enumerate_l(multi_index(alpha), multi_index(beta), n, {threads})) {
      out.push_back(qstar::to_string(gamma));
    }
    return out;
  }, py::arg("alpha"), py::arg("beta"), py::arg("n"), py::arg("threads") = 1);

  mod.def("enumerate_q", [](const std::vector<qstar::Count>& alpha, const std::vector<qstar::Count>& beta,
                            std::uint64_t n, std::uint64_t m, const std::string& layout,
                            std::optional<std::size_t> levels, unsigned threads) {
    return matrices(qstar::enumerate_q(multi_index(alpha), multi_index(beta), n, m, {threads}), layout, levels, m);
  }, py::arg("alpha"), py::arg("beta"), py::arg("n"), py::arg("m"), py::arg("layout") = "matrix",
     py::arg("levels") = py::none(), py::arg("threads") = 1);

  mod.def("lift_all", [](const std::vector<qstar::Count>& alpha, const std::vector<qstar::Count>& beta,
                         std::uint64_t n, std::uint64_t m, const std::string& layout,
                         std::optional<std::size_t> levels, unsigned threads) {
    return matrices(qstar::lift_all(multi_index(alpha), multi_index(beta), n, m, {threads}), layout, levels, m);
  }, py::arg("alpha"), py::arg("beta"), py::arg("n"), py::arg("m"), py::arg("layout") = "matrix",
     py::arg("levels") = py::none(), py::arg("threads") = 1);

  mod.def("enumerate_a", [](const std::vector<qstar::Count>& alpha, const std::vector<qstar::Count>& beta,
                            std::uint64_t n, std::uint64_t m, unsigned threads) {
    std::vector<std::string> out;
    for (const auto& word : qstar::enumerate_a(multi_index(alpha), multi_index(beta), n, m, {threads})) {
      out.push_back(qstar::to_string(word));
    }
    return out;
  }, py::arg("alpha"), py::arg("beta"), py::arg("n"), py::arg("m"), py::arg("threads") = 1);

  mod.def("encode", [](const std::string& matrix) {
    return qstar::to_string(qstar::encode(matrix.empty() ? qstar::CubicalMatrix() : qstar::parse_cubical_matrix(matrix)));
  });
  mod.def("decode", [](const std::string& word) { return qstar::to_string(qstar::decode(qstar::parse_word(word))); });
  mod.def("word_stats", [](const std::string& word) {
    const auto stats = qstar::word_stats(qstar::parse_word(word));
    py::dict out;
    out["N"] = stats.size;
    out["s"] = stats.support;
    out["m"] = stats.weight;
    out["alpha"] = stats.alpha.entries();
    out["beta"] = stats.beta.entries();
    return out;
  });

  mod.def("star_product", [](const std::vector<qstar::Count>& alpha, const std::vector<qstar::Count>& beta,
                             const std::string& p, const std::string& q, std::uint64_t n, const std::string& path,
                             const std::string& format, unsigned threads) {
    qstar::StarOptions options;
    options.path = parse_path(path);
    options.par.threads = threads;
    const auto result = qstar::star_product(make_spec(alpha, beta, p, q, n), options);
    if (format == "json") return qstar::render_json(result);
    if (format == "text") return qstar::render_text(result);
    throw qstar::InputError("format must be 'text' or 'json'");
  }, py::arg("alpha"), py::arg("beta"), py::arg("p"), py::arg("q"), py::arg("n"), py::arg("path") = "lift",
     py::arg("format") = "text", py::arg("threads") = 1);

  mod.def("verify", [](const std::vector<qstar::Count>& alpha, const std::vector<qstar::Count>& beta,
                       const std::string& p, const std::string& q, std::uint64_t n, bool drop_scalars,
                       unsigned threads) {
    qstar::VerifyOptions options;
    options.dropScalars = drop_scalars;
    options.par.threads = threads;
    const auto report = qstar::verify(make_spec(alpha, beta, p, q, n), options);
    py::dict out;
    out["oracle_identity"] = report.oracleIdentity.passed;
    out["classical_limit"] = report.classicalLimit.passed;
    out["path_equivalence"] = report.pathEquivalence.passed;
    out["passed"] = report.passed();
    out["diff"] = report.oracleIdentity.diff + report.classicalLimit.diff + report.pathEquivalence.diff;
    return out;
  }, py::arg("alpha"), py::arg("beta"), py::arg("p"), py::arg("q"), py::arg("n"), py::arg("drop_scalars") = false,
     py::arg("threads") = 1);
}
