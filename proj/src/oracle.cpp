#include "qstar/oracle.hpp"

#include <algorithm>
#include <iostream>
#include <limits>

#include "qstar/error.hpp"
#include "qstar/tables.hpp"

namespace qstar {

NPoly::NPoly(std::size_t n) : n_(n) {
  if (n == 0) throw InputError("NPoly needs at least one copy");
}

NPoly NPoly::constant(std::size_t n, const mpq_class& value) {
  NPoly out(n);
  out.add_term(Exponents(2 * n + 1, 0), value);
  return out;
}

NPoly NPoly::monomial(std::size_t n, std::size_t copy, const Monomial2& mono, const mpq_class& coeff) {
  if (copy >= n) throw InputError("copy index out of range");
  constexpr auto limit = std::numeric_limits<std::uint32_t>::max();
  if (mono.xExp > limit || mono.yExp > limit) throw InputError("exponent too large for the oracle");
  NPoly out(n);
  Exponents exps(2 * n + 1, 0);
  exps[copy] = static_cast<std::uint32_t>(mono.xExp);
  exps[n + copy] = static_cast<std::uint32_t>(mono.yExp);
  out.add_term(exps, coeff);
  return out;
}

NPoly NPoly::hbar_power(std::size_t n, std::uint32_t power) {
  NPoly out(n);
  Exponents exps(2 * n + 1, 0);
  exps[2 * n] = power;
  out.add_term(exps, 1);
  return out;
}

void NPoly::add_term(const Exponents& exps, const mpq_class& coeff) {
  if (exps.size() != 2 * n_ + 1) throw InputError("exponent vector has the wrong length");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void NPoly::check_same_n(const NPoly& other) const {
  if (n_ != other.n_) {
    throw InputError("polynomials live on " + std::to_string(n_) + " and " + std::to_string(other.n_) + " copies");
  }
}

NPoly& NPoly::operator+=(const NPoly& other) {
  check_same_n(other);
  for (const auto& [exps, coeff] : other.terms_) add_term(exps, coeff);
  return *this;
}

NPoly& NPoly::operator-=(const NPoly& other) {
  check_same_n(other);
  for (const auto& [exps, coeff] : other.terms_) add_term(exps, -coeff);
  return *this;
}

NPoly NPoly::operator+(const NPoly& other) const {
  NPoly out = *this;
  out += other;
  return out;
}

NPoly NPoly::operator-(const NPoly& other) const {
  NPoly out = *this;
  out -= other;
  return out;
}

NPoly NPoly::operator*(const NPoly& other) const {
  check_same_n(other);
  NPoly out(n_);
  Exponents exps(2 * n_ + 1);
  for (const auto& [lhs, lc] : terms_) {
    for (const auto& [rhs, rc] : other.terms_) {
      for (std::size_t v = 0; v < exps.size(); ++v) exps[v] = lhs[v] + rhs[v];
      out.add_term(exps, lc * rc);
    }
  }
  return out;
}

NPoly NPoly::operator*(const mpq_class& scalar) const {
  NPoly out(n_);
  if (scalar == 0) return out;
  for (const auto& [exps, coeff] : terms_) out.terms_.emplace(exps, coeff * scalar);
  return out;
}

namespace {

NPoly differentiate(const NPoly& poly, std::size_t var) {
  NPoly out(poly.n());
  for (const auto& [key, value] : poly.terms()) {
    if (key[var] == 0) continue;
    NPoly::Exponents exps = key;
    mpq_class coeff = value * exps[var];
    --exps[var];
    out.add_term(exps, coeff);
  }
  return out;
}

}  // namespace

NPoly NPoly::d_x(std::size_t copy) const { return differentiate(*this, copy); }
NPoly NPoly::d_y(std::size_t copy) const { return differentiate(*this, n_ + copy); }

bool NPoly::hbar_free() const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first[2 * n_] == 0; });
}

NPoly NPoly::hbar_coefficient(std::uint32_t k) const {
  NPoly out(n_);
  for (const auto& [key, coeff] : terms_) {
    if (key[2 * n_] != k) continue;
    Exponents exps = key;
    exps[2 * n_] = 0;
    out.terms_.emplace(std::move(exps), coeff);
  }
  return out;
}

bool NPoly::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.get_den() == 1; });
}

NPoly NPoly::permute_copies(std::span<const std::size_t> perm) const {
  if (perm.size() != n_) throw InputError("permutation has the wrong length");
  NPoly out(n_);
  for (const auto& [exps, coeff] : terms_) {
    Exponents moved(exps.size(), 0);
    for (std::size_t c = 0; c < n_; ++c) {
      moved[perm[c]] = exps[c];
      moved[n_ + perm[c]] = exps[n_ + c];
    }
    moved[2 * n_] = exps[2 * n_];
    out.add_term(moved, coeff);
  }
  return out;
}

std::string exponents_to_string(const NPoly::Exponents& exps, std::size_t n) {
  std::string out;
  auto factor = [&](const std::string& name, std::uint32_t power) {
    if (power == 0) return;
    if (!out.empty()) out += '*';
    out += name;
    if (power > 1) out += '^' + std::to_string(power);
  };
  for (std::size_t c = 0; c < n; ++c) {
    factor("x" + std::to_string(c + 1), exps[c]);
    factor("y" + std::to_string(c + 1), exps[n + c]);
  }
  factor("h", exps[2 * n]);
  return out.empty() ? "1" : out;
}

std::string to_string(const NPoly& poly) {
  if (poly.is_zero()) return "0";
  std::string out;
  for (const auto& [exps, coeff] : poly.terms()) {
    const std::string mono = exponents_to_string(exps, poly.n());
    std::string term;
    if (mono == "1") {
      term = coeff.get_str();
    } else if (coeff == 1) {
      term = mono;
    } else if (coeff == -1) {
      term = "-" + mono;
    } else {
      term = coeff.get_str() + "*" + mono;
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

NPoly expand_elementary(const MultiIndex& alpha, const std::vector<Monomial2>& p, std::size_t n,
                        const WarningSink& warn) {
  if (p.size() != alpha.size()) throw InputError("argument list must match the length of alpha");
  if (alpha.weight() > n) {
    const std::string msg = "|alpha| = " + std::to_string(alpha.weight()) + " exceeds n = " +
                            std::to_string(n) + "; e_alpha is zero";
    if (warn) {
      warn(msg);
    } else {
      std::clog << "warning: " << msg << '\n';
    }
    return NPoly(n);
  }
  // states: how many copies have been given each label so far
  std::map<std::vector<Count>, NPoly> states;
  states.emplace(std::vector<Count>(alpha.size(), 0), NPoly::constant(n, 1));
  for (std::size_t copy = 0; copy < n; ++copy) {
    std::map<std::vector<Count>, NPoly> next;
    for (const auto& [used, poly] : states) {
      next.try_emplace(used, n).first->second += poly;
      for (std::size_t label = 0; label < alpha.size(); ++label) {
        if (used[label] == alpha[label]) continue;
        auto bumped = used;
        ++bumped[label];
        next.try_emplace(bumped, n).first->second += poly * NPoly::monomial(n, copy, p[label]);
      }
    }
    states = std::move(next);
  }
  auto it = states.find(alpha.entries());
  return it == states.end() ? NPoly(n) : it->second;
}

NPoly expand_eterm(const ETerm& term, std::size_t n, const WarningSink& warn) {
  std::vector<Count> mults;
  std::vector<Monomial2> args;
  for (const auto& slot : term.slots) {
    mults.push_back(slot.mult);
    args.push_back(slot.mono);
  }
  if (args.empty()) return NPoly::hbar_power(n, static_cast<std::uint32_t>(term.hbarPower)) * mpq_class(term.scalar);
  return expand_elementary(MultiIndex(std::move(mults)), args, n, warn) *
         NPoly::hbar_power(n, static_cast<std::uint32_t>(term.hbarPower)) * mpq_class(term.scalar);
}

namespace {

// Element of the tensor square: pairs of left/right exponent vectors.
using BiTerms = std::map<std::pair<NPoly::Exponents, NPoly::Exponents>, mpq_class>;

void add_bi(BiTerms& terms, NPoly::Exponents lhs, NPoly::Exponents rhs, const mpq_class& coeff) {
  auto [it, inserted] = terms.try_emplace({std::move(lhs), std::move(rhs)}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }
}

// sum_i d/dy_i (x) d/dx_i
BiTerms apply_bidifferential(const BiTerms& terms, std::size_t n) {
  BiTerms out;
  for (const auto& [key, coeff] : terms) {
    const auto& [lhs, rhs] = key;
    for (std::size_t c = 0; c < n; ++c) {
      if (lhs[n + c] == 0 || rhs[c] == 0) continue;
      auto dl = lhs;
      auto dr = rhs;
      --dl[n + c];
      --dr[c];
      add_bi(out, std::move(dl), std::move(dr), coeff * lhs[n + c] * rhs[c]);
    }
  }
  return out;
}

}  // namespace

NPoly moyal(const NPoly& f, const NPoly& g) {
  if (f.n() != g.n()) {
    throw InputError("moyal: polynomials live on " + std::to_string(f.n()) + " and " + std::to_string(g.n()) + " copies");
  }
  const std::size_t n = f.n();
  BiTerms current;
  for (const auto& [lhs, lc] : f.terms())
    for (const auto& [rhs, rc] : g.terms()) add_bi(current, lhs, rhs, lc * rc);

  NPoly out(n);
  mpq_class inverse_factorial = 1;
  for (std::uint32_t k = 0; !current.empty(); ++k) {
    if (k > 0) inverse_factorial /= k;
    NPoly::Exponents exps(2 * n + 1);
    for (const auto& [key, coeff] : current) {
      for (std::size_t v = 0; v < exps.size(); ++v) exps[v] = key.first[v] + key.second[v];
      exps[2 * n] += k;
      out.add_term(exps, coeff * inverse_factorial);
    }
    current = apply_bidifferential(current, n);
  }
  return out;
}

NPoly poisson(const NPoly& f, const NPoly& g) {
  if (f.n() != g.n()) throw InputError("poisson: polynomials live on different numbers of copies");
  if (!f.hbar_free() || !g.hbar_free()) throw InputError("poisson: inputs must not depend on hbar");
  NPoly out(f.n());
  for (std::size_t c = 0; c < f.n(); ++c) {
    out += f.d_x(c) * g.d_y(c);
    out -= f.d_y(c) * g.d_x(c);
  }
  return out;
}

std::string poly_diff(const NPoly& actual, const NPoly& expected, std::string_view actual_name,
                      std::string_view expected_name, std::size_t limit) {
  const NPoly delta = actual - expected;
  std::string out;
  std::size_t shown = 0;
  for (const auto& [exps, coeff] : delta.terms()) {
    if (shown == limit) {
      out += "  ... " + std::to_string(delta.terms().size() - limit) + " more\n";
      break;
    }
    auto lookup = [&](const NPoly& poly) {
      auto it = poly.terms().find(exps);
      return it == poly.terms().end() ? std::string("0") : it->second.get_str();
    };
    out += "  " + exponents_to_string(exps, actual.n()) + ": " + std::string(actual_name) + " " +
           lookup(actual) + ", " + std::string(expected_name) + " " + lookup(expected) + "\n";
    ++shown;
  }
  return out;
}

namespace {

NPoly expand_terms(const std::vector<ETerm>& terms, std::size_t n) {
  NPoly out(n);
  for (const auto& term : terms) out += expand_eterm(term, n);
  return out;
}

std::string describe_terms(const std::vector<ETerm>& terms) {
  std::string out;
  for (const auto& term : terms) out += "    " + to_string(term) + "\n";
  return out;
}

}  // namespace

VerifyReport verify(const ProblemSpec& spec, const VerifyOptions& options) {
  spec.validate();
  const std::size_t n = static_cast<std::size_t>(spec.n);
  VerifyReport report;

  StarOptions star_options;
  star_options.par = options.par;
  star_options.path = Path::Enumerate;
  StarExpansion enumerated = star_product(spec, star_options);
  star_options.path = Path::Lift;
  StarExpansion lifted = star_product(spec, star_options);
  if (options.dropScalars) {
    for (auto* expansion : {&enumerated, &lifted})
      for (auto& [order, terms] : expansion->byOrder)
        for (auto& term : terms) term.scalar = 1;
  }

  const NPoly left = expand_elementary(spec.alpha, spec.p, n);
  const NPoly right = expand_elementary(spec.beta, spec.q, n);
  const NPoly lhs = expand_terms(enumerated.terms(), n);
  const NPoly rhs = moyal(left, right);
  report.oracleIdentity.passed = lhs == rhs;
  if (!report.oracleIdentity.passed) {
    report.oracleIdentity.diff = poly_diff(lhs, rhs, "expansion", "moyal");
  }

  const auto classical = classical_product(spec.alpha, spec.p, spec.beta, spec.q, spec.n);
  std::vector<ETerm> sorted_classical = classical;
  std::stable_sort(sorted_classical.begin(), sorted_classical.end(), eterm_less);
  auto slice_it = enumerated.byOrder.find(0);
  const std::vector<ETerm> slice = slice_it == enumerated.byOrder.end() ? std::vector<ETerm>{} : slice_it->second;
  const bool symbolic = slice == sorted_classical;
  const NPoly slice_poly = expand_terms(slice, n);
  const NPoly classical_poly = expand_terms(classical, n);
  const NPoly commutative = left * right;
  const bool expanded = slice_poly == commutative && classical_poly == commutative;
  report.classicalLimit.passed = symbolic && expanded;
  if (!symbolic) {
    report.classicalLimit.diff += "  hbar^0 slice:\n" + describe_terms(slice) + "  classical product:\n" +
                                  describe_terms(sorted_classical);
  }
  if (!expanded) {
    report.classicalLimit.diff += poly_diff(slice_poly, commutative, "slice", "e_alpha(p)*e_beta(q)");
  }

  report.pathEquivalence.passed = enumerated.byOrder == lifted.byOrder;
  if (!report.pathEquivalence.passed) {
    report.pathEquivalence.diff = "  enumerate: " + render_text(enumerated) + "\n  lift:      " + render_text(lifted) + "\n";
  }
  return report;
}

}  // namespace qstar
