#include "qstar/expansion.hpp"

#include <algorithm>

#include <json.hpp>

#include "qstar/cubes.hpp"
#include "qstar/error.hpp"
#include "qstar/tables.hpp"

namespace qstar {

void ProblemSpec::validate() const {
  if (p.size() != alpha.size()) {
    throw InputError("p has " + std::to_string(p.size()) + " entries but alpha has " + std::to_string(alpha.size()));
  }
  if (q.size() != beta.size()) {
    throw InputError("q has " + std::to_string(q.size()) + " entries but beta has " + std::to_string(beta.size()));
  }
  if (n == 0) throw InputError("n must be positive");
  check_margins(alpha, beta, n);
}

std::size_t StarExpansion::term_count() const {
  std::size_t out = 0;
  for (const auto& [order, terms] : byOrder) out += terms.size();
  return out;
}

std::size_t StarExpansion::term_count(std::uint64_t order) const {
  auto it = byOrder.find(order);
  return it == byOrder.end() ? 0 : it->second.size();
}

std::vector<ETerm> StarExpansion::terms() const {
  std::vector<ETerm> out;
  for (const auto& [order, terms] : byOrder) out.insert(out.end(), terms.begin(), terms.end());
  return out;
}

std::optional<ETerm> gamma_to_eterm(const CubicalMatrix& gamma, const BTable& btable) {
  if (gamma.a() != btable.a() || gamma.b() != btable.b()) {
    throw InputError("cubical matrix shape does not match B(p,q)");
  }
  ETerm term;
  term.hbarPower = gamma.weight();
  for (std::size_t i = 1; i <= gamma.a(); ++i) term.slots.push_back({gamma.at(0, i, 0), btable.p_args()[i - 1]});
  for (std::size_t j = 1; j <= gamma.b(); ++j) term.slots.push_back({gamma.at(0, 0, j), btable.q_args()[j - 1]});
  for (std::size_t k = 0; k < gamma.level_count(); ++k) {
    for (std::size_t i = 1; i <= gamma.a(); ++i) {
      for (std::size_t j = 1; j <= gamma.b(); ++j) {
        const Count mult = gamma.at(k, i, j);
        if (mult == 0) continue;
        if (k > btable.depth(i - 1, j - 1)) return std::nullopt;
        const ScaledMonomial entry = btable.entry(i - 1, j - 1, k);
        mpz_class power;
        mpz_pow_ui(power.get_mpz_t(), entry.coeff.get_mpz_t(), mult);
        term.scalar *= power;
        term.slots.push_back({mult, entry.mono});
      }
    }
  }
  term.origin = gamma;
  term.canonicalize();
  return term;
}

StarExpansion star_product(const ProblemSpec& spec, const StarOptions& options) {
  spec.validate();
  const BTable btable(spec.p, spec.q);
  StarExpansion out;
  out.params = spec;
  out.bounds.S = max_support(spec.p, spec.q);
  out.bounds.M = max_order(spec.alpha, spec.beta, spec.n, out.bounds.S);
  out.bounds.effectiveS = max_contributing_support(btable);
  out.bounds.effectiveM = max_contributing_order(spec.alpha, spec.beta, spec.n, btable);

  std::uint64_t last = out.bounds.effectiveM;
  std::optional<std::size_t> max_level = out.bounds.effectiveS;
  if (!options.truncate) {
    last = options.raw_order_cap != 0 ? options.raw_order_cap : btable.max_depth() * spec.n + 2;
    max_level.reset();
  }

  for (std::uint64_t m = 0; m <= last; ++m) {
    const auto gammas = options.path == Path::Enumerate
                            ? enumerate_q(spec.alpha, spec.beta, spec.n, m, options.par, max_level)
                            : lift_all(spec.alpha, spec.beta, spec.n, m, options.par, max_level);
    auto assembled = parallel_map(gammas.size(), options.par,
                                  [&](std::size_t idx) { return gamma_to_eterm(gammas[idx], btable); });
    std::vector<ETerm> terms;
    for (auto& term : assembled) {
      if (term) terms.push_back(std::move(*term));
    }
    if (terms.empty()) continue;
    std::stable_sort(terms.begin(), terms.end(), eterm_less);
    out.byOrder.emplace(m, std::move(terms));
  }
  return out;
}

std::string render_text(const StarExpansion& expansion) {
  std::string out;
  for (const auto& [order, terms] : expansion.byOrder) {
    for (const auto& term : terms) {
      if (!out.empty()) out += " + ";
      out += to_string(term);
    }
  }
  return out;
}

std::string render_json(const StarExpansion& expansion) {
  using nlohmann::ordered_json;
  auto monomials = [](const std::vector<Monomial2>& list) {
    ordered_json out = ordered_json::array();
    for (const auto& mono : list) out.push_back(to_string(mono));
    return out;
  };
  const auto& spec = expansion.params;
  ordered_json doc;
  doc["params"] = {{"alpha", spec.alpha.entries()},
                   {"beta", spec.beta.entries()},
                   {"p", monomials(spec.p)},
                   {"q", monomials(spec.q)},
                   {"n", spec.n}};
  doc["bounds"] = {{"S", expansion.bounds.S},
                   {"M", expansion.bounds.M},
                   {"effective", {{"S", expansion.bounds.effectiveS}, {"M", expansion.bounds.effectiveM}}}};
  ordered_json terms = ordered_json::array();
  for (const auto& term : expansion.terms()) {
    ordered_json slots = ordered_json::array();
    for (const auto& slot : term.slots) {
      slots.push_back({{"mult", slot.mult}, {"monomial", {{"x", slot.mono.xExp}, {"y", slot.mono.yExp}}}});
    }
    terms.push_back({{"m", term.hbarPower}, {"scalar", term.scalar.get_str()}, {"slots", std::move(slots)}});
  }
  doc["terms"] = std::move(terms);
  return doc.dump(2);
}

}  // namespace qstar
