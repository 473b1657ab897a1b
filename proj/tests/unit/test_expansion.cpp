#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "qstar/cubes.hpp"
#include "qstar/error.hpp"
#include "qstar/expansion.hpp"
#include "qstar/tables.hpp"

using namespace qstar;

namespace {

ProblemSpec worked() { return {{1, 1}, {2, 1}, {{2, 1}, {3, 1}}, {{3, 0}, {2, 2}}, 4}; }

std::vector<std::string> rendered(const std::vector<ETerm>& terms) {
  std::vector<std::string> out;
  for (const auto& t : terms) out.push_back(to_string(t));
  return out;
}

}  // namespace

TEST(ProblemSpec, Validation) {
  EXPECT_NO_THROW(worked().validate());
  ProblemSpec bad = worked();
  bad.p.pop_back();
  EXPECT_THROW(bad.validate(), InputError);
  bad = worked();
  bad.n = 2;
  EXPECT_THROW(bad.validate(), InputError);
  bad = worked();
  bad.n = 0;
  EXPECT_THROW(bad.validate(), InputError);
}

TEST(GammaToETerm, Examples) {
  const BTable table({{2, 1}, {3, 1}}, {{3, 0}, {2, 2}});
  const auto term = gamma_to_eterm(parse_cubical_matrix("0,1,0;0,1,0;0,0,0|0,0,0;0,0,0;0,0,1"), table);
  ASSERT_TRUE(term);
  EXPECT_EQ(to_string(*term), "2 e_(1,1,1)(x^3,x^4y^2,x^5y) h");
  EXPECT_EQ(term->scalar, 2);
  EXPECT_EQ(term->hbarPower, 1u);

  const auto classical = gamma_to_eterm(parse_cubical_matrix("0,1,0;0,1,0;0,0,1"), table);
  ASSERT_TRUE(classical);
  EXPECT_EQ(classical->scalar, 1);
  EXPECT_EQ(classical->hbarPower, 0u);

  EXPECT_FALSE(gamma_to_eterm(parse_cubical_matrix("0,1,0;0,1,0;0,0,0|0,0,0;0,0,0;0,0,0|0,0,0;0,0,0;0,0,1"), table));
  EXPECT_THROW(gamma_to_eterm(parse_cubical_matrix("0,1;0,1"), table), InputError);
}

TEST(GammaToETerm, ScalarIsPowerOfCoefficient) {
  // B_1(y, x^2) = 2x; two units there give 2^2.
  const BTable table({{0, 1}}, {{2, 0}});
  const auto term = gamma_to_eterm(parse_cubical_matrix("0,0;0,0|0,0;0,2"), table);
  ASSERT_TRUE(term);
  EXPECT_EQ(term->scalar, 4);
  EXPECT_EQ(to_string(*term), "4 e_(2)(x) h^2");
}

TEST(StarProduct, SmallExamples) {
  const ProblemSpec yx{{1}, {1}, {{0, 1}}, {{1, 0}}, 1};
  const auto result = star_product(yx);
  EXPECT_EQ(render_text(result), "e_(1)(xy) + e_(1)(1) h");
  EXPECT_EQ(result.term_count(0), 1u);
  EXPECT_EQ(result.term_count(1), 1u);

  const ProblemSpec xy{{1}, {1}, {{1, 0}}, {{0, 1}}, 1};
  EXPECT_EQ(render_text(star_product(xy)), "e_(1)(xy)");
  EXPECT_EQ(render_text(StarExpansion{}), "");
}

TEST(StarProduct, WorkedExampleCounts) {
  for (Path path : {Path::Lift, Path::Enumerate}) {
    StarOptions options;
    options.path = path;
    const auto result = star_product(worked(), options);
    EXPECT_EQ(result.term_count(0), 7u);
    EXPECT_EQ(result.term_count(1), 10u);
    EXPECT_EQ(result.term_count(2), 3u);
    EXPECT_EQ(result.byOrder.size(), 3u);
    EXPECT_EQ(result.bounds.S, 1u);
    EXPECT_EQ(result.bounds.M, 2u);
  }
  // Q(., 2) has 13 elements, of which only 3 survive assembly.
  const BTable table(worked().p, worked().q);
  std::size_t survive = 0;
  for (const auto& g : enumerate_q(worked().alpha, worked().beta, 4, 2)) survive += gamma_to_eterm(g, table).has_value();
  EXPECT_EQ(survive, 3u);
  for (std::uint64_t m = 3; m <= 6; ++m)
    for (const auto& g : enumerate_q(worked().alpha, worked().beta, 4, m)) EXPECT_FALSE(gamma_to_eterm(g, table));
}

TEST(StarProduct, ClassicalSliceIsClassicalProduct) {
  const auto spec = worked();
  const auto result = star_product(spec);
  auto classical = classical_product(spec.alpha, spec.p, spec.beta, spec.q, spec.n);
  std::stable_sort(classical.begin(), classical.end(), eterm_less);
  EXPECT_EQ(result.byOrder.at(0), classical);
}

TEST(StarProduct, TruncationIsSound) {
  const std::vector<ProblemSpec> specs = {
      worked(),
      {{1}, {1}, {{0, 3}}, {{3, 0}}, 2},
      {{1, 1}, {1}, {{0, 3}, {1, 0}}, {{2, 1}}, 3},
      {{2}, {1, 1}, {{1, 2}}, {{3, 0}, {0, 1}}, 3},
  };
  for (const auto& spec : specs) {
    StarOptions raw;
    raw.truncate = false;
    EXPECT_EQ(star_product(spec).byOrder, star_product(spec, raw).byOrder) << render_text(star_product(spec));
  }
}

TEST(StarProduct, DeterministicAcrossThreads) {
  const auto spec = worked();
  const auto serial = render_text(star_product(spec));
  for (unsigned threads : {2u, 5u}) {
    StarOptions options;
    options.par.threads = threads;
    EXPECT_EQ(render_text(star_product(spec, options)), serial);
    options.path = Path::Enumerate;
    EXPECT_EQ(render_text(star_product(spec, options)), serial);
  }
}

TEST(RenderJson, Structure) {
  const auto doc = nlohmann::json::parse(render_json(star_product(worked())));
  EXPECT_EQ(doc["params"]["alpha"], nlohmann::json::array({1, 1}));
  EXPECT_EQ(doc["params"]["p"], nlohmann::json::array({"x^2y", "x^3y"}));
  EXPECT_EQ(doc["params"]["n"], 4);
  EXPECT_EQ(doc["bounds"]["S"], 1);
  EXPECT_EQ(doc["bounds"]["M"], 2);
  EXPECT_EQ(doc["terms"].size(), 20u);
  EXPECT_EQ(doc["terms"][0]["m"], 0);
  EXPECT_EQ(doc["terms"][19]["scalar"], "9");
  EXPECT_EQ(doc["terms"][19]["slots"][0]["monomial"]["x"], 2);
}

TEST(ETermText, Rendering) {
  ETerm t;
  t.hbarPower = 2;
  EXPECT_EQ(to_string(t), "h^2");
  t.hbarPower = 0;
  t.scalar = -3;
  EXPECT_EQ(to_string(t), "-3");
  t.slots = {{1, {1, 1}}, {2, {0, 0}}};
  t.canonicalize();
  EXPECT_EQ(rendered({t}), std::vector<std::string>{"-3 e_(2,1)(1,xy)"});
}
