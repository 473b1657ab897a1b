#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "brute.hpp"
#include "qstar/algebra.hpp"
#include "qstar/error.hpp"

using namespace qstar;

namespace {

Monomial2 mono(Exponent x, Exponent y) { return {x, y}; }

std::vector<std::string> rendered(const BTable& table) {
  std::vector<std::string> out;
  for (std::size_t pos = 0; pos < table.flat_length(); ++pos) out.push_back(to_string(table.flat_entry(pos)));
  return out;
}

}  // namespace

TEST(ParseMonomial, Basics) {
  EXPECT_EQ(parse_monomial("x^2y"), (ScaledMonomial{1, mono(2, 1)}));
  EXPECT_EQ(parse_monomial("1"), (ScaledMonomial{1, mono(0, 0)}));
  EXPECT_EQ(parse_monomial("3x^4"), (ScaledMonomial{3, mono(4, 0)}));
  EXPECT_EQ(parse_monomial("-y"), (ScaledMonomial{-1, mono(0, 1)}));
  EXPECT_EQ(parse_monomial("+12xy^3"), (ScaledMonomial{12, mono(1, 3)}));
}

TEST(ParseMonomial, BigExponentsAndCoefficients) {
  const auto term = parse_monomial("123456789012345678901234567890x^40");
  EXPECT_EQ(term.coeff, mpz_class("123456789012345678901234567890"));
  EXPECT_EQ(term.mono.xExp, 40u);
}

TEST(ParseMonomial, CanonicalRoundTrip) {
  for (const char* text : {"1", "x", "y", "xy", "x^2y", "3x^4", "-y", "x^3y^2", "-7", "2xy^5"}) {
    EXPECT_EQ(to_string(parse_monomial(text)), text);
  }
  EXPECT_EQ(to_string(parse_monomial("x^1y^1")), "xy");
  EXPECT_EQ(to_string(parse_monomial("1x")), "x");
  EXPECT_EQ(to_string(parse_monomial("x^0")), "1");
}

TEST(ParseMonomial, ErrorsCarryOffsets) {
  struct Case {
    const char* text;
    std::size_t offset;
  };
  for (const Case& c : {Case{"", 0}, Case{"x^", 2}, Case{"x^-2", 2}, Case{"2z", 1}, Case{"yx", 1}, Case{"-", 1},
                        Case{"x y", 1}}) {
    try {
      parse_monomial(c.text);
      ADD_FAILURE() << "accepted '" << c.text << "'";
    } catch (const ParseError& e) {
      EXPECT_EQ(e.offset(), c.offset) << c.text << ": " << e.what();
    }
  }
}

TEST(ParseMonomial, NegativeExponentMessage) {
  try {
    parse_monomial("x^-1");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("negative exponent"), std::string::npos);
  }
}

TEST(ParseMonomial, Lists) {
  const auto list = parse_monomial_list("x^2y,3x^3y");
  ASSERT_EQ(list.size(), 2u);
  EXPECT_EQ(list[1], (ScaledMonomial{3, mono(3, 1)}));
  EXPECT_EQ(parse_bare_monomials("x^3,x^2y^2").size(), 2u);
  EXPECT_THROW(parse_bare_monomials("2x"), InputError);
  EXPECT_THROW(parse_monomial_list("x,,y"), ParseError);
}

TEST(StarPair, Examples) {
  const auto terms = star_pair(mono(2, 1), mono(3, 0));
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_EQ(terms[0].k, 0u);
  EXPECT_EQ(terms[0].term, (ScaledMonomial{1, mono(5, 1)}));
  EXPECT_EQ(terms[1].k, 1u);
  EXPECT_EQ(terms[1].term, (ScaledMonomial{3, mono(4, 0)}));

  const auto classical = star_pair(mono(1, 0), mono(0, 1));
  ASSERT_EQ(classical.size(), 1u);
  EXPECT_EQ(classical[0].term, (ScaledMonomial{1, mono(1, 1)}));

  const auto yx = star_pair(mono(0, 1), mono(1, 0));
  ASSERT_EQ(yx.size(), 2u);
  EXPECT_EQ(yx[1].term, (ScaledMonomial{1, mono(0, 0)}));
}

TEST(StarPair, PropertiesAgainstFactorialFormula) {
  for (Exponent c = 0; c <= 4; ++c)
    for (Exponent d = 0; d <= 6; ++d)
      for (Exponent f = 0; f <= 6; ++f)
        for (Exponent g = 0; g <= 3; ++g) {
          const auto terms = star_pair(mono(c, d), mono(f, g));
          ASSERT_EQ(terms.size(), std::min(d, f) + 1);
          for (std::size_t k = 0; k < terms.size(); ++k) {
            EXPECT_EQ(terms[k].k, k);
            EXPECT_EQ(terms[k].term.coeff, brute::moyal_coefficient(d, f, k));
            EXPECT_EQ(terms[k].term.mono, mono(c + f - k, d + g - k));
            EXPECT_EQ(terms[k].term.mono.degree(), c + d + f + g - 2 * k);
            EXPECT_EQ(b_term(mono(c, d), mono(f, g), k), terms[k].term);
          }
          EXPECT_EQ(terms[0].term.coeff, 1);
          EXPECT_TRUE(b_term(mono(c, d), mono(f, g), terms.size()).is_zero());
        }
}

TEST(BTerm, Examples) {
  EXPECT_EQ(b_term(mono(2, 1), mono(2, 2), 1), (ScaledMonomial{2, mono(3, 2)}));
  EXPECT_EQ(b_term(mono(1, 0), mono(0, 1), 0), (ScaledMonomial{1, mono(1, 1)}));
  EXPECT_TRUE(b_term(mono(2, 1), mono(3, 0), 2).is_zero());
  EXPECT_EQ(b_term(mono(2, 1), mono(3, 0), 2), (ScaledMonomial{0, mono(9, 9)}));
}

TEST(BTable, WorkedExample) {
  const BTable table = build_b({mono(2, 1), mono(3, 1)}, {mono(3, 0), mono(2, 2)});
  const std::vector<std::string> expected = {"x^2y", "x^3y", "x^3",  "x^2y^2", "x^5y",  "3x^4",
                                             "x^4y^3", "2x^3y^2", "x^6y", "3x^5", "x^5y^3", "2x^4y^2"};
  EXPECT_EQ(rendered(table), expected);
  EXPECT_EQ(b_length({mono(2, 1), mono(3, 1)}, {mono(3, 0), mono(2, 2)}), 12u);
  EXPECT_EQ(table.max_depth(), 1u);
  EXPECT_EQ(table.depth(0, 0), 1u);
}

TEST(BTable, SmallCases) {
  EXPECT_EQ(rendered(build_b({mono(1, 0)}, {mono(0, 1)})), (std::vector<std::string>{"x", "y", "xy"}));
  EXPECT_EQ(rendered(build_b({mono(0, 1)}, {mono(1, 0)})), (std::vector<std::string>{"y", "x", "xy", "1"}));
  EXPECT_EQ(b_length({mono(0, 1), mono(1, 1)}, {mono(1, 0), mono(2, 0)}), 12u);
}

TEST(BTable, FlatOrderAndLengthFormula) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Exponent> exp(0, 6);
  std::uniform_int_distribution<std::size_t> len(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Monomial2> p(len(rng)), q(len(rng));
    for (auto& m : p) m = mono(exp(rng), exp(rng));
    for (auto& m : q) m = mono(exp(rng), exp(rng));
    const BTable table(p, q);
    std::size_t formula = p.size() + q.size();
    for (const auto& pi : p)
      for (const auto& qj : q) formula += std::min(pi.yExp, qj.xExp) + 1;
    EXPECT_EQ(table.flat_length(), formula);
    EXPECT_EQ(b_length(p, q), formula);

    std::size_t pos = 0;
    for (std::size_t i = 0; i < p.size(); ++i, ++pos) EXPECT_EQ(table.flat_entry(pos), (ScaledMonomial{1, p[i]}));
    for (std::size_t j = 0; j < q.size(); ++j, ++pos) EXPECT_EQ(table.flat_entry(pos), (ScaledMonomial{1, q[j]}));
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < q.size(); ++j) {
        EXPECT_EQ(table.entry(i, j, 0).coeff, 1);
        for (std::size_t k = 0; k <= table.depth(i, j); ++k, ++pos) {
          EXPECT_EQ(table.flat_entry(pos), b_term(p[i], q[j], k));
          const auto slot = table.flat_order()[pos];
          EXPECT_EQ(slot.kind, BTable::SlotKind::Pair);
          EXPECT_EQ(slot.i, i);
          EXPECT_EQ(slot.j, j);
          EXPECT_EQ(slot.k, k);
        }
      }
    EXPECT_EQ(pos, table.flat_length());
  }
}
