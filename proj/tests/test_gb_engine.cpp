#include <gtest/gtest.h>

#include "polyctrl/errors.hpp"
#include "support.hpp"

using namespace polyctrl;
using polyctrl::testing::P;
using polyctrl::testing::Rng;

namespace {

const Ring kXY({"x", "y"});

std::vector<Polynomial> polys(const Ring& ring, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(P(t, ring));
  return out;
}

GroebnerBasis gb(const Ring& ring, std::initializer_list<const char*> gens,
                 const MonomialOrder& order) {
  return buchberger(Ideal(ring, polys(ring, gens)), order);
}

TEST(SPolynomial, Examples) {
  const auto grevlex = MonomialOrder::grevlex(2);
  EXPECT_EQ(s_polynomial(P("x^2*y + 1", kXY), P("x*y^2 + 1", kXY), grevlex), P("y - x", kXY));
  EXPECT_TRUE(s_polynomial(P("x", kXY), P("x", kXY), grevlex).is_zero());
  EXPECT_TRUE(s_polynomial(P("x", kXY), P("y", kXY), MonomialOrder::lex(2)).is_zero());
  EXPECT_THROW(s_polynomial(Polynomial(kXY), P("x", kXY), grevlex), DomainError);
}

TEST(NormalForm, Examples) {
  const auto lex = MonomialOrder::lex(2);
  const auto divisors = polys(kXY, {"x - y"});
  EXPECT_EQ(normal_form(P("x^2", kXY), divisors, lex), P("y^2", kXY));
  EXPECT_EQ(normal_form(P("x^2 + 3", kXY), {}, lex), P("x^2 + 3", kXY));
  const auto self = polys(kXY, {"x*y - 1"});
  EXPECT_TRUE(normal_form(P("x*y - 1", kXY), self, MonomialOrder::grevlex(2)).is_zero());
}

TEST(NormalForm, RemainderHasNoDivisibleTerms) {
  Rng rng(3);
  const Ring ring = Ring::standard(3);
  const auto order = MonomialOrder::grevlex(3);
  for (int i = 0; i < 200; ++i) {
    std::vector<Polynomial> basis = {rng.nonzero_polynomial(ring, 2, 3),
                                     rng.nonzero_polynomial(ring, 2, 3)};
    const Polynomial f = rng.polynomial(ring, 4, 6);
    const Polynomial r = normal_form(f, basis, order);
    for (const auto& t : r.terms()) {
      for (const auto& g : basis) ASSERT_FALSE(leading_term(g, order).mono.divides(t.mono));
    }
  }
}

TEST(Buchberger, Examples) {
  for (const auto& order : {MonomialOrder::lex(2), MonomialOrder::grevlex(2)}) {
    EXPECT_EQ(gb(kXY, {"x^2 - 1", "x - 1"}, order).elements(), polys(kXY, {"x - 1"}));
    EXPECT_EQ(gb(kXY, {"x", "x + 1"}, order).elements(), polys(kXY, {"1"}));
  }
  // Checked against an independent computer-algebra run: {x^2, x*y, 2*y^2 - x}.
  const GroebnerBasis g =
      gb(kXY, {"x^3 - 2*x*y", "x^2*y - 2*y^2 + x"}, MonomialOrder::grevlex(2));
  const auto expected = polys(kXY, {"x^2", "x*y", "y^2 - 1/2*x"});
  ASSERT_EQ(g.size(), 3u);
  for (const auto& e : expected) {
    EXPECT_NE(std::find(g.elements().begin(), g.elements().end(), e), g.elements().end()) << e;
  }
}

TEST(Buchberger, EmptyAndZeroIdeal) {
  EXPECT_EQ(buchberger(Ideal(kXY), MonomialOrder::grevlex(2)).size(), 0u);
  EXPECT_EQ(buchberger(Ideal(kXY, polys(kXY, {"0"})), MonomialOrder::grevlex(2)).size(), 0u);
  EXPECT_THROW(Ideal(Ring({"s"}, true)), DomainError);
}

TEST(Buchberger, ReducedMonicSorted) {
  Rng rng(5);
  const Ring ring = Ring::standard(3);
  for (int i = 0; i < 100; ++i) {
    const auto order = rng.coin() ? MonomialOrder::lex(3) : MonomialOrder::grevlex(3);
    std::vector<Polynomial> gens;
    for (std::size_t g = 0, count = 1 + rng.index(3); g < count; ++g) {
      gens.push_back(rng.polynomial(ring, 3, 3));
    }
    const GroebnerBasis basis = buchberger(Ideal(ring, gens), order);
    const auto lms = basis.leading_monomials();
    for (std::size_t a = 0; a < basis.size(); ++a) {
      ASSERT_EQ(leading_term(basis.elements()[a], order).coeff, 1);
      if (a + 1 < basis.size()) {
        ASSERT_TRUE(order.less(lms[a], lms[a + 1]));
      }
      for (std::size_t b = 0; b < basis.size(); ++b) {
        if (a == b) continue;
        for (const auto& t : basis.elements()[a].terms()) ASSERT_FALSE(lms[b].divides(t.mono));
      }
    }
    // Uniqueness: shuffled and rescaled generators give the same basis.
    std::vector<Polynomial> other;
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) other.push_back(it->scaled(-3));
    ASSERT_EQ(buchberger(Ideal(ring, other), order).elements(), basis.elements());
  }
}

TEST(Buchberger, SoundOnRandomIdeals) {
  Rng rng(29);
  for (int i = 0; i < 200; ++i) {
    const Ring ring = Ring::standard(1 + rng.index(3));
    std::vector<Polynomial> gens;
    for (std::size_t g = 0, count = 1 + rng.index(3); g < count; ++g) {
      gens.push_back(rng.polynomial(ring, 3, 4));
    }
    const Ideal ideal(ring, gens);
    const GroebnerBasis lex = buchberger(ideal, MonomialOrder::lex(ring.nvars()));
    const GroebnerBasis grevlex = buchberger(ideal, MonomialOrder::grevlex(ring.nvars()));
    ASSERT_TRUE(polyctrl::testing::s_pairs_vanish(lex));
    ASSERT_TRUE(polyctrl::testing::s_pairs_vanish(grevlex));
    for (const auto& g : gens) {
      ASSERT_TRUE(lex.contains(g));
      ASSERT_TRUE(grevlex.contains(g));
    }
    ASSERT_EQ(ideal_dimension(lex).dim, ideal_dimension(grevlex).dim);
  }
}

TEST(ContainsOne, Examples) {
  const Ring x({"x"});
  EXPECT_TRUE(contains_one(gb(x, {"x", "x + 1"}, MonomialOrder::grevlex(1))));
  EXPECT_FALSE(contains_one(gb(x, {"x"}, MonomialOrder::grevlex(1))));
  EXPECT_FALSE(contains_one(buchberger(Ideal(x), MonomialOrder::grevlex(1))));
}

TEST(Dimension, Examples) {
  const Ring r3 = Ring::standard(3);
  const DimensionResult a = ideal_dimension(gb(r3, {"x1", "x2"}, MonomialOrder::grevlex(3)));
  EXPECT_EQ(a.dim, 1);
  EXPECT_EQ(a.codim, ExtInt(2));
  EXPECT_EQ(a.independent_set, std::vector<std::size_t>{2});

  const Ring r2 = Ring::standard(2);
  const DimensionResult b = ideal_dimension(gb(r2, {"x1*x2"}, MonomialOrder::grevlex(2)));
  EXPECT_EQ(b.dim, 1);
  EXPECT_EQ(b.codim, ExtInt(1));

  const Ring x({"x"});
  const DimensionResult c = ideal_dimension(gb(x, {"x", "x + 1"}, MonomialOrder::grevlex(1)));
  EXPECT_EQ(c.dim, -1);
  EXPECT_TRUE(c.codim.is_infinite());
  EXPECT_TRUE(c.independent_set.empty());

  const DimensionResult z = ideal_dimension(buchberger(Ideal(r3), MonomialOrder::grevlex(3)));
  EXPECT_EQ(z.dim, 3);
  EXPECT_EQ(z.codim, ExtInt(0));
}

TEST(Dimension, CoordinateSubspaces) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const Ring ring = Ring::standard(n);
    for (std::size_t r = 1; r <= n; ++r) {
      std::vector<Polynomial> gens;
      for (std::size_t v = 0; v < r; ++v) gens.push_back(Polynomial::variable(ring, v));
      for (const auto& order : {MonomialOrder::lex(n), MonomialOrder::grevlex(n)}) {
        const DimensionResult d = ideal_dimension(buchberger(Ideal(ring, gens), order));
        ASSERT_EQ(d.codim, ExtInt(static_cast<int>(r))) << "n=" << n << " r=" << r;
        ASSERT_EQ(d.independent_set.size(), n - r);
      }
    }
  }
}

TEST(Dimension, InfinityComparesAboveIntegers) {
  EXPECT_GT(ExtInt::infinity(), ExtInt(1000000));
  EXPECT_GE(ExtInt::infinity(), ExtInt(2));
  EXPECT_EQ(ExtInt::infinity().to_string(), "inf");
}

TEST(Eliminate, Examples) {
  const Ring xyt({"x", "y", "t"});
  const std::vector<std::size_t> drop_t = {2};
  const Ideal parabola = eliminate(Ideal(xyt, polys(xyt, {"x - t", "y - t^2"})), drop_t);
  EXPECT_TRUE(ideal_equal(parabola, Ideal(xyt, polys(xyt, {"y - x^2"}))));
  for (const auto& g : parabola.generators()) EXPECT_EQ(g.degree_in(2), 0);

  const std::vector<std::size_t> drop_y = {1};
  EXPECT_TRUE(ideal_equal(eliminate(Ideal(kXY, polys(kXY, {"x"})), drop_y),
                          Ideal(kXY, polys(kXY, {"x"}))));
  const Ring xt({"x", "t"});
  const std::vector<std::size_t> drop_t2 = {1};
  EXPECT_TRUE(eliminate(Ideal(xt, polys(xt, {"t*x - 1"})), drop_t2).is_zero());

  const std::vector<std::size_t> all = {0, 1};
  EXPECT_THROW(eliminate(Ideal(kXY, polys(kXY, {"x"})), all), DomainError);
}

TEST(Saturate, Examples) {
  auto sat = [](const char* gen, const char* f) {
    return saturate(Ideal(kXY, polys(kXY, {gen})), P(f, kXY));
  };
  EXPECT_TRUE(ideal_equal(sat("x^2*y", "x"), Ideal(kXY, polys(kXY, {"y"}))));
  EXPECT_TRUE(ideal_equal(sat("x", "y"), Ideal(kXY, polys(kXY, {"x"}))));
  EXPECT_TRUE(ideal_equal(sat("x*y - x", "x"), Ideal(kXY, polys(kXY, {"y - 1"}))));
  EXPECT_THROW(sat("x", "0"), DomainError);
}

TEST(Saturate, IdempotentAndContainsInput) {
  Rng rng(31);
  const Ring ring = Ring::standard(2);
  for (int i = 0; i < 60; ++i) {
    std::vector<Polynomial> gens = {rng.nonzero_polynomial(ring, 2, 3) *
                                        Polynomial::variable(ring, rng.index(2)),
                                    rng.polynomial(ring, 2, 3)};
    const Ideal ideal(ring, gens);
    const Polynomial f = rng.coin() ? P("x1*x2", ring) : rng.nonzero_polynomial(ring, 1, 2);
    const Ideal once = saturate(ideal, f);
    const Ideal twice = saturate(once, f);
    ASSERT_TRUE(ideal_equal(once, twice));
    const GroebnerBasis g = buchberger(once, MonomialOrder::grevlex(2));
    for (const auto& gen : ideal.generators()) ASSERT_TRUE(g.contains(gen));
  }
}

}  // namespace
