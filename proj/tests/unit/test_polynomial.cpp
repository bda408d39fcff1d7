#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "toric/polynomial.hpp"

using namespace toric;

TEST(Parse, CanonicalRoundTrip) {
  const auto f = parse_polynomial("a^2 + 2*a*b + 3*a^4*c^2");
  EXPECT_EQ(f.variables(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(to_string(f), "3*a^4*c^2 + a^2 + 2*a*b");
  EXPECT_TRUE(equal_aligned(parse_polynomial(to_string(f)), f));
}

TEST(Parse, CoefficientsAndSigns) {
  EXPECT_EQ(to_string(parse_polynomial("-x + 1/2*x - 3/6")), "-1/2*x - 1/2");
  EXPECT_EQ(to_string(parse_polynomial("x^-2*y")), "x^-2*y");
  EXPECT_EQ(to_string(parse_polynomial("x - x")), "0");
  EXPECT_EQ(to_string(parse_polynomial("2*x*x")), "2*x^2");
}

TEST(Parse, ExplicitVariableOrder) {
  const auto f = parse_polynomial("y + x", std::vector<std::string>{"x", "y", "z"});
  EXPECT_EQ(f.num_variables(), 3u);
  EXPECT_THROW(parse_polynomial("w", std::vector<std::string>{"x"}), ParseError);
}

TEST(Parse, Errors) {
  for (const char* bad : {"", "x +", "2**x", "x^", "1/0", "(x+1)", "x^y", "3x"})
    EXPECT_THROW(parse_polynomial(bad), ParseError) << bad;
}

TEST(Arithmetic, MultiplyAndPower) {
  const auto x = parse_polynomial("x + y");
  EXPECT_EQ(to_string(pow(x, 2)), "x^2 + 2*x*y + y^2");
  EXPECT_EQ(to_string(x * parse_polynomial("x - y")), "x^2 - y^2");
  const auto mixed = parse_polynomial("x") + parse_polynomial("z");
  EXPECT_EQ(mixed.variables(), (std::vector<std::string>{"x", "z"}));
}

TEST(Arithmetic, EvaluateAndDerivative) {
  const auto f = parse_polynomial("x^2*y + 3*y");
  EXPECT_EQ(f.evaluate(std::vector<Rational>{Rational(2), Rational(1, 3)}), Rational(7, 3));
  EXPECT_EQ(to_string(f.derivative(0)), "2*x*y");
  EXPECT_THROW(parse_polynomial("x^-1").evaluate(std::vector<Rational>{Rational(0)}), DomainError);
}

TEST(Support, Newton) {
  const auto f = parse_polynomial("x^2 + x*y + y^2 + x^3*y^3");
  const auto np = newton_polytope(f);
  EXPECT_EQ(np.vertices, (std::vector<LatticeVector>{{0, 2}, {2, 0}, {3, 3}}));
  EXPECT_EQ(support(f).size(), 4u);
  EXPECT_THROW(newton_polytope(LaurentPolynomial({"x"})), DomainError);
}

TEST(Support, NewtonMatchesOracleHull) {
  std::mt19937_64 rng(41);
  const std::vector<std::string> vars{"x", "y", "z"};
  for (int t = 0; t < 60; ++t) {
    const std::vector<std::string> v(vars.begin(), vars.begin() + 1 + t % 3);
    const auto f = oracle::random_polynomial(rng, v, 6, 4);
    if (f.is_zero()) continue;
    ASSERT_EQ(newton_polytope(f).vertices, oracle::hull_vertices(support(f))) << to_string(f);
  }
}

TEST(Support, MinkowskiSumOfProduct) {
  std::mt19937_64 rng(42);
  const std::vector<std::string> vars{"x", "y"};
  for (int t = 0; t < 40; ++t) {
    const auto f = oracle::random_polynomial(rng, vars, 4, 3);
    const auto g = oracle::random_polynomial(rng, vars, 4, 3);
    if (f.is_zero() || g.is_zero()) continue;
    std::vector<LatticeVector> sums;
    for (const auto& a : newton_polytope(f).vertices)
      for (const auto& b : newton_polytope(g).vertices) sums.push_back(a + b);
    ASSERT_EQ(newton_polytope(f * g).vertices, oracle::hull_vertices(sums));
  }
}

TEST(InitialForm, PicksMaximalFace) {
  const auto f = parse_polynomial("x^2 + x*y + y^2 + x^3*y^3");
  EXPECT_EQ(to_string(initial_form(f, {Rational(1), Rational(1)})), "x^3*y^3");
  EXPECT_EQ(to_string(initial_form(f, {Rational(-1), Rational(-1)})), "x^2 + x*y + y^2");
  EXPECT_EQ(to_string(initial_form(f, {Rational(-1), Rational(0)})), "y^2");
}

TEST(Substitute, MonomialMapTransformsExponents) {
  const auto f = parse_polynomial("x^2 + y^2");
  const IntegerMatrix a{{1, 1}, {0, 1}};
  EXPECT_EQ(to_string(substitute_monomial(f, a, {"u", "v"})), "u^2*v^2 + u^2");
  EXPECT_THROW(substitute_monomial(f, IntegerMatrix{{1, 1, 1}}, {"u"}), DomainError);
}

TEST(Substitute, Translate) {
  const auto f = parse_polynomial("x^2*y");
  EXPECT_EQ(to_string(translate(f, 0, "t", Rational(-1))), "t^2*y - 2*t*y + y");
  EXPECT_THROW(translate(parse_polynomial("x^-1"), 0, "t", Rational(1)), DomainError);
}

TEST(ToricIdeal, TwistedCubicSlice) {
  const auto basis = toric_ideal_basis(IntegerMatrix{{2, 1, 0}, {0, 1, 2}});
  EXPECT_EQ(basis.kernel, (std::vector<LatticeVector>{{1, -2, 1}}));
  ASSERT_EQ(basis.binomials.size(), 1u);
  EXPECT_EQ(to_string(basis.binomials[0]), "t1*t3 - t2^2");
}

TEST(ToricIdeal, KernelVectorsAnnihilate) {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> e(0, 3);
  for (int t = 0; t < 50; ++t) {
    IntegerMatrix a(2, 4);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 4; ++j) a(i, j) = e(rng);
    const auto basis = toric_ideal_basis(a);
    ASSERT_EQ(basis.kernel.size() + rank(a), 4u);
    for (const auto& l : basis.kernel) ASSERT_TRUE((a * l).is_zero());
  }
}
