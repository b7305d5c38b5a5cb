#include "vfalg/parse.hpp"
#include "vfalg/svf.hpp"

#include "random_fields.hpp"

#include <gtest/gtest.h>

using namespace vfalg;

namespace {

Coords mixed() {
  return make_coords({{"u", Parity::even, 1},
                      {"v", Parity::even, 1},
                      {"th1", Parity::odd, 1},
                      {"th2", Parity::odd, 1}});
}

SuperVectorField F(const Coords& cs, const char* s) { return parse_field(cs, s); }
SuperPolynomial P(const Coords& cs, const char* s) { return parse_polynomial(cs, s); }

}  // namespace

TEST(Svf, BasicBrackets) {
  auto cs = mixed();
  EXPECT_EQ(bracket(F(cs, "D(u)"), F(cs, "u*D(u)")), F(cs, "D(u)"));
  EXPECT_TRUE(bracket(F(cs, "D(th1)"), F(cs, "D(th2)")).is_zero());
  // th1 D(th2) is even, D(th1) odd
  EXPECT_EQ(bracket(F(cs, "D(th1)"), F(cs, "th1*D(th2)")), F(cs, "D(th2)"));
  EXPECT_EQ(bracket(F(cs, "th1*D(th2)"), F(cs, "D(th1)")), F(cs, "-D(th2)"));
  // anticommutator of odd fields
  EXPECT_EQ(bracket(F(cs, "u*D(th1)"), F(cs, "th1*D(u)")), F(cs, "u*D(u) + th1*D(th1)"));
}

TEST(Svf, InhomogeneousBracketRejected) {
  auto cs = mixed();
  auto x = F(cs, "D(u) + D(th1)");
  EXPECT_FALSE(x.parity().has_value());
  EXPECT_THROW(bracket(x, F(cs, "D(v)")), Error);
  EXPECT_NO_THROW(bracket_split(x, F(cs, "D(v)")));
}

TEST(Svf, FieldText) {
  auto cs = mixed();
  auto x = F(cs, "-2*u*th1*D(v) + (u + v)*D(th2) + D(u)");
  EXPECT_EQ(x.to_string(), "D(u) - 2*u*th1*D(v) + (u + v)*D(th2)");
  EXPECT_EQ(parse_field(cs, x.to_string()), x);
  EXPECT_THROW(F(cs, "D(u)*u"), Error);
}

TEST(Svf, Divergence) {
  auto cs = make_coords({{"x1", Parity::even, 1}, {"x2", Parity::even, 1}});
  EXPECT_TRUE(divergence(F(cs, "x1*D(x2)")).is_zero());
  auto m = mixed();
  EXPECT_EQ(divergence(F(m, "u*D(u)")), P(m, "1"));
  EXPECT_TRUE(divergence(F(m, "th1*D(th2)")).is_zero());
  // Berezinian: scaling an odd coordinate contributes with the opposite sign.
  EXPECT_EQ(divergence(F(m, "th1*D(th1)")), P(m, "-1"));
  EXPECT_TRUE(divergence(F(m, "u*D(u) + th1*D(th1)")).is_zero());
}

TEST(Svf, DivBeta) {
  auto cs = make_coords({{"tau", Parity::odd, 2}, {"u1", Parity::even, 1}, {"th1", Parity::odd, 1}});
  Rational beta(1, 3);
  EXPECT_TRUE(div_beta(P(cs, "1"), beta, 1).is_zero());
  EXPECT_EQ(div_beta(P(cs, "tau"), beta, 1), P(cs, "-2/3"));
  EXPECT_EQ(div_beta(P(cs, "u1*th1"), beta, 1), P(cs, "2"));
  auto bad = make_coords({{"u1", Parity::even, 1}});
  EXPECT_THROW(div_beta(SuperPolynomial(bad), beta, 1), Error);
}

TEST(Svf, GradingOperator) {
  auto cs = make_coords({{"th1", Parity::odd, 1}, {"u1", Parity::even, 2}, {"vt1", Parity::odd, 3}});
  auto z = grading_operator(cs);
  EXPECT_EQ(z, F(cs, "th1*D(th1) + 2*u1*D(u1) + 3*vt1*D(vt1)"));
  EXPECT_EQ(bracket(z, F(cs, "D(vt1)")), F(cs, "-3*D(vt1)"));
  EXPECT_EQ(bracket(z, F(cs, "D(th1) + u1*D(vt1)")), F(cs, "-D(th1) - u1*D(vt1)"));
  auto x = F(cs, "th1*u1*D(u1)");
  EXPECT_EQ(x.weighted_degree().value, 1);
  EXPECT_EQ(bracket(z, x), x);
}

TEST(Svf, FormsCartanCalculus) {
  auto cs = make_coords({{"t", Parity::even, 1}, {"u", Parity::even, 1},
                         {"th1", Parity::odd, 1}, {"th2", Parity::odd, 1}});
  FormSpace fs(cs);
  auto& e = fs.ext();
  auto alpha = P(e, "dt + th1*dth1 + th2*dth2");
  EXPECT_TRUE(fs.lie_derivative(F(cs, "D(t)"), alpha).is_zero());
  EXPECT_EQ(fs.lie_derivative(F(cs, "u*D(u)"), P(e, "du")), P(e, "du"));
  EXPECT_EQ(fs.lie_derivative(F(cs, "D(u)"), P(e, "u*du")), P(e, "du"));
  EXPECT_EQ(fs.d(P(e, "u*t")), P(e, "t*du + u*dt"));
  // L_X f = X(f) on functions
  auto x = F(cs, "th1*D(u) + u*D(th2)");
  auto f = P(cs, "u^2*th2 + th1*th2");
  EXPECT_EQ(fs.lie_derivative(x, fs.function(f)), fs.function(x.apply(f)));
}

TEST(Svf, RandomizedIdentities) {
  auto cs = mixed();
  FormSpace fs(cs);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    Parity px = trial & 1 ? Parity::odd : Parity::even;
    Parity py = trial & 2 ? Parity::odd : Parity::even;
    Parity pz = trial & 4 ? Parity::odd : Parity::even;
    auto x = fixtures::random_field(cs, rng, px);
    auto y = fixtures::random_field(cs, rng, py);
    auto z = fixtures::random_field(cs, rng, pz);
    EXPECT_TRUE(super_jacobiator(x, y, z).is_zero());
    EXPECT_EQ(bracket(x, y), -sign_of(px, py) * bracket(y, x));
    EXPECT_EQ(divergence(bracket(x, y)),
              x.apply(divergence(y)) - sign_of(px, py) * y.apply(divergence(x)));

    auto w = fixtures::random_poly(fs.ext(), rng, Parity::even, 4, 3);
    EXPECT_TRUE(fs.d(fs.d(w)).is_zero());
    auto lhs = fs.lie_derivative(bracket(x, y), w);
    auto rhs = fs.lie_derivative(x, fs.lie_derivative(y, w)) -
               sign_of(px, py) * fs.lie_derivative(y, fs.lie_derivative(x, w));
    EXPECT_EQ(lhs, rhs);
    // L_X = [i_X, d] with |i_X| = |X| + 1
    auto cartan = fs.interior(x, fs.d(w)) -
                  sign_of(px + Parity::odd, Parity::odd) * fs.d(fs.interior(x, w));
    EXPECT_EQ(fs.lie_derivative(x, w), cartan);
  }
}

TEST(Svf, FieldSpanMembership) {
  auto cs = mixed();
  FieldSpan span(cs, {F(cs, "D(u)"), F(cs, "u*D(v)"), F(cs, "D(u) + u*D(v)")});
  EXPECT_EQ(span.dim(), 2u);
  EXPECT_TRUE(span.contains(F(cs, "3*D(u) - u*D(v)")));
  EXPECT_FALSE(span.contains(F(cs, "D(v)")));
  auto c = span.express(F(cs, "3*D(u) - u*D(v)"));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ((*c)[0], 3);
  EXPECT_EQ((*c)[1], -1);
  EXPECT_FALSE(span.express(F(cs, "D(th1)")).has_value());
}
