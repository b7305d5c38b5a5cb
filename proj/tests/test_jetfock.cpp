#include "vfalg/jetfock.hpp"
#include "vfalg/parse.hpp"

#include <gtest/gtest.h>

#include "random_fields.hpp"

using namespace vfalg;

namespace {

Coords line() { return make_coords({{"x", Parity::even, 1}}); }
Coords plane() { return make_coords({{"x", Parity::even, 1}, {"y", Parity::even, 1}}); }

Integer binom(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

SuperPolynomial derive(SuperPolynomial f, const MultiIndex& k) {
  for (std::size_t i = 0; i < k.size(); ++i) {
    for (int r = 0; r < k[i]; ++r) f = partial(f, i);
  }
  return f;
}

// T^n_m(xi)_{ab} from the Leibniz rule:
//   sum_{k < m, k + e_mu = n} C(m,k) d_{m-k} xi^mu delta_ab
//   + [n <= m] C(m,n) d_{m-n} d_nu xi^mu (T^nu_mu)_ab
SuperPolynomial leibniz_entry(const SuperVectorField& xi, const TensorRep& rep, const MultiIndex& n,
                              const MultiIndex& m, std::size_t a, std::size_t b) {
  const std::size_t dim = m.size();
  SuperPolynomial out(xi.coords());
  auto below = [&](const MultiIndex& k) {
    for (std::size_t i = 0; i < dim; ++i) {
      if (k[i] < 0 || k[i] > m[i]) return false;
    }
    return true;
  };
  auto coeff = [&](const MultiIndex& k) {
    Integer c = 1;
    for (std::size_t i = 0; i < dim; ++i) c *= binom(m[i], k[i]);
    return Rational(c);
  };
  auto diff = [&](const MultiIndex& k) {
    MultiIndex d(dim);
    for (std::size_t i = 0; i < dim; ++i) d[i] = m[i] - k[i];
    return d;
  };
  if (a == b) {
    for (std::size_t mu = 0; mu < dim; ++mu) {
      MultiIndex k = n;
      --k[mu];
      if (!below(k) || k == m) continue;
      out += coeff(k) * derive(xi[mu], diff(k));
    }
  }
  if (below(n)) {
    for (std::size_t nu = 0; nu < dim; ++nu) {
      for (std::size_t mu = 0; mu < dim; ++mu) {
        Rational t = rep.t(static_cast<int>(nu), static_cast<int>(mu))[a][b];
        if (t != 0) out += (coeff(n) * t) * derive(partial(xi[mu], nu), diff(n));
      }
    }
  }
  return out;
}

void expect_matches_leibniz(const SuperVectorField& xi, int p, const TensorRep& rep) {
  JetActionMatrix j = jet_matrices(xi, p, rep);
  EXPECT_TRUE(j.block_triangular());
  for (std::size_t m = 0; m < j.indices().size(); ++m) {
    for (std::size_t n = 0; n < j.indices().size(); ++n) {
      for (std::size_t a = 0; a < rep.dim(); ++a) {
        for (std::size_t b = 0; b < rep.dim(); ++b) {
          EXPECT_EQ(j.entry(n, m, a, b), leibniz_entry(xi, rep, j.indices()[n], j.indices()[m], a, b))
              << "n=" << n << " m=" << m << " xi=" << xi;
        }
      }
    }
  }
}

}  // namespace

TEST(JetFock, MultiIndices) {
  auto idx = multi_indices(2, 2);
  ASSERT_EQ(idx.size(), 6u);
  EXPECT_EQ(idx[0], (MultiIndex{0, 0}));
  EXPECT_EQ(idx[1], (MultiIndex{1, 0}));
  EXPECT_EQ(idx[5], (MultiIndex{0, 2}));
  EXPECT_EQ(multi_indices(3, 3).size(), 20u);
}

TEST(JetFock, TensorRepsSatisfyGlRelations) {
  EXPECT_NO_THROW(TensorRep::scalar_density(3, Rational(2, 3)));
  EXPECT_NO_THROW(TensorRep::vector(3));
  EXPECT_NO_THROW(TensorRep::covector(2));
  // E_{nu mu} without the sign violates the relations.
  std::vector<std::vector<RMatrix>> bad(2, std::vector<RMatrix>(2, RMatrix(2, std::vector<Rational>(2))));
  for (int mu = 0; mu < 2; ++mu) {
    for (int nu = 0; nu < 2; ++nu) bad[mu][nu][nu][mu] = 1;
  }
  EXPECT_THROW(TensorRep(2, 2, bad), Error);
}

TEST(JetFock, WorkedExamples) {
  auto cs = line();
  SuperPolynomial f = parse_polynomial(cs, "x^3 + 2*x");
  SuperVectorField xi(cs);
  xi.set(0, f);
  auto j = jet_matrices(xi, 1, TensorRep::scalar_density(1, 0));
  // phi_,1 -> -f' phi_,1 ; phi_,0 -> 0
  EXPECT_EQ(j.entry(1, 1, 0, 0), partial(f, 0));
  EXPECT_TRUE(j.entry(0, 1, 0, 0).is_zero());
  EXPECT_TRUE(j.entry(0, 0, 0, 0).is_zero());

  Rational lambda(3, 2);
  auto jd = jet_matrices(xi, 0, TensorRep::scalar_density(1, lambda));
  EXPECT_EQ(jd.entry(0, 0, 0, 0), lambda * partial(f, 0));
}

TEST(JetFock, ConstantFieldsActTrivially) {
  auto cs = plane();
  auto xi = parse_field(cs, "3*D(x) - 1/2*D(y)");
  for (int p = 0; p <= 3; ++p) {
    auto j = jet_matrices(xi, p, TensorRep::vector(2));
    for (std::size_t m = 0; m < j.indices().size(); ++m) {
      for (std::size_t n = 0; n < j.indices().size(); ++n) {
        for (std::size_t a = 0; a < 2; ++a) {
          for (std::size_t b = 0; b < 2; ++b) EXPECT_TRUE(j.entry(n, m, a, b).is_zero());
        }
      }
    }
  }
}

TEST(JetFock, MatricesMatchLeibnizClosedForm) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 6; ++trial) {
    auto xi1 = fixtures::random_field(line(), rng, Parity::even, 3, 3);
    expect_matches_leibniz(xi1, 3, TensorRep::scalar_density(1, Rational(trial, 2)));
    auto xi2 = fixtures::random_field(plane(), rng, Parity::even, 3, 3);
    expect_matches_leibniz(xi2, 2, TensorRep::vector(2));
    expect_matches_leibniz(xi2, 2, TensorRep::covector(2));
    expect_matches_leibniz(xi2, 1, TensorRep::scalar_density(2, Rational(-1, 3)));
  }
}

TEST(JetFock, RepresentationProperty) {
  auto cs = line();
  auto xi = parse_field(cs, "x^2*D(x)");
  auto eta = parse_field(cs, "x*D(x)");
  EXPECT_TRUE(rep_property_check(xi, eta, 2, TensorRep::scalar_density(1, 0)).ok);
  EXPECT_TRUE(rep_property_check(xi, xi, 2, TensorRep::scalar_density(1, 5)).ok);

  std::mt19937 rng(29);
  for (int trial = 0; trial < 5; ++trial) {
    for (int p = 0; p <= 2; ++p) {
      auto a1 = fixtures::random_field(line(), rng, Parity::even, 3, 3);
      auto b1 = fixtures::random_field(line(), rng, Parity::even, 3, 3);
      auto r1 = rep_property_check(a1, b1, p, TensorRep::scalar_density(1, Rational(trial - 2, 3)));
      EXPECT_TRUE(r1.ok) << (r1.residuals.empty() ? "" : r1.residuals.front());
      auto a2 = fixtures::random_field(plane(), rng, Parity::even, 3, 3);
      auto b2 = fixtures::random_field(plane(), rng, Parity::even, 3, 3);
      for (const auto& rep : {TensorRep::vector(2), TensorRep::covector(2),
                              TensorRep::scalar_density(2, Rational(1, 2))}) {
        auto r2 = rep_property_check(a2, b2, p, rep);
        EXPECT_TRUE(r2.ok) << rep.label() << ": " << (r2.residuals.empty() ? "" : r2.residuals.front());
      }
    }
  }
}

TEST(JetFock, ClassicalRealization) {
  auto cs = plane();
  auto d1 = classical_realization(parse_field(cs, "D(x)"), 0, TensorRep::scalar_density(2, 0));
  EXPECT_EQ(d1.transport[0], SuperPolynomial::constant(cs, 1));
  EXPECT_TRUE(d1.transport[1].is_zero());
  EXPECT_TRUE(d1.field.empty());

  auto l = line();
  Rational lambda(7, 3);
  auto rep = TensorRep::scalar_density(1, lambda);
  auto xi = parse_field(l, "x*D(x)");
  auto eta = parse_field(l, "D(x)");
  auto lx = classical_realization(xi, 0, rep);
  ASSERT_EQ(lx.field.size(), 1u);
  EXPECT_EQ(lx.field.begin()->second, SuperPolynomial::constant(l, -lambda));
  EXPECT_EQ(canonical_bracket(lx, classical_realization(eta, 0, rep)),
            classical_realization(bracket(xi, eta), 0, rep));

  std::mt19937 rng(8);
  for (int trial = 0; trial < 4; ++trial) {
    auto a = fixtures::random_field(cs, rng, Parity::even, 3, 3);
    auto b = fixtures::random_field(cs, rng, Parity::even, 3, 3);
    for (const auto& r : {TensorRep::vector(2), TensorRep::scalar_density(2, Rational(-2))}) {
      EXPECT_EQ(canonical_bracket(classical_realization(a, 2, r), classical_realization(b, 2, r)),
                classical_realization(bracket(a, b), 2, r));
    }
  }
}

TEST(JetFock, KoszulTateRegularSequences) {
  auto one = make_coords({{"phi", Parity::even, 1}});
  KTSetup s1{one, {SuperPolynomial::variable(one, 0)}, 5};
  auto r1 = kt_cohomology(s1, 2);
  EXPECT_TRUE(r1.delta_squared_zero);
  EXPECT_EQ(r1.total(0), 1u);
  EXPECT_EQ(r1.dims[0][0], 1u);
  EXPECT_EQ(r1.total(1), 0u);
  EXPECT_EQ(r1.total(2), 0u);

  auto two = make_coords({{"phi1", Parity::even, 1}, {"phi2", Parity::even, 1}});
  KTSetup s2{two, {SuperPolynomial::variable(two, 0), SuperPolynomial::variable(two, 1)}, 5};
  auto r2 = kt_cohomology(s2, 3);
  EXPECT_TRUE(r2.delta_squared_zero);
  EXPECT_EQ(r2.total(0), 1u);
  for (int g = 1; g <= 3; ++g) EXPECT_EQ(r2.total(g), 0u) << g;

  // Quadratic regular sequence: H^0 is C[phi1, phi2]/(phi1^2, phi2^2), dimension 4.
  KTSetup s3{two, {parse_polynomial(two, "phi1^2"), parse_polynomial(two, "phi2^2")}, 6};
  auto r3 = kt_cohomology(s3, 2);
  EXPECT_TRUE(r3.delta_squared_zero);
  EXPECT_EQ(r3.total(0), 4u);
  EXPECT_EQ(r3.total(1), 0u);
  EXPECT_EQ(r3.total(2), 0u);
}

TEST(JetFock, KoszulTateNonResolving) {
  auto one = make_coords({{"phi", Parity::even, 1}});
  KTSetup zero{one, {SuperPolynomial(one)}, 3};
  auto r = kt_cohomology(zero, 1);
  EXPECT_TRUE(r.delta_squared_zero);
  EXPECT_EQ(r.dims[1][1], 1u);  // phi* itself
  EXPECT_EQ(r.total(1), 3u);    // phi^k phi*, k = 0..2

  // phi1 phi2 twice is not regular: phi1* - phi2* is a cycle, not a boundary.
  auto two = make_coords({{"phi1", Parity::even, 1}, {"phi2", Parity::even, 1}});
  KTSetup s{two, {parse_polynomial(two, "phi1*phi2"), parse_polynomial(two, "phi1*phi2")}, 4};
  auto rs = kt_cohomology(s, 2);
  EXPECT_TRUE(rs.delta_squared_zero);
  EXPECT_GT(rs.dims[1][2], 0u);

  KTSetup bad{two, {parse_polynomial(two, "phi1 + phi1*phi2"), SuperPolynomial(two)}, 3};
  EXPECT_THROW(kt_complex(bad), Error);
}

TEST(JetFock, KoszulTateFermionicField) {
  // odd psi with E = psi: the antifield is even and can appear squared.
  auto cs = make_coords({{"psi", Parity::odd, 1}});
  KTSetup s{cs, {SuperPolynomial::variable(cs, 0)}, 4};
  auto cx = kt_complex(s);
  EXPECT_EQ((*cx.coords)[1].parity, Parity::even);
  auto r = kt_cohomology(s, 3);
  EXPECT_TRUE(r.delta_squared_zero);
  EXPECT_EQ(r.total(0), 1u);
  for (int g = 1; g <= 3; ++g) EXPECT_EQ(r.total(g), 0u);
}
