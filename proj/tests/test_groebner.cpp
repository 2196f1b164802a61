#include <gtest/gtest.h>

#include <random>

#include "amdeg/groebner.hpp"
#include "amdeg/parser.hpp"
#include "amdeg/varieties.hpp"
#include "support.hpp"

using namespace amdeg;

namespace {

Ideal make_ideal(std::size_t n, std::vector<std::string> gens, std::uint32_t p = kDefaultPrime) {
  return Ideal::parse(make_ring(n, p), gens);
}

// dim_K I_d by spanning all monomial multiples of the generators.
std::size_t degree_part_dim(const Ideal& I, int d) {
  DegreeBasis basis(I.num_vars(), d);
  Echelon e(basis.size(), I.ring()->field());
  for (const auto& g : I.generators())
    if (g.degree() <= d)
      for (const auto& m : monomials_of_degree(I.num_vars(), d - g.degree())) e.insert(basis.vector_of(g, m));
  return e.rank();
}

// Membership oracle: f lies in I_d iff adding f does not grow the span.
bool member_by_linear_algebra(const Polynomial& f, const Ideal& I) {
  const int d = f.degree();
  DegreeBasis basis(I.num_vars(), d);
  Echelon e(basis.size(), I.ring()->field());
  for (const auto& g : I.generators())
    if (g.degree() <= d)
      for (const auto& m : monomials_of_degree(I.num_vars(), d - g.degree())) e.insert(basis.vector_of(g, m));
  return !e.insert(basis.vector_of(f));
}

}  // namespace

TEST(NormalForm, DivisionByHand) {
  Ring r = make_ring(3);
  std::vector<Polynomial> basis = {parse_polynomial("x1^2 - x0*x2", r)};
  // x1^3 = x1 * (x1^2 - x0 x2) + x0 x1 x2
  EXPECT_EQ(normal_form(parse_polynomial("x1^3", r), basis), parse_polynomial("x0*x1*x2", r));
  EXPECT_TRUE(normal_form(parse_polynomial("x1^4 - x0^2*x2^2", r), basis).is_zero());
}

TEST(Groebner, TwistedCubicBasisIsTheThreeMinors) {
  Ideal I = scroll_ideal(ScrollType({3}));
  const auto& gb = I.groebner_basis();
  EXPECT_EQ(gb.size(), 3u);
  for (const auto& g : gb) EXPECT_EQ(g.degree(), 2);
}

TEST(Groebner, ReducedBasisIsIdempotent) {
  for (const Ideal& I : {scroll_ideal(ScrollType({2, 1})), veronese_ideal(), segre_p1p1p1(),
                         make_ideal(4, {"x0^2 + x1*x3", "x1^3 - x2^2*x3", "x0*x1*x2"})}) {
    const auto& gb = I.groebner_basis();
    Ideal again(I.ring(), gb);
    EXPECT_EQ(again.groebner_basis(), gb);
    for (const auto& g : gb) {
      EXPECT_EQ(g.leading_coefficient(), 1u);
      // No term of g is divisible by another leading monomial.
      for (const auto& h : gb) {
        if (&h == &g) continue;
        for (const auto& t : g.terms()) EXPECT_FALSE(h.leading_monomial().divides(t.mon));
      }
    }
  }
}

TEST(Groebner, HilbertFunctionMatchesMacaulayMatrix) {
  // dim I_d from the basis' standard monomials equals the rank of the
  // Macaulay matrix of the original generators.
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 6; ++trial) {
    Ring r = make_ring(4);
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(fixtures::random_form(r, 2 + (k == 2), 3, rng));
    Ideal I(r, gens);
    MonomialIdeal lt = leading_term_ideal(I);
    for (int d = 0; d <= 5; ++d) {
      std::size_t in_lt = 0;
      for (const auto& m : monomials_of_degree(4, d)) in_lt += lt.contains(m);
      ASSERT_EQ(in_lt, degree_part_dim(I, d)) << "trial " << trial << " degree " << d;
    }
  }
}

TEST(Groebner, MembershipAgreesWithLinearAlgebra) {
  std::mt19937_64 rng(11);
  Ideal I = scroll_ideal(ScrollType({2, 2}));
  Ring r = I.ring();
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial f = fixtures::random_form(r, 3, 2, rng);
    Polynomial inside = f * I.generators()[trial % I.generators().size()];
    EXPECT_TRUE(ideal_member(inside, I));
    Polynomial g = fixtures::random_form(r, 3, 5, rng);
    EXPECT_EQ(ideal_member(g, I), member_by_linear_algebra(g, I));
  }
}

TEST(Groebner, UnitAndZeroIdeals) {
  Ring r = make_ring(3);
  EXPECT_TRUE(make_ideal(3, {"x0", "1"}).is_unit());
  EXPECT_FALSE(make_ideal(3, {"x0*x1"}).is_unit());
  EXPECT_TRUE(Ideal::zero(r).is_zero());
  EXPECT_FALSE(ideal_member(parse_polynomial("x0", r), Ideal::zero(r)));
}

TEST(Groebner, NonHomogeneousInputRejected) {
  EXPECT_THROW(make_ideal(3, {"x0^2 + x1"}), RangeError);
}

TEST(Elimination, ProjectionOfTwistedCubicFromACoordinatePoint) {
  // The twisted cubic (1:s:s^2:s^3) projected from (0:1:0:0) is the
  // cuspidal cubic (1:s^2:s^3), i.e. x1^3 = x0 x2^2.
  Ideal I = scroll_ideal(ScrollType({3}));
  Ideal J = project_from_point(I, ProjectivePoint({0, 1, 0, 0}, kDefaultPrime));
  ASSERT_EQ(J.num_vars(), 3u);
  const auto& gb = J.groebner_basis();
  ASSERT_EQ(gb.size(), 1u);
  EXPECT_EQ(gb[0].degree(), 3);
  EXPECT_TRUE(ideal_member(parse_polynomial("x1^3 - x0*x2^2", J.ring()), J));
}

TEST(Elimination, ResultVanishesOnImagePoints) {
  // Points of the rational normal quartic, projected away from the last
  // coordinate, satisfy every eliminated generator.
  Ideal I = scroll_ideal(ScrollType({4}));
  Ideal J = eliminate(I, 1);
  const PrimeField& f = I.ring()->field();
  for (Coeff s = 1; s < 20; ++s) {
    std::vector<Coeff> pt;
    for (int k = 0; k < 4; ++k) pt.push_back(f.pow(s, static_cast<std::uint64_t>(k)));
    for (const auto& g : J.generators()) EXPECT_EQ(g.evaluate(pt), 0u);
  }
}

TEST(MinimalGenerators, DropsRedundantGenerators) {
  Ideal I = make_ideal(3, {"x0^2", "x0*x1", "x0^2*x2 + x0*x1*x2", "x1^3"});
  auto mg = minimal_generators(I);
  ASSERT_EQ(mg.generators.size(), 3u);
  EXPECT_EQ(mg.degree_counts, (std::vector<std::pair<int, int>>{{2, 2}, {3, 1}}));
  EXPECT_EQ(minimalized(I).groebner_basis(), I.groebner_basis());
}

TEST(MonomialIdeal, MinimalizeKeepsAntichain) {
  auto g = MonomialIdeal::minimalize({Monomial::from_exponents({2, 0}), Monomial::from_exponents({3, 1}),
                                      Monomial::from_exponents({0, 2}), Monomial::from_exponents({2, 0})});
  EXPECT_EQ(g.size(), 2u);
}

TEST(Groebner, ListedExamples) {
  Ring r = make_ring(3);
  Polynomial f = parse_polynomial("x0*x1 - x2^2", r);
  EXPECT_EQ(Ideal(r, {f}).groebner_basis(), std::vector<Polynomial>{f});
  auto unit = make_ideal(3, {"x0^2", "5"}).groebner_basis();
  ASSERT_EQ(unit.size(), 1u);
  EXPECT_TRUE(unit[0].is_constant());
  Ideal cubic = scroll_ideal(ScrollType({3}));
  std::vector<Polynomial> monic_minors;
  for (const auto& g : cubic.generators()) monic_minors.push_back(g.monic());
  for (const auto& g : cubic.groebner_basis())
    EXPECT_NE(std::find(monic_minors.begin(), monic_minors.end(), g), monic_minors.end()) << g;
}

TEST(Elimination, ListedExamples) {
  Ideal absent = make_ideal(4, {"x0^2 - x1*x2", "x1^3 - x0*x2^2"});
  Ideal e = eliminate(absent, 1);
  EXPECT_EQ(e.num_vars(), 3u);
  EXPECT_EQ(leading_term_ideal(e).generators(), leading_term_ideal(absent).generators());
  EXPECT_TRUE(eliminate(make_ideal(3, {"x2 - x0"}), 1).is_zero());
  // Swap x1 and x3 so the center (0:1:0:0) becomes the last coordinate.
  Ideal cubic = scroll_ideal(ScrollType({3}));
  LinearChange swap({{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}}, kDefaultPrime);
  std::vector<Polynomial> moved;
  for (const auto& g : cubic.generators()) moved.push_back(apply_linear_change(g, swap));
  Ideal image = eliminate(Ideal(cubic.ring(), moved), 1);
  ASSERT_EQ(image.groebner_basis().size(), 1u);
  // After the swap the image coordinates are (x0, x3, x2) of the curve
  // (s^3 : s^2 t : s t^2 : t^3), i.e. (s^3 : t^3 : s t^2).
  const PrimeField& f = cubic.ring()->field();
  for (Coeff s = 1; s < 6; ++s)
    for (Coeff t = 1; t < 6; ++t) {
      std::vector<Coeff> pt = {f.pow(s, 3), f.pow(t, 3), f.mul(s, f.mul(t, t))};
      EXPECT_EQ(image.groebner_basis()[0].evaluate(pt), 0u);
    }
  EXPECT_EQ(image.groebner_basis()[0].degree(), 3);
}

TEST(Elimination, RandomSmallIdealsMatchBruteForce) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 8; ++trial) {
    Ring r = make_ring(4);
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(fixtures::random_form(r, 1 + (k > 0), 3, rng));
    Ideal I(r, gens);
    Ideal E = eliminate(I, 1);
    for (const auto& g : E.generators()) ASSERT_TRUE(ideal_member(Polynomial::from_terms(r, g.terms()), I));
    for (int d = 1; d <= 4; ++d) {
      // dim (I_d ∩ K[x0,x1,x2]_d) = dim I_d + dim K[x0..x2]_d - dim (I_d + K[x0..x2]_d)
      DegreeBasis basis(4, d);
      Echelon span(basis.size(), r->field());
      for (const auto& g : I.generators())
        if (g.degree() <= d)
          for (const auto& m : monomials_of_degree(4, d - g.degree())) span.insert(basis.vector_of(g, m));
      const std::size_t dim_i = span.rank();
      std::size_t sub = 0;
      for (const auto& m : basis.monomials)
        if (m[3] == 0) {
          span.insert(basis.vector_of(Polynomial::monomial(r, m)));
          ++sub;
        }
      const std::size_t expected = dim_i + sub - span.rank();
      DegreeBasis small(3, d);
      Echelon e(small.size(), r->field());
      for (const auto& g : E.generators())
        if (g.degree() <= d)
          for (const auto& m : monomials_of_degree(3, d - g.degree())) e.insert(small.vector_of(g, m));
      ASSERT_EQ(e.rank(), expected) << "trial " << trial << " degree " << d;
    }
  }
}

TEST(LeadingTerms, ListedExamples) {
  Ring r = make_ring(3);
  Polynomial f = parse_polynomial("x0*x2 + x1^2", r);
  EXPECT_EQ(leading_term_ideal(Ideal(r, {f})).generators(), std::vector<Monomial>{f.leading_monomial()});
  auto unit = leading_term_ideal(make_ideal(3, {"1"})).generators();
  ASSERT_EQ(unit.size(), 1u);
  EXPECT_TRUE(unit[0].is_one());
  auto lt = leading_term_ideal(scroll_ideal(ScrollType({3}))).generators();
  std::vector<Monomial> want = {Monomial::from_exponents({0, 2, 0, 0}), Monomial::from_exponents({0, 1, 1, 0}),
                                Monomial::from_exponents({0, 0, 2, 0})};
  std::sort(lt.begin(), lt.end());
  std::sort(want.begin(), want.end());
  EXPECT_EQ(lt, want);
}

TEST(Membership, ListedExamples) {
  Ideal cubic = scroll_ideal(ScrollType({3}));
  for (const auto& g : cubic.generators()) EXPECT_TRUE(ideal_member(g, cubic));
  EXPECT_TRUE(ideal_member(Polynomial(cubic.ring()), cubic));
  EXPECT_FALSE(ideal_member(parse_polynomial("x0", cubic.ring()), cubic));
  EXPECT_EQ(degree_part_dim(cubic, 1), 0u);
}

TEST(MinimalGenerators, ListedExamples) {
  EXPECT_EQ(minimal_generators(make_ideal(4, {"x0^2 + x1*x2", "x2^2 - x0*x3"})).degree_counts,
            (std::vector<std::pair<int, int>>{{2, 2}}));
  Ideal veronese_proj = project_from_point(veronese_ideal(), ProjectivePoint({1, 0, 0, 1, 0, 1}, kDefaultPrime));
  EXPECT_EQ(minimal_generators(veronese_proj).degree_counts, (std::vector<std::pair<int, int>>{{3, 7}}));
  Ideal x1 = project_from_point(scroll_ideal(ScrollType({8})), ProjectivePoint({0, 0, 0, 0, 0, 0, 1, 0, 0}, kDefaultPrime));
  EXPECT_EQ(minimal_generators(x1).degree_counts, (std::vector<std::pair<int, int>>{{2, 19}, {3, 1}}));
}
