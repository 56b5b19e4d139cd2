#include <gtest/gtest.h>

#include "ringlab/constructions.hpp"
#include "ringlab/ideals.hpp"
#include "support/oracles.hpp"

using namespace ringlab;
using ringlab::testing::isomorphic;
using ringlab::testing::matrix_index;

namespace {

void expect_ring(const FiniteRing& r) {
  const auto v = check_ring_axioms(r);
  EXPECT_TRUE(v.empty()) << (v.empty() ? "" : v[0].describe());
}

}  // namespace

TEST(Zmod, Basics) {
  EXPECT_EQ(zmod(2).order(), 2u);
  EXPECT_EQ(units(zmod(4)).members.members(), (std::vector<Elem>{1, 3}));
  const auto z1 = zmod(1);
  EXPECT_EQ(z1.order(), 1u);
  EXPECT_EQ(z1.one(), z1.zero());
  EXPECT_THROW(zmod(2000), RingError);
  ConstructOptions big;
  big.max_order = 2000;
  EXPECT_EQ(zmod(1500, big).order(), 1500u);
}

TEST(GaloisField, Construction) {
  EXPECT_EQ(galois_field(2, 1), zmod(2));
  const auto gf4 = galois_field(2, 2, std::vector<std::size_t>{1, 1, 1});
  expect_ring(gf4);
  for (Elem a = 0; a < 4; ++a) EXPECT_EQ(gf4.pow(a, 4), a);
  EXPECT_EQ(gf4, galois_field(2, 2));
  EXPECT_THROW(galois_field(2, 2, std::vector<std::size_t>{1, 0, 1}), RingError);
  EXPECT_THROW(galois_field(4, 1), RingError);
  const auto gf9 = galois_field(3, 2);
  EXPECT_EQ(least_irreducible(3, 2), (std::vector<std::size_t>{1, 0, 1}));
  expect_ring(gf9);
  EXPECT_EQ(units(gf9).members.size(), 8u);
  const auto gf8 = galois_field(2, 3);
  EXPECT_EQ(least_irreducible(2, 3), (std::vector<std::size_t>{1, 1, 0, 1}));
  EXPECT_EQ(units(gf8).members.size(), 7u);
}

TEST(DirectProduct, Basics) {
  const auto r = direct_product(zmod(2), zmod(2));
  EXPECT_EQ(r.order(), 4u);
  EXPECT_EQ(idempotents(r).size(), 4u);
  EXPECT_TRUE(isomorphic(direct_product(zmod(2), zmod(3)), zmod(6)));
  EXPECT_TRUE(isomorphic(direct_product(zmod(4), zmod(1)), zmod(4)));
  EXPECT_FALSE(isomorphic(zmod(4), r));
}

TEST(MatrixRing, Basics) {
  const auto m2 = matrix_ring(zmod(2), 2);
  EXPECT_EQ(m2.order(), 16u);
  expect_ring(m2);
  EXPECT_EQ(matrix_ring(zmod(3), 1), zmod(3));
  const Elem e11 = matrix_index(2, {1, 0, 0, 0}), e12 = matrix_index(2, {0, 1, 0, 0}),
             e21 = matrix_index(2, {0, 0, 1, 0});
  EXPECT_EQ(m2.mul(e12, e21), e11);
  EXPECT_EQ(m2.label(e12), "[0,1;0,0]");
}

TEST(Triangular, UntwistedMatchesMatrixProduct) {
  const auto t = triangular_matrix_ring(zmod(3), 2);
  EXPECT_EQ(t.order(), 27u);
  expect_ring(t);
  const auto m = matrix_ring(zmod(3), 2);
  // (a, b, c) -> [[a, b], [0, c]].
  auto embed = [](Elem x) { return matrix_index(3, {x / 9, (x / 3) % 3, 0, x % 3}); };
  for (Elem x = 0; x < 27; ++x)
    for (Elem y = 0; y < 27; ++y) EXPECT_EQ(embed(t.mul(x, y)), m.mul(embed(x), embed(y)));
  EXPECT_EQ(triangular_matrix_ring(zmod(4), 1), zmod(4));
  const auto t3 = triangular_matrix_ring(zmod(2), 3);
  EXPECT_EQ(t3.order(), 64u);
  expect_ring(t3);
}

TEST(Triangular, TwistedDiffersFromUntwisted) {
  const auto gf4 = galois_field(2, 2);
  const auto frob = frobenius(gf4);
  const auto tw = triangular_matrix_ring(frob, 2);
  const auto plain = triangular_matrix_ring(gf4, 2);
  EXPECT_EQ(tw.order(), 64u);
  expect_ring(tw);
  bool differs = false;
  for (Elem x = 0; x < 64 && !differs; ++x)
    for (Elem y = 0; y < 64; ++y)
      if (tw.mul(x, y) != plain.mul(x, y)) {
        differs = true;
        break;
      }
  EXPECT_TRUE(differs);
  EXPECT_THROW(triangular_matrix_ring(RingEndomorphism{gf4, {0, 1, 1, 1}}, 2), RingError);
}

TEST(SkewSeries, Basics) {
  const auto s = truncated_power_series(zmod(2), 2);
  EXPECT_EQ(s.order(), 4u);
  EXPECT_EQ(s.mul(1, 1), 0u);  // x^2 = 0
  EXPECT_TRUE(isomorphic(s, trivial_extension(zmod(2), regular_bimodule(zmod(2)))));
  EXPECT_EQ(truncated_power_series(zmod(3), 1), zmod(3));
  const auto gf4 = galois_field(2, 2);
  const auto frob = frobenius(gf4);
  const auto sk = truncated_skew_power_series(frob, 2);
  expect_ring(sk);
  const Elem x = 1;  // (0, 1)
  for (Elem a = 0; a < 4; ++a) {
    const Elem ca = a * 4;  // constant a
    EXPECT_EQ(sk.mul(x, ca), sk.mul(gf4.mul(a, a) * 4, x));
  }
  EXPECT_FALSE(sk.is_commutative());
}

TEST(GeneralizedMatrix, Basics) {
  const auto z4 = zmod(4);
  EXPECT_EQ(generalized_matrix(z4, 2).order(), 256u);
  EXPECT_TRUE(isomorphic(generalized_matrix(zmod(2), 1), matrix_ring(zmod(2), 2)));
  EXPECT_EQ(generalized_matrix(zmod(2), 1), matrix_ring(zmod(2), 2));
  const auto m0 = generalized_matrix(zmod(2), 0);
  // [[0,1],[0,0]] * [[0,0],[1,0]] has zero cross-term in M_(0).
  EXPECT_EQ(m0.mul(matrix_index(2, {0, 1, 0, 0}), matrix_index(2, {0, 0, 1, 0})), 0u);
  const auto nc = matrix_ring(zmod(2), 2);
  EXPECT_THROW(generalized_matrix(nc, matrix_index(2, {0, 1, 0, 0})), RingError);
}

TEST(GeneralizedMatrix, EqualsMoritaOfRegularContext) {
  for (Elem s = 0; s < 4; ++s) {
    const auto z4 = zmod(4);
    EXPECT_EQ(generalized_matrix(z4, s), morita_ring(generalized_matrix_context(z4, s)));
  }
}

TEST(Morita, IdealContextOrder128) {
  const auto z4 = zmod(4);
  const auto spec = ideal_context(z4, ElementSet::full(4), ElementSet::of(4, {0, 2}));
  EXPECT_TRUE(morita_violations(spec).empty());
  const auto t = morita_ring(spec);
  EXPECT_EQ(t.order(), 128u);
  expect_ring(t);
}

TEST(Morita, ZeroPairingsGiveTrivialContext) {
  const auto z2 = zmod(2);
  MoritaContextSpec spec{z2, z2, regular_bimodule(z2), regular_bimodule(z2), {0, 0, 0, 0}, {0, 0, 0, 0}};
  const auto t = morita_ring(spec);
  EXPECT_EQ(t.order(), 16u);
  expect_ring(t);
  // Cross terms vanish: (0,n,0,0)(0,0,m,0) = 0.
  for (Elem n = 0; n < 2; ++n)
    for (Elem m = 0; m < 2; ++m) EXPECT_EQ(t.mul(matrix_index(2, {0, n, 0, 0}), matrix_index(2, {0, 0, m, 0})), 0u);
  EXPECT_EQ(t, generalized_matrix(z2, 0));
}

TEST(Morita, CorruptedPairingRejected) {
  const auto z4 = zmod(4);
  auto spec = ideal_context(z4, ElementSet::full(4), ElementSet::of(4, {0, 2}));
  spec.psi[1 * 2 + 1] = 1;  // psi(1, 2) = 1 breaks additivity and balance
  const auto v = morita_violations(spec);
  EXPECT_FALSE(v.empty());
  EXPECT_FALSE(v[0].witness.empty());
  EXPECT_THROW(morita_ring(spec), RingError);
}

TEST(Morita, TriangularContextEmbedsTrivialExtension) {
  // T(R, M) -> [[R, M], [0, R]] via (r, m) -> (r, m, 0, r).
  const auto z4 = zmod(4);
  const auto m = regular_bimodule(z4);
  const auto te = trivial_extension(z4, m);
  const auto tri = morita_ring(triangular_context(z4, m, z4));
  EXPECT_EQ(te.order(), 16u);
  EXPECT_EQ(tri.order(), 64u);
  // The zero corner has a single element, so (a, n, 0, b) encodes as (a * 4 + n) * 4 + b.
  auto embed = [](Elem x) { return (x / 4 * 4 + x % 4) * 4 + x / 4; };
  for (Elem a = 0; a < 16; ++a)
    for (Elem b = 0; b < 16; ++b) {
      EXPECT_EQ(embed(te.add(a, b)), tri.add(embed(a), embed(b)));
      EXPECT_EQ(embed(te.mul(a, b)), tri.mul(embed(a), embed(b)));
    }
  EXPECT_EQ(embed(te.one()), tri.one());
}

TEST(Bimodule, ViaMapsAndViolations) {
  const auto z4 = zmod(4), z2 = zmod(2);
  const std::vector<Elem> reduce{0, 1, 0, 1}, id2{0, 1};
  const auto n = bimodule_via_maps(z2, z2, z4, id2, reduce);
  EXPECT_TRUE(bimodule_violations(z2, n, z4).empty());
  const auto t = morita_ring(triangular_context(z2, n, z4));
  EXPECT_EQ(t.order(), 16u);
  expect_ring(t);
  // Z2 is not a Z4-Z4 bimodule through a non-additive map.
  const auto bad = bimodule_via_maps(z4, z2, z4, {0, 1, 1, 1}, reduce);
  EXPECT_FALSE(bimodule_violations(z4, bad, z4).empty());
}

TEST(TrivialExtension, Basics) {
  const auto z2 = zmod(2);
  const auto t = trivial_extension(z2, regular_bimodule(z2));
  EXPECT_EQ(t.order(), 4u);
  EXPECT_EQ(t.mul(1, 1), 0u);  // (0,1)^2
  EXPECT_TRUE(isomorphic(trivial_extension(zmod(3), zero_bimodule(zmod(3), zmod(3))), zmod(3)));
  EXPECT_EQ(trivial_extension(zmod(4), regular_bimodule(zmod(4))).order(), 16u);
}

TEST(Quotient, Basics) {
  const auto z4 = zmod(4);
  const auto q = quotient(z4, IdealSet(z4, ElementSet::of(4, {0, 2}), Side::TwoSided));
  EXPECT_EQ(q.ring, zmod(2));
  EXPECT_EQ(q.projection, (std::vector<Elem>{0, 1, 0, 1}));
  EXPECT_EQ(quotient(z4, IdealSet::zero(z4)).ring, z4);
  const auto t2 = triangular_matrix_ring(zmod(3), 2);
  const auto qj = quotient(t2, jacobson_radical(t2));
  EXPECT_EQ(qj.ring.order(), 9u);
  EXPECT_TRUE(isomorphic(qj.ring, direct_product(zmod(3), zmod(3))));
  const auto m2 = matrix_ring(zmod(2), 2);
  EXPECT_THROW(quotient(m2, ideal_generated(m2, matrix_index(2, {1, 0, 0, 0}), Side::Right)), RingError);
}

TEST(Subring, Basics) {
  const auto z4 = zmod(4);
  auto s = subring_generated(z4, {2}, false);
  EXPECT_EQ(s.members.members(), (std::vector<Elem>{0, 2}));
  EXPECT_FALSE(s.ring.has_value());
  s = subring_generated(z4, {z4.one()}, true);
  EXPECT_EQ(s.members.size(), 4u);
  const auto m2 = matrix_ring(zmod(2), 2);
  s = subring_generated(m2, {matrix_index(2, {1, 0, 0, 0}), matrix_index(2, {0, 0, 0, 1})}, true);
  EXPECT_EQ(s.members.size(), 4u);
  ASSERT_TRUE(s.ring.has_value());
  EXPECT_TRUE(isomorphic(*s.ring, direct_product(zmod(2), zmod(2))));
  // A corner e11 M2 e11 has its own identity e11.
  s = subring_generated(m2, {matrix_index(2, {1, 0, 0, 0})}, false);
  ASSERT_TRUE(s.ring.has_value());
  EXPECT_EQ(s.ring->order(), 2u);
}

TEST(Frobenius, Basics) {
  const auto gf4 = galois_field(2, 2);
  const auto f = frobenius(gf4);
  EXPECT_FALSE(f.is_identity());
  EXPECT_TRUE(f.compose(f).is_identity());
  EXPECT_TRUE(f.violations().empty());
  EXPECT_TRUE(frobenius(zmod(5)).is_identity());
  EXPECT_THROW(frobenius(zmod(4)), RingError);
}

TEST(ConstantDiagonal, Blocks) {
  const auto r3 = constant_diagonal_block(3), r4 = constant_diagonal_block(4);
  EXPECT_EQ(r3.order(), 16u);
  EXPECT_EQ(r4.order(), 128u);
  expect_ring(r3);
  expect_ring(r4);
  for (Elem i = 0; i < 128; ++i) EXPECT_EQ(constant_diagonal_index(4, constant_diagonal_matrix(4, i)), i);
  // Squares have the squared scalar on the diagonal.
  for (Elem a = 0; a < 16; ++a) {
    const auto sq = constant_diagonal_matrix(3, r3.mul(a, a));
    const auto m = constant_diagonal_matrix(3, a);
    EXPECT_EQ(sq[0], m[0] * m[0]);
  }
}

TEST(Gf4Twisted, ProductFormula) {
  const auto g = gf4_twisted_ring();
  const auto f = galois_field(2, 2);
  EXPECT_EQ(g.order(), 64u);
  expect_ring(g);
  EXPECT_FALSE(g.is_commutative());
  auto at = [](Elem x, Elem y, Elem z) { return (x * 4 + y) * 4 + z; };
  // (x,y,z)(x',y',z') = (xx', xy' + y x'^2, xz' + zx')
  for (Elem a = 0; a < 64; ++a)
    for (Elem b = 0; b < 64; ++b) {
      const Elem x = a / 16, y = (a / 4) % 4, z = a % 4;
      const Elem x2 = b / 16, y2 = (b / 4) % 4, z2 = b % 4;
      const Elem px = f.mul(x, x2);
      const Elem py = f.add(f.mul(x, y2), f.mul(y, f.mul(x2, x2)));
      const Elem pz = f.add(f.mul(x, z2), f.mul(z, x2));
      EXPECT_EQ(g.mul(a, b), at(px, py, pz));
    }
}

TEST(Caps, ConstructorsRefuseLargeOutputs) {
  EXPECT_THROW(matrix_ring(zmod(2), 4), RingError);
  EXPECT_THROW(generalized_matrix(zmod(6), 0), RingError);
  ConstructOptions small;
  small.max_order = 50;
  EXPECT_THROW(triangular_matrix_ring(zmod(2), 3, small), RingError);
}

TEST(Constructors, OutputsPassAxiomScan) {
  const auto z2 = zmod(2), z3 = zmod(3), z4 = zmod(4);
  for (const auto& r : {direct_product(z2, z3), truncated_power_series(z4, 3), generalized_matrix(z2, 0),
                        generalized_matrix(z3, 1), trivial_extension(z3, regular_bimodule(z3)),
                        opposite_ring(triangular_matrix_ring(z2, 3)), galois_field(5, 1), matrix_ring(z3, 2)})
    expect_ring(r);
}
