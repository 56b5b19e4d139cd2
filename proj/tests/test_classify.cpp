#include <gtest/gtest.h>

#include "ringlab/classify.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/ideals.hpp"
#include "support/oracles.hpp"

using namespace ringlab;
using ringlab::testing::matrix_index;

namespace {

const Elem kE11 = matrix_index(2, {1, 0, 0, 0});
const Elem kE12 = matrix_index(2, {0, 1, 0, 0});
const Elem kE21 = matrix_index(2, {0, 0, 1, 0});

FiniteRing m2z2() { return matrix_ring(zmod(2), 2); }
FiniteRing t2z3() { return triangular_matrix_ring(zmod(3), 2); }

FiniteRing e39() {
  const auto z4 = zmod(4);
  return morita_ring(ideal_context(z4, ElementSet::full(4), ElementSet::of(4, {0, 2})));
}

void expect_replays(const FiniteRing& r, const std::string& name, const Verdict& v) {
  EXPECT_TRUE(reverify_witness(r, name, v)) << name;
}

}  // namespace

TEST(Periodic, AlwaysTrueWithWitnesses) {
  const auto z4 = zmod(4);
  const auto v = is_periodic(z4);
  EXPECT_TRUE(v.holds);
  ASSERT_EQ(v.witness.size(), 4u);
  EXPECT_EQ(v.witness[2], (std::vector<std::uint64_t>{2, 2, 3}));
  expect_replays(z4, "periodic", v);
  const auto z1 = zmod(1);
  EXPECT_EQ(is_periodic(z1).witness[0], (std::vector<std::uint64_t>{0, 1, 2}));
}

TEST(Potent, FrozenVerdicts) {
  EXPECT_TRUE(is_potent_ring(zmod(6)).holds);
  EXPECT_TRUE(is_potent_ring(galois_field(2, 2)).holds);
  const auto v = is_potent_ring(zmod(4));
  EXPECT_FALSE(v.holds);
  ASSERT_TRUE(v.certificate);
  EXPECT_EQ(v.certificate->elements, (std::vector<std::uint64_t>{2}));
  EXPECT_TRUE(reverify(zmod(4), *v.certificate));
  EXPECT_FALSE(reverify(zmod(4), Certificate{"non-potent", {3}, ""}));
}

TEST(WeaklyPeriodic, FrozenVerdicts) {
  EXPECT_TRUE(is_weakly_periodic(m2z2()).holds);
  EXPECT_TRUE(is_weakly_periodic(m2z2(), true).holds);
  const auto v = is_weakly_periodic(zmod(4));
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.witness[2], (std::vector<std::uint64_t>{2, 0}));
  const auto gf = galois_field(3, 2);
  const auto p = is_weakly_periodic(gf);
  for (const auto& row : p.witness) EXPECT_EQ(row[0], row[1]);
}

TEST(StronglyPeriodic, FrozenVerdicts) {
  EXPECT_TRUE(is_strongly_periodic(e39()).holds);
  EXPECT_TRUE(is_strongly_periodic(zmod(4)).holds);
  const auto v = is_strongly_periodic(m2z2());
  EXPECT_FALSE(v.holds);
  ASSERT_TRUE(v.certificate);
  EXPECT_TRUE(reverify(m2z2(), *v.certificate));
  EXPECT_TRUE(reverify(m2z2(), Certificate{"no-potent-prime-radical-decomposition", {kE12}, ""}));
  EXPECT_FALSE(reverify(m2z2(), Certificate{"no-potent-prime-radical-decomposition", {kE11}, ""}));
}

TEST(TwoPrimal, FrozenVerdicts) {
  EXPECT_TRUE(is_2_primal(constant_diagonal_block(4)).holds);
  const auto v = is_2_primal(m2z2());
  EXPECT_FALSE(v.holds);
  EXPECT_TRUE(reverify(m2z2(), *v.certificate));
  EXPECT_TRUE(reverify(m2z2(), Certificate{"nilpotent-outside-prime-radical", {kE12}, ""}));
  for (const auto& r : {zmod(8), direct_product(zmod(2), zmod(4)), truncated_power_series(zmod(2), 3)})
    EXPECT_TRUE(is_2_primal(r).holds);
}

TEST(NilSemicommutative, ConstantDiagonalBlockWitness) {
  const auto r4 = constant_diagonal_block(4);
  const auto v = is_nil_semicommutative(r4);
  EXPECT_FALSE(v.holds);
  EXPECT_TRUE(reverify(r4, *v.certificate));
  // a = e12 + e13, x = e23, b = e24 + e34.
  auto m = [](std::initializer_list<std::pair<int, int>> entries) {
    std::vector<Elem> mat(16, 0);
    for (auto [i, j] : entries) mat[(i - 1) * 4 + (j - 1)] = 1;
    return constant_diagonal_index(4, mat);
  };
  const Elem a = m({{1, 2}, {1, 3}}), x = m({{2, 3}}), b = m({{2, 4}, {3, 4}});
  EXPECT_EQ(r4.mul(a, b), 0u);
  EXPECT_EQ(r4.mul(r4.mul(a, x), b), m({{1, 4}}));
  EXPECT_TRUE(reverify(r4, Certificate{"nil-semicommutative-violation", {a, x, b}, ""}));
  EXPECT_FALSE(reverify(r4, Certificate{"nil-semicommutative-violation", {a, 0, b}, ""}));
  EXPECT_TRUE(is_nil_semicommutative(zmod(8)).holds);
  EXPECT_TRUE(is_nil_semicommutative(t2z3()).holds);
}

TEST(Abelian, FrozenVerdicts) {
  const auto g = gf4_twisted_ring();
  EXPECT_TRUE(is_abelian_ring(g).holds);
  EXPECT_FALSE(is_commutative_ring(g).holds);
  const auto v = is_abelian_ring(m2z2());
  EXPECT_FALSE(v.holds);
  EXPECT_TRUE(reverify(m2z2(), *v.certificate));
  EXPECT_TRUE(reverify(m2z2(), Certificate{"non-central-idempotent", {kE11, kE12}, ""}));
  EXPECT_TRUE(is_abelian_ring(zmod(6)).holds);
}

TEST(JClean, FrozenVerdicts) {
  const auto t2 = t2z3();
  EXPECT_TRUE(is_J_clean_like(t2).holds);
  const auto jc = is_J_clean(t2);
  EXPECT_FALSE(jc.holds);
  EXPECT_TRUE(reverify(t2, *jc.certificate));
  EXPECT_TRUE(is_J_clean(zmod(2)).holds);
  const auto z4 = is_J_clean(zmod(4));
  EXPECT_TRUE(z4.holds);
  EXPECT_EQ(z4.witness, (std::vector<std::vector<std::uint64_t>>{{0, 0}, {1, 1}, {2, 0}, {3, 1}}));
  const auto m = is_J_clean_like(m2z2());
  EXPECT_FALSE(m.holds);
  EXPECT_TRUE(reverify(m2z2(), Certificate{"no-potent-J-decomposition", {kE12}, ""}));
  EXPECT_TRUE(is_J_clean_like(zmod(6)).holds);
}

TEST(PotentLifting, FrozenVerdicts) {
  EXPECT_TRUE(potent_lifts_mod_J(t2z3()).holds);
  EXPECT_TRUE(potent_lifts_mod_J(m2z2()).holds);
  const auto v = potent_lifts_mod_J(zmod(4));
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.witness.size(), 4u);
  EXPECT_EQ(v.witness[0], (std::vector<std::uint64_t>{0, 2, 0}));
  EXPECT_EQ(v.witness[2], (std::vector<std::uint64_t>{2, 2, 0}));
  EXPECT_EQ(v.witness[3][2], 1u);
  expect_replays(zmod(4), "potent-lifting", v);
}

TEST(QuasiDuo, FastPathAndOracle) {
  for (Side s : {Side::Left, Side::Right}) {
    EXPECT_TRUE(is_quasi_duo(t2z3(), s).holds);
    const auto v = is_quasi_duo(m2z2(), s);
    EXPECT_FALSE(v.holds);
    ASSERT_TRUE(v.certificate);
    EXPECT_TRUE(reverify(m2z2(), *v.certificate)) << v.certificate->kind;
    EXPECT_TRUE(is_quasi_duo(zmod(8), s).holds);
  }
  // Above the oracle cap only the quotient test runs.
  QuasiDuoOptions no_oracle;
  no_oracle.oracle_cap = 0;
  const auto v = is_quasi_duo(m2z2(), Side::Right, no_oracle);
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.certificate->kind, "noncommutative-mod-J");
  EXPECT_TRUE(reverify(m2z2(), *v.certificate));
}

TEST(GeneralizedNLike, FrozenVerdicts) {
  EXPECT_TRUE(is_generalized_n_like(gf4_twisted_ring(), 7).holds);
  EXPECT_TRUE(is_generalized_n_like(zmod(2), 2).holds);
  // ab(a-1)(b-1) vanishes in Z4, so Z4 satisfies the n = 2 identity.
  EXPECT_TRUE(is_generalized_n_like(zmod(4), 2).holds);
  const auto v = is_generalized_n_like(m2z2(), 2);
  EXPECT_FALSE(v.holds);
  EXPECT_TRUE(reverify(m2z2(), *v.certificate));
  EXPECT_FALSE(reverify(zmod(4), Certificate{"generalized-n-like-violation", {2, 2, 3}, ""}));
  EXPECT_THROW(is_generalized_n_like(zmod(2), 1), RingError);
}

TEST(Euw, FrozenValues) {
  const auto z4 = zmod(4);
  auto d = euw_decomposition(z4, 0);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->e, 0u);
  EXPECT_EQ(d->u, 1u);
  EXPECT_EQ(d->w, 0u);
  d = euw_decomposition(z4, 2);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->e, 0u);
  EXPECT_EQ(d->u, 1u);
  EXPECT_EQ(d->w, 2u);
  EXPECT_TRUE(d->verify(z4));
  EXPECT_FALSE(euw_decomposition(m2z2(), kE12).has_value());
  EXPECT_TRUE(reverify(m2z2(), Certificate{"no-euw-decomposition", {kE12}, ""}));
}

TEST(Euw, PresentOnStronglyPeriodicRing) {
  const auto r = e39();
  for (Elem a = 0; a < r.order(); ++a) {
    const auto d = euw_decomposition(r, a);
    ASSERT_TRUE(d) << a;
    EXPECT_TRUE(d->verify(r));
    EXPECT_EQ(r.add(r.mul(d->e, d->u), d->w), a);
  }
}

TEST(SequenceVanishing, FrozenOutcomes) {
  EXPECT_EQ(sequence_vanishing(zmod(4)).outcome, SequenceOutcome::Holds);
  EXPECT_EQ(sequence_vanishing(zmod(1)).outcome, SequenceOutcome::Holds);
  const auto m2 = m2z2();
  const auto res = sequence_vanishing(m2);
  ASSERT_EQ(res.outcome, SequenceOutcome::Fails);
  ASSERT_TRUE(res.witness);
  EXPECT_TRUE(verify_sequence_witness(m2, *res.witness));
  EXPECT_TRUE(verify_sequence_witness(m2, SequenceWitness{{}, {kE12, kE21}}));
  EXPECT_FALSE(verify_sequence_witness(m2, SequenceWitness{{}, {kE12, kE12}}));
  EXPECT_FALSE(verify_sequence_witness(zmod(4), SequenceWitness{{}, {2}}));
}

TEST(SequenceVanishing, InconclusiveUnderTinyBudget) {
  SequenceOptions tiny;
  tiny.max_states = 1;
  EXPECT_EQ(sequence_vanishing(triangular_matrix_ring(zmod(2), 2), tiny).outcome, SequenceOutcome::Inconclusive);
}

TEST(Report, FixedKeysAndSamples) {
  const auto rep = classification_report(t2z3());
  ASSERT_EQ(rep.verdicts.size(), classification_keys().size());
  for (const auto& k : classification_keys()) EXPECT_TRUE(rep.verdicts.count(k)) << k;
  EXPECT_TRUE(rep.verdicts.at("J-clean-like").holds);
  EXPECT_FALSE(rep.verdicts.at("J-clean").holds);
  EXPECT_TRUE(rep.verdicts.at("right-quasi-duo").holds);
  const auto m = classification_report(m2z2());
  EXPECT_TRUE(m.verdicts.at("periodic").holds);
  EXPECT_TRUE(m.verdicts.at("weakly-periodic").holds);
  EXPECT_FALSE(m.verdicts.at("strongly-periodic").holds);
  EXPECT_FALSE(m.verdicts.at("2-primal").holds);
  const auto z2 = classification_report(zmod(2));
  for (const auto& [k, v] : z2.verdicts) EXPECT_TRUE(v.holds) << k;
  for (const auto& r : {t2z3(), m2z2(), zmod(2), zmod(4)}) {
    const auto rr = classification_report(r);
    for (const auto& [k, v] : rr.verdicts) EXPECT_TRUE(reverify_witness(r, k, v)) << k << " on order " << r.order();
  }
}
