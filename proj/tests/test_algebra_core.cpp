#include "support.hpp"

#include "hopfxyz/errors.hpp"

using namespace hopf;
using namespace hopf::testing;

namespace {

enum : Index { one = 0, g = 1, x = 2, gx = 3 };

// e_1 e_1 = e_0 with e_0 the unit
AlgebraData z2_by_hand(Vector unit) {
  BilinearTable::Builder b(Q, 2, 2, 2);
  b.add(0, 0, 0, sc(1));
  b.add(0, 1, 1, sc(1));
  b.add(1, 0, 1, sc(1));
  b.add(1, 1, 0, sc(1));
  return AlgebraData::make({"1", "g"}, std::move(b).build(), std::move(unit));
}

HopfAlgebraData with_antipode(HopfAlgebraData h, LinearMap s) {
  h.antipode = std::move(s);
  return h;
}

}  // namespace

TEST(AlgebraAxioms, GroupAlgebraOfZ2Passes) {
  const auto r = check_algebra_axioms(z2_by_hand(basis_vector(Q, 2, 0)), CheckMode::exhaustive());
  EXPECT_TRUE(r.passed()) << r.summary();
  EXPECT_EQ(r.checked(), 2u * 2 + 8);
}

TEST(AlgebraAxioms, ZeroUnitIsCaught) {
  const auto r = check_algebra_axioms(z2_by_hand(zeros(Q, 2)), CheckMode::exhaustive());
  ASSERT_FALSE(r.passed());
  const auto& v = r.violations().front();
  EXPECT_NE(v.axiom.find("unit"), std::string::npos);
  EXPECT_EQ(v.witness, std::vector<std::size_t>{0});
  EXPECT_EQ(v.rhs, basis_vector(Q, 2, 0));
  EXPECT_EQ(v.lhs, zeros(Q, 2));
}

TEST(AlgebraAxioms, RandomModePasses) {
  const auto r = check_algebra_axioms(z2_by_hand(basis_vector(Q, 2, 0)), CheckMode::random(20, 7));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.checked(), 60u);
}

TEST(AlgebraAxioms, NonAssociativeTableIsCaughtInBothModes) {
  // b: e_1 e_1 = e_0 + e_1, still associative. c: e_1 e_0 = e_0 is not.
  BilinearTable::Builder b(Q, 2, 2, 2);
  b.add(0, 0, 0, sc(1));
  b.add(0, 1, 1, sc(1));
  b.add(1, 0, 1, sc(1));
  b.add(1, 1, 0, sc(1));
  b.add(1, 1, 1, sc(1));
  BilinearTable::Builder c(Q, 2, 2, 2);
  c.add(0, 0, 0, sc(1));
  c.add(0, 1, 1, sc(1));
  c.add(1, 0, 0, sc(1));
  c.add(1, 1, 0, sc(1));
  const BilinearTable bad = std::move(c).build();
  EXPECT_FALSE(check_algebra_axioms(bad, basis_vector(Q, 2, 0), CheckMode::exhaustive()).passed());
  EXPECT_FALSE(check_algebra_axioms(bad, basis_vector(Q, 2, 0), CheckMode::random(5)).passed());
  EXPECT_TRUE(check_algebra_axioms(std::move(b).build(), basis_vector(Q, 2, 0), CheckMode::exhaustive()).passed());
}

TEST(AlgebraAxioms, IndexErrors) {
  BilinearTable::Builder b(Q, 2, 2, 2);
  EXPECT_THROW(b.add(0, 2, 0, sc(1)), InvalidInput);
  EXPECT_THROW(b.add(0, 0, 0, sc(1, FieldSpec::prime(3))), FieldMismatch);
  BilinearTable::Builder ok(Q, 2, 2, 2);
  EXPECT_THROW(AlgebraData::make({"1", "g"}, std::move(ok).build(), zeros(Q, 3)), DimensionMismatch);
}

TEST(HopfAxioms, CatalogExamplesPass) {
  EXPECT_TRUE(check_hopf_axioms(cyclic_group_algebra(2), CheckMode::exhaustive()).passed());
  EXPECT_TRUE(check_hopf_axioms(sweedler4(), CheckMode::exhaustive()).passed());
  EXPECT_TRUE(check_hopf_axioms(sweedler4(), CheckMode::random(20, 3)).passed());
}

TEST(HopfAxioms, FlippedSignOfSxIsCaughtAtX) {
  auto h = sweedler4();
  h.antipode.at(gx, x) = sc(1);
  const auto r = check_hopf_axioms(h, CheckMode::exhaustive());
  ASSERT_FALSE(r.passed());
  bool antipode_at_x = false;
  for (const auto& v : r.violations()) {
    if (v.axiom.find("antipode") != std::string::npos && v.witness == std::vector<std::size_t>{x}) {
      antipode_at_x = true;
    }
  }
  EXPECT_TRUE(antipode_at_x) << r.summary();
  EXPECT_FALSE(check_hopf_axioms(h, CheckMode::random(3)).passed());
}

TEST(HopfAxioms, CorruptedCoassociativityAndSingularAntipode) {
  auto h = sweedler4();
  h.coalgebra.comult.set_column(x, {{x * 4 + one, sc(1)}});
  const auto r = check_hopf_axioms(h, CheckMode::exhaustive());
  EXPECT_FALSE(r.passed());
  auto s = with_antipode(cyclic_group_algebra(2), LinearMap(Q, 2, 2));
  const auto rs = check_hopf_axioms(s, CheckMode::exhaustive());
  ASSERT_FALSE(rs.passed());
  EXPECT_EQ(rs.violations().back().axiom, "antipode invertible");
  EXPECT_THROW(antipode_inverse(s), InvalidInput);
  EXPECT_THROW(require_hopf(s, "probe"), InvalidInput);
}

TEST(Dual, OfCyclic2IsPointwiseFunctions) {
  const auto d = dual_hopf(cyclic_group_algebra(2));
  for (Index i = 0; i < 2; ++i) {
    for (Index j = 0; j < 2; ++j) {
      const SparseVec expect = i == j ? SparseVec{{i, sc(1)}} : SparseVec{};
      const auto got = d.algebra.mult.at(i, j);
      EXPECT_EQ(SparseVec(got.begin(), got.end()), expect);
    }
  }
  EXPECT_EQ(d.algebra.unit, (Vector{sc(1), sc(1)}));
  EXPECT_EQ(d.coalgebra.counit, (Vector{sc(1), sc(0)}));
  // Delta(e_1) = e_0 (x) e_1 + e_1 (x) e_0 since e_1 is the indicator of g
  EXPECT_EQ(d.coalgebra.comult.column(1), (SparseVec{{1, sc(1)}, {2, sc(1)}}));
}

TEST(Dual, DoubleDualIsIdentity) {
  for (const auto& spec : small_catalog()) {
    const auto h = catalog_hopf(spec);
    EXPECT_TRUE(same_structure(dual_hopf(dual_hopf(h)), h)) << spec.to_string();
    EXPECT_TRUE(check_hopf_axioms(dual_hopf(h), CheckMode::exhaustive()).passed());
  }
}

TEST(Dual, RejectsInvalidInput) {
  auto h = sweedler4();
  h.antipode.at(gx, x) = sc(1);
  EXPECT_THROW(dual_hopf(h), InvalidInput);
}

TEST(Variant, OppositesAndInvolutions) {
  const auto c2 = cyclic_group_algebra(2);
  EXPECT_TRUE(same_structure(variant(c2, Variant::op), c2));
  for (const auto& spec : small_catalog()) {
    const auto h = catalog_hopf(spec);
    for (Variant v : {Variant::op, Variant::cop, Variant::op_cop}) {
      const auto hv = variant(h, v);
      EXPECT_TRUE(check_hopf_axioms(hv, CheckMode::exhaustive()).passed()) << spec.to_string();
      EXPECT_TRUE(same_structure(variant(hv, v), h)) << spec.to_string();
    }
    EXPECT_EQ(variant(h, Variant::op).antipode, antipode_inverse(h));
    EXPECT_EQ(variant(h, Variant::cop).antipode, antipode_inverse(h));
    EXPECT_EQ(variant(h, Variant::op_cop).antipode, h.antipode);
  }
}

TEST(AntipodeInverse, SweedlerByHand) {
  const auto h = sweedler4();
  // S(gx) = x and S(x) = -gx, so S^-1(x) = gx and S^-1(gx) = -x
  const LinearMap expected = mat(Q, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}});
  const LinearMap inv = antipode_inverse(h);
  EXPECT_EQ(inv, expected);
  EXPECT_NE(inv, h.antipode);
  EXPECT_EQ(power(inv, 2), power(h.antipode, 2));
  EXPECT_EQ(variant(h, Variant::op).antipode, expected);
}

TEST(AntipodeInverse, ComposesToIdentity) {
  for (const auto& spec : small_catalog()) {
    const auto h = catalog_hopf(spec);
    const LinearMap inv = antipode_inverse(h);
    const LinearMap id = LinearMap::identity(h.field(), h.dim());
    EXPECT_EQ(compose(inv, h.antipode), id);
    EXPECT_EQ(compose(h.antipode, inv), id);
  }
  for (Index n : {2u, 3u, 5u}) {
    const auto h = cyclic_group_algebra(n);
    EXPECT_EQ(antipode_inverse(h), h.antipode);
  }
}

TEST(TensorHopf, CyclicTimesOpposite) {
  const auto h = cyclic_group_algebra(2);
  const auto t = tensor_hopf(h, variant(h, Variant::op));
  EXPECT_EQ(t.dim(), 4u);
  EXPECT_EQ(t.algebra.unit, basis_vector(Q, 4, 0));
  EXPECT_TRUE(check_hopf_axioms(t, CheckMode::exhaustive()).passed());
  EXPECT_THROW(tensor_hopf(h, cyclic_group_algebra(2, FieldSpec::prime(3))), FieldMismatch);
}

TEST(TensorHopf, AntipodeIsSTimesSInverse) {
  const auto h = sweedler4();
  const auto t = tensor_hopf(h, variant(h, Variant::op));
  EXPECT_TRUE(check_hopf_axioms(t, CheckMode::exhaustive()).passed());
  EXPECT_EQ(t.antipode, kronecker(h.antipode, antipode_inverse(h)));
  // (S (x) S^-1)(x (x) x) = (-gx) (x) gx, index gx * 4 + gx
  EXPECT_EQ(t.antipode.column(x * 4 + x), (SparseVec{{gx * 4 + gx, sc(-1)}}));
  Vector unit = zeros(Q, 16);
  unit[0] = sc(1);
  EXPECT_EQ(t.algebra.unit, unit);
}

TEST(TensorHopf, ProductIsComponentwise) {
  const auto h = sweedler4();
  const auto t = tensor_algebra(h.algebra, h.algebra);
  // (g (x) x)(x (x) g) = gx (x) -gx
  EXPECT_EQ(t.multiply(SparseVec{{g * 4 + x, sc(1)}}, SparseVec{{x * 4 + g, sc(1)}}),
            (SparseVec{{gx * 4 + gx, sc(-1)}}));
  EXPECT_EQ(t.labels[g * 4 + x], "g⊗x");
}

TEST(DoubleComult, MatchesIteratedDelta) {
  const auto h = sweedler4();
  const auto d2 = double_comult(h.coalgebra);
  // Delta^2(x) = x 1 1 + g x 1 + g g x
  EXPECT_EQ(d2.column(x), (SparseVec{{(g * 4 + g) * 4 + x, sc(1)},
                                     {(g * 4 + x) * 4 + one, sc(1)},
                                     {(x * 4 + one) * 4 + one, sc(1)}}));
}

TEST(Radical, Examples) {
  EXPECT_TRUE(trace_form_radical(cyclic_group_algebra(2).algebra).empty());
  EXPECT_TRUE(trace_form_radical(cyclic_group_algebra(1).algebra).empty());
  const auto s = sweedler4().algebra;
  const auto rad = trace_form_radical(s);
  EXPECT_EQ(rad.size(), 2u);
  EXPECT_TRUE(in_span(rad, basis_vector(Q, 4, x)));
  EXPECT_TRUE(in_span(rad, basis_vector(Q, 4, gx)));
  EXPECT_FALSE(in_span(rad, basis_vector(Q, 4, g)));
  EXPECT_THROW(trace_form_radical(sweedler4(FieldSpec::prime(5)).algebra), InvalidInput);
}

TEST(RadicalProperty, LeftMultiplicationIsNilpotent) {
  std::vector<AlgebraData> algebras{sweedler4().algebra, dual_hopf(sweedler4()).algebra,
                                    tensor_algebra(sweedler4().algebra, cyclic_group_algebra(2).algebra)};
  for (const auto& a : algebras) {
    const auto rad = trace_form_radical(a);
    ASSERT_FALSE(rad.empty());
    for (const auto& v : rad) {
      const LinearMap lx = left_multiplication(a, v);
      EXPECT_EQ(power(lx, static_cast<int>(a.dim)), LinearMap(Q, a.dim, a.dim));
    }
  }
}

TEST(Radical, CyclicGroupAlgebrasAreSemisimple) {
  for (Index n : {3u, 4u, 6u}) {
    EXPECT_TRUE(trace_form_radical(cyclic_group_algebra(n).algebra).empty());
    EXPECT_TRUE(trace_form_radical(dual_cyclic(n).algebra).empty());
  }
}
