#include "support.hpp"

#include "hopfxyz/errors.hpp"
#include "hopfxyz/hopf_bimodules.hpp"

using namespace hopf;
using namespace hopf::testing;

namespace {

SparseVec e(Index i, FieldSpec f = Q) { return {{i, Scalar::one(f)}}; }

HopfAlgebraData named(const char* name) { return catalog_hopf(CatalogSpec::parse(name)); }

bool has_axiom(const CheckReport& r, std::string_view prefix) {
  for (const Violation& v : r.violations())
    if (v.axiom.starts_with(prefix)) return true;
  return false;
}

const CheckReport& section(const std::vector<std::pair<std::string, CheckReport>>& s, const std::string& name) {
  for (const auto& [n, r] : s)
    if (n == name) return r;
  throw std::runtime_error("no section " + name);
}

}  // namespace

TEST(BimoduleKind, Parse) {
  EXPECT_EQ(BimoduleKind::parse("regular").kind, BimoduleKind::Kind::regular);
  const BimoduleKind f = BimoduleKind::parse("free:3");
  EXPECT_EQ(f.kind, BimoduleKind::Kind::free);
  EXPECT_EQ(f.v_dim, 3u);
  EXPECT_EQ(f.to_string(), "free:3");
  EXPECT_THROW(BimoduleKind::parse("free:0"), ParseError);
  EXPECT_THROW(BimoduleKind::parse("free:x"), ParseError);
  EXPECT_THROW(BimoduleKind::parse("cofree"), ParseError);
}

TEST(HopfBimodule, RegularPasses) {
  for (const char* name : {"cyclic:2", "cyclic:3", "dual_cyclic:3", "sweedler4", "taft:3:7"}) {
    const HopfAlgebraData h = named(name);
    const HopfBimoduleData m = example_bimodule(h, BimoduleKind::parse("regular"));
    EXPECT_EQ(m.space_dim, h.dim());
    const CheckReport r = check_hopf_bimodule(m, h);
    EXPECT_TRUE(r.passed()) << name << ": " << r.summary();
  }
}

TEST(HopfBimodule, FreePasses) {
  for (const char* name : {"cyclic:2", "sweedler4", "sweedler4@7"}) {
    const HopfAlgebraData h = named(name);
    const HopfBimoduleData m = example_bimodule(h, BimoduleKind::parse("free:2"));
    const CheckReport r = check_hopf_bimodule(m, h);
    EXPECT_TRUE(r.passed()) << name << ": " << r.summary();
  }
  EXPECT_EQ(example_bimodule(sweedler4(), BimoduleKind::parse("free:3")).space_dim, 48u);
}

TEST(HopfBimodule, FreeOneIsTensorSquare) {
  const HopfAlgebraData h = sweedler4();
  const AlgebraData d = dual_hopf(h).algebra;
  const AlgebraData dd = tensor_algebra(d, d);
  const HopfBimoduleData m = example_bimodule(h, BimoduleKind::parse("free:1"));
  ASSERT_EQ(m.space_dim, 16u);
  // p.(x (x) y) = px (x) y and (x (x) y).q = x (x) yq inside H* (x) H*
  const SparseVec unit = to_sparse(d.unit);
  for (Index p = 0; p < 4; ++p) {
    SparseVec p1, p2;
    for (const Term& u : unit) {
      p1.push_back({p * 4 + u.index, u.coef});
      p2.push_back({u.index * 4 + p, u.coef});
    }
    canonicalize(p1);
    canonicalize(p2);
    for (Index j = 0; j < 16; ++j) {
      EXPECT_EQ(m.left_act.act(e(p), e(j)), dd.multiply(p1, e(j)));
      EXPECT_EQ(m.right_act.act(e(p), e(j)), dd.multiply(e(j), p2));
    }
  }
}

TEST(HopfBimodule, BrokenCoactionIsCaught) {
  const HopfAlgebraData h = cyclic_group_algebra(3);
  HopfBimoduleData m = example_bimodule(h, BimoduleKind::parse("regular"));
  // rhoL(m_1) = f^1 (x) m_2 breaks coassociativity
  SparseColumns co = m.left_co.map;
  co.set_column(1, SparseVec{{1 * 3 + 2, sc(1)}});
  m.left_co = CoactionData::make(Side::left, 3, co);
  const CheckReport r = check_hopf_bimodule(m, h);
  EXPECT_FALSE(r.passed());
  EXPECT_THROW(derived_action(m, h, ActingAlgebra::Z), InvalidInput);
}

TEST(HopfBimodule, OuterCoactionsAreNotCompatible) {
  // rhoL(x (x) v (x) y) = x1 (x) (x2 (x) v (x) y) fails rhoL(m.q) = m(-1) q1 (x) m(0).q2
  const HopfAlgebraData h = cyclic_group_algebra(2);
  HopfBimoduleData m = example_bimodule(h, BimoduleKind::parse("free:1"));
  const SparseColumns& comult = dual_hopf(h).coalgebra.comult;
  SparseColumns outer(Q, 4, 8);
  for (Index x = 0; x < 2; ++x)
    for (Index y = 0; y < 2; ++y) {
      SparseVec v;
      for (const Term& t : comult.column(x)) v.push_back({(t.index / 2) * 4 + (t.index % 2) * 2 + y, t.coef});
      outer.set_column(x * 2 + y, v);
    }
  m.left_co = CoactionData::make(Side::left, 2, outer);
  const CheckReport r = check_hopf_bimodule(m, h);
  EXPECT_FALSE(r.passed());
}

TEST(HopfBimodule, ShapeMismatchThrows) {
  const HopfBimoduleData m = example_bimodule(cyclic_group_algebra(2), BimoduleKind::parse("regular"));
  EXPECT_THROW(check_hopf_bimodule(m, cyclic_group_algebra(3)), DimensionMismatch);
}

TEST(DerivedAction, ZOnRegularCyclic2) {
  const HopfAlgebraData h = cyclic_group_algebra(2);
  const ActionData z = derived_action(example_bimodule(h, BimoduleKind::parse("regular")), h, ActingAlgebra::Z);
  // (eps (x) eps) x (g (x) g) with eps = f^0 + f^1, index ((p n + q) n + h) n + g
  SparseVec x;
  for (Index p = 0; p < 2; ++p)
    for (Index q = 0; q < 2; ++q) x.push_back({((p * 2 + q) * 2 + 1) * 2 + 1, sc(1)});
  EXPECT_EQ(z.act(x, e(1)), e(1));
  EXPECT_EQ(z.act(x, e(0)), e(0));
}

TEST(DerivedAction, UnitsActAsIdentity) {
  for (const char* name : {"cyclic:2", "sweedler4"}) {
    const HopfAlgebraData h = named(name);
    const HopfTriple t = standard_triple(h);
    const HopfBimoduleData m = example_bimodule(h, BimoduleKind::parse("free:2"));
    const std::pair<ActingAlgebra, AlgebraHandle> cases[] = {
        {ActingAlgebra::X, build_X(t)},
        {ActingAlgebra::Y, build_Y(t)},
        {ActingAlgebra::Z, build_Z(t)},
        {ActingAlgebra::left_smash, build_construction(t, Construction::left_smash)},
        {ActingAlgebra::right_smash, build_construction(t, Construction::right_smash)}};
    for (const auto& [which, alg] : cases) {
      const ActionData act = derived_action(m, t, which);
      ASSERT_EQ(act.actor_dim(), alg.dim());
      const SparseVec u = to_sparse(alg.unit());
      for (Index j = 0; j < m.space_dim; ++j) EXPECT_EQ(act.act(u, e(j, h.field())), e(j, h.field())) << to_string(which);
    }
  }
}

TEST(DerivedAction, YCounitCollapse) {
  // (eps # (1 (x) 1) # q).m = m.q
  const HopfAlgebraData h = sweedler4();
  const HopfBimoduleData m = example_bimodule(h, BimoduleKind::parse("free:2"));
  const ActionData y = derived_action(m, h, ActingAlgebra::Y);
  const SparseVec eps = to_sparse(dual_hopf(h).algebra.unit);
  for (Index q = 0; q < 4; ++q) {
    SparseVec x;
    for (const Term& t : eps) x.push_back({((t.index * 4 + 0) * 4 + 0) * 4 + q, t.coef});
    canonicalize(x);
    for (Index j = 0; j < m.space_dim; ++j) EXPECT_EQ(y.act(x, e(j)), m.right_act.act(e(q), e(j)));
  }
}

TEST(DerivedAction, YEqualsAssembledTwoSided) {
  for (const char* name : {"cyclic:3", "sweedler4"}) {
    const HopfAlgebraData h = named(name);
    const HopfBimoduleData m = example_bimodule(h, BimoduleKind::parse("free:1"));
    EXPECT_EQ(derived_action(m, h, ActingAlgebra::Y).table, assemble_two_sided(triple_module_from_bimodule(m, h)).table)
        << name;
  }
}

TEST(DerivedAction, ModuleAxioms) {
  for (const char* name : {"cyclic:2", "cyclic:3", "dual_cyclic:2", "sweedler4"}) {
    const HopfAlgebraData h = named(name);
    const HopfTriple t = standard_triple(h);
    for (const char* kind : {"regular", "free:2"}) {
      const HopfBimoduleData m = example_bimodule(h, BimoduleKind::parse(kind));
      const CheckMode mode = h.dim() <= 2 ? CheckMode::exhaustive() : CheckMode::random(40, 2);
      const std::pair<ActingAlgebra, AlgebraHandle> cases[] = {
          {ActingAlgebra::X, build_X(t)},
          {ActingAlgebra::Y, build_Y(t)},
          {ActingAlgebra::Z, build_Z(t)},
          {ActingAlgebra::left_smash, build_construction(t, Construction::left_smash)},
          {ActingAlgebra::right_smash, build_construction(t, Construction::right_smash)}};
      for (const auto& [which, alg] : cases) {
        const CheckReport r = check_module_axioms(alg, derived_action(m, t, which), mode);
        EXPECT_TRUE(r.passed()) << name << " " << kind << " " << to_string(which) << ": " << r.summary();
      }
    }
  }
}

TEST(DerivedAction, BrokenActionFailsModuleAxiom) {
  const HopfAlgebraData h = cyclic_group_algebra(2);
  const HopfTriple t = standard_triple(h);
  const ActionData z = derived_action(example_bimodule(h, BimoduleKind::parse("regular")), t, ActingAlgebra::Z);
  const ActionData x = derived_action(example_bimodule(h, BimoduleKind::parse("regular")), t, ActingAlgebra::X);
  // the X action read as a Z action
  const CheckReport r = check_module_axioms(build_Z(t), x, CheckMode::exhaustive());
  EXPECT_FALSE(r.passed());
  EXPECT_TRUE(check_module_axioms(build_Z(t), z, CheckMode::exhaustive()).passed());
}

TEST(Correspondence, Examples) {
  const CheckReport r1 = verify_action_correspondence(example_bimodule(cyclic_group_algebra(2), BimoduleKind::parse("regular")),
                                                      cyclic_group_algebra(2), default_correspondence_mode(2));
  EXPECT_TRUE(r1.passed()) << r1.summary();
  EXPECT_EQ(r1.checked(), 3u * 16u * 2u);

  const HopfAlgebraData c3 = cyclic_group_algebra(3);
  const CheckReport r2 =
      verify_action_correspondence(example_bimodule(c3, BimoduleKind::parse("free:1")), c3, default_correspondence_mode(3));
  EXPECT_TRUE(r2.passed()) << r2.summary();

  const CheckReport r3 = verify_action_correspondence(example_bimodule(sweedler4(), BimoduleKind::parse("regular")),
                                                      sweedler4(), default_correspondence_mode(4, 9));
  EXPECT_TRUE(r3.passed()) << r3.summary();
  EXPECT_EQ(r3.checked(), 3u * 200u);
}

TEST(Correspondence, FMap) {
  for (const char* name : {"cyclic:2", "dual_cyclic:3", "sweedler4"}) {
    const HopfAlgebraData h = named(name);
    for (const char* kind : {"regular", "free:2"}) {
      const CheckReport r = verify_f_correspondence(example_bimodule(h, BimoduleKind::parse(kind)), h,
                                                    default_correspondence_mode(h.dim(), 4));
      EXPECT_TRUE(r.passed()) << name << " " << kind << ": " << r.summary();
    }
  }
}

TEST(CorrespondenceProperty, CatalogAndBothBimodules) {
  for (const CatalogSpec& spec : small_catalog()) {
    const HopfAlgebraData h = catalog_hopf(spec);
    if (h.dim() > 4) continue;
    for (const char* kind : {"regular", "free:2"}) {
      const CheckReport r = verify_action_correspondence(example_bimodule(h, BimoduleKind::parse(kind)), h,
                                                         default_correspondence_mode(h.dim(), 1));
      EXPECT_TRUE(r.passed()) << spec.to_string() << " " << kind << ": " << r.summary();
    }
  }
}

TEST(TripleModule, FromBimodule) {
  for (const char* name : {"cyclic:2", "cyclic:3", "sweedler4"}) {
    const HopfAlgebraData h = named(name);
    const HopfTriple t = standard_triple(h);
    for (const char* kind : {"regular", "free:1"}) {
      const HopfBimoduleData m = example_bimodule(h, BimoduleKind::parse(kind));
      const CheckMode mode = h.dim() <= 2 ? CheckMode::exhaustive() : CheckMode::random(40, 8);
      const CheckReport r =
          triple_module_roundtrip(triple_module_from_bimodule(m, h), t.a, t.k, t.b, t.a_act, t.b_act, mode);
      EXPECT_TRUE(r.passed()) << name << " " << kind << ": " << r.summary();
    }
  }
}

TEST(TripleModule, TrivialHopfReducesToCommutingActions) {
  const HopfAlgebraData one = cyclic_group_algebra(1);
  const AlgebraData a = cyclic_group_algebra(2).algebra;
  const AlgebraData b = cyclic_group_algebra(3).algebra;
  // M = A (x) B, a acts on the left factor and b on the right one
  const AlgebraData ab = tensor_algebra(a, b);
  BilinearTable::Builder ta(Q, 2, 6, 6), tb(Q, 3, 6, 6);
  for (Index j = 0; j < 6; ++j) {
    for (Index i = 0; i < 2; ++i) {
      SparseVec x{{i * 3 + 0, sc(1)}};
      ta.set(i, j, ab.multiply(x, SparseVec{{j, sc(1)}}));
    }
    for (Index i = 0; i < 3; ++i) tb.set(i, j, ab.multiply(SparseVec{{0 * 3 + i, sc(1)}}, SparseVec{{j, sc(1)}}));
  }
  const TripleModuleData tm{6, ActionData::make(Side::left, std::move(ta).build()), trivial_action(Side::left, one, 6),
                            ActionData::make(Side::left, std::move(tb).build())};
  const CheckReport r = triple_module_roundtrip(tm, a, one, b, trivial_action(Side::left, one, 2),
                                                trivial_action(Side::right, one, 3));
  EXPECT_TRUE(r.passed()) << r.summary();
  EXPECT_EQ(assemble_two_sided(tm).actor_dim(), 6u);
}

TEST(TripleModule, BrokenConditionThreeIsCaught) {
  const HopfAlgebraData h = cyclic_group_algebra(2);
  const HopfTriple t = standard_triple(h);
  TripleModuleData tm = triple_module_from_bimodule(example_bimodule(h, BimoduleKind::parse("regular")), h);
  // p.m = eps(p) m keeps (i) and (ii) but not (iii)
  tm.a_act = trivial_action(Side::left, t.dual, 2);
  const auto sections = triple_module_sections(tm, t.a, t.k, t.b, t.a_act, t.b_act);
  EXPECT_TRUE(section(sections, "(i)").passed());
  EXPECT_TRUE(section(sections, "(ii)").passed());
  EXPECT_FALSE(section(sections, "(iii)").passed());
  EXPECT_FALSE(section(sections, "(iii) with S^-1").passed());
  const CheckReport& assembled = section(sections, "assembled module");
  ASSERT_FALSE(assembled.passed());
  EXPECT_EQ(assembled.violations().front().witness.size(), 3u);
}

TEST(TripleModuleProperty, SInverseFormsAgree) {
  // on modules where a condition fails, its S^-1 form fails too, and conversely
  for (const char* name : {"cyclic:2", "cyclic:3", "sweedler4"}) {
    const HopfAlgebraData h = named(name);
    const HopfTriple t = standard_triple(h);
    const HopfBimoduleData m = example_bimodule(h, BimoduleKind::parse("regular"));
    std::vector<TripleModuleData> tms{triple_module_from_bimodule(m, h)};
    tms.push_back(tms[0]);
    tms[1].a_act = trivial_action(Side::left, t.dual, m.space_dim);
    tms.push_back(tms[0]);
    tms[2].h_act = trivial_action(Side::left, t.k, m.space_dim);
    for (const TripleModuleData& tm : tms) {
      const auto s = triple_module_sections(tm, t.a, t.k, t.b, t.a_act, t.b_act, CheckMode::random(10, 1));
      EXPECT_EQ(section(s, "(ii)").passed(), section(s, "(ii) with S^-1").passed()) << name;
      EXPECT_EQ(section(s, "(iii)").passed(), section(s, "(iii) with S^-1").passed()) << name;
    }
  }
}

TEST(DiagonalModule, Examples) {
  for (const auto& [name, kind] : {std::pair{"cyclic:2", "regular"}, std::pair{"cyclic:3", "free:2"}}) {
    const HopfAlgebraData h = named(name);
    const HopfTriple t = standard_triple(h);
    const BimoduleAlgebra c = build_bimodule_algebra(t.k, t.a, t.a_act, t.b, t.b_act);
    const HopfBimoduleData m = example_bimodule(h, BimoduleKind::parse(kind));
    const TripleModuleData tm = triple_module_from_bimodule(m, h);
    const CheckMode mode = h.dim() <= 2 ? CheckMode::exhaustive() : CheckMode::random(40, 6);
    const CheckReport r = diagonal_module_condition(c.algebra, t.k, c.left, c.right, outer_action(m), tm.h_act, mode);
    EXPECT_TRUE(r.passed()) << name << ": " << r.summary();
  }
}

TEST(DiagonalModule, BrokenHActionIsCaught) {
  const HopfAlgebraData h = cyclic_group_algebra(2);
  const HopfTriple t = standard_triple(h);
  const BimoduleAlgebra c = build_bimodule_algebra(t.k, t.a, t.a_act, t.b, t.b_act);
  const HopfBimoduleData m = example_bimodule(h, BimoduleKind::parse("regular"));
  const CheckReport r = diagonal_module_condition(c.algebra, t.k, c.left, c.right, outer_action(m),
                                                  trivial_action(Side::left, t.k, m.space_dim));
  EXPECT_FALSE(r.passed());
  EXPECT_TRUE(has_axiom(r, "h.(c.m)"));
}
