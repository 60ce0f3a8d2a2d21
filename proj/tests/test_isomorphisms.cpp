#include "formulas.hpp"

#include "hopfxyz/errors.hpp"
#include "hopfxyz/isomorphisms.hpp"

using namespace hopf;
using namespace hopf::testing;

namespace {

const IsoKind kAll[] = {IsoKind::phi,  IsoKind::phi_inv,  IsoKind::alpha, IsoKind::alpha_inv,
                        IsoKind::beta, IsoKind::beta_inv, IsoKind::f_map, IsoKind::f_map_inv};

struct Built {
  HopfTriple t;
  AlgebraHandle x, y, z, two, diag;

  explicit Built(const HopfAlgebraData& h)
      : t(standard_triple(h)),
        x(build_X(t)),
        y(build_Y(t)),
        z(build_Z(t)),
        two(build_construction(t, Construction::two_sided)),
        diag(build_construction(t, Construction::diagonal)) {}

  const AlgebraHandle& handle(Provenance p) const {
    switch (p) {
      case Provenance::X: return x;
      case Provenance::Y: return y;
      case Provenance::Z: return z;
      case Provenance::two_sided: return two;
      default: return diag;
    }
  }
};

IsoKind inverse_of(IsoKind k) {
  switch (k) {
    case IsoKind::phi: return IsoKind::phi_inv;
    case IsoKind::alpha: return IsoKind::alpha_inv;
    case IsoKind::beta: return IsoKind::beta_inv;
    case IsoKind::f_map: return IsoKind::f_map_inv;
    case IsoKind::phi_inv: return IsoKind::phi;
    case IsoKind::alpha_inv: return IsoKind::alpha;
    case IsoKind::beta_inv: return IsoKind::beta;
    case IsoKind::f_map_inv: return IsoKind::f_map;
  }
  return k;
}

Vector column(const LinearMap& m, Index c) { return to_dense(m.column(c), m.field(), m.dst_dim()); }

}  // namespace

TEST(Iso, Endpoints) {
  EXPECT_EQ(endpoints(IsoKind::phi).source, Provenance::X);
  EXPECT_EQ(endpoints(IsoKind::phi).target, Provenance::Y);
  EXPECT_EQ(endpoints(IsoKind::beta_inv).source, Provenance::Z);
  EXPECT_EQ(endpoints(IsoKind::beta_inv).target, Provenance::X);
  EXPECT_EQ(endpoints(IsoKind::f_map).source, Provenance::two_sided);
  EXPECT_EQ(to_string(IsoKind::alpha_inv), "alpha_inv");
}

TEST(Iso, PhiSendsUnitToUnit) {
  for (const char* name : {"cyclic:2", "sweedler4"}) {
    const Built b(catalog_hopf(CatalogSpec::parse(name)));
    const LinearMap phi = build_iso(IsoKind::phi, b.t);
    EXPECT_EQ(kernels::serial::apply(phi, b.x.unit()), b.y.unit()) << name;
  }
}

TEST(Iso, PhiOnGrouplikesInCyclic2) {
  const HopfAlgebraData h = cyclic_group_algebra(2);
  const LinearMap phi = build_iso(IsoKind::phi, h);
  // g = e1, h = e0 and eps = f^0 + f^1, so the source is sum_{p,q} X(1, 0, p, q).
  Vector src = zeros(Q, 16), want = zeros(Q, 16);
  for (Index p = 0; p < 2; ++p) {
    for (Index q = 0; q < 2; ++q) {
      src[((1 * 2 + 0) * 2 + p) * 2 + q] = sc(1);
      want[((p * 2 + 0) * 2 + 1) * 2 + q] = sc(1);
    }
  }
  EXPECT_EQ(kernels::serial::apply(phi, src), want);
}

TEST(Iso, AlphaInverseOnDualPart) {
  const HopfAlgebraData h = sweedler4();
  const LinearMap ai = build_iso(IsoKind::alpha_inv, h);
  const Index n = 4;
  for (Index p = 0; p < n; ++p) {
    for (Index q = 0; q < n; ++q) {
      EXPECT_EQ(ai.column(((p * n + q) * n + 0) * n + 0), (SparseVec{{((p * n + 0) * n + 0) * n + q, sc(1)}}));
    }
  }
}

TEST(Iso, MatchesDirectFormulas) {
  for (const char* name : {"cyclic:2", "cyclic:3", "dual_cyclic:2", "sweedler4", "taft:2:5"}) {
    const HopfAlgebraData h = catalog_hopf(CatalogSpec::parse(name));
    const Direct d(h);
    const HopfTriple t = standard_triple(h);
    const std::pair<IsoKind, Vector (Direct::*)(Index) const> cases[] = {
        {IsoKind::phi, &Direct::phi},   {IsoKind::phi_inv, &Direct::phi_inv},
        {IsoKind::alpha, &Direct::alpha}, {IsoKind::alpha_inv, &Direct::alpha_inv},
        {IsoKind::beta, &Direct::beta}, {IsoKind::beta_inv, &Direct::beta_inv}};
    for (const auto& [kind, formula] : cases) {
      const LinearMap m = build_iso(kind, t);
      ASSERT_EQ(m.src_dim(), d.n * d.n * d.n * d.n);
      for (Index c = 0; c < m.src_dim(); ++c) {
        ASSERT_EQ(column(m, c), (d.*formula)(c)) << name << " " << to_string(kind) << " column " << c;
      }
    }
  }
}

TEST(Iso, PhiIsMorphismExhaustivelyOnCyclic2) {
  const Built b(cyclic_group_algebra(2));
  const CheckReport r = verify_algebra_morphism(build_iso(IsoKind::phi, b.t), b.x, b.y, default_morphism_mode(16));
  EXPECT_TRUE(r.passed()) << r.summary();
  EXPECT_EQ(r.checked(), 1u + 16u * 16u);
}

TEST(Iso, IdentityOnYIsMorphism) {
  const Built b(cyclic_group_algebra(3));
  EXPECT_TRUE(verify_algebra_morphism(LinearMap::identity(Q, 81), b.y, b.y, CheckMode::exhaustive()).passed());
}

TEST(Iso, CorruptedPhiIsCaught) {
  const Built b(cyclic_group_algebra(2));
  LinearMap phi = build_iso(IsoKind::phi, b.t);
  // the unit of X lives on columns 0..3; corrupt elsewhere
  phi.at(0, 5) += sc(1);
  const CheckReport r = verify_algebra_morphism(phi, b.x, b.y, CheckMode::exhaustive());
  ASSERT_FALSE(r.passed());
  EXPECT_EQ(r.violations().front().witness.size(), 2u);
  EXPECT_EQ(r.violations().front().axiom, "map(xy) = map(x) map(y)");

  const CheckReport rr = verify_algebra_morphism(phi, b.x, b.y, CheckMode::random(50, 3));
  EXPECT_FALSE(rr.passed());
}

TEST(Iso, MorphismRejectsWrongDimensions) {
  const Built b(cyclic_group_algebra(2));
  EXPECT_THROW(verify_algebra_morphism(LinearMap::identity(Q, 15), b.x, b.y, CheckMode::exhaustive()),
               DimensionMismatch);
  EXPECT_THROW(verify_mutually_inverse(LinearMap::identity(Q, 3), LinearMap::identity(Q, 4)), DimensionMismatch);
}

TEST(Iso, InversePairs) {
  const LinearMap phi = build_iso(IsoKind::phi, sweedler4());
  const LinearMap phi_inv = build_iso(IsoKind::phi_inv, sweedler4());
  EXPECT_TRUE(verify_mutually_inverse(phi, phi_inv).passed());

  const HopfAlgebraData c3 = cyclic_group_algebra(3);
  EXPECT_TRUE(verify_mutually_inverse(build_iso(IsoKind::alpha, c3), build_iso(IsoKind::alpha_inv, c3)).passed());

  const LinearMap p2 = build_iso(IsoKind::phi, cyclic_group_algebra(2));
  const CheckReport r = verify_mutually_inverse(p2, p2);
  ASSERT_FALSE(r.passed());
  EXPECT_EQ(r.violations().front().witness.size(), 1u);
}

TEST(Iso, CompositionIdentity) {
  for (const char* name : {"cyclic:2", "cyclic:3", "sweedler4", "dual_cyclic:3"}) {
    const CheckReport r = composition_identity(standard_triple(catalog_hopf(CatalogSpec::parse(name))));
    EXPECT_TRUE(r.passed()) << name << ": " << r.summary();
  }
}

TEST(Iso, FClosedFormMatchesGenerators) {
  for (const char* name : {"cyclic:2", "cyclic:3", "sweedler4"}) {
    const Built b(catalog_hopf(CatalogSpec::parse(name)));
    const LinearMap f = build_iso(IsoKind::f_map, b.t);
    const LinearMap fi = build_iso(IsoKind::f_map_inv, b.t);
    EXPECT_EQ(f, f_map_from_generators(b.t, b.diag)) << name;
    EXPECT_EQ(fi, f_map_inv_from_generators(b.t, b.two)) << name;
    // Y and Z are the two-sided and diagonal products of the standard triple, with the same slot orders
    EXPECT_EQ(f, build_iso(IsoKind::alpha, b.t)) << name;
    EXPECT_EQ(fi, build_iso(IsoKind::alpha_inv, b.t)) << name;
  }
}

// Every map is an algebra morphism with its displayed inverse, over the whole small catalog.
TEST(IsoProperty, AllKindsOverCatalog) {
  for (const CatalogSpec& spec : small_catalog()) {
    const HopfAlgebraData h = catalog_hopf(spec);
    if (h.dim() > 4) continue;  // taft:3:7 gives 6561-dimensional algebras
    const Built b(h);
    for (IsoKind k : kAll) {
      const LinearMap m = build_iso(k, b.t);
      const IsoEndpoints ep = endpoints(k);
      const CheckReport r =
          verify_algebra_morphism(m, b.handle(ep.source), b.handle(ep.target), default_morphism_mode(m.src_dim(), 5));
      EXPECT_TRUE(r.passed()) << spec.to_string() << " " << to_string(k) << ": " << r.summary();
      EXPECT_TRUE(verify_mutually_inverse(m, build_iso(inverse_of(k), b.t)).passed())
          << spec.to_string() << " " << to_string(k);
    }
  }
}

TEST(IsoProperty, DimensionOneIsIdentityUpToSlots) {
  const Built b(cyclic_group_algebra(1));
  for (IsoKind k : kAll) EXPECT_EQ(build_iso(k, b.t), LinearMap::identity(Q, 1)) << to_string(k);
}
