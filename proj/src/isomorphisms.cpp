#include "hopfxyz/isomorphisms.hpp"

#include "hopfxyz/errors.hpp"

namespace hopf {

std::string to_string(IsoKind k) {
  switch (k) {
    case IsoKind::phi: return "phi";
    case IsoKind::phi_inv: return "phi_inv";
    case IsoKind::alpha: return "alpha";
    case IsoKind::alpha_inv: return "alpha_inv";
    case IsoKind::beta: return "beta";
    case IsoKind::beta_inv: return "beta_inv";
    case IsoKind::f_map: return "f";
    case IsoKind::f_map_inv: return "f_inv";
  }
  return "?";
}

IsoEndpoints endpoints(IsoKind k) {
  switch (k) {
    case IsoKind::phi: return {Provenance::X, Provenance::Y};
    case IsoKind::phi_inv: return {Provenance::Y, Provenance::X};
    case IsoKind::alpha: return {Provenance::Y, Provenance::Z};
    case IsoKind::alpha_inv: return {Provenance::Z, Provenance::Y};
    case IsoKind::beta: return {Provenance::X, Provenance::Z};
    case IsoKind::beta_inv: return {Provenance::Z, Provenance::X};
    case IsoKind::f_map: return {Provenance::two_sided, Provenance::diagonal};
    case IsoKind::f_map_inv: return {Provenance::diagonal, Provenance::two_sided};
  }
  throw InvalidInput("unknown isomorphism kind");
}

namespace {

struct Legs {
  Index a, b, c;
  Scalar coef;
};

class Formulas {
 public:
  explicit Formulas(const HopfTriple& t)
      : t_(t), n_(t.n()), f_(t.h.field()), d2_(double_comult(t.h.coalgebra)) {}

  Index n() const { return n_; }

  std::vector<Legs> delta(Index i) const {
    std::vector<Legs> out;
    for (const Term& d : t_.h.coalgebra.comult.column(i)) out.push_back({d.index / n_, d.index % n_, 0, d.coef});
    return out;
  }
  std::vector<Legs> delta2(Index i) const {
    std::vector<Legs> out;
    for (const Term& d : d2_.column(i)) {
      out.push_back({d.index / (n_ * n_), (d.index / n_) % n_, d.index % n_, d.coef});
    }
    return out;
  }

  /// x -> p <- y for basis x, y.
  SparseVec hit(Index x, Index p, Index y) const {
    const auto r = t_.hit(x, y, p);
    return SparseVec(r.begin(), r.end());
  }
  /// u(x) -> p <- v(y) for the linear maps u, v in {S, S^-1}.
  SparseVec hit(const LinearMap& u, Index x, Index p, const LinearMap& v, Index y) const {
    SparseVec k;
    for (const Term& a : u.column(x)) {
      for (const Term& b : v.column(y)) k.push_back({a.index * n_ + b.index, a.coef * b.coef});
    }
    canonicalize(k);
    return t_.a_act.act(k, SparseVec{{p, Scalar::one(f_)}});
  }

  std::array<Index, 4> split(Index i) const {
    return {i / (n_ * n_ * n_), (i / (n_ * n_)) % n_, (i / n_) % n_, i % n_};
  }
  Index join(Index a, Index b, Index c, Index d) const { return ((a * n_ + b) * n_ + c) * n_ + d; }

 private:
  const HopfTriple& t_;
  Index n_;
  FieldSpec f_;
  SparseColumns d2_;
};

template <class Column>
LinearMap tabulate_map(FieldSpec f, Index src, Index dst, Column column) {
  std::vector<SparseVec> cols(src);
#pragma omp parallel for schedule(dynamic, 8)
  for (Index c = 0; c < src; ++c) {
    cols[c] = column(c);
    canonicalize(cols[c]);
  }
  LinearMap m(f, src, dst);
  for (Index c = 0; c < src; ++c) m.set_column(c, cols[c]);
  return m;
}

LinearMap build_f(const HopfTriple& t) {
  const Index na = t.a.dim, nk = t.k.dim(), nb = t.b.dim;
  const LinearMap sk_inv = antipode_inverse(t.k);
  return tabulate_map(t.h.field(), na * nk * nb, na * nb * nk, [&](Index c) {
    const Index a = c / (nk * nb), k = (c / nb) % nk, b = c % nb;
    SparseVec out;
    for (const Term& d : t.k.coalgebra.comult.column(k)) {
      const SparseVec moved = t.b_act.act(sk_inv.column(d.index % nk), SparseVec{{b, Scalar::one(t.h.field())}});
      for (const Term& v : moved) out.push_back({(a * nb + v.index) * nk + d.index / nk, d.coef * v.coef});
    }
    return out;
  });
}

LinearMap build_f_inv(const HopfTriple& t) {
  const Index na = t.a.dim, nk = t.k.dim(), nb = t.b.dim;
  return tabulate_map(t.h.field(), na * nb * nk, na * nk * nb, [&](Index c) {
    const Index a = c / (nb * nk), b = (c / nk) % nb, k = c % nk;
    SparseVec out;
    for (const Term& d : t.k.coalgebra.comult.column(k)) {
      for (const Term& v : t.b_act.table.at(d.index % nk, b)) {
        out.push_back({(a * nk + d.index / nk) * nb + v.index, d.coef * v.coef});
      }
    }
    return out;
  });
}

void compare_columns(CheckReport& report, const std::string& name, const LinearMap& lhs,
                     const LinearMap& rhs) {
  report.merge(check_over(lhs.src_dim(), [&](std::size_t c, CheckReport& r) {
    const auto cc = static_cast<Index>(c);
    r.expect_equal(name, {c}, lhs.column(cc), rhs.column(cc), lhs.field(), lhs.dst_dim());
  }));
}

}  // namespace

LinearMap build_iso(IsoKind kind, const HopfTriple& t) {
  if (kind == IsoKind::f_map) return build_f(t);
  if (kind == IsoKind::f_map_inv) return build_f_inv(t);

  const Formulas F(t);
  const Index n = F.n(), dim = n * n * n * n;
  const LinearMap& S = t.h.antipode;
  const LinearMap& Si = t.s_inv;
  auto column = [&](Index c) -> SparseVec {
    const auto [w0, w1, w2, w3] = F.split(c);
    SparseVec out;
    switch (kind) {
      case IsoKind::phi: {  // X (g, h, p, q) -> Y
        const Index g = w0, h = w1, p = w2, q = w3;
        for (const Legs& dh : F.delta(h))
          for (const Legs& dg : F.delta(g))
            for (const Term& P : F.hit(dh.a, p, dg.a))
              out.push_back({F.join(P.index, dh.b, dg.b, q), dh.coef * dg.coef * P.coef});
        break;
      }
      case IsoKind::phi_inv: {  // Y (p, h, g, q) -> X
        const Index p = w0, h = w1, g = w2, q = w3;
        for (const Legs& dh : F.delta(h))
          for (const Legs& dg : F.delta(g))
            for (const Term& P : F.hit(Si, dh.a, p, S, dg.a))
              out.push_back({F.join(dg.b, dh.b, P.index, q), dh.coef * dg.coef * P.coef});
        break;
      }
      case IsoKind::alpha: {  // Y (p, h, g, q) -> Z
        const Index p = w0, h = w1, g = w2, q = w3;
        for (const Legs& dh : F.delta(h))
          for (const Legs& dg : F.delta(g))
            for (const Term& Qt : F.hit(dh.b, q, dg.b))
              out.push_back({F.join(p, Qt.index, dh.a, dg.a), dh.coef * dg.coef * Qt.coef});
        break;
      }
      case IsoKind::alpha_inv: {  // Z (p, q, h, g) -> Y
        const Index p = w0, q = w1, h = w2, g = w3;
        for (const Legs& dh : F.delta(h))
          for (const Legs& dg : F.delta(g))
            for (const Term& Qt : F.hit(S, dh.b, q, Si, dg.b))
              out.push_back({F.join(p, dh.a, dg.a, Qt.index), dh.coef * dg.coef * Qt.coef});
        break;
      }
      case IsoKind::beta: {  // X (g, h, p, q) -> Z
        const Index g = w0, h = w1, p = w2, q = w3;
        for (const Legs& dh : F.delta2(h))
          for (const Legs& dg : F.delta2(g)) {
            const SparseVec Q = F.hit(dh.c, q, dg.c);
            for (const Term& P : F.hit(dh.a, p, dg.a))
              for (const Term& Qt : Q)
                out.push_back({F.join(P.index, Qt.index, dh.b, dg.b), dh.coef * dg.coef * P.coef * Qt.coef});
          }
        break;
      }
      case IsoKind::beta_inv: {  // Z (p, q, h, g) -> X
        const Index p = w0, q = w1, h = w2, g = w3;
        for (const Legs& dh : F.delta2(h))
          for (const Legs& dg : F.delta2(g)) {
            const SparseVec Q = F.hit(S, dh.c, q, Si, dg.c);
            for (const Term& P : F.hit(Si, dh.a, p, S, dg.a))
              for (const Term& Qt : Q)
                out.push_back({F.join(dg.b, dh.b, P.index, Qt.index), dh.coef * dg.coef * P.coef * Qt.coef});
          }
        break;
      }
      default:
        break;
    }
    return out;
  };
  return tabulate_map(t.h.field(), dim, dim, column);
}

LinearMap build_iso(IsoKind kind, const HopfAlgebraData& h) { return build_iso(kind, standard_triple(h)); }

LinearMap f_map_from_generators(const HopfTriple& t, const AlgebraHandle& diagonal) {
  const Index na = t.a.dim, nk = t.k.dim(), nb = t.b.dim;
  const FieldSpec f = t.h.field();
  const SparseVec one_a = to_sparse(t.a.unit), one_b = to_sparse(t.b.unit), one_k = to_sparse(t.k.algebra.unit);
  return tabulate_map(f, na * nk * nb, na * nb * nk, [&](Index c) {
    const Index a = c / (nk * nb), k = (c / nb) % nk, b = c % nb;
    SparseVec left, right;
    for (const Term& u : one_b) left.push_back({(a * nb + u.index) * nk + k, u.coef});
    for (const Term& u : one_a)
      for (const Term& w : one_k) right.push_back({(u.index * nb + b) * nk + w.index, u.coef * w.coef});
    canonicalize(left);
    canonicalize(right);
    return diagonal.multiply(left, right);
  });
}

LinearMap f_map_inv_from_generators(const HopfTriple& t, const AlgebraHandle& two_sided) {
  const Index na = t.a.dim, nk = t.k.dim(), nb = t.b.dim;
  const FieldSpec f = t.h.field();
  const SparseVec one_a = to_sparse(t.a.unit), one_b = to_sparse(t.b.unit), one_k = to_sparse(t.k.algebra.unit);
  return tabulate_map(f, na * nb * nk, na * nk * nb, [&](Index c) {
    const Index a = c / (nb * nk), b = (c / nk) % nb, k = c % nk;
    SparseVec left, right;
    for (const Term& u : one_a)
      for (const Term& w : one_k) left.push_back({(u.index * nk + w.index) * nb + b, u.coef * w.coef});
    for (const Term& u : one_b) right.push_back({(a * nk + k) * nb + u.index, u.coef});
    canonicalize(left);
    canonicalize(right);
    return two_sided.multiply(left, right);
  });
}

CheckMode default_morphism_mode(std::size_t dim, std::uint64_t seed) {
  return CheckMode::automatic(dim, kExhaustiveMorphismDim, kMorphismTrials, seed);
}

CheckReport verify_algebra_morphism(const LinearMap& map, const AlgebraHandle& src,
                                    const AlgebraHandle& dst, CheckMode mode) {
  if (map.src_dim() != src.dim() || map.dst_dim() != dst.dim()) {
    throw DimensionMismatch("map dimensions do not match the algebras");
  }
  if (map.field() != src.field() || src.field() != dst.field()) throw FieldMismatch("morphism fields differ");
  const SparseColumns cols = map.to_columns();
  const FieldSpec f = src.field();
  // tabulate before entering parallel regions
  const BilinearTable& st = src.table();
  dst.table();

  CheckReport report;
  report.expect_equal("map(1) = 1", {}, cols.apply(src.unit()), dst.unit());
  if (mode.is_exhaustive()) {
    report.merge(check_over(src.dim(), [&](std::size_t i, CheckReport& r) {
      const auto ii = static_cast<Index>(i);
      for (Index j = 0; j < src.dim(); ++j) {
        r.expect_equal("map(xy) = map(x) map(y)", {i, j}, cols.apply(st.at(ii, j)),
                       dst.multiply(cols.column(ii), cols.column(j)), f, dst.dim());
      }
    }));
    return report;
  }
  report.merge(check_over(mode.trials, [&](std::size_t trial, CheckReport& r) {
    auto rng = trial_rng(mode.seed, trial);
    const Vector x = random_vector(f, src.dim(), rng);
    const Vector y = random_vector(f, src.dim(), rng);
    r.expect_equal("map(xy) = map(x) map(y)", {trial}, cols.apply(kernels::serial::bilinear(st, x, y)),
                   kernels::serial::bilinear(dst.table(), cols.apply(x), cols.apply(y)));
  }));
  return report;
}

CheckReport verify_mutually_inverse(const LinearMap& m1, const LinearMap& m2) {
  if (m1.src_dim() != m2.dst_dim() || m1.dst_dim() != m2.src_dim()) {
    throw DimensionMismatch("maps are not composable both ways");
  }
  CheckReport report;
  compare_columns(report, "m1 m2 = id", kernels::parallel::compose(m1, m2),
                  LinearMap::identity(m1.field(), m1.dst_dim()));
  compare_columns(report, "m2 m1 = id", kernels::parallel::compose(m2, m1),
                  LinearMap::identity(m1.field(), m1.src_dim()));
  return report;
}

CheckReport composition_identity(const HopfTriple& t) {
  const LinearMap phi = build_iso(IsoKind::phi, t), phi_inv = build_iso(IsoKind::phi_inv, t);
  const LinearMap alpha = build_iso(IsoKind::alpha, t), alpha_inv = build_iso(IsoKind::alpha_inv, t);
  CheckReport report;
  compare_columns(report, "beta = alpha phi", build_iso(IsoKind::beta, t),
                  kernels::parallel::compose(alpha, phi));
  compare_columns(report, "beta^-1 = phi^-1 alpha^-1", build_iso(IsoKind::beta_inv, t),
                  kernels::parallel::compose(phi_inv, alpha_inv));
  return report;
}

}  // namespace hopf
