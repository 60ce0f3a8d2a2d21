#include "hopfxyz/actions.hpp"

#include "hopfxyz/errors.hpp"
#include "hopfxyz/kernels.hpp"

namespace hopf {

ActionData ActionData::make(Side side, BilinearTable table) {
  if (table.right_dim() != table.out_dim()) {
    throw DimensionMismatch("action must map actor x space -> space");
  }
  return ActionData{side, std::move(table)};
}

Vector ActionData::act(const Vector& actor, const Vector& m) const {
  return kernels::serial::bilinear(table, actor, m);
}

CoactionData CoactionData::make(Side side, Index coalgebra_dim, SparseColumns map) {
  if (map.dst_dim() != map.src_dim() * coalgebra_dim) {
    throw DimensionMismatch("coaction must map M -> C (x) M");
  }
  return CoactionData{side, coalgebra_dim, std::move(map)};
}

std::pair<ActionData, ActionData> regular_actions(const HopfAlgebraData& h) {
  const Index n = h.dim();
  const FieldSpec f = h.field();
  // (e_b -> f^a)(e_c) = f^a(e_c e_b),  (f^a <- e_b)(e_c) = f^a(e_b e_c)
  BilinearTable::Builder left(f, n, n, n), right(f, n, n, n);
  for (Index b = 0; b < n; ++b) {
    for (Index c = 0; c < n; ++c) {
      for (const Term& t : h.algebra.mult.at(c, b)) left.add(b, t.index, c, t.coef);
      for (const Term& t : h.algebra.mult.at(b, c)) right.add(b, t.index, c, t.coef);
    }
  }
  return {ActionData::make(Side::left, std::move(left).build()),
          ActionData::make(Side::right, std::move(right).build())};
}

ActionData trivial_action(Side side, const HopfAlgebraData& h, Index space_dim) {
  BilinearTable::Builder t(h.field(), h.dim(), space_dim, space_dim);
  for (Index i = 0; i < h.dim(); ++i) {
    const Scalar& e = h.coalgebra.counit[i];
    if (e.is_zero()) continue;
    for (Index m = 0; m < space_dim; ++m) t.add(i, m, m, e);
  }
  return ActionData::make(side, std::move(t).build());
}

namespace {

SparseVec unit_term(Index i, FieldSpec f) { return {{i, Scalar::one(f)}}; }

// Sum of act(e_i, x) over a sparse actor vector, for either side.
SparseVec act_sparse(const ActionData& act, std::span<const Term> actor, std::span<const Term> m) {
  return act.table.apply(actor, m);
}

void require_dims(const AlgebraData& actor, const ActionData& act) {
  if (actor.dim != act.actor_dim()) throw DimensionMismatch("actor dimension differs from action");
  if (actor.field != act.field()) throw FieldMismatch("actor and action fields differ");
}

}  // namespace

CheckReport check_module_axioms(const AlgebraData& actor, const ActionData& act, CheckMode mode) {
  require_dims(actor, act);
  const Index na = actor.dim, nm = act.space_dim();
  const FieldSpec f = actor.field;
  const SparseVec unit = to_sparse(actor.unit);
  const bool left = act.side == Side::left;

  if (mode.is_exhaustive()) {
    return check_over(nm, [&](std::size_t mi, CheckReport& r) {
      const SparseVec m = unit_term(static_cast<Index>(mi), f);
      r.expect_equal("unit acts as identity", {mi}, act_sparse(act, unit, m), m, f, nm);
      for (Index i = 0; i < na; ++i) {
        const SparseVec ei = unit_term(i, f);
        const SparseVec im = act_sparse(act, ei, m);
        for (Index j = 0; j < na; ++j) {
          const SparseVec ej = unit_term(j, f);
          const auto ij = actor.mult.at(i, j);
          if (left) {
            r.expect_equal("module associativity (ab).m = a.(b.m)", {i, j, mi}, act_sparse(act, ij, m),
                           act_sparse(act, ei, act_sparse(act, ej, m)), f, nm);
          } else {
            r.expect_equal("module associativity m.(ab) = (m.a).b", {i, j, mi}, act_sparse(act, ij, m),
                           act_sparse(act, ej, im), f, nm);
          }
        }
      }
    });
  }
  return check_over(mode.trials, [&](std::size_t trial, CheckReport& r) {
    auto rng = trial_rng(mode.seed, trial);
    const Vector x = random_vector(f, na, rng), y = random_vector(f, na, rng);
    const Vector m = random_vector(f, nm, rng);
    const Vector xy = actor.multiply(x, y);
    r.expect_equal("unit acts as identity", {trial}, act.act(actor.unit, m), m);
    r.expect_equal("module associativity", {trial}, act.act(xy, m),
                   left ? act.act(x, act.act(y, m)) : act.act(y, act.act(x, m)));
  });
}

CheckReport check_module_algebra(Side side, const HopfAlgebraData& h, const AlgebraData& a,
                                 const ActionData& act, CheckMode mode) {
  if (act.side != side) throw InvalidInput("action side does not match the requested check");
  if (act.space_dim() != a.dim) throw DimensionMismatch("action space differs from algebra");
  CheckReport report = check_module_axioms(h.algebra, act, mode);
  const Index nh = h.dim(), n = a.dim;
  const FieldSpec f = a.field;
  const SparseVec unit = to_sparse(a.unit);
  const std::string name = side == Side::left ? "module algebra h.(ab) = sum (h1.a)(h2.b)"
                                              : "module algebra (ab).h = sum (a.h1)(b.h2)";
  const std::string unit_name = side == Side::left ? "h.1 = eps(h) 1" : "1.h = eps(h) 1";

  auto twisted = [&](std::span<const Term> dh, std::span<const Term> x, std::span<const Term> y) {
    SparseVec out;
    for (const Term& t : dh) {
      const SparseVec l = act_sparse(act, unit_term(t.index / nh, f), x);
      const SparseVec r = act_sparse(act, unit_term(t.index % nh, f), y);
      append_scaled(out, t.coef, a.multiply(l, r));
    }
    canonicalize(out);
    return out;
  };

  if (mode.is_exhaustive()) {
    report.merge(check_over(nh, [&](std::size_t hi, CheckReport& r) {
      const Index hh = static_cast<Index>(hi);
      const SparseVec eh = unit_term(hh, f);
      const auto& dh = h.coalgebra.comult.column(hh);
      SparseVec eps_unit;
      append_scaled(eps_unit, h.coalgebra.counit[hh], unit);
      canonicalize(eps_unit);
      r.expect_equal(unit_name, {hi}, act_sparse(act, eh, unit), eps_unit, f, n);
      for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
          const SparseVec ei = unit_term(i, f), ej = unit_term(j, f);
          r.expect_equal(name, {hi, i, j}, act_sparse(act, eh, a.mult.at(i, j)), twisted(dh, ei, ej),
                         f, n);
        }
      }
    }));
    return report;
  }
  report.merge(check_over(mode.trials, [&](std::size_t trial, CheckReport& r) {
    auto rng = trial_rng(mode.seed ^ 0xa11ceULL, trial);
    const SparseVec x = to_sparse(random_vector(f, nh, rng));
    const SparseVec u = to_sparse(random_vector(f, n, rng));
    const SparseVec v = to_sparse(random_vector(f, n, rng));
    const SparseVec dx = h.coalgebra.comult.apply(x);
    Scalar ex = Scalar::zero(f);
    for (const Term& t : x) ex.add_mul(t.coef, h.coalgebra.counit[t.index]);
    SparseVec eps_unit;
    append_scaled(eps_unit, ex, unit);
    canonicalize(eps_unit);
    r.expect_equal(unit_name, {trial}, act_sparse(act, x, unit), eps_unit, f, n);
    r.expect_equal(name, {trial}, act_sparse(act, x, a.multiply(u, v)), twisted(dx, u, v), f, n);
  }));
  return report;
}

CheckReport check_comodule_axioms(const CoalgebraData& c, const CoactionData& co) {
  if (co.coalgebra_dim != c.dim) throw DimensionMismatch("coaction leg dimension differs from coalgebra");
  const Index nc = c.dim, nm = co.space_dim();
  const FieldSpec f = c.field;
  const bool left = co.side == Side::left;
  return check_over(nm, [&](std::size_t ji, CheckReport& r) {
    const auto& rho = co.map.column(static_cast<Index>(ji));
    SparseVec twice, via_delta, counit;
    for (const Term& t : rho) {
      const Index cc = left ? t.index / nm : t.index % nc;
      const Index k = left ? t.index % nm : t.index / nc;
      for (const Term& u : co.map.column(k)) {
        // left: (id (x) rho) rho, right: (rho (x) id) rho
        const Index idx = left ? (cc * nc + u.index / nm) * nm + u.index % nm : u.index * nc + cc;
        twice.push_back({idx, t.coef * u.coef});
      }
      for (const Term& u : c.comult.column(cc)) {
        const Index c1 = u.index / nc, c2 = u.index % nc;
        const Index idx = left ? u.index * nm + k : (k * nc + c1) * nc + c2;
        via_delta.push_back({idx, t.coef * u.coef});
      }
      counit.push_back({k, t.coef * c.counit[cc]});
    }
    canonicalize(twice);
    canonicalize(via_delta);
    canonicalize(counit);
    const std::size_t dim3 = static_cast<std::size_t>(nc) * nc * nm;
    r.expect_equal(left ? "left coassociativity" : "right coassociativity", {ji}, twice, via_delta, f,
                   dim3);
    r.expect_equal(left ? "left counit law" : "right counit law", {ji}, counit,
                   unit_term(static_cast<Index>(ji), f), f, nm);
  });
}

SparseColumns double_coaction(const CoactionData& left, const CoactionData& right) {
  const Index nm = left.space_dim(), nc = left.coalgebra_dim;
  SparseColumns out(left.field(), nm, nc * nm * nc);
  for (Index j = 0; j < nm; ++j) {
    SparseVec col;
    for (const Term& t : left.map.column(j)) {
      const Index cc = t.index / nm, k = t.index % nm;
      for (const Term& u : right.map.column(k)) {
        col.push_back({(cc * nm + u.index / nc) * nc + u.index % nc, t.coef * u.coef});
      }
    }
    out.set_column(j, std::move(col));
  }
  return out;
}

CheckReport check_bicomodule(const CoalgebraData& c, const CoactionData& left,
                             const CoactionData& right) {
  if (left.side != Side::left || right.side != Side::right) {
    throw InvalidInput("bicomodule needs a left and a right coaction");
  }
  if (left.space_dim() != right.space_dim()) throw DimensionMismatch("coaction spaces differ");
  CheckReport report = check_comodule_axioms(c, left);
  report.merge(check_comodule_axioms(c, right));
  const Index nm = left.space_dim(), nc = c.dim;
  const SparseColumns lr = double_coaction(left, right);
  report.merge(check_over(nm, [&](std::size_t ji, CheckReport& r) {
    SparseVec rl;
    for (const Term& t : right.map.column(static_cast<Index>(ji))) {
      const Index k = t.index / nc, d = t.index % nc;
      for (const Term& u : left.map.column(k)) rl.push_back({u.index * nc + d, t.coef * u.coef});
    }
    canonicalize(rl);
    r.expect_equal("bicomodule (id (x) rhoR) rhoL = (rhoL (x) id) rhoR", {ji},
                   lr.column(static_cast<Index>(ji)), rl, c.field,
                   static_cast<std::size_t>(nc) * nm * nc);
  }));
  return report;
}

BimoduleAlgebra build_bimodule_algebra(const HopfAlgebraData& h, const AlgebraData& a,
                                       const ActionData& a_act, const AlgebraData& b,
                                       const ActionData& b_act) {
  const CheckReport ra = check_module_algebra(Side::left, h, a, a_act);
  if (!ra.passed()) throw InvalidInput("left action is not a module algebra: " + ra.summary());
  const CheckReport rb = check_module_algebra(Side::right, h, b, b_act);
  if (!rb.passed()) throw InvalidInput("right action is not a module algebra: " + rb.summary());

  const Index na = a.dim, nb = b.dim, nh = h.dim(), n = na * nb;
  BilinearTable::Builder left(h.field(), nh, n, n), right(h.field(), nh, n, n);
  for (Index k = 0; k < nh; ++k) {
    for (Index i = 0; i < na; ++i) {
      for (Index j = 0; j < nb; ++j) {
        for (const Term& t : a_act.table.at(k, i)) left.add(k, i * nb + j, t.index * nb + j, t.coef);
        for (const Term& t : b_act.table.at(k, j)) right.add(k, i * nb + j, i * nb + t.index, t.coef);
      }
    }
  }
  return BimoduleAlgebra{tensor_algebra(a, b), ActionData::make(Side::left, std::move(left).build()),
                         ActionData::make(Side::right, std::move(right).build())};
}

ActionData bicomodule_to_module(const CoactionData& left, const CoactionData& right,
                                const HopfAlgebraData& h) {
  const CheckReport r = check_bicomodule(dual_hopf(h).coalgebra, left, right);
  if (!r.passed()) throw InvalidInput("not a bicomodule: " + r.summary());
  const Index n = h.dim(), nm = left.space_dim();
  const SparseColumns lr = double_coaction(left, right);
  BilinearTable::Builder t(h.field(), n * n, nm, nm);
  for (Index j = 0; j < nm; ++j) {
    for (const Term& u : lr.column(j)) {
      // m(-1) = f^c evaluated at g, m(1) = f^d evaluated at h
      const Index c = u.index / (nm * n), k = (u.index / n) % nm, d = u.index % n;
      t.add(d * n + c, j, k, u.coef);
    }
  }
  return ActionData::make(Side::left, std::move(t).build());
}

CheckReport check_comodule_algebra(const AlgebraData& a, const HopfAlgebraData& d,
                                   const CoactionData& rho) {
  if (rho.side != Side::right || rho.space_dim() != a.dim || rho.coalgebra_dim != d.dim()) {
    throw DimensionMismatch("comodule algebra map has the wrong shape");
  }
  const AlgebraData ad = tensor_algebra(a, d.algebra);
  const Index n = a.dim;
  CheckReport report = check_comodule_axioms(d.coalgebra, rho);
  report.merge(check_over(n, [&](std::size_t i, CheckReport& r) {
    const Index ii = static_cast<Index>(i);
    for (Index j = 0; j < n; ++j) {
      r.expect_equal("coaction is multiplicative", {i, j}, rho.map.apply(a.mult.at(ii, j)),
                     ad.multiply(rho.map.column(ii), rho.map.column(j)), a.field, ad.dim);
    }
  }));
  report.expect_equal("coaction preserves the unit", {}, rho.map.apply(a.unit), ad.unit);
  return report;
}

std::pair<LinearMap, CheckReport> comodule_algebra_map(const HopfAlgebraData& h) {
  const HopfAlgebraData dual = dual_hopf(h);
  const HopfAlgebraData d = tensor_hopf(dual, variant(dual, Variant::cop));
  const Index n = h.dim();
  const SparseColumns d2 = double_comult(dual.coalgebra);
  SparseColumns rho(h.field(), n, n * n * n);
  for (Index k = 0; k < n; ++k) {
    SparseVec col;
    for (const Term& t : d2.column(k)) {
      const Index p1 = t.index / (n * n), p2 = (t.index / n) % n, p3 = t.index % n;
      col.push_back({p2 * n * n + p3 * n + p1, t.coef});
    }
    rho.set_column(k, std::move(col));
  }
  const CoactionData co = CoactionData::make(Side::right, n * n, rho);
  return {LinearMap::from_columns(rho), check_comodule_algebra(dual.algebra, d, co)};
}

HopfTriple standard_triple(const HopfAlgebraData& h) {
  require_hopf(h, "standard_triple");
  const Index n = h.dim();
  const FieldSpec f = h.field();
  HopfAlgebraData dual = dual_hopf(h);
  HopfAlgebraData k = tensor_hopf(h, variant(h, Variant::op));
  LinearMap s_inv = antipode_inverse(h);

  // (e_h -> f^a <- e_g)(e_c) = f^a(e_g e_c e_h)
  BilinearTable::Builder a_tab(f, n * n, n, n);
  for (Index g = 0; g < n; ++g) {
    for (Index c = 0; c < n; ++c) {
      for (const Term& u : h.algebra.mult.at(g, c)) {
        for (Index hh = 0; hh < n; ++hh) {
          for (const Term& t : h.algebra.mult.at(u.index, hh)) {
            a_tab.add(hh * n + g, t.index, c, u.coef * t.coef);
          }
        }
      }
    }
  }
  ActionData a_act = ActionData::make(Side::left, std::move(a_tab).build());

  // f . k = S_K(k) . f with S_K = S (x) S^-1
  BilinearTable::Builder b_tab(f, n * n, n, n);
  for (Index kk = 0; kk < n * n; ++kk) {
    const SparseVec sk = k.antipode.column(kk);
    for (Index a = 0; a < n; ++a) {
      b_tab.set(kk, a, a_act.act(sk, SparseVec{{a, Scalar::one(f)}}));
    }
  }
  ActionData b_act = ActionData::make(Side::right, std::move(b_tab).build());

  AlgebraData a = dual.algebra;
  AlgebraData b = opposite_algebra(dual.algebra);
  const CheckReport ra = check_module_algebra(Side::left, k, a, a_act);
  const CheckReport rb = check_module_algebra(Side::right, k, b, b_act);
  if (!ra.passed() || !rb.passed()) {
    throw InvalidInput("standard triple actions fail verification: " +
                       (ra.passed() ? rb.summary() : ra.summary()));
  }
  return HopfTriple{h, std::move(dual), std::move(k), std::move(s_inv),
                    std::move(a), std::move(b), std::move(a_act), std::move(b_act)};
}

}  // namespace hopf
