#include "hopfxyz/hopf_bimodules.hpp"

#include <charconv>

#include "hopfxyz/errors.hpp"

namespace hopf {

namespace {

SparseVec unit_term(Index i, FieldSpec f) { return {{i, Scalar::one(f)}}; }

void axpy(SparseVec& out, const Scalar& c, std::span<const Term> v) {
  for (const Term& t : v) out.push_back({t.index, c * t.coef});
}

// out += c * (x (x) y) with index x * ny + y
void add_outer(SparseVec& out, const Scalar& c, std::span<const Term> x, std::span<const Term> y, Index ny) {
  for (const Term& a : x) {
    const Scalar ca = c * a.coef;
    for (const Term& b : y) out.push_back({a.index * ny + b.index, ca * b.coef});
  }
}

SparseVec done(SparseVec v) {
  canonicalize(v);
  return v;
}

template <class Fn>
ActionData tabulate_action(FieldSpec f, Index na, Index nm, Fn fn) {
  std::vector<SparseVec> rows(static_cast<std::size_t>(na) * nm);
#pragma omp parallel for schedule(dynamic, 4)
  for (Index i = 0; i < na; ++i) {
    for (Index j = 0; j < nm; ++j) rows[static_cast<std::size_t>(i) * nm + j] = done(fn(i, j));
  }
  return ActionData::make(Side::left, BilinearTable::from_rows(f, na, nm, nm, std::move(rows)));
}

void require_shape(const HopfBimoduleData& m, Index n) {
  const Index d = m.space_dim;
  const bool ok = m.left_act.side == Side::left && m.right_act.side == Side::right &&
                  m.left_act.actor_dim() == n && m.right_act.actor_dim() == n && m.left_act.space_dim() == d &&
                  m.right_act.space_dim() == d && m.left_co.side == Side::left && m.right_co.side == Side::right &&
                  m.left_co.coalgebra_dim == n && m.right_co.coalgebra_dim == n && m.left_co.space_dim() == d &&
                  m.right_co.space_dim() == d;
  if (!ok) throw DimensionMismatch("Hopf bimodule data does not match dim H = " + std::to_string(n));
}

void require_valid(const HopfBimoduleData& m, const HopfAlgebraData& h) {
  const CheckReport r = check_hopf_bimodule(m, h);
  if (!r.passed()) throw InvalidInput("not a Hopf bimodule: " + r.summary());
}

// Actions of a verified bimodule together with its bicomodule action of H (x) H^op.
struct BimoduleOps {
  const HopfBimoduleData& m;
  ActionData k;
  FieldSpec f;

  BimoduleOps(const HopfBimoduleData& mm, const HopfAlgebraData& h)
      : m(mm), k(bicomodule_to_module(mm.left_co, mm.right_co, h)), f(h.field()) {}

  SparseVec left(std::span<const Term> p, std::span<const Term> v) const { return m.left_act.act(p, v); }
  SparseVec right(std::span<const Term> v, std::span<const Term> q) const { return m.right_act.act(q, v); }
  SparseVec kact(Index hg, std::span<const Term> v) const { return k.act(unit_term(hg, f), v); }
};

CheckReport module_check(const ActionData& act, Index nm, FieldSpec f, const Vector& unit,
                         const std::function<SparseVec(Index, Index)>& basis_product,
                         const std::function<Vector(const Vector&, const Vector&)>& multiply, Index na,
                         CheckMode mode) {
  const SparseVec u = to_sparse(unit);
  if (mode.is_exhaustive()) {
    return check_over(nm, [&](std::size_t mi, CheckReport& r) {
      const SparseVec m = unit_term(static_cast<Index>(mi), f);
      r.expect_equal("unit acts as identity", {mi}, act.act(u, m), m, f, nm);
      std::vector<SparseVec> jm(na);
      for (Index j = 0; j < na; ++j) jm[j] = act.act(unit_term(j, f), m);
      for (Index i = 0; i < na; ++i) {
        for (Index j = 0; j < na; ++j) {
          r.expect_equal("module associativity (ab).m = a.(b.m)", {i, j, mi}, act.act(basis_product(i, j), m),
                         act.act(unit_term(i, f), jm[j]), f, nm);
        }
      }
    });
  }
  return check_over(mode.trials, [&](std::size_t trial, CheckReport& r) {
    auto rng = trial_rng(mode.seed, trial);
    const Vector x = random_vector(f, na, rng), y = random_vector(f, na, rng);
    const Vector m = random_vector(f, nm, rng);
    r.expect_equal("unit acts as identity", {trial}, act.act(unit, m), m);
    r.expect_equal("module associativity", {trial}, act.act(multiply(x, y), m), act.act(x, act.act(y, m)));
  });
}

}  // namespace

CheckReport check_hopf_bimodule(const HopfBimoduleData& m, const HopfAlgebraData& h) {
  const Index n = h.dim(), d = m.space_dim;
  require_shape(m, n);
  const HopfAlgebraData dual = dual_hopf(h);
  const FieldSpec f = h.field();
  const BilinearTable& mult = dual.algebra.mult;
  const SparseColumns& comult = dual.coalgebra.comult;

  CheckReport report = check_module_axioms(dual.algebra, m.left_act);
  report.merge(check_module_axioms(dual.algebra, m.right_act));
  report.merge(check_bicomodule(dual.coalgebra, m.left_co, m.right_co));

  report.merge(check_over(d, [&](std::size_t ki, CheckReport& r) {
    const Index k = static_cast<Index>(ki);
    const SparseVec mk = unit_term(k, f);
    for (Index p = 0; p < n; ++p) {
      const SparseVec pm = m.left_act.act(unit_term(p, f), mk);
      for (Index q = 0; q < n; ++q) {
        r.expect_equal("actions commute p.(m.q) = (p.m).q", {p, k, q},
                       m.left_act.act(unit_term(p, f), m.right_act.act(unit_term(q, f), mk)),
                       m.right_act.act(unit_term(q, f), pm), f, d);
      }
    }
    // rhoL(p.m) = sum p1 m(-1) (x) p2.m(0) and rhoR(p.m) = sum p1.m(0) (x) p2 m(1)
    for (Index p = 0; p < n; ++p) {
      const SparseVec pm = m.left_act.act(unit_term(p, f), mk);
      SparseVec l, rr;
      for (const Term& dp : comult.column(p)) {
        const Index p1 = dp.index / n, p2 = dp.index % n;
        for (const Term& co : m.left_co.map.column(k)) {
          const Index c = co.index / d, k0 = co.index % d;
          add_outer(l, dp.coef * co.coef, mult.at(p1, c), m.left_act.table.at(p2, k0), d);
        }
        for (const Term& co : m.right_co.map.column(k)) {
          const Index k0 = co.index / n, c = co.index % n;
          add_outer(rr, dp.coef * co.coef, m.left_act.table.at(p1, k0), mult.at(p2, c), n);
        }
      }
      r.expect_equal("rhoL(p.m) = p1 m(-1) (x) p2.m(0)", {p, k}, m.left_co.map.apply(pm), done(std::move(l)), f,
                     static_cast<std::size_t>(n) * d);
      r.expect_equal("rhoR(p.m) = p1.m(0) (x) p2 m(1)", {p, k}, m.right_co.map.apply(pm), done(std::move(rr)), f,
                     static_cast<std::size_t>(n) * d);
    }
    // rhoL(m.q) = sum m(-1) q1 (x) m(0).q2 and rhoR(m.q) = sum m(0).q1 (x) m(1) q2
    for (Index q = 0; q < n; ++q) {
      const SparseVec mq = m.right_act.act(unit_term(q, f), mk);
      SparseVec l, rr;
      for (const Term& dq : comult.column(q)) {
        const Index q1 = dq.index / n, q2 = dq.index % n;
        for (const Term& co : m.left_co.map.column(k)) {
          const Index c = co.index / d, k0 = co.index % d;
          add_outer(l, dq.coef * co.coef, mult.at(c, q1), m.right_act.table.at(q2, k0), d);
        }
        for (const Term& co : m.right_co.map.column(k)) {
          const Index k0 = co.index / n, c = co.index % n;
          add_outer(rr, dq.coef * co.coef, m.right_act.table.at(q1, k0), mult.at(c, q2), n);
        }
      }
      r.expect_equal("rhoL(m.q) = m(-1) q1 (x) m(0).q2", {k, q}, m.left_co.map.apply(mq), done(std::move(l)), f,
                     static_cast<std::size_t>(n) * d);
      r.expect_equal("rhoR(m.q) = m(0).q1 (x) m(1) q2", {k, q}, m.right_co.map.apply(mq), done(std::move(rr)), f,
                     static_cast<std::size_t>(n) * d);
    }
  }));
  return report;
}

BimoduleKind BimoduleKind::parse(std::string_view s) {
  if (s == "regular") return {Kind::regular, 0};
  if (s.starts_with("free:")) {
    const std::string_view num = s.substr(5);
    Index v = 0;
    const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), v);
    if (ec == std::errc() && ptr == num.data() + num.size() && v >= 1) return {Kind::free, v};
  }
  throw ParseError("bimodule must be 'regular' or 'free:N' with N >= 1, got '" + std::string(s) + "'");
}

std::string BimoduleKind::to_string() const {
  return kind == Kind::regular ? "regular" : "free:" + std::to_string(v_dim);
}

HopfBimoduleData example_bimodule(const HopfAlgebraData& h, BimoduleKind kind) {
  const HopfAlgebraData dual = dual_hopf(h);
  const Index n = h.dim();
  const FieldSpec f = h.field();
  const BilinearTable& mult = dual.algebra.mult;
  const SparseColumns& comult = dual.coalgebra.comult;

  if (kind.kind == BimoduleKind::Kind::regular) {
    BilinearTable::Builder left(f, n, n, n), right(f, n, n, n);
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        left.set(a, b, SparseVec(mult.at(a, b).begin(), mult.at(a, b).end()));
        right.set(a, b, SparseVec(mult.at(b, a).begin(), mult.at(b, a).end()));
      }
    }
    return {n, ActionData::make(Side::left, std::move(left).build()),
            ActionData::make(Side::right, std::move(right).build()), CoactionData::make(Side::left, n, comult),
            CoactionData::make(Side::right, n, comult)};
  }

  const Index v = kind.v_dim, d = n * v * n;
  auto idx = [&](Index x, Index s, Index y) { return (x * v + s) * n + y; };
  BilinearTable::Builder left(f, n, d, d), right(f, n, d, d);
  SparseColumns rho_l(f, d, n * d), rho_r(f, d, d * n);
  for (Index x = 0; x < n; ++x) {
    for (Index s = 0; s < v; ++s) {
      for (Index y = 0; y < n; ++y) {
        const Index j = idx(x, s, y);
        for (Index p = 0; p < n; ++p) {
          for (const Term& t : mult.at(p, x)) left.add(p, j, idx(t.index, s, y), t.coef);
          for (const Term& t : mult.at(y, p)) right.add(p, j, idx(x, s, t.index), t.coef);
        }
        SparseVec l, r;
        for (const Term& dx : comult.column(x)) {
          const Index x1 = dx.index / n, x2 = dx.index % n;
          for (const Term& dy : comult.column(y)) {
            const Index y1 = dy.index / n, y2 = dy.index % n;
            for (const Term& t : mult.at(x1, y1)) l.push_back({t.index * d + idx(x2, s, y2), dx.coef * dy.coef * t.coef});
            for (const Term& t : mult.at(x2, y2)) r.push_back({idx(x1, s, y1) * n + t.index, dx.coef * dy.coef * t.coef});
          }
        }
        rho_l.set_column(j, std::move(l));
        rho_r.set_column(j, std::move(r));
      }
    }
  }
  return {d, ActionData::make(Side::left, std::move(left).build()),
          ActionData::make(Side::right, std::move(right).build()), CoactionData::make(Side::left, n, std::move(rho_l)),
          CoactionData::make(Side::right, n, std::move(rho_r))};
}

ActingAlgebra parse_acting_algebra(std::string_view name) {
  if (name == "X") return ActingAlgebra::X;
  if (name == "Y") return ActingAlgebra::Y;
  if (name == "Z") return ActingAlgebra::Z;
  if (name == "left-smash") return ActingAlgebra::left_smash;
  if (name == "right-smash") return ActingAlgebra::right_smash;
  throw ParseError("unknown acting algebra '" + std::string(name) + "'");
}

std::string to_string(ActingAlgebra a) {
  switch (a) {
    case ActingAlgebra::X: return "X";
    case ActingAlgebra::Y: return "Y";
    case ActingAlgebra::Z: return "Z";
    case ActingAlgebra::left_smash: return "left-smash";
    case ActingAlgebra::right_smash: return "right-smash";
  }
  return "?";
}

ActionData derived_action(const HopfBimoduleData& m, const HopfTriple& t, ActingAlgebra which) {
  require_valid(m, t.h);
  const BimoduleOps ops(m, t.h);
  const Index n = t.n(), d = m.space_dim;
  const FieldSpec f = t.h.field();
  const SparseColumns& comult = t.h.coalgebra.comult;
  const SparseColumns d2 = double_comult(t.h.coalgebra);

  switch (which) {
    case ActingAlgebra::Z:
      return tabulate_action(f, n * n * n * n, d, [&](Index i, Index j) {
        const Index p = i / (n * n * n), q = (i / (n * n)) % n, hg = i % (n * n);
        return ops.right(ops.left(unit_term(p, f), ops.kact(hg, unit_term(j, f))), unit_term(q, f));
      });
    case ActingAlgebra::Y:
      return tabulate_action(f, n * n * n * n, d, [&](Index i, Index j) {
        const Index p = i / (n * n * n), h = (i / (n * n)) % n, g = (i / n) % n, q = i % n;
        SparseVec out;
        for (const Term& dh : comult.column(h)) {
          for (const Term& dg : comult.column(g)) {
            const SparseVec pk = ops.left(unit_term(p, f), ops.kact(dh.index / n * n + dg.index / n, unit_term(j, f)));
            axpy(out, dh.coef * dg.coef, ops.right(pk, t.hit(dh.index % n, dg.index % n, q)));
          }
        }
        return out;
      });
    case ActingAlgebra::X:
      return tabulate_action(f, n * n * n * n, d, [&](Index i, Index j) {
        const Index g = i / (n * n * n), h = (i / (n * n)) % n, p = (i / n) % n, q = i % n;
        SparseVec out;
        for (const Term& dh : d2.column(h)) {
          const Index h1 = dh.index / (n * n), h2 = (dh.index / n) % n, h3 = dh.index % n;
          for (const Term& dg : d2.column(g)) {
            const Index g1 = dg.index / (n * n), g2 = (dg.index / n) % n, g3 = dg.index % n;
            const SparseVec km = ops.kact(h2 * n + g2, unit_term(j, f));
            axpy(out, dh.coef * dg.coef, ops.right(ops.left(t.hit(h1, g1, p), km), t.hit(h3, g3, q)));
          }
        }
        return out;
      });
    case ActingAlgebra::left_smash:
      return tabulate_action(f, n * n * n, d, [&](Index i, Index j) {
        return ops.left(unit_term(i / (n * n), f), ops.kact(i % (n * n), unit_term(j, f)));
      });
    case ActingAlgebra::right_smash:
      return tabulate_action(f, n * n * n, d, [&](Index i, Index j) {
        return ops.kact(i / n, ops.right(unit_term(j, f), unit_term(i % n, f)));
      });
  }
  throw InvalidInput("unknown acting algebra");
}

ActionData derived_action(const HopfBimoduleData& m, const HopfAlgebraData& h, ActingAlgebra which) {
  return derived_action(m, standard_triple(h), which);
}

CheckReport check_module_axioms(const AlgebraHandle& actor, const ActionData& act, CheckMode mode) {
  if (act.side != Side::left || act.actor_dim() != actor.dim()) {
    throw DimensionMismatch("action does not match the acting algebra");
  }
  const BilinearTable& table = actor.table();
  return module_check(
      act, act.space_dim(), actor.field(), actor.unit(),
      [&](Index i, Index j) {
        const auto r = table.at(i, j);
        return SparseVec(r.begin(), r.end());
      },
      [&](const Vector& x, const Vector& y) { return kernels::serial::bilinear(table, x, y); }, actor.dim(), mode);
}

ActionData outer_action(const HopfBimoduleData& m) {
  const Index n = m.left_act.actor_dim(), d = m.space_dim;
  const FieldSpec f = m.left_act.field();
  return tabulate_action(f, n * n, d, [&](Index i, Index j) {
    return m.right_act.act(unit_term(i % n, f), m.left_act.act(unit_term(i / n, f), unit_term(j, f)));
  });
}

CheckMode default_correspondence_mode(Index h_dim, std::uint64_t seed) {
  return h_dim <= 3 ? CheckMode::exhaustive() : CheckMode::random(kMorphismTrials, seed);
}

namespace {

// act_src(x, m) = act_dst(map(x), m) for all basis x, m or random x, m.
void correspond(CheckReport& report, const std::string& name, const ActionData& src, const ActionData& dst,
                const LinearMap& map, CheckMode mode) {
  const SparseColumns cols = map.to_columns();
  const FieldSpec f = src.field();
  const Index na = src.actor_dim(), d = src.space_dim();
  if (mode.is_exhaustive()) {
    report.merge(check_over(na, [&](std::size_t xi, CheckReport& r) {
      const Index x = static_cast<Index>(xi);
      for (Index j = 0; j < d; ++j) {
        const auto lhs = src.table.at(x, j);
        r.expect_equal(name, {xi, j}, SparseVec(lhs.begin(), lhs.end()), dst.act(cols.column(x), unit_term(j, f)), f,
                       d);
      }
    }));
    return;
  }
  report.merge(check_over(mode.trials, [&](std::size_t trial, CheckReport& r) {
    auto rng = trial_rng(mode.seed, trial);
    const Vector x = random_vector(f, na, rng);
    const Vector m = random_vector(f, d, rng);
    r.expect_equal(name, {trial}, src.act(x, m), dst.act(cols.apply(x), m));
  }));
}

}  // namespace

CheckReport verify_action_correspondence(const HopfBimoduleData& m, const HopfAlgebraData& h, CheckMode mode) {
  const HopfTriple t = standard_triple(h);
  const ActionData x = derived_action(m, t, ActingAlgebra::X);
  const ActionData y = derived_action(m, t, ActingAlgebra::Y);
  const ActionData z = derived_action(m, t, ActingAlgebra::Z);
  CheckReport report;
  correspond(report, "x.m = phi(x).m", x, y, build_iso(IsoKind::phi, t), mode);
  correspond(report, "x.m = beta(x).m", x, z, build_iso(IsoKind::beta, t), mode);
  correspond(report, "y.m = alpha(y).m", y, z, build_iso(IsoKind::alpha, t), mode);
  return report;
}

namespace {

// (c x k).m = c.(k.m), index c * nk + k
ActionData assemble_diagonal(const ActionData& c_act, const ActionData& h_act) {
  const Index nc = c_act.actor_dim(), nk = h_act.actor_dim(), d = c_act.space_dim();
  const FieldSpec f = c_act.field();
  return tabulate_action(f, nc * nk, d, [&](Index i, Index j) {
    const auto km = h_act.table.at(i % nk, j);
    return c_act.act(unit_term(i / nk, f), km);
  });
}

}  // namespace

CheckReport verify_f_correspondence(const HopfBimoduleData& m, const HopfAlgebraData& h, CheckMode mode) {
  require_valid(m, h);
  const HopfTriple t = standard_triple(h);
  const TripleModuleData tm = triple_module_from_bimodule(m, h);
  const ActionData two = assemble_two_sided(tm);
  const ActionData diag = assemble_diagonal(outer_action(m), tm.h_act);
  CheckReport report;
  correspond(report, "(a # k # b).m = f(a # k # b).m", two, diag, build_iso(IsoKind::f_map, t), mode);
  return report;
}

TripleModuleData triple_module_from_bimodule(const HopfBimoduleData& m, const HopfAlgebraData& h) {
  require_shape(m, h.dim());
  return {m.space_dim, m.left_act, bicomodule_to_module(m.left_co, m.right_co, h),
          ActionData::make(Side::left, m.right_act.table)};
}

ActionData assemble_two_sided(const TripleModuleData& tm) {
  const Index na = tm.a_act.actor_dim(), nh = tm.h_act.actor_dim(), nb = tm.b_act.actor_dim();
  const FieldSpec f = tm.a_act.field();
  return tabulate_action(f, na * nh * nb, tm.space_dim, [&](Index i, Index j) {
    const Index a = i / (nh * nb), hh = (i / nb) % nh, b = i % nb;
    const auto bm = tm.b_act.table.at(b, j);
    return tm.a_act.act(unit_term(a, f), tm.h_act.act(unit_term(hh, f), bm));
  });
}

std::vector<std::pair<std::string, CheckReport>> triple_module_sections(const TripleModuleData& tm,
                                                                        const AlgebraData& a,
                                                                        const HopfAlgebraData& h,
                                                                        const AlgebraData& b, const ActionData& a_hact,
                                                                        const ActionData& b_hact, CheckMode mode) {
  const Index na = a.dim, nh = h.dim(), nb = b.dim, d = tm.space_dim;
  for (const ActionData* act : {&tm.a_act, &tm.h_act, &tm.b_act}) {
    if (act->side != Side::left || act->space_dim() != d) throw DimensionMismatch("triple module actions disagree");
  }
  if (tm.a_act.actor_dim() != na || tm.h_act.actor_dim() != nh || tm.b_act.actor_dim() != nb) {
    throw DimensionMismatch("triple module actors do not match A, H, B");
  }
  const FieldSpec f = h.field();
  const LinearMap s_inv = antipode_inverse(h);
  const SparseColumns& comult = h.coalgebra.comult;
  auto act = [&](const ActionData& x, Index i, std::span<const Term> v) { return x.act(unit_term(i, f), v); };

  std::vector<std::pair<std::string, CheckReport>> out;
  out.emplace_back("module axioms", check_module_axioms(a, tm.a_act, mode));
  out.back().second.merge(check_module_axioms(h.algebra, tm.h_act, mode));
  out.back().second.merge(check_module_axioms(b, tm.b_act, mode));

  out.emplace_back("(i)", check_over(d, [&](std::size_t mi, CheckReport& r) {
    const SparseVec m = unit_term(static_cast<Index>(mi), f);
    for (Index ai = 0; ai < na; ++ai)
      for (Index bi = 0; bi < nb; ++bi)
        r.expect_equal("(i) b.(a.m) = a.(b.m)", {ai, bi, mi}, act(tm.b_act, bi, act(tm.a_act, ai, m)),
                       act(tm.a_act, ai, act(tm.b_act, bi, m)), f, d);
  }));

  out.emplace_back("(ii)", check_over(d, [&](std::size_t mi, CheckReport& r) {
    const SparseVec m = unit_term(static_cast<Index>(mi), f);
    for (Index hi = 0; hi < nh; ++hi) {
      const SparseVec hm = act(tm.h_act, hi, m);
      for (Index bi = 0; bi < nb; ++bi) {
        SparseVec rhs;
        for (const Term& dh : comult.column(hi)) {
          const auto bh = b_hact.table.at(dh.index % nh, bi);
          axpy(rhs, dh.coef, act(tm.h_act, dh.index / nh, tm.b_act.act(bh, m)));
        }
        r.expect_equal("(ii) b.(h.m) = h1.((b.h2).m)", {hi, bi, mi}, act(tm.b_act, bi, hm), done(std::move(rhs)), f,
                       d);
      }
    }
  }));
  out.emplace_back("(ii) with S^-1", check_over(d, [&](std::size_t mi, CheckReport& r) {
    const SparseVec m = unit_term(static_cast<Index>(mi), f);
    for (Index hi = 0; hi < nh; ++hi) {
      for (Index bi = 0; bi < nb; ++bi) {
        SparseVec rhs;
        for (const Term& dh : comult.column(hi)) {
          const SparseVec bs = b_hact.act(s_inv.column(dh.index % nh), unit_term(bi, f));
          axpy(rhs, dh.coef, tm.b_act.act(bs, act(tm.h_act, dh.index / nh, m)));
        }
        r.expect_equal("(ii') h.(b.m) = (b.S^-1(h2)).(h1.m)", {hi, bi, mi}, act(tm.h_act, hi, act(tm.b_act, bi, m)),
                       done(std::move(rhs)), f, d);
      }
    }
  }));

  out.emplace_back("(iii)", check_over(d, [&](std::size_t mi, CheckReport& r) {
    const SparseVec m = unit_term(static_cast<Index>(mi), f);
    for (Index hi = 0; hi < nh; ++hi) {
      for (Index ai = 0; ai < na; ++ai) {
        SparseVec rhs;
        for (const Term& dh : comult.column(hi)) {
          const auto ha = a_hact.table.at(dh.index / nh, ai);
          axpy(rhs, dh.coef, tm.a_act.act(ha, act(tm.h_act, dh.index % nh, m)));
        }
        r.expect_equal("(iii) h.(a.m) = (h1.a).(h2.m)", {hi, ai, mi}, act(tm.h_act, hi, act(tm.a_act, ai, m)),
                       done(std::move(rhs)), f, d);
      }
    }
  }));
  out.emplace_back("(iii) with S^-1", check_over(d, [&](std::size_t mi, CheckReport& r) {
    const SparseVec m = unit_term(static_cast<Index>(mi), f);
    for (Index hi = 0; hi < nh; ++hi) {
      const SparseVec hm = act(tm.h_act, hi, m);
      for (Index ai = 0; ai < na; ++ai) {
        SparseVec rhs;
        for (const Term& dh : comult.column(hi)) {
          const SparseVec sa = a_hact.act(s_inv.column(dh.index / nh), unit_term(ai, f));
          axpy(rhs, dh.coef, act(tm.h_act, dh.index % nh, tm.a_act.act(sa, m)));
        }
        r.expect_equal("(iii') a.(h.m) = h2.((S^-1(h1).a).m)", {hi, ai, mi}, act(tm.a_act, ai, hm),
                       done(std::move(rhs)), f, d);
      }
    }
  }));

  const AlgebraHandle crossed = two_sided_crossed(a, h, b, a_hact, b_hact);
  const ActionData assembled = assemble_two_sided(tm);
  out.emplace_back("assembled module", check_module_axioms(crossed, assembled, mode));

  CheckReport restrict;
  const SparseVec ua = to_sparse(a.unit), uh = to_sparse(h.algebra.unit), ub = to_sparse(b.unit);
  auto embed = [&](std::span<const Term> x, std::span<const Term> y, std::span<const Term> z) {
    SparseVec v;
    for (const Term& s : x)
      for (const Term& t : y)
        for (const Term& u : z) v.push_back({(s.index * nh + t.index) * nb + u.index, s.coef * t.coef * u.coef});
    return done(std::move(v));
  };
  for (Index j = 0; j < d; ++j) {
    const SparseVec m = unit_term(j, f);
    for (Index ai = 0; ai < na; ++ai)
      restrict.expect_equal("restriction to A", {ai, j}, assembled.act(embed(unit_term(ai, f), uh, ub), m),
                            act(tm.a_act, ai, m), f, d);
    for (Index hi = 0; hi < nh; ++hi)
      restrict.expect_equal("restriction to H", {hi, j}, assembled.act(embed(ua, unit_term(hi, f), ub), m),
                            act(tm.h_act, hi, m), f, d);
    for (Index bi = 0; bi < nb; ++bi)
      restrict.expect_equal("restriction to B", {bi, j}, assembled.act(embed(ua, uh, unit_term(bi, f)), m),
                            act(tm.b_act, bi, m), f, d);
  }
  out.emplace_back("restriction", std::move(restrict));
  return out;
}

CheckReport triple_module_roundtrip(const TripleModuleData& tm, const AlgebraData& a, const HopfAlgebraData& h,
                                    const AlgebraData& b, const ActionData& a_hact, const ActionData& b_hact,
                                    CheckMode mode) {
  CheckReport report;
  for (const auto& [name, r] : triple_module_sections(tm, a, h, b, a_hact, b_hact, mode)) report.merge(r);
  return report;
}

CheckReport diagonal_module_condition(const AlgebraData& c, const HopfAlgebraData& h, const ActionData& left,
                                      const ActionData& right, const ActionData& c_act, const ActionData& h_act,
                                      CheckMode mode) {
  const Index nc = c.dim, nh = h.dim(), d = c_act.space_dim();
  if (c_act.actor_dim() != nc || h_act.actor_dim() != nh || h_act.space_dim() != d) {
    throw DimensionMismatch("diagonal module actions do not match C and H");
  }
  const FieldSpec f = h.field();
  const LinearMap s_inv = antipode_inverse(h);
  const SparseColumns d2 = double_comult(h.coalgebra);

  CheckReport report = check_module_axioms(c, c_act, mode);
  report.merge(check_module_axioms(h.algebra, h_act, mode));
  report.merge(check_over(d, [&](std::size_t mi, CheckReport& r) {
    const SparseVec m = unit_term(static_cast<Index>(mi), f);
    for (Index hi = 0; hi < nh; ++hi) {
      for (Index ci = 0; ci < nc; ++ci) {
        SparseVec rhs;
        for (const Term& dh : d2.column(hi)) {
          const Index h1 = dh.index / (nh * nh), h2 = (dh.index / nh) % nh, h3 = dh.index % nh;
          const auto hc = left.table.at(h1, ci);
          const SparseVec hcs = right.act(s_inv.column(h3), hc);
          axpy(rhs, dh.coef, c_act.act(hcs, h_act.table.at(h2, mi)));
        }
        r.expect_equal("h.(c.m) = (h1.c.S^-1(h3)).(h2.m)", {hi, ci, mi},
                       h_act.act(unit_term(hi, f), c_act.table.at(ci, mi)), done(std::move(rhs)), f, d);
      }
    }
  }));
  const AlgebraHandle crossed = diagonal_crossed(c, h, left, right);
  report.merge(check_module_axioms(crossed, assemble_diagonal(c_act, h_act), mode));
  return report;
}

}  // namespace hopf
