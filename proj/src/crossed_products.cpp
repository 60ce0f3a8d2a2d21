#include "hopfxyz/crossed_products.hpp"

#include "hopfxyz/errors.hpp"

namespace hopf {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::plain: return "plain";
    case Provenance::left_smash: return "left_smash";
    case Provenance::right_smash: return "right_smash";
    case Provenance::two_sided: return "two_sided";
    case Provenance::diagonal: return "diagonal";
    case Provenance::X: return "X";
    case Provenance::Y: return "Y";
    case Provenance::Z: return "Z";
  }
  return "?";
}

AlgebraHandle::AlgebraHandle(Provenance provenance, FieldSpec field, std::vector<Index> factor_dims,
                             std::vector<std::string> labels, Vector unit,
                             kernels::BasisOracle oracle)
    : state_(std::make_shared<State>()) {
  const auto dim = static_cast<Index>(unit.size());
  if (labels.size() != dim) throw DimensionMismatch("handle labels differ from dimension");
  state_->provenance = provenance;
  state_->field = field;
  state_->dim = dim;
  state_->factor_dims = std::move(factor_dims);
  state_->labels = std::move(labels);
  state_->unit = std::move(unit);
  state_->oracle = std::move(oracle);
}

AlgebraHandle AlgebraHandle::wrap(const AlgebraData& a, Provenance provenance) {
  auto mult = std::make_shared<const BilinearTable>(a.mult);
  AlgebraHandle h(provenance, a.field, {a.dim}, a.labels, a.unit, [mult](Index i, Index j) {
    const auto r = mult->at(i, j);
    return SparseVec(r.begin(), r.end());
  });
  std::call_once(h.state_->once, [&] { h.state_->table = a.mult; });
  return h;
}

const BilinearTable& AlgebraHandle::table() const {
  State& s = *state_;
  std::call_once(s.once, [&s] {
    s.table = kernels::parallel::tabulate(s.field, s.dim, s.dim, s.dim, s.oracle);
  });
  return s.table;
}

SparseVec AlgebraHandle::multiply(std::span<const Term> x, std::span<const Term> y) const {
  return table().apply(x, y);
}

Vector AlgebraHandle::multiply(const Vector& x, const Vector& y) const {
  return kernels::parallel::bilinear(table(), x, y);
}

AlgebraData materialize(const AlgebraHandle& a, Index cap) {
  if (a.dim() > cap) {
    throw CapExceeded("dimension " + std::to_string(a.dim()) + " exceeds materialization cap " +
                      std::to_string(cap));
  }
  return AlgebraData::make(a.labels(), a.table(), a.unit());
}

CheckReport check_algebra_axioms(const AlgebraHandle& a, CheckMode mode) {
  return check_algebra_axioms(a.table(), a.unit(), mode);
}

CheckReport check_algebra_axioms(const AlgebraHandle& a) {
  return check_algebra_axioms(a, default_axiom_mode(a.dim()));
}

namespace {

SparseVec basis(Index i, FieldSpec f) { return {{i, Scalar::one(f)}}; }

Vector kron(const Vector& a, const Vector& b) {
  Vector out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back(x * y);
  }
  return out;
}

SparseVec kron(std::span<const Term> a, std::span<const Term> b, Index nb) {
  SparseVec out;
  for (const Term& x : a) {
    for (const Term& y : b) out.push_back({x.index * nb + y.index, x.coef * y.coef});
  }
  return out;
}

std::vector<std::string> join_labels(const std::vector<const std::vector<std::string>*>& parts,
                                     const std::vector<std::string>& seps) {
  std::vector<std::string> out{""};
  for (std::size_t k = 0; k < parts.size(); ++k) {
    std::vector<std::string> next;
    for (const auto& prefix : out) {
      for (const auto& l : *parts[k]) next.push_back(prefix + seps[k] + l);
    }
    out = std::move(next);
  }
  return out;
}

void require(const CheckReport& r, const std::string& what) {
  if (!r.passed()) throw InvalidInput(what + ": " + r.summary());
}

std::shared_ptr<const std::vector<SparseVec>> shared(std::vector<SparseVec> v) {
  return std::make_shared<const std::vector<SparseVec>>(std::move(v));
}

}  // namespace

AlgebraHandle left_smash(const AlgebraData& a, const HopfAlgebraData& h, const ActionData& act) {
  require(check_module_algebra(Side::left, h, a, act), "left_smash: action is not a module algebra");
  const Index na = a.dim, nh = h.dim();
  const FieldSpec f = a.field;
  // tw[h * na + b] = sum (h1 . b) (x) h2, index u * nh + k
  std::vector<SparseVec> tw(static_cast<std::size_t>(nh) * na);
  for (Index hh = 0; hh < nh; ++hh) {
    for (Index b = 0; b < na; ++b) {
      SparseVec v;
      for (const Term& d : h.coalgebra.comult.column(hh)) {
        for (const Term& u : act.table.at(d.index / nh, b)) {
          v.push_back({u.index * nh + d.index % nh, d.coef * u.coef});
        }
      }
      canonicalize(v);
      tw[hh * na + b] = std::move(v);
    }
  }
  auto oracle = [A = a.mult, H = h.algebra.mult, tw = shared(std::move(tw)), na, nh](Index i, Index j) {
    const Index x = i / nh, hh = i % nh, b = j / nh, g = j % nh;
    SparseVec out;
    for (const Term& t : (*tw)[hh * na + b]) {
      const Index u = t.index / nh, k = t.index % nh;
      for (const Term& p : A.at(x, u)) {
        for (const Term& q : H.at(k, g)) out.push_back({p.index * nh + q.index, t.coef * p.coef * q.coef});
      }
    }
    canonicalize(out);
    return out;
  };
  return AlgebraHandle(Provenance::left_smash, f, {na, nh}, join_labels({&a.labels, &h.labels()}, {"", "#"}),
                       kron(a.unit, h.algebra.unit), std::move(oracle));
}

AlgebraHandle right_smash(const HopfAlgebraData& h, const AlgebraData& b, const ActionData& act) {
  require(check_module_algebra(Side::right, h, b, act), "right_smash: action is not a module algebra");
  const Index nb = b.dim, nh = h.dim();
  // tw[g * nb + a] = sum g1 (x) (a . g2), index k * nb + v
  std::vector<SparseVec> tw(static_cast<std::size_t>(nh) * nb);
  for (Index g = 0; g < nh; ++g) {
    for (Index a = 0; a < nb; ++a) {
      SparseVec v;
      for (const Term& d : h.coalgebra.comult.column(g)) {
        for (const Term& u : act.table.at(d.index % nh, a)) {
          v.push_back({(d.index / nh) * nb + u.index, d.coef * u.coef});
        }
      }
      canonicalize(v);
      tw[g * nb + a] = std::move(v);
    }
  }
  auto oracle = [B = b.mult, H = h.algebra.mult, tw = shared(std::move(tw)), nb](Index i, Index j) {
    const Index hh = i / nb, a = i % nb, g = j / nb, y = j % nb;
    SparseVec out;
    for (const Term& t : (*tw)[g * nb + a]) {
      const Index k = t.index / nb, v = t.index % nb;
      for (const Term& p : H.at(hh, k)) {
        for (const Term& q : B.at(v, y)) out.push_back({p.index * nb + q.index, t.coef * p.coef * q.coef});
      }
    }
    canonicalize(out);
    return out;
  };
  return AlgebraHandle(Provenance::right_smash, b.field, {nh, nb},
                       join_labels({&h.labels(), &b.labels}, {"", "#"}), kron(h.algebra.unit, b.unit),
                       std::move(oracle));
}

AlgebraHandle two_sided_crossed(const AlgebraData& a, const HopfAlgebraData& h, const AlgebraData& b,
                                const ActionData& a_act, const ActionData& b_act,
                                Provenance provenance) {
  require(check_module_algebra(Side::left, h, a, a_act), "two_sided_crossed: left action");
  require(check_module_algebra(Side::right, h, b, b_act), "two_sided_crossed: right action");
  const Index na = a.dim, nh = h.dim(), nb = b.dim;
  // lt[k * na + a'] = sum (k1 . a') (x) k2;  rt[k' * nb + b] = sum k'1 (x) (b . k'2)
  std::vector<SparseVec> lt(static_cast<std::size_t>(nh) * na), rt(static_cast<std::size_t>(nh) * nb);
  for (Index k = 0; k < nh; ++k) {
    const auto& dk = h.coalgebra.comult.column(k);
    for (Index x = 0; x < na; ++x) {
      SparseVec v;
      for (const Term& d : dk) {
        for (const Term& u : a_act.table.at(d.index / nh, x)) {
          v.push_back({u.index * nh + d.index % nh, d.coef * u.coef});
        }
      }
      canonicalize(v);
      lt[k * na + x] = std::move(v);
    }
    for (Index y = 0; y < nb; ++y) {
      SparseVec v;
      for (const Term& d : dk) {
        for (const Term& u : b_act.table.at(d.index % nh, y)) {
          v.push_back({(d.index / nh) * nb + u.index, d.coef * u.coef});
        }
      }
      canonicalize(v);
      rt[k * nb + y] = std::move(v);
    }
  }
  auto oracle = [A = a.mult, H = h.algebra.mult, B = b.mult, lt = shared(std::move(lt)),
                 rt = shared(std::move(rt)), na, nh, nb](Index i, Index j) {
    const Index x = i / (nh * nb), k = (i / nb) % nh, y = i % nb;
    const Index x2 = j / (nh * nb), k2 = (j / nb) % nh, y2 = j % nb;
    SparseVec out;
    for (const Term& l : (*lt)[k * na + x2]) {
      const Index u = l.index / nh, kl = l.index % nh;
      for (const Term& r : (*rt)[k2 * nb + y]) {
        const Index kr = r.index / nb, v = r.index % nb;
        const Scalar c = l.coef * r.coef;
        for (const Term& pa : A.at(x, u)) {
          for (const Term& ph : H.at(kl, kr)) {
            const Scalar cah = c * pa.coef * ph.coef;
            for (const Term& pb : B.at(v, y2)) {
              out.push_back({(pa.index * nh + ph.index) * nb + pb.index, cah * pb.coef});
            }
          }
        }
      }
    }
    canonicalize(out);
    return out;
  };
  return AlgebraHandle(provenance, a.field, {na, nh, nb},
                       join_labels({&a.labels, &h.labels(), &b.labels}, {"", "#", "#"}),
                       kron(kron(a.unit, h.algebra.unit), b.unit), std::move(oracle));
}

CheckReport check_bimodule_algebra(const HopfAlgebraData& h, const AlgebraData& c,
                                   const ActionData& left, const ActionData& right) {
  CheckReport report = check_module_algebra(Side::left, h, c, left);
  report.merge(check_module_algebra(Side::right, h, c, right));
  const Index nh = h.dim(), nc = c.dim;
  const FieldSpec f = c.field;
  report.merge(check_over(nh, [&](std::size_t hi, CheckReport& r) {
    const Index hh = static_cast<Index>(hi);
    for (Index g = 0; g < nh; ++g) {
      for (Index x = 0; x < nc; ++x) {
        const SparseVec ex = basis(x, f);
        r.expect_equal("(h.c).g = h.(c.g)", {hi, g, x},
                       right.act(basis(g, f), left.act(basis(hh, f), ex)),
                       left.act(basis(hh, f), right.act(basis(g, f), ex)), f, nc);
      }
    }
  }));
  return report;
}

AlgebraHandle diagonal_crossed(const AlgebraData& c, const HopfAlgebraData& h, const ActionData& left,
                               const ActionData& right, Provenance provenance) {
  require(check_bimodule_algebra(h, c, left, right), "diagonal_crossed: not a bimodule algebra");
  const Index nc = c.dim, nh = h.dim();
  const FieldSpec f = c.field;
  const LinearMap s_inv = antipode_inverse(h);
  const SparseColumns d2 = double_comult(h.coalgebra);
  // tw[k * nc + c'] = sum (k1 . c' . S^-1(k3)) (x) k2, index u * nh + k2
  std::vector<SparseVec> tw(static_cast<std::size_t>(nh) * nc);
  for (Index k = 0; k < nh; ++k) {
    for (Index x = 0; x < nc; ++x) {
      SparseVec v;
      for (const Term& d : d2.column(k)) {
        const Index k1 = d.index / (nh * nh), k2 = (d.index / nh) % nh, k3 = d.index % nh;
        const SparseVec moved = right.act(s_inv.column(k3), left.act(basis(k1, f), basis(x, f)));
        for (const Term& u : moved) v.push_back({u.index * nh + k2, d.coef * u.coef});
      }
      canonicalize(v);
      tw[k * nc + x] = std::move(v);
    }
  }
  auto oracle = [C = c.mult, H = h.algebra.mult, tw = shared(std::move(tw)), nc, nh](Index i, Index j) {
    const Index x = i / nh, k = i % nh, x2 = j / nh, k2 = j % nh;
    SparseVec out;
    for (const Term& t : (*tw)[k * nc + x2]) {
      const Index u = t.index / nh, kt = t.index % nh;
      for (const Term& pc : C.at(x, u)) {
        for (const Term& ph : H.at(kt, k2)) {
          out.push_back({pc.index * nh + ph.index, t.coef * pc.coef * ph.coef});
        }
      }
    }
    canonicalize(out);
    return out;
  };
  return AlgebraHandle(provenance, f, {nc, nh}, join_labels({&c.labels, &h.labels()}, {"", "⋈"}),
                       kron(c.unit, h.algebra.unit), std::move(oracle));
}

AlgebraHandle build_X(const HopfTriple& t) {
  const Index n = t.n();
  const FieldSpec f = t.h.field();
  const SparseColumns d2 = double_comult(t.h.coalgebra);
  const LinearMap& s = t.h.antipode;
  const LinearMap& s_inv = t.s_inv;
  const std::size_t n2 = static_cast<std::size_t>(n) * n;

  // (1 (x) 1)(x)(p (x) q) times (g' (x) h')(x)(1 (x) 1) =
  //   sum (g'2 (x) h'2)(x)(S^-1(h'1) -> p <- S(g'1) (x) S(h'3) -> q <- S^-1(g'3))
  // stored at tw[(g' n + h') n^2 + p n + q] with index ((G n + H) n + P) n + Q.
  std::vector<SparseVec> tw(n2 * n2);
  for (Index g2 = 0; g2 < n; ++g2) {
    for (Index h2 = 0; h2 < n; ++h2) {
      struct Leg {
        Index g, h;
        Scalar coef;
        SparseVec kp, kq;  // K-elements acting on p and q
      };
      std::vector<Leg> legs;
      for (const Term& dh : d2.column(h2)) {
        const Index a1 = dh.index / (n * n), a2 = (dh.index / n) % n, a3 = dh.index % n;
        for (const Term& dg : d2.column(g2)) {
          const Index b1 = dg.index / (n * n), b2 = (dg.index / n) % n, b3 = dg.index % n;
          SparseVec kp = kron(s_inv.column(a1), s.column(b1), n);
          SparseVec kq = kron(s.column(a3), s_inv.column(b3), n);
          canonicalize(kp);
          canonicalize(kq);
          legs.push_back({b2, a2, dh.coef * dg.coef, std::move(kp), std::move(kq)});
        }
      }
      for (Index p = 0; p < n; ++p) {
        for (Index q = 0; q < n; ++q) {
          SparseVec v;
          for (const Leg& leg : legs) {
            const SparseVec pp = t.a_act.act(leg.kp, basis(p, f));
            const SparseVec qq = t.a_act.act(leg.kq, basis(q, f));
            for (const Term& x : pp) {
              for (const Term& y : qq) {
                v.push_back({((leg.g * n + leg.h) * n + x.index) * n + y.index, leg.coef * x.coef * y.coef});
              }
            }
          }
          canonicalize(v);
          tw[(g2 * n + h2) * n2 + p * n + q] = std::move(v);
        }
      }
    }
  }

  auto oracle = [H = t.h.algebra.mult, A = t.a.mult, tw = shared(std::move(tw)), n, n2](Index i, Index j) {
    const Index g = i / (n * n * n), h = (i / (n * n)) % n, p = (i / n) % n, q = i % n;
    const Index g2 = j / (n * n * n), h2 = (j / (n * n)) % n, p2 = (j / n) % n, q2 = j % n;
    SparseVec out;
    for (const Term& t : (*tw)[(g2 * n + h2) * n2 + p * n + q]) {
      const Index G = t.index / (n * n * n), Hh = (t.index / (n * n)) % n;
      const Index P = (t.index / n) % n, Q = t.index % n;
      // H^op slot: G * g in H; H slot: h * Hh; H* slot: P p2; H*op slot: q2 Q in H*
      for (const Term& x : H.at(G, g)) {
        for (const Term& y : H.at(h, Hh)) {
          const Scalar cxy = t.coef * x.coef * y.coef;
          for (const Term& z : A.at(P, p2)) {
            for (const Term& w : A.at(q2, Q)) {
              out.push_back({((x.index * n + y.index) * n + z.index) * n + w.index, cxy * z.coef * w.coef});
            }
          }
        }
      }
    }
    canonicalize(out);
    return out;
  };

  std::vector<std::string> labels;
  for (Index g = 0; g < n; ++g) {
    for (Index h = 0; h < n; ++h) {
      for (Index p = 0; p < n; ++p) {
        for (Index q = 0; q < n; ++q) {
          labels.push_back("(" + t.h.labels()[g] + "⊗" + t.h.labels()[h] + ")⊗̲(" + t.a.labels[p] + "⊗" +
                           t.a.labels[q] + ")");
        }
      }
    }
  }
  const Vector& u = t.h.algebra.unit;
  const Vector& eps = t.a.unit;
  return AlgebraHandle(Provenance::X, f, {n, n, n, n}, std::move(labels), kron(kron(kron(u, u), eps), eps),
                       std::move(oracle));
}

AlgebraHandle build_Y(const HopfTriple& t) {
  return two_sided_crossed(t.a, t.k, t.b, t.a_act, t.b_act, Provenance::Y);
}

AlgebraHandle build_Z(const HopfTriple& t) {
  const BimoduleAlgebra c = build_bimodule_algebra(t.k, t.a, t.a_act, t.b, t.b_act);
  return diagonal_crossed(c.algebra, t.k, c.left, c.right, Provenance::Z);
}

Construction parse_construction(std::string_view name) {
  if (name == "X") return Construction::X;
  if (name == "Y") return Construction::Y;
  if (name == "Z") return Construction::Z;
  if (name == "left-smash") return Construction::left_smash;
  if (name == "right-smash") return Construction::right_smash;
  if (name == "two-sided") return Construction::two_sided;
  if (name == "diagonal") return Construction::diagonal;
  throw InvalidInput("unknown construction '" + std::string(name) + "'");
}

std::string to_string(Construction c) {
  switch (c) {
    case Construction::X: return "X";
    case Construction::Y: return "Y";
    case Construction::Z: return "Z";
    case Construction::left_smash: return "left-smash";
    case Construction::right_smash: return "right-smash";
    case Construction::two_sided: return "two-sided";
    case Construction::diagonal: return "diagonal";
  }
  return "?";
}

AlgebraHandle build_construction(const HopfTriple& t, Construction c) {
  switch (c) {
    case Construction::X: return build_X(t);
    case Construction::Y: return build_Y(t);
    case Construction::Z: return build_Z(t);
    case Construction::left_smash: return left_smash(t.a, t.k, t.a_act);
    case Construction::right_smash: return right_smash(t.k, t.b, t.b_act);
    case Construction::two_sided: return two_sided_crossed(t.a, t.k, t.b, t.a_act, t.b_act);
    case Construction::diagonal: {
      const BimoduleAlgebra bc = build_bimodule_algebra(t.k, t.a, t.a_act, t.b, t.b_act);
      return diagonal_crossed(bc.algebra, t.k, bc.left, bc.right);
    }
  }
  throw InvalidInput("unknown construction");
}

AlgebraHandle build_XYZ(const HopfAlgebraData& h, Construction which) {
  return build_construction(standard_triple(h), which);
}

}  // namespace hopf
