#pragma once

#include <utility>

#include "hopfxyz/algebra.hpp"

namespace hopf {

enum class Side { left, right };

/// table(i, j) = e_i . m_j (left) or m_j . e_i (right), actor index first.
struct ActionData {
  Side side = Side::left;
  BilinearTable table;

  static ActionData make(Side side, BilinearTable table);

  FieldSpec field() const { return table.field(); }
  Index actor_dim() const { return table.left_dim(); }
  Index space_dim() const { return table.right_dim(); }

  SparseVec act(std::span<const Term> actor, std::span<const Term> m) const {
    return table.apply(actor, m);
  }
  Vector act(const Vector& actor, const Vector& m) const;
};

/// Column j is the coaction of m_j. Left coactions use index c * space_dim + k
/// for e_c (x) m_k, right coactions k * coalgebra_dim + c for m_k (x) e_c.
struct CoactionData {
  Side side = Side::left;
  Index coalgebra_dim = 0;
  SparseColumns map;

  static CoactionData make(Side side, Index coalgebra_dim, SparseColumns map);

  FieldSpec field() const { return map.field(); }
  Index space_dim() const { return map.src_dim(); }
};

/// The regular actions of H on H*: (h -> f)(x) = f(x h) and (f <- h)(x) = f(h x),
/// on the dual basis. Returns (left, right); the right one has side right.
std::pair<ActionData, ActionData> regular_actions(const HopfAlgebraData& h);

/// h . a = eps(h) a (or a . h = eps(h) a).
ActionData trivial_action(Side side, const HopfAlgebraData& h, Index space_dim);

/// Unit acts as identity and the action is associative for the actor's product.
CheckReport check_module_axioms(const AlgebraData& actor, const ActionData& act,
                                CheckMode mode = CheckMode::exhaustive());

/// Module axioms plus h.(ab) = sum (h1.a)(h2.b), h.1 = eps(h) 1, or the right
/// handed versions (ab).h = sum (a.h1)(b.h2), 1.h = eps(h) 1.
CheckReport check_module_algebra(Side side, const HopfAlgebraData& h, const AlgebraData& a,
                                 const ActionData& act, CheckMode mode = CheckMode::exhaustive());

/// Coassociativity and counit law.
CheckReport check_comodule_axioms(const CoalgebraData& c, const CoactionData& co);

/// Both comodule axiom sets plus (id (x) rhoR) rhoL = (rhoL (x) id) rhoR.
CheckReport check_bicomodule(const CoalgebraData& c, const CoactionData& left,
                             const CoactionData& right);

/// (id (x) rhoR) rhoL as a map M -> C (x) M (x) C, index (c * dimM + k) * dimC + d.
SparseColumns double_coaction(const CoactionData& left, const CoactionData& right);

/// C = A (x) B with h.(a (x) b).g = h.a (x) b.g.
struct BimoduleAlgebra {
  AlgebraData algebra;
  ActionData left;
  ActionData right;
};

/// Throws InvalidInput unless a_act is a left and b_act a right H-module algebra action.
BimoduleAlgebra build_bimodule_algebra(const HopfAlgebraData& h, const AlgebraData& a,
                                       const ActionData& a_act, const AlgebraData& b,
                                       const ActionData& b_act);

/// Left H (x) H^op action (h (x) g).m = sum m(-1)(g) m(1)(h) m(0) of an
/// H*-bicomodule; the actor index is h * dim H + g. Throws if not a bicomodule.
ActionData bicomodule_to_module(const CoactionData& left, const CoactionData& right,
                                const HopfAlgebraData& h);

/// rho(p) = sum p2 (x) (p3 (x) p1) : H* -> H* (x) (H* (x) H*cop), index
/// p2 * n^2 + p3 * n + p1, and a report that it is an algebra map and a
/// right comodule structure.
std::pair<LinearMap, CheckReport> comodule_algebra_map(const HopfAlgebraData& h);

/// rho is an algebra map A -> A (x) D and a right D-coaction.
CheckReport check_comodule_algebra(const AlgebraData& a, const HopfAlgebraData& d,
                                   const CoactionData& rho);

/// A = H* and B = H*op with actions of K = H (x) H^op:
///   (h (x) g).f = h -> f <- g,    f.(h (x) g) = S(h) -> f <- S^-1(g).
struct HopfTriple {
  HopfAlgebraData h;
  HopfAlgebraData dual;
  HopfAlgebraData k;
  LinearMap s_inv;
  AlgebraData a;
  AlgebraData b;
  ActionData a_act;
  ActionData b_act;

  Index n() const { return h.dim(); }
  /// h -> p <- g for basis h, g.
  std::span<const Term> hit(Index hh, Index g, Index p) const { return a_act.table.at(hh * n() + g, p); }
};

HopfTriple standard_triple(const HopfAlgebraData& h);

}  // namespace hopf
