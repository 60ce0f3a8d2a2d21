#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "hopfxyz/isomorphisms.hpp"

namespace hopf {

/// A Hopf bimodule over H*: left and right H*-actions and H*-coactions.
struct HopfBimoduleData {
  Index space_dim = 0;
  ActionData left_act;   // side left, actor H*
  ActionData right_act;  // side right, actor H*
  CoactionData left_co;
  CoactionData right_co;
};

/// Bimodule and bicomodule axioms, and the four compatibilities
///   rhoL(p.m) = sum p1 m(-1) (x) p2.m(0)      rhoL(m.q) = sum m(-1) q1 (x) m(0).q2
///   rhoR(p.m) = sum p1.m(0) (x) p2 m(1)       rhoR(m.q) = sum m(0).q1 (x) m(1) q2
/// on basis elements.
CheckReport check_hopf_bimodule(const HopfBimoduleData& m, const HopfAlgebraData& h);

struct BimoduleKind {
  enum class Kind { regular, free } kind = Kind::regular;
  Index v_dim = 0;

  /// "regular" or "free:N" with N >= 1.
  static BimoduleKind parse(std::string_view s);
  std::string to_string() const;
};

/// regular: H* with multiplications and rhoL = rhoR = Delta.
/// free:N: H* (x) V (x) H*, index (x * N + s) * n + y, with
///   p.(x (x) v (x) y).q = px (x) v (x) yq,
///   rhoL(x (x) v (x) y) = sum x1 y1 (x) (x2 (x) v (x) y2),
///   rhoR(x (x) v (x) y) = sum (x1 (x) v (x) y1) (x) x2 y2.
HopfBimoduleData example_bimodule(const HopfAlgebraData& h, BimoduleKind kind);

enum class ActingAlgebra { X, Y, Z, left_smash, right_smash };
ActingAlgebra parse_acting_algebra(std::string_view name);
std::string to_string(ActingAlgebra a);

/// Left action on M of the algebra built by build_X/Y/Z or the smash
/// constructions of the standard triple, with k = h (x) g acting by
/// k.m = sum m(-1)(g) m(1)(h) m(0):
///   X: ((g (x) h)(x)(p (x) q)).m = sum (h1 -> p <- g1).(k2.m).(h3 -> q <- g3), k2 = h2 (x) g2
///   Y: (p # (h (x) g) # q).m     = sum p.(k1.m).(h2 -> q <- g2)
///   Z: ((p (x) q) x k).m          = p.(k.m).q
///   left smash (p # k).m = p.(k.m), right smash (k # q).m = k.(m.q).
/// Throws InvalidInput unless m is a Hopf bimodule.
ActionData derived_action(const HopfBimoduleData& m, const HopfTriple& t, ActingAlgebra which);
ActionData derived_action(const HopfBimoduleData& m, const HopfAlgebraData& h, ActingAlgebra which);

/// Unit acts as identity and (xy).m = x.(y.m) for a left action of a handle.
CheckReport check_module_axioms(const AlgebraHandle& actor, const ActionData& act, CheckMode mode);

/// (p (x) q).m = p.m.q, actor index p * n + q, as a left action of H* (x) H*op.
ActionData outer_action(const HopfBimoduleData& m);

/// Exhaustive for dim H <= 3, otherwise 200 random trials.
CheckMode default_correspondence_mode(Index h_dim, std::uint64_t seed = 0);

/// x.m = phi(x).m = beta(x).m for x in X, and y.m = alpha(y).m for y in Y.
CheckReport verify_action_correspondence(const HopfBimoduleData& m, const HopfAlgebraData& h, CheckMode mode);
/// (a # k # b).m = f(a # k # b).m between the two-sided and diagonal actions.
CheckReport verify_f_correspondence(const HopfBimoduleData& m, const HopfAlgebraData& h, CheckMode mode);

/// Left actions of A, H and B on one space.
struct TripleModuleData {
  Index space_dim = 0;
  ActionData a_act;
  ActionData h_act;
  ActionData b_act;
};

/// A = H*, the bicomodule action of H (x) H^op, and B = H*op acting by b.m = m.b.
TripleModuleData triple_module_from_bimodule(const HopfBimoduleData& m, const HopfAlgebraData& h);

/// (a # h # b).m = a.(h.(b.m)).
ActionData assemble_two_sided(const TripleModuleData& tm);

/// With a_hact a left H-module algebra action on A and b_hact a right one on B:
///   (i)   b.(a.m) = a.(b.m)
///   (ii)  b.(h.m) = sum h1.((b.h2).m),   and  h.(b.m) = sum (b.S^-1(h2)).(h1.m)
///   (iii) h.(a.m) = sum (h1.a).(h2.m),   and  a.(h.m) = sum h2.((S^-1(h1).a).m)
/// plus the module axiom of the assembled action over A # H # B and that its
/// restrictions along a -> a#1#1, h -> 1#h#1, b -> 1#1#b give back the inputs.
std::vector<std::pair<std::string, CheckReport>> triple_module_sections(
    const TripleModuleData& tm, const AlgebraData& a, const HopfAlgebraData& h, const AlgebraData& b,
    const ActionData& a_hact, const ActionData& b_hact, CheckMode mode = CheckMode::exhaustive());
/// All sections merged.
CheckReport triple_module_roundtrip(const TripleModuleData& tm, const AlgebraData& a, const HopfAlgebraData& h,
                                    const AlgebraData& b, const ActionData& a_hact, const ActionData& b_hact,
                                    CheckMode mode = CheckMode::exhaustive());

/// h.(c.m) = sum (h1.c.S^-1(h3)).(h2.m) on basis triples, and the module axiom of
/// (c x h).m = c.(h.m) over the diagonal crossed product.
CheckReport diagonal_module_condition(const AlgebraData& c, const HopfAlgebraData& h, const ActionData& left,
                                      const ActionData& right, const ActionData& c_act, const ActionData& h_act,
                                      CheckMode mode = CheckMode::exhaustive());

}  // namespace hopf
