#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hopfxyz/actions.hpp"
#include "hopfxyz/kernels.hpp"

namespace hopf {

enum class Provenance { plain, left_smash, right_smash, two_sided, diagonal, X, Y, Z };
std::string to_string(Provenance p);

/// An algebra given by a product oracle on basis pairs. The full structure
/// constant table is tabulated from the oracle on first use and then shared by
/// all copies of the handle.
class AlgebraHandle {
 public:
  AlgebraHandle(Provenance provenance, FieldSpec field, std::vector<Index> factor_dims,
                std::vector<std::string> labels, Vector unit, kernels::BasisOracle oracle);
  static AlgebraHandle wrap(const AlgebraData& a, Provenance provenance = Provenance::plain);

  Provenance provenance() const { return state_->provenance; }
  FieldSpec field() const { return state_->field; }
  Index dim() const { return state_->dim; }
  const std::vector<Index>& factor_dims() const { return state_->factor_dims; }
  const std::vector<std::string>& labels() const { return state_->labels; }
  const Vector& unit() const { return state_->unit; }

  /// Direct oracle evaluation, bypassing the table.
  SparseVec basis_product(Index i, Index j) const { return state_->oracle(i, j); }
  const BilinearTable& table() const;

  SparseVec multiply(std::span<const Term> x, std::span<const Term> y) const;
  Vector multiply(const Vector& x, const Vector& y) const;

 private:
  struct State {
    Provenance provenance;
    FieldSpec field;
    Index dim;
    std::vector<Index> factor_dims;
    std::vector<std::string> labels;
    Vector unit;
    kernels::BasisOracle oracle;
    std::once_flag once;
    BilinearTable table;
  };
  std::shared_ptr<State> state_;
};

inline constexpr Index kDefaultMaterializeCap = 64;

/// Structure constants of the handle; throws CapExceeded when dim > cap.
AlgebraData materialize(const AlgebraHandle& a, Index cap = kDefaultMaterializeCap);

CheckReport check_algebra_axioms(const AlgebraHandle& a, CheckMode mode);
CheckReport check_algebra_axioms(const AlgebraHandle& a);

/// (a # h)(b # g) = sum a (h1 . b) # h2 g on A (x) H.
AlgebraHandle left_smash(const AlgebraData& a, const HopfAlgebraData& h, const ActionData& act);
/// (h # a)(g # b) = sum h g1 # (a . g2) b on H (x) B.
AlgebraHandle right_smash(const HopfAlgebraData& h, const AlgebraData& b, const ActionData& act);
/// (a # h # b)(a' # h' # b') = sum a (h1 . a') # h2 h'1 # (b . h'2) b' on A (x) H (x) B.
AlgebraHandle two_sided_crossed(const AlgebraData& a, const HopfAlgebraData& h, const AlgebraData& b,
                                const ActionData& a_act, const ActionData& b_act,
                                Provenance provenance = Provenance::two_sided);
/// (c x h)(c' x h') = sum c (h1 . c' . S^-1(h3)) x h2 h' on C (x) H.
AlgebraHandle diagonal_crossed(const AlgebraData& c, const HopfAlgebraData& h, const ActionData& left,
                               const ActionData& right, Provenance provenance = Provenance::diagonal);

/// Left and right actions each verified as module algebras, and commuting.
CheckReport check_bimodule_algebra(const HopfAlgebraData& h, const AlgebraData& c,
                                   const ActionData& left, const ActionData& right);

/// X = (H^op (x) H) (x) (H* (x) H*op), index ((g n + h) n + p) n + q.
AlgebraHandle build_X(const HopfTriple& t);
/// Y = H* # (H (x) H^op) # H*op, index ((p n + h) n + g) n + q.
AlgebraHandle build_Y(const HopfTriple& t);
/// Z = (H* (x) H*op) x (H (x) H^op), index ((p n + q) n + h) n + g.
AlgebraHandle build_Z(const HopfTriple& t);

enum class Construction { X, Y, Z, left_smash, right_smash, two_sided, diagonal };
Construction parse_construction(std::string_view name);
std::string to_string(Construction c);

/// The smash, two-sided and diagonal constructions use the standard triple of H:
/// H* # K, K # H*op, H* # K # H*op and (H* (x) H*op) x K with K = H (x) H^op.
AlgebraHandle build_construction(const HopfTriple& t, Construction c);
AlgebraHandle build_XYZ(const HopfAlgebraData& h, Construction which);

}  // namespace hopf
