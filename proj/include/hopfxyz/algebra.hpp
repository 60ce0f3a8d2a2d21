#pragma once

#include <string>
#include <vector>

#include "hopfxyz/check.hpp"
#include "hopfxyz/tensor.hpp"

namespace hopf {

/// A finite-dimensional unital algebra: e_i e_j = sum_k mult(i, j)_k e_k.
struct AlgebraData {
  FieldSpec field;
  Index dim = 0;
  std::vector<std::string> labels;
  BilinearTable mult;
  Vector unit;

  /// Validates shapes (labels, table dimensions, unit length, field).
  static AlgebraData make(std::vector<std::string> labels, BilinearTable mult, Vector unit);

  Vector multiply(const Vector& x, const Vector& y) const;
  SparseVec multiply(std::span<const Term> x, std::span<const Term> y) const {
    return mult.apply(x, y);
  }
};

/// Comultiplication column i is Delta(e_i) over the pair basis e_j (x) e_k,
/// index j * dim + k.
struct CoalgebraData {
  FieldSpec field;
  Index dim = 0;
  std::vector<std::string> labels;
  SparseColumns comult;
  Vector counit;

  static CoalgebraData make(std::vector<std::string> labels, SparseColumns comult, Vector counit);
};

struct HopfAlgebraData {
  AlgebraData algebra;
  CoalgebraData coalgebra;
  LinearMap antipode;

  Index dim() const { return algebra.dim; }
  FieldSpec field() const { return algebra.field; }
  const std::vector<std::string>& labels() const { return algebra.labels; }

  static HopfAlgebraData make(AlgebraData algebra, CoalgebraData coalgebra, LinearMap antipode);
};

/// Default regime: exhaustive up to kExhaustiveAxiomDim, otherwise 20 random trials.
CheckMode default_axiom_mode(std::size_t dim, std::uint64_t seed = 0);

/// Associativity and two-sided unit law.
CheckReport check_algebra_axioms(const AlgebraData& a, CheckMode mode);
CheckReport check_algebra_axioms(const BilinearTable& mult, const Vector& unit, CheckMode mode);

/// Algebra axioms plus coassociativity, counit, multiplicativity of Delta and
/// epsilon, both antipode identities and invertibility of S.
CheckReport check_hopf_axioms(const HopfAlgebraData& h, CheckMode mode);
CheckReport check_hopf_axioms(const HopfAlgebraData& h);

/// Throws InvalidInput carrying the first violation if h is not a Hopf algebra.
void require_hopf(const HopfAlgebraData& h, const std::string& what);

/// H* on the dual basis: product = transpose of Delta, coproduct = transpose of
/// the product, unit = epsilon, counit = evaluation at 1, antipode = S^T.
HopfAlgebraData dual_hopf(const HopfAlgebraData& h);

enum class Variant { op, cop, op_cop };
HopfAlgebraData variant(const HopfAlgebraData& h, Variant which);

AlgebraData opposite_algebra(const AlgebraData& a);
/// Componentwise product on e_i (x) e_j, index i * dim(b) + j.
AlgebraData tensor_algebra(const AlgebraData& a, const AlgebraData& b);
HopfAlgebraData tensor_hopf(const HopfAlgebraData& a, const HopfAlgebraData& b);

LinearMap antipode_inverse(const HopfAlgebraData& h);

/// (Delta (x) id) Delta as a map k^n -> k^{n^3}, index (a * n + b) * n + c.
SparseColumns double_comult(const CoalgebraData& c);

/// Basis of the radical of a characteristic-0 algebra, computed as the kernel
/// of the trace form (x, y) -> tr(L_x L_y). Empty iff semisimple.
std::vector<Vector> trace_form_radical(const AlgebraData& a);

/// Left multiplication operator L_x.
LinearMap left_multiplication(const AlgebraData& a, const Vector& x);

/// Equality of structure constants (labels are ignored).
bool same_structure(const AlgebraData& a, const AlgebraData& b);
bool same_structure(const HopfAlgebraData& a, const HopfAlgebraData& b);

bool is_commutative(const AlgebraData& a);
bool is_cocommutative(const CoalgebraData& c);

}  // namespace hopf
