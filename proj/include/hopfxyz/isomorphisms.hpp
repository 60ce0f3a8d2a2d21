#pragma once

#include <string_view>

#include "hopfxyz/crossed_products.hpp"

namespace hopf {

enum class IsoKind { phi, phi_inv, alpha, alpha_inv, beta, beta_inv, f_map, f_map_inv };
std::string to_string(IsoKind k);

struct IsoEndpoints {
  Provenance source, target;
};
IsoEndpoints endpoints(IsoKind k);

/// Matrix of the displayed formula on the basis of the source algebra:
///   phi((g (x) h)(x)(p (x) q))   = sum h1 -> p <- g1 # (h2 (x) g2) # q
///   phi^-1(p # (h (x) g) # q)     = sum (g2 (x) h2)(x)(S^-1(h1) -> p <- S(g1) (x) q)
///   alpha(p # (h (x) g) # q)      = sum (p (x) h2 -> q <- g2) x (h1 (x) g1)
///   alpha^-1((p (x) q) x (h (x) g)) = sum p # (h1 (x) g1) # S(h2) -> q <- S^-1(g2)
///   beta((g (x) h)(x)(p (x) q))  = sum (h1 -> p <- g1 (x) h3 -> q <- g3) x (h2 (x) g2)
///   beta^-1((p (x) q) x (h (x) g)) = sum (g2 (x) h2)(x)(S^-1(h1) -> p <- S(g1) (x) S(h3) -> q <- S^-1(g3))
///   f(a # k # b)                 = sum (a (x) b . S^-1(k2)) x k1
///   f^-1((a (x) b) x k)          = sum a # k1 # b . k2
LinearMap build_iso(IsoKind kind, const HopfTriple& t);
LinearMap build_iso(IsoKind kind, const HopfAlgebraData& h);

/// f(a # k # b) = ((a (x) 1) x k)((1 (x) b) x 1) evaluated in the diagonal product.
LinearMap f_map_from_generators(const HopfTriple& t, const AlgebraHandle& diagonal);
/// f^-1((a (x) b) x k) = (1 # 1 # b)(a # k # 1) evaluated in the two-sided product.
LinearMap f_map_inv_from_generators(const HopfTriple& t, const AlgebraHandle& two_sided);

inline constexpr std::size_t kExhaustiveMorphismDim = 81;
inline constexpr std::size_t kMorphismTrials = 200;
CheckMode default_morphism_mode(std::size_t dim, std::uint64_t seed = 0);

/// map(1) = 1 and map(xy) = map(x) map(y), on all basis pairs or on random vectors.
CheckReport verify_algebra_morphism(const LinearMap& map, const AlgebraHandle& src,
                                    const AlgebraHandle& dst, CheckMode mode);

/// m1 m2 = id and m2 m1 = id; the witness is the first differing column.
CheckReport verify_mutually_inverse(const LinearMap& m1, const LinearMap& m2);

/// beta = alpha phi and beta^-1 = phi^-1 alpha^-1 as matrices.
CheckReport composition_identity(const HopfTriple& t);

}  // namespace hopf
