#pragma once

#include <string>
#include <string_view>

#include "hopfxyz/algebra.hpp"

namespace hopf {

struct CatalogSpec {
  enum class Name { cyclic, dual_cyclic, sweedler4, taft };

  Name name = Name::cyclic;
  Index n = 1;
  FieldSpec field;

  /// "cyclic:N", "dual_cyclic:N", "sweedler4", "taft:N:P". A suffix "@P"
  /// selects F_P instead of Q for the first three; taft is always over F_P.
  static CatalogSpec parse(std::string_view text);
  std::string to_string() const;
};

/// k[Z/n]: basis g^i, Delta(g) = g (x) g, S(g) = g^(n-1).
HopfAlgebraData cyclic_group_algebra(Index n, FieldSpec field = {});
HopfAlgebraData dual_cyclic(Index n, FieldSpec field = {});
/// Sweedler's H_4 on {1, g, x, gx}: g^2 = 1, x^2 = 0, xg = -gx,
/// Delta(x) = x (x) 1 + g (x) x, S(x) = -gx.
HopfAlgebraData sweedler4(FieldSpec field = {});
/// Taft algebra over F_p on {g^i x^j}, index i + n j: g^n = 1, x^n = 0,
/// xg = w gx with w the least primitive n-th root of unity mod p.
HopfAlgebraData taft(Index n, std::uint32_t p);

/// Smallest residue of multiplicative order exactly n mod p; throws unless n | p - 1.
std::uint32_t least_primitive_root(Index n, std::uint32_t p);

HopfAlgebraData catalog_hopf(const CatalogSpec& spec);

}  // namespace hopf
