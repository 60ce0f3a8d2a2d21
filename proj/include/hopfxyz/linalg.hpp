#pragma once

#include <optional>
#include <vector>

#include "hopfxyz/tensor.hpp"

namespace hopf {

std::size_t rank(const LinearMap& m);

/// Basis of { x : m x = 0 }, in reduced echelon form (one free variable set to 1 each).
std::vector<Vector> kernel(const LinearMap& m);

/// Exact inverse of a square matrix; nullopt if singular.
std::optional<LinearMap> try_inverse(const LinearMap& m);

}  // namespace hopf
