#pragma once

#include <vector>

#include "kinu/bigfloat.hpp"

namespace kinu::detail {

/// Nodes and weights of the n-point Gauss-Legendre rule on (-1, 1), computed
/// at the caller's current working precision.
struct GLRule {
    std::vector<BigFloat> nodes;
    std::vector<BigFloat> weights;
};

/// Cached per (n, precision); the returned reference stays valid for the
/// process lifetime.
const GLRule& gauss_legendre(int n);

} // namespace kinu::detail
