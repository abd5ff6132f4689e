#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace affcrystal::detail {

using Rational = boost::rational<std::int64_t>;
using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix to_rational(const std::vector<std::vector<int>>& m);

/// Reduced row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> row_reduce(RationalMatrix& m);

/// Basis vector of a one-dimensional null space, scaled to a primitive
/// integer vector with positive entries. Empty when the kernel is not 1-dim
/// or the kernel vector has mixed signs.
std::vector<int> positive_null_vector(const std::vector<std::vector<int>>& m);

/// Unique solution of m x = rhs for square nonsingular m, or nullopt.
std::optional<std::vector<Rational>> solve(const std::vector<std::vector<int>>& m,
                                           const std::vector<Rational>& rhs);

}  // namespace affcrystal::detail
