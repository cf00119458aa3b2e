#pragma once

#include <optional>

#include "toricdeg/rational.hpp"

namespace toricdeg::linalg {

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m);

std::size_t rank(RationalMatrix m);

/// Unique solution of a square system, or nullopt when singular.
std::optional<RationalVector> solve(RationalMatrix a, RationalVector b);

/// Basis of {x : m x = 0}, each vector scaled to a primitive integer vector.
/// `cols` is needed when `m` has no rows.
std::vector<IntVector> integer_nullspace(RationalMatrix m, std::size_t cols);

Rational determinant(RationalMatrix m);
std::int64_t determinant(const IntMatrix& m);

std::optional<RationalMatrix> inverse(const RationalMatrix& m);
/// Inverse of a unimodular integer matrix; throws when |det| != 1.
IntMatrix unimodular_inverse(const IntMatrix& m);

RationalMatrix to_rational(const IntMatrix& m);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
IntMatrix transpose(const IntMatrix& m);
IntMatrix identity(std::size_t n);
RationalVector apply(const IntMatrix& m, const RationalVector& v);
IntVector apply(const IntMatrix& m, const IntVector& v);

}  // namespace toricdeg::linalg
