#pragma once

#include "toricdeg/rational.hpp"

namespace toricdeg::lp {

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
  Status status = Status::Infeasible;
  Rational value;
  RationalVector point;
};

/// Exact two-phase simplex (Bland's rule): maximize c.x s.t. A x = b, x >= 0.
Result maximize_standard(const RationalMatrix& a, const RationalVector& b, const RationalVector& c);

/// maximize c.x s.t. A x <= b with x free.
Result maximize(const RationalMatrix& a, const RationalVector& b, const RationalVector& c);

}  // namespace toricdeg::lp
