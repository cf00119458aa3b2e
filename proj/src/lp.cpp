#include "toricdeg/lp.hpp"

#include <limits>

namespace toricdeg::lp {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense tableau; column `cols` holds the right-hand side.
struct Tableau {
  RationalMatrix t;
  std::vector<std::size_t> basis;
  RationalVector reduced;  // reduced costs, last entry is the objective value
  std::size_t cols = 0;

  void pivot(std::size_t row, std::size_t col) {
    Rational inv = 1 / t[row][col];
    for (auto& x : t[row]) x *= inv;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i == row || t[i][col] == 0) continue;
      Rational f = t[i][col];
      for (std::size_t j = 0; j <= cols; ++j)
        if (t[row][j] != 0) t[i][j] -= f * t[row][j];
    }
    if (reduced[col] != 0) {
      Rational f = reduced[col];
      for (std::size_t j = 0; j <= cols; ++j)
        if (t[row][j] != 0) reduced[j] -= f * t[row][j];
    }
    basis[row] = col;
  }

  void price(const RationalVector& cost) {
    reduced.assign(cols + 1, 0);
    for (std::size_t j = 0; j < cols; ++j) reduced[j] = -cost[j];
    for (std::size_t i = 0; i < t.size(); ++i) {
      const Rational& cb = cost[basis[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= cols; ++j) reduced[j] += cb * t[i][j];
    }
  }

  // Returns false when unbounded. Columns at or beyond `usable` never enter.
  bool optimize(std::size_t usable) {
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < usable; ++j)
        if (reduced[j] < 0) {
          enter = j;
          break;
        }
      if (enter == kNone) return true;
      std::size_t leave = kNone;
      Rational best;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i][enter] <= 0) continue;
        Rational ratio = t[i][cols] / t[i][enter];
        if (leave == kNone || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == kNone) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

Result maximize_standard(const RationalMatrix& a, const RationalVector& b, const RationalVector& c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  Tableau tab;
  tab.cols = n + m;
  tab.t.assign(m, RationalVector(n + m + 1, 0));
  tab.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) tab.t[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
    tab.t[i][n + i] = 1;
    tab.t[i][n + m] = flip ? Rational(-b[i]) : b[i];
    tab.basis[i] = n + i;
  }

  RationalVector phase1(n + m, 0);
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = -1;
  tab.price(phase1);
  tab.optimize(n + m);
  Result result;
  if (tab.reduced[n + m] != 0) {
    result.status = Status::Infeasible;
    return result;
  }

  // Drive artificial variables out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < tab.t.size();) {
    if (tab.basis[i] < n) {
      ++i;
      continue;
    }
    std::size_t col = kNone;
    for (std::size_t j = 0; j < n; ++j)
      if (tab.t[i][j] != 0) {
        col = j;
        break;
      }
    if (col == kNone) {
      tab.t.erase(tab.t.begin() + static_cast<std::ptrdiff_t>(i));
      tab.basis.erase(tab.basis.begin() + static_cast<std::ptrdiff_t>(i));
      continue;
    }
    tab.pivot(i, col);
    ++i;
  }

  RationalVector cost(n + m, 0);
  for (std::size_t j = 0; j < n; ++j) cost[j] = c[j];
  tab.price(cost);
  if (!tab.optimize(n)) {
    result.status = Status::Unbounded;
    return result;
  }
  result.status = Status::Optimal;
  result.point.assign(n, 0);
  for (std::size_t i = 0; i < tab.t.size(); ++i)
    if (tab.basis[i] < n) result.point[tab.basis[i]] = tab.t[i][tab.cols];
  result.value = tab.reduced[tab.cols];
  return result;
}

Result maximize(const RationalMatrix& a, const RationalVector& b, const RationalVector& c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  RationalMatrix std_a(m, RationalVector(2 * n + m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std_a[i][j] = a[i][j];
      std_a[i][n + j] = -a[i][j];
    }
    std_a[i][2 * n + i] = 1;
  }
  RationalVector std_c(2 * n + m, 0);
  for (std::size_t j = 0; j < n; ++j) {
    std_c[j] = c[j];
    std_c[n + j] = -c[j];
  }
  Result r = maximize_standard(std_a, b, std_c);
  if (r.status != Status::Optimal) return r;
  RationalVector x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = r.point[j] - r.point[n + j];
  r.point = std::move(x);
  return r;
}

}  // namespace toricdeg::lp
