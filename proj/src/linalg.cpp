#include "fano/linalg.hpp"

#include <cassert>

namespace fano {

namespace {

// Row-reduce in place, returning pivot columns. ncols limits elimination to
// the leading block (the remaining columns ride along as augmentation).
std::vector<int> row_reduce(RatMat& m, int ncols) {
  std::vector<int> pivots;
  int rows = static_cast<int>(m.size());
  int r = 0;
  for (int c = 0; c < ncols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    Rat inv = m[r][c];
    for (auto& v : m[r]) v /= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rat_rank(RatMat m) {
  if (m.empty()) return 0;
  return static_cast<int>(row_reduce(m, static_cast<int>(m[0].size())).size());
}

std::optional<RatVec> rat_solve(RatMat a, RatVec b) {
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (int i = 0; i < rows; ++i) a[i].push_back(b[i]);
  auto piv = row_reduce(a, cols);
  for (int i = static_cast<int>(piv.size()); i < rows; ++i)
    if (a[i][cols] != 0) return std::nullopt;
  RatVec x(cols, 0);
  for (size_t k = 0; k < piv.size(); ++k) x[piv[k]] = a[k][cols];
  return x;
}

std::vector<RatVec> rat_kernel(RatMat a) {
  if (a.empty()) return {};
  int cols = static_cast<int>(a[0].size());
  auto piv = row_reduce(a, cols);
  std::vector<bool> is_piv(cols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<RatVec> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_piv[c]) continue;
    RatVec v(cols, 0);
    v[c] = 1;
    for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -a[k][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

// Dense simplex tableau on rationals. Variables are indexed 0..n-1; basis
// holds the variable sitting in each row.
struct Tableau {
  RatMat t;  // rows x (n + 1), last column = rhs
  std::vector<int> basis;
  int n;

  Rat& rhs(int r) { return t[r][n]; }

  void pivot(int r, int c) {
    Rat inv = t[r][c];
    for (auto& v : t[r]) v /= inv;
    for (size_t i = 0; i < t.size(); ++i) {
      if (static_cast<int>(i) == r || t[i][c] == 0) continue;
      Rat f = t[i][c];
      for (int j = 0; j <= n; ++j) t[i][j] -= f * t[r][j];
    }
    basis[r] = c;
  }

  // Maximize obj (length n+1 with constant in last slot) over current
  // feasible basis; obj is reduced in place. Bland's rule.
  LpStatus optimize(RatVec& obj) {
    // reduce objective against basis
    for (size_t r = 0; r < basis.size(); ++r) {
      if (obj[basis[r]] == 0) continue;
      Rat f = obj[basis[r]];
      for (int j = 0; j <= n; ++j) obj[j] -= f * t[r][j];
    }
    for (;;) {
      int enter = -1;
      for (int j = 0; j < n; ++j)
        if (obj[j] > 0) {
          enter = j;
          break;
        }
      if (enter < 0) return LpStatus::Optimal;
      int leave = -1;
      Rat best;
      for (size_t r = 0; r < t.size(); ++r) {
        if (t[r][enter] <= 0) continue;
        Rat ratio = rhs(static_cast<int>(r)) / t[r][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[r] < basis[leave])) {
          leave = static_cast<int>(r);
          best = ratio;
        }
      }
      if (leave < 0) return LpStatus::Unbounded;
      pivot(leave, enter);
      Rat f = obj[enter];
      for (int j = 0; j <= n; ++j) obj[j] -= f * t[leave][j];
    }
  }
};

}  // namespace

LpResult lp_solve(const RatMat& aeq, const RatVec& beq, const RatMat& ale,
                  const RatVec& ble, const RatVec& c) {
  int n = static_cast<int>(c.size());
  int me = static_cast<int>(aeq.size());
  int ml = static_cast<int>(ale.size());
  int nslack = ml;
  int nart = me + ml;  // an artificial per row keeps phase I uniform
  int total = n + nslack + nart;

  Tableau tab;
  tab.n = total;
  tab.t.assign(me + ml, RatVec(total + 1, 0));
  tab.basis.assign(me + ml, -1);

  for (int i = 0; i < me; ++i) {
    for (int j = 0; j < n; ++j) tab.t[i][j] = aeq[i][j];
    tab.t[i][total] = beq[i];
  }
  for (int i = 0; i < ml; ++i) {
    int r = me + i;
    for (int j = 0; j < n; ++j) tab.t[r][j] = ale[i][j];
    tab.t[r][n + i] = 1;  // slack
    tab.t[r][total] = ble[i];
  }
  // flip rows to nonnegative rhs, then install artificials
  for (int r = 0; r < me + ml; ++r) {
    if (tab.t[r][total] < 0)
      for (auto& v : tab.t[r]) v = -v;
    tab.t[r][n + nslack + r] = 1;
    tab.basis[r] = n + nslack + r;
  }

  // Phase I: maximize -sum(artificials)
  RatVec obj1(total + 1, 0);
  for (int j = n + nslack; j < total; ++j) obj1[j] = -1;
  tab.optimize(obj1);
  if (obj1[total] != 0) return {LpStatus::Infeasible, 0, {}};
  // drive remaining artificials out of the basis
  for (int r = 0; r < me + ml; ++r) {
    if (tab.basis[r] < n + nslack) continue;
    int enter = -1;
    for (int j = 0; j < n + nslack; ++j)
      if (tab.t[r][j] != 0) {
        enter = j;
        break;
      }
    if (enter >= 0) tab.pivot(r, enter);
    // else: redundant row, harmless
  }
  // forbid artificials from re-entering
  for (auto& row : tab.t)
    for (int j = n + nslack; j < total; ++j) row[j] = 0;
  for (int r = 0; r < me + ml; ++r)
    if (tab.basis[r] >= n + nslack) tab.t[r][tab.basis[r]] = 1;

  // Phase II
  RatVec obj2(total + 1, 0);
  for (int j = 0; j < n; ++j) obj2[j] = c[j];
  LpStatus st = tab.optimize(obj2);
  LpResult res;
  res.status = st;
  if (st == LpStatus::Unbounded) return res;
  res.x.assign(n, 0);
  for (size_t r = 0; r < tab.basis.size(); ++r)
    if (tab.basis[r] < n) res.x[tab.basis[r]] = tab.rhs(static_cast<int>(r));
  res.value = -obj2[total];
  return res;
}

std::optional<RatVec> lp_feasible_free(const RatMat& a, const RatVec& b) {
  // substitute x = u - v with u, v >= 0
  int n = a.empty() ? 0 : static_cast<int>(a[0].size());
  RatMat ale(a.size(), RatVec(2 * n, 0));
  for (size_t i = 0; i < a.size(); ++i)
    for (int j = 0; j < n; ++j) {
      ale[i][j] = a[i][j];
      ale[i][n + j] = -a[i][j];
    }
  RatVec c(2 * n, 0);
  auto res = lp_solve({}, {}, ale, b, c);
  if (res.status != LpStatus::Optimal) return std::nullopt;
  RatVec x(n);
  for (int j = 0; j < n; ++j) x[j] = res.x[j] - res.x[n + j];
  return x;
}

}  // namespace fano
