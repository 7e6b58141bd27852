#ifndef WEILBOUNDS_SIMPLEX_HPP
#define WEILBOUNDS_SIMPLEX_HPP

#include "weilbounds/numeric.hpp"

#include <vector>

namespace weilbounds {

// Dense primal simplex for  max c.x  s.t.  A x <= b, x >= 0  with b >= 0,
// so the slack basis is feasible and no phase 1 is needed.  Bland's rule
// (smallest variable index, smallest basis index on ratio ties) prevents
// cycling; with an exact field type every pivot is exact.
//
// FieldOps must provide: zero(), one(), sign(const Field&) -> int.
template <typename Field, typename Ops>
struct SimplexSolver {
  enum class Status { kOptimal, kUnbounded };

  struct Result {
    Status status = Status::kOptimal;
    Field optimum;
    std::vector<Field> solution;      // structural variables
    std::vector<size_t> binding_rows; // constraints with zero slack
  };

  static Result maximize(const std::vector<std::vector<Field>>& A,
                         const std::vector<Field>& b, const std::vector<Field>& c,
                         const Ops& ops) {
    size_t m = A.size();
    size_t n = c.size();
    for (const auto& row : A) {
      if (row.size() != n) throw ValidationError("simplex: ragged constraint matrix");
    }
    if (b.size() != m) throw ValidationError("simplex: bound count mismatch");
    for (const auto& v : b) {
      if (ops.sign(v) < 0)
        throw ValidationError("simplex: negative right-hand side");
    }

    size_t cols = n + m + 1;  // structural, slack, rhs
    std::vector<std::vector<Field>> T(m, std::vector<Field>(cols, ops.zero()));
    std::vector<Field> obj(cols, ops.zero());
    std::vector<size_t> basis(m);
    for (size_t i = 0; i < m; ++i) {
      for (size_t j = 0; j < n; ++j) T[i][j] = A[i][j];
      T[i][n + i] = ops.one();
      T[i][cols - 1] = b[i];
      basis[i] = n + i;
    }
    for (size_t j = 0; j < n; ++j) obj[j] = ops.zero() - c[j];

    for (;;) {
      // Bland: entering variable with the smallest index.
      size_t enter = cols;
      for (size_t j = 0; j + 1 < cols; ++j) {
        if (ops.sign(obj[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols) break;  // optimal

      size_t leave = m;
      for (size_t i = 0; i < m; ++i) {
        if (ops.sign(T[i][enter]) <= 0) continue;
        if (leave == m) {
          leave = i;
          continue;
        }
        // ratio(i) vs ratio(leave) compared without division order issues:
        // b_i * a_l - b_l * a_i, both pivots positive.
        Field diff = T[i][cols - 1] * T[leave][enter] -
                     T[leave][cols - 1] * T[i][enter];
        int s = ops.sign(diff);
        if (s < 0 || (s == 0 && basis[i] < basis[leave])) leave = i;
      }
      if (leave == m) {
        Result out;
        out.status = Status::kUnbounded;
        return out;
      }

      // Pivot.
      Field pivot = T[leave][enter];
      for (size_t j = 0; j < cols; ++j) T[leave][j] = T[leave][j] / pivot;
      for (size_t i = 0; i < m; ++i) {
        if (i == leave) continue;
        Field factor = T[i][enter];
        if (ops.sign(factor) == 0) continue;
        for (size_t j = 0; j < cols; ++j) T[i][j] = T[i][j] - factor * T[leave][j];
      }
      Field ofac = obj[enter];
      if (ops.sign(ofac) != 0) {
        for (size_t j = 0; j < cols; ++j) obj[j] = obj[j] - ofac * T[leave][j];
      }
      basis[leave] = enter;
    }

    Result out;
    out.status = Status::kOptimal;
    out.solution.assign(n, ops.zero());
    std::vector<Field> slack(m, ops.zero());
    for (size_t i = 0; i < m; ++i) {
      if (basis[i] < n)
        out.solution[basis[i]] = T[i][cols - 1];
      else
        slack[basis[i] - n] = T[i][cols - 1];
    }
    out.optimum = obj[cols - 1];
    for (size_t i = 0; i < m; ++i) {
      if (ops.sign(slack[i]) == 0) out.binding_rows.push_back(i);
    }
    return out;
  }
};

}  // namespace weilbounds

#endif
