#include "mmp/lp.hpp"

#include <optional>

#include "mmp/error.hpp"

namespace mmp {
namespace {

enum class Status { Optimal, Unbounded, Infeasible };

struct StandardResult {
  Status status;
  RatVec y;
  Rat value;
};

// Dense two-phase simplex with Bland's rule on
//   minimize c.y  subject to  A y = b,  y >= 0.
class Tableau {
 public:
  Tableau(RatMatrix a, RatVec b, RatVec c) : m_(a.size()), n_(c.size()), c_(std::move(c)) {
    rows_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (b[i] < Rat(0)) {
        for (auto& x : a[i]) x = -x;
        b[i] = -b[i];
      }
      rows_[i] = std::move(a[i]);
      rows_[i].resize(n_ + m_);
      rows_[i][n_ + i] = Rat(1);
      rows_[i].push_back(b[i]);
    }
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) basis_[i] = n_ + i;
  }

  StandardResult solve() {
    // Phase 1: minimise the sum of artificials.
    RatVec phase1(n_ + m_);
    for (std::size_t i = 0; i < m_; ++i) phase1[n_ + i] = Rat(1);
    set_objective(phase1);
    run(n_ + m_);
    if (obj_.back() != Rat(0)) return {Status::Infeasible, {}, {}};
    drive_out_artificials();
    RatVec phase2 = c_;
    phase2.resize(n_ + m_);
    set_objective(phase2);
    if (!run(n_)) return {Status::Unbounded, {}, {}};
    RatVec y(n_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (basis_[i] < n_) y[basis_[i]] = rows_[i].back();
    Rat value;
    for (std::size_t j = 0; j < n_; ++j) value += c_[j] * y[j];
    return {Status::Optimal, std::move(y), value};
  }

 private:
  void set_objective(const RatVec& cost) {
    // Reduced costs: cost - c_B B^{-1} A; last entry holds -(current value).
    obj_.assign(n_ + m_ + 1, Rat(0));
    for (std::size_t j = 0; j < n_ + m_; ++j) obj_[j] = cost[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rat cb = cost[basis_[i]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j <= n_ + m_; ++j) obj_[j] -= cb * rows_[i][j];
    }
    // obj_.back() is now -value; keep the value itself for readability.
    obj_.back() = -obj_.back();
  }

  void pivot(std::size_t r, std::size_t col) {
    const Rat inv = rows_[r][col].inverse();
    for (auto& x : rows_[r]) x *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][col].is_zero()) continue;
      const Rat f = rows_[i][col];
      for (std::size_t j = 0; j < rows_[i].size(); ++j)
        if (!rows_[r][j].is_zero()) rows_[i][j] -= f * rows_[r][j];
    }
    const Rat f = obj_[col];
    if (!f.is_zero()) {
      for (std::size_t j = 0; j + 1 < obj_.size(); ++j)
        if (!rows_[r][j].is_zero()) obj_[j] -= f * rows_[r][j];
      obj_.back() += f * rows_[r].back();
    }
    basis_[r] = col;
  }

  // Returns false if unbounded. Only columns < allowed may enter.
  bool run(std::size_t allowed) {
    while (true) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < allowed; ++j)
        if (obj_[j] < Rat(0)) {
          enter = j;
          break;
        }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rat best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][*enter] <= Rat(0)) continue;
        const Rat ratio = rows_[i].back() / rows_[i][*enter];
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < n_) {
        ++i;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < n_; ++j)
        if (!rows_[i][j].is_zero()) {
          col = j;
          break;
        }
      if (col) {
        pivot(i, *col);
        ++i;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  std::size_t m_;
  std::size_t n_;
  RatVec c_;
  RatMatrix rows_;
  std::vector<std::size_t> basis_;
  RatVec obj_;
};

struct Variable {
  bool free;
};

// General form: variables (free or >= 0), rows (>= or =), minimise cost.
StandardResult solve_general(const std::vector<Variable>& vars, std::span<const HalfSpace> rows,
                             std::span<const Rat> cost) {
  const std::size_t nv = vars.size();
  std::vector<std::size_t> pos(nv), neg(nv, SIZE_MAX);
  std::size_t cols = 0;
  for (std::size_t j = 0; j < nv; ++j) {
    pos[j] = cols++;
    if (vars[j].free) neg[j] = cols++;
  }
  std::vector<std::size_t> slack(rows.size(), SIZE_MAX);
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (!rows[i].equality) slack[i] = cols++;

  RatMatrix a(rows.size(), RatVec(cols));
  RatVec b(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].normal.size() != nv) throw Error(ErrorCode::DimensionMismatch, "constraint length");
    for (std::size_t j = 0; j < nv; ++j) {
      a[i][pos[j]] = rows[i].normal[j];
      if (neg[j] != SIZE_MAX) a[i][neg[j]] = -rows[i].normal[j];
    }
    if (slack[i] != SIZE_MAX) a[i][slack[i]] = Rat(-1);
    b[i] = rows[i].offset;
  }
  RatVec c(cols);
  for (std::size_t j = 0; j < nv; ++j) {
    c[pos[j]] = cost[j];
    if (neg[j] != SIZE_MAX) c[neg[j]] = -cost[j];
  }
  Tableau t(std::move(a), std::move(b), std::move(c));
  StandardResult r = t.solve();
  if (r.status != Status::Optimal) return r;
  RatVec x(nv);
  for (std::size_t j = 0; j < nv; ++j) {
    x[j] = r.y[pos[j]];
    if (neg[j] != SIZE_MAX) x[j] -= r.y[neg[j]];
  }
  r.y = std::move(x);
  return r;
}

std::size_t dimension_of(std::span<const HalfSpace> constraints, std::size_t fallback) {
  return constraints.empty() ? fallback : constraints.front().normal.size();
}

}  // namespace

LpResult lp_minimize(std::span<const HalfSpace> constraints, std::span<const Rat> objective, const Rat& constant) {
  const std::size_t n = objective.size();
  if (dimension_of(constraints, n) != n) throw Error(ErrorCode::DimensionMismatch, "objective length");
  std::vector<Variable> vars(n, Variable{true});
  const StandardResult r = solve_general(vars, constraints, objective);
  if (r.status == Status::Infeasible) throw Error(ErrorCode::EmptyFeasible, "inconsistent constraints");
  if (r.status == Status::Unbounded) return Unbounded{};
  return LpOptimum{r.value + constant, r.y, true};
}

LpResult lp_maximize(std::span<const HalfSpace> constraints, std::span<const Rat> objective, const Rat& constant) {
  RatVec neg(objective.begin(), objective.end());
  for (auto& x : neg) x = -x;
  LpResult r = lp_minimize(constraints, neg, -constant);
  if (auto* opt = std::get_if<LpOptimum>(&r)) opt->value = -opt->value;
  return r;
}

LpResult lp_min_ratio(std::span<const HalfSpace> constraints, std::span<const Rat> num, const Rat& num0,
                      std::span<const Rat> den, const Rat& den0) {
  const std::size_t n = num.size();
  if (den.size() != n || dimension_of(constraints, n) != n)
    throw Error(ErrorCode::DimensionMismatch, "ratio program");
  if (!lp_feasible(constraints, n)) throw Error(ErrorCode::EmptyFeasible, "inconsistent constraints");
  // Variables (y, t): y = t x, t = 1 / (den.x + den0).
  std::vector<Variable> vars(n, Variable{true});
  vars.push_back(Variable{false});
  std::vector<HalfSpace> rows;
  for (const auto& h : constraints) {
    HalfSpace row{h.normal, Rat(0), h.equality};
    row.normal.push_back(-h.offset);
    rows.push_back(std::move(row));
  }
  HalfSpace norm{RatVec(den.begin(), den.end()), Rat(1), true};
  norm.normal.push_back(den0);
  rows.push_back(std::move(norm));
  RatVec cost(num.begin(), num.end());
  cost.push_back(num0);
  const StandardResult r = solve_general(vars, rows, cost);
  if (r.status == Status::Infeasible) throw Error(ErrorCode::EmptyFeasible, "denominator never positive");
  if (r.status == Status::Unbounded) return Unbounded{};
  const Rat t = r.y[n];
  LpOptimum out{r.value, {}, !t.is_zero()};
  if (out.attained) {
    out.point.resize(n);
    for (std::size_t j = 0; j < n; ++j) out.point[j] = r.y[j] / t;
  }
  return out;
}

bool lp_feasible(std::span<const HalfSpace> constraints, std::size_t dim) {
  std::vector<Variable> vars(dim, Variable{true});
  RatVec zero(dim);
  return solve_general(vars, constraints, zero).status != Status::Infeasible;
}

namespace {

void branch_and_bound(std::vector<HalfSpace>& rows, std::span<const Rat> objective, bool integral,
                      std::optional<Rat>& best) {
  const std::size_t n = objective.size();
  std::vector<Variable> vars(n, Variable{true});
  const StandardResult r = solve_general(vars, rows, objective);
  if (r.status == Status::Infeasible) return;
  if (r.status == Status::Unbounded) throw Error(ErrorCode::InvalidInput, "integer program is unbounded");
  const Rat bound = integral ? Rat(r.value.ceil()) : r.value;
  if (best && bound >= *best) return;
  std::size_t k = n;
  for (std::size_t j = 0; j < n; ++j)
    if (!r.y[j].is_integer()) {
      k = j;
      break;
    }
  if (k == n) {
    best = r.value;
    return;
  }
  RatVec e(n);
  e[k] = Rat(1);
  RatVec neg_e(n);
  neg_e[k] = Rat(-1);
  rows.push_back(HalfSpace{neg_e, -Rat(r.y[k].floor()), false});
  branch_and_bound(rows, objective, integral, best);
  rows.back() = HalfSpace{e, Rat(r.y[k].ceil()), false};
  branch_and_bound(rows, objective, integral, best);
  rows.pop_back();
}

}  // namespace

std::optional<Rat> ilp_minimize(std::span<const HalfSpace> constraints, std::span<const Rat> objective,
                                bool integral_objective) {
  std::vector<HalfSpace> rows(constraints.begin(), constraints.end());
  std::optional<Rat> best;
  branch_and_bound(rows, objective, integral_objective, best);
  return best;
}

bool in_cone(std::span<const RatVec> generators, std::span<const Rat> target) {
  const std::size_t k = generators.size();
  const std::size_t d = target.size();
  if (k == 0) {
    for (const auto& x : target)
      if (!x.is_zero()) return false;
    return true;
  }
  std::vector<Variable> vars(k, Variable{false});
  std::vector<HalfSpace> rows;
  for (std::size_t i = 0; i < d; ++i) {
    HalfSpace row{RatVec(k), target[i], true};
    for (std::size_t j = 0; j < k; ++j) row.normal[j] = generators[j][i];
    rows.push_back(std::move(row));
  }
  RatVec zero(k);
  return solve_general(vars, rows, zero).status != Status::Infeasible;
}

}  // namespace mmp
