#include "nivatk/linalg.hpp"

#include <algorithm>

namespace nivatk::linalg {

Rref rref(Matrix m, std::size_t cols) {
  Rref r;
  r.cols = cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    Rational inv = 1 / m[row][col];
    for (std::size_t k = col; k < cols; ++k) m[row][k] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (std::size_t k = col; k < cols; ++k) m[i][k] -= f * m[row][k];
    }
    r.pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  r.rows = std::move(m);
  return r;
}

std::vector<std::vector<Rational>> nullspace(const Matrix& m, std::size_t cols) {
  Rref r = rref(m, cols);
  std::vector<char> is_pivot(cols, 0);
  for (auto p : r.pivots) is_pivot[p] = 1;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < r.rows.size(); ++i) v[r.pivots[i]] = -r.rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<Integer> out;
  out.reserve(v.size());
  Integer g = 0;
  for (const auto& x : v) {
    Integer n = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    out.push_back(n);
  }
  if (g == 0) return out;
  int sign = 1;
  for (const auto& n : out)
    if (n != 0) {
      sign = sgn(n);
      break;
    }
  for (auto& n : out) n = n / g * sign;
  return out;
}

void SparseSystem::add_equation(std::vector<std::pair<std::uint32_t, Rational>> entries, Rational rhs) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<std::uint32_t, Rational>> merged;
  for (auto& e : entries) {
    if (e.first >= cols_) throw Error(Errc::InvalidArgument, "column out of range");
    if (!merged.empty() && merged.back().first == e.first)
      merged.back().second += e.second;
    else
      merged.push_back(std::move(e));
  }
  std::erase_if(merged, [](const auto& e) { return e.second == 0; });
  rows_.push_back(std::move(merged));
  rhs_.push_back(std::move(rhs));
}

namespace {

using SparseRow = std::vector<std::pair<std::uint32_t, Rational>>;

const Rational* find_entry(const SparseRow& r, std::uint32_t col) {
  auto it = std::lower_bound(r.begin(), r.end(), col, [](const auto& e, std::uint32_t c) { return e.first < c; });
  return (it != r.end() && it->first == col) ? &it->second : nullptr;
}

// target -= f * source; returns columns newly introduced into target.
void axpy(SparseRow& target, const Rational& f, const SparseRow& source, std::vector<std::uint32_t>& fill) {
  SparseRow out;
  out.reserve(target.size() + source.size());
  std::size_t i = 0, j = 0;
  while (i < target.size() || j < source.size()) {
    if (j == source.size() || (i < target.size() && target[i].first < source[j].first)) {
      out.push_back(std::move(target[i++]));
    } else if (i == target.size() || source[j].first < target[i].first) {
      fill.push_back(source[j].first);
      out.emplace_back(source[j].first, -f * source[j].second);
      ++j;
    } else {
      Rational v = target[i].second - f * source[j].second;
      if (v != 0) out.emplace_back(target[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  target = std::move(out);
}

}  // namespace

std::variant<SparseSystem::Solution, SparseSystem::Inconsistent> SparseSystem::solve() const {
  std::vector<SparseRow> rows = rows_;
  std::vector<Rational> rhs = rhs_;
  std::vector<std::vector<std::uint32_t>> col_rows(cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& e : rows[i]) col_rows[e.first].push_back(static_cast<std::uint32_t>(i));

  std::vector<char> used(rows.size(), 0);
  std::vector<std::pair<std::uint32_t, std::size_t>> pivots;  // (column, row)
  std::vector<std::uint32_t> fill;

  for (std::uint32_t col = 0; col < cols_; ++col) {
    // Live rows touching this column (the list may hold stale entries).
    std::vector<std::uint32_t> live;
    for (auto r : col_rows[col])
      if (!used[r] && find_entry(rows[r], col)) live.push_back(r);
    std::sort(live.begin(), live.end());
    live.erase(std::unique(live.begin(), live.end()), live.end());
    col_rows[col].clear();
    if (live.empty()) continue;

    std::uint32_t piv = live.front();
    for (auto r : live)
      if (rows[r].size() < rows[piv].size()) piv = r;
    used[piv] = 1;
    Rational inv = 1 / *find_entry(rows[piv], col);
    for (auto& e : rows[piv]) e.second *= inv;
    rhs[piv] *= inv;
    pivots.emplace_back(col, piv);

    for (auto r : live) {
      if (r == piv) continue;
      Rational f = *find_entry(rows[r], col);
      fill.clear();
      axpy(rows[r], f, rows[piv], fill);
      rhs[r] -= f * rhs[piv];
      for (auto c : fill) col_rows[c].push_back(r);
    }
  }

  for (std::size_t i = 0; i < rows.size(); ++i)
    if (!used[i] && rows[i].empty() && rhs[i] != 0) return Inconsistent{i};

  Solution s;
  s.x.assign(cols_, Rational(0));
  s.rank = pivots.size();
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    const auto& row = rows[it->second];
    Rational v = rhs[it->second];
    for (const auto& e : row)
      if (e.first != it->first) v -= e.second * s.x[e.first];
    s.x[it->first] = v;
  }
  return s;
}

}  // namespace nivatk::linalg
