#include "drep/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace drep {

void QMatrix::set(int i, int j, const Scalar& v) {
  if (i < 0 || i >= rows || j < 0 || j >= cols)
    throw std::out_of_range("QMatrix::set");
  if (v == 0)
    row[i].erase(j);
  else
    row[i][j] = v;
}

Scalar QMatrix::get(int i, int j) const {
  auto it = row[i].find(j);
  return it == row[i].end() ? Scalar(0) : it->second;
}

bool QMatrix::is_zero() const {
  for (const auto& r : row)
    if (!r.empty()) return false;
  return true;
}

QMatrix mat_mul(const QMatrix& a, const QMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("mat_mul: shape mismatch");
  QMatrix r(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (const auto& [k, av] : a.row[i])
      for (const auto& [j, bv] : b.row[k]) {
        auto it = r.row[i].find(j);
        if (it == r.row[i].end())
          r.row[i][j] = Scalar(av * bv);
        else {
          it->second += av * bv;
          if (it->second == 0) r.row[i].erase(it);
        }
      }
  return r;
}

// Sparse integer rows for the Bareiss elimination.
using IRow = std::map<int, Int>;

static IRow clear_denominators(const std::map<int, Scalar>& r) {
  Int lcm = 1;
  for (const auto& [j, v] : r) {
    Int d = v.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
    lcm = lcm / g * d;
  }
  IRow out;
  for (const auto& [j, v] : r) out[j] = Int(v.get_num() * (lcm / v.get_den()));
  return out;
}

static Int div_checked(const Int& num, const Int& den) {
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw std::logic_error("rank_exact: non-exact Bareiss division");
  return q;
}

long rank_exact(const QMatrix& m) {
  std::vector<IRow> rows;
  rows.reserve(m.rows);
  for (const auto& r : m.row)
    if (!r.empty()) rows.push_back(clear_denominators(r));

  long rank = 0;
  Int prev_pivot = 1;
  while (!rows.empty()) {
    // Leading column of the elimination step: minimal column present.
    int col = rows[0].begin()->first;
    for (const auto& r : rows) col = std::min(col, r.begin()->first);
    // Pivot row: smallest |entry| in that column.
    std::size_t pi = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      auto it = rows[i].find(col);
      if (it == rows[i].end()) continue;
      if (pi == rows.size() ||
          mpz_cmpabs(it->second.get_mpz_t(), rows[pi].at(col).get_mpz_t()) < 0)
        pi = i;
    }
    if (pi == rows.size()) continue;  // unreachable: col chosen as present
    IRow pivot_row = std::move(rows[pi]);
    rows.erase(rows.begin() + pi);
    const Int p = pivot_row.at(col);
    ++rank;

    std::vector<IRow> next;
    next.reserve(rows.size());
    for (auto& r : rows) {
      auto it = r.find(col);
      if (it == r.end()) {
        // Still scale by p / prev_pivot to stay fraction-free.
        IRow nr;
        for (auto& [j, v] : r) {
          Int t = div_checked(Int(v * p), prev_pivot);
          if (t != 0) nr[j] = t;
        }
        if (!nr.empty()) next.push_back(std::move(nr));
        continue;
      }
      Int e = it->second;
      IRow nr;
      for (auto& [j, v] : r) {
        if (j == col) continue;
        Int t = v * p;
        auto pit = pivot_row.find(j);
        if (pit != pivot_row.end()) t -= e * pit->second;
        t = div_checked(t, prev_pivot);
        if (t != 0) nr[j] = t;
      }
      for (auto& [j, v] : pivot_row) {
        if (j == col || r.count(j)) continue;
        Int t = div_checked(Int(-e * v), prev_pivot);
        if (t != 0) nr[j] = t;
      }
      if (!nr.empty()) next.push_back(std::move(nr));
    }
    rows = std::move(next);
    prev_pivot = p;
  }
  return rank;
}

long rank_echelon_naive(const QMatrix& m) {
  std::vector<DenseRow> rows(m.rows, DenseRow(m.cols, Scalar(0)));
  for (int i = 0; i < m.rows; ++i)
    for (const auto& [j, v] : m.row[i]) rows[i][j] = v;
  return static_cast<long>(rref(rows).size());
}

std::vector<int> rref(std::vector<DenseRow>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int cols = static_cast<int>(m[0].size());
  std::size_t r = 0;
  for (int c = 0; c < cols && r < m.size(); ++c) {
    std::size_t pi = r;
    while (pi < m.size() && m[pi][c] == 0) ++pi;
    if (pi == m.size()) continue;
    std::swap(m[r], m[pi]);
    Scalar inv = Scalar(1) / m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Scalar f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<int> independent_rows(const std::vector<DenseRow>& rows) {
  std::vector<int> chosen;
  if (rows.empty()) return chosen;
  std::vector<DenseRow> ech;  // echelon rows gathered so far
  for (std::size_t i = 0; i < rows.size(); ++i) {
    DenseRow v = rows[i];
    for (const DenseRow& e : ech) {
      // e is normalized with leading 1 at its pivot.
      std::size_t p = 0;
      while (p < e.size() && e[p] == 0) ++p;
      if (p < e.size() && v[p] != 0) {
        Scalar f = v[p];
        for (std::size_t j = p; j < v.size(); ++j) v[j] -= f * e[j];
      }
    }
    std::size_t p = 0;
    while (p < v.size() && v[p] == 0) ++p;
    if (p == v.size()) continue;
    Scalar inv = Scalar(1) / v[p];
    for (std::size_t j = p; j < v.size(); ++j) v[j] *= inv;
    ech.push_back(std::move(v));
    chosen.push_back(static_cast<int>(i));
  }
  return chosen;
}

std::optional<DenseRow> solve_in_row_span(const std::vector<DenseRow>& basis,
                                          const DenseRow& v) {
  // Augment each basis row with its coordinate indicator and eliminate.
  const std::size_t n = basis.size();
  if (n == 0) {
    for (const Scalar& x : v)
      if (x != 0) return std::nullopt;
    return DenseRow{};
  }
  const std::size_t cols = basis[0].size();
  std::vector<DenseRow> m(n, DenseRow(cols + n, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = basis[i][j];
    m[i][cols + i] = Scalar(1);
  }
  // Eliminate v against the rows, tracking coefficients.
  DenseRow w(cols + n, Scalar(0));
  for (std::size_t j = 0; j < cols; ++j) w[j] = v[j];
  rref(m);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t p = 0;
    while (p < cols && m[i][p] == 0) ++p;
    if (p == cols) continue;
    if (w[p] != 0) {
      Scalar f = w[p];
      for (std::size_t j = 0; j < cols + n; ++j) w[j] -= f * m[i][j];
    }
  }
  for (std::size_t j = 0; j < cols; ++j)
    if (w[j] != 0) return std::nullopt;
  DenseRow coeffs(n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) coeffs[i] = Scalar(-w[cols + i]);
  return coeffs;
}

std::vector<DenseRow> nullspace(const std::vector<DenseRow>& rows, int cols) {
  std::vector<DenseRow> m = rows;
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<DenseRow> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    DenseRow x(cols, Scalar(0));
    x[c] = Scalar(1);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      x[pivots[i]] = Scalar(-(i < m.size() ? m[i][c] : Scalar(0)));
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace drep
