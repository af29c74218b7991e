#include "nowicki/linalg.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace nowicki {

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows, std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("QMatrix::from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& columns, std::size_t rows) {
  QMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("QMatrix::from_columns: ragged columns");
    for (std::size_t r = 0; r < rows; ++r) m.set(r, c, columns[c][r]);
  }
  return m;
}

void QMatrix::check(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_)
    throw std::out_of_range("QMatrix index (" + std::to_string(r) + "," + std::to_string(c) + ")");
}

Rational QMatrix::at(std::size_t r, std::size_t c) const {
  check(r, c);
  auto it = data_[r].find(c);
  return it == data_[r].end() ? Rational(0) : it->second;
}

void QMatrix::set(std::size_t r, std::size_t c, const Rational& value) {
  check(r, c);
  if (nowicki::is_zero(value))
    data_[r].erase(c);
  else
    data_[r][c] = value;
}

void QMatrix::add_to(std::size_t r, std::size_t c, const Rational& value) {
  check(r, c);
  if (nowicki::is_zero(value)) return;
  auto [it, inserted] = data_[r].try_emplace(c, value);
  if (!inserted) {
    it->second += value;
    if (nowicki::is_zero(it->second)) data_[r].erase(it);
  }
}

QVector QMatrix::dense_row(std::size_t r) const {
  QVector out(cols_);
  for (const auto& [c, v] : data_.at(r)) out[c] = v;
  return out;
}

QVector QMatrix::column(std::size_t c) const {
  QVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

std::size_t QMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& row : data_) n += row.size();
  return n;
}

QVector QMatrix::apply(const QVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("QMatrix::apply: dimension mismatch");
  QVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, x] : data_[r]) out[r] += x * v[c];
  return out;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("QMatrix product: dimension mismatch");
  QMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [k, x] : data_[r])
      for (const auto& [c, y] : other.data_[k]) out.add_to(r, c, x * y);
  return out;
}

namespace {

using IntRow = std::map<std::size_t, Integer>;

IntRow to_integer_row(const SparseRow& row) {
  Integer lcm = 1;
  for (const auto& [c, v] : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
  IntRow out;
  for (const auto& [c, v] : row) out[c] = v.get_num() * (lcm / v.get_den());
  return out;
}

void make_primitive(IntRow& row) {
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& [c, v] : row) v /= g;
}

// a*x - b*y, sparse.
IntRow combine(const Integer& a, const IntRow& x, const Integer& b, const IntRow& y) {
  IntRow out;
  for (const auto& [c, v] : x) out[c] = a * v;
  for (const auto& [c, v] : y) {
    auto it = out.find(c);
    if (it == out.end()) {
      out[c] = -b * v;
    } else {
      it->second -= b * v;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

}  // namespace

RowEchelon rref(const QMatrix& m) {
  std::vector<IntRow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    IntRow row = to_integer_row(m.row(r));
    if (!row.empty()) {
      make_primitive(row);
      rows.push_back(std::move(row));
    }
  }

  // Rows at index >= next carry no entries left of the current column.
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < m.cols() && next < rows.size(); ++col) {
    std::size_t found = rows.size();
    for (std::size_t i = next; i < rows.size(); ++i) {
      if (!rows[i].empty() && rows[i].begin()->first == col) {
        found = i;
        break;
      }
    }
    if (found == rows.size()) continue;
    std::swap(rows[next], rows[found]);
    const IntRow& pivot_row = rows[next];
    const Integer pv = pivot_row.begin()->second;
    for (std::size_t i = next + 1; i < rows.size(); ++i) {
      if (rows[i].empty() || rows[i].begin()->first != col) continue;
      Integer f = rows[i].begin()->second;
      rows[i] = combine(pv, rows[i], f, pivot_row);
      make_primitive(rows[i]);
    }
    pivots.push_back(col);
    ++next;
  }

  std::vector<SparseRow> q(pivots.size());
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    const Integer& pv = rows[k].at(pivots[k]);
    for (const auto& [c, v] : rows[k]) {
      Rational x(v, pv);
      x.canonicalize();
      q[k][c] = x;
    }
  }
  for (std::size_t k = pivots.size(); k-- > 0;) {
    for (std::size_t i = 0; i < k; ++i) {
      auto it = q[i].find(pivots[k]);
      if (it == q[i].end()) continue;
      Rational f = it->second;
      for (const auto& [c, v] : q[k]) {
        auto jt = q[i].find(c);
        if (jt == q[i].end()) {
          q[i][c] = -f * v;
        } else {
          jt->second -= f * v;
          if (is_zero(jt->second)) q[i].erase(jt);
        }
      }
    }
  }

  RowEchelon out{QMatrix(m.rows(), m.cols()), pivots};
  for (std::size_t k = 0; k < q.size(); ++k)
    for (const auto& [c, v] : q[k]) out.reduced.set(k, c, v);
  return out;
}

std::size_t rank(const QMatrix& m) { return rref(m).pivots.size(); }

std::vector<QVector> nullspace(const QMatrix& m) {
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.reduced.at(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVector> span_membership(const std::vector<QVector>& basis, const QVector& target) {
  const std::size_t n = target.size();
  for (const auto& b : basis)
    if (b.size() != n) throw std::invalid_argument("span_membership: vector length mismatch");

  // Columns: basis vectors, then the target as an augmented column.
  QMatrix aug(n, basis.size() + 1);
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (std::size_t r = 0; r < n; ++r) aug.set(r, c, basis[c][r]);
  for (std::size_t r = 0; r < n; ++r) aug.set(r, basis.size(), target[r]);

  RowEchelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == basis.size()) return std::nullopt;
  QVector coeffs(basis.size());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) coeffs[e.pivots[k]] = e.reduced.at(k, basis.size());
  return coeffs;
}

bool is_zero_vector(const QVector& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

SparseRow EchelonSpan::to_sparse(const QVector& v) const {
  if (v.size() != dim_) throw std::invalid_argument("EchelonSpan: vector length mismatch");
  SparseRow out;
  for (std::size_t c = 0; c < v.size(); ++c)
    if (!is_zero(v[c])) out[c] = v[c];
  return out;
}

SparseRow EchelonSpan::reduce(SparseRow v) const {
  auto it = v.begin();
  while (it != v.end()) {
    auto pivot = rows_.find(it->first);
    if (pivot == rows_.end()) {
      ++it;
      continue;
    }
    const std::size_t col = it->first;
    const Rational f = it->second;
    for (const auto& [c, x] : pivot->second) {
      auto jt = v.find(c);
      if (jt == v.end()) {
        v[c] = -f * x;
      } else {
        jt->second -= f * x;
        if (is_zero(jt->second)) v.erase(jt);
      }
    }
    it = v.upper_bound(col);
  }
  return v;
}

bool EchelonSpan::insert(const QVector& v) {
  SparseRow r = reduce(to_sparse(v));
  if (r.empty()) return false;
  const std::size_t pivot = r.begin()->first;
  const Rational inv = 1 / r.begin()->second;
  for (auto& [c, x] : r) x *= inv;
  rows_.emplace(pivot, std::move(r));
  return true;
}

bool EchelonSpan::contains(const QVector& v) const { return reduce(to_sparse(v)).empty(); }

}  // namespace nowicki
