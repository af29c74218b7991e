#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "nowicki/rational.hpp"

namespace nowicki {

using QVector = std::vector<Rational>;
using SparseRow = std::map<std::size_t, Rational>;

/// Sparse matrix over Q. Only nonzero entries are stored.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);

  static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols);
  static QMatrix from_columns(const std::vector<QVector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& value);
  void add_to(std::size_t r, std::size_t c, const Rational& value);

  const SparseRow& row(std::size_t r) const { return data_.at(r); }
  QVector dense_row(std::size_t r) const;
  QVector column(std::size_t c) const;
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  QVector apply(const QVector& v) const;
  QMatrix operator*(const QMatrix& other) const;

  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check(std::size_t r, std::size_t c) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseRow> data_;
};

struct RowEchelon {
  QMatrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Forward elimination is fraction-free over Z with
/// the first nonzero entry (in row order) of each column as pivot; the
/// back-substitution pass works over Q.
RowEchelon rref(const QMatrix& m);

std::size_t rank(const QMatrix& m);

/// Basis of {v : m v = 0}, one vector per free column, with a 1 in that column.
std::vector<QVector> nullspace(const QMatrix& m);

/// Coefficients c with sum c_i basis_i = target, or nullopt when target is not
/// in the span. Throws std::invalid_argument on a length mismatch.
std::optional<QVector> span_membership(const std::vector<QVector>& basis, const QVector& target);

bool is_zero_vector(const QVector& v);

/// Incrementally grown row space in echelon form; used for rank and span tests
/// over large candidate sets without materialising a matrix.
class EchelonSpan {
 public:
  explicit EchelonSpan(std::size_t dim) : dim_(dim) {}

  /// Adds v; returns true when it was independent of the current span.
  bool insert(const QVector& v);
  bool contains(const QVector& v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }

 private:
  SparseRow reduce(SparseRow v) const;
  SparseRow to_sparse(const QVector& v) const;

  std::size_t dim_;
  std::map<std::size_t, SparseRow> rows_;  // pivot column -> row with pivot entry 1
};

}  // namespace nowicki
