#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ccgrowth/rational.hpp"

namespace ccgrowth {

using QVector = std::vector<Rational>;

QVector qvec_zero(int dim);
QVector qvec_add(const QVector& a, const QVector& b);
QVector qvec_sub(const QVector& a, const QVector& b);
QVector qvec_scale(const Rational& c, const QVector& v);
bool qvec_is_zero(const QVector& v);
std::size_t hash_qvector(const QVector& v);
std::string qvec_str(const QVector& v);

// Dense rational matrix, stored by rows.
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(int rows, int cols)
      : cols_(cols), rows_(static_cast<std::size_t>(rows), qvec_zero(cols)) {}

  static QMatrix identity(int n);
  static QMatrix from_rows(std::vector<QVector> rows);

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return rows_[i][j]; }
  const Rational& at(int i, int j) const { return rows_[i][j]; }
  const QVector& row(int i) const { return rows_[i]; }
  QVector& row(int i) { return rows_[i]; }
  const std::vector<QVector>& row_list() const { return rows_; }

  QMatrix transpose() const;
  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  // Matrix * column vector.
  QVector apply(const QVector& v) const;

  bool is_identity() const;
  friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

  std::size_t hash() const;
  std::string str() const;

private:
  int cols_ = 0;
  std::vector<QVector> rows_;
};

int matrix_rank(const QMatrix& m);
int matrix_rank(const std::vector<QVector>& rows);

// Inverse of a square matrix; error if singular.
QMatrix matrix_inverse(const QMatrix& m);

Rational matrix_det(const QMatrix& m);

// Reduced row echelon form; returns pivot column indices.
std::vector<int> rref_in_place(QMatrix& m);

// Basis (as rows) of the row space.  Rows of the result are in RREF, so two
// subspaces are equal iff the results compare equal.
QMatrix row_space_basis(const QMatrix& m);

// Basis (as rows) of the kernel {x : m x = 0}.
QMatrix kernel_basis(const QMatrix& m);

// Solution set of A x = b: a particular solution plus the kernel of A, or
// nullopt when the system is inconsistent.
struct AffineSolution {
  QVector particular;
  QMatrix kernel; // rows span the solution direction
};
std::optional<AffineSolution> solve_affine(const QMatrix& a, const QVector& b);

// True iff v lies in the row span of basis_rows.
bool in_row_span(const QMatrix& basis_rows, const QVector& v);

} // namespace ccgrowth

template <>
struct std::hash<ccgrowth::QMatrix> {
  std::size_t operator()(const ccgrowth::QMatrix& m) const { return m.hash(); }
};
