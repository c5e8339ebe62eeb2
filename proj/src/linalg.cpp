#include "ccgrowth/linalg.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ccgrowth {

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

QVector qvec_zero(int dim) {
  return QVector(static_cast<std::size_t>(dim), Rational(0));
}

QVector qvec_add(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  QVector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

QVector qvec_sub(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  QVector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

QVector qvec_scale(const Rational& c, const QVector& v) {
  QVector out(v);
  for (auto& x : out) x *= c;
  return out;
}

bool qvec_is_zero(const QVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::size_t hash_qvector(const QVector& v) {
  std::size_t h = 0x12345678u + v.size();
  for (const auto& x : v) h = (h * 1099511628211ull) ^ x.hash();
  return h;
}

std::string qvec_str(const QVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

QMatrix QMatrix::from_rows(std::vector<QVector> rows) {
  QMatrix m;
  if (!rows.empty()) {
    m.cols_ = static_cast<int>(rows[0].size());
    for (const auto& r : rows)
      if (static_cast<int>(r.size()) != m.cols_)
        throw std::invalid_argument("ragged row list");
  }
  m.rows_ = std::move(rows);
  return m;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows());
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows()) throw std::invalid_argument("matrix product shape mismatch");
  QMatrix p(rows(), o.cols());
  for (int i = 0; i < rows(); ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols(); ++j) p.at(i, j) += aik * o.at(k, j);
    }
  return p;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  if (rows() != o.rows() || cols_ != o.cols()) throw std::invalid_argument("matrix sum shape mismatch");
  QMatrix s(*this);
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols_; ++j) s.at(i, j) += o.at(i, j);
  return s;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  if (rows() != o.rows() || cols_ != o.cols()) throw std::invalid_argument("matrix diff shape mismatch");
  QMatrix s(*this);
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols_; ++j) s.at(i, j) -= o.at(i, j);
  return s;
}

QVector QMatrix::apply(const QVector& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix apply shape mismatch");
  QVector out = qvec_zero(rows());
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) out[i] += at(i, j) * v[j];
  return out;
}

bool QMatrix::is_identity() const {
  if (rows() != cols_) return false;
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != Rational(i == j ? 1 : 0)) return false;
  return true;
}

std::size_t QMatrix::hash() const {
  std::size_t h = 0x87654321u + static_cast<std::size_t>(rows()) * 31 + cols_;
  for (const auto& r : rows_) h = (h * 1099511628211ull) ^ hash_qvector(r);
  return h;
}

std::string QMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows(); ++i) {
    if (i) os << "; ";
    os << qvec_str(row(i));
  }
  os << "]";
  return os.str();
}

std::vector<int> rref_in_place(QMatrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m.at(i, c).is_zero()) { p = i; break; }
    if (p < 0) continue;
    std::swap(m.row(r), m.row(p));
    Rational inv = Rational(1) / m.at(r, c);
    m.row(r) = qvec_scale(inv, m.row(r));
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Rational f = m.at(i, c);
      m.row(i) = qvec_sub(m.row(i), qvec_scale(f, m.row(r)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int matrix_rank(const QMatrix& m) {
  QMatrix work(m);
  return static_cast<int>(rref_in_place(work).size());
}

int matrix_rank(const std::vector<QVector>& rows) {
  return matrix_rank(QMatrix::from_rows(rows));
}

QMatrix matrix_inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::domain_error("inverse of non-square matrix");
  int n = m.rows();
  QMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Rational(1);
  }
  auto pivots = rref_in_place(aug);
  if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
    throw std::domain_error("matrix is singular");
  QMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

Rational matrix_det(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::domain_error("determinant of non-square matrix");
  QMatrix work(m);
  int n = m.rows();
  Rational det(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (!work.at(i, c).is_zero()) { p = i; break; }
    if (p < 0) return Rational(0);
    if (p != c) {
      std::swap(work.row(c), work.row(p));
      det = -det;
    }
    det *= work.at(c, c);
    Rational inv = Rational(1) / work.at(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (work.at(i, c).is_zero()) continue;
      Rational f = work.at(i, c) * inv;
      work.row(i) = qvec_sub(work.row(i), qvec_scale(f, work.row(c)));
    }
  }
  return det;
}

QMatrix row_space_basis(const QMatrix& m) {
  QMatrix work(m);
  auto pivots = rref_in_place(work);
  std::vector<QVector> rows;
  for (std::size_t i = 0; i < pivots.size(); ++i) rows.push_back(work.row(static_cast<int>(i)));
  auto basis = QMatrix::from_rows(std::move(rows));
  if (basis.rows() == 0) return QMatrix(0, m.cols());
  return basis;
}

QMatrix kernel_basis(const QMatrix& m) {
  QMatrix work(m);
  auto pivots = rref_in_place(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<QVector> rows;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector v = qvec_zero(m.cols());
    v[free] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -work.at(static_cast<int>(r), free);
    rows.push_back(std::move(v));
  }
  if (rows.empty()) return QMatrix(0, m.cols());
  return QMatrix::from_rows(std::move(rows));
}

std::optional<AffineSolution> solve_affine(const QMatrix& a, const QVector& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("solve_affine shape mismatch");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  auto pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  QVector x = qvec_zero(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x[pivots[r]] = aug.at(static_cast<int>(r), a.cols());
  return AffineSolution{std::move(x), kernel_basis(a)};
}

bool in_row_span(const QMatrix& basis_rows, const QVector& v) {
  if (qvec_is_zero(v)) return true;
  if (basis_rows.rows() == 0) return false;
  std::vector<QVector> rows = basis_rows.row_list();
  int base = matrix_rank(rows);
  rows.push_back(v);
  return matrix_rank(rows) == base;
}

} // namespace ccgrowth
