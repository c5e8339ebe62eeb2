#include "ccgrowth/intlattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ccgrowth {

ZVector zvec_zero(int dim) { return ZVector(static_cast<std::size_t>(dim), BigInt(0)); }

ZVector zvec_add(const ZVector& a, const ZVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  ZVector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

ZVector zvec_sub(const ZVector& a, const ZVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  ZVector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

bool zvec_is_zero(const ZVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

std::size_t hash_zvector(const ZVector& v) {
  std::size_t h = 0xabcdef01u + v.size();
  for (const auto& x : v) h = (h * 1099511628211ull) ^ hash_bigint(x);
  return h;
}

QVector zvec_to_qvec(const ZVector& v) {
  QVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

ZVector qvec_to_zvec(const QVector& v) {
  ZVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.to_integer());
  return out;
}

ZMatrix zmat_identity(int n) {
  ZMatrix m(static_cast<std::size_t>(n), zvec_zero(n));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

ZVector zmat_apply(const ZMatrix& m, const ZVector& v) {
  ZVector out = zvec_zero(static_cast<int>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != v.size()) throw std::invalid_argument("matrix apply shape mismatch");
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  }
  return out;
}

ZMatrix zmat_mul(const ZMatrix& a, const ZMatrix& b) {
  std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  ZMatrix out(n, zvec_zero(static_cast<int>(m)));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw std::invalid_argument("matrix product shape mismatch");
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  }
  return out;
}

QMatrix zmat_to_qmat(const ZMatrix& m) {
  std::vector<QVector> rows;
  rows.reserve(m.size());
  for (const auto& r : m) rows.push_back(zvec_to_qvec(r));
  return QMatrix::from_rows(std::move(rows));
}

namespace {

// Floor quotient, so v - q*p has entry in [0, p) for p > 0.
BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void row_sub_mul(ZVector& target, const ZVector& src, const BigInt& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < target.size(); ++j) target[j] -= q * src[j];
}

} // namespace

IntLattice IntLattice::from_generators(int ambient_dim, const ZMatrix& generators) {
  for (const auto& g : generators)
    if (static_cast<int>(g.size()) != ambient_dim)
      throw std::invalid_argument("generator dimension mismatch");

  ZMatrix work(generators);
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int c = 0; c < ambient_dim && r < work.size(); ++c) {
    // Eliminate below row r in column c until at most one nonzero remains.
    while (true) {
      std::size_t best = work.size();
      for (std::size_t i = r; i < work.size(); ++i) {
        if (work[i][c] == 0) continue;
        if (best == work.size() ||
            cmp(abs(work[i][c]), abs(work[best][c])) < 0)
          best = i;
      }
      if (best == work.size()) break;
      std::swap(work[r], work[best]);
      bool others = false;
      for (std::size_t i = r + 1; i < work.size(); ++i) {
        if (work[i][c] == 0) continue;
        row_sub_mul(work[i], work[r], floor_div(work[i][c], work[r][c]));
        if (work[i][c] != 0) others = true;
      }
      if (!others) break;
    }
    if (r < work.size() && work[r][c] != 0) {
      if (work[r][c] < 0)
        for (auto& x : work[r]) x = -x;
      // Reduce entries above the pivot into [0, pivot).
      for (std::size_t i = 0; i < r; ++i)
        row_sub_mul(work[i], work[r], floor_div(work[i][c], work[r][c]));
      pivots.push_back(c);
      ++r;
    }
  }

  IntLattice out;
  out.ambient_ = ambient_dim;
  out.basis_.assign(work.begin(), work.begin() + static_cast<long>(r));
  out.pivot_col_ = std::move(pivots);
  return out;
}

IntLattice IntLattice::zero_lattice(int ambient_dim) {
  return from_generators(ambient_dim, {});
}

IntLattice IntLattice::full_lattice(int ambient_dim) {
  return from_generators(ambient_dim, zmat_identity(ambient_dim));
}

bool IntLattice::contains(const ZVector& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("vector dimension mismatch");
  ZVector rem(v);
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    int c = pivot_col_[r];
    if (rem[c] == 0) continue;
    if (rem[c] % basis_[r][c] != 0) return false;
    row_sub_mul(rem, basis_[r], rem[c] / basis_[r][c]);
  }
  return zvec_is_zero(rem);
}

ZVector IntLattice::reduce(const ZVector& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("vector dimension mismatch");
  ZVector rem(v);
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    int c = pivot_col_[r];
    row_sub_mul(rem, basis_[r], floor_div(rem[c], basis_[r][c]));
  }
  return rem;
}

bool IntLattice::is_sublattice_of(const IntLattice& other) const {
  if (ambient_ != other.ambient_) return false;
  for (const auto& b : basis_)
    if (!other.contains(b)) return false;
  return true;
}

std::size_t IntLattice::hash() const {
  std::size_t h = 0x5ca1ab1eu + static_cast<std::size_t>(ambient_);
  for (const auto& b : basis_) h = (h * 1099511628211ull) ^ hash_zvector(b);
  return h;
}

std::string IntLattice::str() const {
  std::ostringstream os;
  os << "lattice[";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) os << "; ";
    os << "(";
    for (std::size_t j = 0; j < basis_[i].size(); ++j) {
      if (j) os << ", ";
      os << basis_[i][j].get_str();
    }
    os << ")";
  }
  os << "]";
  return os.str();
}

IntLattice hermite_normal_form(int ambient_dim, const ZMatrix& generators) {
  return IntLattice::from_generators(ambient_dim, generators);
}

bool lattice_contains(const IntLattice& lattice, const ZVector& v) {
  return lattice.contains(v);
}

std::vector<AdaptedGenerator> adapted_basis(const IntLattice& lattice) {
  const int d = lattice.ambient_dim();
  const int r = lattice.rank();
  if (r == 0) throw std::invalid_argument("adapted basis of the trivial lattice");

  // Diagonalise the basis by row and column operations, mirroring every
  // column operation on `coord` so that rows of `coord` stay a basis of Z^d
  // expressed in the original coordinates.
  ZMatrix work = lattice.basis();
  ZMatrix coord = zmat_identity(d);

  auto swap_cols = [&](int c1, int c2) {
    for (auto& row : work) std::swap(row[c1], row[c2]);
    std::swap(coord[c1], coord[c2]);
  };
  // col_dst -= q * col_src  <=>  row_src(coord) += q * row_dst(coord)
  auto col_sub_mul = [&](int dst, int src, const BigInt& q) {
    if (q == 0) return;
    for (auto& row : work) row[dst] -= q * row[src];
    for (std::size_t j = 0; j < coord[src].size(); ++j)
      coord[src][j] += q * coord[dst][j];
  };

  for (int t = 0; t < r; ++t) {
  restart:
    // Bring a nonzero entry of minimal absolute value to (t, t), positive.
    int pi = -1, pj = -1;
    for (int i = t; i < r; ++i)
      for (int j = t; j < d; ++j) {
        if (work[i][j] == 0) continue;
        if (pi < 0 || cmp(abs(work[i][j]), abs(work[pi][pj])) < 0) { pi = i; pj = j; }
      }
    if (pi < 0) throw std::logic_error("adapted_basis: rank drop in diagonalisation");
    std::swap(work[t], work[pi]);
    if (pj != t) swap_cols(t, pj);
    if (work[t][t] < 0)
      for (auto& x : work[t]) x = -x;

    // Clear column t below and row t right of the pivot.  Any nonzero
    // remainder is strictly smaller than the pivot, so swapping it in and
    // repeating terminates.
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = t + 1; i < r; ++i) {
        if (work[i][t] == 0) continue;
        row_sub_mul(work[i], work[t], floor_div(work[i][t], work[t][t]));
        if (work[i][t] != 0) { std::swap(work[t], work[i]); dirty = true; }
      }
      for (int j = t + 1; j < d; ++j) {
        if (work[t][j] == 0) continue;
        col_sub_mul(j, t, floor_div(work[t][j], work[t][t]));
        if (work[t][j] != 0) { swap_cols(t, j); dirty = true; }
      }
    }

    // Pivot must divide every remaining entry; fold a bad row into row t and
    // redo, which strictly shrinks the pivot gcd.
    for (int i = t + 1; i < r; ++i)
      for (int j = t + 1; j < d; ++j)
        if (work[i][j] % work[t][t] != 0) {
          for (std::size_t c = 0; c < work[i].size(); ++c) work[t][c] += work[i][c];
          goto restart;
        }
  }

  std::vector<AdaptedGenerator> out;
  for (int j = 0; j < r; ++j) out.push_back({coord[j], work[j][j]});
  return out;
}

} // namespace ccgrowth
