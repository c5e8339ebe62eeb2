#pragma once

#include <cstddef>
#include <vector>

#include "ccgrowth/linalg.hpp"
#include "ccgrowth/rational.hpp"

namespace ccgrowth {

using ZVector = std::vector<BigInt>;
using ZMatrix = std::vector<ZVector>;

ZVector zvec_zero(int dim);
ZVector zvec_add(const ZVector& a, const ZVector& b);
ZVector zvec_sub(const ZVector& a, const ZVector& b);
bool zvec_is_zero(const ZVector& v);
std::size_t hash_zvector(const ZVector& v);
QVector zvec_to_qvec(const ZVector& v);
// Exact conversion; error if any entry is non-integral.
ZVector qvec_to_zvec(const QVector& v);
ZMatrix zmat_identity(int n);
ZVector zmat_apply(const ZMatrix& m, const ZVector& v);
ZMatrix zmat_mul(const ZMatrix& a, const ZMatrix& b);
QMatrix zmat_to_qmat(const ZMatrix& m);

// Subgroup of Z^d in canonical Hermite normal form: row echelon, positive
// pivots, entries above each pivot reduced into [0, pivot).  Two lattices are
// equal iff their stored bases are identical.
class IntLattice {
public:
  IntLattice() = default;

  static IntLattice from_generators(int ambient_dim, const ZMatrix& generators);
  static IntLattice zero_lattice(int ambient_dim);
  static IntLattice full_lattice(int ambient_dim);

  int ambient_dim() const { return ambient_; }
  int rank() const { return static_cast<int>(basis_.size()); }
  const ZMatrix& basis() const { return basis_; }
  const std::vector<int>& pivot_columns() const { return pivot_col_; }

  bool contains(const ZVector& v) const;
  // Canonical coset representative of v + L: pivot coordinates reduced by
  // floor division.  reduce(v) == reduce(w) iff v - w lies in the lattice.
  ZVector reduce(const ZVector& v) const;
  bool is_sublattice_of(const IntLattice& other) const;

  friend bool operator==(const IntLattice& a, const IntLattice& b) = default;
  std::size_t hash() const;
  std::string str() const;

private:
  int ambient_ = 0;
  ZMatrix basis_;
  std::vector<int> pivot_col_;
};

// Canonical basis of the subgroup generated by the rows.
IntLattice hermite_normal_form(int ambient_dim, const ZMatrix& generators);

bool lattice_contains(const IntLattice& lattice, const ZVector& v);

// Pairs (b_j, lambda_j), one per basis row, such that {lambda_j b_j} is a
// basis of the lattice and the b_j extend to a basis of Z^d (Smith normal
// form of the basis matrix).  Error on the trivial lattice.
struct AdaptedGenerator {
  ZVector direction;  // primitive vector b_j
  BigInt factor;      // lambda_j > 0
};
std::vector<AdaptedGenerator> adapted_basis(const IntLattice& lattice);

} // namespace ccgrowth

template <>
struct std::hash<ccgrowth::IntLattice> {
  std::size_t operator()(const ccgrowth::IntLattice& l) const { return l.hash(); }
};
