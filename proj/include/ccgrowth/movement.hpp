#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

#include "ccgrowth/affine_group.hpp"
#include "ccgrowth/group_element.hpp"

namespace ccgrowth {

// Affine subspace rep + rowspan(direction), possibly empty.  The direction is
// stored as a reduced row-echelon basis, so equality of subspaces is
// decidable structurally.
class AffineSubspace {
public:
  AffineSubspace(QMatrix direction_rows, QVector representative);
  static AffineSubspace empty_space(int ambient_dim);

  bool is_empty() const { return empty_; }
  int ambient_dim() const { return ambient_; }
  const QMatrix& direction() const { return direction_; }
  const QVector& representative() const { return rep_; }
  int direction_rank() const { return direction_.rows(); }

  bool contains(const QVector& x) const;
  // Affine subspaces through the origin are exactly the linear ones.
  bool is_linear() const;
  // Row basis of span(direction united with representative).
  QMatrix linear_span() const;

  friend bool operator==(const AffineSubspace& a, const AffineSubspace& b);

private:
  AffineSubspace() = default;
  bool empty_ = true;
  int ambient_ = 0;
  QMatrix direction_;
  QVector rep_;
};

// Mov(w) = {w(x) - x : x}, an affine subspace b + Im(A - I); never empty.
AffineSubspace move_set(const GroupElement& w);

// Fix(w) = {x : w(x) = x}; empty iff w is not elliptic.
AffineSubspace fix_set(const GroupElement& w);

bool is_elliptic(const GroupElement& w);

// Minimal number of linearly independent roots spanning a subspace that
// contains span(direction united with representative); error on empty input.
int root_dimension(const RootSystem& rs, const AffineSubspace& target);

struct DimensionProfile {
  int dim;               // root dimension of Mov(w)
  int e;                 // root dimension of Mov of the elliptic part
  int d;                 // dim - e, the translation contribution
  int reflection_length; // 2d + e
};

DimensionProfile dimension_profile(const AffineCoxeterGroup& g, const GroupElement& w);

// Splits w = t * u with t a lattice translation and u fixing the origin.
std::pair<GroupElement, GroupElement> translation_elliptic_factorisation(
    const AffineCoxeterGroup& g, const GroupElement& w);

// Witness reflection r_{alpha, level} used in a minimal factorisation.
struct ReflectionWitness {
  Root root;
  BigInt level;
};

// Shortest factorisation of group elements into affine reflections
// r_{alpha, j} with alpha positive and |j| <= level_bound, found by a
// meet-in-the-middle search over products of at most dim reflections per
// side.  Lengths beyond 2*dim or levels beyond the bound raise
// OracleNotFoundError.
class ReflectionLengthOracle {
public:
  ReflectionLengthOracle(const AffineCoxeterGroup& g, int level_bound,
                         std::size_t element_budget = 5'000'000);

  int length(const GroupElement& w) const;
  std::vector<ReflectionWitness> witness(const GroupElement& w) const;

  std::size_t table_size() const { return table_.size(); }

private:
  struct Entry {
    int len;
    GroupElement inverse;
    GroupElement parent; // previous product, identity at len 0
    int refl = -1;       // index into refls_ of the last factor
  };

  const AffineCoxeterGroup& group_;
  std::vector<ReflectionWitness> refls_;
  std::vector<GroupElement> refl_elems_;
  std::unordered_map<GroupElement, Entry> table_;
  mutable std::unordered_map<GroupElement, int> cache_;

  // Best split w = g * h over table entries; returns (length, g) or len < 0.
  std::pair<int, const GroupElement*> best_split(const GroupElement& w) const;
};

int reflection_length_oracle(const AffineCoxeterGroup& g, const GroupElement& w,
                             int level_bound);

} // namespace ccgrowth
