#pragma once

#include <cstddef>

#include "ccgrowth/linalg.hpp"

namespace ccgrowth {

// Affine map x -> A x + b with invertible rational A.  Composition is the
// group law of the affine group; elements are canonical by construction, so
// equality and hashing are structural.
class GroupElement {
public:
  GroupElement() = default;
  GroupElement(QMatrix linear, QVector trans);

  static GroupElement identity_element(int dim);
  static GroupElement translation(QVector v);

  const QMatrix& linear() const { return linear_; }
  const QVector& trans() const { return trans_; }
  int dim() const { return linear_.rows(); }

  bool is_identity() const;
  bool is_translation() const { return linear_.is_identity(); }

  QVector apply(const QVector& x) const;

  friend bool operator==(const GroupElement& a, const GroupElement& b) = default;
  std::size_t hash() const;
  std::string str() const;

private:
  QMatrix linear_;
  QVector trans_;
};

GroupElement operator*(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& g);
GroupElement power(const GroupElement& g, long k);

// Semidirect projection onto the linear part: (A, b) -> (A, 0).
GroupElement project_to_finite(const GroupElement& g);

} // namespace ccgrowth

template <>
struct std::hash<ccgrowth::GroupElement> {
  std::size_t operator()(const ccgrowth::GroupElement& g) const { return g.hash(); }
};
