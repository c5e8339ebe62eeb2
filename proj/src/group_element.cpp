#include "ccgrowth/group_element.hpp"

#include <stdexcept>

namespace ccgrowth {

GroupElement::GroupElement(QMatrix linear, QVector trans)
    : linear_(std::move(linear)), trans_(std::move(trans)) {
  if (linear_.rows() != linear_.cols() ||
      linear_.rows() != static_cast<int>(trans_.size()))
    throw std::invalid_argument("affine map shape mismatch");
}

GroupElement GroupElement::identity_element(int dim) {
  return GroupElement(QMatrix::identity(dim), qvec_zero(dim));
}

GroupElement GroupElement::translation(QVector v) {
  int d = static_cast<int>(v.size());
  return GroupElement(QMatrix::identity(d), std::move(v));
}

bool GroupElement::is_identity() const {
  return linear_.is_identity() && qvec_is_zero(trans_);
}

QVector GroupElement::apply(const QVector& x) const {
  return qvec_add(linear_.apply(x), trans_);
}

std::size_t GroupElement::hash() const {
  return linear_.hash() * 1099511628211ull ^ hash_qvector(trans_);
}

std::string GroupElement::str() const {
  return "{A=" + linear_.str() + ", b=" + qvec_str(trans_) + "}";
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  // (A, s)(B, t): x -> A(Bx + t) + s.
  return GroupElement(a.linear() * b.linear(),
                      qvec_add(a.linear().apply(b.trans()), a.trans()));
}

GroupElement inverse(const GroupElement& g) {
  QMatrix ainv = matrix_inverse(g.linear());
  return GroupElement(ainv, qvec_scale(Rational(-1), ainv.apply(g.trans())));
}

GroupElement power(const GroupElement& g, long k) {
  GroupElement base = k < 0 ? inverse(g) : g;
  GroupElement acc = GroupElement::identity_element(g.dim());
  for (long i = 0, n = k < 0 ? -k : k; i < n; ++i) acc = acc * base;
  return acc;
}

GroupElement project_to_finite(const GroupElement& g) {
  return GroupElement(g.linear(), qvec_zero(g.dim()));
}

} // namespace ccgrowth
