#include "ccgrowth/affine_group.hpp"

#include <stdexcept>

namespace ccgrowth {

AffineCoxeterGroup AffineCoxeterGroup::build(RootSystemType type, int rank) {
  AffineCoxeterGroup g;
  g.rs_ = RootSystem::build(type, rank);

  g.coroot_cols_ = QMatrix(rank, rank);
  for (int i = 0; i < rank; ++i) {
    QVector cv = g.rs_.coroot(g.rs_.simple_root(i));
    for (int r = 0; r < rank; ++r) g.coroot_cols_.at(r, i) = cv[r];
  }
  g.coroot_cols_inv_ = matrix_inverse(g.coroot_cols_);

  g.gens_.push_back({"s0", g.affine_reflection(g.rs_.highest_root(), BigInt(1))});
  for (int i = 0; i < rank; ++i) {
    QMatrix m = g.rs_.reflection_matrix(g.rs_.simple_root(i));
    g.gens_.push_back({"s" + std::to_string(i + 1),
                       Element(std::move(m), qvec_zero(rank))});
  }
  return g;
}

GroupElement AffineCoxeterGroup::affine_reflection(const Root& alpha,
                                                   const BigInt& level) const {
  QMatrix m = rs_.reflection_matrix(alpha);
  QVector t = qvec_scale(Rational(level), rs_.coroot(alpha));
  return Element(std::move(m), std::move(t));
}

void AffineCoxeterGroup::ensure_finite_part() const {
  std::call_once(memo_->once, [this] {
    auto& elems = memo_->elems;
    auto& index = memo_->index;
    elems.push_back(identity());
    index.emplace(elems[0].linear(), 0);
    std::vector<Element> projected;
    for (const auto& g : gens_) projected.push_back(project_to_finite(g.element));
    for (std::size_t head = 0; head < elems.size(); ++head) {
      Element cur = elems[head];
      for (const auto& s : projected) {
        Element next = cur * s;
        if (index.emplace(next.linear(), elems.size()).second)
          elems.push_back(std::move(next));
      }
    }
  });
}

const std::vector<GroupElement>& AffineCoxeterGroup::finite_part() const {
  ensure_finite_part();
  return memo_->elems;
}

ZVector AffineCoxeterGroup::lattice_coords(const QVector& v) const {
  QVector c = coroot_cols_inv_.apply(v);
  try {
    return qvec_to_zvec(c);
  } catch (const std::domain_error&) {
    throw std::domain_error("vector is not in the translation lattice");
  }
}

QVector AffineCoxeterGroup::from_lattice_coords(const ZVector& coords) const {
  return coroot_cols_.apply(zvec_to_qvec(coords));
}

std::pair<ZVector, GroupElement> AffineCoxeterGroup::semidirect_coords(
    const Element& w) const {
  Element u = project_to_finite(w);
  coset_index(u); // validates that the linear part lies in W0
  return {lattice_coords(w.trans()), std::move(u)};
}

std::size_t AffineCoxeterGroup::coset_index(const Element& g) const {
  ensure_finite_part();
  auto it = memo_->index.find(g.linear());
  if (it == memo_->index.end())
    throw std::invalid_argument("linear part is not in the finite quotient");
  return it->second;
}

ZMatrix AffineCoxeterGroup::action_matrix(const Element& g) const {
  QMatrix m = coroot_cols_inv_ * g.linear() * coroot_cols_;
  ZMatrix out;
  out.reserve(m.rows());
  for (int i = 0; i < m.rows(); ++i) out.push_back(qvec_to_zvec(m.row(i)));
  return out;
}

ZVector AffineCoxeterGroup::h_coords(const Element& g) const {
  if (!g.is_translation())
    throw std::domain_error("h_coords of a non-translation element");
  return lattice_coords(g.trans());
}

GroupElement AffineCoxeterGroup::translation_element(const ZVector& coords) const {
  return Element::translation(from_lattice_coords(coords));
}

AffineCoxeterGroup build_affine_group(RootSystemType type, int rank) {
  return AffineCoxeterGroup::build(type, rank);
}

std::vector<GroupElement> enumerate_finite_part(const AffineCoxeterGroup& g) {
  return g.finite_part();
}

} // namespace ccgrowth
