#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "ccgrowth/group_element.hpp"
#include "ccgrowth/intlattice.hpp"
#include "ccgrowth/root_system.hpp"

namespace ccgrowth {

template <class E>
struct NamedGenerator {
  std::string name;
  E element;
};

// Affine Coxeter group W attached to a crystallographic root system: the
// finite reflection group W0 extended by the affine reflection in the
// highest-root hyperplane at level 1.  Elements act on the simple-root
// coordinate space; translations form the coroot lattice.
class AffineCoxeterGroup {
public:
  using Element = GroupElement;

  static AffineCoxeterGroup build(RootSystemType type, int rank);

  const RootSystem& root_system() const { return rs_; }
  int rank() const { return rs_.rank(); }
  int dim() const { return rs_.rank(); }
  std::string label() const { return "affine:" + rs_.label(); }

  // s0 is the affine reflection, s1..sn the simple reflections.
  const std::vector<NamedGenerator<Element>>& generators() const { return gens_; }

  Element identity() const { return Element::identity_element(dim()); }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const { return inverse(a); }

  // Reflection r_{alpha,j}: x -> x - (<x,alpha> - j) alpha^vee.
  Element affine_reflection(const Root& alpha, const BigInt& level) const;

  // Memoised element list of the finite quotient W0, closed under the simple
  // reflections; identity first, discovery order after that.
  const std::vector<Element>& finite_part() const;
  std::size_t finite_order() const { return finite_part().size(); }

  // Coordinates in the simple-coroot basis; error if v is not in the lattice.
  ZVector lattice_coords(const QVector& v) const;
  QVector from_lattice_coords(const ZVector& coords) const;
  const QMatrix& coroot_matrix() const { return coroot_cols_; }

  // Splits w as (lattice coordinates of the translation part, finite part),
  // i.e. w = t_b * u with u in the stored finite_part list.
  std::pair<ZVector, Element> semidirect_coords(const Element& w) const;

  // Interface used by the growth engine.
  int lattice_rank() const { return dim(); }
  const std::vector<Element>& coset_reps() const { return finite_part(); }
  std::size_t coset_index(const Element& g) const;
  ZMatrix action_matrix(const Element& g) const;
  ZVector h_coords(const Element& g) const;
  Element translation_element(const ZVector& coords) const;

private:
  RootSystem rs_;
  std::vector<NamedGenerator<Element>> gens_;
  QMatrix coroot_cols_;     // columns are the simple coroots
  QMatrix coroot_cols_inv_;

  struct Memo {
    std::once_flag once;
    std::vector<Element> elems;
    std::unordered_map<QMatrix, std::size_t> index;
  };
  std::unique_ptr<Memo> memo_ = std::make_unique<Memo>();

  void ensure_finite_part() const;
};

AffineCoxeterGroup build_affine_group(RootSystemType type, int rank);

// Enumerates the finite quotient W0 of the group (closure of the projected
// generators under multiplication).
std::vector<GroupElement> enumerate_finite_part(const AffineCoxeterGroup& g);

} // namespace ccgrowth
