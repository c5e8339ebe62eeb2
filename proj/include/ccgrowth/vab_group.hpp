#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ccgrowth/affine_group.hpp"
#include "ccgrowth/intlattice.hpp"

namespace ccgrowth {

// Normal form (lattice vector, finite coset representative index).
struct VabElement {
  std::vector<std::int64_t> vec;
  int rep = 0;

  friend bool operator==(const VabElement& a, const VabElement& b) = default;
  std::size_t hash() const;
  std::string str() const;
};

// Finitely generated virtually abelian group presented as an extension of
// Z^d by a finite group: multiplication twists by the action of coset
// representatives on the lattice and by a 2-cocycle (nonzero only for
// non-split extensions).
class VabGroup {
public:
  using Element = VabElement;

  static VabGroup sign_flip(int d);
  static VabGroup klein_bottle();
  static VabGroup free_abelian(int d);

  int lattice_rank() const { return d_; }
  int rep_count() const { return static_cast<int>(rep_labels_.size()); }
  const std::string& rep_label(int p) const { return rep_labels_[p]; }
  const std::string& label() const { return label_; }

  Element identity() const { return Element{std::vector<std::int64_t>(d_, 0), 0}; }
  Element mul(const Element& a, const Element& b) const;
  Element inv(const Element& a) const;

  const std::vector<NamedGenerator<Element>>& generators() const { return gens_; }

  int rep_mul(int p, int q) const { return rep_mul_[p][q]; }
  int rep_inv(int p) const { return rep_inv_[p]; }
  const std::vector<std::vector<std::int64_t>>& action(int p) const { return actions_[p]; }
  const std::vector<std::int64_t>& cocycle(int p, int q) const { return cocycle_[p][q]; }

  // Interface used by the growth engine.
  const std::vector<Element>& coset_reps() const { return coset_reps_; }
  std::size_t coset_index(const Element& g) const { return static_cast<std::size_t>(g.rep); }
  ZMatrix action_matrix(const Element& g) const;
  ZVector h_coords(const Element& g) const;
  Element translation_element(const ZVector& coords) const;

private:
  int d_ = 0;
  std::string label_;
  std::vector<std::string> rep_labels_;
  std::vector<std::vector<std::vector<std::int64_t>>> actions_;
  std::vector<std::vector<int>> rep_mul_;
  std::vector<int> rep_inv_;
  std::vector<std::vector<std::vector<std::int64_t>>> cocycle_;
  std::vector<NamedGenerator<Element>> gens_;
  std::vector<Element> coset_reps_;

  void finalize(); // derives rep_inv_/coset_reps_ and validates the tables
};

VabGroup build_sign_flip_group(int d);
VabGroup build_klein_bottle();

} // namespace ccgrowth

template <>
struct std::hash<ccgrowth::VabElement> {
  std::size_t operator()(const ccgrowth::VabElement& g) const { return g.hash(); }
};
