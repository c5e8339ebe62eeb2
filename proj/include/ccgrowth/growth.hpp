#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ccgrowth/affine_group.hpp"
#include "ccgrowth/errors.hpp"
#include "ccgrowth/intlattice.hpp"

namespace ccgrowth {

inline constexpr std::size_t kDefaultElementBudget = 10'000'000;

// Radius-n ball of the Cayley graph; each element labeled with its exact
// word length over the stored generating set.
template <class E>
struct Ball {
  int radius = 0;
  std::unordered_map<E, int> length;
  std::vector<NamedGenerator<E>> generating_set;

  bool contains(const E& g) const { return length.contains(g); }
  std::size_t size() const { return length.size(); }

  // counts[k] = number of elements with word length <= k (cumulative).
  std::vector<long long> counts() const {
    std::vector<long long> out(static_cast<std::size_t>(radius) + 1, 0);
    for (const auto& [g, len] : length) ++out[len];
    for (int k = 1; k <= radius; ++k) out[k] += out[k - 1];
    return out;
  }
};

// Breadth-first closure from base over the given symmetric generating set.
template <class G>
Ball<typename G::Element> ball_enumerate_from(
    const G& group, const typename G::Element& base,
    const std::vector<NamedGenerator<typename G::Element>>& gens, int radius,
    std::size_t budget = kDefaultElementBudget) {
  using E = typename G::Element;
  if (radius < 0) throw std::invalid_argument("negative ball radius");
  Ball<E> ball;
  ball.radius = radius;
  ball.generating_set = gens;
  ball.length.emplace(base, 0);
  std::vector<E> frontier{base};
  for (int len = 1; len <= radius && !frontier.empty(); ++len) {
    std::vector<E> next;
    for (const auto& cur : frontier)
      for (const auto& s : gens) {
        E g = group.mul(cur, s.element);
        if (ball.length.contains(g)) continue;
        if (ball.length.size() >= budget)
          throw ResourceLimitError(budget, ball.length.size() + 1);
        ball.length.emplace(g, len);
        next.push_back(std::move(g));
      }
    frontier = std::move(next);
  }
  return ball;
}

template <class G>
Ball<typename G::Element> ball_enumerate(
    const G& group, int radius, std::size_t budget = kDefaultElementBudget) {
  return ball_enumerate_from(group, group.identity(), group.generators(),
                             radius, budget);
}

// One coset t_L * representative of the class decomposition.  The
// representative is canonical: its lattice part is reduced modulo L, so
// descriptors of the same class compare equal coset by coset.
template <class E>
struct DescriptorCoset {
  IntLattice lattice;
  E representative;
  std::size_t rep_index; // finite-part index of the representative
  ZVector offset;        // reduced lattice coordinates of the representative
};

// Exact description of a conjugacy class as a finite union of lattice
// cosets, one per finite-part conjugator, duplicates merged.
template <class E>
struct ClassDescriptor {
  E base_element;
  std::vector<DescriptorCoset<E>> cosets;
};

template <class G>
ClassDescriptor<typename G::Element> conjugacy_descriptor(
    const G& group, const typename G::Element& w) {
  using E = typename G::Element;
  const int d = group.lattice_rank();
  ClassDescriptor<E> desc;
  desc.base_element = w;

  for (const E& v : group.coset_reps()) {
    E c = group.mul(group.mul(v, w), group.inv(v));

    // Commutator sublattice [H, c] = image of (I - action of c) on H,
    // generated by the columns (I - M_c) e_j.
    ZMatrix act = group.action_matrix(c);
    ZMatrix gens(static_cast<std::size_t>(d), zvec_zero(d));
    for (int j = 0; j < d; ++j)
      for (int i = 0; i < d; ++i)
        gens[j][i] = BigInt(i == j ? 1 : 0) - act[i][j];
    IntLattice lat = IntLattice::from_generators(d, gens);

    std::size_t rc = group.coset_index(c);
    ZVector y = group.h_coords(group.mul(c, group.inv(group.coset_reps()[rc])));
    ZVector off = lat.reduce(y);
    E canon = group.mul(group.translation_element(zvec_sub(off, y)), c);

    bool dup = false;
    for (const auto& existing : desc.cosets)
      if (existing.rep_index == rc && existing.offset == off &&
          existing.lattice == lat) {
        dup = true;
        break;
      }
    if (!dup) desc.cosets.push_back({std::move(lat), std::move(canon), rc, std::move(off)});
  }

  std::sort(desc.cosets.begin(), desc.cosets.end(),
            [](const DescriptorCoset<E>& a, const DescriptorCoset<E>& b) {
              if (a.rep_index != b.rep_index) return a.rep_index < b.rep_index;
              if (a.lattice.basis() != b.lattice.basis())
                return a.lattice.basis() < b.lattice.basis();
              return a.offset < b.offset;
            });
  return desc;
}

template <class G>
bool class_contains(const G& group,
                    const ClassDescriptor<typename G::Element>& desc,
                    const typename G::Element& g) {
  for (const auto& coset : desc.cosets) {
    if (group.coset_index(g) != coset.rep_index) continue;
    ZVector y = group.h_coords(group.mul(g, group.inv(coset.representative)));
    if (coset.lattice.contains(y)) return true;
  }
  return false;
}

// Growth series of a subset: cumulative counts c(0..N) plus a label.
struct GrowthSeries {
  std::string label;
  std::vector<long long> counts;
};

template <class G>
GrowthSeries class_growth_series(const G& group, const typename G::Element& w,
                                 int n_max,
                                 std::size_t budget = kDefaultElementBudget) {
  auto desc = conjugacy_descriptor(group, w);
  auto ball = ball_enumerate(group, n_max, budget);
  std::vector<long long> counts(static_cast<std::size_t>(n_max) + 1, 0);
  for (const auto& [g, len] : ball.length)
    if (class_contains(group, desc, g)) ++counts[len];
  for (int k = 1; k <= n_max; ++k) counts[k] += counts[k - 1];
  return GrowthSeries{group.label() + " class growth", std::move(counts)};
}

// {v w v^-1 : v in B(conjugator_radius)} intersected with B(n): a lower
// bound for the class, exact once conjugator_radius is large enough.
template <class G>
std::unordered_set<typename G::Element> brute_force_class(
    const G& group, const typename G::Element& w, int n, int conjugator_radius,
    std::size_t budget = kDefaultElementBudget) {
  auto conjugators = ball_enumerate(group, conjugator_radius, budget);
  auto ball = ball_enumerate(group, n, budget);
  std::unordered_set<typename G::Element> out;
  for (const auto& [v, len] : conjugators.length) {
    auto c = group.mul(group.mul(v, w), group.inv(v));
    if (ball.contains(c)) out.insert(std::move(c));
  }
  return out;
}

// Growth degree of the class: rank of the largest coset lattice.
template <class E>
int exact_degree(const ClassDescriptor<E>& desc) {
  int deg = 0;
  for (const auto& c : desc.cosets) deg = std::max(deg, c.lattice.rank());
  return deg;
}

// Two-point log-ratio estimate log2(c[N]/c[N/2]) as a rational rounded to
// 10^-6; errors on short or degenerate series.
Rational estimate_degree(const GrowthSeries& series);

// |B(n)| in Z^r with the standard generators, by the closed form
// sum_k 2^k C(r,k) C(n,k).
BigInt zr_ball_count(int r, int n);

std::string series_to_csv(const std::vector<long long>& counts);

} // namespace ccgrowth
