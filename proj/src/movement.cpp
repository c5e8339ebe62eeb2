#include "ccgrowth/movement.hpp"

#include <functional>
#include <stdexcept>

#include "ccgrowth/errors.hpp"

namespace ccgrowth {

AffineSubspace::AffineSubspace(QMatrix direction_rows, QVector representative)
    : empty_(false),
      ambient_(static_cast<int>(representative.size())),
      direction_(row_space_basis(direction_rows)),
      rep_(std::move(representative)) {}

AffineSubspace AffineSubspace::empty_space(int ambient_dim) {
  AffineSubspace s;
  s.ambient_ = ambient_dim;
  return s;
}

bool AffineSubspace::contains(const QVector& x) const {
  if (empty_) return false;
  return in_row_span(direction_, qvec_sub(x, rep_));
}

bool AffineSubspace::is_linear() const {
  return !empty_ && in_row_span(direction_, rep_);
}

QMatrix AffineSubspace::linear_span() const {
  if (empty_) throw std::domain_error("linear span of empty subspace");
  std::vector<QVector> rows = direction_.row_list();
  rows.push_back(rep_);
  return row_space_basis(QMatrix::from_rows(std::move(rows)));
}

bool operator==(const AffineSubspace& a, const AffineSubspace& b) {
  if (a.empty_ || b.empty_) return a.empty_ == b.empty_ && a.ambient_ == b.ambient_;
  return a.direction_ == b.direction_ && a.contains(b.rep_);
}

AffineSubspace move_set(const GroupElement& w) {
  int n = w.dim();
  QMatrix shifted = w.linear() - QMatrix::identity(n);
  // Column space of A - I as rows.
  return AffineSubspace(shifted.transpose(), w.trans());
}

AffineSubspace fix_set(const GroupElement& w) {
  int n = w.dim();
  QMatrix shifted = w.linear() - QMatrix::identity(n);
  auto sol = solve_affine(shifted, qvec_scale(Rational(-1), w.trans()));
  if (!sol) return AffineSubspace::empty_space(n);
  return AffineSubspace(sol->kernel, sol->particular);
}

bool is_elliptic(const GroupElement& w) { return !fix_set(w).is_empty(); }

int root_dimension(const RootSystem& rs, const AffineSubspace& target) {
  if (target.is_empty())
    throw std::invalid_argument("root dimension of empty subspace");
  QMatrix span = target.linear_span();
  const int m = span.rows();
  const int n = rs.rank();
  const auto& pos = rs.positive_roots();

  std::vector<int> idx;
  std::function<bool(int, int)> dfs = [&](int k, int start) -> bool {
    if (static_cast<int>(idx.size()) == k) {
      std::vector<QVector> rows;
      rows.reserve(k + m);
      for (int i : idx) rows.push_back(rs.root_vector(pos[i]));
      if (matrix_rank(rows) != k) return false;
      for (int r = 0; r < m; ++r) rows.push_back(span.row(r));
      return matrix_rank(rows) == k;
    }
    for (int i = start; i < static_cast<int>(pos.size()); ++i) {
      idx.push_back(i);
      if (dfs(k, i + 1)) return true;
      idx.pop_back();
    }
    return false;
  };

  for (int k = m; k <= n; ++k) {
    idx.clear();
    if (dfs(k, 0)) return k;
  }
  throw std::logic_error("no spanning root subset found");
}

DimensionProfile dimension_profile(const AffineCoxeterGroup& g, const GroupElement& w) {
  const RootSystem& rs = g.root_system();
  int dim = root_dimension(rs, move_set(w));
  int e = root_dimension(rs, move_set(project_to_finite(w)));
  DimensionProfile p;
  p.dim = dim;
  p.e = e;
  p.d = dim - e;
  p.reflection_length = 2 * p.d + p.e;
  return p;
}

std::pair<GroupElement, GroupElement> translation_elliptic_factorisation(
    const AffineCoxeterGroup& g, const GroupElement& w) {
  auto [coords, u] = g.semidirect_coords(w);
  return {g.translation_element(coords), u};
}

ReflectionLengthOracle::ReflectionLengthOracle(const AffineCoxeterGroup& g,
                                               int level_bound,
                                               std::size_t element_budget)
    : group_(g) {
  for (const auto& alpha : g.root_system().positive_roots())
    for (long j = -level_bound; j <= level_bound; ++j) {
      refls_.push_back({alpha, BigInt(j)});
      refl_elems_.push_back(g.affine_reflection(alpha, BigInt(j)));
    }

  GroupElement id = g.identity();
  table_.emplace(id, Entry{0, id, id, -1});
  std::vector<GroupElement> frontier{id};
  const int half_depth = g.dim();
  for (int len = 1; len <= half_depth; ++len) {
    std::vector<GroupElement> next_frontier;
    for (const auto& cur : frontier) {
      for (std::size_t r = 0; r < refl_elems_.size(); ++r) {
        GroupElement next = cur * refl_elems_[r];
        if (table_.contains(next)) continue;
        if (table_.size() >= element_budget)
          throw ResourceLimitError(element_budget, table_.size() + 1);
        table_.emplace(next,
                       Entry{len, inverse(next), cur, static_cast<int>(r)});
        next_frontier.push_back(std::move(next));
      }
    }
    frontier = std::move(next_frontier);
  }
}

std::pair<int, const GroupElement*> ReflectionLengthOracle::best_split(
    const GroupElement& w) const {
  int best = -1;
  const GroupElement* best_left = nullptr;
  for (const auto& [g, entry] : table_) {
    GroupElement rest = entry.inverse * w;
    auto it = table_.find(rest);
    if (it == table_.end()) continue;
    int total = entry.len + it->second.len;
    if (best < 0 || total < best) {
      best = total;
      best_left = &g;
    }
  }
  return {best, best_left};
}

int ReflectionLengthOracle::length(const GroupElement& w) const {
  auto it = cache_.find(w);
  if (it != cache_.end()) return it->second;
  auto [best, left] = best_split(w);
  if (best < 0)
    throw OracleNotFoundError(
        "no reflection factorisation within the level bound");
  cache_.emplace(w, best);
  return best;
}

std::vector<ReflectionWitness> ReflectionLengthOracle::witness(
    const GroupElement& w) const {
  auto [best, left] = best_split(w);
  if (best < 0)
    throw OracleNotFoundError(
        "no reflection factorisation within the level bound");
  auto chain = [&](const GroupElement& g) {
    std::vector<ReflectionWitness> out;
    GroupElement cur = g;
    while (true) {
      const Entry& e = table_.at(cur);
      if (e.refl < 0) break;
      out.insert(out.begin(), refls_[e.refl]);
      cur = e.parent;
    }
    return out;
  };
  std::vector<ReflectionWitness> out = chain(*left);
  GroupElement rest = table_.at(*left).inverse * w;
  auto right = chain(rest);
  out.insert(out.end(), right.begin(), right.end());
  cache_.emplace(w, best);
  return out;
}

int reflection_length_oracle(const AffineCoxeterGroup& g, const GroupElement& w,
                             int level_bound) {
  ReflectionLengthOracle oracle(g, level_bound);
  return oracle.length(w);
}

} // namespace ccgrowth
