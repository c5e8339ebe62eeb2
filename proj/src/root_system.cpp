#include "ccgrowth/root_system.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ccgrowth {

char root_system_letter(RootSystemType t) {
  switch (t) {
    case RootSystemType::A: return 'A';
    case RootSystemType::B: return 'B';
    case RootSystemType::C: return 'C';
    case RootSystemType::D: return 'D';
    case RootSystemType::G: return 'G';
  }
  throw std::logic_error("bad root system type");
}

namespace {

QMatrix gram_for(RootSystemType type, int rank) {
  auto chain = [](int n) {
    QMatrix g(n, n);
    for (int i = 0; i < n; ++i) {
      g.at(i, i) = Rational(2);
      if (i + 1 < n) {
        g.at(i, i + 1) = Rational(-1);
        g.at(i + 1, i) = Rational(-1);
      }
    }
    return g;
  };
  switch (type) {
    case RootSystemType::A: {
      if (rank < 1) throw std::invalid_argument("type A requires rank >= 1");
      return chain(rank);
    }
    case RootSystemType::B: {
      if (rank < 2) throw std::invalid_argument("type B requires rank >= 2");
      QMatrix g = chain(rank);
      g.at(rank - 1, rank - 1) = Rational(1); // last simple root is short
      return g;
    }
    case RootSystemType::C: {
      if (rank < 2) throw std::invalid_argument("type C requires rank >= 2");
      QMatrix g = chain(rank);
      g.at(rank - 1, rank - 1) = Rational(4); // last simple root is long
      g.at(rank - 2, rank - 1) = Rational(-2);
      g.at(rank - 1, rank - 2) = Rational(-2);
      return g;
    }
    case RootSystemType::D: {
      if (rank < 4) throw std::invalid_argument("type D requires rank >= 4");
      QMatrix g(rank, rank);
      for (int i = 0; i < rank; ++i) g.at(i, i) = Rational(2);
      for (int i = 0; i + 1 < rank - 1; ++i) {
        g.at(i, i + 1) = Rational(-1);
        g.at(i + 1, i) = Rational(-1);
      }
      g.at(rank - 3, rank - 1) = Rational(-1); // fork at the third-to-last node
      g.at(rank - 1, rank - 3) = Rational(-1);
      return g;
    }
    case RootSystemType::G: {
      if (rank != 2) throw std::invalid_argument("type G requires rank 2");
      QMatrix g(2, 2);
      g.at(0, 0) = Rational(2);
      g.at(0, 1) = Rational(-3);
      g.at(1, 0) = Rational(-3);
      g.at(1, 1) = Rational(6);
      return g;
    }
  }
  throw std::invalid_argument("unsupported root system type");
}

std::size_t expected_positive_count(RootSystemType type, int n) {
  switch (type) {
    case RootSystemType::A: return static_cast<std::size_t>(n) * (n + 1) / 2;
    case RootSystemType::B: return static_cast<std::size_t>(n) * n;
    case RootSystemType::C: return static_cast<std::size_t>(n) * n;
    case RootSystemType::D: return static_cast<std::size_t>(n) * (n - 1);
    case RootSystemType::G: return 6;
  }
  return 0;
}

} // namespace

RootSystem RootSystem::build(RootSystemType type, int rank) {
  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;
  rs.gram_ = gram_for(type, rank);

  // Close the simple roots under simple reflections.  Everything stays in
  // integer simple-root coordinates via Cartan integers.
  std::set<std::vector<long>> seen;
  std::vector<std::vector<long>> queue;
  for (int i = 0; i < rank; ++i) {
    std::vector<long> e(rank, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  const std::size_t cap = 4096;
  while (!queue.empty()) {
    auto beta = queue.back();
    queue.pop_back();
    for (int i = 0; i < rank; ++i) {
      Root b{beta};
      std::vector<long> e(rank, 0);
      e[i] = 1;
      long c = rs.cartan_integer(b, Root{e});
      auto gamma = beta;
      gamma[i] -= c;
      if (seen.insert(gamma).second) {
        if (seen.size() > cap) throw std::logic_error("root closure does not terminate");
        queue.push_back(gamma);
      }
    }
  }

  for (const auto& v : seen) {
    bool nonneg = std::all_of(v.begin(), v.end(), [](long x) { return x >= 0; });
    if (nonneg) rs.positive_.push_back(Root{v});
  }
  std::sort(rs.positive_.begin(), rs.positive_.end());
  if (rs.positive_.size() != expected_positive_count(type, rank))
    throw std::logic_error("positive root count mismatch for " + rs.label());

  rs.simple_index_.assign(rank, -1);
  for (std::size_t k = 0; k < rs.positive_.size(); ++k) {
    long total = 0, nonzero = -1;
    for (int i = 0; i < rank; ++i) {
      total += rs.positive_[k].coeffs[i];
      if (rs.positive_[k].coeffs[i] != 0) nonzero = i;
    }
    if (total == 1 && nonzero >= 0) rs.simple_index_[nonzero] = static_cast<int>(k);
  }

  for (std::size_t k = 0; k < rs.positive_.size(); ++k) {
    bool dominates = true;
    for (const auto& other : rs.positive_) {
      for (int i = 0; i < rank; ++i)
        if (rs.positive_[k].coeffs[i] < other.coeffs[i]) { dominates = false; break; }
      if (!dominates) break;
    }
    if (dominates) { rs.highest_index_ = static_cast<int>(k); break; }
  }
  if (rs.highest_index_ < 0) throw std::logic_error("no highest root found");
  return rs;
}

RootSystem RootSystem::from_raw(QMatrix gram, std::vector<Root> positive) {
  RootSystem rs;
  rs.rank_ = gram.rows();
  rs.gram_ = std::move(gram);
  rs.positive_ = std::move(positive);
  rs.simple_index_.assign(rs.rank_, -1);
  rs.highest_index_ = rs.positive_.empty() ? -1 : 0;
  return rs;
}

std::string RootSystem::label() const {
  return std::string(1, root_system_letter(type_)) + std::to_string(rank_);
}

QVector RootSystem::root_vector(const Root& r) const {
  QVector v = qvec_zero(rank_);
  for (int i = 0; i < rank_ && i < static_cast<int>(r.coeffs.size()); ++i)
    v[i] = Rational(r.coeffs[i]);
  return v;
}

Rational RootSystem::inner(const QVector& a, const QVector& b) const {
  Rational s(0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) {
      if (a[i].is_zero() || b[j].is_zero()) continue;
      s += a[i] * gram_.at(i, j) * b[j];
    }
  return s;
}

Rational RootSystem::norm_sq(const Root& r) const {
  QVector v = root_vector(r);
  return inner(v, v);
}

long RootSystem::cartan_integer(const Root& beta, const Root& alpha) const {
  Rational n2 = norm_sq(alpha);
  if (n2.is_zero()) throw std::domain_error("reflection in zero root");
  Rational c = Rational(2) * inner(root_vector(beta), root_vector(alpha)) / n2;
  BigInt z = c.to_integer();
  if (!z.fits_slong_p()) throw std::domain_error("cartan integer overflow");
  return z.get_si();
}

QVector RootSystem::coroot(const Root& alpha) const {
  Rational n2 = norm_sq(alpha);
  if (n2.is_zero()) throw std::domain_error("coroot of zero root");
  return qvec_scale(Rational(2) / n2, root_vector(alpha));
}

QVector RootSystem::reflect(const Root& alpha, const QVector& v) const {
  Rational n2 = norm_sq(alpha);
  if (n2.is_zero()) throw std::domain_error("reflection in zero root");
  Rational c = Rational(2) * inner(v, root_vector(alpha)) / n2;
  return qvec_sub(v, qvec_scale(c, root_vector(alpha)));
}

QMatrix RootSystem::reflection_matrix(const Root& alpha) const {
  QMatrix m(rank_, rank_);
  for (int j = 0; j < rank_; ++j) {
    QVector e = qvec_zero(rank_);
    e[j] = Rational(1);
    QVector col = reflect(alpha, e);
    for (int i = 0; i < rank_; ++i) m.at(i, j) = col[i];
  }
  return m;
}

bool RootSystem::is_root(const QVector& v) const {
  for (const auto& r : positive_) {
    QVector rv = root_vector(r);
    if (rv == v) return true;
    if (qvec_scale(Rational(-1), rv) == v) return true;
  }
  return false;
}

RootSystem build_root_system(RootSystemType type, int rank) {
  return RootSystem::build(type, rank);
}

bool validate_crystallographic(const RootSystem& rs) {
  const auto& pos = rs.positive_roots();
  if (pos.empty()) return false;

  std::vector<QVector> all;
  for (const auto& r : pos) {
    QVector v = rs.root_vector(r);
    if (qvec_is_zero(v)) return false;
    all.push_back(v);
    all.push_back(qvec_scale(Rational(-1), v));
  }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (all[i] == all[j]) return false;

  // Proportional roots may only be opposite pairs.
  for (std::size_t i = 0; i < pos.size(); ++i)
    for (std::size_t j = i + 1; j < pos.size(); ++j) {
      std::vector<QVector> pair{all[2 * i], all[2 * j]};
      if (matrix_rank(pair) < 2) return false;
    }

  for (const auto& alpha : pos) {
    Rational n2 = rs.norm_sq(alpha);
    if (n2.is_zero() || n2.sign() < 0) return false;
    for (const auto& beta : pos) {
      Rational c = Rational(2) * rs.inner(rs.root_vector(beta), rs.root_vector(alpha)) / n2;
      if (!c.is_integer()) return false;
      QVector image = rs.reflect(alpha, rs.root_vector(beta));
      if (!rs.is_root(image)) return false;
    }
  }
  return true;
}

} // namespace ccgrowth
