#pragma once

#include <string>
#include <vector>

#include "ccgrowth/linalg.hpp"

namespace ccgrowth {

enum class RootSystemType { A, B, C, D, G };

char root_system_letter(RootSystemType t);

// A root in simple-root coordinates; crystallographic systems have integer
// coefficients, all of one sign.
struct Root {
  std::vector<long> coeffs;

  friend bool operator==(const Root& a, const Root& b) = default;
  friend auto operator<=>(const Root& a, const Root& b) = default;
};

// Finite crystallographic root system of type A, B, C, D or G, presented in
// the basis of simple roots.  The inner product is the Gram matrix of that
// basis; reflections act by integer matrices (Cartan integers).
class RootSystem {
public:
  static RootSystem build(RootSystemType type, int rank);
  // Assemble from explicit data without validity checks; intended for
  // negative tests of validate_crystallographic.
  static RootSystem from_raw(QMatrix gram, std::vector<Root> positive);

  RootSystemType type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const; // e.g. "A2"

  const QMatrix& gram() const { return gram_; }
  const std::vector<Root>& positive_roots() const { return positive_; }
  const Root& simple_root(int i) const { return positive_[simple_index_[i]]; }
  const Root& highest_root() const { return positive_[highest_index_]; }

  QVector root_vector(const Root& r) const;
  Rational inner(const QVector& a, const QVector& b) const;
  Rational norm_sq(const Root& r) const;
  // 2<beta, alpha>/<alpha, alpha>; error if not an integer.
  long cartan_integer(const Root& beta, const Root& alpha) const;
  // Coroot 2 alpha / <alpha, alpha> as a vector.
  QVector coroot(const Root& alpha) const;

  // Orthogonal reflection in the hyperplane of alpha; error if alpha is zero.
  QVector reflect(const Root& alpha, const QVector& v) const;
  QMatrix reflection_matrix(const Root& alpha) const;

  bool is_root(const QVector& v) const;

private:
  RootSystemType type_ = RootSystemType::A;
  int rank_ = 0;
  QMatrix gram_;
  std::vector<Root> positive_;
  std::vector<int> simple_index_;
  int highest_index_ = -1;
};

RootSystem build_root_system(RootSystemType type, int rank);

// Checks the crystallographic axioms on the stored data: roots nonzero, Phi
// closed under all reflections, Cartan integers integral, and the only
// multiple of alpha in Phi being -alpha.
bool validate_crystallographic(const RootSystem& rs);

} // namespace ccgrowth
