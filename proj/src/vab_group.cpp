#include "ccgrowth/vab_group.hpp"

#include <sstream>
#include <stdexcept>

namespace ccgrowth {

namespace {

using I64Vec = std::vector<std::int64_t>;
using I64Mat = std::vector<I64Vec>;

I64Mat identity_mat(int d) {
  I64Mat m(d, I64Vec(d, 0));
  for (int i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

I64Vec mat_apply(const I64Mat& m, const I64Vec& v) {
  I64Vec out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

I64Mat mat_mul(const I64Mat& a, const I64Mat& b) {
  std::size_t n = a.size();
  I64Mat out(n, I64Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

I64Vec vec_add(const I64Vec& a, const I64Vec& b) {
  I64Vec out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

I64Vec vec_neg(const I64Vec& a) {
  I64Vec out(a);
  for (auto& x : out) x = -x;
  return out;
}

} // namespace

std::size_t VabElement::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull + static_cast<std::size_t>(rep);
  for (auto x : vec)
    h = (h ^ static_cast<std::size_t>(static_cast<std::uint64_t>(x))) * 1099511628211ull;
  return h;
}

std::string VabElement::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < vec.size(); ++i) {
    if (i) os << ",";
    os << vec[i];
  }
  os << ")#" << rep;
  return os.str();
}

VabElement VabGroup::mul(const Element& a, const Element& b) const {
  Element out;
  out.vec = vec_add(vec_add(a.vec, mat_apply(actions_[a.rep], b.vec)),
                    cocycle_[a.rep][b.rep]);
  out.rep = rep_mul_[a.rep][b.rep];
  return out;
}

VabElement VabGroup::inv(const Element& a) const {
  // Solve (z, p^{-1}) * (x, p) = identity for z.
  int pinv = rep_inv_[a.rep];
  Element out;
  out.vec = vec_neg(vec_add(mat_apply(actions_[pinv], a.vec), cocycle_[pinv][a.rep]));
  out.rep = pinv;
  return out;
}

ZMatrix VabGroup::action_matrix(const Element& g) const {
  ZMatrix out;
  for (const auto& row : actions_[g.rep]) {
    ZVector zr;
    for (auto x : row) zr.emplace_back(static_cast<long>(x));
    out.push_back(std::move(zr));
  }
  return out;
}

ZVector VabGroup::h_coords(const Element& g) const {
  if (g.rep != 0)
    throw std::domain_error("h_coords of an element outside the lattice");
  ZVector out;
  for (auto x : g.vec) out.emplace_back(static_cast<long>(x));
  return out;
}

VabElement VabGroup::translation_element(const ZVector& coords) const {
  Element out;
  out.rep = 0;
  for (const auto& x : coords) {
    if (!x.fits_slong_p())
      throw std::domain_error("lattice coordinate too large for element form");
    out.vec.push_back(static_cast<std::int64_t>(x.get_si()));
  }
  return out;
}

void VabGroup::finalize() {
  const int m = rep_count();
  rep_inv_.assign(m, -1);
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q)
      if (rep_mul_[p][q] == 0 && rep_mul_[q][p] == 0) rep_inv_[p] = q;
  for (int p = 0; p < m; ++p) {
    if (rep_inv_[p] < 0) throw std::logic_error("rep table has no inverse for " + rep_labels_[p]);
    coset_reps_.push_back(Element{I64Vec(d_, 0), p});
  }

  // Normalized cocycle and action-compatibility checks: these are exactly
  // the conditions making the twisted multiplication associative with
  // identity (0, e).
  if (actions_[0] != identity_mat(d_))
    throw std::logic_error("identity rep must act trivially");
  for (int p = 0; p < m; ++p)
    if (cocycle_[0][p] != I64Vec(d_, 0) || cocycle_[p][0] != I64Vec(d_, 0))
      throw std::logic_error("cocycle is not normalized");
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q) {
      if (mat_mul(actions_[p], actions_[q]) != actions_[rep_mul_[p][q]])
        throw std::logic_error("action table is not a homomorphism");
      for (int r = 0; r < m; ++r) {
        I64Vec lhs = vec_add(mat_apply(actions_[p], cocycle_[q][r]),
                             cocycle_[p][rep_mul_[q][r]]);
        I64Vec rhs = vec_add(cocycle_[p][q], cocycle_[rep_mul_[p][q]][r]);
        if (lhs != rhs) throw std::logic_error("cocycle identity fails");
      }
    }
}

VabGroup VabGroup::sign_flip(int d) {
  if (d < 1) throw std::invalid_argument("sign-flip group requires d >= 1");
  VabGroup g;
  g.d_ = d;
  g.label_ = "signflip:d=" + std::to_string(d);
  const int m = 1 << d;
  for (int mask = 0; mask < m; ++mask) {
    std::string lbl;
    for (int i = 0; i < d; ++i)
      if (mask & (1 << i)) lbl += "s" + std::to_string(i + 1);
    if (lbl.empty()) lbl = "e";
    g.rep_labels_.push_back(lbl);
    I64Mat act = identity_mat(d);
    for (int i = 0; i < d; ++i)
      if (mask & (1 << i)) act[i][i] = -1;
    g.actions_.push_back(std::move(act));
  }
  g.rep_mul_.assign(m, std::vector<int>(m, 0));
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q) g.rep_mul_[p][q] = p ^ q;
  g.cocycle_.assign(m, std::vector<I64Vec>(m, I64Vec(d, 0)));
  g.finalize();

  for (int i = 0; i < d; ++i) {
    I64Vec e(d, 0);
    e[i] = 1;
    g.gens_.push_back({"t" + std::to_string(i + 1), Element{e, 0}});
    g.gens_.push_back({"t" + std::to_string(i + 1) + "^-1", Element{vec_neg(e), 0}});
  }
  for (int i = 0; i < d; ++i)
    g.gens_.push_back({"s" + std::to_string(i + 1), Element{I64Vec(d, 0), 1 << i}});
  return g;
}

VabGroup VabGroup::klein_bottle() {
  // Lattice A = <a, b^2> with coordinates a = (1,0), b^2 = (0,1); reps {1,b};
  // b acts by (x,y) -> (-x,y) and b*b lands on the lattice element b^2.
  VabGroup g;
  g.d_ = 2;
  g.label_ = "klein";
  g.rep_labels_ = {"e", "b"};
  g.actions_.push_back(identity_mat(2));
  I64Mat mb = identity_mat(2);
  mb[0][0] = -1;
  g.actions_.push_back(std::move(mb));
  g.rep_mul_ = {{0, 1}, {1, 0}};
  g.cocycle_.assign(2, std::vector<I64Vec>(2, I64Vec(2, 0)));
  g.cocycle_[1][1] = {0, 1};
  g.finalize();

  g.gens_.push_back({"a", Element{{1, 0}, 0}});
  g.gens_.push_back({"a^-1", Element{{-1, 0}, 0}});
  Element b{{0, 0}, 1};
  g.gens_.push_back({"b", b});
  g.gens_.push_back({"b^-1", g.inv(b)});
  return g;
}

VabGroup VabGroup::free_abelian(int d) {
  if (d < 1) throw std::invalid_argument("free abelian group requires d >= 1");
  VabGroup g;
  g.d_ = d;
  g.label_ = "zr:d=" + std::to_string(d);
  g.rep_labels_ = {"e"};
  g.actions_.push_back(identity_mat(d));
  g.rep_mul_ = {{0}};
  g.cocycle_.assign(1, std::vector<I64Vec>(1, I64Vec(d, 0)));
  g.finalize();
  for (int i = 0; i < d; ++i) {
    I64Vec e(d, 0);
    e[i] = 1;
    g.gens_.push_back({"t" + std::to_string(i + 1), Element{e, 0}});
    g.gens_.push_back({"t" + std::to_string(i + 1) + "^-1", Element{vec_neg(e), 0}});
  }
  return g;
}

VabGroup build_sign_flip_group(int d) { return VabGroup::sign_flip(d); }
VabGroup build_klein_bottle() { return VabGroup::klein_bottle(); }

} // namespace ccgrowth
