#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ccgrowth/growth.hpp"
#include "ccgrowth/group_spec.hpp"
#include "ccgrowth/movement.hpp"
#include "properties.hpp"

using namespace ccgrowth;

namespace {

QVector qv(std::vector<long> v) {
  QVector out;
  for (long x : v) out.emplace_back(x);
  return out;
}

} // namespace

TEST_CASE("move-set examples") {
  auto g = AffineCoxeterGroup::build(RootSystemType::A, 2);

  auto mov_id = move_set(g.identity());
  CHECK(mov_id.direction_rank() == 0);
  CHECK(qvec_is_zero(mov_id.representative()));
  CHECK(mov_id.is_linear());

  // a rotation moves every point: the move-set is the whole plane
  auto st = evaluate_word(g, tokenize_word("s1 s2"));
  CHECK(move_set(st).direction_rank() == 2);

  // a translation moves every point by the same vector
  auto t = evaluate_word(g, tokenize_word("s0 s1 s2 s1"));
  auto mov_t = move_set(t);
  CHECK(mov_t.direction_rank() == 0);
  CHECK(mov_t.representative() == t.trans());
  CHECK(mov_t.contains(t.trans()));
  CHECK_FALSE(mov_t.is_linear());
}

TEST_CASE("fixed-space examples") {
  auto g = AffineCoxeterGroup::build(RootSystemType::A, 2);

  auto fix_id = fix_set(g.identity());
  CHECK_FALSE(fix_id.is_empty());
  CHECK(fix_id.direction_rank() == 2); // all of the plane

  // product of two affine reflections in non-parallel hyperplanes fixes
  // their intersection point
  auto rs_elt = evaluate_word(g, tokenize_word("s0 s1"));
  auto f = fix_set(rs_elt);
  REQUIRE_FALSE(f.is_empty());
  CHECK(f.direction_rank() == 0);
  // the fixed point is genuinely fixed
  CHECK(rs_elt.apply(f.representative()) == f.representative());

  auto t = evaluate_word(g, tokenize_word("s0 s1 s2 s1"));
  CHECK(fix_set(t).is_empty());
}

TEST_CASE("ellipticity") {
  auto g = AffineCoxeterGroup::build(RootSystemType::A, 2);
  CHECK(is_elliptic(g.identity()));
  for (const auto& u : g.finite_part()) CHECK(is_elliptic(u));
  auto t = evaluate_word(g, tokenize_word("s0 s1 s2 s1"));
  CHECK_FALSE(is_elliptic(t));
}

TEST_CASE("elliptic triple equivalence on the 6-ball") {
  for (auto [ty, rank] :
       {std::pair{RootSystemType::A, 2}, {RootSystemType::B, 2}}) {
    auto g = AffineCoxeterGroup::build(ty, rank);
    auto ball = ball_enumerate(g, 6);
    for (const auto& [w, len] : ball.length) {
      bool fix_nonempty = !fix_set(w).is_empty();
      auto mov = move_set(w);
      bool zero_in_mov = mov.contains(qvec_zero(2));
      bool mov_linear = mov.is_linear();
      CHECK(fix_nonempty == zero_in_mov);
      CHECK(zero_in_mov == mov_linear);
      CHECK(fix_nonempty == is_elliptic(w));
    }
  }
}

TEST_CASE("root dimension") {
  auto rs = RootSystem::build(RootSystemType::A, 2);
  auto origin = AffineSubspace(QMatrix(0, 2), qv({0, 0}));
  CHECK(root_dimension(rs, origin) == 0);

  // the line through a root is itself a root space
  auto root_line =
      AffineSubspace(QMatrix::from_rows({qv({1, 0})}), qv({0, 0}));
  CHECK(root_dimension(rs, root_line) == 1);

  // a line in no root direction needs the whole plane
  auto skew_line =
      AffineSubspace(QMatrix::from_rows({qv({1, 2})}), qv({0, 0}));
  CHECK(root_dimension(rs, skew_line) == 2);

  CHECK_THROWS_AS(root_dimension(rs, AffineSubspace::empty_space(2)),
                  std::invalid_argument);
}

TEST_CASE("dimension profile on the finite part") {
  auto g = AffineCoxeterGroup::build(RootSystemType::A, 2);
  // identity, both reflections, both rotations, and the long element:
  // profile (word length over {s1,s2}, reflection length)
  std::vector<std::pair<std::string, std::pair<int, int>>> table = {
      {"", {0, 0}},           {"s1", {1, 1}},       {"s2", {1, 1}},
      {"s1 s2", {2, 2}},      {"s2 s1", {2, 2}},    {"s1 s2 s1", {3, 1}},
  };
  std::vector<NamedGenerator<GroupElement>> finite_gens{g.generators()[1],
                                                        g.generators()[2]};
  auto lens = ball_enumerate_from(g, g.identity(), finite_gens, 3);
  for (const auto& [word, expect] : table) {
    auto w = evaluate_word(g, tokenize_word(word));
    CHECK(lens.length.at(w) == expect.first);
    CHECK(dimension_profile(g, w).reflection_length == expect.second);
  }
}

TEST_CASE("dimension profile of translations and rotations") {
  auto g = AffineCoxeterGroup::build(RootSystemType::A, 2);

  auto t = evaluate_word(g, tokenize_word("s0 s1 s2 s1"));
  auto pt = dimension_profile(g, t);
  CHECK(pt.e == 0); // translations have no elliptic motion
  CHECK(pt.d == 1); // moved by a single root direction
  CHECK(pt.reflection_length == 2);

  auto rs_elt = evaluate_word(g, tokenize_word("s0 s1"));
  CHECK(is_elliptic(rs_elt));
  auto pr = dimension_profile(g, rs_elt);
  CHECK(pr.dim == 2);
  CHECK(pr.reflection_length == 2);
}

TEST_CASE("translation-elliptic factorisation") {
  auto g = AffineCoxeterGroup::build(RootSystemType::A, 2);

  auto s1 = g.generators()[1].element;
  auto [t0, u0] = translation_elliptic_factorisation(g, s1);
  CHECK(t0.is_identity());
  CHECK(u0 == s1);

  auto t = evaluate_word(g, tokenize_word("s0 s1 s2 s1"));
  auto [t1, u1] = translation_elliptic_factorisation(g, t);
  CHECK(t1 == t);
  CHECK(u1.is_identity());

  auto rs_elt = evaluate_word(g, tokenize_word("s0 s1"));
  auto [t2, u2] = translation_elliptic_factorisation(g, rs_elt);
  CHECK(u2 == project_to_finite(rs_elt));
  CHECK(g.mul(t2, u2) == rs_elt);
  CHECK(t2.is_translation());

  // reconstruction holds across a ball
  auto ball = ball_enumerate(g, 5);
  for (const auto& [w, len] : ball.length) {
    auto [tw, uw] = translation_elliptic_factorisation(g, w);
    CHECK(g.mul(tw, uw) == w);
    CHECK(tw.is_translation());
    CHECK(is_elliptic(uw));
  }
}

TEST_CASE("reflection length oracle basics") {
  auto g = AffineCoxeterGroup::build(RootSystemType::A, 2);
  ReflectionLengthOracle oracle(g, 4);
  CHECK(oracle.length(g.identity()) == 0);
  CHECK(oracle.length(evaluate_word(g, tokenize_word("s1 s2 s1"))) == 1);
  CHECK(oracle.length(evaluate_word(g, tokenize_word("s0 s1 s2 s1"))) == 2);
}

TEST_CASE("oracle witnesses reconstruct the element") {
  auto g = AffineCoxeterGroup::build(RootSystemType::A, 2);
  ReflectionLengthOracle oracle(g, 6);
  auto ball = ball_enumerate(g, 5);
  for (const auto& [w, len] : ball.length) {
    auto ws = oracle.witness(w);
    CHECK(static_cast<int>(ws.size()) == oracle.length(w));
    auto acc = g.identity();
    for (const auto& [root, level] : ws)
      acc = g.mul(acc, g.affine_reflection(root, level));
    CHECK(acc == w);
  }
}

TEST_CASE("reflection length formula agrees with the oracle on 6-balls") {
  for (auto [ty, rank] : {std::pair{RootSystemType::A, 2},
                          {RootSystemType::B, 2},
                          {RootSystemType::G, 2}}) {
    auto g = AffineCoxeterGroup::build(ty, rank);
    ReflectionLengthOracle oracle(g, 6);
    auto ball = ball_enumerate(g, 6);
    for (const auto& [w, len] : ball.length)
      CHECK(dimension_profile(g, w).reflection_length == oracle.length(w));
  }
}

TEST_CASE("reflection length is a conjugation invariant") {
  auto g = AffineCoxeterGroup::build(RootSystemType::A, 2);
  auto pool = props::detail::sorted_ball(g, 4);
  std::mt19937 rng(424242);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < 200; ++i) {
    const auto& v = pool[pick(rng)];
    const auto& w = pool[pick(rng)];
    auto c = g.mul(g.mul(v, w), g.inv(v));
    CHECK(dimension_profile(g, c).reflection_length ==
          dimension_profile(g, w).reflection_length);
  }
}

TEST_CASE("witness roots of elliptic elements are independent") {
  auto g = AffineCoxeterGroup::build(RootSystemType::A, 2);
  const auto& rs = g.root_system();
  ReflectionLengthOracle oracle(g, 6);
  auto ball = ball_enumerate(g, 6);
  for (const auto& [w, len] : ball.length) {
    if (!is_elliptic(w)) continue;
    auto ws = oracle.witness(w);
    std::vector<QVector> rows;
    for (const auto& [root, level] : ws) rows.push_back(rs.root_vector(root));
    CHECK(matrix_rank(rows) == static_cast<int>(rows.size()));
  }
}

TEST_CASE("products of reflections with independent roots have full length") {
  auto g = AffineCoxeterGroup::build(RootSystemType::A, 2);
  const auto& rs = g.root_system();
  const auto& pos = rs.positive_roots();
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> lev(-2, 2);
  std::uniform_int_distribution<std::size_t> pick(0, pos.size() - 1);
  int tested = 0;
  while (tested < 100) {
    int k = 1 + static_cast<int>(tested % 2);
    std::vector<std::size_t> idx;
    while (static_cast<int>(idx.size()) < k) {
      auto c = pick(rng);
      if (std::find(idx.begin(), idx.end(), c) == idx.end()) idx.push_back(c);
    }
    std::vector<QVector> rows;
    for (auto i : idx) rows.push_back(rs.root_vector(pos[i]));
    if (matrix_rank(rows) != k) continue;
    auto w = g.identity();
    for (auto i : idx)
      w = g.mul(w, g.affine_reflection(pos[i], BigInt(lev(rng))));
    CHECK(dimension_profile(g, w).reflection_length == k);
    ++tested;
  }
}

TEST_CASE("move-set shifts under translation") {
  CHECK_NOTHROW(props::check_mov_shift(
      AffineCoxeterGroup::build(RootSystemType::A, 2)));
  CHECK_NOTHROW(props::check_mov_shift(
      AffineCoxeterGroup::build(RootSystemType::B, 2)));
}

TEST_CASE("oracle resource and reach limits") {
  auto g = AffineCoxeterGroup::build(RootSystemType::A, 2);
  CHECK_THROWS_AS(ReflectionLengthOracle(g, 6, 10), ResourceLimitError);

  // an element needing levels beyond the bound is reported, not mislabeled
  ReflectionLengthOracle tiny(g, 0);
  ZVector far{BigInt(40), BigInt(0)};
  CHECK_THROWS_AS(tiny.length(g.translation_element(far)),
                  OracleNotFoundError);
}
