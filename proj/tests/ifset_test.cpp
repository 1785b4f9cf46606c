#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "fuzzylie/generators.hpp"
#include "fuzzylie/ifset.hpp"

using namespace fuzzylie;

namespace {

Degree q(std::int64_t n, std::int64_t d = 1) { return Degree(n, d); }

IFSet two_point(Degree mu0, Degree la0, Degree mu1, Degree la1) {
  auto L = fixtures::abelian(2, 1);
  return IFSet(L, {mu0, mu1}, {la0, la1});
}

}  // namespace

TEST_CASE("degree arithmetic is exact") {
  CHECK(degree_min(q(1, 2), q(1, 3)) == q(1, 3));
  CHECK(degree_max(q(1, 2), q(1, 3)) == q(1, 2));
  CHECK(q(2, 4) == q(1, 2));
  CHECK(degree_cmp(q(2, 4), q(1, 2)) == std::strong_ordering::equal);
  CHECK(degree_max(q(0), q(5, 7)) == q(5, 7));
  CHECK(q(1, 3) < q(1, 2));
  CHECK(q(2, 4).num() == 1);
  CHECK(q(2, 4).den() == 2);
  CHECK(q(1, 3).complement() == q(2, 3));

  CHECK_THROWS_AS(q(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(q(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(q(-1, 2), std::invalid_argument);
}

TEST_CASE("degree parsing and printing") {
  CHECK(Degree::parse("1/2") == q(1, 2));
  CHECK(Degree::parse("2/4") == q(1, 2));
  CHECK(Degree::parse("1") == q(1));
  CHECK(Degree::parse("0") == q(0));
  CHECK(to_string(q(3, 6)) == "1/2");
  CHECK(to_string(q(1)) == "1");
  CHECK(to_string(q(0)) == "0");
  CHECK_THROWS_AS(Degree::parse("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(Degree::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Degree::parse("3/2"), std::invalid_argument);
  CHECK_THROWS_AS(Degree::parse(""), std::invalid_argument);
}

TEST_CASE("fuzzy set invariant") {
  auto L = fixtures::abelian(2, 1);
  CHECK_NOTHROW(IFSet(L, {q(1), q(1, 3)}, {q(0), q(2, 3)}));
  try {
    IFSet(L, {q(1), q(1, 2)}, {q(0), q(2, 3)});
    FAIL("expected an invariant error");
  } catch (const InvariantError& e) {
    CHECK(e.element() == 1);
  }
  CHECK_THROWS_AS(IFSet(L, {q(1)}, {q(0)}), std::invalid_argument);
}

TEST_CASE("complement") {
  auto A = two_point(q(1, 3), q(1, 2), q(1), q(0));
  CHECK(if_complement(if_complement(A)) == A);
  auto C = if_complement(A);
  CHECK(C.mu(0) == q(1, 2));
  CHECK(C.lambda(0) == q(1, 3));
  auto top = IFSet::constant(A.carrier(), q(1), q(0));
  CHECK(if_complement(top) == IFSet::constant(A.carrier(), q(0), q(1)));
}

TEST_CASE("inclusion") {
  auto A = two_point(q(1, 3), q(1, 2), q(1), q(0));
  auto bottom = IFSet::constant(A.carrier(), q(0), q(1));
  CHECK(if_subset(A, A));
  CHECK(if_subset(bottom, A));
  CHECK_FALSE(if_subset(A, bottom));
  auto other = IFSet::constant(fixtures::abelian(3, 1), q(0), q(1));
  CHECK_THROWS_AS(if_subset(A, other), std::invalid_argument);
}

TEST_CASE("intersection and union") {
  auto A = two_point(q(1, 2), q(1, 4), q(1), q(0));
  auto B = two_point(q(1, 3), q(1, 2), q(0), q(1));
  auto I = if_intersect(A, B);
  CHECK(I.mu(0) == q(1, 3));
  CHECK(I.lambda(0) == q(1, 2));
  CHECK(if_intersect(A, A) == A);
  auto bottom = IFSet::constant(A.carrier(), q(0), q(1));
  CHECK(if_intersect(A, bottom) == bottom);
  auto U = if_union(A, B);
  CHECK(U.mu(0) == q(1, 2));
  CHECK(U.lambda(0) == q(1, 4));
}

TEST_CASE("box and diamond") {
  auto fuzzy = two_point(q(1, 3), q(2, 3), q(1), q(0));
  CHECK(if_box(fuzzy) == fuzzy);
  CHECK(if_diamond(fuzzy) == fuzzy);
  auto A = two_point(q(1, 3), q(1, 3), q(1, 2), q(0));
  CHECK(if_box(if_box(A)) == if_box(A));
  CHECK(if_box(A).lambda(0) == q(2, 3));
  CHECK(if_diamond(A).mu(0) == q(2, 3));
}

TEST_CASE("family intersection") {
  auto A = two_point(q(1, 4), q(1, 2), q(1), q(0));
  const IFSet single[] = {A};
  CHECK(if_intersect_family(single) == A);
  const IFSet pair[] = {A, if_complement(A)};
  auto I = if_intersect_family(pair);
  CHECK(I.mu(0) == q(1, 4));
  CHECK(I.lambda(0) == q(1, 2));
  CHECK_THROWS_AS(if_intersect_family(std::span<const IFSet>{}), std::invalid_argument);

  std::mt19937_64 rng(3);
  auto L = fixtures::f2(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<IFSet> fam;
    for (int i = 0; i < 1 + trial % 4; ++i) fam.push_back(random_ifset(L, rng));
    auto R = if_intersect_family(fam);
    for (const auto& member : fam) CHECK(if_subset(R, member));
  }
}

TEST_CASE("level cuts") {
  auto L = fixtures::abelian(3, 1);
  auto A = IFSet(L, {q(1), q(1, 2), q(1, 2)}, {q(0), q(1, 4), q(1, 4)});
  CHECK(level_cut(A, q(0), q(1)).count() == 3);
  CHECK(level_cut(A, q(3, 4), q(1, 8)).members() == std::vector<Element>{0});
  CHECK(level_cut(A, q(1, 2), q(1, 4)).count() == 3);
  CHECK(level_cut(A, q(1, 2), q(1, 4), {true, false}).count() == 1);
  CHECK(level_cut(A, q(1, 2), q(1, 4), {false, true}).count() == 1);
  CHECK(upper_cut(A, q(1, 2)).count() == 3);
  CHECK(lower_cut(A, q(0)).count() == 1);

  auto top = IFSet::constant(L, q(1), q(0));
  CHECK(level_cut(top, q(1), q(0)).count() == 3);
}

TEST_CASE("threshold grid") {
  auto L = fixtures::abelian(3, 1);
  auto C = IFSet::constant(L, q(1, 2), q(1, 3));
  CHECK(threshold_grid(C).size() <= 9);
  CHECK(threshold_grid(IFSet::constant(L, q(0), q(1))).size() == 4);
  auto A = IFSet(L, {q(1), q(1, 2), q(1, 2)}, {q(0), q(1, 4), q(1, 4)});
  CHECK(threshold_grid(A).size() <= 16);
}

TEST_CASE("level cuts are constant between grid thresholds") {
  // Oracle sweep: cuts at midpoints between consecutive thresholds coincide with
  // the cut at one of the grid points of the same strictness.
  std::mt19937_64 rng(17);
  auto L = fixtures::heisenberg(2);
  for (int trial = 0; trial < 50; ++trial) {
    auto A = random_ifset(L, rng, 6);
    const auto grid = threshold_grid(A);
    std::vector<Degree> ss, ts;
    for (auto& [s, t] : grid) {
      if (ss.empty() || !(ss.back() == s)) ss.push_back(s);
      ts.push_back(t);
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    auto midpoints = [](const std::vector<Degree>& v) {
      std::vector<Degree> out;
      for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        const auto a = v[i], b = v[i + 1];
        out.emplace_back(a.num() * b.den() + b.num() * a.den(), 2 * a.den() * b.den());
      }
      return out;
    };
    for (const auto& s : midpoints(ss))
      for (const auto& t : midpoints(ts))
        for (CutKind kind : {CutKind{false, false}, CutKind{true, false}, CutKind{false, true}, CutKind{true, true}}) {
          const auto cut = level_cut(A, s, t, kind);
          bool found = false;
          for (const auto& [gs, gt] : grid)
            if (level_cut(A, gs, gt, kind) == cut) found = true;
          REQUIRE(found);
        }
  }
}

TEST_CASE("level cuts are monotone in the thresholds") {
  std::mt19937_64 rng(23);
  auto L = fixtures::f2(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto A = random_ifset(L, rng);
    const auto grid = threshold_grid(A);
    for (const auto& [s1, t1] : grid)
      for (const auto& [s2, t2] : grid)
        if (s1 <= s2 && t1 >= t2) REQUIRE(level_cut(A, s2, t2).is_subset_of(level_cut(A, s1, t1)));
  }
}

TEST_CASE("uncertainty") {
  auto A = two_point(q(1, 3), q(2, 3), q(0), q(0));
  CHECK(uncertainty(A, 0) == q(0));
  CHECK(uncertainty(A, 1) == q(1));
  auto B = two_point(q(1, 2), q(1, 4), q(0), q(0));
  CHECK(uncertainty(B, 0) == q(1, 4));
}

TEST_CASE("lattice laws (randomized)") {
  std::mt19937_64 rng(29);
  auto L = fixtures::heisenberg(2);
  for (int trial = 0; trial < 500; ++trial) {
    auto A = random_ifset(L, rng, 6), B = random_ifset(L, rng, 6);
    REQUIRE(if_subset(if_intersect(A, B), A));
    REQUIRE(if_subset(A, if_union(A, B)));
    REQUIRE(if_complement(if_intersect(A, B)) == if_union(if_complement(A), if_complement(B)));
    for (Element x = 0; x < L->size(); ++x) {
      REQUIRE(uncertainty(if_box(A), x) == Degree::zero());
      REQUIRE(uncertainty(if_diamond(A), x) == Degree::zero());
    }
  }
}
