#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "matstab/hpp_analysis.hpp"
#include "test_util.hpp"

using namespace matstab;

namespace {

MConvexSet ex_uniform_n3() {
  std::vector<std::vector<int>> pts;
  for (int x = 0; x <= 2; ++x)
    for (int y = 0; y <= 2; ++y)
      for (int z = 0; z <= 2; ++z)
        if (x + y + z == 3) pts.push_back({x, y, z});
  return mconvex_from_points({"1", "2", "3"}, pts);
}

}  // namespace

TEST_CASE("M-convexity check with witness") {
  CHECK(is_mconvex({{1, 0}, {0, 1}}));
  CHECK(is_mconvex(ex_uniform_n3().points));

  auto w = mconvex_violation({{2, 0}, {0, 2}});
  REQUIRE(w.has_value());
  CHECK(w->i == 0);
  CHECK(w->alpha == std::vector<int>{2, 0});
  CHECK(w->beta == std::vector<int>{0, 2});

  CHECK_THROWS_AS(mconvex_from_points({"1", "2"}, {{2, 0}, {0, 2}}), NotMConvex);
  CHECK_THROWS_AS(mconvex_from_points({"1", "2"}, {{1, 0}, {1, 1}}), NotMConvex);
}

TEST_CASE("rank from M-convex set") {
  Polymatroid r = rank_from_mconvex(ex_uniform_n3());
  CHECK(r(r.mask_of({"1"})) == 2);
  CHECK(r(r.mask_of({"1", "2"})) == 3);
  CHECK(r(0) == 0);

  MConvexSet u12 = mconvex_from_points({"1", "2"}, {{1, 0}, {0, 1}});
  Polymatroid ru = rank_from_mconvex(u12);
  CHECK(equal_as_functions(ru, polymatroid_from_matroid(catalog("u(1,2)"))));
}

TEST_CASE("M-convex set from rank table") {
  Polymatroid ru = polymatroid_from_matroid(catalog("u(1,2)"));
  MConvexSet ju = mconvex_from_rank(ru);
  CHECK(ju.points == std::vector<std::vector<int>>{{0, 1}, {1, 0}});

  MConvexSet ex = ex_uniform_n3();
  CHECK(mconvex_from_rank(rank_from_mconvex(ex)).points == ex.points);

  MConvexSet fano_ind = mconvex_from_rank(polymatroid_from_matroid(catalog("fano")));
  CHECK(fano_ind.points.size() == 28);
  for (const auto& p : fano_ind.points)
    for (int x : p) CHECK(x <= 1);
}

TEST_CASE("bijection round trips on catalog matroids and random instances") {
  for (std::string name : {"fano", "nonfano", "f7m4", "f7m5", "u(2,4)"}) {
    Polymatroid r = polymatroid_from_matroid(catalog(name));
    CHECK(equal_as_functions(rank_from_mconvex(mconvex_from_rank(r)), r));
  }
  SplitMix64 rng{2024};
  for (int t = 0; t < 50; ++t) {
    Polymatroid r = testutil::random_polymatroid(rng, int(rng.range(2, 6)));
    MConvexSet j = mconvex_from_rank(r);
    if (j.points.size() > 200) continue;
    CHECK(equal_as_functions(rank_from_mconvex(j), r));
    CHECK(mconvex_from_rank(rank_from_mconvex(j)).points == j.points);
  }
}

TEST_CASE("flats") {
  Polymatroid r = rank_from_mconvex(ex_uniform_n3());
  auto fl = flats(r);
  auto has = [&fl](uint32_t f) {
    return std::find(fl.begin(), fl.end(), f) != fl.end();
  };
  CHECK(has(r.mask_of({"1"})));
  CHECK(has(r.mask_of({"2"})));
  CHECK(has((1u << r.n()) - 1));  // the full ground set is always a flat

  // free matroid: every subset is a flat
  Polymatroid free3 = polymatroid_from_matroid(
      matroid_from_bases({"1", "2", "3"}, {0b111}));
  CHECK(flats(free3).size() == 8);
}

TEST_CASE("modular pairs and the stickiness test") {
  Polymatroid r = rank_from_mconvex(ex_uniform_n3());
  uint32_t f1 = r.mask_of({"1"}), f2 = r.mask_of({"2"});
  CHECK_FALSE(is_modular_pair(r, f1, f2));  // 2 + 2 != 3 + 0
  uint32_t full = (1u << r.n()) - 1;
  CHECK(is_modular_pair(r, f1, f1));
  CHECK(is_modular_pair(r, 0, full));
  CHECK_THROWS_AS(is_modular_pair(r, r.mask_of({"1", "2"}), f1), NotAFlat);

  CHECK_FALSE(sticky_sufficient(r));
  CHECK(sticky_sufficient(polymatroid_from_matroid(catalog("u(1,2)"))));
  CHECK(sticky_sufficient(polymatroid_from_matroid(
      matroid_from_bases({"1", "2", "3"}, {0b111}))));
}

TEST_CASE("restriction") {
  Polymatroid r = rank_from_mconvex(ex_uniform_n3());
  uint32_t full = (1u << r.n()) - 1;
  CHECK(restrict_to(r, full) == r);

  Polymatroid u24 = polymatroid_from_matroid(catalog("u(2,4)"));
  Polymatroid single = restrict_to(u24, u24.mask_of({"1"}));
  CHECK(single.r == std::vector<int>{0, 1});

  // the specialized f7m4 polymatroid restricted to {0,1,2} is the n=3
  // instance above (grounds differ by labels; compare the tables)
  auto [r1, r2] = specialized_pair();
  Polymatroid restricted = restrict_to(r1, r1.mask_of({"0", "1", "2"}));
  CHECK(restricted.r == r.r);
  Polymatroid restricted2 = restrict_to(r2, r2.mask_of({"0", "1", "2"}));
  CHECK(restricted2.r == r.r);
}

TEST_CASE("support specialization") {
  std::map<std::string, std::string> identify = {
      {"0", "0"}, {"1", "1"}, {"2", "2"}, {"3", "3"}, {"4", "4"},
      {"0'", "0"}, {"1'", "1"}, {"2'", "2"}};
  MConvexSet j1 = specialize_support(catalog("f7m4"), identify);
  CHECK(j1.ground == std::vector<std::string>{"0", "1", "2", "3"});
  std::vector<std::vector<int>> expect1 = {
      {0, 1, 1, 1}, {0, 1, 2, 0}, {0, 2, 1, 0}, {1, 0, 1, 1}, {1, 0, 2, 0},
      {1, 1, 0, 1}, {1, 1, 1, 0}, {1, 2, 0, 0}, {2, 0, 1, 0}, {2, 1, 0, 0}};
  CHECK(j1.points == expect1);

  MConvexSet j2 = specialize_support(catalog("f7m5"), identify);
  CHECK(j2.ground == std::vector<std::string>{"0", "1", "2", "4"});
  CHECK(j2.points.size() == 11);
  CHECK(std::count(j2.points.begin(), j2.points.end(),
                   std::vector<int>{0, 2, 0, 1}) == 1);

  // identity map keeps the indicator vectors
  std::map<std::string, std::string> id;
  for (const auto& l : catalog("u(2,3)").ground) id[l] = l;
  MConvexSet ind = specialize_support(catalog("u(2,3)"), id);
  CHECK(ind.points == basis_indicator_set(catalog("u(2,3)")).points);
}

TEST_CASE("scaling") {
  Polymatroid ru = polymatroid_from_matroid(catalog("u(1,2)"));
  CHECK(scale(ru, 1) == ru);
  Polymatroid doubled = scale(ru, 2);
  CHECK(doubled(doubled.mask_of({"1"})) == 2);
  CHECK(doubled(doubled.mask_of({"1", "2"})) == 2);

  auto [r1, r2] = specialized_pair();
  CHECK(scale(r1, 3)(r1.mask_of({"0"})) == 6);
}

TEST_CASE("amalgam search: identical and disjoint grounds") {
  Polymatroid r = rank_from_mconvex(ex_uniform_n3());
  auto self = find_amalgam(r, r);
  REQUIRE(self.has_value());
  CHECK(*self == r);

  // disjoint grounds: any witness must restrict to both inputs; the
  // direct-sum table is one amalgam among several
  Polymatroid a = polymatroid_from_matroid(matroid_from_bases({"a"}, {0b1}));
  Polymatroid b = polymatroid_from_matroid(matroid_from_bases({"b"}, {0b1}));
  auto w = find_amalgam(a, b);
  REQUIRE(w.has_value());
  CHECK(equal_as_functions(restrict_to(*w, w->mask_of({"a"})), a));
  CHECK(equal_as_functions(restrict_to(*w, w->mask_of({"b"})), b));
  Polymatroid direct_sum{{"a", "b"}, {0, 1, 1, 2}};
  CHECK(equal_as_functions(restrict_to(direct_sum, direct_sum.mask_of({"a"})), a));
  CHECK(equal_as_functions(restrict_to(direct_sum, direct_sum.mask_of({"b"})), b));
}

TEST_CASE("amalgam search: the specialized pair is infeasible for m = 1,2,3") {
  auto [r1, r2] = specialized_pair();
  CHECK(equal_as_functions(restrict_to(r1, r1.mask_of({"0", "1", "2"})),
                           restrict_to(r2, r2.mask_of({"0", "1", "2"}))));
  for (int m = 1; m <= 3; ++m) {
    AmalgamSearchStats stats;
    auto w = find_amalgam(scale(r1, m), scale(r2, m), &stats);
    CHECK_FALSE(w.has_value());
    CHECK(stats.nodes > 0);
  }
}

TEST_CASE("amalgam search rejects mismatched restrictions") {
  Polymatroid ru = polymatroid_from_matroid(catalog("u(1,2)"));
  CHECK_THROWS_AS(find_amalgam(ru, scale(ru, 2)), RestrictionMismatch);
}

TEST_CASE("amalgam witnesses always satisfy the axioms and restrictions") {
  SplitMix64 rng{555};
  int found = 0, runs = 0;
  while (runs < 25) {
    Polymatroid base = testutil::random_polymatroid(rng, 2);
    // extend the same base polymatroid by one fresh element on each side
    auto extend = [&rng, &base](const std::string& label) {
      std::vector<std::string> ground = base.ground;
      ground.push_back(label);
      std::vector<int> table(size_t(1) << ground.size());
      int cap = int(rng.range(0, 2));
      for (uint32_t s = 0; s < table.size(); ++s) {
        uint32_t proj = s & ((1u << base.n()) - 1);
        bool has_new = s >> base.n() & 1;
        table[s] = base(proj) + (has_new ? cap : 0);
      }
      return polymatroid_from_table(ground, table);
    };
    Polymatroid r1 = extend("y1");
    Polymatroid r2 = extend("y2");
    ++runs;
    auto w = find_amalgam(r1, r2);
    if (!w) continue;
    ++found;
    CHECK(equal_as_functions(restrict_to(*w, w->mask_of(r1.ground)), r1));
    CHECK(equal_as_functions(restrict_to(*w, w->mask_of(r2.ground)), r2));
  }
  CHECK(found > 0);
}

TEST_CASE("restriction lemma on the specialized supports") {
  auto [r1, r2] = specialized_pair();
  MConvexSet j1 = mconvex_from_rank(r1);
  // slice of J1 with the last coordinate zero, restricted to {0,1,2}
  std::vector<std::vector<int>> slice;
  for (const auto& p : j1.points)
    if (p[3] == 0) slice.push_back({p[0], p[1], p[2]});
  Polymatroid lhs = restrict_to(r1, r1.mask_of({"0", "1", "2"}));
  Polymatroid rhs = rank_from_mconvex(mconvex_from_points({"0", "1", "2"}, slice));
  CHECK(equal_as_functions(lhs, rhs));
}

TEST_CASE("polymatroid JSON round trip and key format") {
  auto [r1, r2] = specialized_pair();
  nlohmann::json j = polymatroid_to_json(r1);
  CHECK(j["r"].contains(""));
  CHECK(j["r"].contains("0,1"));
  CHECK(j["r"]["0"] == 2);
  Polymatroid back = polymatroid_from_json(j);
  CHECK(back == r1);

  MConvexSet jset = mconvex_from_rank(r1);
  CHECK(mconvex_from_json(mconvex_to_json(jset)).points == jset.points);
}
