#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kleitman/errors.hpp"
#include "kleitman/family_io.hpp"
#include "kleitman/setcore.hpp"
#include "oracles.hpp"

using namespace kleitman;

TEST_CASE("subset basics") {
  Subset a = Subset::of(10, {1, 4, 7});
  CHECK(a.cardinality() == 3);
  CHECK(a.contains(4));
  CHECK(!a.contains(2));
  CHECK(a.elements() == std::vector<int>{1, 4, 7});
  CHECK(a.with(2).cardinality() == 4);
  CHECK(a.without(4).elements() == std::vector<int>{1, 7});
  CHECK(Subset::full(10).cardinality() == 10);
  CHECK(Subset(10).empty());
  CHECK_THROWS_AS(Subset::of(10, {11}), InvalidInput);
  CHECK_THROWS_AS(Subset(0), InvalidInput);
}

TEST_CASE("subset ops match element-level oracles on random pairs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 150);
    std::vector<int> ea, eb;
    for (int e = 1; e <= n; ++e) {
      if (rng() & 1) ea.push_back(e);
      if (rng() & 1) eb.push_back(e);
    }
    Subset a = Subset::from_elements(n, ea);
    Subset b = Subset::from_elements(n, eb);
    CHECK(distance(a, b) == oracle::set_distance(ea, eb));
    CHECK(a.intersection_size(b) == oracle::set_intersection_size(ea, eb));
    CHECK(a.sym_diff(b).cardinality() == oracle::set_distance(ea, eb));
    CHECK(a.sym_diff(b) == b.sym_diff(a));
    CHECK(a.sym_diff(a).empty());
  }
}

TEST_CASE("multi-word boundary at 64/65 elements") {
  Subset a = Subset::of(65, {64, 65});
  Subset b = Subset::of(65, {1, 65});
  CHECK(distance(a, b) == 2);
  CHECK(a.intersection_size(b) == 1);
  CHECK(Subset::full(65).cardinality() == 65);
  CHECK(Subset::full(64).word0() == ~std::uint64_t{0});
}

TEST_CASE("distance requires one ground set") {
  CHECK_THROWS_AS(distance(Subset(5), Subset(6)), InvalidInput);
}

TEST_CASE("from_word round trips") {
  Subset s = Subset::from_word(6, 0b101001);
  CHECK(s.elements() == std::vector<int>{1, 4, 6});
  CHECK(s.word0() == 0b101001);
  CHECK_THROWS_AS(Subset::from_word(4, 0b10000), InvalidInput);
}

TEST_CASE("family canonical order and dedup") {
  Family f(5);
  CHECK(f.insert(Subset::of(5, {2, 3})));
  CHECK(f.insert(Subset::of(5, {1})));
  CHECK(f.insert(Subset(5)));
  CHECK(f.insert(Subset::of(5, {1, 4})));
  CHECK(!f.insert(Subset::of(5, {1})));
  REQUIRE(f.size() == 4);
  CHECK(f[0].empty());
  CHECK(f[1].elements() == std::vector<int>{1});
  CHECK(f[2].elements() == std::vector<int>{1, 4});
  CHECK(f[3].elements() == std::vector<int>{2, 3});
  CHECK(f.contains(Subset::of(5, {2, 3})));
  CHECK(!f.contains(Subset::of(5, {2, 4})));

  std::vector<Subset> dup{Subset::of(3, {1}), Subset::of(3, {1})};
  CHECK_THROWS_AS(Family(3, dup), InvalidInput);
}

TEST_CASE("distance spec parse and classification") {
  DistanceSpec d = DistanceSpec::parse("4,2,2");
  CHECK(d.distances() == std::vector<int>{2, 4});
  CHECK(d.even_part() == std::vector<int>{2, 4});
  CHECK(d.all_even());
  REQUIRE(d.ap_form().has_value());
  CHECK(d.ap_form()->d == 2);
  CHECK(d.ap_form()->s == 1);
  CHECK(d.ap_form()->t == 2);
  CHECK(d.ap_form()->a == 0);
  CHECK(d.homogeneous_ap());
  CHECK(d.to_string() == "2,4");

  DistanceSpec ap = DistanceSpec::parse("ap:d=6,s=1,t=2,a=0");
  CHECK(ap.distances() == std::vector<int>{6, 12});

  DistanceSpec nh = DistanceSpec::parse("4,10");
  REQUIRE(nh.ap_form().has_value());
  CHECK(nh.ap_form()->d == 6);
  CHECK(nh.ap_form()->s == 0);
  CHECK(nh.ap_form()->a == 4);
  CHECK(!nh.homogeneous_ap());

  DistanceSpec odd = DistanceSpec::parse("3,7");
  CHECK(odd.even_part().empty());
  REQUIRE(odd.ap_form().has_value());
  CHECK(odd.ap_form()->a == 3);

  CHECK(!DistanceSpec({1, 2, 4}).ap_form().has_value());
  DistanceSpec single({5});
  REQUIRE(single.ap_form().has_value());
  CHECK(single.ap_form()->d == 5);
  CHECK(single.homogeneous_ap());

  CHECK_THROWS_AS(DistanceSpec::parse(""), InvalidInput);
  CHECK_THROWS_AS(DistanceSpec::parse("0,2"), InvalidInput);
  CHECK_THROWS_AS(DistanceSpec::parse("2,x"), InvalidInput);
  CHECK_THROWS_AS(DistanceSpec::parse("ap:d=6,s=0,t=1,a=4"), InvalidInput);
  CHECK_THROWS_AS(DistanceSpec::ap(6, 0, 1, 4), InvalidInput);
  CHECK_THROWS_AS(DistanceSpec::ap(6, 2, 1, 0), InvalidInput);
  CHECK_THROWS_AS(DistanceSpec::ap(6, 1, 2, 6), InvalidInput);
}

TEST_CASE("intersection spec invariants") {
  IntersectionSpec l({0, 3}, 5);
  CHECK(l.contains(3));
  CHECK(!l.contains(1));
  CHECK(l.to_string() == "k=5,L={0,3}");
  IntersectionSpec empty({}, 4);
  CHECK(empty.sizes.empty());
  CHECK_THROWS_AS(IntersectionSpec({3}, 3), InvalidInput);
  CHECK_THROWS_AS(IntersectionSpec({2, 1}, 4), InvalidInput);
  CHECK_THROWS_AS(IntersectionSpec({-1}, 4), InvalidInput);
}

TEST_CASE("distance multiset and validation") {
  Family f(6);
  f.insert(Subset(6));
  f.insert(Subset::of(6, {1, 2}));
  f.insert(Subset::of(6, {3, 4}));
  CHECK(distance_multiset(f) == std::vector<int>{2, 2, 4});
  CHECK(distance_set(f) == std::vector<int>{2, 4});

  CHECK(validate_family(f, DistanceSpec({2, 4})).ok);
  ValidationResult bad = validate_family(f, DistanceSpec({2}));
  CHECK(!bad.ok);
  REQUIRE(bad.violating.has_value());
  CHECK(distance(f[bad.violating->first], f[bad.violating->second]) == 4);
}

TEST_CASE("uniform intersection validation") {
  Family f(9);
  f.insert(Subset::of(9, {1, 2, 3}));
  f.insert(Subset::of(9, {1, 4, 5}));
  f.insert(Subset::of(9, {1, 6, 7}));
  CHECK(validate_family(f, IntersectionSpec({1}, 3)).ok);
  CHECK(!validate_family(f, IntersectionSpec({0}, 3)).ok);

  Family mixed(9);
  mixed.insert(Subset::of(9, {1, 2, 3}));
  mixed.insert(Subset::of(9, {4, 5}));
  ValidationResult vr = validate_family(mixed, IntersectionSpec({0}, 3));
  CHECK(!vr.ok);  // not uniform
}

TEST_CASE("sampled validation agrees with exact on moderate families") {
  Family f(12);
  for (std::uint64_t w = 0; w < (1u << 12); ++w) {
    if (__builtin_popcountll(w) <= 1) f.insert(Subset::from_word(12, w));
  }
  CHECK(validate_family(f, DistanceSpec({1, 2})).ok);
  CHECK(validate_family_sampled(f, DistanceSpec({1, 2})).ok);
  CHECK(!validate_family_sampled(f, DistanceSpec({1}), 3000, 100000, 5).ok);
}

TEST_CASE("translate preserves distances and fixes a chosen member to empty") {
  Family f(8);
  f.insert(Subset::of(8, {1, 2, 5}));
  f.insert(Subset::of(8, {2, 5, 7}));
  f.insert(Subset::of(8, {1, 7}));
  Family g = translate(f, Subset::of(8, {1, 2, 5}));
  CHECK(g.contains(Subset(8)));
  CHECK(distance_multiset(f) == distance_multiset(g));
  CHECK(g.size() == f.size());
}

TEST_CASE("family io round trip and canonical bytes") {
  Family f(5);
  f.insert(Subset::of(5, {3, 1}));
  f.insert(Subset(5));
  f.insert(Subset::of(5, {2}));
  std::string text = write_family(f);
  CHECK(text == R"({"n":5,"sets":[[],[2],[1,3]]})");
  Family g = read_family(text);
  CHECK(f == g);

  Family h = read_family(R"({"sets":[[2],[1,3]],"n":5})");
  CHECK(h.size() == 2);

  CHECK_THROWS_AS(read_family("not json"), InvalidInput);
  CHECK_THROWS_AS(read_family(R"({"n":0,"sets":[]})"), InvalidInput);
  CHECK_THROWS_AS(read_family(R"({"n":3,"sets":[[4]]})"), InvalidInput);
  CHECK_THROWS_AS(read_family(R"({"n":3,"sets":[[1,1]]})"), InvalidInput);
  CHECK_THROWS_AS(read_family(R"({"n":3,"sets":[[1],[1]]})"), InvalidInput);
  CHECK_THROWS_AS(read_family(R"([1,2])"), InvalidInput);
  CHECK_THROWS_AS(read_family_file("/nonexistent/path/family.json"), ResourceLimit);
}

TEST_CASE("intersection_sizes reports distinct sorted values") {
  Family f(9);
  f.insert(Subset::of(9, {1, 2, 3, 4, 5}));
  f.insert(Subset::of(9, {1, 2, 3, 6, 7}));
  f.insert(Subset::of(9, {4, 5, 6, 7, 8}));
  auto is = intersection_sizes(f);
  CHECK(is == std::vector<int>{2, 3});
}
