#include <catch_amalgamated.hpp>

#include <set>

#include "vll/partition.hpp"

using namespace vll;

TEST_CASE("canonical form", "[partition]") {
  std::size_t const raw[] = {7, 3, 7, 9};
  auto const        p     = Partition::from_blocks(raw);
  CHECK(p.block(0) == 0);
  CHECK(p.block(1) == 1);
  CHECK(p.block(2) == 0);
  CHECK(p.block(3) == 2);
  CHECK(p.number_of_blocks() == 3);
  CHECK(p.related(0, 2));
  CHECK_FALSE(p.related(0, 1));
  CHECK(p.classes()
        == std::vector<std::vector<std::size_t>>{{0, 2}, {1}, {3}});
}

TEST_CASE("construction from classes and pairs", "[partition]") {
  auto const p = Partition::from_classes(5, {{1, 3}, {2, 4}});
  CHECK(p.number_of_blocks() == 3);
  CHECK_THROWS_AS(Partition::from_classes(4, {{0, 1}, {1, 2}}),
                  std::invalid_argument);
  std::pair<std::size_t, std::size_t> const pairs[] = {{0, 1}, {1, 2}};
  auto const q = Partition::from_pairs(4, pairs);
  CHECK(q.related(0, 2));
  CHECK(q.number_of_blocks() == 2);
}

TEST_CASE("join and meet", "[partition]") {
  auto const a = Partition::from_classes(4, {{0, 1}});
  auto const b = Partition::from_classes(4, {{1, 2}});
  CHECK(join(a, b) == Partition::from_classes(4, {{0, 1, 2}}));
  CHECK(meet(a, b) == Partition::discrete(4));
  CHECK(meet(join(a, b), a) == a);
  CHECK(a.refines(join(a, b)));
  CHECK_FALSE(join(a, b).refines(a));
  CHECK(Partition::discrete(4).refines(a));
  CHECK(a.refines(Partition::full(4)));
  CHECK_THROWS_AS(join(a, Partition::discrete(3)), std::invalid_argument);
}

TEST_CASE("enumeration yields Bell numbers", "[partition]") {
  std::uint64_t const bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
  for (std::size_t n = 0; n < std::size(bell); ++n) {
    std::set<Partition> seen;
    std::size_t         count = 0;
    for_each_partition(n, [&](Partition const& p) {
      ++count;
      seen.insert(p);
    });
    CHECK(count == bell[n]);
    CHECK(seen.size() == bell[n]);
    CHECK(bell_number(n) == bell[n]);
  }
  CHECK(bell_number(25) == 4638590332229999353ULL);
}

TEST_CASE("partition lattice axioms", "[partition][property]") {
  std::vector<Partition> all;
  for_each_partition(4, [&](Partition const& p) { all.push_back(p); });
  for (auto const& a : all) {
    CHECK(join(a, a) == a);
    CHECK(meet(a, a) == a);
    for (auto const& b : all) {
      REQUIRE(join(a, b) == join(b, a));
      REQUIRE(meet(a, b) == meet(b, a));
      REQUIRE(join(a, meet(a, b)) == a);
      REQUIRE(meet(a, join(a, b)) == a);
      REQUIRE(a.refines(b) == (meet(a, b) == a));
      for (auto const& c : all) {
        REQUIRE(join(join(a, b), c) == join(a, join(b, c)));
        REQUIRE(meet(meet(a, b), c) == meet(a, meet(b, c)));
      }
    }
  }
}
