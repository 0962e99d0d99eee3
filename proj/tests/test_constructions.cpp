#include <doctest.h>

#include "ferrers/constructions.hpp"
#include "ferrers/error.hpp"
#include "ferrers/recognition.hpp"
#include "ferrers/solver.hpp"
#include "oracles.hpp"

using namespace ferrers;

namespace {

std::vector<std::size_t> sizes(const EdgePartition& p) {
  std::vector<std::size_t> s;
  for (const auto& part : p.parts()) s.push_back(part.size());
  return s;
}

bool all_ferrers(const BipartiteGraph& g, const EdgePartition& p) {
  for (const auto& part : p.parts())
    if (!is_ferrers(g, part).ferrers) return false;
  return true;
}

}  // namespace

TEST_SUITE("constructions") {

TEST_CASE("path partitions") {
  auto g7 = generate(FamilySpec::path(7));
  auto p7 = path_partition(7);
  // Edge ids of a path follow the path order.
  CHECK(p7.parts() == std::vector<std::vector<EdgeId>>{{0, 1, 2}, {3, 4, 5}});
  CHECK(verify_partition(g7, p7).ok());

  CHECK(path_partition(2).part_count() == 1);

  auto g13 = generate(FamilySpec::path(13));
  auto p13 = path_partition(13);
  CHECK(p13.part_count() == 4);
  CHECK(all_ferrers(g13, p13));

  CHECK_THROWS_AS(path_partition(1), InputError);
}

TEST_CASE("cycle partitions") {
  auto p8 = cycle_partition(8);
  CHECK(sizes(p8) == std::vector<std::size_t>{3, 3, 2});
  CHECK(verify_partition(generate(FamilySpec::cycle(8)), p8).ok());
  CHECK(cycle_partition(6).part_count() == 2);

  auto p4 = cycle_partition(4);
  CHECK(p4.part_count() == 2);
  CHECK(all_ferrers(generate(FamilySpec::cycle(4)), p4));

  CHECK_THROWS_AS(cycle_partition(7), InputError);
  CHECK_THROWS_AS(cycle_partition(2), InputError);
}

TEST_CASE("crown partitions") {
  auto g4 = generate(FamilySpec::crown(4));
  auto p4 = crown_partition(4);
  CHECK(sizes(p4) == std::vector<std::size_t>{6, 6});
  CHECK(ferrers_staircase(g4, p4.part(0)).row_lengths() == std::vector<int>{3, 2, 1, 0});
  CHECK(verify_partition(g4, p4).ok());

  CHECK(sizes(crown_partition(3)) == std::vector<std::size_t>{3, 3});
  CHECK(all_ferrers(generate(FamilySpec::crown(8)), crown_partition(8)));
  CHECK_THROWS_AS(crown_partition(2), InputError);
}

TEST_CASE("K_{m,n} minus a matching") {
  auto g441 = generate(FamilySpec::complete_minus_matching(4, 4, 1));
  CHECK(kmn_minus_matching_partition(4, 4, 1).part_count() == 1);
  CHECK(is_ferrers(g441).ferrers);

  auto p440 = kmn_minus_matching_partition(4, 4, 0);
  REQUIRE(p440.part_count() == 1);
  CHECK(p440.part(0).size() == 16);

  auto g563 = generate(FamilySpec::complete_minus_matching(5, 6, 3));
  auto p563 = kmn_minus_matching_partition(5, 6, 3);
  CHECK(p563.part_count() == 2);
  CHECK(all_ferrers(g563, p563));
  CHECK(verify_partition(g563, p563).ok());

  CHECK_THROWS_AS(kmn_minus_matching_partition(3, 4, 4), InputError);
}

TEST_CASE("ladder partitions") {
  auto p4 = ladder_partition(4);
  CHECK(p4.part_count() == 2);
  CHECK(verify_partition(generate(FamilySpec::ladder(4)), p4).ok());
  CHECK(ladder_partition(1).part_count() == 1);

  auto g6 = generate(FamilySpec::ladder(6));
  auto p6 = ladder_partition(6);
  CHECK(p6.part_count() == 3);
  CHECK(verify_partition(g6, p6).ok());
  CHECK(fp_exact(g6).value == 3);
}

TEST_CASE("union partitions") {
  auto c8 = generate(FamilySpec::cycle(8));
  std::vector<std::pair<BipartiteGraph, EdgePartition>> two_c8 = {{c8, cycle_partition(8)}, {c8, cycle_partition(8)}};
  auto [g, p] = union_partition(two_c8);
  CHECK(p.part_count() == 6);
  CHECK(verify_partition(g, p).ok());
  for (const auto& part : p.parts()) CHECK(count_nontrivial_components(g, part) == 1);

  std::vector<std::pair<BipartiteGraph, EdgePartition>> single = {{c8, cycle_partition(8)}};
  auto [g1, p1] = union_partition(single);
  CHECK(g1 == c8);
  CHECK(p1 == cycle_partition(8));

  auto p4 = generate(FamilySpec::path(4));
  std::vector<std::pair<BipartiteGraph, EdgePartition>> two_p4 = {{p4, path_partition(4)}, {p4, path_partition(4)}};
  auto [gp, pp] = union_partition(two_p4);
  CHECK(pp.part_count() == 2);
  CHECK(fp_exact(gp).value == 2);

  SUBCASE("overlapping placements are rejected") {
    auto host = generate(FamilySpec::disjoint_union({FamilySpec::path(4), FamilySpec::path(4)}));
    std::vector<PlacedPartition> bad = {{&p4, path_partition(4), 0, 0}, {&p4, path_partition(4), 1, 2}};
    CHECK_THROWS_AS(union_partition(host, bad), InputError);
    std::vector<PlacedPartition> good = {{&p4, path_partition(4), 0, 0}, {&p4, path_partition(4), 2, 2}};
    CHECK(verify_partition(host, union_partition(host, good)).ok());
  }
}

TEST_CASE("constructions verify across ranges") {
  for (int n = 2; n <= 300; ++n) {
    auto p = path_partition(n);
    CHECK(p.part_count() == (n + 1) / 3);
    CHECK(verify_partition(generate(FamilySpec::path(n)), p).ok());
  }
  for (int n = 4; n <= 300; n += 2) {
    auto p = cycle_partition(n);
    CHECK(p.part_count() == (n + 2) / 3);
    CHECK(verify_partition(generate(FamilySpec::cycle(n)), p).ok());
  }
  for (int n = 3; n <= 40; ++n) CHECK(verify_partition(generate(FamilySpec::crown(n)), crown_partition(n)).ok());
  for (int n = 1; n <= 200; ++n) {
    auto p = ladder_partition(n);
    CHECK(p.part_count() == (n + 1) / 2);
    CHECK(verify_partition(generate(FamilySpec::ladder(n)), p).ok());
  }
  for (int m = 1; m <= 8; ++m)
    for (int n = 1; n <= 8; ++n)
      for (int t = 0; t <= std::min(m, n); ++t) {
        auto p = kmn_minus_matching_partition(m, n, t);
        CHECK(p.part_count() == (m * n == t ? 0 : t <= 1 ? 1 : 2));
        CHECK(verify_partition(generate(FamilySpec::complete_minus_matching(m, n, t)), p).ok());
      }
}

TEST_CASE("constructions are optimal on solver-sized instances") {
  for (int n = 2; n <= 13; ++n) CHECK(path_partition(n).part_count() == fp_exact(generate(FamilySpec::path(n))).value);
  // C4 is K22, a single Ferrers part, so the block construction is only optimal from n = 6.
  CHECK(fp_exact(generate(FamilySpec::cycle(4))).value == 1);
  for (int n = 6; n <= 14; n += 2)
    CHECK(cycle_partition(n).part_count() == fp_exact(generate(FamilySpec::cycle(n))).value);
  for (int n = 3; n <= 6; ++n) CHECK(fp_exact(generate(FamilySpec::crown(n))).value == 2);
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n)
      for (int t = 0; t <= std::min(m, n); ++t)
        CHECK(kmn_minus_matching_partition(m, n, t).part_count() ==
              fp_exact(generate(FamilySpec::complete_minus_matching(m, n, t))).value);
  for (int n = 1; n <= 6; ++n)
    CHECK(ladder_partition(n).part_count() == fp_exact(generate(FamilySpec::ladder(n))).value);
  auto u = generate(FamilySpec::disjoint_union({FamilySpec::path(5), FamilySpec::cycle(6), FamilySpec::path(3)}));
  REQUIRE(u.edge_count() <= 12);
  CHECK(fp_exact(u).value == path_partition(5).part_count() + cycle_partition(6).part_count() +
                                 path_partition(3).part_count());
}

TEST_CASE("connected Ferrers edge subsets of P12 and C12 have at most 3 edges") {
  for (auto spec : {FamilySpec::path(12), FamilySpec::cycle(12)}) {
    auto g = generate(spec);
    int largest = 0;
    for (unsigned long mask = 1; mask < (1ul << g.edge_count()); ++mask) {
      if (!oracle::connected_subset(g, mask)) continue;
      std::vector<EdgeId> part;
      for (EdgeId i = 0; i < g.edge_count(); ++i)
        if (mask >> i & 1) part.push_back(i);
      if (is_ferrers(g, part).ferrers) largest = std::max(largest, static_cast<int>(part.size()));
    }
    CHECK(largest == 3);
  }
}

}  // TEST_SUITE
