#include <doctest.h>

#include <random>

#include "ferrers/constructions.hpp"
#include "ferrers/error.hpp"
#include "ferrers/recognition.hpp"
#include "oracles.hpp"

using namespace ferrers;

namespace {

std::vector<EdgeId> ids(const BipartiteGraph& g, std::vector<Edge> edges) {
  std::vector<EdgeId> out;
  for (auto e : edges) out.push_back(*g.edge_id(e.u, e.v));
  return out;
}

}  // namespace

TEST_SUITE("recognition") {

TEST_CASE("complete bipartite graphs are Ferrers") {
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n) {
      auto g = generate(FamilySpec::complete_minus_matching(m, n, 0));
      auto cert = is_ferrers(g);
      CHECK(cert.ferrers);
      CHECK(certificate_holds(g, oracle::all_edges(g), cert));
    }
}

TEST_CASE("opposite edges of K22 give the witness (u0,v1,u1,v0)") {
  auto g = generate(FamilySpec::complete_minus_matching(2, 2, 0));
  auto part = ids(g, {{0, 1}, {1, 0}});
  auto cert = is_ferrers(g, part);
  REQUIRE_FALSE(cert.ferrers);
  CHECK(*cert.witness == TwoK2Witness{0, 1, 1, 0});
  CHECK(certificate_holds(g, part, cert));
}

TEST_CASE("the two end edges of P5 are not Ferrers") {
  auto g = generate(FamilySpec::path(5));
  auto part = ids(g, {{0, 0}, {2, 1}});
  auto cert = is_ferrers(g, part);
  CHECK_FALSE(cert.ferrers);
  CHECK(certificate_holds(g, part, cert));
  CHECK_FALSE(is_ferrers(g).ferrers);
  CHECK(is_ferrers(generate(FamilySpec::path(4))).ferrers);
}

TEST_CASE("crown(3) witness is (u0,v1,u1,v0)") {
  auto cert = is_ferrers(generate(FamilySpec::crown(3)));
  REQUIRE_FALSE(cert.ferrers);
  CHECK(*cert.witness == TwoK2Witness{0, 1, 1, 0});
  CHECK(cert.witness->to_string() == "(u0,v1,u1,v0)");
}

TEST_CASE("bad edge ids are rejected") {
  auto g = generate(FamilySpec::path(4));
  std::vector<EdgeId> out_of_range{0, 7};
  std::vector<EdgeId> repeated{1, 1};
  CHECK_THROWS_AS(is_ferrers(g, out_of_range), InputError);
  CHECK_THROWS_AS(is_ferrers(g, repeated), InputError);
  CHECK_THROWS_AS(count_nontrivial_components(g, out_of_range), InputError);
}

TEST_CASE("staircase of the upper triangle of crown(4)") {
  auto g = generate(FamilySpec::crown(4));
  std::vector<EdgeId> upper;
  for (EdgeId id = 0; id < g.edge_count(); ++id)
    if (g.edge(id).u < g.edge(id).v) upper.push_back(id);
  auto s = ferrers_staircase(g, upper);
  CHECK(s.row_lengths() == std::vector<int>{3, 2, 1, 0});
  CHECK(s.row_perm == std::vector<int>{0, 1, 2, 3});
  CHECK(to_matrix_text(s.matrix) == "1110\n1100\n1000\n0000\n");
}

TEST_CASE("staircase of a star and of K33") {
  BipartiteGraph star(3, 4, {{1, 0}, {1, 1}, {1, 2}, {1, 3}});
  auto s = ferrers_staircase(star, oracle::all_edges(star));
  CHECK(s.row_lengths() == std::vector<int>{4, 0, 0});
  CHECK(s.row_perm.front() == 1);

  auto k33 = generate(FamilySpec::complete_minus_matching(3, 3, 0));
  auto full = ferrers_staircase(k33, oracle::all_edges(k33));
  CHECK(to_matrix_text(full.matrix) == "111\n111\n111\n");
}

TEST_CASE("staircase of a non-Ferrers part carries the witness") {
  auto g = generate(FamilySpec::crown(3));
  try {
    (void)ferrers_staircase(g, oracle::all_edges(g));
    FAIL("expected NotFerrersError");
  } catch (const NotFerrersError& e) {
    CHECK(e.witness() == TwoK2Witness{0, 1, 1, 0});
  }
}

TEST_CASE("count_nontrivial_components") {
  auto g = generate(FamilySpec::complete_minus_matching(2, 2, 0));
  CHECK(count_nontrivial_components(g, ids(g, {{0, 0}, {1, 1}})) == 2);
  CHECK(count_nontrivial_components(g, std::vector<EdgeId>{}) == 0);
  CHECK(count_nontrivial_components(g, oracle::all_edges(g)) == 1);
}

TEST_CASE("recognition agrees with 4-vertex enumeration; certificates verify") {
  std::mt19937 rng(11);
  int positives = 0, negatives = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    auto g = oracle::random_bipartite(rng, 6, 0.6);
    auto part = oracle::random_part(rng, g, 10);
    auto cert = is_ferrers(g, part);
    CHECK(cert.ferrers == !oracle::has_induced_2k2(g, part));
    CHECK(certificate_holds(g, part, cert));
    if (cert.ferrers) {
      ++positives;
      CHECK(count_nontrivial_components(g, part) <= 1);
      auto s = ferrers_staircase(g, part);
      auto len = s.row_lengths();
      CHECK(std::is_sorted(len.rbegin(), len.rend()));
      int ones = 0;
      for (auto b : s.matrix.bits) ones += b;
      CHECK(ones == static_cast<int>(part.size()));
      int prefix_ones = 0;
      for (int l : len) prefix_ones += l;
      CHECK(prefix_ones == ones);
    } else {
      ++negatives;
    }
  }
  CHECK(positives > 100);
  CHECK(negatives > 100);
}

TEST_CASE("tampered certificates fail the check") {
  auto g = generate(FamilySpec::crown(4));
  auto all = oracle::all_edges(g);
  auto cert = is_ferrers(g, all);
  REQUIRE_FALSE(cert.ferrers);
  auto bad = cert;
  std::swap(bad.witness->v, bad.witness->v2);
  CHECK_FALSE(certificate_holds(g, all, bad));

  auto k = generate(FamilySpec::complete_minus_matching(3, 3, 1));
  auto kall = oracle::all_edges(k);
  auto pos = is_ferrers(k, kall);
  REQUIRE(pos.ferrers);
  CHECK(certificate_holds(k, kall, pos));
  std::reverse(pos.u_order.begin(), pos.u_order.end());
  CHECK_FALSE(certificate_holds(k, kall, pos));
}

}  // TEST_SUITE
