#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ferrers/cli.hpp"
#include "ferrers/error.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run fpart(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int status = ferrers::cli::run(args, in, out, err);
  return {status, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = fs::temp_directory_path() / ("fpart_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("gen and recognize round trip through text") {
  auto g = fpart({"gen", "--family", "path", "2"});
  CHECK(g.status == 0);
  CHECK(g.out == "bip 1 1\n0 0\n");
  auto r = fpart({"recognize"}, g.out);
  CHECK(r.status == 0);
  CHECK(r.out.rfind("ferrers\n", 0) == 0);

  auto m = fpart({"gen", "--family", "crown", "3", "--matrix"});
  CHECK(m.out == "011\n101\n110\n");
  auto rm = fpart({"recognize"}, m.out);
  CHECK(rm.out == "not_ferrers\nwitness: (u0,v1,u1,v0)\n");
}

TEST_CASE("recognize a family directly") {
  auto r = fpart({"recognize", "--family", "crown", "3"});
  CHECK(r.status == 0);
  CHECK(r.out == "not_ferrers\nwitness: (u0,v1,u1,v0)\n");
}

TEST_CASE("fp prints the partition and sends stats to stderr") {
  auto r = fpart({"fp", "--family", "cycle", "8"});
  CHECK(r.status == 0);
  CHECK(r.out.rfind("fp = 3\nparts 3\n", 0) == 0);
  CHECK(r.out.find("stats:") == std::string::npos);
  CHECK(r.err.rfind("stats: nodes=", 0) == 0);

  auto again = fpart({"fp", "--family", "cycle", "8", "--jobs", "3"});
  CHECK(again.out == r.out);

  auto capped = fpart({"fp", "--family", "crown", "7"});
  CHECK(capped.status == 2);
  CHECK(capped.err.find("error:") == 0);
}

TEST_CASE("bounds output") {
  auto r = fpart({"bounds", "--family", "crown", "4", "--exact-chi"});
  CHECK(r.status == 0);
  CHECK(r.out.find("nu_ind = 2\n") != std::string::npos);
  CHECK(r.out.find("chi_conflict = 2\n") != std::string::npos);
  auto with_fp = fpart({"bounds", "--family", "crown", "4", "--fp"});
  CHECK(with_fp.out.find("fp = 2\n") != std::string::npos);
  CHECK(fpart({"bounds", "--family", "crown", "4", "--table"}).status == 0);
}

TEST_CASE("union family syntax") {
  auto r = fpart({"fp", "--family", "union", "cycle", "8", "path", "4"});
  CHECK(r.status == 0);
  CHECK(r.out.rfind("fp = 4\n", 0) == 0);
}

TEST_CASE("check and staircase on files") {
  auto graph = write_temp("c8.txt", fpart({"gen", "--family", "cycle", "8"}).out);
  auto fp_out = fpart({"fp", "--input", graph}).out;
  auto partition = write_temp("c8_part.txt", fp_out.substr(fp_out.find('\n') + 1));
  auto ok = fpart({"check", "--graph", graph, "--partition", partition});
  CHECK(ok.status == 0);
  CHECK(ok.out == "ok\n");

  auto stair = fpart({"staircase", "--graph", graph, "--partition", partition, "--part", "0"});
  CHECK(stair.status == 0);
  CHECK(stair.out.rfind("rows:", 0) == 0);

  auto arcs = write_temp("c8_arcs.txt", "parts 2\npart 0: 0,0 1,0 1,1 2,1\npart 1: 2,2 3,2 3,3 0,3\n");
  auto bad = fpart({"check", "--graph", graph, "--partition", arcs});
  CHECK(bad.status == 1);
  CHECK(bad.out.rfind("reject: not_ferrers part 0", 0) == 0);
  auto bad_stair = fpart({"staircase", "--graph", graph, "--partition", arcs, "--part", "1"});
  CHECK(bad_stair.status == 1);

  auto missing = write_temp("c8_missing.txt", "parts 1\npart 0: 0,0 1,0\n");
  auto miss = fpart({"check", "--graph", graph, "--partition", missing});
  CHECK(miss.status == 1);
  CHECK(miss.out.rfind("reject: missing_edge", 0) == 0);

  auto foreign = write_temp("c8_foreign.txt", "parts 1\npart 0: 0,1\n");
  CHECK(fpart({"check", "--graph", graph, "--partition", foreign}).status == 2);
  CHECK(fpart({"staircase", "--graph", graph, "--partition", partition, "--part", "9"}).status == 2);
}

TEST_CASE("tables") {
  auto paths = fpart({"table", "paths", "--max-n", "13"});
  CHECK(paths.status == 0);
  CHECK(paths.out.find("all rows match") != std::string::npos);
  CHECK(fpart({"table", "crown", "--max-n", "6"}).status == 0);
  CHECK(fpart({"table", "ladders", "--max-n", "8"}).status == 0);
  CHECK(fpart({"table", "kmn", "--max-n", "4"}).status == 0);
  CHECK(fpart({"table", "gap", "--max-n", "3"}).status == 0);
}

TEST_CASE("input errors exit non-zero") {
  CHECK(fpart({"recognize"}, "bip 2 2\n0 5\n").status == 2);
  CHECK(fpart({"recognize"}, "10\n1\n").status == 2);
  CHECK(fpart({"gen", "--family", "cycle", "7"}).status == 2);
  CHECK(fpart({"gen", "--family", "hexagon", "3"}).status == 2);
  CHECK(fpart({"recognize", "--input", "/nonexistent/graph.txt"}).status == 2);
  CHECK(fpart({"frobnicate"}).status != 0);
  CHECK(fpart({}).status != 0);
  CHECK_THROWS_AS(ferrers::cli::parse_family({"path"}), ferrers::InputError);
  CHECK_THROWS_AS(ferrers::cli::parse_family({"path", "4", "extra"}), ferrers::InputError);
}

TEST_CASE("output is deterministic") {
  for (auto args : std::vector<std::vector<std::string>>{{"fp", "--family", "ladder", "5"},
                                                         {"bounds", "--family", "kmn", "4", "4", "2"},
                                                         {"recognize", "--family", "crown", "5"}}) {
    auto a = fpart(args);
    auto b = fpart(args);
    CHECK(a.out == b.out);
    CHECK(a.status == b.status);
  }
}

}  // TEST_SUITE
