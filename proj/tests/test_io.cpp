#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "fano/io.hpp"

using namespace fano;
using nlohmann::json;

namespace {

std::string tmpfile_with(const std::string& body) {
  static int n = 0;
  std::string path = "io_test_" + std::to_string(n++) + ".tmp";
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("text format parses column vertices") {
  std::istringstream in(
      "3 4\n"
      "1 0 0 -1\n"
      "0 1 0 -1\n"
      "0 0 1 -1\n");
  LatticePolytope3 p = parse_polytope_text(in);
  CHECK(p.verts.size() == 4);
  CHECK(p.facets.size() == 4);
  CHECK(is_reflexive(p));
}

TEST_CASE("text format errors carry line numbers") {
  auto line_of = [](const std::string& body) -> std::string {
    std::istringstream in(body);
    try {
      parse_polytope_text(in);
    } catch (const input_error& e) {
      return e.what();
    }
    return "";
  };
  CHECK(line_of("4 4\n") .find("line 1") != std::string::npos);
  CHECK(line_of("3 4\n1 0 0 -1\n0 1 0\n").find("line 3") != std::string::npos);
  CHECK(line_of("3 4\n1 0 0 -1\n0 1 x -1\n").find("line 3") !=
        std::string::npos);
  CHECK(line_of("3 3\n1 0 0\n0 1 0\n0 0 1\n") != "");  // not full-dimensional
}

TEST_CASE("json and batch-json inputs") {
  json one = {{"id", "simplex"},
              {"vertices", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}}};
  NamedPolytope np = parse_polytope_json(one);
  CHECK(np.id == "simplex");
  CHECK(np.poly.verts.size() == 4);

  std::string path = tmpfile_with(json{one, one}.dump());
  auto batch = read_polytopes(path, "batch-json");
  CHECK(batch.size() == 2);
  std::remove(path.c_str());

  CHECK_THROWS_AS(parse_polytope_json(json{{"id", "bad"}}), input_error);
  CHECK_THROWS_AS(read_polytopes("no_such_file.txt", "text"), input_error);
}

TEST_CASE("serialization shapes") {
  LatticePolytope3 p =
      convex_hull3({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}});
  Amd a;
  AmdOptions opt;
  opt.limit = 1;
  enumerate_amd(p, opt, [&](const Amd& got) {
    a = got;
    return false;
  });
  json ja = amd_json(a, verify_matching(p, a));
  CHECK(ja["facets"].size() == 4);
  CHECK(ja["match"]["pass"] == true);
  for (const auto& f : ja["facets"]) {
    CHECK(f.contains("decomposition"));
    CHECK(f["subdivision"].contains("cells"));
    CHECK(f["subdivision"].contains("edge_partitions"));
  }

  json ji = invariants_json(betti_numbers(p, a));
  for (const char* k : {"n", "q", "eY", "eYt", "eXeta", "picY", "sigma", "b2",
                        "b3", "degree", "h0", "t1dim"})
    CHECK(ji.contains(k));
  CHECK(ji["degree"] == 64);

  json jf = fan_json(refine_by_amd(p, a));
  CHECK(jf["rays"].size() == p.boundary_lattice_points().size());
  CHECK(jf["cones"].size() == 4);

  CHECK(bigint_json(BigInt(12)) == json(12));
  BigInt big = BigInt(1) << 100;
  CHECK(bigint_json(big) == json(big.str()));

  CHECK(amd_digest(a) == amd_digest(a));
  CHECK(!amd_digest(a).empty());
}
