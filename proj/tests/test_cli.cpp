#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "../tools/cli.hpp"
#include "fullgraph/designs.hpp"
#include "fullgraph/serialize.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
  ordered_json json() const { return ordered_json::parse(out); }
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  Run r;
  r.code = fullgraph::cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / "fullgraph_cli_test";
  fs::create_directories(p);
  return p / name;
}

}  // namespace

TEST_CASE("construct") {
  Run r = run({"construct", "--theorem", "cyclic", "--patterns", "K3,E3"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["order"] == 8);
  CHECK(r.json()["verified"] == true);
  CHECK(r.json()["recipe"]["theorem_tag"] == "cyclic");

  r = run({"construct", "--theorem", "star", "--m", "3", "--n", "5"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["order"] == 9);
  CHECK(r.json()["recipe"]["parameters"]["k"] == 2);
  CHECK(r.json()["recipe"]["parameters"]["r"] == 3);

  r = run({"construct", "--theorem", "design", "--q", "3", "--patterns", "K3,P3,E3,K2+K1"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["order"] == 9);
  CHECK(r.json()["verified"] == true);

  const fs::path g6 = scratch("p3.g6"), recipe = scratch("p3.json");
  r = run({"construct", "--theorem", "h_vs_empty", "--patterns", "P3", "--n", "9", "--out", g6.string(), "--recipe",
           recipe.string()});
  REQUIRE(r.code == 0);
  CHECK(r.json()["order"] == 15);
  std::ifstream rf(recipe);
  CHECK(ordered_json::parse(rf)["claimed_order"] == 15);

  // the written graph verifies through the verify subcommand
  r = run({"verify", g6.string(), "--patterns", "P3,E9"});
  CHECK(r.code == 0);

  r = run({"construct", "--theorem", "cyclic", "--patterns", "K3,E3", "--no-verify"});
  CHECK(r.code == 0);
  CHECK_FALSE(r.json().contains("verified"));

  CHECK(run({"construct", "--theorem", "star", "--m", "5", "--n", "3"}).code == 2);
  CHECK(run({"construct", "--theorem", "h_vs_empty", "--patterns", "P3", "--n", "9", "--r", "2"}).code == 2);
  CHECK(run({"construct", "--theorem", "bogus", "--patterns", "K2"}).code == 2);
  CHECK(run({"construct", "--theorem", "star", "--m", "3"}).code == 2);
}

TEST_CASE("construct with an external design") {
  const fs::path path = scratch("plane3.json");
  REQUIRE(run({"design", "--q", "3", "--out", path.string()}).code == 0);
  Run r = run({"construct", "--theorem", "design", "--design-file", path.string(), "--patterns", "K3,E3"});
  CHECK(r.code == 0);
  CHECK(r.json()["order"] == 9);

  r = run({"construct", "--theorem", "design", "--design-file", "-", "--patterns", "K2"}, "{\"q\": 3, \"points\": 9}");
  CHECK(r.code == 2);
}

TEST_CASE("verify") {
  Run r = run({"verify", "-", "--patterns", "K2,E2"}, "Ch\n");
  CHECK(r.code == 0);
  CHECK(r.json()["verdict"] == true);

  r = run({"verify", "-", "--patterns", "K2,E2"}, "Bg\n");  // P3
  CHECK(r.code == 1);
  CHECK(r.json()["verdict"] == false);
  CHECK(r.json()["patterns"][1]["uncovered"] == ordered_json::array({1}));

  r = run({"verify", "-", "--patterns", "K2"}, "A\n");
  CHECK(r.code == 2);
  CHECK(r.err.find("at byte") != std::string::npos);

  CHECK(run({"verify", "-", "--patterns", "Q7"}, "Ch\n").code == 2);
  CHECK(run({"verify", "/nonexistent/host.g6", "--patterns", "K2"}).code == 2);
}

TEST_CASE("bound") {
  Run r = run({"bound", "--egh", "3", "3"});
  REQUIRE(r.code == 0);
  bool found = false;
  const ordered_json egh = r.json();
  for (const auto& e : egh["entries"])
    if (e["name"] == "egh_formula") {
      CHECK(e["value"] == 8);
      found = true;
    }
  CHECK(found);

  r = run({"bound", "--star", "3", "5"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["best_lower"] == 9);
  CHECK(r.json()["best_upper"] == 9);

  r = run({"bound", "--patterns", "P3", "--n", "9"});
  REQUIRE(r.code == 0);
  std::map<std::string, long long> v;
  const ordered_json p3 = r.json();
  for (const auto& e : p3["entries"])
    if (e["applicable"] == true) v[e["name"].get<std::string>()] = e["value"].get<long long>();
  CHECK(v["h_vs_empty_bound"] == 17);
  CHECK(v["h_vs_empty_construction"] == 15);
  CHECK(v["general_lower_bound"] == 14);

  CHECK(run({"bound", "--egh", "3", "3", "--star", "3", "5"}).code == 2);
  CHECK(run({"bound"}).code == 2);
  CHECK(run({"bound", "--egh", "3"}).code == 2);
}

TEST_CASE("search") {
  const fs::path cache = scratch("cache");
  fs::remove_all(cache);
  Run r = run({"search", "--patterns", "K2,E2", "--cache-dir", cache.string()});
  REQUIRE(r.code == 0);
  CHECK(r.json()["f"] == 4);
  const std::string first = r.out;
  r = run({"search", "--patterns", "K2,E2", "--cache-dir", cache.string()});
  CHECK(r.out == first);
  CHECK(r.err.find("cache hit") != std::string::npos);
  CHECK(run({"search", "--patterns", "E2,K2", "--no-cache"}).json()["f"] == 4);

  r = run({"search", "--patterns", "K4,E4", "--max-order", "12", "--no-cache"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["upper_bound_only"] == true);
  CHECK(r.json()["exact"] == false);

  r = run({"search", "--patterns", "K3,E3", "--max-order", "5", "--no-cache", "--lower", "0"});
  CHECK(r.code == 1);
  CHECK(r.json()["f"].is_null());

  CHECK(run({"search", "--patterns", "K2,E2", "--lower", "7", "--max-order", "5", "--no-cache"}).code == 2);

  r = run({"search", "--patterns", "K2,E2", "--no-cache", "--timing"});
  CHECK(r.json().contains("wall_seconds"));
  fs::remove_all(cache);
}

TEST_CASE("design") {
  Run r = run({"design", "--q", "3"});
  REQUIRE(r.code == 0);
  const fullgraph::ResolvableDesign d3 = fullgraph::design_from_json(r.json());
  CHECK(d3 == fullgraph::affine_plane(3));
  CHECK(fullgraph::validate_design(d3).valid());

  r = run({"design", "--q", "9"});
  REQUIRE(r.code == 0);
  CHECK(fullgraph::validate_design(fullgraph::design_from_json(r.json())).valid());

  r = run({"design", "--q", "6"});
  CHECK(r.code == 2);
  CHECK(r.err.find("61") != std::string::npos);
}

TEST_CASE("usage") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"search", "--help"}).out.find("FULLGRAPH_CACHE") != std::string::npos);
}
