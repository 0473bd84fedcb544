#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <hemilat/cli.hpp>

#include "test_support.hpp"

using namespace hemilat;

namespace {

struct CliResult {
  int exit_code;
  std::string out;
  std::string err;

  json parsed() const { return json::parse(out); }
};

CliResult run_cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(std::move(args), in, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture_json(const std::string& name) {
  CliResult r = run_cli({"fixtures", "--name", name});
  REQUIRE(r.exit_code == 0);
  return r.out;
}

}  // namespace

TEST_CASE("fixtures: listing and validity") {
  CliResult list = run_cli({"fixtures"});
  REQUIRE(list.exit_code == 0);
  auto names = list.parsed()["fixtures"].get<std::vector<std::string>>();
  CHECK(names.size() == 50);  // 7 semilattices, 42 kind variants, paper5
  for (const auto& name : names) {
    CliResult r = run_cli({"fixtures", "--name", name});
    REQUIRE(r.exit_code == 0);
    ParsedAlgebra parsed = parse_algebra(r.parsed());  // re-validates
    CHECK(parsed.base.size() >= 1);
  }
  CHECK(run_cli({"fixtures", "--name", "B5"}).exit_code == 2);
}

TEST_CASE("the paper5 fixture reproduces the published table cell for cell") {
  json j = json::parse(fixture_json("paper5"));
  CHECK(j["labels"] == json({"0", "a", "b", "c", "1"}));
  // rows 0, a, b, c, 1 against columns in the same order
  CHECK(j["imp"] == json({{4, 0, 0, 0, 0},
                          {0, 4, 0, 3, 1},
                          {0, 0, 4, 3, 2},
                          {0, 3, 3, 4, 3},
                          {0, 1, 2, 3, 4}}));
}

TEST_CASE("JSON round-trip re-validates and re-classifies identically") {
  for (const HemiAlgebra& alg : fixtures::hemi_corpus()) {
    ParsedAlgebra back = parse_algebra(algebra_to_json(alg));
    REQUIRE(back.hemi.has_value());
    CHECK(back.hemi->same_table(alg));
    CHECK(report_to_json(classify(*back.hemi)) == report_to_json(classify(alg)));
  }
}

TEST_CASE("classify pipeline on paper5") {
  CliResult r = run_cli({"classify"}, fixture_json("paper5"));
  REQUIRE(r.exit_code == 0);
  json j = r.parsed();
  CHECK(j["symmetric"] == true);
  CHECK(j["condition_s"] == false);
  CHECK(j["witnesses"]["condition_s"] == json({1, 2}));
}

TEST_CASE("congruences pipeline") {
  SECTION("trivial algebra has one congruence") {
    CliResult r = run_cli({"congruences"}, fixture_json("trivial-order-meet"));
    REQUIRE(r.exit_code == 0);
    CHECK(r.parsed()["congruences"].size() == 1);
  }
  SECTION("B4 discrete-zero has exactly identity and full") {
    CliResult r = run_cli({"congruences"}, fixture_json("B4-discrete-zero"));
    REQUIRE(r.exit_code == 0);
    json j = r.parsed();
    REQUIRE(j["congruences"].size() == 2);
    CHECK(j["congruences"][0]["filter"] == json({3}));
    CHECK(j["congruences"][1]["blocks"] == json({{0, 1, 2, 3}}));
  }
}

TEST_CASE("principal pipeline resolves labels") {
  CliResult r = run_cli({"principal", "--pair", "x,1"}, fixture_json("B4-order-zero"));
  REQUIRE(r.exit_code == 0);
  json j = r.parsed();
  CHECK(j["pair"] == json({1, 3}));
  CHECK(j["blocks"] == json({{0, 1, 2, 3}}));
  // on an unlabeled algebra the tokens are plain indices
  json unlabeled = json::parse(fixture_json("B4-order-zero"));
  unlabeled.erase("labels");
  CliResult by_index = run_cli({"principal", "--pair", "1,3"}, unlabeled.dump());
  CHECK(by_index.parsed()["blocks"] == j["blocks"]);
  CHECK(by_index.parsed()["pair"] == j["pair"]);
  CHECK(run_cli({"principal", "--pair", "z,1"}, fixture_json("B4-order-zero")).exit_code == 2);
}

TEST_CASE("build writes the requested implication") {
  CliResult r = run_cli({"build", "--kind", "order-zero"}, fixture_json("B4"));
  REQUIRE(r.exit_code == 0);
  CHECK(r.parsed()["imp"] == json::parse(fixture_json("B4-order-zero"))["imp"]);
  CHECK(run_cli({"build", "--kind", "nope"}, fixture_json("B4")).exit_code == 2);
}

TEST_CASE("symmetrize and roundtrip commands") {
  CliResult sym = run_cli({"symmetrize"}, fixture_json("B4-order-consequent"));
  REQUIRE(sym.exit_code == 0);
  CHECK(sym.parsed()["imp"] ==
        json({{3, 0, 0, 0}, {0, 3, 0, 1}, {0, 0, 3, 2}, {0, 1, 2, 3}}));

  CliResult good = run_cli({"roundtrip"}, fixture_json("B4-order-meet"));
  REQUIRE(good.exit_code == 0);
  CHECK(good.parsed()["forward"]["holds"] == true);

  CliResult bad = run_cli({"roundtrip"}, fixture_json("B4-order-consequent"));
  REQUIRE(bad.exit_code == 0);
  json jb = bad.parsed();
  CHECK(jb["h4"] == false);
  CHECK(jb["forward"]["holds"] == false);
  CHECK(jb["forward"]["witness"] == json({1, 2}));
  CHECK(jb["reverse"].is_null());

  CliResult p5 = run_cli({"roundtrip"}, fixture_json("paper5"));
  json jp = p5.parsed();
  CHECK(jp["symmetric"] == true);
  CHECK(jp["reverse"]["holds"] == false);
  CHECK(jp["reverse"]["witness"] == json({1, 2}));
}

TEST_CASE("filters command reports congruent flags") {
  CliResult r = run_cli({"filters"}, fixture_json("B4-order-meet"));
  REQUIRE(r.exit_code == 0);
  json j = r.parsed();
  CHECK(j["filters"] == json({{3}, {1, 3}, {2, 3}, {0, 1, 2, 3}}));
  CHECK(j["congruent"] == json({true, false, false, true}));
}

TEST_CASE("validate echoes a normalized algebra and reports violations") {
  SECTION("success echoes, derived bottom included") {
    CliResult r = run_cli({"validate"},
                          R"({"size":2,"meet":[[0,0],[0,1]],"top":1,"bottom":null,"imp":null})");
    REQUIRE(r.exit_code == 0);
    CHECK(r.parsed()["bottom"] == 0);
  }
  SECTION("law violations exit 1 with witness JSON") {
    CliResult r = run_cli({"validate"},
                          R"({"size":3,"meet":[[0,2,0],[2,1,1],[0,1,2]],"top":2})");
    CHECK(r.exit_code == 1);
    json j = r.parsed();
    CHECK(j["error"] == "NotAssociative");
    CHECK(j["witness"] == json({0, 0, 1}));
  }
  SECTION("malformed input exits 2 naming the field") {
    CliResult r = run_cli({"validate"}, R"({"meet":[[0]],"top":0})");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("size") != std::string::npos);
    CliResult mismatch = run_cli(
        {"validate"}, R"({"size":2,"meet":[[0,0],[0,1]],"top":1,"imp":[[1,1]]})");
    CHECK(mismatch.exit_code == 2);
    CHECK(mismatch.err.find("imp") != std::string::npos);
    CHECK(run_cli({"validate"}, "not json").exit_code == 2);
  }
  SECTION("unknown subcommands exit 2") { CHECK(run_cli({"frobnicate"}).exit_code == 2); }
  SECTION("classify without an implication exits 2") {
    CHECK(run_cli({"classify"}, fixture_json("B4")).exit_code == 2);
  }
}

TEST_CASE("search command") {
  SECTION("product escape emits a re-validating witness") {
    CliResult r = run_cli(
        {"search", "--property", "product-escape", "--kind", "order-zero", "--max-size", "2"});
    REQUIRE(r.exit_code == 0);
    json j = r.parsed();
    REQUIRE_FALSE(j["witness"].is_null());
    CHECK(j["witness"]["property"] == "product-escape");
    ParsedAlgebra prod = parse_algebra(j["witness"]["algebra"]);
    REQUIRE(prod.hemi.has_value());
    CHECK_FALSE(membership_in_kind(*prod.hemi, ImplicationKind::OrderZero));
  }
  SECTION("variety separators at bound 2") {
    CliResult r = run_cli({"search", "--property", "variety-separators", "--max-size", "2"});
    REQUIRE(r.exit_code == 0);
    json j = r.parsed();
    REQUIRE(j["witnesses"].size() == 1);
    CHECK(j["witnesses"][0]["property"] == "not-h5");
  }
  SECTION("unknown property exits 2") {
    CHECK(run_cli({"search", "--property", "perpetual-motion"}).exit_code == 2);
  }
  SECTION("the size cap is enforced") {
    CHECK(run_cli({"search", "--property", "variety-separators", "--max-size", "9"})
              .exit_code == 2);
    setenv("HEMILAT_MAX_SIZE", "2", 1);
    CHECK(run_cli({"search", "--property", "variety-separators", "--max-size", "3"})
              .exit_code == 2);
    setenv("HEMILAT_MAX_SIZE", "9", 1);
    CHECK(run_cli({"search", "--property", "variety-separators", "--max-size", "3"})
              .exit_code == 0);
    unsetenv("HEMILAT_MAX_SIZE");
  }
}

TEST_CASE("enumerate writes algebra files") {
  const auto dir = std::filesystem::temp_directory_path() / "hemilat_enum_test";
  std::filesystem::remove_all(dir);
  CliResult r = run_cli({"enumerate", "--max-size", "3", "--out", dir.string()});
  REQUIRE(r.exit_code == 0);
  json j = r.parsed();
  CHECK(j["count"] == 3);  // one isomorphism class per size
  for (const auto& file : j["files"]) {
    std::ifstream in(dir / file.get<std::string>());
    REQUIRE(in.good());
    json algebra;
    in >> algebra;
    parse_algebra(algebra);  // must re-validate
  }
  CliResult labeled =
      run_cli({"enumerate", "--max-size", "3", "--labeled", "--out", dir.string()});
  CHECK(labeled.parsed()["count"] == 4);  // the three-chain has two labelings
  std::filesystem::remove_all(dir);
}

TEST_CASE("dot outputs") {
  const auto path = std::filesystem::temp_directory_path() / "hemilat_dot_test.dot";
  CliResult r = run_cli({"validate", "--dot", path.string()}, fixture_json("B4"));
  REQUIRE(r.exit_code == 0);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str().find("digraph") != std::string::npos);
  CHECK(buf.str().find("\"x\"") != std::string::npos);
  std::filesystem::remove(path);

  CliResult c = run_cli({"congruences", "--dot", path.string()}, fixture_json("chain3-order-meet"));
  REQUIRE(c.exit_code == 0);
  std::ifstream cin2(path);
  std::stringstream cbuf;
  cbuf << cin2.rdbuf();
  CHECK(cbuf.str().find("digraph") != std::string::npos);
  std::filesystem::remove(path);
}
