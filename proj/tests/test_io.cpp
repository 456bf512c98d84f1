#include <catch_amalgamated.hpp>

#include <sstream>
#include <thread>

#include "vll/io.hpp"
#include "vll/verify.hpp"

#include <json.hpp>

using namespace vll;

TEST_CASE("identity files", "[io]") {
  std::istringstream in("# comment\nab = ba\n\naa = 0  # zero\n");
  auto const         ids = read_identities(in);
  REQUIRE(ids.size() == 2);
  CHECK(to_string(ids[0]) == "ab = ba");
  CHECK(ids[1].is_zero());
  std::istringstream bad("ab = ba\n\naab\n");
  try {
    read_identities(bad);
    FAIL("accepted a bad line");
  } catch (ParseError const& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("identity-system files", "[io]") {
  std::istringstream in("label: P\nab = aab\naabb = bbaa\naaa = 0\n");
  auto const         s = read_identity_system(in);
  CHECK(s.label == "P");
  CHECK(s.equations.size() == 2);
  CHECK(s.zero_patterns == std::vector<Word>{parse_word("aaa")});
  std::istringstream late("ab = ba\nlabel: late\n");
  CHECK_THROWS_AS(read_identity_system(late), ParseError);
}

TEST_CASE("Cayley table files", "[io]") {
  std::istringstream in("3\n0 0 0\n0 1 2\n0 0 0\nzero: 0\n");
  auto const         S = read_cayley_table(in, "P3");
  CHECK(S.order() == 3);
  CHECK(S.zero() == std::optional<std::size_t>(0));
  std::istringstream wrong_zero("2\n0 0\n0 1\nzero: 1\n");
  CHECK_THROWS_AS(read_cayley_table(wrong_zero), ParseError);
  std::istringstream short_row("2\n0 0\n0\n");
  CHECK_THROWS_AS(read_cayley_table(short_row), ParseError);
  std::istringstream range("2\n0 0\n0 2\n");
  CHECK_THROWS_AS(read_cayley_table(range), ParseError);
  std::istringstream nonassoc("2\n1 0\n0 0\n");
  CHECK_THROWS_AS(read_cayley_table(nonassoc), NotAssociative);
}

TEST_CASE("lattice files", "[io]") {
  std::istringstream in("n 5\n0 < 1\n1 < 2\n2 < 4\n0 < 3\n3 < 4\n");
  auto const         L = read_lattice(in);
  CHECK(L.size() == 5);
  CHECK(L.leq(0, 4));
  std::istringstream bowtie("n 4\n0 < 2\n0 < 3\n1 < 2\n1 < 3\n");
  CHECK_THROWS_AS(read_lattice(bowtie), NotALattice);
  std::istringstream missing("0 < 1\n");
  CHECK_THROWS_AS(read_lattice(missing), ParseError);
  std::istringstream garbled("n 2\n0 > 1\n");
  CHECK_THROWS_AS(read_lattice(garbled), ParseError);
}

TEST_CASE("data files parse", "[io]") {
  auto n5 = open_input(VLL_TEST_DATA "/n5.lat");
  CHECK(read_lattice(n5).size() == 5);
  auto p3 = open_input(VLL_TEST_DATA "/p3.tab");
  CHECK(read_cayley_table(p3).order() == 3);
  CHECK_THROWS(open_input(VLL_TEST_DATA "/absent"));
}

TEST_CASE("suite reports", "[verify]") {
  auto const p = Profile::quick();
  auto const a = run_suite(p, {"AC3", "AC9"});
  REQUIRE(a.checks.size() == 2);
  CHECK(a.passed());
  auto const j = nlohmann::json::parse(to_json(a));
  CHECK(j["suite"] == "verify-paper");
  CHECK(j["checks"][0]["id"] == "AC3");
  CHECK(j["checks"][0]["status"] == "pass");
  CHECK_FALSE(j["checks"][0].contains("witness"));
  // identical apart from timings
  auto strip = [](nlohmann::json j) {
    for (auto& c : j["checks"]) {
      c.erase("millis");
    }
    return j;
  };
  CHECK(strip(j) == strip(nlohmann::json::parse(to_json(run_suite(p, {"AC3", "AC9"})))));
  CHECK_THROWS_AS(profile_named("huge"), std::invalid_argument);
  CHECK(profile_named("full").max_carrier == 12);
}

TEST_CASE("failing checks carry witnesses", "[verify]") {
  Check const broken{"X", "always fails", std::chrono::milliseconds(1000),
                     [](Profile const&, CheckOutcome& out) {
                       throw std::runtime_error("boom");
                     }};
  auto const r = run_check(broken, Profile::quick());
  CHECK(r.status == Status::fail);
  CHECK(r.witness.find("boom") != std::string::npos);
  Check const slow{"Y", "too slow", std::chrono::milliseconds(0),
                   [](Profile const&, CheckOutcome& out) {
                     std::this_thread::sleep_for(std::chrono::milliseconds(5));
                     out.status = Status::pass;
                   }};
  auto const s = run_check(slow, Profile::quick());
  CHECK(s.status == Status::fail);
  CHECK_FALSE(s.witness.empty());
}
