#include <doctest.h>

#include <sstream>

#include "nsreal/cli.hpp"
#include "nsreal/dsl.hpp"
#include "nsreal/json_io.hpp"

using namespace nsreal;
using json_io::Json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;

  Json json() const { return Json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("goldbach subcommand") {
  auto r = run({"goldbach", "--limit", "9"});
  REQUIRE(r.code == 0);
  auto j = r.json();
  CHECK(j["partial_sum"] == "101/168");
  CHECK(j["limit"] == 9);
  CHECK(j == json_io::goldbach_summary(9));
  auto big = run({"goldbach", "--limit", "1000000"}).json();
  Rational err = parse_rational(big["abs_err_vs_1"].get<std::string>());
  CHECK(err <= parse_rational(big["tail_bound"].get<std::string>()));
  CHECK(run({"goldbach", "--limit", "3"}).code == 2);
  CHECK(run({"goldbach"}).code == 2);
}

TEST_CASE("sieve subcommand and CSV") {
  auto r = run({"sieve", "--depth", "100", "--steps", "3"});
  REQUIRE(r.code == 0);
  auto j = r.json();
  CHECK(j["steps"].size() == 3);
  CHECK(j["steps"][2]["base"] == 5);
  CHECK(j["removed_bases"] == Json::array({2, 3, 5}));
  CHECK(j == json_io::sieve_report(goldbach::euler_sieve(100, 3)));

  auto csv = run({"--format", "csv", "sieve", "--depth", "100", "--steps", "3"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out == "index,base,contribution,tail,exponents\n0,2,1/1,1/64,6\n1,3,1/2,1/162,4\n2,5,1/4,1/100,2\n");
  CHECK(run({"sieve", "--depth", "10", "--steps", "10"}).code == 2);
  CHECK(run({"--format", "xml", "sieve", "--depth", "10", "--steps", "1"}).code == 2);
}

TEST_CASE("extsum subcommand") {
  auto r = run({"extsum", "--series", "geom(1/2)", "--depth", "512"});
  REQUIRE(r.code == 0);
  auto j = r.json();
  CHECK(j["sign"] == -1);
  CHECK(j["delta"] == "eps_d");
  CHECK(j["divergent"] == false);
  auto eta = j["eta"];
  CHECK(parse_rational(eta[0].get<std::string>()) <= 1);
  CHECK(parse_rational(eta[1].get<std::string>()) >= 1);

  auto alt = run({"extsum", "--series", "alt(geom(1/2))", "--depth", "512"});
  REQUIRE(alt.code == 0);
  CHECK(alt.json()["sign"] == -1);

  CHECK(run({"extsum", "--series", "harmonic", "--depth", "512"}).code == 3);
  CHECK(run({"extsum", "--series", "geom(1/2", "--depth", "512"}).code == 2);
  CHECK(run({"extsum", "--series", "geom(1/2)", "--depth", "8"}).code == 2);
  CHECK(run({"extsum", "--series", "nope"}).code == 2);
}

TEST_CASE("series mini-language") {
  CHECK(dsl::parse_series("geom(1/3)").term(1) == Rational(1, 9));
  CHECK(dsl::parse_series("pser(2)").term(1) == Rational(1, 4));
  CHECK(dsl::parse_series("alt(pser(2))").term(1) == Rational(-1, 4));
  CHECK(dsl::parse_series("powers_recip").term(0) == Rational(1, 3));
  CHECK(dsl::parse_series(" harmonic ").term(3) == Rational(1, 4));
  for (const char* bad : {"", "geom", "geom()", "pser(x)", "pser(1/2)", "alt(3)", "geom(1/2))", "foo(1)"}) {
    try {
      dsl::parse_series(bad);
      FAIL("accepted " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kParse);
    }
  }
}

TEST_CASE("hermite subcommands") {
  auto m0 = run({"hermite", "m", "--n", "1", "--p", "3", "--k", "0"});
  REQUIRE(m0.code == 0);
  CHECK(m0.json()["M"] == "32");
  CHECK(run({"hermite", "m", "--n", "1", "--p", "3", "--k", "1"}).json()["M"] == "87");
  CHECK(run({"hermite", "m", "--n", "1", "--p", "4", "--k", "1"}).code == 2);

  auto cert = run({"hermite", "cert", "--coeffs=3,-1"});
  REQUIRE(cert.code == 0);
  auto j = cert.json();
  CHECK(j["prime"] == 5);
  CHECK(j["checks"]["eps_half"] == true);
  auto parsed = json_io::certificate_from_json(j);
  CHECK(hermite::verify_certificate(parsed).all());
  CHECK(j == json_io::certificate(hermite::nonvanish_certificate({3, -1})));

  CHECK(run({"hermite", "cert", "--coeffs=0,1"}).code == 2);
  CHECK(run({"hermite", "cert", "--coeffs=5"}).code == 2);
  CHECK(run({"hermite", "cert", "--coeffs=1,x"}).code == 2);
  CHECK(run({"hermite"}).code == 2);
}

TEST_CASE("dirichlet and liouville subcommands") {
  auto pi = run({"dirichlet", "--alpha", "pi", "--count", "4"});
  REQUIRE(pi.code == 0);
  auto cs = pi.json()["convergents"];
  REQUIRE(cs.size() == 4);
  CHECK(cs[1]["p"] == "22");
  CHECK(cs[1]["q"] == "7");
  CHECK(cs[3]["p"] == "355");
  for (const auto& c : cs) CHECK(c["holds"] == true);

  auto rat = run({"dirichlet", "--alpha", "7/3", "--count", "6"});
  REQUIRE(rat.code == 0);
  CHECK(rat.json()["convergents"].size() == 2);

  auto csv = run({"--format", "csv", "dirichlet", "--alpha", "e", "--count", "3"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("index,p,q,", 0) == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 4);

  auto lv = run({"liouville", "--m", "2", "--n", "2"});
  REQUIRE(lv.code == 0);
  CHECK(lv.json()["p"] == "11");
  CHECK(lv.json()["q"] == "100");
  CHECK(lv.json()["holds"] == true);
  CHECK(run({"liouville", "--m", "4", "--n", "3"}).json()["holds"] == false);
  CHECK(run({"liouville", "--m", "2", "--n", "9"}).code == 2);
}

TEST_CASE("wat subcommand") {
  auto r = run({"wat", "--expr", "1# + eps_d - eps_d"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["canonical"] == "1# - eps_d");
  CHECK(r.json()["sign"] == -1);
  CHECK(run({"wat", "--expr", "1# +"}).code == 2);
  CHECK_FALSE(run({"wat", "--expr", "1# +"}).err.empty());
}

TEST_CASE("usage and determinism") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("goldbach") != std::string::npos);
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"goldbach", "--limit", "5000"},
           {"extsum", "--series", "pser(2)", "--depth", "256"},
           {"hermite", "cert", "--coeffs=-87,32"},
           {"dirichlet", "--alpha", "pi", "--count", "8"}}) {
    auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}
