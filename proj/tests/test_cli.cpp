#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "listings.hpp"
#include "numbase/digit_text.hpp"

using namespace numbase;
namespace t = numbase::testing;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempFile {
  std::string path;
  TempFile(std::string name, std::string_view content) : path(std::move(name)) {
    std::ofstream(path) << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("base specs") {
  CHECK(cli::parse_base_spec("prime") == BaseSequence::prime());
  CHECK(cli::parse_base_spec("mpower:3") == BaseSequence::mpower(3));
  CHECK(cli::parse_base_spec("power:16") == BaseSequence::power_of(16u));
  CHECK_THROWS(cli::parse_base_spec("mpower:1"));
  CHECK_THROWS(cli::parse_base_spec("mpower:x"));
  CHECK_THROWS(cli::parse_base_spec("power:1"));
  CHECK_THROWS(cli::parse_base_spec("cubes"));
  CHECK_THROWS(cli::parse_base_spec("file:"));
}

TEST_CASE("encode and decode") {
  CHECK(run({"encode", "--base", "prime", "27"}).out == "1000000101\n");
  CHECK(run({"decode", "--base", "factorial", "21"}).out == "5\n");
  CHECK(run({"encode", "--base", "square", "0"}).out == "0\n");
  CHECK(run({"encode", "--base", "factorial", "36288000"}).out == "10.0.0.0.0.0.0.0.0.0\n");
  CHECK(run({"encode", "--base", "factorial", "--sep", ":", "5"}).out == "2:1\n");
  CHECK(run({"decode", "--base", "factorial", "--sep", ":", "2:1"}).out == "5\n");
  CHECK(run({"decode", "--base", "factorial", "10.0.0.0.0.0.0.0.0.0"}).out == "36288000\n");

  const auto overflow = run({"encode", "--base", "factorial", "--compact", "36288000"});
  CHECK(overflow.code == 2);
  CHECK(overflow.out.empty());
  CHECK(overflow.err.find("CompactOverflow") != std::string::npos);
}

TEST_CASE("output matches the library byte for byte") {
  auto b = BaseSequence::lucas();
  for (std::uint64_t v : {0u, 1u, 17u, 999u, 123456u}) {
    CHECK(run({"encode", "--base", "lucas", std::to_string(v)}).out ==
          render(encode_greedy(b, v)) + "\n");
  }
  const auto rows = table(b, 10u, 40u);
  std::string expected;
  for (const auto& r : rows) expected += r + "\n";
  CHECK(run({"table", "--base", "lucas", "--from", "10", "--to", "40"}).out == expected);
}

TEST_CASE("errors map to exit codes") {
  const auto bad_value = run({"encode", "--base", "prime", "12a"});
  CHECK(bad_value.code == 2);
  CHECK(bad_value.out.empty());
  CHECK(bad_value.err.find('\n') == bad_value.err.size() - 1);

  CHECK(run({"encode", "--base", "mpower:1", "5"}).code == 2);
  CHECK(run({"decode", "--base", "square", "130"}).code == 2);
  CHECK(run({"encode", "prime", "5"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);

  TempFile tiny("numbase_cli_tiny.terms", "format=terms\n1\n2\n3\n");
  CHECK(run({"encode", "--base", "file:" + tiny.path, "6"}).code == 3);
  CHECK(run({"decode", "--base", "file:" + tiny.path, "1000"}).code == 3);
}

TEST_CASE("arithmetic commands") {
  CHECK(run({"add", "--base", "factorial", "210", "221"}).out == "1101\n");
  CHECK(run({"sub", "--base", "factorial", "1001", "320"}).out == "11\n");
  CHECK(run({"mul", "--base", "factorial", "10", "11"}).out == "100\n");
  CHECK(run({"divrem", "--base", "factorial", "1101", "21"}).out == "100 1\n");
  CHECK(run({"add", "--base", "prime", "--value", "3", "2"}).out == "1000\n");

  const auto under = run({"sub", "--base", "factorial", "11", "1001"});
  CHECK(under.code == 4);
  CHECK(under.out.empty());
  CHECK(run({"divrem", "--base", "factorial", "11", "0"}).code == 4);
  CHECK(run({"add", "--base", "prime", "11", "1"}).code == 2);  // not canonical
  CHECK(run({"add", "--base", "factorial", "30", "1"}).code == 2);  // digit out of range
}

TEST_CASE("trace goes to the error stream") {
  const auto s = run({"sub", "--base", "factorial", "--trace", "1001", "320"});
  CHECK(s.code == 0);
  CHECK(s.out == "11\n");
  CHECK(s.err == "trace: path digit-wise\ntrace: 1001 -> 0401 -> 0331\n");

  const auto a = run({"add", "--base", "factorial", "--trace", "210", "221"});
  CHECK(a.out == "1101\n");
  CHECK(a.err.find("2 + 2 + 1 = 5 (radix 4): write 1, carry 1") != std::string::npos);

  const auto p = run({"add", "--base", "prime", "--trace", "100", "10"});
  CHECK(p.err == "trace: path decode-fallback\n");
}

TEST_CASE("table command") {
  const auto f = run({"table", "--base", "factorial", "--from", "0", "--to", "36"});
  std::string expected;
  for (auto s : t::kFactorialListing) expected += std::string(s) + "\n";
  CHECK(f.out == expected);

  const auto sq = run({"table", "--base", "square", "--from", "0", "--to", "8"});
  CHECK(sq.out.ends_with("\n20\n"));
  CHECK(run({"table", "--base", "prime", "--from", "5", "--to", "5"}).out == "1000\n");
  CHECK(run({"table", "--base", "prime", "--from", "3", "--to", "5", "--csv"}).out ==
        "3,100\n4,101\n5,1000\n");
  CHECK(run({"table", "--base", "prime", "--from", "5", "--to", "3"}).code == 2);
  CHECK(run({"table", "--base", "prime", "--from", "0", "--to", "3", "--csv", "--sep", ","}).code ==
        2);
}

TEST_CASE("verify command") {
  const auto ok = run({"verify", "--base", "prime", "--upto", "100000"});
  CHECK(ok.code == 0);
  CHECK(ok.out.starts_with("PASS base=prime range=[0,100000] checked=100001"));

  TempFile tiny("numbase_cli_tiny2.terms", "format=terms\n1\n2\n3\n");
  CHECK(run({"verify", "--base", "file:" + tiny.path, "--upto", "5"}).code == 0);
  CHECK(run({"verify", "--base", "file:" + tiny.path, "--upto", "6"}).code == 3);

  TempFile bad("numbase_cli_bad.terms", "format=terms\n2\n3\n");
  const auto b = run({"verify", "--base", "file:" + bad.path});
  CHECK(b.code == 2);
  CHECK(b.err.find("NotStartingAtOne") != std::string::npos);

  TempFile bounds("numbase_cli_dec.bounds", "format=bounds cyclic\n9\n");
  CHECK(run({"encode", "--base", "file:" + bounds.path, "90210"}).out == "90210\n");
  CHECK(run({"verify", "--base", "file:" + bounds.path, "--upto", "20000", "--threads", "3"}).code ==
        0);
}
