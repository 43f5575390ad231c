#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "selfshuffle/cli.hpp"
#include "selfshuffle/io.hpp"

using namespace selfshuffle;

namespace {
struct Run {
  int code;
  std::string out, err;
};
Run run(std::vector<std::string> args) {
  std::ostringstream o, e;
  int c = cli_run(args, o, e);
  return {c, o.str(), e.str()};
}
std::string tmp(const std::string& name) { return (std::filesystem::temp_directory_path() / name).string(); }
}  // namespace

TEST_CASE("word subcommand") {
  auto r = run({"word", "thue-morse", "--length", "12"});
  CHECK(r.code == 0);
  CHECK(r.out == "011010011001\n");
  auto j = nlohmann::json::parse(run({"word", "fibonacci", "--length", "22", "--format", "json"}).out);
  CHECK(j["prefix"] == "0100101001001010010100");
  CHECK(j["schema"] == 1);
  CHECK(run({"word", "sturmian", "--alpha", "(3-1*sqrt(5))/2", "--rho", "0", "--length", "5"}).out == "00100\n");
  CHECK(run({"word", "nonsense"}).code == 2);
  CHECK(run({"word", "sturmian", "--alpha", "(3-", "--rho", "0"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("word specs") {
  CHECK(parse_word_spec("0(1)").to_string(4) == "0111");
  CHECK(parse_word_spec("(01)").to_string(4) == "0101");
  CHECK(parse_word_spec("drop:1:thue-morse").to_string(6) == "110100");
  CHECK(parse_word_spec("fixed:0:0:01,1:0").to_string(8) == "01001010");
  CHECK(parse_word_spec("prefix:0:fibonacci").to_string(4) == "0010");
  CHECK(parse_word_spec("swap:fibonacci").to_string(4) == "1011");
  CHECK(parse_word_spec("char:0,0,[1,0]").to_string(5) == "00100");
  CHECK_THROWS_AS(parse_word_spec("drop:x:fibonacci"), ParseError);
  CHECK_THROWS_AS(parse_word_spec("0(2)"), ParseError);
}

TEST_CASE("sturmian rejection cites the intercept condition") {
  auto r = run({"shuffle", "sturmian", "--alpha", "(3-1*sqrt(5))/2", "--rho", "0"});
  CHECK(r.code == 1);
  CHECK(r.err.find("rho != 0") != std::string::npos);
}

TEST_CASE("search, emit and verify round trip") {
  std::string path = tmp("selfshuffle_cli_w.json");
  auto r = run({"search", "--word", "fibonacci", "--k", "2", "--depth", "100", "--emit-witness", path});
  CHECK(r.code == 0);
  auto v = run({"verify", path});
  CHECK(v.code == 0);
  CHECK(v.out.rfind("ok", 0) == 0);
  auto t = run({"verify", path, "--transport", "5", "--seed", "3"});
  CHECK(t.code == 0);
  // a corrupted steering word fails
  std::ifstream in(path);
  auto j = nlohmann::json::parse(in);
  std::string s = j["steering"];
  s[10] = s[10] == '1' ? '2' : '1';
  j["steering"] = s;
  std::ofstream(path) << j.dump();
  CHECK(run({"verify", path}).code == 1);
  std::ofstream(path) << "{not json";
  CHECK(run({"verify", path}).code == 2);
  std::remove(path.c_str());
}

TEST_CASE("shuffle witnesses round trip") {
  std::string path = tmp("selfshuffle_cli_s.json");
  for (std::vector<std::string> args : {std::vector<std::string>{"shuffle", "tm", "--depth", "4096"},
                                         {"shuffle", "sturmian", "--alpha", "(3-sqrt(5))/2", "--rho", "1/3", "--depth", "3000"},
                                         {"shuffle", "sturmian", "--alpha", "(3-sqrt(5))/2", "--rho", "1/3", "--rho-s", "1/5",
                                          "--rho-l", "1/2", "--depth", "3000"},
                                         {"shuffle", "characteristic", "--dir", "0,0,1,0,1,1,0,1,[0,1]", "--depth", "2000"},
                                         {"shuffle", "pal", "--dir", "0,0,1,0,1,1,0,1,[0,1]", "--variant", "10"},
                                         {"shuffle", "three", "--depth", "2000"}}) {
    args.push_back("--emit-witness");
    args.push_back(path);
    auto r = run(args);
    CHECK_MESSAGE(r.code == 0, r.err);
    CHECK(run({"verify", path}).code == 0);
  }
  std::remove(path.c_str());
}

TEST_CASE("trace, checks and stones") {
  auto t = run({"shuffle", "sturmian", "--alpha", "(3-sqrt(5))/2", "--rho", "1/3", "--depth", "100", "--trace",
                "--format", "json"});
  REQUIRE(t.code == 0);
  auto j = nlohmann::json::parse(t.out);
  CHECK(j["trace"].size() > 3);
  CHECK(j["trace"][0].contains("consumed_m"));
  auto b = nlohmann::json::parse(
      run({"check", "borders", "--word", "paper-folding", "--horizon", "1024", "--format", "json"}).out);
  CHECK(b["ab_borderfree"]["saturated"] == true);
  auto l = run({"check", "lyndon", "--word", "0(1)"});
  CHECK(l.out == "Lyndon\n");
  auto d = nlohmann::json::parse(run({"check", "delay", "--alpha", "(3-sqrt(5))/2", "--rho", "1/3", "--format", "json"}).out);
  CHECK(d["agree"] == true);
  CHECK(d["alpha"]["approx"] == true);
  CHECK(d["alpha"]["b"] == -1);
  CHECK(run({"check", "delay", "--alpha", "(3-sqrt(5))/2", "--rho", "0"}).code == 1);
  CHECK(run({"stones", "check", "--alpha", "(3-sqrt(5))/2", "--rho", "1/2", "--n", "100"}).code == 0);
  CHECK(run({"stones", "classify", "--alpha", "(3-sqrt(5))/2", "--rho", "1/2", "--n", "300"}).code == 0);
  CHECK(run({"stones", "classify", "--alpha", "(3-sqrt(5))/2", "--rho", "1/3", "--n", "10"}).code == 1);
  std::string svg = tmp("selfshuffle_cli.svg"), csv = tmp("selfshuffle_cli.csv");
  auto p = run({"stones", "path", "--alpha", "(3-sqrt(5))/2", "--rho", "2/5", "--n", "200", "--svg", svg, "--csv", csv});
  CHECK(p.code == 0);
  CHECK(std::filesystem::file_size(svg) > 100);
  CHECK(std::filesystem::file_size(csv) > 100);
  std::remove(svg.c_str());
  std::remove(csv.c_str());
}

TEST_CASE("output is deterministic") {
  std::vector<std::string> args{"--format", "json", "stones", "classify", "--alpha", "(3-sqrt(5))/2",
                                "--rho", "3/5", "--n", "200", "--seed", "9"};
  auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto c = run({"search", "--word", "period-doubling", "--depth", "500", "--format", "json"});
  CHECK(c.out == run({"search", "--word", "period-doubling", "--depth", "500", "--format", "json"}).out);
}
