#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

#include "commands.hpp"
#include "doctest.h"
#include "gett/tensor_io.hpp"
#include "gett/testkit/oracle.hpp"

using namespace gett;
using namespace gett::cli;

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name)
      : path(fs::temp_directory_path() / ("gett_test_cli_" + name)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// "--conts=1 --cont-a=0 ..." -> RunOptions fields.
RunOptions options_from_spec(const std::string& line) {
  RunOptions o;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    const auto eq = tok.find('=');
    const auto key = tok.substr(0, eq), value = tok.substr(eq + 1);
    if (key == "--conts") o.conts = std::stoi(value);
    else if (key == "--cont-a") o.cont_a = value;
    else if (key == "--cont-b") o.cont_b = value;
    else if (key == "--perm") o.perm = value;
    else if (key == "--out-ext") o.out_ext = value;
    else if (key == "--out-inc") o.out_inc = value;
  }
  return o;
}

struct Outcome {
  int code;
  std::string out, err;
};

template <class F, class O>
Outcome call(F f, const O& opts) {
  std::ostringstream out, err;
  const int code = f(opts, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse_index_list") {
  CHECK(parse_index_list("") == std::vector<index_t>{});
  CHECK(parse_index_list("3") == std::vector<index_t>{3});
  CHECK(parse_index_list("1,0,2") == std::vector<index_t>{1, 0, 2});
  CHECK(parse_index_list("-1, 4") == std::vector<index_t>{-1, 4});
  CHECK_THROWS_AS(parse_index_list("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_index_list("1,2,"), std::invalid_argument);
  CHECK_THROWS_AS(parse_index_list("a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_index_list("1x"), std::invalid_argument);
}

TEST_CASE("run: dot product") {
  TempDir dir("dot");
  write_tensor(dir.path / "a.tns", make_tensor_file<double>(packed_view({3}), {1, 2, 3}));
  write_tensor(dir.path / "b.tns", make_tensor_file<double>(packed_view({3}), {4, 5, 6}));

  RunOptions o;
  o.a_path = dir.path / "a.tns";
  o.b_path = dir.path / "b.tns";
  o.out_path = dir.path / "c.tns";
  o.conts = 1;
  o.cont_a = "0";
  o.cont_b = "0";
  const auto r = call(cmd_run, o);
  CHECK(r.code == kOk);
  const auto c = read_tensor(o.out_path);
  CHECK(c.view.rank() == 0);
  CHECK(std::get<std::vector<double>>(c.values) == std::vector<double>{32});

  SUBCASE("mismatched extents") {
    write_tensor(dir.path / "b4.tns", make_tensor_file<double>(packed_view({4}), {1, 2, 3, 4}));
    o.b_path = dir.path / "b4.tns";
    const auto bad = call(cmd_run, o);
    CHECK(bad.code == kFailure);
    CHECK(bad.err.find("ExtentMismatch") != std::string::npos);
  }
  SUBCASE("mixed dtypes") {
    write_tensor(dir.path / "bs.tns", make_tensor_file<float>(packed_view({3}), {4, 5, 6}));
    o.b_path = dir.path / "bs.tns";
    CHECK(call(cmd_run, o).err.find("DtypeMismatch") != std::string::npos);
  }
  SUBCASE("missing file") {
    o.a_path = dir.path / "nope.tns";
    CHECK(call(cmd_run, o).code == kIoError);
  }
  SUBCASE("malformed file") {
    std::ofstream(dir.path / "bad.tns") << "GETT-TENSOR 1\ndtype: d\nrank: 2\nextents: 3\n";
    o.a_path = dir.path / "bad.tns";
    const auto bad = call(cmd_run, o);
    CHECK(bad.code == kIoError);
    CHECK(bad.err.find("line 4") != std::string::npos);
  }
  SUBCASE("bad index list") {
    o.cont_a = "zero";
    CHECK(call(cmd_run, o).code == kFailure);
  }
  SUBCASE("wrong --out-ext") {
    o.out_ext = "1";
    CHECK(call(cmd_run, o).err.find("OutputExtentMismatch") != std::string::npos);
  }
}

TEST_CASE("run: matrix product with a repeated perm entry") {
  TempDir dir("perm");
  write_tensor(dir.path / "a.tns", make_tensor_file<double>(packed_view({2, 2}), {1, 2, 3, 4}));
  RunOptions o;
  o.a_path = o.b_path = dir.path / "a.tns";
  o.out_path = dir.path / "c.tns";
  o.conts = 1;
  o.cont_a = "1";
  o.cont_b = "0";
  o.perm = "0,0";
  const auto bad = call(cmd_run, o);
  CHECK(bad.code == kFailure);
  CHECK(bad.err.find("PermNotBijection") != std::string::npos);
  CHECK_FALSE(fs::exists(o.out_path));

  o.perm = "0,1";
  o.out_inc = "2,1";  // row-major C
  REQUIRE(call(cmd_run, o).code == kOk);
  const auto c = read_tensor(o.out_path);
  // [[1,3],[2,4]]^2 = [[7,15],[10,22]], stored row by row
  CHECK(std::get<std::vector<double>>(c.values) == std::vector<double>{7, 15, 10, 22});
}

TEST_CASE("gen then run matches the oracle") {
  for (const char* category : {"Basic contraction", "Scalar contraction",
                               "Rank zero tensor", "Sub-tensor of lower rank",
                               "Sub-tensor negative increment", "Permutations"}) {
    CAPTURE(category);
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      TempDir dir("gen");
      REQUIRE(call(cmd_gen, GenOptions{category, seed, dir.path}).code == kOk);
      std::ifstream spec(dir.path / "spec.txt");
      std::string line;
      std::getline(spec, line);
      RunOptions o = options_from_spec(line);
      o.a_path = dir.path / "a.tns";
      o.b_path = dir.path / "b.tns";
      o.out_path = dir.path / "c.tns";
      const auto r = call(cmd_run, o);
      REQUIRE_MESSAGE(r.code == kOk, r.err);

      const auto a = read_tensor(o.a_path), b = read_tensor(o.b_path), c = read_tensor(o.out_path);
      const auto& av = std::get<std::vector<double>>(a.values);
      const auto& bv = std::get<std::vector<double>>(b.values);
      const auto& cv = std::get<std::vector<double>>(c.values);
      ContractionSpec s{o.conts, parse_index_list(o.cont_a), parse_index_list(o.cont_b),
                        parse_index_list(o.perm)};
      const auto expected = testkit::oracle_contract(testkit::pack<double>(a.view, av),
                                                     testkit::pack<double>(b.view, bv), s);
      CHECK(testkit::pack<double>(c.view, cv) == expected);
      CHECK(c.view.increments == parse_index_list(*o.out_inc));
    }
  }
}

TEST_CASE("gen is reproducible") {
  TempDir one("gen1"), two("gen2");
  const GenOptions g1{"Sub-tensor of same rank", 42, one.path};
  GenOptions g2 = g1;
  g2.out_dir = two.path;
  REQUIRE(call(cmd_gen, g1).code == kOk);
  REQUIRE(call(cmd_gen, g2).code == kOk);
  for (const char* f : {"a.tns", "b.tns", "spec.txt"}) {
    CHECK(slurp(one.path / f) == slurp(two.path / f));
  }
  CHECK(call(cmd_gen, GenOptions{"Nope", 1, one.path}).code == kFailure);
}

TEST_CASE("verify") {
  const auto small = call(cmd_verify, VerifyOptions{"all", 3, 5});
  CHECK(small.code == kOk);
  CHECK(small.out.find("Hypercube tensor four contractions") != std::string::npos);
  CHECK(std::regex_search(small.out, std::regex("TOTAL +69/69 passed")));

  const auto scalar = call(cmd_verify, VerifyOptions{"Scalar contraction", 40, 1});
  CHECK(scalar.code == kOk);
  CHECK(scalar.out.find("40/40") != std::string::npos);

  const auto unknown = call(cmd_verify, VerifyOptions{"Everything", 1, 1});
  CHECK(unknown.code == kFailure);
  CHECK(unknown.err.find("Basic contraction") != std::string::npos);
}

TEST_CASE("bench") {
  const auto r = call(cmd_bench, BenchOptions{2, 16, 1, 3});
  CHECK(r.code == kOk);
  CHECK(r.out.find("multiply-adds per rep: 4096") != std::string::npos);
  CHECK(r.out.find("median time:") != std::string::npos);
  CHECK(call(cmd_bench, BenchOptions{2, 16, 3, 1}).code == kFailure);
  CHECK(call(cmd_bench, BenchOptions{3, 4, 0, 1}).out.find("per rep: 4096") !=
        std::string::npos);
}
