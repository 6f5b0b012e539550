#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "clde/rng.hpp"
#include "clde/text_io.hpp"
#include "doctest.h"

using clde::format_double;
using clde::parse_double;
using clde::read_key_value_file;
using clde::read_point_file;
using clde::read_text_file;
using clde::Rng;
using clde::write_text_file;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("tio_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("formatting keeps integral doubles recognizably floating point") {
  CHECK(format_double(5.0) == "5.0");
  CHECK(format_double(-3.0) == "-3.0");
  CHECK(format_double(0.0) == "0.0");
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(std::nan("")) == "nan");
  CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");
}

TEST_CASE("format and parse round-trip exactly") {
  Rng rng(401);
  for (int trial = 0; trial < 2000; ++trial) {
    double v = (rng.uniform() - 0.5) * std::pow(10.0, rng.uniform(-12.0, 12.0));
    CHECK(parse_double(format_double(v)) == v);
  }
  CHECK(parse_double(format_double(0.1)) == 0.1);
  CHECK(parse_double(" 2.5") == 2.5);
  CHECK(parse_double("1e-9") == 1e-9);
}

TEST_CASE("parse rejects non-numeric text") {
  CHECK_THROWS_AS(parse_double("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_double(""), std::invalid_argument);
}

TEST_CASE("key value files accept both separators and ignore comments") {
  TempFile f("kv.txt");
  write_text_file(f.path,
                  "# header comment\n"
                  "alpha = 0.99\n"
                  "beta 0.7\n"
                  "\n"
                  "  problem   =   f2_equal_maxima\n");
  const auto kv = read_key_value_file(f.path);
  CHECK(kv.size() == 3);
  CHECK(kv.at("alpha") == "0.99");
  CHECK(kv.at("beta") == "0.7");
  CHECK(kv.at("problem") == "f2_equal_maxima");
}

TEST_CASE("malformed key value lines are reported with their line number") {
  TempFile f("kv_bad.txt");
  write_text_file(f.path, "alpha = 1\njustoneword\n");
  try {
    read_key_value_file(f.path);
    FAIL("expected a throw");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find(":2") != std::string::npos);
  }

  TempFile g("kv_empty_val.txt");
  write_text_file(g.path, "alpha =\n");
  CHECK_THROWS_AS(read_key_value_file(g.path), std::runtime_error);
  CHECK_THROWS_AS(read_key_value_file("does_not_exist_anywhere.cfg"), std::runtime_error);
}

TEST_CASE("text files round-trip bytes") {
  TempFile f("roundtrip.txt");
  const std::string content = "line one\nline two\n# not a comment here\n";
  write_text_file(f.path, content);
  CHECK(read_text_file(f.path) == content);
  CHECK_THROWS_AS(read_text_file("missing_file.txt"), std::runtime_error);
}

TEST_CASE("point files parse whitespace rows and skip comments") {
  TempFile f("points.txt");
  write_text_file(f.path,
                  "# two 2d points\n"
                  "0.5 1.5\n"
                  "\n"
                  "-1.0\t2.0\n");
  const auto rows = read_point_file(f.path);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == std::vector<double>{0.5, 1.5});
  CHECK(rows[1] == std::vector<double>{-1.0, 2.0});
  CHECK_THROWS_AS(read_point_file("missing_points.txt"), std::runtime_error);
}
