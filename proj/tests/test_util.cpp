#include <doctest.h>

#include <cstdlib>
#include <random>
#include <string>

#include "tagdyn/util.hpp"

using namespace tagdyn;

TEST_CASE("civil date arithmetic") {
  CHECK(days_from_civil(1970, 1, 1) == 0);
  CHECK(days_from_civil(1969, 12, 31) == -1);
  CHECK(days_from_civil(2000, 1, 1) == 10957);
  CHECK(days_from_civil(2000, 2, 29) == 11016);  // leap day exists
  CHECK(days_from_civil(2000, 3, 1) == 11017);
  CHECK(days_from_civil(2014, 1, 1) == 1388534400 / kSecondsPerDay);
}

TEST_CASE("timestamp parsing") {
  CHECK(parse_utc_date("2014-01-01") == 1388534400);
  CHECK(parse_utc_instant("2014-01-01") == 1388534400);
  CHECK(parse_utc_instant("2014-01-07T12:30:00Z") == 1389097800);
  CHECK(parse_utc_instant("2014-01-07 12:30:00") == 1389097800);
  CHECK(parse_utc_instant("1389097800") == 1389097800);
  CHECK(parse_utc_instant("  1389097800 ") == 1389097800);
  CHECK(parse_utc_instant("0") == 0);
  CHECK(parse_utc_instant("-86400") == -86400);

  CHECK_THROWS_AS(parse_utc_date("2014/01/01"), DataError);
  CHECK_THROWS_AS(parse_utc_date("2014-13-01"), DataError);
  CHECK_THROWS_AS(parse_utc_instant(""), DataError);
  CHECK_THROWS_AS(parse_utc_instant("yesterday"), DataError);
  CHECK_THROWS_AS(parse_utc_instant("2014-01-07T25:00:00Z"), DataError);
  CHECK_THROWS_AS(parse_utc_instant("12abc"), DataError);
}

TEST_CASE("timestamp formatting round-trips") {
  CHECK(format_utc_instant(1389097800) == "2014-01-07T12:30:00Z");
  CHECK(format_utc_instant(0) == "1970-01-01T00:00:00Z");
  CHECK(format_utc_instant(-1) == "1969-12-31T23:59:59Z");

  std::mt19937_64 gen(12);
  std::uniform_int_distribution<int64_t> d(0, 4102444800LL);  // through 2100
  for (int i = 0; i < 500; ++i) {
    int64_t t = d(gen);
    CHECK(parse_utc_instant(format_utc_instant(t)) == t);
  }
}

TEST_CASE("string helpers") {
  CHECK(to_lower("MiXeD 123 #Tag") == "mixed 123 #tag");
  CHECK(split("a,b,,c", ',') == std::vector<std::string>{"a", "b", "", "c"});
  CHECK(split("", ',') == std::vector<std::string>{""});
  CHECK(split("solo", ',') == std::vector<std::string>{"solo"});
  CHECK(trim("  x y\t\n") == "x y");
  CHECK(trim("") == "");
  CHECK(trim(" \t ") == "");
}

TEST_CASE("shortest round-trip double formatting") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(2.0) == "2");
  CHECK(format_double(-0.25) == "-0.25");
  CHECK(format_double(0.0) == "0");

  std::mt19937_64 gen(9);
  std::uniform_real_distribution<double> d(-1e6, 1e6);
  for (int i = 0; i < 2000; ++i) {
    double v = d(gen);
    CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
  }
  // A few awkward exact values.
  for (double v : {1.0 / 3.0, 0.43301270189221930, 1e-300, 6.02e23}) {
    CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
  }
}

TEST_CASE("FNV-1a 64 reference vectors") {
  // Published test vectors for the 64-bit FNV-1a parameters.
  CHECK(fnv1a64("") == 14695981039346656037ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
  CHECK(hex64(fnv1a64("foobar")) == "85944171f73967e8");

  // Chaining equals one pass over the concatenation.
  CHECK(fnv1a64("bar", fnv1a64("foo")) == fnv1a64("foobar"));
}

TEST_CASE("file digest matches in-memory hashing") {
  write_text_file("build/test_digest.bin", "foobar");
  CHECK(digest_file("build/test_digest.bin") == fnv1a64("foobar"));
  CHECK_THROWS_AS(digest_file("build/does_not_exist.bin"), DataError);

  std::string big(200000, 'x');
  big += "tail";
  write_text_file("build/test_digest_big.bin", big);
  CHECK(digest_file("build/test_digest_big.bin") == fnv1a64(big));
}

TEST_CASE("CSV reading") {
  write_text_file("build/test_util.csv", "h1,h2\r\na,1\n\nb,2\r\n");
  CsvReader reader("build/test_util.csv");
  CHECK(reader.header() == "h1,h2");
  std::vector<std::string> f;
  REQUIRE(reader.next(f));
  CHECK(f == std::vector<std::string>{"a", "1"});
  REQUIRE(reader.next(f));  // the blank line is skipped
  CHECK(f == std::vector<std::string>{"b", "2"});
  CHECK(reader.line_number() == 4);
  CHECK_FALSE(reader.next(f));

  CHECK_THROWS_AS(CsvReader("build/missing.csv"), DataError);
}

TEST_CASE("text file round-trip") {
  std::string content = "line1\nline2 with spaces\n";
  write_text_file("build/test_util.txt", content);
  CHECK(read_text_file("build/test_util.txt") == content);
  CHECK_THROWS_AS(read_text_file("build/nope.txt"), DataError);
}
