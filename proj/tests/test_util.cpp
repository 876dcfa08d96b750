#include <doctest.h>

#include "revagg/util.hpp"

using namespace revagg;

TEST_SUITE("util") {

TEST_CASE("trim and lower") {
  CHECK(trim("  a b \n") == "a b");
  CHECK(trim("") == "");
  CHECK(trim("   ") == "");
  CHECK(to_lower("MiXeD 12!") == "mixed 12!");
}

TEST_CASE("split_whitespace") {
  CHECK(split_whitespace("a b  c") == std::vector<std::string>{"a", "b", "c"});
  CHECK(split_whitespace("").empty());
  CHECK(split_whitespace("  \t\n ").empty());
}

TEST_CASE("join helpers") {
  CHECK(join({"a", "b"}, " ") == "a b");
  CHECK(join_nonempty({"", "x", "", "y"}, " ") == "x y");
  CHECK(join_nonempty({"", ""}, " ") == "");
}

TEST_CASE("sha256 known vectors") {
  // FIPS 180-4 test vectors
  CHECK(sha256_hex("") ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex("abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq") ==
        "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
}

TEST_CASE("splitmix64 determinism and bounds") {
  SplitMix64 a(42);
  SplitMix64 b(42);
  for (int i = 0; i < 100; ++i) {
    CHECK(a.next() == b.next());
  }
  SplitMix64 c(7);
  for (int i = 0; i < 1000; ++i) {
    double d = c.next_double();
    CHECK(d >= 0.0);
    CHECK(d < 1.0);
    CHECK(c.next_below(10) < 10);
  }
}

TEST_CASE("seeded_shuffle is a permutation and seed-stable") {
  std::vector<int> v1 = {1, 2, 3, 4, 5, 6, 7, 8};
  std::vector<int> v2 = v1;
  SplitMix64 r1(99);
  SplitMix64 r2(99);
  seeded_shuffle(v1, r1);
  seeded_shuffle(v2, r2);
  CHECK(v1 == v2);
  std::vector<int> sorted = v1;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8});
}

TEST_CASE("format_double round-trips") {
  for (double v : {0.0, 1.0, 0.1, 2.0 / 3.0, 1e-17, 87.62, -39.52}) {
    CHECK(std::stod(format_double(v)) == v);
  }
}

TEST_CASE("csv quoting round-trip") {
  std::vector<std::string> fields = {"plain", "with,comma", "with \"quote\"",
                                     "", "multi\nline"};
  std::string row = csv_row(fields);
  CHECK(parse_csv_row(row) == fields);
}

}  // TEST_SUITE
