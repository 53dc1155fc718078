#include "doctest.h"

#include <set>
#include <vector>

#include "diagen/util/format.hpp"
#include "diagen/util/hash.hpp"
#include "diagen/util/rng.hpp"
#include "diagen/util/text.hpp"

using namespace diagen::util;

TEST_CASE("rng is deterministic for equal seeds") {
  Rng a(42), b(42);
  for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("rng differs across seeds") {
  Rng a(1), b(2);
  int same = 0;
  for (int i = 0; i < 100; ++i)
    if (a.next_u64() == b.next_u64()) ++same;
  CHECK(same == 0);
}

TEST_CASE("uniform_int covers inclusive range") {
  Rng rng(7);
  std::set<int> seen;
  for (int i = 0; i < 2000; ++i) seen.insert(rng.uniform_int(3, 7));
  CHECK(seen == std::set<int>{3, 4, 5, 6, 7});
}

TEST_CASE("uniform_real stays in range") {
  Rng rng(9);
  for (int i = 0; i < 1000; ++i) {
    double v = rng.uniform_real(-2.5, 4.5);
    CHECK(v >= -2.5);
    CHECK(v < 4.5);
  }
}

TEST_CASE("pick_weighted respects zero weights") {
  Rng rng(11);
  std::vector<double> w = {0.0, 1.0, 0.0};
  for (int i = 0; i < 200; ++i) CHECK(rng.pick_weighted(w) == 1);
}

TEST_CASE("shuffle is a permutation") {
  Rng rng(13);
  std::vector<int> v = {1, 2, 3, 4, 5, 6, 7};
  auto w = v;
  rng.shuffle(w);
  std::sort(w.begin(), w.end());
  CHECK(w == v);
}

TEST_CASE("sha256 matches known vectors") {
  // Standard test vectors.
  CHECK(sha256_hex("") ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex("abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq") ==
        "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
}

TEST_CASE("derive_seed is stable and stream-separated") {
  auto s1 = derive_seed(99, "plane", 0);
  auto s2 = derive_seed(99, "plane", 0);
  auto s3 = derive_seed(99, "plane", 1);
  auto s4 = derive_seed(99, "function", 0);
  auto s5 = derive_seed(100, "plane", 0);
  CHECK(s1 == s2);
  CHECK(s1 != s3);
  CHECK(s1 != s4);
  CHECK(s1 != s5);
}

TEST_CASE("format_quantity renders two decimals, integers bare") {
  CHECK(format_quantity(16.0) == "16");
  CHECK(format_quantity(16.25) == "16.25");
  CHECK(format_quantity(16.256) == "16.26");
  CHECK(format_quantity(-3.5) == "-3.50");  // non-integers keep both decimals
  CHECK(format_quantity(0.0) == "0");
  CHECK(format_quantity(-0.001) == "0");  // negative-zero guard
  CHECK(format_quantity(2.0 / 3.0) == "0.67");
}

TEST_CASE("format_coord renders one decimal") {
  CHECK(format_coord(3.0) == "3");
  CHECK(format_coord(3.14) == "3.1");
  CHECK(format_coord(-0.04) == "0");
}

TEST_CASE("join_with_and") {
  CHECK(join_with_and({}) == "");
  CHECK(join_with_and({"a"}) == "a");
  CHECK(join_with_and({"a", "b"}) == "a and b");
  CHECK(join_with_and({"a", "b", "c"}) == "a, b and c");
}

TEST_CASE("split_words counts whitespace tokens") {
  auto w = split_words("  the square ABCD\thas\narea 16.00  ");
  CHECK(w.size() == 6);
  CHECK(w[0] == "the");
  CHECK(w[5] == "16.00");
}

TEST_CASE("vocab_token strips punctuation and lowercases") {
  CHECK(vocab_token("Square,") == "square");
  CHECK(vocab_token("(ABCD)") == "abcd");
  CHECK(vocab_token("16.00.") == "16.00");
  CHECK(vocab_token("--") == "");
}

TEST_CASE("extract_numerals finds signed decimals") {
  auto n = extract_numerals("side is 4 and area -16.25, point (3,-2)");
  REQUIRE(n.size() == 4);
  CHECK(n[0] == "4");
  CHECK(n[1] == "-16.25");
  CHECK(n[2] == "3");
  CHECK(n[3] == "-2");
}

TEST_CASE("extract_numerals does not steal minus from ranges") {
  // "5-3" reads as 5 then 3: '-' is preceded by an alphanumeric.
  auto n = extract_numerals("range 5-3");
  REQUIRE(n.size() == 2);
  CHECK(n[0] == "5");
  CHECK(n[1] == "3");
}

TEST_CASE("count_chars excludes line terminators") {
  CHECK(count_chars("ab\ncd\r\n") == 4);
}
