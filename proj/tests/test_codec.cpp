#include "doctest.h"
#include "tropkex/codec.hpp"
#include "tropkex/errors.hpp"
#include "tropkex/sampling.hpp"

using namespace tropkex;

namespace {

ParseError parse_failure(const std::string& text) {
  try {
    decode_matrix(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no ParseError for: " << text);
  return ParseError(0, 0, "");
}

}  // namespace

TEST_CASE("encode") {
  CHECK(encode_matrix(TropMatrix{{1, 2}, {5, -1}}) == "TROPMAT 1 2\n1 2\n5 -1\n");
  CHECK(encode_matrix(TropMatrix(1)) == "TROPMAT 1 1\ninf\n");
  TropMatrix big(1);
  big(0, 0) = ExtVal(BigInt("-123456789012345678901234567890"));
  CHECK(encode_matrix(big) == "TROPMAT 1 1\n-123456789012345678901234567890\n");
}

TEST_CASE("decode") {
  CHECK(decode_matrix("TROPMAT 1 2\n1 2\n5 -1\n") == TropMatrix{{1, 2}, {5, -1}});
  CHECK(decode_matrix("TROPMAT 1 2\ninf 0\n-7 inf\n") ==
        TropMatrix{{ExtVal::infinity(), 0}, {-7, ExtVal::infinity()}});
}

TEST_CASE("parse errors carry positions") {
  const ParseError e = parse_failure("TROPMAT 1 2\n1 2\n5\n");
  CHECK(e.line() == 3);
  CHECK(std::string(e.what()).find("row 2 has 1 tokens, expected 2") != std::string::npos);

  CHECK(parse_failure("TROPMAT 2 1\n0\n").line() == 1);
  CHECK(parse_failure("TROPMAT 1 1\n01\n").line() == 2);
  CHECK(parse_failure("TROPMAT 1 1\n01\n").column() == 1);
  CHECK(parse_failure("TROPMAT 1 2\n1 x\n3 4\n").column() == 3);
}

TEST_CASE("non-canonical input is rejected") {
  for (const char* bad : {
           "",
           "TROPMAT 1 0\n",
           "TROPMAT 1 01\n0\n",
           "TROPMAT 1 1\n+1\n",
           "TROPMAT 1 1\n-0\n",
           "TROPMAT 1 1\n007\n",
           "TROPMAT 1 1\nINF\n",
           "TROPMAT 1 1\n-inf\n",
           "TROPMAT 1 1\n1",
           "TROPMAT 1 1\n1\n\n",
           "TROPMAT 1 1\n 1\n",
           "TROPMAT 1 1\n1 \n",
           "TROPMAT 1 2\n1  2\n3 4\n",
           "TROPMAT 1 2\n1\t2\n3 4\n",
           "TROPMAT 1 1\r\n1\r\n",
           "TROPMAT 1 2\n1 2 3\n3 4\n",
           "TROPMAT 1 2\n1 2\n",
           "tropmat 1 1\n1\n",
           "TROPMAT 1 1\n-\n",
       }) {
    CAPTURE(bad);
    CHECK_THROWS_AS(decode_matrix(bad), ParseError);
  }
}

TEST_CASE("round trip") {
  SplitMix64 rng(31);
  for (int t = 0; t < 300; ++t) {
    const std::size_t k = static_cast<std::size_t>(rng.uniform(1, 6));
    TropMatrix x = random_matrix_with_eps(rng, k, -1000000, 1000000, 5);
    if (t % 10 == 0) x(0, 0) = ExtVal(BigInt(rng.uniform(-5, 5)) << 300);
    const std::string text = encode_matrix(x);
    CHECK(decode_matrix(text) == x);
    CHECK(encode_matrix(decode_matrix(text)) == text);
  }
  CHECK(decode_matrix(encode_matrix(TropMatrix(4))) == TropMatrix(4));
}

TEST_CASE("fingerprints") {
  CHECK(fnv1a("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cull);
  CHECK(fnv1a("foobar") == 0x85944171f73967e8ull);
  const TropMatrix x{{1, 2}, {5, -1}};
  CHECK(fingerprint(x) == fnv1a(encode_matrix(x)));
  CHECK(fingerprint(x) != fingerprint(TropMatrix{{1, 2}, {5, 0}}));
  CHECK(to_hex(0xcbf29ce484222325ull) == "cbf29ce484222325");
  CHECK(to_hex(1) == "0000000000000001");
  CHECK(from_hex("00000000000000ff") == 255);
  CHECK_THROWS_AS(from_hex("ff"), InputError);
  CHECK_THROWS_AS(from_hex("00000000000000FF"), InputError);
  CHECK_THROWS_AS(from_hex("000000000000000g"), InputError);
}
