#include <doctest.h>

#include "support.hpp"
#include "tdeg/error.hpp"
#include "tdeg/fst_build.hpp"
#include "tdeg/json_io.hpp"
#include "tdeg/stream.hpp"

using namespace tdeg;
using tdeg::test::Rng;

namespace {

const Poly kId({0, 1});
const Poly kCube = Poly::monomial(1, 3);

Fst doubling() { return fst_from_weight(Weight({2}, 0), 0); }

std::vector<long> values(const Poly& p, long offset, long count, long start = 0) {
  std::vector<long> out;
  for (long i = 0; i < count; ++i) out.push_back(test::naive_eval(p, Rat(start + i)).get_num().get_si() + offset);
  return out;
}

}  // namespace

TEST_CASE("nonneg_offset examples") {
  CHECK(nonneg_offset(Poly::linear_power(1, -2, 3)) == 8);
  CHECK(nonneg_offset(kCube) == 0);
  CHECK(nonneg_offset(Poly::linear_power(1, -1, 3)) == 1);
  CHECK_THROWS_AS(nonneg_offset(Poly({-5})), Error);
  CHECK(nonneg_offset(Poly({5})) == 0);
  CHECK(nonneg_offset(Poly({30, -11, 1})) == 0);  // (n-5)(n-6) >= 0 on integers
  CHECK(nonneg_offset(Poly({Rat(121, 4), -11, 1})) == 0);
  CHECK_THROWS_AS(nonneg_offset(Poly({0, 0, -1})), Error);
}

TEST_CASE("property: nonneg_offset is the least shift making every value nonnegative") {
  Rng rng(21);
  for (int iter = 0; iter < 200; ++iter) {
    Poly p = rng.poly(static_cast<int>(rng.integer(1, 4)), -40, 40);
    if (p.leading() < 0) p = -p;
    const Integer c = nonneg_offset(p);
    Rat lowest = 0;
    for (long n = 0; n <= 200; ++n) lowest = std::min(lowest, test::naive_eval(p, Rat(n)));
    CHECK(Rat(c) == -lowest);
  }
}

TEST_CASE("stream_prefix examples") {
  CHECK(stream_prefix(StreamSpec{kId, 0, 0}, 4) == "1101001000");
  CHECK(stream_prefix(StreamSpec{Poly::linear_power(1, -2, 3), 8, 0}, 2) == "110000000");
  CHECK(stream_prefix(StreamSpec{Poly(), 0, 0}, 3) == "111");
  CHECK(stream_prefix(auto_stream(Poly::linear_power(1, -2, 3)), 2) == "110000000");
  CHECK_THROWS_AS((StreamSpec{Poly({0, Rat(1, 2)}), 0, 0}.block(1)), Error);
  CHECK_THROWS_AS((StreamSpec{Poly({-1}), 0, 0}.block(0)), Error);
}

TEST_CASE("fst_run examples") {
  CHECK(fst_run(fst_identity(), "0110") == "0110");
  CHECK(fst_run(doubling(), "101") == "1001");
  const Fst pair = fst_from_weight(Weight({1, 1}, 0), 0);
  CHECK(fst_run(pair, "1101001000") == "10100000");
}

TEST_CASE("fst_compose examples") {
  const Fst quad = fst_compose(doubling(), doubling());
  CHECK(fst_run(quad, "10") == "10000");
  Rng rng(22);
  for (int iter = 0; iter < 20; ++iter) {
    const Fst t = rng.machine(4, 3);
    for (std::size_t len = 0; len <= 12; ++len) {
      const BitWord w = rng.word(len);
      CHECK(fst_run(fst_compose(fst_identity(), t), w) == fst_run(t, w));
      CHECK(fst_run(fst_compose(t, fst_identity()), w) == fst_run(t, w));
    }
  }
}

TEST_CASE("fst_elementary examples") {
  CHECK(fst_run(fst_elementary(Elementary::scale_up, 2), "101") == "1001");
  CHECK(fst_run(fst_elementary(Elementary::scale_down, 2), "1001") == "101");
  CHECK(fst_run(fst_elementary(Elementary::drop_blocks, 1), "1101001000") == "101001000");
  CHECK(fst_run(fst_elementary(Elementary::drop_blocks, 2), "1101001000") == "1001000");
  CHECK(fst_run(fst_elementary(Elementary::add_const, 2), "1101") == "1001000100");
  CHECK(fst_run(fst_elementary(Elementary::remove_const, 1), "10100010") == "11001");
  CHECK(fst_run(fst_prepend("110"), "10") == "11010");
  CHECK_THROWS_AS(fst_elementary(Elementary::scale_up, 0), Error);
  CHECK_THROWS_AS(fst_elementary(Elementary::scale_down, 0), Error);
}

TEST_CASE("fst_from_weight examples") {
  CHECK(doubling().size() == 1);
  CHECK(fst_run(doubling(), "1") == "1");
  CHECK(fst_run(doubling(), "0") == "00");
  const Fst pair = fst_from_weight(Weight({1, 1}, 0), 0);
  CHECK(verify_transduction(pair, StreamSpec{kId, 0, 0}, StreamSpec{Poly({1, 4}), 0, 0}, 30).ok);
  const Fst odd = fst_from_weight(Weight({0, 1}, 0), 0);
  CHECK(verify_transduction(odd, StreamSpec{kCube, 0, 0}, StreamSpec{Poly::linear_power(2, 1, 3), 0, 0}, 40).ok);
  CHECK_THROWS_AS(fst_from_weight(Weight({Rat(1, 2)}, 0), 0), Error);
}

TEST_CASE("verify_transduction examples") {
  CHECK(verify_transduction(fst_identity(), StreamSpec{kId, 0, 0}, StreamSpec{kId, 0, 0}, 100).ok);
  const auto r = verify_transduction(doubling(), StreamSpec{kId, 0, 0}, StreamSpec{kId, 0, 0}, 3);
  CHECK_FALSE(r.ok);
  // doubling gives 1 1 00 1 0000 ..., the target 1 1 0 1 00 ...
  REQUIRE(r.mismatch.has_value());
  CHECK(*r.mismatch == 3);
  CHECK(fst_run(doubling(), "1101001000").substr(0, 4) == "1100");
}

TEST_CASE("verify_transduction reports a silent machine as a mismatch") {
  // swallows everything: output never covers the target
  const Fst sink({{Transition{0, ""}, Transition{0, ""}}}, 0);
  const auto r = verify_transduction(sink, StreamSpec{kId, 0, 0}, StreamSpec{kId, 0, 0}, 5, 1000);
  CHECK_FALSE(r.ok);
  CHECK(r.output_exhausted);
  CHECK(*r.mismatch == 0);
}

TEST_CASE("property: prefix preservation") {
  Rng rng(23);
  for (int iter = 0; iter < 200; ++iter) {
    const Fst t = rng.machine(6, 4);
    const BitWord w = rng.word(static_cast<std::size_t>(rng.integer(0, 32)));
    const BitWord u = rng.word(static_cast<std::size_t>(rng.integer(0, 32)));
    const BitWord tw = fst_run(t, w);
    CHECK(fst_run(t, w + u).compare(0, tw.size(), tw) == 0);
  }
}

TEST_CASE("property: run-length engine agrees with a char-by-char run") {
  Rng rng(24);
  for (int iter = 0; iter < 300; ++iter) {
    const Fst t = rng.machine(6, 3);
    BitWord w;
    const long runs = rng.integer(0, 10);
    for (long r = 0; r < runs; ++r) w.append(static_cast<std::size_t>(rng.integer(1, 200)), rng.coin() ? '1' : '0');
    CHECK(fst_run(t, w) == test::naive_run(t, w));
  }
}

TEST_CASE("property: composition law on random machines") {
  Rng rng(25);
  for (int iter = 0; iter < 300; ++iter) {
    const Fst t1 = rng.machine(6, 3);
    const Fst t2 = rng.machine(6, 3);
    const Fst c = fst_compose(t1, t2);
    for (int k = 0; k < 4; ++k) {
      const BitWord w = rng.word(static_cast<std::size_t>(rng.integer(0, 64)));
      CHECK(test::naive_run(c, w) == test::naive_run(t2, test::naive_run(t1, w)));
    }
  }
}

TEST_CASE("property: elementary machines realize the stream equivalences") {
  Rng rng(26);
  for (int iter = 0; iter < 100; ++iter) {
    const long a = rng.integer(1, 6);
    std::vector<long> blocks;
    for (int i = 0; i < 12; ++i) blocks.push_back(rng.integer(0, 9));
    const BitWord w = test::naive_stream(blocks);
    const Fst up = fst_elementary(Elementary::scale_up, static_cast<std::uint64_t>(a));
    const Fst down = fst_elementary(Elementary::scale_down, static_cast<std::uint64_t>(a));
    CHECK(fst_run(down, fst_run(up, w)) == w);
    CHECK(fst_run(fst_compose(up, down), w) == w);
    const Fst add = fst_elementary(Elementary::add_const, static_cast<std::uint64_t>(a));
    const Fst rem = fst_elementary(Elementary::remove_const, static_cast<std::uint64_t>(a));
    CHECK(fst_run(rem, fst_run(add, w)) == w);

    std::vector<long> scaled, plus;
    for (long v : blocks) {
      scaled.push_back(a * v);
      plus.push_back(v + a);
    }
    CHECK(fst_run(up, w) == test::naive_stream(scaled));
    CHECK(fst_run(add, w) == test::naive_stream(plus));

    const long k = rng.integer(0, 5);
    const std::vector<long> rest(blocks.begin() + k, blocks.end());
    CHECK(fst_run(fst_elementary(Elementary::drop_blocks, static_cast<std::uint64_t>(k)), w) == test::naive_stream(rest));
  }
}

TEST_CASE("property: fst_from_weight soundness over 30 blocks") {
  Rng rng(27);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t k = static_cast<std::size_t>(rng.integer(1, 4));
    const Weight w = rng.natural_weight(k, 4, 5);
    const std::uint64_t skip = static_cast<std::uint64_t>(rng.integer(0, 3));
    Poly f = rng.poly(static_cast<int>(rng.integer(0, 3)), 0, 5);
    const StreamSpec source{f, 0, 0};
    // target(n) = b + sum a_i f(skip + k n + i), generated by the oracle
    const Poly g = single_product_poly(w, shift(f, Integer(static_cast<unsigned long>(skip))));
    for (long n = 0; n < 10; ++n) CHECK(g(n) == test::naive_weight_value(w, shift(f, Integer(static_cast<unsigned long>(skip))), n));
    const auto r = verify_transduction(fst_from_weight(w, skip), source, StreamSpec{g, 0, 0}, 30);
    CHECK(r.ok);
    // and bit-for-bit against the naive run on a finite prefix
    const BitWord in = stream_prefix(source, static_cast<std::uint64_t>(skip + k * 8));
    const BitWord expect = test::naive_stream(values(g, 0, 7));
    const BitWord out = test::naive_run(fst_from_weight(w, skip), in);
    CHECK(out.compare(0, expect.size(), expect) == 0);
  }
}

TEST_CASE("fst JSON round trip and schema checks") {
  Rng rng(28);
  for (int iter = 0; iter < 30; ++iter) {
    const Fst t = rng.machine(5, 3);
    CHECK(decode_fst(encode(t)) == t);
  }
  Json j = encode(doubling());
  j["transitions"].erase(1);
  CHECK_THROWS_AS(decode_fst(j), Error);
  const Json named = parse_json(R"({"states":["a","b"],"initial":"b","transitions":[
    {"from":"a","input":0,"to":"a","output":"0"},{"from":"a","input":1,"to":"b","output":""},
    {"from":"b","input":0,"to":"b","output":"00"},{"from":"b","input":1,"to":"a","output":"1"}]})");
  CHECK(fst_run(decode_fst(named), "1010") == "1000");
  Json dup = named;
  dup["transitions"][1]["input"] = 0;
  CHECK_THROWS_AS(decode_fst(dup), Error);
}
