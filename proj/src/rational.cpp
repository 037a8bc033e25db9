#include "tdeg/rational.hpp"

#include <algorithm>
#include <limits>

#include "tdeg/error.hpp"

namespace tdeg {

namespace {

bool is_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

std::string to_string(const Rat& r) { return r.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Integer parse_integer(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!is_digits(body)) throw Error(ErrorKind::Parse, "not an integer: '" + std::string(text) + "'");
  std::string s(text.front() == '+' ? text.substr(1) : text);
  return Integer(s, 10);
}

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_integer(text));
  std::string_view den = text.substr(slash + 1);
  if (!is_digits(den)) throw Error(ErrorKind::Parse, "bad denominator in '" + std::string(text) + "'");
  Integer num = parse_integer(text.substr(0, slash));
  Integer d(std::string(den), 10);
  if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  return make_rat(num, d);
}

Integer floor(const Rat& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer ceil(const Rat& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

std::uint64_t to_u64(const Integer& z) {
  if (z < 0) throw Error(ErrorKind::NegativeBlock, "negative value " + z.get_str());
  if (mpz_sizeinbase(z.get_mpz_t(), 2) > 64) throw Error(ErrorKind::TooLarge, "value exceeds 64 bits: " + z.get_str());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, z.get_mpz_t());
  return out;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

}  // namespace tdeg
