#include "tvk/bigint.hpp"

#include <doctest.h>

#include <string>

#include "support.hpp"
#include "tvk/dyadic.hpp"
#include "tvk/errors.hpp"

using namespace tvk;

TEST_CASE("ring operations agree with the int64 oracle") {
  test::Rng rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const long long a = rng.range(-1000000000, 1000000000);
    const long long b = rng.range(-1000000000, 1000000000);
    CHECK(BigInt(a) + BigInt(b) == BigInt(a + b));
    CHECK(BigInt(a) - BigInt(b) == BigInt(a - b));
    CHECK(BigInt(a) * BigInt(b) == BigInt(a * b));
    CHECK((BigInt(a) < BigInt(b)) == (a < b));
    CHECK((BigInt(a) + BigInt(b)).to_int64() == a + b);
  }
}

TEST_CASE("shifts and floor division") {
  test::Rng rng(100);
  for (int trial = 0; trial < 500; ++trial) {
    const long long a = rng.range(-1000000000, 1000000000);
    const auto k = static_cast<unsigned>(rng.range(0, 20));
    CHECK(BigInt(a).shifted_left(k) == BigInt(a * (1LL << k)));
    long long floor_q = a / (1LL << k);
    if (a % (1LL << k) != 0 && a < 0) --floor_q;
    CHECK(BigInt(a).floordiv_pow2(k) == BigInt(floor_q));
  }
  CHECK(BigInt(-1).floordiv_pow2(5) == BigInt(-1));
  CHECK(BigInt(-32).floordiv_pow2(5) == BigInt(-1));
  CHECK(BigInt(-33).floordiv_pow2(5) == BigInt(-2));
  CHECK(BigInt(12).trailing_zero_bits() == 2);
  CHECK(BigInt::pow2(77).trailing_zero_bits() == 77);
}

TEST_CASE("decimal input and output") {
  CHECK(BigInt(0).to_decimal() == "0");
  CHECK(BigInt(-42).to_decimal() == "-42");
  CHECK(BigInt::pow2(100).to_decimal() == "1267650600228229401496703205376");
  const std::string digits = "123456789012345678901234567890";
  CHECK(BigInt::from_decimal(digits).to_decimal() == digits);
  CHECK(BigInt::from_decimal("-000123").to_decimal() == "-123");
  CHECK(BigInt::from_decimal("+17") == BigInt(17));
  CHECK_THROWS_AS(BigInt::from_decimal(""), InputError);
  CHECK_THROWS_AS(BigInt::from_decimal("12x"), InputError);
  // Big multiplication against a frozen product: (2^100)^2 = 2^200.
  CHECK((BigInt::pow2(100) * BigInt::pow2(100)) == BigInt::pow2(200));
  CHECK_THROWS_AS((BigInt::pow2(100)).to_int64(), InputError);
  const long long min64 = std::numeric_limits<long long>::min();
  CHECK(BigInt(min64).to_int64() == min64);
}

TEST_CASE("dyadic normalization and parsing") {
  CHECK(Dyadic(BigInt(4), -1) == Dyadic(BigInt(2)));
  CHECK(Dyadic(BigInt(4), -1).to_string() == "2");
  CHECK(Dyadic(BigInt(12), -3).to_string() == "3/2");
  CHECK(Dyadic().to_string() == "0");
  CHECK(Dyadic(BigInt(0), 55) == Dyadic());

  CHECK(Dyadic::from_string("5") == Dyadic(BigInt(5)));
  CHECK(Dyadic::from_string("-3/8") == Dyadic(BigInt(-3), -3));
  CHECK(Dyadic::from_string("7/2").to_string() == "7/2");
  CHECK(Dyadic::from_string("6/4") == Dyadic(BigInt(3), -1));
  CHECK_THROWS_AS(Dyadic::from_string("3/6"), InputError);
  CHECK_THROWS_AS(Dyadic::from_string("1/0"), InputError);
  CHECK_THROWS_AS(Dyadic::from_string("1/-2"), InputError);
}

TEST_CASE("dyadic field-like identities on random values") {
  test::Rng rng(101);
  auto random_dyadic = [&rng]() {
    return Dyadic(BigInt(rng.range(-64, 64)), rng.range(-6, 6));
  };
  for (int trial = 0; trial < 300; ++trial) {
    const Dyadic a = random_dyadic();
    const Dyadic b = random_dyadic();
    const Dyadic c = random_dyadic();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a + (-a) == Dyadic());
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a.times_pow2(3) == a * Dyadic(BigInt(8)));
    CHECK((a - b <=> Dyadic()) == (a <=> b));
  }
}

TEST_CASE("dyadic reduction modulo 2^k") {
  CHECK(Dyadic::from_string("7").mod_pow2(2) == Dyadic::from_string("3"));
  CHECK(Dyadic::from_string("-1").mod_pow2(3) == Dyadic::from_string("7"));
  CHECK(Dyadic::from_string("5/2").mod_pow2(0) == Dyadic::from_string("1/2"));
  CHECK(Dyadic::from_string("5/8").mod_pow2(-1) == Dyadic::from_string("1/8"));
  test::Rng rng(102);
  for (int trial = 0; trial < 200; ++trial) {
    const Dyadic v = Dyadic(BigInt(rng.range(-64, 64)), rng.range(-5, 5));
    const long long k = rng.range(-4, 4);
    const Dyadic r = v.mod_pow2(k);
    CHECK(r >= Dyadic());
    CHECK(r < Dyadic(BigInt(1), k));
    // v - r is an integer multiple of 2^k.
    const Dyadic scaled = (v - r).times_pow2(-k);
    CHECK(scaled.is_integer());
  }
}
