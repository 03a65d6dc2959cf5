#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "homog/field.hpp"

using namespace homog;

TEST_CASE("rational arithmetic normalizes to lowest terms", "[field]") {
  RationalField F;
  auto x = F.parse("6/4");
  CHECK(F.to_string(x) == "3/2");
  CHECK(F.to_string(F.parse("-10/5")) == "-2");
  CHECK(F.to_string(F.add(F.parse("1/3"), F.parse("1/6"))) == "1/2");
  CHECK(F.to_string(F.div(F.one(), F.parse("-7"))) == "-1/7");
  CHECK(F.is_zero(F.sub(x, F.parse("3/2"))));
  CHECK_THROWS_AS(F.parse("1/0"), parse_error);
  CHECK_THROWS_AS(F.parse("2+3i"), parse_error);
  CHECK_THROWS_AS(F.parse("abc"), parse_error);
  CHECK_THROWS_AS(F.inv(F.zero()), error);
}

TEST_CASE("gaussian rationals: i*i = -1 and canonical printing", "[field]") {
  GaussianField F;
  CHECK(F.eq(F.mul(F.i(), F.i()), F.from_int(-1)));
  CHECK(F.to_string(F.parse("2-3i")) == "2-3i");
  CHECK(F.to_string(F.parse("-i")) == "-i");
  CHECK(F.to_string(F.parse("1/2+1/2i")) == "1/2+1/2i");
  CHECK(F.to_string(F.mul(F.parse("1+i"), F.parse("1-i"))) == "2");
  auto z = F.parse("3+4i");
  CHECK(F.eq(F.mul(z, F.inv(z)), F.one()));
  CHECK(F.has_i());
}

TEST_CASE("prime field arithmetic and inverses", "[field]") {
  PrimeField F(2147483647ull);
  CHECK(F.from_int(-1) == 2147483646ull);
  CHECK(F.eq(F.mul(F.parse("1/3"), F.from_int(3)), F.one()));
  for (std::uint64_t a : {1ull, 2ull, 12345ull, 2147483646ull})
    CHECK(F.eq(F.mul(a, F.inv(a)), F.one()));
  CHECK_THROWS_AS(PrimeField(91ull), error);  // 7*13
  CHECK_THROWS_AS(FieldSpec::parse("Fp:91"), parse_error);
}

TEST_CASE("square roots of -1 exist exactly when p=2 or p=1 mod 4", "[field]") {
  PrimeField F2(2), F5(5), F13(13), F1000033(1000033ull);
  for (const PrimeField& F : {F2, F5, F13, F1000033}) {
    REQUIRE(F.has_i());
    CHECK(F.eq(F.mul(F.i(), F.i()), F.from_int(-1)));
  }
  PrimeField F3(3), F7(7), F2147483647(2147483647ull);  // all = 3 mod 4
  for (const PrimeField& F : {F3, F7, F2147483647}) {
    CHECK(!F.has_i());
    CHECK_THROWS_AS(F.parse("1+2i"), parse_error);
  }
  CHECK((F13.i() == 5 || F13.i() == 8));  // 5^2 = 25 = -1 (mod 13)
}

TEST_CASE("field spec round-trips through text", "[field]") {
  for (const char* s : {"Q", "Qi", "Fp:2", "Fp:1000033", "Fp:2147483647"}) {
    auto spec = FieldSpec::parse(s);
    CHECK(spec.to_string() == s);
    with_field_context(spec, [&](auto F) { CHECK(F.spec() == spec); });
  }
  CHECK_THROWS_AS(FieldSpec::parse("R"), parse_error);
  CHECK_THROWS_AS(FieldSpec::parse("Fp:"), parse_error);
  CHECK_THROWS_AS(FieldSpec::parse("Fp:12x"), parse_error);
}

TEST_CASE("field axioms hold on random elements", "[field]") {
  std::mt19937_64 rng(20260816);
  auto check_axioms = [&](auto F) {
    using Elem = typename decltype(F)::Elem;
    auto rnd = [&]() -> Elem {
      long long n = static_cast<long long>(rng() % 41) - 20;
      long long d = 1 + static_cast<long long>(rng() % 7);
      return F.div(F.from_int(n), F.from_int(d));
    };
    for (int t = 0; t < 50; ++t) {
      Elem a = rnd(), b = rnd(), c = rnd();
      CHECK(F.eq(F.add(a, b), F.add(b, a)));
      CHECK(F.eq(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c))));
      CHECK(F.eq(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c))));
      CHECK(F.is_zero(F.add(a, F.neg(a))));
      if (!F.is_zero(a)) CHECK(F.eq(F.div(F.mul(a, b), a), b));
      CHECK(F.eq(F.parse(F.to_string(a)), a));
    }
  };
  check_axioms(RationalField{});
  check_axioms(GaussianField{});
  check_axioms(PrimeField{1000033ull});
  check_axioms(PrimeField{2147483647ull});
}
