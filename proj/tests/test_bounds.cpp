#include <catch2/catch_amalgamated.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <random>

#include "levelmat/bounds.hpp"

using namespace levelmat;

TEST_CASE("ub_main") {
  CHECK(ub_main(3, 1) == 8);
  CHECK(ub_main(3, 2) == 64);
  CHECK(ub_main(4, 1) == 55);  // floor(25 sqrt(5))
  CHECK_THROWS_AS(ub_main(2, 2), parameter_error);
  CHECK_THROWS_AS(ub_main(3, 0), parameter_error);
}

TEST_CASE("ub_lambert") {
  CHECK(ub_lambert(2) == 3);
  CHECK(ub_lambert(3) == 5);
  CHECK(ub_lambert(5) == 9);
  CHECK_THROWS_AS(ub_lambert(1), parameter_error);
}

TEST_CASE("ub_ub2") {
  CHECK(ub_ub2(2, 2) == 3);
  CHECK(ub_ub2(2, 5) == 9);
  CHECK(ub_ub2(3, 2) == 63);
  CHECK(ub_ub2(4, 1) == 127);
}

TEST_CASE("ub_ub2 and ub_main agree at n=3 up to the strict/inclusive convention") {
  for (long long k = 1; k <= 10; ++k)
    CHECK(ub_ub2(3, k) + 1 == ub_main(3, k));
}

TEST_CASE("ub_lg") {
  CHECK(ub_lg(2, 2) == 5);  // floor(3^{3/2})
  CHECK(ub_lg(3, 1) == 4);  // (1/4) * 16
  CHECK(ub_lg(3, 2) == 16);
  CHECK(ub_lg(2, 1) == 2);
}

TEST_CASE("hadamard_bound") {
  CHECK(hadamard_bound(3, 1) == 2);
  CHECK(hadamard_bound(2, 1) == 1);
  CHECK(hadamard_bound(3, 2) == 16);
}

TEST_CASE("ah_row_count") {
  CHECK(ah_row_count(2, 2) == 2);
  CHECK(ah_row_count(3, 1) == 3);
  CHECK(ah_row_count(2, 1) == 1);
}

TEST_CASE("ah numerator parity") {
  for (long long n = 2; n <= 10; ++n)
    for (long long k = 1; k <= 10; ++k) {
      Int numerator = int_pow(Int(k + 1), static_cast<unsigned long>(n)) -
                      int_pow(Int(k), static_cast<unsigned long>(n)) - 1;
      CHECK(numerator % 2 == 0);
      CHECK(ah_row_count(n, k) * 2 == numerator);
    }
}

TEST_CASE("lb_exponent display values") {
  CHECK_THAT(lb_exponent(7, 0.0), Catch::Matchers::WithinAbs(40.1, 0.25));
  CHECK_THAT(lb_exponent(2, 0.5), Catch::Matchers::WithinAbs(1.80, 0.02));
  for (long long n = 2; n < 40; ++n)
    CHECK(lb_exponent(n + 1, 0.3) > lb_exponent(n, 0.3));
  CHECK_THROWS_AS(lb_exponent(4, 1.0), parameter_error);
  CHECK_THROWS_AS(lb_exponent(4, -0.1), parameter_error);
}

TEST_CASE("default_row_budget") {
  CHECK(default_row_budget(2, 1) == 2);
  CHECK(default_row_budget(2, 2) == 3);
  CHECK(default_row_budget(2, 5) == 9);
  CHECK(default_row_budget(3, 1) == 7);   // min(8, 127)... ub_ub2(3,1)=7
  CHECK(default_row_budget(3, 2) == 63);  // min(64, 63)
  CHECK(default_row_budget(4, 1) == 55);  // min(55, 127)
}

TEST_CASE("integer-sqrt flooring matches a high-precision float oracle") {
  using big_float = boost::multiprecision::cpp_bin_float_100;
  std::mt19937_64 rng(42421);
  std::uniform_int_distribution<long long> nd(2, 12), kd(1, 50);
  for (int trial = 0; trial < 1000; ++trial) {
    long long n = nd(rng), k = kd(rng);
    // (n+1)^(n+1) is exact, its sqrt is correctly rounded, and (k/2) is
    // dyadic, so only one rounding happens; the relative nudge keeps
    // exactly-integral values from flooring one short.
    big_float v = sqrt(pow(big_float(n + 1), static_cast<int>(n + 1))) *
                  pow(big_float(k) / 2, static_cast<int>(n - 1));
    v *= big_float(1) + big_float("1e-60");
    Int oracle = floor(v).convert_to<Int>();
    CHECK(ub_lg(n, k) == oracle);
  }
}

TEST_CASE("bound_report") {
  BoundReport r = bound_report(3, 2);
  REQUIRE(r.ub_main.has_value());
  CHECK(*r.ub_main == 64);
  CHECK(r.ub_ub2 == 63);
  CHECK(r.ub_lg == 16);
  CHECK(r.row_budget == 63);
  CHECK_FALSE(r.ub_lambert.has_value());

  BoundReport r2 = bound_report(2, 3);
  REQUIRE(r2.ub_lambert.has_value());
  CHECK(*r2.ub_lambert == 5);
  CHECK_FALSE(r2.ub_main.has_value());
  CHECK(r2.row_budget == 5);
}
