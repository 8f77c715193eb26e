#include <cmath>

#include "doctest.h"
#include "support.hpp"
#include "unitary/catalog.hpp"
#include "unitary/expr.hpp"

using namespace unitary;

TEST_CASE("atoms parse") {
  CHECK(parse_kernel_expr("one").eval_int(360) == 1);
  CHECK(parse_kernel_expr("delta1").eval_int(7) == 0);
  CHECK(parse_kernel_expr("id").eval_int(12) == 12);
  CHECK(parse_kernel_expr("twoomega").eval_int(12) == 4);
  CHECK(std::abs(parse_kernel_expr("mobrad").eval(6) - std::complex<double>(1.0 / 6.0)) <= 1e-15);
  CHECK(std::abs(parse_kernel_expr("cosa(0.5)").at(2, 1) -
                 std::complex<double>(std::cos(0.5 * std::log(2.0)))) <= 1e-15);
  CHECK(std::abs(parse_kernel_expr("sina(2)").at(3, 2) -
                 std::complex<double>(std::sin(2.0 * std::log(9.0)))) <= 1e-15);
}

TEST_CASE("combinators parse and compose") {
  CHECK(parse_kernel_expr("box(one,one)").eval_int(12) == 4);
  CHECK(parse_kernel_expr("box(id, one)").eval_int(12) == 20);
  CHECK(parse_kernel_expr("mul(twoomega, twoomega)").eval_int(12) == 16);
  CHECK(parse_kernel_expr("box(one, inv(one))").eval_int(30) == 0);
  CHECK(parse_kernel_expr("pow(scal(-1, one), 2)").eval_int(210) == 1);
  CHECK(parse_kernel_expr("scal(2, one)").eval_int(12) == 4);

  // phi through the catalog identity, at 12
  const Kernel phi_expr = parse_kernel_expr("mul(id, box(one, mobrad))");
  CHECK(std::abs(phi_expr.eval(12) - 4.0) <= 1e-12);
}

TEST_CASE("whitespace is insignificant") {
  const Kernel a = parse_kernel_expr("box(one,inv(one))");
  const Kernel b = parse_kernel_expr("  box ( one ,\tinv( one ) ) ");
  for (std::int64_t n = 1; n <= 100; ++n) CHECK(a.eval_int(n) == b.eval_int(n));
}

TEST_CASE("characters and indicators in expressions") {
  const Kernel chi0 = parse_kernel_expr("char(5,0)");
  CHECK(std::abs(chi0.eval(7) - 1.0) <= 1e-12);
  CHECK(std::abs(chi0.eval(10)) == 0.0);

  // chi^4 = principal for every character mod 5
  for (int j = 0; j < 4; ++j) {
    const Kernel powered = parse_kernel_expr("pow(char(5," + std::to_string(j) + "),4)");
    for (std::int64_t n = 1; n <= 200; ++n) {
      REQUIRE(std::abs(powered.eval(n) - chi0.eval(n)) <= 1e-12);
    }
  }

  CHECK(parse_kernel_expr("ind(2,3)").eval_int(6) == 1);
  CHECK(parse_kernel_expr("ind(2,3)").eval_int(5) == 0);
  CHECK(parse_kernel_expr("ind()").eval_int(5) == 0);  // empty set: delta1

  const Kernel mixed = parse_kernel_expr("mul(id, char(5,2))");
  CHECK(std::abs(mixed.eval(10)) == 0.0);  // character vanishes off the units
  CHECK(std::abs(std::abs(mixed.eval(7)) - 7.0) <= 1e-9);
}

TEST_CASE("complex scalar literals") {
  const Kernel k1 = parse_kernel_expr("scal(0.5+0.25i, one)");
  CHECK(std::abs(k1.at(2, 1) - std::complex<double>(0.5, 0.25)) == 0.0);
  const Kernel k2 = parse_kernel_expr("scal(2i, one)");
  CHECK(std::abs(k2.at(2, 1) - std::complex<double>(0.0, 2.0)) == 0.0);
  const Kernel k3 = parse_kernel_expr("scal(-1.5-0.5i, one)");
  CHECK(std::abs(k3.at(2, 1) - std::complex<double>(-1.5, -0.5)) == 0.0);

  CHECK(parse_complex_literal("3") == std::complex<double>(3.0, 0.0));
  CHECK(parse_complex_literal("2+0.5i") == std::complex<double>(2.0, 0.5));
  CHECK(parse_complex_literal(" 1.5 - 0.3i ") == std::complex<double>(1.5, -0.3));
  CHECK(parse_complex_literal("-2i") == std::complex<double>(0.0, -2.0));
}

TEST_CASE("parse errors carry byte offsets") {
  CHECK_THROWS_AS(parse_kernel_expr("nope"), ParseError);
  CHECK_THROWS_AS(parse_kernel_expr("box(one)"), ParseError);
  CHECK_THROWS_AS(parse_kernel_expr("box(one,one"), ParseError);
  CHECK_THROWS_AS(parse_kernel_expr("pow(one,0)"), ParseError);
  CHECK_THROWS_AS(parse_kernel_expr("ind(4)"), ParseError);
  CHECK_THROWS_AS(parse_kernel_expr("one extra"), ParseError);
  CHECK_THROWS_AS(parse_kernel_expr("char(5,9)"), ParseError);

  try {
    parse_kernel_expr("box(one,nope)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset == 8);
    CHECK(std::string(e.what()).find("byte 8") != std::string::npos);
  }
}
