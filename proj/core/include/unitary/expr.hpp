#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "unitary/kernel.hpp"

namespace unitary {

struct ParseError : std::runtime_error {
  ParseError(const std::string& message, std::size_t byte_offset)
      : std::runtime_error(message + " (at byte " + std::to_string(byte_offset) + ")"),
        offset(byte_offset) {}
  std::size_t offset;
};

/// Parse a kernel expression. Grammar (whitespace-insensitive):
///   expr     := atom | box(expr, expr) | mul(expr, expr) | inv(expr)
///             | pow(expr, INT) | scal(COMPLEX, expr)
///   atom     := one | delta1 | id | twoomega | mobrad
///             | cosa(REAL) | sina(REAL) | char(INT, INT) | ind(INT, ...)
///   COMPLEX  := REAL [("+"|"-") REAL "i"] | REAL "i"
/// char(k, j) is the j-th character mod k (0-based, principal first);
/// ind(...) lists primes. Errors cite the byte offset of the failure.
Kernel parse_kernel_expr(std::string_view text);

/// Parse a standalone complex literal such as "3", "2+0.5i" or "-1.5i".
std::complex<double> parse_complex_literal(std::string_view text);

}  // namespace unitary
