#include "unitary/expr.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "unitary/catalog.hpp"
#include "unitary/characters.hpp"

namespace unitary {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Kernel parse() {
    Kernel k = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input after expression");
    return k;
  }

  std::complex<double> parse_complex_only() {
    const std::complex<double> z = parse_complex();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input after number");
    return z;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  std::string parse_ident() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (pos_ == start) fail("expected an identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  double parse_real() {
    skip_ws();
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr == begin) fail("expected a number");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  std::int64_t parse_int() {
    skip_ws();
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr == begin) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  bool consume_imag_suffix() {
    if (pos_ < text_.size() && (text_[pos_] == 'i' || text_[pos_] == 'I')) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::complex<double> parse_complex() {
    const double first = parse_real();
    if (consume_imag_suffix()) return {0.0, first};
    skip_ws();
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      const std::size_t mark = pos_;
      const double sign = text_[pos_] == '-' ? -1.0 : 1.0;
      ++pos_;
      skip_ws();
      const char* begin = text_.data() + pos_;
      const char* end = text_.data() + text_.size();
      double magnitude = 0.0;
      const auto [ptr, ec] = std::from_chars(begin, end, magnitude);
      if (ec == std::errc{} && ptr != begin) {
        pos_ += static_cast<std::size_t>(ptr - begin);
        if (consume_imag_suffix()) return {first, sign * magnitude};
      }
      pos_ = mark;  // not a complex tail; leave the sign for the caller
    }
    return {first, 0.0};
  }

  Kernel parse_expr() {
    const std::size_t at = pos_;
    const std::string name = parse_ident();
    if (name == "one") return catalog::one();
    if (name == "delta1") return catalog::delta1();
    if (name == "id") return catalog::id();
    if (name == "twoomega") return catalog::two_omega();
    if (name == "mobrad") return catalog::mob_rad();
    if (name == "cosa") {
      expect('(');
      const double y = parse_real();
      expect(')');
      return catalog::cosa(y);
    }
    if (name == "sina") {
      expect('(');
      const double y = parse_real();
      expect(')');
      return catalog::sina(y);
    }
    if (name == "char") {
      expect('(');
      const std::int64_t k = parse_int();
      expect(',');
      const std::int64_t index = parse_int();
      expect(')');
      if (k < 2) fail("char: modulus must be >= 2");
      const auto chars = characters(k);
      if (index < 0 || index >= static_cast<std::int64_t>(chars.size())) {
        fail("char: index out of range (phi(" + std::to_string(k) +
             ") = " + std::to_string(chars.size()) + ")");
      }
      return chars[static_cast<std::size_t>(index)].kernel();
    }
    if (name == "ind") {
      expect('(');
      std::vector<std::int64_t> primes;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] != ')') {
        primes.push_back(parse_int());
        skip_ws();
        while (pos_ < text_.size() && text_[pos_] == ',') {
          ++pos_;
          primes.push_back(parse_int());
          skip_ws();
        }
      }
      expect(')');
      for (std::int64_t p : primes) {
        if (!is_prime(p)) fail("ind: " + std::to_string(p) + " is not prime");
      }
      return catalog::indicator_primes(std::move(primes));
    }
    if (name == "box" || name == "mul") {
      expect('(');
      Kernel lhs = parse_expr();
      expect(',');
      Kernel rhs = parse_expr();
      expect(')');
      return name == "box" ? box_add(lhs, rhs) : pointwise_mul(lhs, rhs);
    }
    if (name == "inv") {
      expect('(');
      Kernel inner = parse_expr();
      expect(')');
      return box_inverse(inner);
    }
    if (name == "pow") {
      expect('(');
      Kernel inner = parse_expr();
      expect(',');
      const std::int64_t k = parse_int();
      expect(')');
      if (k < 1) fail("pow: exponent must be >= 1");
      return pow_pointwise(inner, static_cast<int>(k));
    }
    if (name == "scal") {
      expect('(');
      const std::complex<double> lambda = parse_complex();
      expect(',');
      Kernel inner = parse_expr();
      expect(')');
      return scalar_ext(lambda, inner);
    }
    pos_ = at;
    fail("unknown kernel '" + name + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Kernel parse_kernel_expr(std::string_view text) { return Parser(text).parse(); }

std::complex<double> parse_complex_literal(std::string_view text) {
  return Parser(text).parse_complex_only();
}

}  // namespace unitary
