#pragma once

// Laurent polynomials in q^{1/2} with exact integer coefficients.
//
// Exponents are stored doubled: the key e stands for q^{e/2}. Coefficients are
// arbitrary precision so no state sum can silently overflow.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace khdecat {

using Coeff = boost::multiprecision::cpp_int;

// A half-integer, stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
  static constexpr HalfInt from_int(int value) { return HalfInt(2 * value); }
  // Throws std::invalid_argument unless num/den reduces to denominator 1 or 2.
  static HalfInt from_fraction(long num, long den);

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
  constexpr auto operator<=>(const HalfInt&) const = default;

 private:
  constexpr explicit HalfInt(int twice) : twice_(twice) {}
  int twice_ = 0;
};

class HalfLaurent {
 public:
  using Terms = std::map<int, Coeff>;  // doubled exponent -> nonzero coefficient

  HalfLaurent() = default;
  explicit HalfLaurent(Coeff constant);

  // (-1)^h q^i
  static HalfLaurent monomial(int h, HalfInt i);
  static HalfLaurent q_power(HalfInt i) { return monomial(0, i); }
  // q + q^{-1}, the value of a single free circle.
  static HalfLaurent circle();

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coeff coefficient(HalfInt exponent) const;

  // In-place accumulation used by the state sums.
  void add_term(int doubled_exponent, const Coeff& c);

  HalfLaurent& operator+=(const HalfLaurent& o);
  HalfLaurent& operator-=(const HalfLaurent& o);
  HalfLaurent& operator*=(const HalfLaurent& o);

  friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
  friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) { return a -= b; }
  friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b);
  friend HalfLaurent operator-(const HalfLaurent& a);

  HalfLaurent pow(unsigned k) const;
  // Multiplies by q^{shift}.
  HalfLaurent shifted(HalfInt shift) const;

  friend bool operator==(const HalfLaurent&, const HalfLaurent&) = default;

 private:
  Terms terms_;
};

// Canonical text, e.g. "q^6 + q^4 + q^2 + 1", "-q^(5/2)", "2*q^(-1) - 3".
std::string render(const HalfLaurent& p);

// Inverse of render. Also accepts any term order and repeated exponents, which
// are summed. Throws std::invalid_argument with a column on malformed input.
HalfLaurent parse_half_laurent(std::string_view text);

// Renders a half-integer exponent the way it appears inside "q^(...)".
std::string render_exponent(HalfInt e);

}  // namespace khdecat
