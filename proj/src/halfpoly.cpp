#include "khdecat/halfpoly.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace khdecat {

HalfInt HalfInt::from_fraction(long num, long den) {
  if (den == 0) throw std::invalid_argument("half-integer with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long g = std::gcd(num, den);
  if (g != 0) {
    num /= g;
    den /= g;
  }
  if (den == 1) return HalfInt::from_twice(static_cast<int>(2 * num));
  if (den == 2) return HalfInt::from_twice(static_cast<int>(num));
  throw std::invalid_argument("exponent " + std::to_string(num) + "/" + std::to_string(den) +
                              " is not a half-integer");
}

HalfLaurent::HalfLaurent(Coeff constant) {
  if (constant != 0) terms_.emplace(0, std::move(constant));
}

HalfLaurent HalfLaurent::monomial(int h, HalfInt i) {
  HalfLaurent p;
  p.terms_.emplace(i.twice(), (h % 2 == 0) ? Coeff(1) : Coeff(-1));
  return p;
}

HalfLaurent HalfLaurent::circle() {
  HalfLaurent p;
  p.terms_.emplace(2, 1);
  p.terms_.emplace(-2, 1);
  return p;
}

Coeff HalfLaurent::coefficient(HalfInt exponent) const {
  auto it = terms_.find(exponent.twice());
  return it == terms_.end() ? Coeff(0) : it->second;
}

void HalfLaurent::add_term(int doubled_exponent, const Coeff& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(doubled_exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

HalfLaurent& HalfLaurent::operator-=(const HalfLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
  HalfLaurent out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

HalfLaurent& HalfLaurent::operator*=(const HalfLaurent& o) {
  *this = *this * o;
  return *this;
}

HalfLaurent operator-(const HalfLaurent& a) {
  HalfLaurent out = a;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

HalfLaurent HalfLaurent::pow(unsigned k) const {
  HalfLaurent result(1);
  HalfLaurent base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base *= base;
  }
  return result;
}

HalfLaurent HalfLaurent::shifted(HalfInt shift) const {
  HalfLaurent out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + shift.twice(), c);
  return out;
}

std::string render_exponent(HalfInt e) {
  const int t = e.twice();
  if (t % 2 == 0) return std::to_string(t / 2);
  return std::to_string(t) + "/2";
}

namespace {

std::string render_factor(int doubled) {
  if (doubled == 2) return "q";
  if (doubled >= 0 && doubled % 2 == 0) return "q^" + std::to_string(doubled / 2);
  return "q^(" + render_exponent(HalfInt::from_twice(doubled)) + ")";
}

}  // namespace

std::string render(const HalfLaurent& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const Coeff magnitude = negative ? Coeff(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += magnitude.str();
      continue;
    }
    if (magnitude != 1) out += magnitude.str() + "*";
    out += render_factor(e);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  HalfLaurent parse() {
    HalfLaurent out;
    skip_ws();
    if (eof()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
      skip_ws();
    }
    while (true) {
      auto [e, c] = term();
      out.add_term(e, negative ? Coeff(-c) : c);
      skip_ws();
      if (eof()) break;
      const char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      negative = op == '-';
      ++pos_;
      skip_ws();
    }
    return out;
  }

 private:
  std::pair<int, Coeff> term() {
    if (peek() == 'q') return {factor(), Coeff(1)};
    Coeff c = unsigned_int();
    skip_ws();
    if (!eof() && peek() == '*') {
      ++pos_;
      skip_ws();
      if (eof() || peek() != 'q') fail("expected 'q' after '*'");
      return {factor(), c};
    }
    return {0, c};
  }

  int factor() {
    ++pos_;  // 'q'
    if (eof() || peek() != '^') return 2;
    ++pos_;
    if (eof()) fail("missing exponent");
    if (peek() != '(') return 2 * to_int(unsigned_int());
    ++pos_;
    bool negative = false;
    if (!eof() && peek() == '-') {
      negative = true;
      ++pos_;
    }
    long num = to_int(unsigned_int());
    if (negative) num = -num;
    long den = 1;
    if (!eof() && peek() == '/') {
      ++pos_;
      den = to_int(unsigned_int());
    }
    if (eof() || peek() != ')') fail("expected ')'");
    ++pos_;
    try {
      return HalfInt::from_fraction(num, den).twice();
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }

  Coeff unsigned_int() {
    const size_t start = pos_;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Coeff(std::string(s_.substr(start, pos_ - start)));
  }

  int to_int(const Coeff& c) {
    if (c > 1'000'000'000) fail("exponent out of range");
    return c.convert_to<int>();
  }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at column " + std::to_string(pos_ + 1) +
                                ": " + what);
  }

  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

HalfLaurent parse_half_laurent(std::string_view text) {
  std::string_view t = text;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
  if (t == "0") return {};
  return PolyParser(t).parse();
}

}  // namespace khdecat
