#include "khdecat/cleaved.hpp"

#include <algorithm>
#include <stdexcept>

namespace khdecat {

Circles circles_of(const Matching& inside, const Matching& outside) {
  if (inside.n() != outside.n())
    throw std::invalid_argument("inside and outside matchings have different sizes");
  const int np = inside.points();
  std::vector<bool> seen(np + 1, false);
  Circles out;
  // Scanning points in increasing order starts each circle at its minimum, so
  // circles come out already ordered.
  for (int start = 1; start <= np; ++start) {
    if (seen[start]) continue;
    std::vector<int> circle;
    int p = start;
    bool use_inside = true;
    do {
      seen[p] = true;
      circle.push_back(p);
      p = use_inside ? inside.mate(p) : outside.mate(p);
      use_inside = !use_inside;
    } while (p != start);
    std::sort(circle.begin(), circle.end());
    out.push_back(std::move(circle));
  }
  return out;
}

CleavedGen::CleavedGen(Matching inside, Matching outside, std::vector<Sign> decs)
    : inside_(std::move(inside)), outside_(std::move(outside)), decs_(std::move(decs)) {
  const auto count = circles_of(inside_, outside_).size();
  if (decs_.size() != count)
    throw std::invalid_argument("cleaved link has " + std::to_string(count) + " circles but " +
                                std::to_string(decs_.size()) + " decorations");
}

int CleavedGen::decoration_sum() const {
  int s = 0;
  for (Sign d : decs_) s += value(d);
  return s;
}

std::strong_ordering operator<=>(const CleavedGen& a, const CleavedGen& b) {
  if (auto c = a.inside_ <=> b.inside_; c != 0) return c;
  if (auto c = a.outside_ <=> b.outside_; c != 0) return c;
  const size_t len = std::min(a.decs_.size(), b.decs_.size());
  for (size_t i = 0; i < len; ++i) {
    // + sorts before -, which is the reverse of the underlying values.
    if (auto c = value(b.decs_[i]) <=> value(a.decs_[i]); c != 0) return c;
  }
  return a.decs_.size() <=> b.decs_.size();
}

std::string key(const CleavedGen& g) {
  std::string out = "[" + g.inside().to_string() + "|" + g.outside().to_string() + "|";
  for (Sign d : g.decs()) out += sign_char(d);
  out += ']';
  return out;
}

CleavedGen parse_key(std::string_view text) {
  if (text.size() < 4 || text.front() != '[' || text.back() != ']')
    throw std::invalid_argument("generator key must look like [in|out|decs]");
  const std::string_view body = text.substr(1, text.size() - 2);
  const size_t bar1 = body.find('|');
  const size_t bar2 = bar1 == body.npos ? body.npos : body.find('|', bar1 + 1);
  if (bar2 == body.npos || body.find('|', bar2 + 1) != body.npos)
    throw std::invalid_argument("generator key needs exactly two '|' separators");
  Matching inside = Matching::parse(body.substr(0, bar1));
  Matching outside = Matching::parse(body.substr(bar1 + 1, bar2 - bar1 - 1));
  std::vector<Sign> decs;
  for (char c : body.substr(bar2 + 1)) {
    if (c == '+') decs.push_back(Sign::Plus);
    else if (c == '-') decs.push_back(Sign::Minus);
    else throw std::invalid_argument(std::string("bad decoration character '") + c + "'");
  }
  return CleavedGen(std::move(inside), std::move(outside), std::move(decs));
}

std::vector<CleavedGen> enumerate_cleaved(int n) {
  std::vector<CleavedGen> out;
  const auto& ms = matchings_cached(n);
  for (const Matching& in : ms) {
    for (const Matching& outm : ms) {
      const size_t k = circles_of(in, outm).size();
      // The first circle is the most significant bit, so counting up lists
      // decorations with + before -.
      for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
        std::vector<Sign> decs(k, Sign::Plus);
        for (size_t i = 0; i < k; ++i)
          if (mask & (1ul << (k - 1 - i))) decs[i] = Sign::Minus;
        out.emplace_back(in, outm, std::move(decs));
      }
    }
  }
  return out;
}

CleavedGen flip_decoration(const CleavedGen& g, int circle_index) {
  if (circle_index < 1 || circle_index > static_cast<int>(g.decs().size()))
    throw std::out_of_range("circle index " + std::to_string(circle_index) + " out of range 1.." +
                            std::to_string(g.decs().size()));
  auto decs = g.decs();
  decs[circle_index - 1] = flip(decs[circle_index - 1]);
  return CleavedGen(g.inside(), g.outside(), std::move(decs));
}

}  // namespace khdecat
