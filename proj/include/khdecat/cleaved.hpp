#pragma once

// Decorated cleaved links: the basis of the module I_{2n}.
//
// A cleaved link is recorded in normal form as its inside and outside
// matchings. Its circles are the orbits of alternately following inside and
// outside arcs; they are ordered by their smallest boundary point, and the
// decoration list follows that order.

#include "khdecat/planar.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace khdecat {

enum class Sign : std::int8_t { Plus = 1, Minus = -1 };

inline int value(Sign s) { return static_cast<int>(s); }
inline Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

// Each circle as its sorted point set; circles sorted by smallest point.
using Circles = std::vector<std::vector<int>>;

// Requires inside.n() == outside.n().
Circles circles_of(const Matching& inside, const Matching& outside);

class CleavedGen {
 public:
  CleavedGen() = default;  // the empty cleaved link, n = 0

  // Throws std::invalid_argument on size mismatch or a decoration count that
  // differs from the circle count.
  CleavedGen(Matching inside, Matching outside, std::vector<Sign> decs);

  int n() const { return inside_.n(); }
  const Matching& inside() const { return inside_; }
  const Matching& outside() const { return outside_; }
  const std::vector<Sign>& decs() const { return decs_; }
  Circles circles() const { return circles_of(inside_, outside_); }

  // Sum of the decorations as +/-1 values.
  int decoration_sum() const;

  friend bool operator==(const CleavedGen&, const CleavedGen&) = default;
  // Inside encoding, then outside encoding, then decorations with + before -.
  friend std::strong_ordering operator<=>(const CleavedGen& a, const CleavedGen& b);

 private:
  Matching inside_;
  Matching outside_;
  std::vector<Sign> decs_;
};

// "[<inside>|<outside>|<decs>]", e.g. "[4,2|4,2|-+]". The empty link is "[||]".
std::string key(const CleavedGen& g);
CleavedGen parse_key(std::string_view text);

// Every generator with the given n, in CleavedGen order.
std::vector<CleavedGen> enumerate_cleaved(int n);

// circle_index is 1-based. Throws std::out_of_range.
CleavedGen flip_decoration(const CleavedGen& g, int circle_index);

}  // namespace khdecat
