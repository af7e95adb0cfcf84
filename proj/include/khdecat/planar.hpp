#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace khdecat {

// Non-crossing perfect matching of the boundary points 1..2n.
//
// Invariants (checked on construction): the pairing is a fixed-point-free
// involution, no two arcs interleave, and every arc joins an odd point to an
// even one. Ordering and equality follow the even-number encoding.
class Matching {
 public:
  Matching() = default;  // n = 0

  // From an explicit arc list; throws std::invalid_argument if not a
  // non-crossing perfect matching of 1..2n.
  static Matching from_arcs(int n, std::span<const std::pair<int, int>> arcs);

  // Arc k joins point 2k-1 to code[k-1]. Throws on non-permutations of
  // {2,4,...,2n} and on codes whose arcs cross.
  static Matching decode(std::span<const int> code);
  static Matching parse(std::string_view text);  // "4,2"; "" for n = 0

  int n() const { return static_cast<int>(mate_.size() / 2); }
  int points() const { return static_cast<int>(mate_.size()); }
  int mate(int point) const { return mate_[point - 1]; }

  std::vector<int> encode() const;
  std::string to_string() const;  // "4,2"
  std::vector<std::pair<int, int>> arcs() const;  // (odd, even), by odd end

  // Relabels p -> ((p - steps - 1) mod 2n) + 1.
  Matching rotated(int steps) const;

  friend bool operator==(const Matching&, const Matching&) = default;
  friend std::strong_ordering operator<=>(const Matching& a, const Matching& b);

 private:
  explicit Matching(std::vector<int> mate) : mate_(std::move(mate)) {}
  static Matching checked(std::vector<int> mate);

  std::vector<int> mate_;  // mate_[p-1] = partner of p
};

bool arcs_cross(std::pair<int, int> x, std::pair<int, int> y);

// All non-crossing perfect matchings of 1..2n, sorted by encoding.
std::vector<Matching> enumerate_matchings(int n);

// Same as enumerate_matchings but memoised; the reference stays valid for the
// lifetime of the program.
const std::vector<Matching>& matchings_cached(int n);

inline Matching rotate_matching(const Matching& m, int steps) { return m.rotated(steps); }

unsigned long long catalan(int n);

}  // namespace khdecat
