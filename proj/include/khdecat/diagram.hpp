#pragma once

// Tangle diagrams as signed planar-diagram codes.
//
// A crossing lists its four edge labels counterclockwise starting from the
// incoming under-strand. The 0-smoothing joins slots (a,b) and (c,d); the
// 1-smoothing joins (a,d) and (b,c). Boundary points 1..2n are attached to
// edge labels; outside tangles use the labels of the inside tangle they glue
// to.

#include "khdecat/cleaved.hpp"
#include "khdecat/planar.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace khdecat {

enum class Side { Inside, Outside };

struct Crossing {
  Sign sign = Sign::Plus;
  std::array<int, 4> slots{};  // a, b, c, d
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct BoundaryEntry {
  int point = 0;
  int edge = 0;
  friend bool operator==(const BoundaryEntry&, const BoundaryEntry&) = default;
};

struct TangleDiagram {
  std::string name;
  Side side = Side::Inside;
  int endpoints = 0;
  std::vector<Crossing> crossings;
  int loops = 0;  // crossingless closed components
  std::vector<BoundaryEntry> boundary;

  int n() const { return endpoints / 2; }
  friend bool operator==(const TangleDiagram&, const TangleDiagram&) = default;
};

class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Every violated invariant, one message each; empty when the diagram is valid.
std::vector<std::string> validate(const TangleDiagram& t);
// Throws DiagramError carrying all messages from validate().
void require_valid(const TangleDiagram& t);

struct CrossingCounts {
  int plus = 0;
  int minus = 0;
  friend bool operator==(const CrossingCounts&, const CrossingCounts&) = default;
};
CrossingCounts crossing_counts(const TangleDiagram& t);

// One bit per crossing, in crossing-list order.
using Resolution = std::vector<std::uint8_t>;

struct ResolvedState {
  Resolution rho;
  // Edge sets of the free circles, each sorted, ordered by smallest label.
  // Crossingless loops follow as empty sets.
  std::vector<std::vector<int>> free_circles;
  Matching lambda;  // induced matching of the boundary points
};

// Throws DiagramError if a component meets the boundary other than twice or
// the induced matching crosses; both indicate a non-planar or corrupt input.
ResolvedState resolve(const TangleDiagram& t, const Resolution& rho);

// Dense, pre-indexed form of a validated diagram for resolving many states.
class Resolver {
 public:
  explicit Resolver(const TangleDiagram& t);

  int crossing_count() const { return static_cast<int>(slots_.size()); }
  int n() const { return n_; }

  struct Summary {
    int free_circles = 0;  // includes crossingless loops
    Matching lambda;
  };
  // Bit c of mask is rho(c).
  Summary summarize(std::uint64_t mask) const;
  ResolvedState resolve(std::uint64_t mask) const;

 private:
  struct Components {
    std::vector<int> root;  // per dense edge
  };
  Components components(std::uint64_t mask) const;
  Matching lambda_from(const Components& comps) const;

  int n_ = 0;
  int loops_ = 0;
  std::vector<int> labels_;                // dense index -> edge label
  std::vector<std::array<int, 4>> slots_;  // dense indices
  std::vector<int> boundary_edge_;         // point-1 -> dense index
};

inline std::uint64_t to_mask(const Resolution& rho) {
  std::uint64_t m = 0;
  for (size_t c = 0; c < rho.size(); ++c)
    if (rho[c]) m |= std::uint64_t{1} << c;
  return m;
}

const char* side_name(Side s);

}  // namespace khdecat
