#pragma once

// Shared helpers for the test binaries: corpus access, random diagrams and
// oracles that do not go through the library's resolver.

#include "khdecat/decat.hpp"
#include "khdecat/diagram.hpp"
#include "khdecat/halfpoly.hpp"
#include "khdecat/tangle_io.hpp"

#include <filesystem>
#include <random>
#include <string>
#include <vector>

namespace testsupport {

using namespace khdecat;

std::filesystem::path corpus_path(const std::string& name);
TangleDiagram corpus(const std::string& name);
std::vector<std::string> corpus_names();  // sorted, without extension

// Closed diagram split by a sphere: inside and outside tangles plus the
// glued file. The glued file lists the inside crossings first, in order,
// then the outside ones.
struct Split {
  std::string name;
  TangleDiagram inside, outside, closed;
};
// hopf, trefoil, fig8, sum, bridge3 (all with at most 8 crossings).
std::vector<Split> corpus_splits();
Split kt_split();

// Replaces crossing c by its 0- or 1-smoothing, merging edge labels and
// turning any component left without crossings or boundary into a loop.
TangleDiagram smooth(const TangleDiagram& t, size_t c, int which);
// Closed diagram from matching boundary points: inside crossings first, in
// order, then the outside ones.
TangleDiagram glue(const TangleDiagram& inside, const TangleDiagram& outside);
// Smooths crossing c of the glued diagram in its piece and re-glues.
Split smooth_split(const Split& s, size_t c, int which);

// Walks strands through the smoothings edge by edge. Returns the number of
// closed components (loops included) and the boundary pairing as mate[p-1].
struct Trace {
  int closed = 0;
  std::vector<int> mate;
};
Trace trace(const TangleDiagram& t, const Resolution& rho);

// Bracket by recursion on the first crossing, bottoming out at crossingless
// diagrams: <L> = <L_0> - q <L_1>.
HalfLaurent skein_bracket(const TangleDiagram& t);

// Plat-style slice builder producing planar diagrams. Positions are numbered
// left to right; crossings join positions i and i+1.
class Slices {
 public:
  explicit Slices(int bottom = 0);
  Slices& cross(int i, bool slash_over, Sign sign);
  Slices& cup(int i);
  Slices& cap(int i);
  Slices& cut();
  int width() const { return static_cast<int>(pos_.size()); }

  // Inside tangle: bottom points numbered left to right, then top points
  // right to left.
  TangleDiagram rect(const std::string& name) const;
  // Requires cut() and a closed stack. Inside is the part above the cut.
  Split split(const std::string& name) const;

 private:
  int fresh() { return next_++; }
  int find(std::vector<int>& parent, int x) const;
  struct X {
    int level;
    Sign sign;
    std::array<int, 4> slots;
  };
  int next_ = 1;
  int level_ = 0;
  int cut_level_ = -1;
  std::vector<int> pos_, bottom_, cut_lower_, cut_upper_;
  std::vector<std::pair<int, int>> caps_, cut_joins_;
  std::vector<X> xs_;
};

// Random planar closed diagram (plat closure of a random word) with random
// crossing signs.
Slices random_plat(std::mt19937& rng, int bridges, int crossings, bool with_cut, int cut_after = -1);
// Random 2-endpoint inside tangle made by cutting one edge of a random closed
// diagram.
TangleDiagram random_strand_tangle(std::mt19937& rng, int max_crossings);
// Random inside tangle from a braid word on k strands.
TangleDiagram random_braid_tangle(std::mt19937& rng, int strands, int crossings);

HalfLaurent random_poly(std::mt19937& rng, int max_terms = 5, int span = 8, int max_coeff = 20);

inline HalfLaurent P(std::string_view text) { return parse_half_laurent(text); }

// Builds a vector from {"B+-", "q"} style entries over the named I_4
// generators.
DecatVector i4_vector(Side side, std::initializer_list<std::pair<const char*, const char*>> entries);
// Expected values: the class of t_left and the functional of t_right.
DecatVector t_left_expected();
DecatVector t_right_expected();

// Every (generator, circle) pair with a + decoration satisfies
// coeff(flip(g, i)) == q^{-1} coeff(g). Returns the number of pairs checked,
// or -1 on the first violation.
long flip_law_pairs(const DecatVector& v);

}  // namespace testsupport
