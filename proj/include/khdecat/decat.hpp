#pragma once

// Decategorified invariants of tangles as signed, q-graded counts of
// decorated resolutions.
//
// An inside tangle gives a vector in I_{2n}; an outside tangle gives a
// functional on I_{2n}, stored by its values on the basis. Both are the same
// state sum: only the slot of the cleaved link that receives the induced
// matching differs.

#include "khdecat/cleaved.hpp"
#include "khdecat/diagram.hpp"
#include "khdecat/halfpoly.hpp"

#include <map>
#include <vector>

namespace khdecat {

struct DecatVector {
  int n = 0;
  Side side = Side::Inside;
  std::map<CleavedGen, HalfLaurent> coeffs;  // zero coefficients are absent

  const HalfLaurent& at(const CleavedGen& g) const;
  void add(const CleavedGen& g, const HalfLaurent& p);
  void merge(const DecatVector& other);

  friend bool operator==(const DecatVector&, const DecatVector&) = default;
};

// A decorated resolution (rho, far matching, decoration) with its gradings.
struct Generator {
  Resolution rho;
  Matching far;
  std::vector<Sign> free_decs;
  std::vector<Sign> cut_decs;
  int h = 0;
  HalfInt i;
  CleavedGen boundary;
};

// The cleaved link left after erasing free circles: lambda goes inside for
// inside tangles, outside for outside tangles.
CleavedGen boundary(const Matching& lambda, Side side, const Matching& far, std::vector<Sign> cut_decs);
inline CleavedGen boundary(const ResolvedState& st, Side side, const Matching& far, std::vector<Sign> cut_decs) {
  return boundary(st.lambda, side, far, std::move(cut_decs));
}

int homological_grading(const Resolution& rho, const CrossingCounts& counts);
HalfInt quantum_grading(int h, int free_sum, int cut_sum, const CrossingCounts& counts);

// Every decorated resolution, for small diagrams. Exponential in everything.
std::vector<Generator> enumerate_generators(const TangleDiagram& t);

// Reference state sum: sequential, every decoration enumerated.
DecatVector decat_vector_serial(const TangleDiagram& t);

// Same sum with the resolution cube split across OpenMP threads.
// threads <= 0 uses the OpenMP default. The result does not depend on the
// thread count.
DecatVector decat_vector(const TangleDiagram& t, int threads = 0);

// Independent evaluation: free circles are summed in closed form as
// (q + q^{-1})^{#free} instead of by enumeration.
DecatVector decat_vector_factored(const TangleDiagram& t);

// Sum over the common basis of a.coeffs(g) * d.coeffs(g). Requires an inside
// vector and an outside functional of equal n; throws std::invalid_argument.
HalfLaurent pair(const DecatVector& a, const DecatVector& d);

// Closed diagrams only (endpoints == 0); throw std::invalid_argument otherwise.
HalfLaurent jones(const TangleDiagram& t, int threads = 0);
// Unnormalized state sum ignoring crossing signs.
HalfLaurent bracket(const TangleDiagram& t);

}  // namespace khdecat
