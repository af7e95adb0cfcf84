#pragma once

// Moving the marked point along the equator relabels the boundary points and
// so acts on I_{2n}. Two steps on a 4-ended tangle is a mutation.

#include "khdecat/cleaved.hpp"
#include "khdecat/decat.hpp"
#include "khdecat/diagram.hpp"

#include <string>

namespace khdecat {

// Rotates both matchings; each circle keeps its decoration, and the decoration
// list is re-sorted by the circles' new smallest points.
CleavedGen rotate_gen(const CleavedGen& g, int steps);

// Coefficients move with their generators; polynomials are unchanged.
DecatVector rotate_vector(const DecatVector& v, int steps);

struct MutationReport {
  bool b_symmetric = false;   // coeff(B_{+-}) == coeff(B_{-+})
  bool c_symmetric = false;   // coeff(C_{+-}) == coeff(C_{-+})
  bool m2_invariant = false;  // rotate_vector(v, 2) == v
  bool passed() const { return b_symmetric && c_symmetric && m2_invariant; }
};

// For an inside tangle with four endpoints; throws std::invalid_argument
// otherwise.
MutationReport mutation_check(const TangleDiagram& t, int threads = 0);
MutationReport mutation_check(const DecatVector& v);

std::string render_report(const MutationReport& r);

// The named generators of I_4 used throughout: A = (4,2 | 2,4),
// B = (4,2 | 4,2), C = (2,4 | 2,4), D = (2,4 | 4,2), decorations in circle
// order. `name` is e.g. "A+", "B-+", "D-".
CleavedGen i4_generator(const std::string& name);

}  // namespace khdecat
