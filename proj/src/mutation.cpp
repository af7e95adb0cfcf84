#include "khdecat/mutation.hpp"

#include <map>
#include <stdexcept>

namespace khdecat {

CleavedGen rotate_gen(const CleavedGen& g, int steps) {
  const int np = 2 * g.n();
  if (np == 0) return g;
  Matching in = g.inside().rotated(steps);
  Matching out = g.outside().rotated(steps);
  auto relabel = [&](int p) { return ((((p - steps - 1) % np) + np) % np) + 1; };

  // Decoration by the relabelled image of each old circle's smallest point.
  const Circles old_circles = g.circles();
  std::map<int, Sign> dec_at_point;
  for (size_t i = 0; i < old_circles.size(); ++i) dec_at_point[relabel(old_circles[i].front())] = g.decs()[i];

  const Circles new_circles = circles_of(in, out);
  std::vector<Sign> decs;
  decs.reserve(new_circles.size());
  for (const auto& circle : new_circles) {
    // Exactly one point of the new circle is the image of an old minimum.
    for (int p : circle) {
      if (auto it = dec_at_point.find(p); it != dec_at_point.end()) {
        decs.push_back(it->second);
        break;
      }
    }
  }
  return CleavedGen(std::move(in), std::move(out), std::move(decs));
}

DecatVector rotate_vector(const DecatVector& v, int steps) {
  DecatVector out{v.n, v.side, {}};
  for (const auto& [g, p] : v.coeffs) out.add(rotate_gen(g, steps), p);
  return out;
}

CleavedGen i4_generator(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("bad I_4 generator name '" + name + "'");
  const Matching m24 = Matching::parse("2,4");
  const Matching m42 = Matching::parse("4,2");
  Matching in, out;
  switch (name[0]) {
    case 'A': in = m42; out = m24; break;
    case 'B': in = m42; out = m42; break;
    case 'C': in = m24; out = m24; break;
    case 'D': in = m24; out = m42; break;
    default: throw std::invalid_argument("bad I_4 generator name '" + name + "'");
  }
  std::vector<Sign> decs;
  for (char c : name.substr(1)) {
    if (c == '+') decs.push_back(Sign::Plus);
    else if (c == '-') decs.push_back(Sign::Minus);
    else throw std::invalid_argument("bad I_4 generator name '" + name + "'");
  }
  return CleavedGen(std::move(in), std::move(out), std::move(decs));
}

MutationReport mutation_check(const DecatVector& v) {
  if (v.n != 2 || v.side != Side::Inside)
    throw std::invalid_argument("mutation check needs an inside tangle with 4 endpoints");
  MutationReport r;
  r.b_symmetric = v.at(i4_generator("B+-")) == v.at(i4_generator("B-+"));
  r.c_symmetric = v.at(i4_generator("C+-")) == v.at(i4_generator("C-+"));
  r.m2_invariant = rotate_vector(v, 2) == v;
  return r;
}

MutationReport mutation_check(const TangleDiagram& t, int threads) {
  if (t.endpoints != 4 || t.side != Side::Inside)
    throw std::invalid_argument("mutation check needs an inside tangle with 4 endpoints, '" + t.name + "' is " +
                                side_name(t.side) + " with " + std::to_string(t.endpoints));
  return mutation_check(decat_vector(t, threads));
}

std::string render_report(const MutationReport& r) {
  auto word = [](bool ok) { return ok ? "PASS" : "FAIL"; };
  return std::string("B-symmetry: ") + word(r.b_symmetric) + "\nC-symmetry: " + word(r.c_symmetric) +
         "\nM*^2-invariance: " + word(r.m2_invariant) + "\n";
}

}  // namespace khdecat
