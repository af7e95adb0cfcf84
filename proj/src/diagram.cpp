#include "khdecat/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace khdecat {

const char* side_name(Side s) { return s == Side::Inside ? "inside" : "outside"; }

std::vector<std::string> validate(const TangleDiagram& t) {
  std::vector<std::string> errors;
  if (t.endpoints < 0) errors.push_back("endpoints must be nonnegative, got " + std::to_string(t.endpoints));
  if (t.endpoints % 2 != 0) errors.push_back("endpoints must be even, got " + std::to_string(t.endpoints));
  if (t.loops < 0) errors.push_back("loop count must be nonnegative, got " + std::to_string(t.loops));
  if (t.crossings.size() > 62) errors.push_back("at most 62 crossings are supported");

  std::map<int, int> uses;
  for (size_t c = 0; c < t.crossings.size(); ++c) {
    const auto& x = t.crossings[c];
    if (x.sign != Sign::Plus && x.sign != Sign::Minus)
      errors.push_back("crossing " + std::to_string(c + 1) + " has no sign");
    for (int e : x.slots) {
      if (e <= 0) errors.push_back("crossing " + std::to_string(c + 1) + " uses non-positive edge label " + std::to_string(e));
      ++uses[e];
    }
  }

  std::set<int> points;
  for (const auto& b : t.boundary) {
    if (b.point < 1 || b.point > t.endpoints)
      errors.push_back("boundary point " + std::to_string(b.point) + " is outside 1.." + std::to_string(t.endpoints));
    else if (!points.insert(b.point).second)
      errors.push_back("boundary point " + std::to_string(b.point) + " is attached twice");
    if (b.edge <= 0) errors.push_back("boundary point " + std::to_string(b.point) + " uses non-positive edge label " + std::to_string(b.edge));
    ++uses[b.edge];
  }
  for (int p = 1; p <= t.endpoints; ++p)
    if (!points.count(p)) errors.push_back("boundary point " + std::to_string(p) + " is missing");

  for (const auto& [e, count] : uses)
    if (count != 2 && e > 0)
      errors.push_back("edge " + std::to_string(e) + " has " + std::to_string(count) + " ends (expected 2)");
  return errors;
}

void require_valid(const TangleDiagram& t) {
  const auto errors = validate(t);
  if (errors.empty()) return;
  std::string msg = "invalid tangle '" + t.name + "':";
  for (const auto& e : errors) msg += "\n  " + e;
  throw DiagramError(msg);
}

CrossingCounts crossing_counts(const TangleDiagram& t) {
  CrossingCounts out;
  for (const auto& x : t.crossings) (x.sign == Sign::Plus ? out.plus : out.minus) += 1;
  return out;
}

Resolver::Resolver(const TangleDiagram& t) : n_(t.n()), loops_(t.loops) {
  require_valid(t);
  std::map<int, int> dense;
  auto index = [&](int label) {
    auto [it, inserted] = dense.try_emplace(label, static_cast<int>(labels_.size()));
    if (inserted) labels_.push_back(label);
    return it->second;
  };
  for (const auto& x : t.crossings) {
    std::array<int, 4> s{};
    for (int k = 0; k < 4; ++k) s[k] = index(x.slots[k]);
    slots_.push_back(s);
  }
  boundary_edge_.assign(t.endpoints, -1);
  for (const auto& b : t.boundary) boundary_edge_[b.point - 1] = index(b.edge);
}

Resolver::Components Resolver::components(std::uint64_t mask) const {
  Components comps;
  comps.root.resize(labels_.size());
  std::iota(comps.root.begin(), comps.root.end(), 0);
  auto find = [&](int x) {
    while (comps.root[x] != x) {
      comps.root[x] = comps.root[comps.root[x]];
      x = comps.root[x];
    }
    return x;
  };
  auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) comps.root[std::max(x, y)] = std::min(x, y);
  };
  for (size_t c = 0; c < slots_.size(); ++c) {
    const auto& [a, b, cc, d] = slots_[c];
    if ((mask >> c) & 1u) {
      unite(a, d);
      unite(b, cc);
    } else {
      unite(a, b);
      unite(cc, d);
    }
  }
  for (auto& r : comps.root) r = find(r);
  return comps;
}

Matching Resolver::lambda_from(const Components& comps) const {
  std::vector<int> first_point(labels_.size(), 0);
  std::vector<std::pair<int, int>> arcs;
  for (int p = 1; p <= 2 * n_; ++p) {
    const int r = comps.root[boundary_edge_[p - 1]];
    if (first_point[r] == 0) {
      first_point[r] = p;
    } else if (first_point[r] > 0) {
      arcs.emplace_back(first_point[r], p);
      first_point[r] = -1;
    } else {
      throw DiagramError("a component of the resolved diagram meets the boundary more than twice");
    }
  }
  for (int p = 1; p <= 2 * n_; ++p)
    if (first_point[comps.root[boundary_edge_[p - 1]]] > 0)
      throw DiagramError("a component of the resolved diagram meets the boundary once");
  try {
    return Matching::from_arcs(n_, arcs);
  } catch (const std::invalid_argument& e) {
    throw DiagramError(std::string("resolved diagram induces an invalid boundary matching: ") + e.what());
  }
}

Resolver::Summary Resolver::summarize(std::uint64_t mask) const {
  const Components comps = components(mask);
  Summary s;
  s.lambda = lambda_from(comps);
  std::vector<bool> touches(labels_.size(), false);
  for (int e : boundary_edge_) touches[comps.root[e]] = true;
  for (size_t e = 0; e < labels_.size(); ++e)
    if (comps.root[e] == static_cast<int>(e) && !touches[e]) ++s.free_circles;
  s.free_circles += loops_;
  return s;
}

ResolvedState Resolver::resolve(std::uint64_t mask) const {
  const Components comps = components(mask);
  ResolvedState st;
  st.rho.resize(slots_.size());
  for (size_t c = 0; c < slots_.size(); ++c) st.rho[c] = (mask >> c) & 1u;
  st.lambda = lambda_from(comps);
  std::vector<bool> touches(labels_.size(), false);
  for (int e : boundary_edge_) touches[comps.root[e]] = true;
  std::map<int, std::vector<int>> by_root;
  for (size_t e = 0; e < labels_.size(); ++e)
    if (!touches[comps.root[e]]) by_root[comps.root[e]].push_back(labels_[e]);
  for (auto& [root, edges] : by_root) {
    std::sort(edges.begin(), edges.end());
    st.free_circles.push_back(std::move(edges));
  }
  std::sort(st.free_circles.begin(), st.free_circles.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  for (int i = 0; i < loops_; ++i) st.free_circles.emplace_back();
  return st;
}

ResolvedState resolve(const TangleDiagram& t, const Resolution& rho) {
  if (rho.size() != t.crossings.size())
    throw DiagramError("resolution has " + std::to_string(rho.size()) + " bits for " +
                       std::to_string(t.crossings.size()) + " crossings");
  return Resolver(t).resolve(to_mask(rho));
}

}  // namespace khdecat
