#include "support.hpp"

#include "khdecat/mutation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace testsupport {

std::filesystem::path corpus_path(const std::string& name) {
  return std::filesystem::path(KHDECAT_CORPUS) / (name + ".tangle");
}

TangleDiagram corpus(const std::string& name) { return load_tangle(corpus_path(name)); }

std::vector<std::string> corpus_names() {
  std::vector<std::string> out;
  for (const auto& entry : std::filesystem::directory_iterator(KHDECAT_CORPUS))
    if (entry.path().extension() == ".tangle") out.push_back(entry.path().stem().string());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Split> corpus_splits() {
  std::vector<Split> out;
  out.push_back({"hopf", corpus("t_left"), corpus("t_right"), corpus("hopf")});
  for (const char* n : {"trefoil", "fig8", "sum", "bridge3"}) {
    const std::string s = n;
    out.push_back({s, corpus(s + "_in"), corpus(s + "_out"), corpus(s)});
  }
  return out;
}

Split kt_split() { return {"kt", corpus("kt_in"), corpus("kt_out"), corpus("kt")}; }

TangleDiagram smooth(const TangleDiagram& t, size_t c, int which) {
  TangleDiagram out = t;
  const auto s = t.crossings.at(c).slots;
  out.crossings.erase(out.crossings.begin() + static_cast<std::ptrdiff_t>(c));
  std::map<int, int> parent;
  auto find = [&](int x) {
    while (parent.count(x) && parent[x] != x) x = parent[x];
    return x;
  };
  auto join = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  if (which == 0) {
    join(s[0], s[1]);
    join(s[2], s[3]);
  } else {
    join(s[0], s[3]);
    join(s[1], s[2]);
  }
  std::set<int> used;
  for (auto& x : out.crossings)
    for (int& e : x.slots) used.insert(e = find(e));
  for (auto& b : out.boundary) used.insert(b.edge = find(b.edge));
  std::set<int> vanished;
  for (int e : s)
    if (!used.count(find(e))) vanished.insert(find(e));
  out.loops += static_cast<int>(vanished.size());
  return out;
}

TangleDiagram glue(const TangleDiagram& inside, const TangleDiagram& outside) {
  // Outside labels are shifted past the inside ones, then each boundary point
  // merges its two labels.
  int shift = 0;
  for (const auto& x : inside.crossings)
    for (int e : x.slots) shift = std::max(shift, e);
  for (const auto& b : inside.boundary) shift = std::max(shift, b.edge);
  std::map<int, int> parent;
  std::function<int(int)> find = [&](int x) {
    auto it = parent.find(x);
    return it == parent.end() || it->second == x ? x : it->second = find(it->second);
  };
  std::map<int, int> in_edge;
  for (const auto& b : inside.boundary) in_edge[b.point] = b.edge;
  std::set<int> labels;
  for (const auto& b : outside.boundary) {
    const int a = find(in_edge.at(b.point)), c = find(b.edge + shift);
    labels.insert(a);
    labels.insert(c);
    if (a != c) parent[std::max(a, c)] = std::min(a, c);
  }
  TangleDiagram out;
  out.name = inside.name + "+" + outside.name;
  out.loops = inside.loops + outside.loops;
  std::set<int> used;
  for (const auto* piece : {&inside, &outside}) {
    const int off = piece == &inside ? 0 : shift;
    for (auto x : piece->crossings) {
      for (int& e : x.slots) used.insert(e = find(e + off));
      out.crossings.push_back(x);
    }
  }
  std::set<int> roots;
  for (int l : labels) roots.insert(find(l));
  for (int r : roots) out.loops += !used.count(r);
  return out;
}

Split smooth_split(const Split& s, size_t c, int which) {
  Split out = s;
  out.name = s.name + "/" + std::to_string(c) + (which ? "=1" : "=0");
  const size_t nin = s.inside.crossings.size();
  if (c < nin) out.inside = smooth(s.inside, c, which);
  else out.outside = smooth(s.outside, c - nin, which);
  out.closed = glue(out.inside, out.outside);
  return out;
}

Trace trace(const TangleDiagram& t, const Resolution& rho) {
  // An end is (crossing, slot) or (-1, point).
  using End = std::pair<int, int>;
  std::map<int, std::vector<End>> ends;
  for (size_t c = 0; c < t.crossings.size(); ++c)
    for (int k = 0; k < 4; ++k) ends[t.crossings[c].slots[k]].push_back({static_cast<int>(c), k});
  for (const auto& b : t.boundary) ends[b.edge].push_back({-1, b.point});
  auto other = [&](End e) {
    const int label = e.first < 0 ? std::find_if(t.boundary.begin(), t.boundary.end(),
                                                 [&](const BoundaryEntry& b) { return b.point == e.second; })
                                        ->edge
                                  : t.crossings[e.first].slots[e.second];
    const auto& v = ends.at(label);
    return v[0] == e ? v[1] : v[0];
  };
  auto partner = [&](End e) {
    // 0-smoothing pairs slots 0-1 and 2-3; 1-smoothing pairs 0-3 and 1-2.
    static constexpr int zero[4] = {1, 0, 3, 2};
    static constexpr int one[4] = {3, 2, 1, 0};
    return End{e.first, rho[e.first] ? one[e.second] : zero[e.second]};
  };

  Trace out;
  out.mate.assign(t.endpoints, 0);
  std::set<End> seen;
  for (const auto& b : t.boundary) {
    if (out.mate[b.point - 1]) continue;
    End e = other({-1, b.point});
    while (e.first >= 0) {
      seen.insert(e);
      const End p = partner(e);
      seen.insert(p);
      e = other(p);
    }
    out.mate[b.point - 1] = e.second;
    out.mate[e.second - 1] = b.point;
  }
  for (size_t c = 0; c < t.crossings.size(); ++c) {
    for (int k = 0; k < 4; ++k) {
      End start{static_cast<int>(c), k};
      if (seen.count(start)) continue;
      ++out.closed;
      End e = start;
      do {
        seen.insert(e);
        const End p = partner(e);
        seen.insert(p);
        e = other(p);
      } while (e != start);
    }
  }
  out.closed += t.loops;
  return out;
}

HalfLaurent skein_bracket(const TangleDiagram& t) {
  if (t.crossings.empty()) return HalfLaurent::circle().pow(static_cast<unsigned>(t.loops));
  return skein_bracket(smooth(t, 0, 0)) - HalfLaurent::q_power(HalfInt::from_int(1)) * skein_bracket(smooth(t, 0, 1));
}

// ---------------------------------------------------------------- slices

Slices::Slices(int bottom) {
  for (int i = 0; i < bottom; ++i) pos_.push_back(fresh());
  bottom_ = pos_;
}

Slices& Slices::cross(int i, bool slash_over, Sign sign) {
  const int sw = pos_.at(i), se = pos_.at(i + 1);
  const int ne = fresh(), nw = fresh();
  X x{level_++, sign, {}};
  x.slots = slash_over ? std::array<int, 4>{se, ne, nw, sw} : std::array<int, 4>{sw, se, ne, nw};
  xs_.push_back(x);
  pos_[i] = nw;
  pos_[i + 1] = ne;
  return *this;
}

Slices& Slices::cup(int i) {
  const int e = fresh();
  pos_.insert(pos_.begin() + i, {e, e});
  return *this;
}

Slices& Slices::cap(int i) {
  caps_.push_back({pos_.at(i), pos_.at(i + 1)});
  pos_.erase(pos_.begin() + i, pos_.begin() + i + 2);
  return *this;
}

Slices& Slices::cut() {
  cut_level_ = level_++;
  cut_lower_ = pos_;
  for (int& e : pos_) {
    const int up = fresh();
    cut_joins_.push_back({e, up});
    e = up;
  }
  cut_upper_ = pos_;
  return *this;
}

int Slices::find(std::vector<int>& parent, int x) const {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

namespace {

// Boundary labels first, then crossing slots, so files read naturally.
void compact(TangleDiagram& t) {
  std::map<int, int> m;
  auto idx = [&](int e) { return m.try_emplace(e, static_cast<int>(m.size()) + 1).first->second; };
  std::sort(t.boundary.begin(), t.boundary.end(), [](auto& a, auto& b) { return a.point < b.point; });
  for (auto& b : t.boundary) b.edge = idx(b.edge);
  for (auto& x : t.crossings)
    for (int& e : x.slots) e = idx(e);
}

}  // namespace

TangleDiagram Slices::rect(const std::string& name) const {
  std::vector<int> parent(next_);
  std::iota(parent.begin(), parent.end(), 0);
  for (auto [a, b] : caps_) parent[find(parent, a)] = find(parent, b);
  TangleDiagram t;
  t.name = name;
  t.side = Side::Inside;
  int p = 1;
  for (int e : bottom_) t.boundary.push_back({p++, find(parent, e)});
  for (auto it = pos_.rbegin(); it != pos_.rend(); ++it) t.boundary.push_back({p++, find(parent, *it)});
  t.endpoints = p - 1;
  std::set<int> used;
  for (const auto& b : t.boundary) used.insert(b.edge);
  for (const auto& x : xs_) {
    Crossing c{x.sign, {}};
    for (int k = 0; k < 4; ++k) used.insert(c.slots[k] = find(parent, x.slots[k]));
    t.crossings.push_back(c);
  }
  std::set<int> roots;
  for (int e = 1; e < next_; ++e) roots.insert(find(parent, e));
  for (int r : roots) t.loops += !used.count(r);
  compact(t);
  return t;
}

Split Slices::split(const std::string& name) const {
  if (cut_level_ < 0 || !pos_.empty() || !bottom_.empty()) throw std::logic_error("split needs a closed stack with a cut");
  std::vector<int> ps(next_), pc(next_);
  std::iota(ps.begin(), ps.end(), 0);
  for (auto [a, b] : caps_) ps[find(ps, a)] = find(ps, b);
  pc = ps;
  for (auto [a, b] : cut_joins_) pc[find(pc, a)] = find(pc, b);

  const int first_upper = cut_upper_.empty() ? next_ : *std::min_element(cut_upper_.begin(), cut_upper_.end());
  Split s;
  s.name = name;
  s.inside.name = name + "_in";
  s.outside.name = name + "_out";
  s.closed.name = name;
  s.inside.side = Side::Inside;
  s.outside.side = Side::Outside;
  s.closed.side = Side::Inside;
  const int np = static_cast<int>(cut_lower_.size());
  s.inside.endpoints = s.outside.endpoints = np;
  for (int p = 1; p <= np; ++p) {
    s.inside.boundary.push_back({p, find(ps, cut_upper_[p - 1])});
    s.outside.boundary.push_back({p, find(ps, cut_lower_[p - 1])});
  }
  std::vector<Crossing> closed_in, closed_out;
  for (const auto& x : xs_) {
    Crossing piece{x.sign, {}}, glued{x.sign, {}};
    for (int k = 0; k < 4; ++k) {
      piece.slots[k] = find(ps, x.slots[k]);
      glued.slots[k] = find(pc, x.slots[k]);
    }
    if (x.level > cut_level_) {
      s.inside.crossings.push_back(piece);
      closed_in.push_back(glued);
    } else {
      s.outside.crossings.push_back(piece);
      closed_out.push_back(glued);
    }
  }
  s.closed.crossings = closed_in;
  s.closed.crossings.insert(s.closed.crossings.end(), closed_out.begin(), closed_out.end());

  // Components with no crossing and no boundary point become loops; labels
  // created after the cut live above it.
  auto count_loops = [&](TangleDiagram& t, std::vector<int>& parent, auto in_region) {
    std::set<int> used, roots;
    for (const auto& b : t.boundary) used.insert(b.edge);
    for (const auto& x : t.crossings) used.insert(x.slots.begin(), x.slots.end());
    for (int e = 1; e < next_; ++e)
      if (in_region(e)) roots.insert(find(parent, e));
    for (int r : roots) t.loops += !used.count(r);
  };
  count_loops(s.inside, ps, [&](int e) { return e >= first_upper; });
  count_loops(s.outside, ps, [&](int e) { return e < first_upper; });
  count_loops(s.closed, pc, [](int) { return true; });
  compact(s.inside);
  compact(s.outside);
  compact(s.closed);
  return s;
}

Slices random_plat(std::mt19937& rng, int bridges, int crossings, bool with_cut, int cut_after) {
  Slices s;
  for (int b = 0; b < bridges; ++b) s.cup(2 * b);
  std::uniform_int_distribution<int> pos(0, 2 * bridges - 2);
  std::bernoulli_distribution coin(0.5);
  if (with_cut && cut_after < 0) cut_after = std::uniform_int_distribution<int>(0, crossings)(rng);
  for (int k = 0; k < crossings; ++k) {
    if (with_cut && k == cut_after) s.cut();
    s.cross(pos(rng), coin(rng), coin(rng) ? Sign::Plus : Sign::Minus);
  }
  if (with_cut && cut_after == crossings) s.cut();
  for (int b = bridges - 1; b >= 0; --b) s.cap(2 * b);
  return s;
}

TangleDiagram random_strand_tangle(std::mt19937& rng, int max_crossings) {
  const int m = std::uniform_int_distribution<int>(1, max_crossings)(rng);
  Slices s = random_plat(rng, 2, m, false);
  // A closed stack without a cut is an inside tangle with no endpoints.
  TangleDiagram t = s.rect("random_strand");
  std::vector<std::pair<size_t, int>> slots;
  for (size_t c = 0; c < t.crossings.size(); ++c)
    for (int k = 0; k < 4; ++k) slots.push_back({c, k});
  const auto [c, k] = slots[std::uniform_int_distribution<size_t>(0, slots.size() - 1)(rng)];
  int max_label = 0;
  for (const auto& x : t.crossings)
    for (int e : x.slots) max_label = std::max(max_label, e);
  const int e = t.crossings[c].slots[k];
  t.crossings[c].slots[k] = max_label + 1;
  t.endpoints = 2;
  t.boundary = {{1, e}, {2, max_label + 1}};
  compact(t);
  return t;
}

TangleDiagram random_braid_tangle(std::mt19937& rng, int strands, int crossings) {
  Slices s(strands);
  std::uniform_int_distribution<int> pos(0, strands - 2);
  std::bernoulli_distribution coin(0.5);
  for (int k = 0; k < crossings; ++k) s.cross(pos(rng), coin(rng), coin(rng) ? Sign::Plus : Sign::Minus);
  return s.rect("random_braid");
}

DecatVector i4_vector(Side side, std::initializer_list<std::pair<const char*, const char*>> entries) {
  DecatVector v{2, side, {}};
  for (auto [name, poly] : entries) v.add(i4_generator(name), P(poly));
  return v;
}

DecatVector t_left_expected() {
  return i4_vector(Side::Inside, {{"A+", "q^(3/2)"},
                                  {"A-", "q^(1/2)"},
                                  {"B++", "q^2"},
                                  {"B+-", "q"},
                                  {"B-+", "q"},
                                  {"B--", "1"},
                                  {"C++", "-q^3"},
                                  {"C+-", "-q^2"},
                                  {"C-+", "-q^2"},
                                  {"C--", "-q"},
                                  {"D+", "-q^(5/2)"},
                                  {"D-", "-q^(3/2)"}});
}

DecatVector t_right_expected() {
  return i4_vector(Side::Outside, {{"A+", "-q^(5/2)"},
                                   {"A-", "-q^(3/2)"},
                                   {"B++", "q^2"},
                                   {"B+-", "q"},
                                   {"B-+", "q"},
                                   {"B--", "1"},
                                   {"C++", "-q^3"},
                                   {"C+-", "-q^2"},
                                   {"C-+", "-q^2"},
                                   {"C--", "-q"},
                                   {"D+", "q^(3/2)"},
                                   {"D-", "q^(1/2)"}});
}

long flip_law_pairs(const DecatVector& v) {
  const HalfLaurent q_inv = HalfLaurent::q_power(HalfInt::from_int(-1));
  long checked = 0;
  for (const auto& g : enumerate_cleaved(v.n)) {
    for (int i = 1; i <= static_cast<int>(g.decs().size()); ++i) {
      if (g.decs()[i - 1] != Sign::Plus) continue;
      if (v.at(flip_decoration(g, i)) != q_inv * v.at(g)) return -1;
      ++checked;
    }
  }
  return checked;
}

HalfLaurent random_poly(std::mt19937& rng, int max_terms, int span, int max_coeff) {
  HalfLaurent p;
  const int terms = std::uniform_int_distribution<int>(0, max_terms)(rng);
  std::uniform_int_distribution<int> e(-span, span), c(-max_coeff, max_coeff);
  for (int k = 0; k < terms; ++k) p.add_term(e(rng), Coeff(c(rng)));
  return p;
}

}  // namespace testsupport
