#include "khdecat/planar.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

namespace khdecat {

bool arcs_cross(std::pair<int, int> x, std::pair<int, int> y) {
  auto [a, b] = std::minmax(x.first, x.second);
  auto [c, d] = std::minmax(y.first, y.second);
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

Matching Matching::checked(std::vector<int> mate) {
  const int np = static_cast<int>(mate.size());
  if (np % 2 != 0) throw std::invalid_argument("matching on an odd number of points");
  for (int p = 1; p <= np; ++p) {
    const int m = mate[p - 1];
    if (m < 1 || m > np) throw std::invalid_argument("point " + std::to_string(p) + " is unmatched");
    if (m == p) throw std::invalid_argument("point " + std::to_string(p) + " is matched to itself");
    if (mate[m - 1] != p)
      throw std::invalid_argument("pairing is not an involution at point " + std::to_string(p));
    if ((p + m) % 2 == 0)
      throw std::invalid_argument("arc " + std::to_string(p) + "-" + std::to_string(m) +
                                  " joins points of equal parity");
  }
  // Stack scan: a matching is non-crossing iff every closing point closes the
  // most recently opened arc.
  std::vector<int> open;
  for (int p = 1; p <= np; ++p) {
    const int m = mate[p - 1];
    if (m > p) {
      open.push_back(p);
    } else {
      if (open.empty() || open.back() != m)
        throw std::invalid_argument("arcs cross at point " + std::to_string(p));
      open.pop_back();
    }
  }
  return Matching(std::move(mate));
}

Matching Matching::from_arcs(int n, std::span<const std::pair<int, int>> arcs) {
  if (n < 0) throw std::invalid_argument("negative matching size");
  if (static_cast<int>(arcs.size()) != n)
    throw std::invalid_argument("expected " + std::to_string(n) + " arcs");
  std::vector<int> mate(2 * n, 0);
  for (auto [a, b] : arcs) {
    if (a < 1 || a > 2 * n || b < 1 || b > 2 * n)
      throw std::invalid_argument("arc endpoint out of range");
    if (mate[a - 1] != 0 || mate[b - 1] != 0)
      throw std::invalid_argument("point used by two arcs");
    mate[a - 1] = b;
    mate[b - 1] = a;
  }
  return checked(std::move(mate));
}

Matching Matching::decode(std::span<const int> code) {
  const int n = static_cast<int>(code.size());
  std::vector<bool> seen(n + 1, false);
  std::vector<int> mate(2 * n, 0);
  for (int k = 1; k <= n; ++k) {
    const int e = code[k - 1];
    if (e < 2 || e > 2 * n || e % 2 != 0 || seen[e / 2])
      throw std::invalid_argument("encoding is not a permutation of 2,4,...," + std::to_string(2 * n));
    seen[e / 2] = true;
    mate[2 * k - 2] = e;
    mate[e - 1] = 2 * k - 1;
  }
  return checked(std::move(mate));
}

Matching Matching::parse(std::string_view text) {
  std::vector<int> code;
  if (text.empty()) return Matching();
  size_t pos = 0;
  while (true) {
    const size_t comma = text.find(',', pos);
    const std::string_view field = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size())
      throw std::invalid_argument("bad matching field '" + std::string(field) + "'");
    code.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return decode(code);
}

std::vector<int> Matching::encode() const {
  std::vector<int> code;
  code.reserve(n());
  for (int k = 1; k <= n(); ++k) code.push_back(mate_[2 * k - 2]);
  return code;
}

std::string Matching::to_string() const {
  std::string out;
  for (int k = 1; k <= n(); ++k) {
    if (k > 1) out += ',';
    out += std::to_string(mate_[2 * k - 2]);
  }
  return out;
}

std::vector<std::pair<int, int>> Matching::arcs() const {
  std::vector<std::pair<int, int>> out;
  for (int k = 1; k <= n(); ++k) out.emplace_back(2 * k - 1, mate_[2 * k - 2]);
  return out;
}

Matching Matching::rotated(int steps) const {
  const int np = points();
  if (np == 0) return *this;
  auto relabel = [&](int p) { return ((((p - steps - 1) % np) + np) % np) + 1; };
  std::vector<int> mate(np, 0);
  for (int p = 1; p <= np; ++p) mate[relabel(p) - 1] = relabel(mate_[p - 1]);
  return Matching(std::move(mate));
}

std::strong_ordering operator<=>(const Matching& a, const Matching& b) {
  // Lexicographic on the encodings, i.e. on the mates of 1, 3, 5, ...
  const size_t na = a.mate_.size(), nb = b.mate_.size();
  for (size_t i = 0; i < na && i < nb; i += 2)
    if (auto c = a.mate_[i] <=> b.mate_[i]; c != 0) return c;
  return na <=> nb;
}

namespace {

// Matches the interval [lo, hi] in every non-crossing way, calling done() for
// each completion. Point lo pairs with q; the interior (lo, q) and the rest
// (q, hi] are matched independently.
void fill(std::vector<int>& mate, int lo, int hi, const std::function<void()>& done) {
  if (lo > hi) {
    done();
    return;
  }
  for (int q = lo + 1; q <= hi; q += 2) {
    mate[lo - 1] = q;
    mate[q - 1] = lo;
    fill(mate, lo + 1, q - 1, [&] { fill(mate, q + 1, hi, done); });
  }
}

}  // namespace

std::vector<Matching> enumerate_matchings(int n) {
  if (n < 0) throw std::invalid_argument("negative matching size");
  std::vector<int> mate(2 * n, 0);
  std::vector<Matching> out;
  std::vector<int> code(n);
  fill(mate, 1, 2 * n, [&] {
    for (int k = 0; k < n; ++k) code[k] = mate[2 * k];
    out.push_back(Matching::decode(code));
  });
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<Matching>& matchings_cached(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Matching>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_matchings(n)).first;
  return it->second;
}

unsigned long long catalan(int n) {
  unsigned long long c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

}  // namespace khdecat
