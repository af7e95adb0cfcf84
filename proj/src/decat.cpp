#include "khdecat/decat.hpp"

#include <bit>
#include <exception>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace khdecat {

const HalfLaurent& DecatVector::at(const CleavedGen& g) const {
  static const HalfLaurent zero;
  auto it = coeffs.find(g);
  return it == coeffs.end() ? zero : it->second;
}

void DecatVector::add(const CleavedGen& g, const HalfLaurent& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = coeffs.try_emplace(g, p);
  if (inserted) return;
  it->second += p;
  if (it->second.is_zero()) coeffs.erase(it);
}

void DecatVector::merge(const DecatVector& other) {
  for (const auto& [g, p] : other.coeffs) add(g, p);
}

CleavedGen boundary(const Matching& lambda, Side side, const Matching& far, std::vector<Sign> cut_decs) {
  if (far.n() != lambda.n())
    throw std::invalid_argument("far matching has " + std::to_string(far.n()) + " arcs, tangle has " +
                                std::to_string(lambda.n()));
  if (side == Side::Inside) return CleavedGen(lambda, far, std::move(cut_decs));
  return CleavedGen(far, lambda, std::move(cut_decs));
}

int homological_grading(const Resolution& rho, const CrossingCounts& counts) {
  int ones = 0;
  for (auto bit : rho) ones += bit ? 1 : 0;
  return ones - counts.minus;
}

HalfInt quantum_grading(int h, int free_sum, int cut_sum, const CrossingCounts& counts) {
  return HalfInt::from_twice(2 * h + 2 * free_sum + cut_sum + 2 * (counts.plus - counts.minus));
}

namespace {

std::vector<Sign> signs_from_mask(std::uint64_t mask, int count) {
  // Bit (count-1-i) set means entry i is -, so masks count through +...+ first.
  std::vector<Sign> out(count, Sign::Plus);
  for (int i = 0; i < count; ++i)
    if ((mask >> (count - 1 - i)) & 1u) out[i] = Sign::Minus;
  return out;
}

int sign_sum(std::uint64_t mask, int count) { return count - 2 * std::popcount(mask); }

Circles side_circles(const Matching& lambda, Side side, const Matching& far) {
  return side == Side::Inside ? circles_of(lambda, far) : circles_of(far, lambda);
}

void check_cube_size(const TangleDiagram& t) {
  if (t.crossings.size() > 30)
    throw std::invalid_argument("tangle '" + t.name + "' has " + std::to_string(t.crossings.size()) +
                                " crossings; the resolution cube is limited to 30");
}

// Adds every decorated resolution with APS-resolution `mask` to out.
void accumulate_exhaustive(const Resolver& resolver, std::uint64_t mask, const CrossingCounts& counts,
                           Side side, const std::vector<Matching>& far_matchings, DecatVector& out) {
  const auto summary = resolver.summarize(mask);
  const int h = std::popcount(mask) - counts.minus;
  const int nfree = summary.free_circles;
  if (nfree > 30) throw std::invalid_argument("too many free circles to enumerate decorations");

  // Free decorations are enumerated one by one and tallied by their sum,
  // which lies in [-nfree, nfree].
  std::vector<long long> free_tally(2 * nfree + 1, 0);
  for (std::uint64_t fm = 0; fm < (std::uint64_t{1} << nfree); ++fm) ++free_tally[sign_sum(fm, nfree) + nfree];

  for (const Matching& far : far_matchings) {
    const Matching& in = side == Side::Inside ? summary.lambda : far;
    const Matching& outm = side == Side::Inside ? far : summary.lambda;
    const int cut = static_cast<int>(circles_of(in, outm).size());
    for (std::uint64_t cm = 0; cm < (std::uint64_t{1} << cut); ++cm) {
      const int cut_sum = sign_sum(cm, cut);
      HalfLaurent poly;
      for (int fs = -nfree; fs <= nfree; ++fs) {
        const long long count = free_tally[fs + nfree];
        if (count == 0) continue;
        const HalfInt i = quantum_grading(h, fs, cut_sum, counts);
        poly.add_term(i.twice(), Coeff(h % 2 == 0 ? count : -count));
      }
      out.add(boundary(summary.lambda, side, far, signs_from_mask(cm, cut)), poly);
    }
  }
}

}  // namespace

DecatVector decat_vector_serial(const TangleDiagram& t) {
  check_cube_size(t);
  const Resolver resolver(t);
  const auto counts = crossing_counts(t);
  const auto& fars = matchings_cached(t.n());
  DecatVector out{t.n(), t.side, {}};
  const std::uint64_t states = std::uint64_t{1} << t.crossings.size();
  for (std::uint64_t mask = 0; mask < states; ++mask)
    accumulate_exhaustive(resolver, mask, counts, t.side, fars, out);
  return out;
}

DecatVector decat_vector(const TangleDiagram& t, int threads) {
  check_cube_size(t);
  const Resolver resolver(t);
  const auto counts = crossing_counts(t);
  const auto& fars = matchings_cached(t.n());
  DecatVector out{t.n(), t.side, {}};
  const long long states = 1ll << t.crossings.size();

  std::exception_ptr error;
  long long error_mask = states;
#ifdef _OPENMP
  const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel num_threads(team)
#endif
  {
    DecatVector local{t.n(), t.side, {}};
    std::exception_ptr local_error;
    long long local_error_mask = states;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 8)
#endif
    for (long long mask = 0; mask < states; ++mask) {
      if (local_error) continue;
      try {
        accumulate_exhaustive(resolver, static_cast<std::uint64_t>(mask), counts, t.side, fars, local);
      } catch (...) {
        local_error = std::current_exception();
        local_error_mask = mask;
      }
    }
#ifdef _OPENMP
#pragma omp critical(khdecat_merge)
#endif
    {
      out.merge(local);
      if (local_error && local_error_mask < error_mask) {
        error = local_error;
        error_mask = local_error_mask;
      }
    }
  }
#ifndef _OPENMP
  (void)threads;
#endif
  if (error) std::rethrow_exception(error);
  return out;
}

DecatVector decat_vector_factored(const TangleDiagram& t) {
  check_cube_size(t);
  const auto counts = crossing_counts(t);
  const auto fars = enumerate_matchings(t.n());
  DecatVector out{t.n(), t.side, {}};
  Resolution rho(t.crossings.size(), 0);
  const HalfLaurent circle = HalfLaurent::circle();
  while (true) {
    const ResolvedState st = resolve(t, rho);
    const int h = homological_grading(rho, counts);
    const HalfLaurent free_factor = circle.pow(static_cast<unsigned>(st.free_circles.size()));
    for (const Matching& far : fars) {
      const Circles cut = side_circles(st.lambda, t.side, far);
      const int k = static_cast<int>(cut.size());
      for (std::uint64_t cm = 0; cm < (std::uint64_t{1} << k); ++cm) {
        std::vector<Sign> decs = signs_from_mask(cm, k);
        int cut_sum = 0;
        for (Sign s : decs) cut_sum += value(s);
        const HalfLaurent mono = HalfLaurent::monomial(h, quantum_grading(h, 0, cut_sum, counts));
        out.add(boundary(st, t.side, far, std::move(decs)), mono * free_factor);
      }
    }
    // Binary increment over rho.
    size_t c = 0;
    while (c < rho.size() && rho[c]) rho[c++] = 0;
    if (c == rho.size()) break;
    rho[c] = 1;
  }
  return out;
}

std::vector<Generator> enumerate_generators(const TangleDiagram& t) {
  check_cube_size(t);
  const auto counts = crossing_counts(t);
  const auto fars = enumerate_matchings(t.n());
  const Resolver resolver(t);
  std::vector<Generator> out;
  const std::uint64_t states = std::uint64_t{1} << t.crossings.size();
  for (std::uint64_t mask = 0; mask < states; ++mask) {
    const ResolvedState st = resolver.resolve(mask);
    const int h = homological_grading(st.rho, counts);
    const int nfree = static_cast<int>(st.free_circles.size());
    for (const Matching& far : fars) {
      const int k = static_cast<int>(side_circles(st.lambda, t.side, far).size());
      for (std::uint64_t fm = 0; fm < (std::uint64_t{1} << nfree); ++fm) {
        for (std::uint64_t cm = 0; cm < (std::uint64_t{1} << k); ++cm) {
          Generator g;
          g.rho = st.rho;
          g.far = far;
          g.free_decs = signs_from_mask(fm, nfree);
          g.cut_decs = signs_from_mask(cm, k);
          g.h = h;
          g.i = quantum_grading(h, sign_sum(fm, nfree), sign_sum(cm, k), counts);
          g.boundary = boundary(st, t.side, far, g.cut_decs);
          out.push_back(std::move(g));
        }
      }
    }
  }
  return out;
}

HalfLaurent pair(const DecatVector& a, const DecatVector& d) {
  if (a.side != Side::Inside) throw std::invalid_argument("first argument of pair must come from an inside tangle");
  if (d.side != Side::Outside) throw std::invalid_argument("second argument of pair must come from an outside tangle");
  if (a.n != d.n)
    throw std::invalid_argument("cannot pair I_" + std::to_string(2 * a.n) + " with I_" + std::to_string(2 * d.n));
  HalfLaurent sum;
  for (const auto& [g, p] : a.coeffs) {
    auto it = d.coeffs.find(g);
    if (it != d.coeffs.end()) sum += p * it->second;
  }
  return sum;
}

namespace {

void require_closed(const TangleDiagram& t, const char* what) {
  if (t.endpoints != 0)
    throw std::invalid_argument(std::string(what) + " needs a closed diagram, '" + t.name + "' has " +
                                std::to_string(t.endpoints) + " endpoints");
}

}  // namespace

HalfLaurent jones(const TangleDiagram& t, int threads) {
  require_closed(t, "jones");
  return decat_vector(t, threads).at(CleavedGen{});
}

HalfLaurent bracket(const TangleDiagram& t) {
  require_closed(t, "bracket");
  check_cube_size(t);
  const Resolver resolver(t);
  const HalfLaurent circle = HalfLaurent::circle();
  HalfLaurent sum;
  const std::uint64_t states = std::uint64_t{1} << t.crossings.size();
  for (std::uint64_t mask = 0; mask < states; ++mask) {
    const int ones = std::popcount(mask);
    const auto summary = resolver.summarize(mask);
    sum += HalfLaurent::monomial(ones, HalfInt::from_int(ones)) *
           circle.pow(static_cast<unsigned>(summary.free_circles));
  }
  return sum;
}

}  // namespace khdecat
