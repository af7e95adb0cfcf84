// Command-line front end: decat, pair, jones, bracket, basis, mutate-check.
//
// Exit status: 0 on success, 1 for semantic or validation errors, 2 for
// tangle file syntax errors.

#include "khdecat/cleaved.hpp"
#include "khdecat/decat.hpp"
#include "khdecat/mutation.hpp"
#include "khdecat/tangle_io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

using namespace khdecat;

constexpr int kMaxBasisN = 7;

void print_poly(const HalfLaurent& p, bool json) {
  if (json) std::cout << poly_to_json(p).dump() << "\n";
  else std::cout << render(p) << "\n";
}

TangleDiagram load_side(const std::string& path, Side want) {
  TangleDiagram t = load_tangle(path);
  if (t.side != want)
    throw std::invalid_argument(path + ": expected side " + side_name(want) + ", got " + side_name(t.side));
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decategorified bordered Khovanov invariants of tangles"};
  app.require_subcommand(1);
  bool json = false;
  int threads = 0;
  app.add_flag("--json", json, "JSON output");
  app.add_option("--threads", threads, "worker threads for the state sum (0 = OpenMP default)")
      ->check(CLI::NonNegativeNumber);

  std::string file, file2;
  int n = 0;
  auto* decat = app.add_subcommand("decat", "type A vector or type D functional of a tangle");
  decat->add_option("file", file)->required();
  auto* pair_cmd = app.add_subcommand("pair", "pair an inside tangle with an outside tangle");
  pair_cmd->add_option("inside", file)->required();
  pair_cmd->add_option("outside", file2)->required();
  auto* jones_cmd = app.add_subcommand("jones", "unnormalized Jones polynomial of a closed diagram");
  jones_cmd->add_option("file", file)->required();
  auto* bracket_cmd = app.add_subcommand("bracket", "unnormalized bracket of a closed diagram");
  bracket_cmd->add_option("file", file)->required();
  auto* basis = app.add_subcommand("basis", "list the cleaved generators of I_{2n}");
  basis->add_option("n", n)->required();
  auto* mutate = app.add_subcommand("mutate-check", "mutation symmetry report for a 4-ended inside tangle");
  mutate->add_option("file", file)->required();
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*decat) {
      const DecatVector v = decat_vector(load_tangle(file), threads);
      if (json) std::cout << vector_to_json(v).dump() << "\n";
      else std::cout << render_vector(v);
    } else if (*pair_cmd) {
      const TangleDiagram in = load_side(file, Side::Inside);
      const TangleDiagram out = load_side(file2, Side::Outside);
      if (in.endpoints != out.endpoints)
        throw std::invalid_argument("endpoint counts differ: " + std::to_string(in.endpoints) + " vs " +
                                    std::to_string(out.endpoints));
      print_poly(khdecat::pair(decat_vector(in, threads), decat_vector(out, threads)), json);
    } else if (*jones_cmd) {
      print_poly(jones(load_tangle(file), threads), json);
    } else if (*bracket_cmd) {
      print_poly(bracket(load_tangle(file)), json);
    } else if (*basis) {
      if (n < 0 || n > kMaxBasisN)
        throw std::invalid_argument("basis: n must be in 0.." + std::to_string(kMaxBasisN));
      const auto gens = enumerate_cleaved(n);
      if (json) {
        nlohmann::json keys = nlohmann::json::array();
        for (const auto& g : gens) keys.push_back(key(g));
        std::cout << nlohmann::json{{"n", n}, {"keys", keys}, {"count", gens.size()}}.dump() << "\n";
      } else {
        for (const auto& g : gens) std::cout << key(g) << "\n";
        std::cout << "count: " << gens.size() << "\n";
      }
    } else if (*mutate) {
      const MutationReport r = mutation_check(load_tangle(file), threads);
      if (json)
        std::cout << nlohmann::json{{"b_symmetric", r.b_symmetric},
                                    {"c_symmetric", r.c_symmetric},
                                    {"m2_invariant", r.m2_invariant}}
                         .dump()
                  << "\n";
      else std::cout << render_report(r);
      return r.passed() ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "khdecat: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "khdecat: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
