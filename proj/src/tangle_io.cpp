#include "khdecat/tangle_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

namespace khdecat {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

int to_int(std::string_view word, int line, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size())
    throw ParseError(line, std::string("expected integer ") + what + ", got '" + std::string(word) + "'");
  return value;
}

void expect_arity(const std::vector<std::string_view>& w, size_t args, int line) {
  if (w.size() != args + 1)
    throw ParseError(line, "'" + std::string(w[0]) + "' takes " + std::to_string(args) + " argument" +
                               (args == 1 ? "" : "s") + ", got " + std::to_string(w.size() - 1));
}

}  // namespace

TangleDiagram parse_tangle(std::string_view text) {
  TangleDiagram t;
  static constexpr const char* header[] = {"tangle", "side", "endpoints"};
  int seen_header = 0;
  bool seen_loop = false;
  int line_no = 0;
  size_t pos = 0;
  while (pos < text.size() || (pos == text.size() && (text.empty() || text.back() != '\n'))) {
    const size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == text.npos ? text.npos : nl - pos);
    pos = nl == text.npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != line.npos) line = line.substr(0, hash);
    const auto w = split_words(line);
    if (w.empty()) continue;
    const std::string_view d = w[0];

    const bool is_header = d == "tangle" || d == "side" || d == "endpoints";
    if (is_header) {
      if (seen_header == 3) throw ParseError(line_no, "duplicate '" + std::string(d) + "' directive");
      if (d != header[seen_header])
        throw ParseError(line_no, "expected '" + std::string(header[seen_header]) + "' directive, got '" +
                                      std::string(d) + "'");
    } else if (seen_header < 3) {
      throw ParseError(line_no, "missing '" + std::string(header[seen_header]) + "' directive before '" +
                                    std::string(d) + "'");
    }

    if (d == "tangle") {
      expect_arity(w, 1, line_no);
      t.name = std::string(w[1]);
      ++seen_header;
    } else if (d == "side") {
      expect_arity(w, 1, line_no);
      if (w[1] == "inside") t.side = Side::Inside;
      else if (w[1] == "outside") t.side = Side::Outside;
      else throw ParseError(line_no, "side must be 'inside' or 'outside', got '" + std::string(w[1]) + "'");
      ++seen_header;
    } else if (d == "endpoints") {
      expect_arity(w, 1, line_no);
      t.endpoints = to_int(w[1], line_no, "endpoint count");
      ++seen_header;
    } else if (d == "cross") {
      expect_arity(w, 5, line_no);
      Crossing x;
      if (w[1] == "+") x.sign = Sign::Plus;
      else if (w[1] == "-") x.sign = Sign::Minus;
      else throw ParseError(line_no, "crossing sign must be '+' or '-', got '" + std::string(w[1]) + "'");
      for (int k = 0; k < 4; ++k) x.slots[k] = to_int(w[2 + k], line_no, "edge label");
      t.crossings.push_back(x);
    } else if (d == "loop") {
      expect_arity(w, 1, line_no);
      if (seen_loop) throw ParseError(line_no, "duplicate 'loop' directive");
      seen_loop = true;
      t.loops = to_int(w[1], line_no, "loop count");
    } else if (d == "boundary") {
      expect_arity(w, 2, line_no);
      t.boundary.push_back({to_int(w[1], line_no, "point"), to_int(w[2], line_no, "edge label")});
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(d) + "'");
    }
  }
  if (seen_header < 3) throw ParseError(line_no, "missing '" + std::string(header[seen_header]) + "' directive");
  return t;
}

TangleDiagram load_tangle(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  TangleDiagram t;
  try {
    t = parse_tangle(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.detail(), path.string());
  }
  try {
    require_valid(t);
  } catch (const DiagramError& e) {
    throw DiagramError(path.string() + ": " + e.what());
  }
  return t;
}

std::string serialize_tangle(const TangleDiagram& t) {
  std::ostringstream out;
  out << "tangle " << t.name << "\n";
  out << "side " << side_name(t.side) << "\n";
  out << "endpoints " << t.endpoints << "\n";
  for (const auto& x : t.crossings) {
    out << "cross " << sign_char(x.sign);
    for (int e : x.slots) out << ' ' << e;
    out << "\n";
  }
  if (t.loops != 0) out << "loop " << t.loops << "\n";
  for (const auto& b : t.boundary) out << "boundary " << b.point << ' ' << b.edge << "\n";
  return out.str();
}

std::string render_vector(const DecatVector& v) {
  std::vector<std::pair<std::string, const HalfLaurent*>> lines;
  for (const auto& [g, p] : v.coeffs) lines.emplace_back(key(g), &p);
  std::sort(lines.begin(), lines.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string out;
  for (const auto& [k, p] : lines) out += k + " : " + render(*p) + "\n";
  return out;
}

nlohmann::json poly_to_json(const HalfLaurent& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    nlohmann::json coeff;
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
      coeff = c.convert_to<std::int64_t>();
    else
      coeff = c.str();
    terms.push_back({e, coeff});
  }
  return {{"terms", terms}};
}

nlohmann::json vector_to_json(const DecatVector& v) {
  std::vector<std::pair<std::string, nlohmann::json>> gens;
  for (const auto& [g, p] : v.coeffs) gens.emplace_back(key(g), poly_to_json(p)["terms"]);
  std::sort(gens.begin(), gens.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  nlohmann::json arr = nlohmann::json::array();
  for (auto& [k, terms] : gens) arr.push_back({{"key", k}, {"terms", std::move(terms)}});
  return {{"n", v.n}, {"generators", std::move(arr)}};
}

}  // namespace khdecat
