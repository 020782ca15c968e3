#include "sumset/point_io.hpp"

#include <fstream>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>

#include "sumset/errors.hpp"
#include "sumset/rational.hpp"

namespace sumset {

namespace {

// Next non-blank, comment-stripped line split into tokens; false at EOF.
bool next_tokens(std::istream& in, std::size_t& line_no, std::vector<std::string>& tokens) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    tokens.clear();
    for (std::string tok; ss >> tok;) tokens.push_back(tok);
    if (!tokens.empty()) return true;
  }
  return false;
}

std::int64_t parse_integer(const std::string& tok, std::size_t line_no) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw ParseError("not an integer: '" + tok + "'", line_no);
  }
  if (used != tok.size()) throw ParseError("not an integer: '" + tok + "'", line_no);
  return v;
}

Rational parse_number(const std::string& tok, std::size_t line_no) {
  const auto slash = tok.find('/');
  if (slash == std::string::npos) return make_rational(parse_integer(tok, line_no));
  const auto num = parse_integer(tok.substr(0, slash), line_no);
  const auto den = parse_integer(tok.substr(slash + 1), line_no);
  if (den <= 0) throw ParseError("fraction needs a positive denominator: '" + tok + "'", line_no);
  return make_rational(num, den);
}

Coord to_coord(const mpz_class& z, std::size_t line_no) {
  if (!z.fits_slong_p()) throw ParseError("coordinate out of 64-bit range", line_no);
  return z.get_si();
}

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  return in;
}

}  // namespace

ParsedPoints parse_point_set(std::istream& in, const ParseOptions& opts) {
  std::size_t line_no = 0;
  std::vector<std::string> tokens;
  if (!next_tokens(in, line_no, tokens)) throw ParseError("empty input: expected 'dim d'", line_no);
  if (tokens.size() != 2 || tokens[0] != "dim") throw ParseError("expected header 'dim d'", line_no);
  const auto d = parse_integer(tokens[1], line_no);
  if (d < 1) throw ParseError("dimension must be positive", line_no);
  const auto dim = static_cast<std::size_t>(d);

  std::vector<std::vector<Rational>> rows;
  std::vector<std::size_t> row_lines;
  mpz_class scale = 1;
  while (next_tokens(in, line_no, tokens)) {
    if (tokens.size() != dim) {
      throw ParseError("expected " + std::to_string(dim) + " coordinates, got " + std::to_string(tokens.size()),
                       line_no);
    }
    std::vector<Rational> row;
    for (const auto& tok : tokens) {
      row.push_back(parse_number(tok, line_no));
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), row.back().get_den_mpz_t());
    }
    rows.push_back(std::move(row));
    row_lines.push_back(line_no);
  }
  if (rows.empty()) throw ParseError("no points", line_no);

  ParsedPoints out;
  out.scale = to_coord(scale, 0);
  if (scale != 1) out.warnings.push_back("fractional coordinates scaled by " + scale.get_str());
  std::set<std::vector<Coord>> seen;
  std::vector<Coord> flat;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<Coord> p;
    for (const auto& q : rows[r]) {
      const Rational scaled = q * Rational(scale);
      p.push_back(to_coord(scaled.get_num(), row_lines[r]));
    }
    if (!seen.insert(p).second) {
      if (!opts.dedupe) throw ParseError("duplicate point (use --dedupe to drop repeats)", row_lines[r]);
      out.warnings.push_back("line " + std::to_string(row_lines[r]) + ": duplicate point dropped");
      continue;
    }
    flat.insert(flat.end(), p.begin(), p.end());
  }
  out.set = PointSet::from_flat(dim, std::move(flat));
  return out;
}

ParsedPoints read_point_set(const std::string& path, const ParseOptions& opts) {
  auto in = open_file(path);
  return parse_point_set(in, opts);
}

std::string format_point_set(const PointSet& a) {
  std::ostringstream os;
  os << "dim " << a.dim() << '\n';
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto row = a[i];
    for (std::size_t k = 0; k < row.size(); ++k) os << (k ? " " : "") << row[k];
    os << '\n';
  }
  return os.str();
}

ParsedCyclic parse_cyclic_set(std::istream& in, const ParseOptions& opts) {
  std::size_t line_no = 0;
  std::vector<std::string> tokens;
  if (!next_tokens(in, line_no, tokens)) throw ParseError("empty input: expected 'cyclic p m'", line_no);
  if (tokens.size() != 3 || tokens[0] != "cyclic") throw ParseError("expected header 'cyclic p m'", line_no);
  const auto p = parse_integer(tokens[1], line_no), m = parse_integer(tokens[2], line_no);
  if (p < 2 || m < 1) throw ParseError("need p >= 2 and m >= 1", line_no);
  const CyclicProductSpace space(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(m));

  ParsedCyclic out{CyclicSet(space), {}};
  while (next_tokens(in, line_no, tokens)) {
    if (tokens.size() != 2 && !(tokens.size() == 1 && m == 1)) throw ParseError("expected 'x y'", line_no);
    const auto x = parse_integer(tokens[0], line_no);
    const auto y = tokens.size() == 2 ? parse_integer(tokens[1], line_no) : 0;
    if (x < 0 || x >= p || y < 0 || y >= m) throw ParseError("element outside 0 <= x < p, 0 <= y < m", line_no);
    if (out.set.contains({x, y})) {
      if (!opts.dedupe) throw ParseError("duplicate element (use --dedupe to drop repeats)", line_no);
      out.warnings.push_back("line " + std::to_string(line_no) + ": duplicate element dropped");
      continue;
    }
    out.set.insert({x, y});
  }
  if (out.set.empty()) throw ParseError("no elements", line_no);
  return out;
}

ParsedCyclic read_cyclic_set(const std::string& path, const ParseOptions& opts) {
  auto in = open_file(path);
  return parse_cyclic_set(in, opts);
}

std::string format_cyclic_set(const CyclicSet& a) {
  std::ostringstream os;
  os << "cyclic " << a.space().p() << ' ' << a.space().m() << '\n';
  for (const auto& g : a.elements()) os << g.x << ' ' << g.y << '\n';
  return os.str();
}

std::string read_file(const std::string& path) {
  auto in = open_file(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace sumset
