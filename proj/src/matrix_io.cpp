#include "csl/matrix_io.hpp"

#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "csl/errors.hpp"

namespace csl {
namespace {

Integer parse_integer(const std::string& token) {
  Integer v;
  std::string_view body = token;
  if (!body.empty() && body.front() == '+') body.remove_prefix(1);
  if (body.empty() || v.set_str(std::string(body), 10) != 0) {
    throw ParseError("not an integer: '" + token + "'");
  }
  return v;
}

mpq_class parse_rational(const std::string& token) {
  auto slash = token.find('/');
  if (slash == std::string::npos) return mpq_class(parse_integer(token));
  Integer num = parse_integer(token.substr(0, slash));
  Integer den = parse_integer(token.substr(slash + 1));
  if (sgn(den) == 0) throw ParseError("zero denominator in '" + token + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

// Reads the non-comment tokens of the matrix body into `tokens`.
std::pair<std::size_t, std::size_t> read_tokens(std::istream& in, std::vector<std::string>& tokens) {
  std::string line;
  std::size_t rows = 0, cols = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (!have_header) {
      long long r = -1, c = -1;
      std::string extra;
      if (!(ls >> r >> c) || (ls >> extra) || r <= 0 || c <= 0) {
        throw ParseError("expected header 'rows cols' with positive counts, got '" + line + "'");
      }
      rows = static_cast<std::size_t>(r);
      cols = static_cast<std::size_t>(c);
      have_header = true;
      continue;
    }
    std::string tok;
    std::size_t count = 0;
    while (ls >> tok) {
      tokens.push_back(tok);
      ++count;
    }
    if (count != cols) {
      throw ParseError("row " + std::to_string(tokens.size() / cols) + " has " + std::to_string(count) +
                       " entries, expected " + std::to_string(cols));
    }
    if (tokens.size() == rows * cols) break;
  }
  if (!have_header) throw ParseError("empty matrix input");
  if (tokens.size() != rows * cols) {
    throw ParseError("expected " + std::to_string(rows) + " rows, got " + std::to_string(tokens.size() / cols));
  }
  return {rows, cols};
}

}  // namespace

IntMatrix read_int_matrix(std::istream& in) {
  std::vector<std::string> tokens;
  auto [rows, cols] = read_tokens(in, tokens);
  std::vector<Integer> entries;
  entries.reserve(tokens.size());
  for (const auto& t : tokens) entries.push_back(parse_integer(t));
  return IntMatrix(rows, cols, std::move(entries));
}

RatMatrix read_rat_matrix(std::istream& in) {
  std::vector<std::string> tokens;
  auto [rows, cols] = read_tokens(in, tokens);
  std::vector<mpq_class> values;
  values.reserve(tokens.size());
  Integer common = 1;
  for (const auto& t : tokens) {
    values.push_back(parse_rational(t));
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), values.back().get_den_mpz_t());
  }
  std::vector<Integer> entries;
  entries.reserve(values.size());
  for (const auto& v : values) entries.push_back(v.get_num() * (common / v.get_den()));
  return RatMatrix(IntMatrix(rows, cols, std::move(entries)), common);
}

IntMatrix parse_int_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_int_matrix(in);
}

RatMatrix parse_rat_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_rat_matrix(in);
}

void write_matrix(std::ostream& out, const IntMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c).get_str();
    out << '\n';
  }
}

void write_matrix(std::ostream& out, const RatMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m.at(r, c).get_str();
    out << '\n';
  }
}

std::string format_matrix(const IntMatrix& m) {
  std::ostringstream out;
  write_matrix(out, m);
  return out.str();
}

std::string format_matrix(const RatMatrix& m) {
  std::ostringstream out;
  write_matrix(out, m);
  return out.str();
}

IntVector parse_vector(std::string_view text) {
  std::string normalized(text);
  for (char& ch : normalized)
    if (ch == ',') ch = ' ';
  std::istringstream in(normalized);
  IntVector v;
  std::string tok;
  while (in >> tok) v.push_back(parse_integer(tok));
  if (v.empty()) throw ParseError("empty vector '" + std::string(text) + "'");
  return v;
}

std::string format_vector(std::span<const Integer> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i].get_str();
  }
  return s + ")";
}

}  // namespace csl
