#include "detlab/io.hpp"

#include <fstream>
#include <sstream>

#include "detlab/errors.hpp"

namespace detlab {

using nlohmann::json;

namespace {

struct Line {
  std::string text;
  std::size_t number;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] != '#') out.push_back({line, number});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Ring header_of(const std::vector<Line>& lines, std::uint32_t field_override) {
  if (lines.empty()) throw ParseError("missing 'ring n=<vars> p=<char>' header", 1, 1);
  Ring ring = parse_ring_header(lines.front().text, lines.front().number);
  if (field_override != 0) ring = ring.with_field(Field::prime(field_override));
  return ring;
}

}  // namespace

Ring parse_ring_header(std::string_view line, std::size_t line_number) {
  std::istringstream in{std::string(line)};
  std::string word;
  in >> word;
  if (word != "ring") throw ParseError("expected 'ring' header", line_number, 1);
  long long n = -1, p = Field::kDefaultPrime;
  while (in >> word) {
    auto eq = word.find('=');
    auto col = static_cast<std::size_t>(line.find(word)) + 1;
    if (eq == std::string::npos) throw ParseError("expected key=value in header", line_number, col);
    std::string key = word.substr(0, eq), value = word.substr(eq + 1);
    long long v = 0;
    try {
      std::size_t pos = 0;
      v = std::stoll(value, &pos);
      if (pos != value.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParseError("header value is not an integer", line_number, col + eq + 1);
    }
    if (key == "n") {
      n = v;
    } else if (key == "p") {
      p = v;
    } else {
      throw ParseError("unknown header key '" + key + "'", line_number, col);
    }
  }
  if (n < 0 || n > static_cast<long long>(kMaxVars)) {
    throw ParseError("header needs n=<vars> with 0 <= n <= " + std::to_string(kMaxVars), line_number, 1);
  }
  if (p < 0 || p > 0xFFFFFFFFll) throw ParseError("bad characteristic", line_number, 1);
  if (p != 0 && !is_prime(static_cast<std::uint64_t>(p))) {
    throw ParseError("characteristic " + std::to_string(p) + " is not prime", line_number, 1);
  }
  Field field = p == 0 ? Field::rationals() : Field::prime(static_cast<std::uint32_t>(p));
  return Ring(static_cast<std::size_t>(n), field);
}

Ideal parse_ideal(std::string_view text, std::uint32_t field_override) {
  auto lines = content_lines(text);
  Ring ring = header_of(lines, field_override);
  std::vector<Polynomial> gens;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    Polynomial p = parse_polynomial(lines[k].text, ring, lines[k].number);
    if (!p.is_homogeneous()) {
      throw ParseError("generator is not homogeneous", lines[k].number, 1);
    }
    gens.push_back(std::move(p));
  }
  return Ideal(ring, std::move(gens));
}

PolyMatrix parse_matrix(std::string_view text, std::uint32_t field_override) {
  auto lines = content_lines(text);
  Ring ring = header_of(lines, field_override);
  std::vector<std::vector<Polynomial>> rows;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const std::string& line = lines[k].text;
    std::vector<Polynomial> row;
    std::size_t start = 0;
    while (true) {
      std::size_t end = line.find(';', start);
      std::string entry = line.substr(start, end == std::string::npos ? std::string::npos : end - start);
      if (entry.find_first_not_of(" \t") == std::string::npos) {
        throw ParseError("empty matrix entry (write 0 for zero)", lines[k].number, start + 1);
      }
      // Pad so parser columns refer to the whole line.
      row.push_back(parse_polynomial(std::string(start, ' ') + entry, ring, lines[k].number));
      if (end == std::string::npos) break;
      start = end + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " +
                           std::to_string(rows.front().size()),
                       lines[k].number, 1);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("matrix has no rows", lines.empty() ? 1 : lines.front().number, 1);
  PolyMatrix m(ring, std::move(rows));
  if (!is_homogeneous_matrix(m)) throw ParseError("matrix is not homogeneous", lines[1].number, 1);
  return m;
}

Ideal read_ideal_file(const std::string& path, std::uint32_t field_override) {
  return parse_ideal(slurp(path), field_override);
}

PolyMatrix read_matrix_file(const std::string& path, std::uint32_t field_override) {
  return parse_matrix(slurp(path), field_override);
}

std::string ring_header(const Ring& ring) {
  return "ring n=" + std::to_string(ring.nvars) + " p=" + std::to_string(ring.field.characteristic());
}

std::string format_ideal(const Ideal& ideal) {
  std::string out = ring_header(ideal.ring()) + "\n";
  for (const auto& g : ideal.generators()) out += g.to_string() + "\n";
  return out;
}

std::string format_matrix(const PolyMatrix& m) { return ring_header(m.ring()) + "\n" + m.to_string(); }

std::string field_name(const Field& field) {
  return field.is_prime() ? "F_" + std::to_string(field.characteristic()) : "QQ";
}

json to_json(const Ideal& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.generators()) gens.push_back(g.to_string());
  return {{"nvars", ideal.ring().nvars}, {"field", field_name(ideal.ring().field)}, {"generators", gens}};
}

json to_json(const PolyMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(row);
  }
  return {{"nvars", m.ring().nvars}, {"rows", rows}};
}

json to_json(const RatPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p) coeffs.push_back(std::to_string(c.numerator()) + "/" + std::to_string(c.denominator()));
  return {{"coefficients", coeffs}, {"text", to_string(p)}};
}

json to_json(const HilbertSeries& hs) {
  return {{"numerator", hs.numerator()},
          {"nvars", hs.nvars()},
          {"h_vector", hs.h_vector()},
          {"krull_dim", hs.dimension()},
          {"degree", hs.degree()},
          {"hilbert_polynomial", to_json(hs.polynomial())}};
}

json to_json(const BettiTable& table) {
  json entries = json::array();
  for (const auto& [key, count] : table) entries.push_back({{"i", key.first}, {"j", key.second}, {"beta", count}});
  return {{"entries", entries}, {"ranks", betti_ranks(table)}, {"grid", betti_grid(table)}};
}

json to_json(const DegreeMatrix& u) {
  return {{"u", u.u},
          {"a", u.a},
          {"b", u.b},
          {"column_perm", u.column_perm},
          {"row_perm", u.row_perm},
          {"ambiguous", u.ambiguous}};
}

json to_json(const CheckReport& report) {
  json out = {{"verdict", to_string(report.verdict)},
              {"summary", report.summary},
              {"height", report.height},
              {"expected_height", report.expected_height},
              {"trials", report.trials},
              {"seed", report.seed}};
  if (report.row_transform) out["witness"] = {{"row_transform", to_json(*report.row_transform)},
                                              {"deleted_row", *report.deleted_row}};
  if (!report.trials_log.empty()) {
    json log = json::array();
    for (const auto& t : report.trials_log) {
      log.push_back({{"trial", t.trial}, {"deleted_row", t.deleted_row}, {"height", t.height}});
    }
    out["trial_log"] = log;
  }
  if (!report.sweep.empty()) {
    json sweep = json::array();
    for (const auto& p : report.sweep) {
      sweep.push_back({{"alpha", p.alpha ? json(*p.alpha) : json("first row")}, {"height", p.height}});
    }
    out["sweep"] = sweep;
  }
  if (report.mu) out["mu"] = *report.mu;
  if (report.mu_square) out["mu_square"] = *report.mu_square;
  if (report.bound) out["bound"] = *report.bound;
  return out;
}

}  // namespace detlab
