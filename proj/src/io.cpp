#include "gsb/io.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

#include "json.hpp"

#include "gsb/error.hpp"

namespace gsb {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

// Non-blank lines with '#' comments stripped.
std::vector<Line> content_lines(std::string_view text, bool keep_comments = false) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!keep_comments) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    }
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(Line{n, std::move(line)});
  }
  return out;
}

std::size_t first_column(const std::string& s, std::size_t from = 0) {
  const std::size_t p = s.find_first_not_of(" \t", from);
  return (p == std::string::npos ? from : p) + 1;
}

// Rethrows a field-level error with a position, pointing at the quoted
// token of the message when it occurs in the line.
[[noreturn]] void fail_at(const Line& line, std::size_t field_start, const std::exception& e) {
  std::size_t column = first_column(line.text, field_start);
  const std::string what = e.what();
  const auto open = what.find('\'');
  const auto close = open == std::string::npos ? std::string::npos : what.find('\'', open + 1);
  if (close != std::string::npos) {
    const std::string token = what.substr(open + 1, close - open - 1);
    if (auto at = line.text.find(token, field_start); at != std::string::npos) column = at + 1;
  }
  throw ParseError(what, line.number, column);
}

Alphabet parse_header(const Line& line, std::string_view key) {
  const std::string prefix = std::string(key) + ":";
  const std::size_t start = line.text.find_first_not_of(" \t");
  if (line.text.compare(start, prefix.size(), prefix) != 0) {
    throw ParseError("expected '" + prefix + "' header", line.number, start + 1);
  }
  std::istringstream in(line.text.substr(start + prefix.size()));
  std::vector<std::string> names;
  for (std::string tok; in >> tok;) names.push_back(tok);
  if (names.empty()) throw ParseError("no generators listed", line.number, line.text.size() + 1);
  try {
    return Alphabet(names);
  } catch (const Error& e) {
    fail_at(line, start + prefix.size(), e);
  }
}

std::string alphabet_line(std::string_view key, const Alphabet& alphabet) {
  std::string s(key);
  s += ":";
  for (const Generator& g : alphabet.generators()) s += " " + g.display_name;
  return s;
}

Poly parse_poly_line(const Line& line, const Alphabet& alphabet) {
  try {
    return parse_poly(line.text, alphabet);
  } catch (const Error& e) {
    fail_at(line, 0, e);
  }
}

}  // namespace

std::string write_basis(const Basis& basis) {
  const auto& rank = basis.alphabet().ranks();
  std::vector<const Poly*> order;
  for (const Poly& p : basis.elements()) order.push_back(&p);
  std::stable_sort(order.begin(), order.end(), [&](const Poly* p, const Poly* q) {
    return deglex(p->leading_word(), q->leading_word(), rank) < 0;
  });
  std::string out = alphabet_line("alphabet", basis.alphabet()) + "\n";
  for (const Poly* p : order) out += format_poly(*p, basis.alphabet()) + "\n";
  return out;
}

Basis read_basis(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty basis file", 1, 1);
  Alphabet alphabet = parse_header(lines.front(), "alphabet");
  std::vector<Poly> elems;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    Poly p = parse_poly_line(lines[k], alphabet);
    if (p.is_zero()) throw ParseError("zero element", lines[k].number, first_column(lines[k].text));
    elems.push_back(make_monic(p));
  }
  return Basis(std::move(alphabet), std::move(elems));
}

namespace {

Presentation parse_json_presentation(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // The byte offset is converted to line and column.
    const std::size_t offset = std::min<std::size_t>(e.byte, text.size());
    const auto before = text.substr(0, offset > 0 ? offset - 1 : 0);
    const std::size_t line = static_cast<std::size_t>(std::count(before.begin(), before.end(), '\n')) + 1;
    const std::size_t nl = before.rfind('\n');
    const std::size_t column = nl == std::string_view::npos ? before.size() + 1 : before.size() - nl;
    throw ParseError("invalid JSON", line, column);
  }
  try {
    const std::size_t n = j.at("n").get<std::size_t>();
    std::vector<std::vector<int>> rows;
    for (const auto& row : j.at("matrix")) {
      std::vector<int> r;
      for (const auto& v : row) r.push_back(v.is_null() ? 0 : v.get<int>());
      rows.push_back(std::move(r));
    }
    if (rows.size() != n) throw Error("matrix has " + std::to_string(rows.size()) + " rows, n = " + std::to_string(n));
    std::vector<std::string> marking;
    if (j.contains("marking")) {
      marking = j.at("marking").get<std::vector<std::string>>();
    } else {
      for (std::size_t k = 1; k <= n; ++k) marking.push_back("x" + std::to_string(k));
    }
    if (marking.size() != n) throw Error("marking has " + std::to_string(marking.size()) + " names, n = " + std::to_string(n));
    Presentation p{Alphabet(marking), {}, CoxeterMatrix(rows)};
    p.relations = presentation_from_matrix(*p.matrix, p.alphabet);
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad presentation JSON: ") + e.what(), 1, 1);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  const std::size_t start = text.find_first_not_of(" \t\r\n");
  if (start != std::string_view::npos && text[start] == '{') return parse_json_presentation(text);

  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty presentation", 1, 1);
  Presentation p{parse_header(lines.front(), "generators"), {}, std::nullopt};
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    const std::size_t eq = line.text.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'u = v'", line.number, first_column(line.text));
    if (line.text.find('=', eq + 1) != std::string::npos) {
      throw ParseError("more than one '='", line.number, line.text.find('=', eq + 1) + 1);
    }
    Word u, v;
    try {
      u = parse_word(line.text.substr(0, eq), p.alphabet);
    } catch (const Error& e) {
      fail_at(line, 0, e);
    }
    try {
      v = parse_word(line.text.substr(eq + 1), p.alphabet);
    } catch (const Error& e) {
      if (std::string_view(e.what()).starts_with("empty word")) {
        throw ParseError(e.what(), line.number, line.text.size() + 1);
      }
      fail_at(line, eq + 1, e);
    }
    Poly rel = binomial(u, v, p.alphabet);
    if (!rel.is_zero()) p.relations.push_back(std::move(rel));
  }
  return p;
}

std::string write_presentation(const Alphabet& alphabet, const std::vector<Poly>& relations) {
  std::string out = alphabet_line("generators", alphabet) + "\n";
  for (const Poly& p : relations) {
    const Rule r = as_rule(make_monic(p));
    out += format_word(r.lhs, alphabet) + " = " + format_word(r.rhs, alphabet) + "\n";
  }
  return out;
}

std::string write_checkpoint(const CompletionState& state, const Alphabet& alphabet) {
  std::ostringstream out;
  out << "# checkpoint round=" << state.round << " new_from=" << state.first_new
      << " pending=" << state.pending.size() << "\n";
  out << alphabet_line("alphabet", alphabet) << "\n";
  for (const Rule& r : state.rules) out << format_poly(to_poly(r), alphabet) << "\n";
  for (const Rule& r : state.pending) out << format_poly(to_poly(r), alphabet) << "\n";
  return out.str();
}

std::pair<Alphabet, CompletionState> read_checkpoint(std::string_view text) {
  const auto lines = content_lines(text, true);
  if (lines.empty()) throw ParseError("empty checkpoint", 1, 1);
  static const std::regex header(R"(#\s*checkpoint\s+round=(\d+)\s+new_from=(\d+)\s+pending=(\d+)\s*)");
  std::smatch m;
  if (!std::regex_match(lines[0].text, m, header)) {
    throw ParseError("expected checkpoint header", lines[0].number, 1);
  }
  if (lines.size() < 2) throw ParseError("missing alphabet line", lines[0].number + 1, 1);
  Alphabet alphabet = parse_header(lines[1], "alphabet");
  CompletionState state;
  state.round = std::stoull(m[1]);
  state.first_new = std::stoull(m[2]);
  const std::size_t pending = std::stoull(m[3]);
  std::vector<Rule> all;
  for (std::size_t k = 2; k < lines.size(); ++k) {
    const Poly p = parse_poly_line(lines[k], alphabet);
    try {
      all.push_back(as_rule(p));
    } catch (const Error& e) {
      fail_at(lines[k], 0, e);
    }
  }
  if (pending > all.size() || state.first_new > all.size() - pending) {
    throw ParseError("checkpoint counts do not match its rules", lines[0].number, 1);
  }
  state.pending.assign(all.end() - static_cast<std::ptrdiff_t>(pending), all.end());
  all.resize(all.size() - pending);
  state.rules = std::move(all);
  return {std::move(alphabet), std::move(state)};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
  if (!out) throw Error("write failed for '" + path + "'");
}

}  // namespace gsb
