#include "gsb/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "gsb/error.hpp"

namespace gsb {

CoxeterMatrix::CoxeterMatrix(std::size_t n) : n_(n), m_(n * n, 2) {
  for (std::size_t i = 0; i < n; ++i) m_[i * n + i] = 1;
}

CoxeterMatrix::CoxeterMatrix(std::vector<std::vector<int>> rows) : CoxeterMatrix(rows.size()) {
  for (std::size_t i = 0; i < n_; ++i) {
    if (rows[i].size() != n_) throw Error("Coxeter matrix is not square");
    for (std::size_t j = 0; j < n_; ++j) {
      const int m = rows[i][j];
      if (i == j) {
        if (m != 1) throw Error("Coxeter matrix needs m_ii = 1");
        continue;
      }
      if (m != rows[j][i]) throw Error("Coxeter matrix is not symmetric");
      if (m < 2 && m != 0) throw Error("Coxeter matrix needs m_ij >= 2 off the diagonal");
      // 0 is accepted as the file spelling of infinity.
      m_[i * n_ + j] = m == 0 ? kInfinity : m;
    }
  }
}

void CoxeterMatrix::set(std::size_t i, std::size_t j, int m) {
  if (i == j || i >= n_ || j >= n_) throw Error("Coxeter matrix: bad entry position");
  if (m < 2) throw Error("Coxeter matrix needs m_ij >= 2 off the diagonal");
  m_[i * n_ + j] = m;
  m_[j * n_ + i] = m;
}

std::vector<std::vector<int>> CoxeterMatrix::rows() const {
  std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      const int m = (*this)(i, j);
      out[i][j] = m == kInfinity ? 0 : m;
    }
  }
  return out;
}

Symbol IndexFrame::id(int index) const {
  if (!contains(index)) {
    throw RangeError("generator index " + std::to_string(index) + " outside " +
                     std::to_string(first) + ".." + std::to_string(first + count - 1));
  }
  return static_cast<Symbol>(index - first);
}

namespace {

std::vector<std::string> names_from(int first, int count) {
  std::vector<std::string> out;
  for (int k = 0; k < count; ++k) out.push_back("x" + std::to_string(first + k));
  return out;
}

DiagramPreset make_preset(std::string name, int first, int count) {
  DiagramPreset p;
  p.type_name = std::move(name);
  p.matrix = CoxeterMatrix(static_cast<std::size_t>(count));
  p.marking = names_from(first, count);
  p.frame = IndexFrame{first, count};
  return p;
}

void edge(DiagramPreset& p, int a, int b, int m) { p.matrix.set(p.frame.id(a), p.frame.id(b), m); }

}  // namespace

DiagramPreset builtin_preset(std::string_view type_name) {
  const std::string t(type_name);
  if (t.size() < 2 || !std::all_of(t.begin() + 1, t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw Unsupported("unsupported Coxeter type '" + t + "'");
  }
  const char family = t[0];
  const int n = std::stoi(t.substr(1));

  if (family == 'G' && n == 2) {
    auto p = make_preset(t, 1, 2);
    edge(p, 2, 1, 6);
    return p;
  }
  if (family == 'F' && n == 4) {
    auto p = make_preset(t, 1, 4);
    edge(p, 2, 1, 3);
    edge(p, 3, 2, 4);
    edge(p, 4, 3, 3);
    return p;
  }
  if (family == 'E' && n >= 6 && n <= 8) {
    // Chain x_{7-n} - ... - x4 - x6 with x5 attached to x3.
    auto p = make_preset(t, 7 - n, n);
    for (int i = 7 - n; i <= 3; ++i) edge(p, i + 1, i, 3);
    edge(p, 5, 3, 3);
    edge(p, 6, 4, 3);
    return p;
  }
  if (family == 'A' && n >= 1 && n <= 64) {
    auto p = make_preset(t, 1, n);
    for (int i = 1; i < n; ++i) edge(p, i + 1, i, 3);
    return p;
  }
  if (family == 'B' && n >= 2 && n <= 64) {
    auto p = make_preset(t, 1, n);
    edge(p, 2, 1, 4);
    for (int i = 2; i < n; ++i) edge(p, i + 1, i, 3);
    return p;
  }
  if (family == 'D' && n >= 4 && n <= 64) {
    // Chain x1 - ... - x_{n-1} with x_n attached to x_{n-2}.
    auto p = make_preset(t, 1, n);
    for (int i = 1; i < n - 1; ++i) edge(p, i + 1, i, 3);
    edge(p, n, n - 2, 3);
    return p;
  }
  throw Unsupported("unsupported Coxeter type '" + t + "'");
}

std::vector<std::string> builtin_type_names() {
  return {"A2", "A3", "B3", "D4", "G2", "F4", "E6", "E7", "E8"};
}

bool has_claimed_basis(std::string_view type_name) {
  return type_name == "G2" || type_name == "F4" || type_name == "E6" || type_name == "E7" ||
         type_name == "E8";
}

Word alternating(Symbol a, Symbol b, int m) {
  Word w;
  w.reserve(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) w.push_back(k % 2 == 0 ? a : b);
  return w;
}

std::vector<Poly> presentation_from_matrix(const CoxeterMatrix& matrix, const Alphabet& alphabet) {
  if (matrix.size() != alphabet.size()) throw AlphabetMismatch("matrix and alphabet sizes differ");
  std::vector<Poly> out;
  const auto gens = alphabet.generators();
  for (const Generator& g : gens) out.push_back(to_poly(Rule{Word{g.id, g.id}, Word{}}));
  for (std::size_t hi = 0; hi < gens.size(); ++hi) {
    for (std::size_t lo = 0; lo < hi; ++lo) {
      const Symbol a = gens[hi].id;
      const Symbol b = gens[lo].id;
      const int m = matrix(a, b);
      if (m == kInfinity) continue;
      out.push_back(binomial(alternating(a, b, m), alternating(b, a, m), alphabet));
    }
  }
  return out;
}

Word word_descending(int i, int j, const IndexFrame& frame) {
  if (j > i + 1) {
    throw RangeError("x_{" + std::to_string(i) + "," + std::to_string(j) + "} needs j <= i + 1");
  }
  Word w;
  for (int k = i; k >= j; --k) w.push_back(frame.id(k));
  return w;
}

Word word_skip(int i, int j, const IndexFrame& frame) {
  if (j > i) {
    throw RangeError("x'_{" + std::to_string(i) + "," + std::to_string(j) + "} needs j <= i");
  }
  Word w;
  if (j == i) return w;
  w.push_back(frame.id(i));
  for (int k = i - 2; k >= j; --k) w.push_back(frame.id(k));
  return w;
}

Basis ClaimedBasis::basis() const {
  std::vector<Poly> polys;
  for (const ClaimedElement& e : elements) {
    if (e.poly.is_zero()) continue;
    if (std::find(polys.begin(), polys.end(), e.poly) != polys.end()) continue;
    polys.push_back(e.poly);
  }
  return Basis(alphabet, std::move(polys));
}

std::vector<std::string> ClaimedBasis::families() const {
  std::vector<std::string> out;
  for (const ClaimedElement& e : elements) {
    if (std::find(out.begin(), out.end(), e.family) == out.end()) out.push_back(e.family);
  }
  return out;
}

std::string describe(const ClaimedElement& e) {
  std::string s = e.family;
  if (!e.indices.empty()) {
    s += '[';
    for (std::size_t k = 0; k < e.indices.size(); ++k) {
      if (k) s += ',';
      s += e.indices[k].first + "=" + std::to_string(e.indices[k].second);
    }
    s += ']';
  }
  return s;
}

const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::ExactMatch: return "match";
    case ClaimStatus::SameLead: return "same-lead";
    case ClaimStatus::InIdeal: return "in-ideal";
    case ClaimStatus::NotInIdeal: return "not-in-ideal";
    case ClaimStatus::Degenerate: return "degenerate";
  }
  return "?";
}

DiscrepancyReport verify_against_claims(const ClaimedBasis& claimed, const Basis& computed) {
  DiscrepancyReport report;
  report.computed_size = computed.size();
  const auto& rank = computed.alphabet().ranks();
  auto less = [&](const Word& a, const Word& b) { return deglex(a, b, rank) < 0; };
  std::set<Word, decltype(less)> claimed_leads(less);
  std::vector<bool> matched(computed.size(), false);
  std::set<Word, decltype(less)> computed_leads(less);
  for (const Poly& g : computed.elements()) computed_leads.insert(g.leading_word());

  for (std::size_t c = 0; c < claimed.elements.size(); ++c) {
    const ClaimedElement& e = claimed.elements[c];
    if (!e.printed_orientation) ++report.misoriented;
    if (e.poly.is_zero()) {
      ++report.degenerate;
      report.claims.push_back(ClaimCheck{c, ClaimStatus::Degenerate, Poly{}});
      continue;
    }
    claimed_leads.insert(e.poly.leading_word());
    const auto it = std::find(computed.elements().begin(), computed.elements().end(), e.poly);
    if (it != computed.elements().end()) {
      matched[static_cast<std::size_t>(it - computed.elements().begin())] = true;
      ++report.exact_matches;
      report.claims.push_back(ClaimCheck{c, ClaimStatus::ExactMatch, Poly{}});
      continue;
    }
    Poly nf = normal_form(e.poly, computed);
    if (nf.is_zero() && computed_leads.count(e.poly.leading_word())) {
      ++report.same_lead;
      report.claims.push_back(ClaimCheck{c, ClaimStatus::SameLead, Poly{}});
    } else if (nf.is_zero()) {
      ++report.in_ideal;
      report.claims.push_back(ClaimCheck{c, ClaimStatus::InIdeal, Poly{}});
    } else {
      ++report.not_in_ideal;
      report.claims.push_back(ClaimCheck{c, ClaimStatus::NotInIdeal, std::move(nf)});
    }
  }
  for (std::size_t k = 0; k < computed.size(); ++k) {
    if (matched[k]) ++report.computed_matched;
    if (!claimed_leads.count(computed[k].leading_word())) {
      report.computed_leads_not_claimed.push_back(computed[k].leading_word());
    }
  }
  return report;
}

}  // namespace gsb
