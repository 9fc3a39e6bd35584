#pragma once

// Coxeter matrices, the generator markings of the built-in diagrams, and
// the printed Gröbner–Shirshov basis families for G2, F4, E6, E7 and E8.

#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gsb/reduction.hpp"

namespace gsb {

inline constexpr int kInfinity = std::numeric_limits<int>::max();

/// Symmetric matrix with m_ii = 1 and m_ij = m_ji >= 2 (or kInfinity).
class CoxeterMatrix {
 public:
  CoxeterMatrix() = default;
  // Starts with every off-diagonal entry 2.
  explicit CoxeterMatrix(std::size_t n);
  // Validates the matrix invariants.
  explicit CoxeterMatrix(std::vector<std::vector<int>> rows);

  std::size_t size() const noexcept { return n_; }
  int operator()(std::size_t i, std::size_t j) const { return m_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, int m);
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<int> m_;
};

// Maps the printed generator indices onto dense ids: id = index - first.
struct IndexFrame {
  int first = 1;
  int count = 0;

  bool contains(int index) const { return index >= first && index < first + count; }
  Symbol id(int index) const;
};

struct DiagramPreset {
  std::string type_name;
  CoxeterMatrix matrix;
  std::vector<std::string> marking;  // display names, ascending precedence
  IndexFrame frame;

  Alphabet alphabet() const { return Alphabet(marking); }
};

// "A3", "B4", "D5", "G2", "F4", "E6", "E7", "E8". Throws Unsupported.
DiagramPreset builtin_preset(std::string_view type_name);
std::vector<std::string> builtin_type_names();
bool has_claimed_basis(std::string_view type_name);

// Alternating word a b a b ... of length m.
Word alternating(Symbol a, Symbol b, int m);

/// Squares x_i^2 - 1 plus, for every finite m(a, b) with a above b in the
/// precedence, alt(a, b, m) - alt(b, a, m).
std::vector<Poly> presentation_from_matrix(const CoxeterMatrix& matrix, const Alphabet& alphabet);

// x_{i,j} = x_i x_{i-1} ... x_j; x_{i,i} = x_i; x_{i,i+1} = 1.
Word word_descending(int i, int j, const IndexFrame& frame);
// x'_{i,j} = x_i x_{i-2} x_{i-3} ... x_j; x'_{i,i-1} = x_i; x'_{i,i} = 1.
Word word_skip(int i, int j, const IndexFrame& frame);

enum class ClaimVariant { AsPrinted, Corrected };

struct ClaimedElement {
  std::string family;
  std::vector<std::pair<std::string, int>> indices;
  Word printed_lhs;
  Word printed_rhs;
  Poly poly;                   // monic; zero when both sides coincide
  bool printed_orientation;    // printed lhs is the deg-lex leader
  bool undefined_notation;     // uses a symbol outside the x/x' conventions
};

struct ClaimedBasis {
  std::string type_name;
  ClaimVariant variant = ClaimVariant::AsPrinted;
  Alphabet alphabet;
  std::vector<ClaimedElement> elements;

  // Nonzero claimed polynomials, duplicates removed, in claim order.
  Basis basis() const;
  std::vector<std::string> families() const;
};

/// Instantiates every printed family. Suspected misprints are kept as printed
/// for ClaimVariant::AsPrinted.
ClaimedBasis claimed_basis(std::string_view type_name, ClaimVariant variant = ClaimVariant::AsPrinted);

std::string describe(const ClaimedElement& e);

// SameLead: in the ideal and sharing its leading word with a computed
// element, tail not reduced. InIdeal: in the ideal, leading word not a
// computed leading word (redundant in a reduced basis).
enum class ClaimStatus { ExactMatch, SameLead, InIdeal, NotInIdeal, Degenerate };

struct ClaimCheck {
  std::size_t claim;
  ClaimStatus status;
  Poly normal_form;  // modulo the computed basis
};

struct DiscrepancyReport {
  std::vector<ClaimCheck> claims;
  std::vector<Word> computed_leads_not_claimed;
  std::size_t exact_matches = 0;
  std::size_t same_lead = 0;
  std::size_t in_ideal = 0;
  std::size_t not_in_ideal = 0;
  std::size_t misoriented = 0;
  std::size_t degenerate = 0;
  std::size_t computed_size = 0;
  std::size_t computed_matched = 0;  // computed elements equal to some claim

  // Claimed and computed leading-word sets coincide, every claim lies in the
  // ideal and is printed with its leader first. Tails may differ.
  bool full_match() const {
    return in_ideal == 0 && not_in_ideal == 0 && misoriented == 0 && degenerate == 0 &&
           computed_leads_not_claimed.empty();
  }
  bool exact() const { return full_match() && same_lead == 0 && computed_matched == computed_size; }
};

/// Diffs a claimed basis against a computed (reduced) basis; neither is
/// modified.
DiscrepancyReport verify_against_claims(const ClaimedBasis& claimed, const Basis& computed);

const char* to_string(ClaimStatus s);

}  // namespace gsb
