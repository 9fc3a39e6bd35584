// Printed basis families and their instantiation.
//
// Each family is written in a small template language that mirrors the
// printed notation:
//   x5, x{i+1}   a single generator
//   x{i,j}       x_i x_{i-1} ... x_j
//   x'{i,j}      x_i x_{i-2} x_{i-3} ... x_j
//   x'{e}        single-index primed symbol (undefined notation, expanded to
//                the generator x_e)
//   1            the identity
// Index expressions are integers, variables, or variable +/- integer.

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

#include "gsb/coxeter.hpp"
#include "gsb/error.hpp"

namespace gsb {

namespace {

using Env = std::map<std::string, int>;
using RangePredicate = std::function<bool(const Env&)>;

struct Family {
  std::string name;
  std::vector<std::string> vars;
  RangePredicate in_range;
  std::string lhs;
  std::string rhs;
};

int eval_index(std::string_view expr, const Env& env) {
  std::string e(expr);
  e.erase(std::remove_if(e.begin(), e.end(), [](unsigned char c) { return std::isspace(c); }), e.end());
  if (e.empty()) throw Error("empty index expression");
  if (std::isdigit(static_cast<unsigned char>(e[0])) || e[0] == '-') return std::stoi(e);
  std::size_t op = e.find_first_of("+-");
  const std::string var = e.substr(0, op);
  auto it = env.find(var);
  if (it == env.end()) throw Error("unbound index variable '" + var + "'");
  if (op == std::string::npos) return it->second;
  const int offset = std::stoi(e.substr(op + 1));
  return e[op] == '+' ? it->second + offset : it->second - offset;
}

struct Expansion {
  Word word;
  bool undefined = false;
};

Expansion expand(const std::string& pattern, const Env& env, const IndexFrame& frame) {
  Expansion out;
  std::istringstream in(pattern);
  for (std::string tok; in >> tok;) {
    if (tok == "1") continue;
    if (tok.size() < 2 || tok[0] != 'x') throw Error("bad template token '" + tok + "'");
    std::size_t pos = 1;
    const bool primed = tok[pos] == '\'';
    if (primed) ++pos;
    std::vector<int> idx;
    if (tok[pos] == '{') {
      const std::size_t close = tok.find('}', pos);
      if (close == std::string::npos) throw Error("bad template token '" + tok + "'");
      const std::string inner = tok.substr(pos + 1, close - pos - 1);
      const std::size_t comma = inner.find(',');
      idx.push_back(eval_index(inner.substr(0, comma), env));
      if (comma != std::string::npos) idx.push_back(eval_index(inner.substr(comma + 1), env));
    } else {
      idx.push_back(std::stoi(tok.substr(pos)));
    }
    Word part;
    if (idx.size() == 2) {
      part = primed ? word_skip(idx[0], idx[1], frame) : word_descending(idx[0], idx[1], frame);
    } else {
      if (primed) out.undefined = true;
      part.push_back(frame.id(idx[0]));
    }
    out.word.insert(out.word.end(), part.begin(), part.end());
  }
  return out;
}

// Enumerates assignments of `vars` over [lo, hi] in lexicographic order.
void for_each_assignment(const std::vector<std::string>& vars, int lo, int hi,
                         const std::function<void(const Env&)>& visit) {
  Env env;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == vars.size()) {
      visit(env);
      return;
    }
    for (int v = lo; v <= hi; ++v) {
      env[vars[k]] = v;
      rec(k + 1);
    }
  };
  rec(0);
}

// Small helpers for readable range predicates.
struct V {
  const Env& env;
  int operator()(const char* name) const { return env.at(name); }
};

bool ascending(const Env& e, std::initializer_list<const char*> names) {
  const char* prev = nullptr;
  for (const char* n : names) {
    if (prev && !(e.at(prev) < e.at(n))) return false;
    prev = n;
  }
  return true;
}

std::vector<Family> g2_families() {
  return {
      {"theta1", {"i"}, [](const Env& e) { return e.at("i") >= 1 && e.at("i") <= 2; }, "x{i} x{i}", "1"},
      {"theta2", {}, nullptr, "x2 x1 x2 x1 x2 x1", "x1 x2 x1 x2 x1 x2"},
  };
}

std::vector<Family> f4_families() {
  return {
      {"theta1", {"i"}, [](const Env& e) { return e.at("i") >= 1 && e.at("i") <= 4; }, "x{i} x{i}", "1"},
      {"theta2", {}, nullptr, "x4 x3 x4", "x3 x4 x3"},
      {"theta3", {}, nullptr, "x4 x2", "x2 x4"},
      {"theta4", {}, nullptr, "x4 x1", "x1 x4"},
      {"theta5", {}, nullptr, "x3 x2 x3 x2", "x2 x3 x2 x3"},
      {"theta6", {}, nullptr, "x3 x1", "x1 x3"},
      {"theta7", {}, nullptr, "x2 x1 x2", "x1 x2 x1"},
      {"alpha1", {}, nullptr, "x3 x2 x1 x3 x2 x1", "x2 x3 x2 x3 x1 x2"},
      {"alpha2", {}, nullptr, "x4 x3 x2 x4", "x3 x4 x3 x2"},
      {"alpha3", {}, nullptr, "x4 x3 x2 x3 x4 x3", "x3 x4 x3 x2 x3 x4"},
      {"alpha4", {}, nullptr, "x4 x3 x2 x1 x4", "x3 x4 x3 x2 x1"},
      {"alpha5", {}, nullptr, "x4 x3 x2 x1 x3 x4 x3", "x3 x4 x3 x2 x3 x4 x1"},
      {"alpha6", {}, nullptr, "x4 x3 x2 x1 x3 x2 x4 x3 x2 x3", "x3 x4 x3 x2 x3 x4 x1 x2 x3 x2"},
      {"alpha7", {}, nullptr, "x4 x3 x2 x1 x3 x2 x4 x3 x2 x1 x3", "x3 x4 x3 x2 x3 x4 x1 x2 x3 x2 x1"},
      {"alpha8", {}, nullptr, "x4 x3 x2 x1 x3 x2 x3 x4 x3 x2 x3 x4",
       "x3 x4 x3 x2 x3 x4 x1 x2 x3 x2 x4 x3"},
      {"alpha9", {}, nullptr, "x4 x3 x2 x1 x3 x2 x3 x4 x3 x2 x1 x3 x4",
       "x3 x4 x3 x2 x3 x4 x1 x2 x3 x2 x1 x4 x3"},
      {"alpha10", {}, nullptr, "x4 x3 x2 x1 x3 x2 x3 x4 x3 x2 x1 x3 x2 x4",
       "x3 x4 x3 x2 x3 x4 x1 x2 x3 x2 x1 x4 x3 x2"},
      {"alpha11", {}, nullptr, "x4 x3 x2 x1 x3 x2 x3 x4 x3 x2 x1 x3 x2 x3 x4 x3",
       "x3 x4 x3 x2 x3 x4 x1 x2 x3 x2 x1 x4 x3 x2 x3 x4"},
  };
}

// Relations shared by every E_n list; lo = 7 - n.
std::vector<Family> e_initial_families(int lo) {
  return {
      {"theta1", {"i"}, [lo](const Env& e) { return lo <= e.at("i") && e.at("i") <= 5; }, "x{i} x{i}", "1"},
      {"theta2", {"i"}, [lo](const Env& e) { return lo <= e.at("i") && e.at("i") <= 3; },
       "x{i+1} x{i} x{i+1}", "x{i} x{i+1} x{i}"},
      {"theta3", {"i", "j"},
       [lo](const Env& e) { return lo <= e.at("j") && e.at("j") + 1 < e.at("i") && e.at("i") <= 4; },
       "x{i} x{j}", "x{j} x{i}"},
      {"theta4", {"i"}, [lo](const Env& e) { return lo <= e.at("i") && e.at("i") <= 4 && e.at("i") != 3; },
       "x5 x{i}", "x{i} x5"},
      {"theta5", {}, nullptr, "x5 x3 x5", "x3 x5 x3"},
      {"epsilon1", {}, nullptr, "x6 x6", "1"},
      {"epsilon2", {}, nullptr, "x6 x4 x6", "x4 x6 x4"},
      {"epsilon3", {"i"}, [lo](const Env& e) { return lo <= e.at("i") && e.at("i") <= 5 && e.at("i") != 4; },
       "x6 x{i}", "x{i} x6"},
  };
}

std::vector<Family> e_families(int n, ClaimVariant variant) {
  const int lo = 7 - n;
  const bool printed = variant == ClaimVariant::AsPrinted;
  auto in = [](const Env& e, const char* v, int a, int b) { return a <= e.at(v) && e.at(v) <= b; };
  std::vector<Family> f = e_initial_families(lo);
  const int beta3_hi = n == 6 || !printed ? 3 : 2;

  f.push_back({"alpha1", {"i", "j"},
               [=](const Env& e) { return lo <= e.at("j") && e.at("j") < e.at("i") && e.at("i") <= 3; },
               "x{i+1,j} x{i+1}", "x{i} x{i+1,j}"});
  f.push_back({"alpha2", {"j"}, [=](const Env& e) { return in(e, "j", lo, 2); }, "x'{5,j} x5", "x3 x'{5,j}"});
  f.push_back({"beta1", {"i"}, [=](const Env& e) { return in(e, "i", lo, 3); }, "x'{5,i} x{4,i}",
               "x4 x'{5,i} x{4,i+1}"});
  f.push_back({"beta2", {"i"}, [=](const Env& e) { return in(e, "i", lo, 3); }, "x'{5,i} x4 x5",
               "x3 x'{5,i} x4"});
  f.push_back({"beta3", {"i", "j"},
               [=](const Env& e) { return lo <= e.at("i") && e.at("i") < e.at("j") && e.at("j") <= beta3_hi; },
               "x'{5,i} x{4,j} x'{5,j}", "x3 x'{5,i} x{4,j} x'{5,j+1}"});
  f.push_back({"eta", {"i"}, [=](const Env& e) { return in(e, "i", lo, 4); }, "x'{6,i} x'{5,i}",
               "x5 x'{6,i} x'{5,i+1}"});
  f.push_back({"xi", {"i", "j"},
               [=](const Env& e) { return lo <= e.at("i") && e.at("i") < e.at("j") && e.at("j") <= 5; },
               "x'{6,i} x'{5,j} x6", "x4 x'{6,i} x'{5,j}"});
  f.push_back({"lambda", {"i", "j", "k"},
               [=](const Env& e) { return lo <= e.at("i") && ascending(e, {"i", "j", "k"}) && e.at("k") <= 4; },
               "x'{6,i} x'{5,j} x{4,k} x'{6,k}", "x4 x'{6,i} x'{5,j} x{4,k} x'{6,k+1}"});
  if (n == 6) {
    f.push_back({"nu", {"l"}, [=](const Env& e) { return in(e, "l", 1, 3); },
                 "x'{6,1} x'{5,2} x{4,3} x5 x'{6,l} x5", "x4 x'{6,1} x'{5,2} x{4,3} x5 x'{6,l}"});
    return f;
  }
  // Corrected: k = 3 only, as in the E6 list.
  f.push_back({"nu", {"i", "j", "k", "l"},
               [=](const Env& e) {
                 return lo <= e.at("i") && ascending(e, {"i", "j", "k"}) && e.at("k") <= 3 &&
                        (printed || e.at("k") == 3) && lo <= e.at("l") && e.at("l") <= e.at("k");
               },
               "x'{6,i} x'{5,j} x{4,k} x5 x'{6,l} x5", "x4 x'{6,i} x'{5,j} x{4,k} x5 x'{6,l}"});
  f.push_back({"mu", {"l", "m"},
               [=](const Env& e) { return lo <= e.at("l") && e.at("l") < e.at("m") && e.at("m") <= 2; },
               printed ? "x'{6,0} x'{5,2} x{4,2} x'{5,3} x'{6,l} x'{5,m} x4"
                       : "x'{6,0} x'{5,1} x{4,2} x'{5,3} x'{6,l} x'{5,m} x4",
               "x4 x'{6,0} x'{5,1} x{4,2} x'{5,3} x'{6,l} x'{5,m}"});
  if (n == 7) {
    f.push_back({"f", {"i", "j", "k", "l", "m"},
                 [=](const Env& e) {
                   return lo <= e.at("i") && ascending(e, {"i", "j", "k", "l"}) && e.at("l") <= 5 &&
                          lo <= e.at("l") && e.at("l") < e.at("m") && e.at("m") <= 5;
                 },
                 "x'{6,0} x'{5,1} x{4,2} x'{5,3} x4 x'{6,i} x'{5,j} x{4,k} x'{5,l} x{4,m} x'{6,m}",
                 "x4 x'{6,0} x'{5,1} x{4,2} x'{5,3} x4 x'{6,i} x'{5,j} x{4,k} x'{5,l} x{4,m} x'{6,m+1}"});
    return f;
  }

  // E8 only.
  const std::string head = "x'{6,-1} x'{5,0} x{4,1} x'{5,2} x{4,3}";
  const std::string head_x0 = printed ? "x'{6,-1} x'{0} x{4,1} x'{5,2}" : "x'{6,-1} x'{5,0} x{4,1} x'{5,2}";
  auto j_up_to = [=](const Env& e, std::initializer_list<const char*> names, int hi) {
    return lo <= e.at(*names.begin()) && ascending(e, names) && e.at(*(names.end() - 1)) <= hi;
  };

  f.push_back({"delta", {"i", "j", "k", "l", "m", "p"},
               [=](const Env& e) {
                 return j_up_to(e, {"i", "j", "k"}, 2) && j_up_to(e, {"l", "m", "p"}, e.at("k") + 2);
               },
               "x'{6,i} x'{5,j} x{4,k} x'{5,3} x4 x'{6,l} x'{5,m} x{4,p} x'{6,k+3}",
               "x4 x'{6,i} x'{5,j} x{4,k} x'{5,3} x4 x'{6,l} x'{5,m} x{4,p} x'{6,k+4}"});
  f.push_back({"rho", {"i", "j", "k", "l", "m", "p"},
               [=](const Env& e) {
                 return j_up_to(e, {"i", "j", "k"}, 1) && j_up_to(e, {"l", "m", "p"}, e.at("k") + 2);
               },
               "x'{6,i} x'{5,j} x{4,k} x'{5,2} x'{6,l} x'{5,m} x{4,p} x'{5,k+3}",
               "x4 x'{6,i} x'{5,j} x{4,k} x'{5,2} x'{6,l} x'{5,m} x{4,p} x'{5,k+4}"});
  f.push_back({"phi1", {"l", "m", "p", "q"}, [=](const Env& e) { return j_up_to(e, {"l", "m", "p", "q"}, 4); },
               "x'{6,-1} x'{5,0} x{4,1} x'{5,3} x4 x'{6,l} x'{5,m} x{4,p} x'{5,q} x'{6,q}",
               "x4 x'{6,-1} x'{5,0} x{4,1} x'{5,3} x4 x'{6,l} x'{5,m} x{4,p} x'{5,q} x'{6,q+1}"});
  f.push_back({"phi2", {"l", "m", "p", "q"}, [=](const Env& e) { return j_up_to(e, {"l", "m", "p", "q"}, 4); },
               "x'{6,-1} x'{5,0} x{4,1} x'{5,2} x4 x'{6,l} x'{5,m} x{4,p} x'{5,q} x'{6,p}",
               "x4 x'{6,-1} x'{5,0} x{4,1} x'{5,2} x4 x'{6,l} x'{5,m} x{4,p} x'{5,q} x'{6,p+1}"});

  const std::vector<std::string> j4 = {"j1", "j2", "j3", "j4"};
  const std::vector<std::string> j5 = {"j1", "j2", "j3", "j4", "j5"};
  auto with = [](std::vector<std::string> a, const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  auto i_pair = [=](const Env& e) { return j_up_to(e, {"i1", "i2"}, 1); };
  auto j4_ok = [=](const Env& e) { return j_up_to(e, {"j1", "j2", "j3", "j4"}, 4); };
  auto j5_ok = [=](const Env& e) { return j_up_to(e, {"j1", "j2", "j3", "j4", "j5"}, 4); };
  const std::string tail4 = "x'{6,j1} x'{5,j2} x{4,j3} x'{5,j4}";
  const std::string tail5 = "x'{6,j1} x'{5,j2} x{4,j3} x'{5,j4} x{4,j5}";
  const std::string i_head = "x'{6,i1} x'{5,i2} x{4,2} x'{5,3} x4";

  f.push_back({"f1", with({"i1", "i2"}, j4), [=](const Env& e) { return i_pair(e) && j4_ok(e); },
               i_head + " " + tail4 + " x6", "x4 " + i_head + " " + tail4});
  f.push_back({"f2", j4, j4_ok, head + " " + tail4 + " x'{6,j2}",
               "x4 " + head_x0 + " x{4,3} " + tail4 + " x'{6,j2+1}"});
  f.push_back({"f3", j4, j4_ok, head + " x5 " + tail4 + " x'{6,j1}",
               "x4 " + head_x0 + " x{4,3} x5 " + tail4 + " x'{6,j1+1}"});
  f.push_back({"f4", j5, j5_ok, "x'{6,-1} x'{5,0} x{4,1} x'{5,2} x4 " + tail5 + " x'{6,j3}",
               "x4 " + head_x0 + " x4 " + tail5 + " x'{6,j3+1}"});
  f.push_back({"f5", j5, j5_ok, head + " " + tail5 + " x'{6,j2}", "x4 " + head + " " + tail5 + " x'{6,j2+1}"});
  f.push_back({"f6", j5, j5_ok, "x'{6,-1} x'{5,0} x{4,1} x'{5,3} x4 " + tail5 + " x'{6,j4}",
               "x4 " + head + " " + tail5 + " x'{6,j4+1}"});
  f.push_back({"f7", with({"i1", "i2"}, j5), [=](const Env& e) { return i_pair(e) && j5_ok(e); },
               i_head + " " + tail5 + " x'{6,j5}", "x4 " + head + " " + tail5 + " x'{6,j5+1}"});
  f.push_back({"f8", j5, j5_ok, head + " x5 " + tail5 + " x'{6,j1}",
               "x4 " + head + " x5 " + tail5 + " x'{6,j1+1}"});
  f.push_back({"f9", {"i1", "i2", "k1"}, [=](const Env& e) { return i_pair(e) && in(e, "k1", lo, 3); },
               i_head + " x5 " + head + " x5 x'{6,k1} x5", "x4 " + i_head + " x5 " + head + " x5 x'{6,k1}"});
  if (printed) {
    // i1, i2 occur only on the right; they range as in f1, f7 and f9.
    f.push_back({"f10", {"i1", "i2", "i4", "k1"},
                 [=](const Env& e) {
                   return i_pair(e) && 1 < e.at("i4") && e.at("i4") <= 3 && lo <= e.at("k1") &&
                          e.at("k1") < e.at("i4");
                 },
                 "x'{6,-1} x'{5,0} x{4,1} x'{5,i4} x4 " + head + " x5 x'{6,k1} x'{5,i4}",
                 "x4 x'{6,i1} x'{5,i2} x{4,1} x'{5,i4} x4 " + head + " x5 x'{6,k1} x'{5,i4+1}"});
  } else {
    f.push_back({"f10", {"i4", "k1"},
                 [=](const Env& e) {
                   return 1 < e.at("i4") && e.at("i4") <= 3 && lo <= e.at("k1") && e.at("k1") < e.at("i4");
                 },
                 "x'{6,-1} x'{5,0} x{4,1} x'{5,i4} x4 " + head + " x5 x'{6,k1} x'{5,i4}",
                 "x4 x'{6,-1} x'{5,0} x{4,1} x'{5,i4} x4 " + head + " x5 x'{6,k1} x'{5,i4+1}"});
  }
  f.push_back({"f11", {"k1"}, [=](const Env& e) { return in(e, "k1", lo, 0); },
               head + " " + head + " x5 x'{6,k1} x'{5,1}", "x4 " + head + " " + head + " x5 x'{6,k1} x'{5,2}"});
  f.push_back({"f12", {}, nullptr, head + " x5 " + head + " x5 x'{6,-1} x'{5,0}",
               "x4 " + head + " x5 " + head + " x5 x'{6,-1} x'{5,1}"});
  return f;
}

}  // namespace

ClaimedBasis claimed_basis(std::string_view type_name, ClaimVariant variant) {
  const DiagramPreset preset = builtin_preset(type_name);
  std::vector<Family> families;
  if (type_name == "G2") {
    families = g2_families();
  } else if (type_name == "F4") {
    families = f4_families();
  } else if (type_name == "E6" || type_name == "E7" || type_name == "E8") {
    families = e_families(static_cast<int>(preset.frame.count), variant);
  } else {
    throw Unsupported("no printed basis for type '" + std::string(type_name) + "'");
  }

  ClaimedBasis out;
  out.type_name = std::string(type_name);
  out.variant = variant;
  out.alphabet = preset.alphabet();
  const auto& rank = out.alphabet.ranks();
  const int lo = preset.frame.first;
  const int hi = preset.frame.first + preset.frame.count - 1;

  for (const Family& fam : families) {
    for_each_assignment(fam.vars, lo, hi, [&](const Env& env) {
      if (fam.in_range && !fam.in_range(env)) return;
      const Expansion l = expand(fam.lhs, env, preset.frame);
      const Expansion r = expand(fam.rhs, env, preset.frame);
      ClaimedElement e;
      e.family = fam.name;
      for (const auto& v : fam.vars) e.indices.emplace_back(v, env.at(v));
      e.printed_lhs = l.word;
      e.printed_rhs = r.word;
      e.undefined_notation = l.undefined || r.undefined;
      e.printed_orientation = deglex(l.word, r.word, rank) > 0;
      e.poly = binomial(l.word, r.word, out.alphabet);
      out.elements.push_back(std::move(e));
    });
  }
  return out;
}

}  // namespace gsb
