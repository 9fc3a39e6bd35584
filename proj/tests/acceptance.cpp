// Acceptance checks, one PASS/FAIL line per criterion. Expected orders and
// lengths come from the permutation oracle; printed data from the claimed
// families. Usage: gsb_acceptance [criterion...]

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "gsb/cli.hpp"
#include "gsb/coxeter.hpp"
#include "gsb/io.hpp"
#include "support/support.hpp"

using namespace gsb;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Run {
  int code;
  std::string out;
  double seconds;

  std::string field(const std::string& key) const {
    const auto last = out.rfind('\n', out.size() - 2);
    const std::string line = out.substr(last == std::string::npos ? 0 : last + 1);
    const auto at = line.find(" " + key + "=") != std::string::npos ? line.find(" " + key + "=") + 1
                    : line.rfind(key + "=", 0) == 0                ? 0
                                                                   : std::string::npos;
    if (at == std::string::npos) return "";
    const auto start = at + key.size() + 1;
    return line.substr(start, line.find_first_of(" \n", start) - start);
  }

  std::size_t lines_starting(const std::string& prefix) const {
    std::size_t n = 0;
    std::istringstream in(out);
    for (std::string line; std::getline(in, line);) n += line.rfind(prefix, 0) == 0;
    return n;
  }
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const auto t0 = Clock::now();
  const int code = cli::run(args, out, err);
  return {code, out.str() + err.str(), seconds_since(t0)};
}

// Collects the sub-checks of one criterion onto a single line.
class Criterion {
 public:
  Criterion(int number, std::string title) : number_(number), title_(std::move(title)) {}

  void check(bool ok, const std::string& what) {
    ok_ = ok_ && ok;
    parts_.push_back((ok ? "" : "FAILED ") + what);
  }

  bool report() const {
    std::cout << (ok_ ? "PASS" : "FAIL") << " " << number_ << " " << title_ << ":";
    for (std::size_t k = 0; k < parts_.size(); ++k) std::cout << (k ? "; " : " ") << parts_[k];
    std::cout << std::endl;
    return ok_;
  }

 private:
  int number_;
  std::string title_;
  bool ok_ = true;
  std::vector<std::string> parts_;
};

// Seconds, printed as milliseconds.
std::string num(double v) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(1);
  s << v * 1000 << " ms";
  return s.str();
}

struct OracleFacts {
  BigInt order;
  std::size_t longest;  // half the number of roots
};

OracleFacts oracle_facts(const std::string& type) {
  const RootSystem rs = root_system(builtin_preset(type));
  return {schreier_sims_order(rs.reflections), rs.size() / 2};
}

std::string text(const BigInt& v) { return v.str(); }

std::string basis_part(const std::string& out) { return out.substr(0, out.rfind("status=")); }

// count --type T must report the oracle order and max length.
void check_count(Criterion& c, const std::string& type) {
  const OracleFacts want = oracle_facts(type);
  const Run r = cli({"count", "--type", type});
  c.check(r.code == 0 && r.field("total") == text(want.order),
          type + " count " + r.field("total") + " (oracle " + text(want.order) + ")");
  c.check(r.field("max_length") == std::to_string(want.longest),
          type + " max length " + r.field("max_length") + " (oracle " + std::to_string(want.longest) + ")");
}

// verify prints one claim line per printed family instance.
void check_report(Criterion& c, const std::string& type, const Run& v, ClaimVariant variant) {
  const std::size_t claims = claimed_basis(type, variant).elements.size();
  c.check(v.lines_starting("claim ") == claims,
          "verify " + type + " reports " + std::to_string(v.lines_starting("claim ")) + "/" + std::to_string(claims) +
              " instances, match=" + v.field("match") + ", unclaimed=" + v.field("unclaimed"));
}

bool criterion1() {
  Criterion c(1, "G2 completion");
  const Run r = cli({"complete", "--type", "G2"});
  const DiagramPreset p = builtin_preset("G2");
  const std::string canonical = write_basis(Basis(p.alphabet(), presentation_from_matrix(p.matrix, p.alphabet())));
  c.check(r.code == 0 && r.field("status") == "complete", "status " + r.field("status"));
  c.check(basis_part(r.out) == canonical, "basis file equals the 3 initial relations");
  c.check(r.seconds < 1.0, "time " + num(r.seconds) + " < 1 s");
  return c.report();
}

bool criterion2() {
  Criterion c(2, "F4 completion");
  const Run r = cli({"complete", "--type", "F4"});
  const Basis b = read_basis(basis_part(r.out));
  const ClaimedBasis printed = claimed_basis("F4");
  const auto& rank = b.alphabet().ranks();
  std::set<Word, DegLexLess> computed{DegLexLess{&rank}}, claimed{DegLexLess{&rank}};
  for (const Poly& g : b.elements()) computed.insert(g.leading_word());
  for (const auto& e : printed.elements) claimed.insert(e.poly.leading_word());
  c.check(r.code == 0 && b.size() == 21, "elements " + std::to_string(b.size()) + " = 21");
  c.check(computed == claimed && claimed.size() == printed.elements.size(),
          "leading words match the printed theta/alpha list one-for-one");
  const Word a11 = parse_word("x4 x3 x2 x1 x3 x2 x3 x4 x3 x2 x1 x3 x2 x3 x4 x3", b.alphabet());
  c.check(computed.count(a11) == 1, "alpha11 leading word present");
  const Run v = cli({"verify", "--type", "F4"});
  c.check(v.code == 0, "verify --type F4 exit " + std::to_string(v.code) + " (match=" + v.field("match") + ")");
  c.check(r.seconds < 30.0, "time " + num(r.seconds) + " < 30 s");
  return c.report();
}

bool criterion3() {
  Criterion c(3, "E6 completion");
  const Run r = cli({"complete", "--type", "E6"});
  c.check(r.code == 0 && r.field("status") == "complete",
          "status " + r.field("status") + " elements=" + r.field("elements"));
  check_count(c, "E6");
  const Run v = cli({"verify", "--type", "E6"});
  check_report(c, "E6", v, ClaimVariant::AsPrinted);
  c.check(r.seconds < 900.0, "time " + num(r.seconds) + " < 15 min");
  return c.report();
}

bool criterion4() {
  Criterion c(4, "E7 order and family report");
  const Run r = cli({"complete", "--type", "E7"});
  c.check(r.code == 0 && r.field("status") == "complete",
          "status " + r.field("status") + " elements=" + r.field("elements") + " in " + num(r.seconds));
  check_count(c, "E7");
  const Run v = cli({"verify", "--type", "E7", "--as-printed"});
  check_report(c, "E7", v, ClaimVariant::AsPrinted);
  c.check(r.seconds < 3 * 3600.0, "completion within 3 h");
  return c.report();
}

bool criterion5() {
  Criterion c(5, "E8 witness report, oracle and full completion");
  const Run v = cli({"verify", "--type", "E8", "--as-printed"});
  const bool closed = v.field("closed") == "yes";
  c.check(!v.out.empty() && v.field("closed") != "", "verify --as-printed completes (exit " + std::to_string(v.code) + ")");
  const std::size_t listed = v.lines_starting("witness ");
  c.check(closed || (listed > 0 && std::to_string(listed) == v.field("witnesses")),
          "closed=" + v.field("closed") + " with " + std::to_string(listed) + " witnesses listed");
  check_report(c, "E8", v, ClaimVariant::AsPrinted);
  const Run o = cli({"oracle", "--type", "E8", "--samples", "0"});
  const OracleFacts want = oracle_facts("E8");
  c.check(o.code == 0 && o.field("order") == "696729600" && o.field("order") == text(want.order),
          "oracle order " + o.field("order"));
  c.check(o.field("roots") == "240", "roots " + o.field("roots"));
  c.check(o.seconds < 10.0, "oracle " + num(o.seconds) + " < 10 s");
  check_count(c, "E8");
  return c.report();
}

bool criterion6() {
  Criterion c(6, "sanity presets");
  const Run a2 = cli({"complete", "--type", "A2"});
  c.check(a2.field("elements") == "4", "A2 completion elements " + a2.field("elements") + " (expected 4)");
  for (const char* t : {"A2", "A3", "B3"}) {
    const OracleFacts want = oracle_facts(t);
    const Run r = cli({"count", "--type", t});
    const std::string expected = std::string(t) == "A2" ? "6" : std::string(t) == "A3" ? "24" : "48";
    c.check(r.code == 0 && r.field("total") == expected && r.field("total") == text(want.order),
            std::string(t) + " order " + r.field("total"));
    c.check(r.seconds < 5.0, std::string(t) + " " + num(r.seconds) + " < 5 s");
  }
  return c.report();
}

bool criterion7() {
  Criterion c(7, "property suites");
  std::vector<testing::PropertyResult> results;
  results.push_back(testing::monomial_order_axioms(701, 1000));
  for (const char* t : {"A3", "B3", "D4", "G2", "F4", "E6", "E7"}) results.push_back(testing::strategy_independence(t, 702, 1000));
  for (const std::string& t : builtin_type_names()) results.push_back(testing::word_times_reverse(t, 703, 1000));
  for (const std::string& t : builtin_type_names()) results.push_back(testing::congruence(t, 704, 1000));
  for (const char* t : {"F4", "E6"}) results.push_back(testing::oracle_equivalence(t, 705, 1000));
  results.push_back(testing::palindromic_growth(builtin_type_names(), 706, 1000));
  results.push_back(testing::thread_determinism({"F4", "E6", "E7"}, {1, 2, 4}, 707, 1000));
  for (const auto& r : results) {
    c.check(r.ok() && r.cases >= 1000, r.name + " " + std::to_string(r.cases - r.failures) + "/" + std::to_string(r.cases) +
                                           (r.ok() ? "" : " first failure " + r.first_failure));
  }
  return c.report();
}

bool criterion8() {
  Criterion c(8, "enumeration consistency");
  for (const std::string& t : builtin_type_names()) {
    const auto& done = testing::completed(t);
    const AvoidanceAutomaton aut = build_avoidance(done.report.basis);
    const GrowthSeries s = count_by_length(aut, 8);
    std::vector<BigInt> listed(9, 0);
    enumerate_normal_forms(aut, 8, [&](const Word& w) {
      ++listed[w.size()];
      return true;
    });
    bool agree = true;
    for (std::size_t l = 0; l < s.counts.size(); ++l) agree = agree && listed[l] == s.counts[l];
    const bool small = s.counts[0] == 1 && s.counts[1] == done.preset.matrix.size();
    c.check(agree && small, t + " lengths 0..8 agree, counts[0]=" + text(s.counts[0]) + " counts[1]=" + text(s.counts[1]));
  }
  return c.report();
}

}  // namespace

int main(int argc, char** argv) {
  const std::map<int, std::function<bool()>> all{{1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},
                                                 {5, criterion5}, {6, criterion6}, {7, criterion7}, {8, criterion8}};
  std::vector<int> chosen;
  for (int k = 1; k < argc; ++k) chosen.push_back(std::stoi(argv[k]));
  if (chosen.empty()) {
    for (const auto& [n, f] : all) chosen.push_back(n);
  }
  bool ok = true;
  for (int n : chosen) {
    const auto it = all.find(n);
    if (it == all.end()) {
      std::cerr << "no criterion " << n << "\n";
      return 2;
    }
    ok = it->second() && ok;
  }
  return ok ? 0 : 1;
}
