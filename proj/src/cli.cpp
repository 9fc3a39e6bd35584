#include "gsb/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "gsb/completion.hpp"
#include "gsb/coxeter.hpp"
#include "gsb/enumeration.hpp"
#include "gsb/error.hpp"
#include "gsb/io.hpp"
#include "gsb/oracle.hpp"

namespace gsb::cli {

namespace {

struct Config {
  std::string type;
  std::string file;
  std::string basis;
  std::string output;
  std::string resume;
  std::size_t max_degree = 0;  // 0 = per-type default
  std::size_t max_elements = CompletionLimits{}.max_elements;
  std::size_t max_rounds = 0;
  std::size_t horizon = kDefaultHorizon;
  std::size_t checkpoint_every = 10;
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
  int threads = -1;  // -1 = from the environment
  bool corrected = false;
  bool force = false;
  std::string word;
};

struct Input {
  Alphabet alphabet;
  std::vector<Poly> relations;
  std::optional<CoxeterMatrix> matrix;
  std::string label;
};

class Failure : public std::runtime_error {
 public:
  Failure(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

int thread_count(const Config& cfg) {
  if (cfg.threads >= 0) return cfg.threads;
  if (const char* env = std::getenv("GSB_THREADS")) {
    try {
      return std::max(0, std::stoi(env));
    } catch (const std::exception&) {
      throw Failure(kUsage, "GSB_THREADS is not an integer");
    }
  }
  return 0;
}

ExecOptions exec_options(const Config& cfg) {
  const int threads = thread_count(cfg);
  return ExecOptions{threads != 1, threads};
}

std::size_t source_count(const Config& cfg) {
  return std::size_t{!cfg.type.empty()} + std::size_t{!cfg.file.empty()} + std::size_t{!cfg.basis.empty()};
}

Input presentation_input(const Config& cfg) {
  if (!cfg.type.empty()) {
    const DiagramPreset p = builtin_preset(cfg.type);
    return Input{p.alphabet(), presentation_from_matrix(p.matrix, p.alphabet()), p.matrix, cfg.type};
  }
  Presentation p = parse_presentation(read_file(cfg.file));
  return Input{std::move(p.alphabet), std::move(p.relations), std::move(p.matrix), cfg.file};
}

CompletionLimits limits_for(const Config& cfg) {
  CompletionLimits limits;
  limits.max_degree = cfg.max_degree ? cfg.max_degree : (cfg.type == "E8" ? 128 : limits.max_degree);
  limits.max_elements = cfg.max_elements;
  limits.max_rounds = cfg.max_rounds;
  return limits;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

bool closed(const Basis& basis, const ExecOptions& exec) {
  if (basis.all_binomial()) return is_gs_basis(RewriteSystem::from_basis(basis), exec).is_gs;
  return is_gs_basis(basis).is_gs;
}

struct Obtained {
  Basis basis;
  bool verified = false;
  std::optional<CoxeterMatrix> matrix;
};

// The basis a query command works on: a basis file as given, or the
// completion of a preset or presentation.
Obtained obtain_basis(const Config& cfg) {
  if (source_count(cfg) != 1) throw Failure(kUsage, "give exactly one of --type, --file, --basis");
  const ExecOptions exec = exec_options(cfg);
  if (!cfg.basis.empty()) {
    Basis b = read_basis(read_file(cfg.basis));
    const bool ok = closed(b, exec);
    return Obtained{std::move(b), ok, std::nullopt};
  }
  Input in = presentation_input(cfg);
  CompletionOptions opt;
  opt.exec = exec;
  opt.keep_added = false;
  CompletionReport r = shirshov_complete(in.relations, in.alphabet, limits_for(cfg), opt);
  return Obtained{std::move(r.basis), r.status == CompletionStatus::Complete, std::move(in.matrix)};
}

Basis require_verified(const Config& cfg, std::optional<CoxeterMatrix>* matrix = nullptr) {
  Obtained o = obtain_basis(cfg);
  if (!o.verified && !cfg.force) {
    throw Failure(kUsage, "basis is not verified closed; pass --force to use it anyway");
  }
  if (matrix) *matrix = std::move(o.matrix);
  return std::move(o.basis);
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string fixed(double v) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(1);
  s << v;
  return s.str();
}

// ---------------------------------------------------------------- complete

int cmd_complete(const Config& cfg, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  Alphabet alphabet;
  CompletionState state;
  if (!cfg.resume.empty()) {
    std::tie(alphabet, state) = read_checkpoint(read_file(cfg.resume));
  } else {
    if (!cfg.basis.empty()) throw Failure(kUsage, "complete takes --type or --file");
    if (source_count(cfg) != 1) throw Failure(kUsage, "give exactly one of --type, --file");
    Input in = presentation_input(cfg);
    alphabet = in.alphabet;
    state.rules.clear();
    for (const Poly& p : in.relations) {
      if (!is_binomial(make_monic(p))) throw Failure(kUsage, "presentation relations must be of the form u = v");
      state.rules.push_back(as_rule(make_monic(p)));
    }
  }

  CompletionOptions opt;
  opt.exec = exec_options(cfg);
  opt.keep_added = false;
  const std::string ckpt = cfg.output.empty() ? std::string() : cfg.output + ".ckpt";
  if (!ckpt.empty() && cfg.checkpoint_every > 0) {
    opt.on_round = [&](const CompletionState& s) {
      if (s.round % cfg.checkpoint_every == 0) write_file(ckpt, write_checkpoint(s, alphabet));
    };
  }
  CompletionReport r = complete_rules(alphabet, std::move(state), limits_for(cfg), opt);

  const std::string text = write_basis(r.basis);
  if (cfg.output.empty()) {
    out << text;
  } else {
    write_file(cfg.output, text);
  }
  const bool complete = r.status == CompletionStatus::Complete;
  out << "status=" << (complete ? "complete" : "truncated") << " elements=" << r.basis.size()
      << " rounds=" << r.rounds << " max_degree=" << r.max_degree_reached << " pairs=" << r.pairs;
  if (!complete) out << " reason=" << r.truncation_reason;
  out << " time_ms=" << fixed(elapsed_ms(t0)) << "\n";
  return complete ? kOk : kTruncated;
}

// ------------------------------------------------------------------ verify

void print_witnesses(const GsCheckReport& report, const RewriteSystem& system,
                     const std::map<Word, std::string>& names, std::ostream& out) {
  const Alphabet& a = system.alphabet();
  auto name = [&](std::size_t k) {
    auto it = names.find(system.rules()[k].lhs);
    return it == names.end() ? format_word(system.rules()[k].lhs, a) : it->second;
  };
  for (const GsWitness& w : report.witnesses) {
    out << "witness " << (w.candidate.kind == CompositionKind::Inclusion ? "inclusion" : "intersection")
        << " f=" << name(w.candidate.left) << " g=" << name(w.candidate.right)
        << " overlap=" << format_word(w.candidate.overlap_word, a) << " nf=" << format_poly(w.normal_form, a)
        << "\n";
  }
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  const ExecOptions exec = exec_options(cfg);
  if (cfg.type.empty()) {
    if (cfg.basis.empty() || !cfg.file.empty()) throw Failure(kUsage, "verify takes --type or --basis");
    const Basis b = read_basis(read_file(cfg.basis));
    GsCheckReport gs;
    if (b.all_binomial()) {
      const RewriteSystem system = RewriteSystem::from_basis(b);
      gs = is_gs_basis(system, exec);
      print_witnesses(gs, system, {}, out);
    } else {
      gs = is_gs_basis(b);
      for (const GsWitness& w : gs.witnesses) {
        out << "witness nf=" << format_poly(w.normal_form, b.alphabet()) << "\n";
      }
    }
    out << "verify elements=" << b.size() << " closed=" << yes_no(gs.is_gs) << " witnesses=" << gs.witnesses.size()
        << " candidates=" << gs.candidates << "\n";
    return gs.is_gs ? kOk : kMismatch;
  }
  if (!cfg.file.empty()) throw Failure(kUsage, "verify takes --type with an optional --basis");
  if (!has_claimed_basis(cfg.type)) throw Failure(kUsage, "no printed basis for type " + cfg.type);

  const ClaimVariant variant = cfg.corrected ? ClaimVariant::Corrected : ClaimVariant::AsPrinted;
  const ClaimedBasis claimed = claimed_basis(cfg.type, variant);
  const Alphabet& a = claimed.alphabet;
  std::map<Word, std::string> names;
  for (const ClaimedElement& e : claimed.elements) {
    if (!e.poly.is_zero()) names.emplace(e.poly.leading_word(), describe(e));
  }

  // Closure of the claimed set itself.
  const RewriteSystem claimed_system = RewriteSystem::from_basis(claimed.basis());
  const GsCheckReport gs = is_gs_basis(claimed_system, exec);
  print_witnesses(gs, claimed_system, names, out);

  // The computed basis to diff against.
  Basis computed;
  bool computed_closed = false;
  if (!cfg.basis.empty()) {
    computed = read_basis(read_file(cfg.basis));
    if (!(computed.alphabet() == a)) throw Failure(kUsage, "basis file alphabet differs from type " + cfg.type);
    computed_closed = closed(computed, exec);
  } else {
    const DiagramPreset p = builtin_preset(cfg.type);
    CompletionOptions opt;
    opt.exec = exec;
    opt.keep_added = false;
    CompletionReport r = shirshov_complete(presentation_from_matrix(p.matrix, a), a, limits_for(cfg), opt);
    computed = std::move(r.basis);
    computed_closed = r.status == CompletionStatus::Complete;
  }
  const DiscrepancyReport d = verify_against_claims(claimed, computed);

  // Independent check: both printed sides are the same group element.
  const RootSystem roots = root_system(builtin_preset(cfg.type));
  std::size_t oracle_failures = 0;
  for (const ClaimCheck& c : d.claims) {
    const ClaimedElement& e = claimed.elements[c.claim];
    const bool holds = word_to_perm(e.printed_lhs, roots.reflections) == word_to_perm(e.printed_rhs, roots.reflections);
    if (!holds) ++oracle_failures;
    out << "claim " << describe(e) << " " << to_string(c.status) << " oracle=" << (holds ? "holds" : "fails");
    if (!e.printed_orientation) out << " misoriented";
    if (e.undefined_notation) out << " undefined-notation";
    if (c.status == ClaimStatus::NotInIdeal) out << " nf=" << format_poly(c.normal_form, a);
    out << "\n";
  }
  for (const Word& w : d.computed_leads_not_claimed) out << "unclaimed " << format_word(w, a) << "\n";

  const bool ok = gs.is_gs && computed_closed && d.full_match() && oracle_failures == 0;
  out << "verify type=" << cfg.type << " variant=" << (cfg.corrected ? "corrected" : "as-printed")
      << " claims=" << claimed.elements.size() << " closed=" << yes_no(gs.is_gs) << " witnesses=" << gs.witnesses.size()
      << " computed=" << computed.size() << " computed_closed=" << yes_no(computed_closed)
      << " exact=" << d.exact_matches << " same_lead=" << d.same_lead << " in_ideal=" << d.in_ideal
      << " not_in_ideal=" << d.not_in_ideal << " misoriented=" << d.misoriented << " degenerate=" << d.degenerate
      << " unclaimed=" << d.computed_leads_not_claimed.size() << " oracle_failures=" << oracle_failures
      << " match=" << (d.exact() ? "exact" : d.full_match() ? "leading-words" : "no") << "\n";
  return ok ? kOk : kMismatch;
}

// ---------------------------------------------------------------------- nf

int cmd_nf(const Config& cfg, std::ostream& out) {
  const Basis basis = require_verified(cfg);
  Word w;
  try {
    w = parse_word(cfg.word, basis.alphabet());
  } catch (const Error& e) {
    throw Failure(kUsage, std::string("word: ") + e.what());
  }
  Word nf;
  if (basis.all_binomial()) {
    nf = nf_word(w, RewriteSystem::from_basis(basis));
  } else {
    const Poly p = normal_form(Poly::from_sorted({Term{1, w}}), basis);
    out << format_poly(p, basis.alphabet()) << "\n";
    out << "input_length=" << w.size() << " terms=" << p.size() << "\n";
    return kOk;
  }
  out << format_word(nf, basis.alphabet()) << "\n";
  out << "input_length=" << w.size() << " length=" << nf.size() << "\n";
  return kOk;
}

// ------------------------------------------------------------ count/growth

std::optional<BigInt> oracle_order(const std::optional<CoxeterMatrix>& matrix) {
  if (!matrix) return std::nullopt;
  try {
    return schreier_sims_order(root_system(*matrix).reflections);
  } catch (const Unsupported&) {
    return std::nullopt;
  }
}

int cmd_count(const Config& cfg, std::ostream& out, bool growth) {
  std::optional<CoxeterMatrix> matrix;
  const Basis basis = require_verified(cfg, &matrix);
  const AvoidanceAutomaton automaton = build_avoidance(basis);
  const GrowthSeries series = count_by_length(automaton, std::nullopt, cfg.horizon);
  if (growth || !series.finite) {
    for (std::size_t l = 0; l < series.counts.size(); ++l) out << l << " " << series.counts[l] << "\n";
  }
  if (!series.finite) {
    if (growth) out << "infinite (horizon " << cfg.horizon << ")\n";
    out << "finite=no horizon=" << cfg.horizon << " states=" << automaton.state_count() << "\n";
    return kInfinite;
  }
  if (growth) out << "total " << series.total << "\n";
  if (!growth) out << series.total << "\n";
  const auto expected = oracle_order(matrix);
  out << "finite=yes total=" << series.total << " max_length=" << series.max_length()
      << " palindromic=" << yes_no(series.palindromic());
  if (expected) out << " oracle=" << *expected << " agree=" << yes_no(*expected == series.total);
  out << "\n";
  return expected && *expected != series.total ? kMismatch : kOk;
}

// ------------------------------------------------------------------ oracle

int cmd_oracle(const Config& cfg, std::ostream& out) {
  if (!cfg.basis.empty() || source_count(cfg) != 1) throw Failure(kUsage, "oracle takes --type or --file");
  const Input in = presentation_input(cfg);
  if (!in.matrix) throw Failure(kUsage, "oracle needs a Coxeter matrix (--type or a JSON presentation)");
  const auto t0 = std::chrono::steady_clock::now();
  const RootSystem roots = root_system(*in.matrix);
  const BigInt order = schreier_sims_order(roots.reflections);
  const double oracle_ms = elapsed_ms(t0);
  out << "roots " << roots.size() << "\n";
  out << "order " << order << "\n";
  const std::size_t longest = roots.size() / 2;
  out << "longest_element_length " << longest << "\n";

  bool agree = true;
  std::string verdict = "skipped";
  if (cfg.samples > 0) {
    CompletionOptions opt;
    opt.exec = exec_options(cfg);
    opt.keep_added = false;
    CompletionReport r = shirshov_complete(in.relations, in.alphabet, limits_for(cfg), opt);
    if (r.status != CompletionStatus::Complete) {
      verdict = "truncated";
      agree = false;
    } else {
      const RewriteSystem system = RewriteSystem::from_basis(r.basis);
      CrossCheckOptions cc;
      cc.samples = cfg.samples;
      cc.seed = cfg.seed;
      cc.threads = thread_count(cfg);
      const CrossCheckReport report = cross_check(*in.matrix, roots, system, cc);
      for (const auto& m : report.mismatches) {
        out << "mismatch u=" << format_word(m.u, in.alphabet) << " v=" << format_word(m.v, in.alphabet)
            << " same_element=" << yes_no(m.same_element) << " same_nf=" << yes_no(m.same_normal_form) << "\n";
      }
      const GrowthSeries series = count_by_length(build_avoidance(r.basis));
      const bool counts = series.finite && series.total == order && series.max_length() == longest;
      out << "normal_forms " << series.total << " max_length " << series.max_length() << "\n";
      agree = report.ok() && counts;
      verdict = agree ? "pass" : "fail";
      out << "cross_check samples=" << report.samples << " same_element=" << report.same_element
          << " mismatches=" << report.mismatches.size() << "\n";
    }
  }
  out << "roots=" << roots.size() << " order=" << order << " oracle_ms=" << fixed(oracle_ms)
      << " cross_check=" << verdict << "\n";
  return agree ? kOk : kMismatch;
}

void add_source(CLI::App* sub, Config& cfg, bool basis_allowed = true) {
  sub->add_option("--type", cfg.type, "Built-in Coxeter type (A2 A3 B3 D4 G2 F4 E6 E7 E8, or A_n/B_n/D_n)");
  sub->add_option("--file", cfg.file, "Presentation file (text or JSON)");
  if (basis_allowed) sub->add_option("--basis", cfg.basis, "Basis file in canonical format");
}

void add_limits(CLI::App* sub, Config& cfg) {
  sub->add_option("--max-degree", cfg.max_degree, "Leading-word degree cap of admitted elements")
      ->check(CLI::PositiveNumber);
  sub->add_option("--max-elements", cfg.max_elements, "Element count cap")->check(CLI::PositiveNumber);
  sub->add_option("--max-rounds", cfg.max_rounds, "Round cap")->check(CLI::PositiveNumber);
  sub->add_option("--threads", cfg.threads, "Worker threads (0 = all); default from GSB_THREADS")
      ->check(CLI::NonNegativeNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Groebner-Shirshov bases of Coxeter groups", "gsb"};
  app.require_subcommand(1);

  auto* complete = app.add_subcommand("complete", "Complete a presentation to a reduced basis");
  add_source(complete, cfg, false);
  add_limits(complete, cfg);
  complete->add_option("--output,-o", cfg.output, "Basis file to write (default: standard output)");
  complete->add_option("--checkpoint-every", cfg.checkpoint_every, "Rounds between checkpoints (0 = off)");
  complete->add_option("--resume", cfg.resume, "Continue from a checkpoint file");

  auto* verify = app.add_subcommand("verify", "Check closure and diff a printed basis against the computed one");
  add_source(verify, cfg);
  add_limits(verify, cfg);
  auto* printed = verify->add_flag("--as-printed", "Printed families exactly as given (default)");
  verify->add_flag("--corrected", cfg.corrected, "Printed families with the notational fixes")->excludes(printed);

  auto* nf = app.add_subcommand("nf", "Normal form of a word");
  add_source(nf, cfg);
  add_limits(nf, cfg);
  nf->add_flag("--force", cfg.force, "Use an unverified basis");
  nf->add_option("word", cfg.word, "Word, generators separated by spaces")->required();

  auto* count = app.add_subcommand("count", "Number of normal forms (group order)");
  auto* growth = app.add_subcommand("growth", "Normal forms per length");
  for (auto* sub : {count, growth}) {
    add_source(sub, cfg);
    add_limits(sub, cfg);
    sub->add_flag("--force", cfg.force, "Use an unverified basis");
    sub->add_option("--horizon", cfg.horizon, "Length horizon for infinite languages")->check(CLI::PositiveNumber);
  }

  auto* oracle = app.add_subcommand("oracle", "Root system, Schreier-Sims order and cross-check");
  add_source(oracle, cfg, false);
  add_limits(oracle, cfg);
  oracle->add_option("--samples", cfg.samples, "Random word pairs to cross-check (0 = skip)");
  oracle->add_option("--seed", cfg.seed, "Seed for the cross-check samples");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*complete) return cmd_complete(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
    if (*nf) return cmd_nf(cfg, out);
    if (*count) return cmd_count(cfg, out, false);
    if (*growth) return cmd_count(cfg, out, true);
    if (*oracle) return cmd_oracle(cfg, out);
  } catch (const Failure& e) {
    err << "error: " << e.what() << "\n";
    return e.code();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const Unverified& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace gsb::cli
