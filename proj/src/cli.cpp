#include "garlink/cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "garlink/braidrep.hpp"
#include "garlink/errors.hpp"
#include "garlink/garside.hpp"
#include "garlink/io.hpp"
#include "garlink/linkinv.hpp"
#include "garlink/semidirect.hpp"
#include "garlink/wada.hpp"
#include "garlink/words.hpp"

namespace garlink::cli {

namespace {

using garside::CheckRecord;
using garside::ComplementTable;
using garside::GarsideCertificate;
using garside::MonoidPresentation;
using words::Alphabet;
using words::Letter;
using words::PositiveWord;
using words::SignedWord;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitDiverged = 3;

struct Shared {
  std::int64_t cap = 1'000'000;
  std::int64_t oracle_norm = 0;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string format = "text";

  void attach(CLI::App* app) {
    app->add_option("--cap", cap, "reversal step budget")->check(CLI::PositiveNumber);
    app->add_option("--oracle-norm", oracle_norm, "norm bound for the brute-force oracle")
        ->check(CLI::NonNegativeNumber);
    app->add_option("--seed", seed, "seed for randomized harnesses");
    app->add_option("--jobs", jobs, "worker count for independent cases")
        ->check(CLI::PositiveNumber);
    app->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "machine"}));
  }
};

// key/value report that renders as "key = value" (text) or "key=value" (machine).
class Report {
 public:
  Report(std::ostream& out, const std::string& format) : out_(out), machine_(format == "machine") {}

  void line(const std::string& key, const std::string& value) {
    out_ << key << (machine_ ? "=" : " = ") << value << "\n";
  }
  void raw(const std::string& text) { out_ << text; }

 private:
  std::ostream& out_;
  bool machine_;
};

std::string status_word(CheckRecord::Status s) { return garside::to_string(s); }

void emit_certificate(Report& report, const GarsideCertificate& cert, const Alphabet& alphabet) {
  report.line("delta", words::to_string(cert.delta, alphabet));
  report.line("pass", cert.passed() ? "true" : "false");
  {
    std::ostringstream atoms;
    for (std::size_t i = 0; i < cert.atoms.size(); ++i) {
      if (i) atoms << ' ';
      atoms << alphabet.name(cert.atoms[i]);
    }
    report.line("atoms", atoms.str());
  }
  report.line("left-divisor-count", std::to_string(cert.left_divisors.size()));
  report.line("right-divisor-count", std::to_string(cert.right_divisors.size()));
  auto emit_set = [&](const std::string& key, const std::vector<PositiveWord>& set) {
    if (set.size() > 64) return;
    std::ostringstream os;
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (i) os << ' ';
      os << '(' << (set[i].empty() ? "1" : words::to_string(set[i], alphabet)) << ')';
    }
    report.line(key, os.str());
  };
  emit_set("left-divisors", cert.left_divisors);
  emit_set("right-divisors", cert.right_divisors);
  if (!cert.tau.empty()) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, b] : cert.tau) {
      if (!first) os << ' ';
      first = false;
      os << alphabet.name(a) << "->" << alphabet.name(b);
    }
    report.line("tau", os.str());
  }
  for (const CheckRecord& c : cert.checks) {
    std::string value = status_word(c.status);
    if (!c.detail.empty()) value += " (" + c.detail + ")";
    report.line("check " + c.name, value);
  }
}

int certificate_exit(const GarsideCertificate& cert) {
  bool diverged = false;
  for (const CheckRecord& c : cert.checks) {
    if (c.status == CheckRecord::Status::Diverged) diverged = true;
  }
  if (cert.passed()) return kExitPass;
  return diverged ? kExitDiverged : kExitFail;
}

struct LoadedPresentation {
  MonoidPresentation pres;
  ComplementTable left;
  ComplementTable right;
  std::optional<PositiveWord> delta;
};

LoadedPresentation load_presentation(const std::string& path) {
  io::PresentationFile file = io::load_presentation_file(path);
  if (file.base) {
    throw InputError("this command needs an explicit presentation, not a built-in base");
  }
  file.presentation.validate();
  LoadedPresentation lp{file.presentation, file.left_table(), file.right_table(), file.delta};
  return lp;
}

struct ResolvedBase {
  std::shared_ptr<const freeprod::BaseGroup> group;
  std::optional<SignedWord> distinguished;  // from the file, when present

  // --h wins; otherwise the file's distinguished element; otherwise 'a'.
  SignedWord pick_h(const std::string& h_text) const {
    if (!h_text.empty()) return words::parse_signed_word(h_text, group->alphabet());
    if (distinguished) return *distinguished;
    return words::parse_signed_word("a", group->alphabet());
  }
};

// --base Z | Z/<k> | <presentation file with delta>
ResolvedBase resolve_base(const std::string& spec, std::int64_t cap) {
  if (spec == "Z") return {freeprod::make_integers(), std::nullopt};
  if (spec.rfind("Z/", 0) == 0) {
    std::int64_t k = 0;
    try {
      k = std::stoll(spec.substr(2));
    } catch (const std::exception&) {
      throw InputError("bad modulus in base '" + spec + "'");
    }
    return {freeprod::make_cyclic(k), std::nullopt};
  }
  io::PresentationFile file = io::load_presentation_file(spec);
  if (file.base) {
    if (*file.base != "Z" && file.base->rfind("Z/", 0) != 0) {
      throw InputError("a file's 'base = ...' line must name a built-in (Z or Z/<k>)");
    }
    return resolve_base(*file.base, cap);
  }
  if (!file.delta) {
    throw InputError("base presentation file needs a 'delta = ...' line for verification");
  }
  auto structure = std::make_shared<garside::GarsideStructure>(
      file.presentation, file.left_table(), file.right_table(), *file.delta);
  if (!structure->verified()) {
    throw InputError("base presentation failed Garside verification; run 'garside verify' on it");
  }
  return {freeprod::make_garside_group(structure, cap), file.distinguished};
}

semidirect::GarsideBase resolve_garside_base(const std::string& spec, const std::string& h_text,
                                             const garside::VerifyOptions& opts) {
  if (spec == "Z") {
    Alphabet a({"a"});
    SignedWord h = words::parse_signed_word(h_text, a);
    std::int64_t k = words::exponent_sum(h, 0);
    if (k < 1 || static_cast<std::size_t>(k) != h.size()) {
      throw InputError("for H = Z the element h must be a positive power a^k, k >= 1");
    }
    return semidirect::GarsideBase::integers(k, opts);
  }
  if (spec.rfind("Z/", 0) == 0) {
    throw InputError("H = " + spec +
                     " is not the group of fractions of a Garside monoid (it has torsion)");
  }
  io::PresentationFile file = io::load_presentation_file(spec);
  if (file.base) {
    if (*file.base != "Z" && file.base->rfind("Z/", 0) != 0) {
      throw InputError("a file's 'base = ...' line must name a built-in (Z or Z/<k>)");
    }
    return resolve_garside_base(*file.base, h_text, opts);
  }
  PositiveWord d = words::parse_positive_word(h_text, file.presentation.alphabet);
  return semidirect::GarsideBase::build(file.presentation, file.left_table(), file.right_table(),
                                        d, opts);
}

// Alphabet with one copy of the base generators per factor: <name>_<i>.
Alphabet product_alphabet(const Alphabet& base, int factors) {
  std::vector<std::string> names;
  names.reserve(base.size() * static_cast<std::size_t>(factors));
  for (int i = 1; i <= factors; ++i) {
    for (const std::string& g : base.names()) names.push_back(g + "_" + std::to_string(i));
  }
  return Alphabet(names);
}

freeprod::FreeProductElement parse_element(const freeprod::FreeProduct& fp,
                                           const Alphabet& alphabet, const std::string& text) {
  SignedWord w = words::parse_signed_word(text, alphabet);
  const auto m = static_cast<Letter>(fp.base().alphabet().size());
  freeprod::FreeProductElement g;
  for (const words::SignedLetter& l : w.letters) {
    int factor = l.index / m + 1;
    SignedWord piece;
    piece.letters.push_back({static_cast<Letter>(l.index % m), l.sign});
    g = fp.multiply(g, fp.inject(factor, piece));
  }
  return g;
}

std::string element_to_string(const freeprod::FreeProduct& fp, const Alphabet& alphabet,
                              const freeprod::FreeProductElement& g) {
  const auto m = static_cast<Letter>(fp.base().alphabet().size());
  SignedWord w;
  for (const freeprod::Syllable& s : g.syllables) {
    for (const words::SignedLetter& l : s.content.letters) {
      w.letters.push_back({static_cast<Letter>((s.factor - 1) * m + l.index), l.sign});
    }
  }
  return g.is_identity() ? "1" : words::to_string(w, alphabet);
}

// ---------------------------------------------------------------------------
// garside subcommands

int cmd_garside_reverse(const Shared& shared, const std::string& file, const std::string& word,
                        bool right, std::ostream& out) {
  LoadedPresentation lp = load_presentation(file);
  SignedWord w = words::parse_signed_word(word, lp.pres.alphabet);
  garside::ReversalOutcome ro = right ? garside::reverse_right(w, lp.right, shared.cap)
                                      : garside::reverse_left(w, lp.left, shared.cap);
  Report report(out, shared.format);
  report.line("direction", right ? "right" : "left");
  switch (ro.status) {
    case garside::ReversalOutcome::Status::Converged:
      report.line("outcome", "converged");
      report.line("steps", std::to_string(ro.steps));
      if (right) {
        report.line("denominator", words::to_string(ro.left, lp.pres.alphabet));
        report.line("numerator", words::to_string(ro.right, lp.pres.alphabet));
      } else {
        report.line("numerator", words::to_string(ro.left, lp.pres.alphabet));
        report.line("denominator", words::to_string(ro.right, lp.pres.alphabet));
      }
      return kExitPass;
    case garside::ReversalOutcome::Status::Blocked:
      report.line("outcome", "blocked");
      report.line("pair", lp.pres.alphabet.name(ro.blocked_x) + " " +
                              lp.pres.alphabet.name(ro.blocked_y));
      return kExitPass;
    default:
      report.line("outcome", "diverged");
      report.line("cap", std::to_string(ro.cap));
      return kExitDiverged;
  }
}

int cmd_garside_coherence(const Shared& shared, const std::string& file, const std::string& side,
                          std::ostream& out) {
  LoadedPresentation lp = load_presentation(file);
  Report report(out, shared.format);
  bool fail = false;
  bool diverged = false;
  auto emit = [&](const std::string& name, const garside::CoherenceReport& cr,
                  const Alphabet& alphabet) {
    report.line(name + "-triples", std::to_string(cr.triples));
    report.line(name + "-failures", std::to_string(cr.failures.size()));
    report.line(name + "-undecided", std::to_string(cr.undecided.size()));
    for (const auto& t : cr.failures) {
      report.line(name + "-failure",
                  "(" + alphabet.name(t.x) + ", " + alphabet.name(t.y) + ", " +
                      alphabet.name(t.z) + ") " + t.detail);
    }
    fail = fail || !cr.failures.empty();
    diverged = diverged || !cr.undecided.empty();
  };
  if (side == "left" || side == "both") {
    emit("left", garside::check_coherence_left(lp.left, shared.cap), lp.pres.alphabet);
  }
  if (side == "right" || side == "both") {
    emit("right", garside::check_coherence_right(lp.right, shared.cap), lp.pres.alphabet);
  }
  if (fail) return kExitFail;
  return diverged ? kExitDiverged : kExitPass;
}

int cmd_garside_verify(const Shared& shared, const std::string& file, std::ostream& out) {
  LoadedPresentation lp = load_presentation(file);
  if (!lp.delta) throw InputError("presentation file needs a 'delta = ...' line");
  garside::VerifyOptions opts;
  opts.cap = shared.cap;
  opts.seed = shared.seed;
  GarsideCertificate cert = garside::verify_garside(lp.pres, lp.left, lp.right, *lp.delta, opts);
  Report report(out, shared.format);
  emit_certificate(report, cert, lp.pres.alphabet);
  return certificate_exit(cert);
}

int cmd_garside_nf(const Shared& shared, const std::string& file, const std::string& word,
                   std::ostream& out) {
  LoadedPresentation lp = load_presentation(file);
  if (!lp.delta) throw InputError("presentation file needs a 'delta = ...' line");
  garside::GarsideStructure structure(lp.pres, lp.left, lp.right, *lp.delta);
  if (!structure.verified()) {
    throw InputError("presentation failed Garside verification; run 'garside verify'");
  }
  Report report(out, shared.format);
  SignedWord w = words::parse_signed_word(word, lp.pres.alphabet);
  bool positive = true;
  for (const auto& l : w.letters) positive = positive && l.sign > 0;
  if (positive) {
    auto factors = structure.greedy_normal_form(words::as_positive(w), shared.cap);
    std::ostringstream os;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) os << ' ';
      os << '(' << words::to_string(factors[i], lp.pres.alphabet) << ')';
    }
    report.line("greedy-nf", factors.empty() ? "(1)" : os.str());
  } else {
    auto [a, b] = structure.group_normal_form(w, shared.cap);
    report.line("denominator", a.empty() ? "1" : words::to_string(a, lp.pres.alphabet));
    report.line("numerator", b.empty() ? "1" : words::to_string(b, lp.pres.alphabet));
  }
  return kExitPass;
}

int cmd_garside_wp(const Shared& shared, const std::string& file, const std::string& lhs,
                   const std::string& rhs, std::ostream& out) {
  LoadedPresentation lp = load_presentation(file);
  if (!lp.delta) throw InputError("presentation file needs a 'delta = ...' line");
  garside::GarsideStructure structure(lp.pres, lp.left, lp.right, *lp.delta);
  if (!structure.verified()) {
    throw InputError("presentation failed Garside verification; run 'garside verify'");
  }
  SignedWord u = words::parse_signed_word(lhs, lp.pres.alphabet);
  SignedWord v = words::parse_signed_word(rhs, lp.pres.alphabet);
  Report report(out, shared.format);
  report.line("equal", structure.group_equal(u, v, shared.cap) ? "true" : "false");
  return kExitPass;
}

int cmd_garside_ball(const Shared& shared, const std::string& file, std::ostream& out) {
  LoadedPresentation lp = load_presentation(file);
  garside::Ball ball = garside::Ball::enumerate(lp.pres, shared.oracle_norm);
  Report report(out, shared.format);
  report.line("norm-bound", std::to_string(shared.oracle_norm));
  report.line("classes", std::to_string(ball.class_count()));
  for (std::int64_t n = 0; n <= shared.oracle_norm; ++n) {
    report.line("classes-of-norm-" + std::to_string(n),
                std::to_string(ball.classes_of_norm(n).size()));
  }
  return kExitPass;
}

// ---------------------------------------------------------------------------
// braid subcommands

int cmd_braid_apply(const Shared& shared, const std::string& base_spec, const std::string& h_text,
                    int strands, const std::string& braid_text, const std::string& element_text,
                    std::ostream& out) {
  ResolvedBase rb = resolve_base(base_spec, shared.cap);
  auto base = rb.group;
  braidrep::ArtinRepresentation rep(base, rb.pick_h(h_text), strands);
  braidrep::BraidWord beta = braidrep::BraidWord::parse(strands, braid_text);
  Alphabet alphabet = product_alphabet(base->alphabet(), strands);
  auto g = parse_element(rep.ambient(), alphabet, element_text);
  auto image = rep.apply_braid(beta, g);
  Report report(out, shared.format);
  report.line("element", element_to_string(rep.ambient(), alphabet, g));
  report.line("image", element_to_string(rep.ambient(), alphabet, image));
  return kExitPass;
}

int cmd_braid_trivial(const Shared& shared, int strands, const std::string& braid_text,
                      std::ostream& out) {
  braidrep::BraidWord beta = braidrep::BraidWord::parse(strands, braid_text);
  Report report(out, shared.format);
  report.line("trivial", braidrep::braid_is_trivial(beta, shared.cap) ? "true" : "false");
  return kExitPass;
}

// ---------------------------------------------------------------------------
// linkinv subcommands

int cmd_linkinv_fingerprint(const Shared& shared, const std::string& base_spec,
                            const std::string& h_text, int strands, const std::string& braid_text,
                            std::ostream& out) {
  ResolvedBase rb = resolve_base(base_spec, shared.cap);
  braidrep::BraidWord beta = braidrep::BraidWord::parse(strands, braid_text);
  out << linkinv::fingerprint(rb.group, rb.pick_h(h_text), beta).to_string() << "\n";
  return kExitPass;
}

int cmd_linkinv_markov(const Shared& shared, int cases, std::ostream& out) {
  auto results = linkinv::markov_invariance_cases(cases, shared.seed, shared.jobs);
  Report report(out, shared.format);
  int failures = 0;
  for (const auto& r : results) {
    report.line("case " + std::to_string(r.index),
                std::string(r.pass ? "pass" : "FAIL") + " " + r.description + " " + r.fingerprint);
    if (!r.pass) ++failures;
  }
  report.line("cases", std::to_string(results.size()));
  report.line("failures", std::to_string(failures));
  return failures == 0 ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------------------
// semidirect subcommands

int cmd_semidirect_build(const Shared& shared, const std::string& base_spec,
                         const std::string& h_text, int strands, const std::string& out_path,
                         std::ostream& out) {
  garside::VerifyOptions opts;
  opts.cap = shared.cap;
  opts.seed = shared.seed;
  semidirect::GarsideBase base = resolve_garside_base(base_spec, h_text, opts);
  semidirect::SemidirectInstance inst = semidirect::build_instance(base, strands);
  std::string text = io::format_presentation(inst.presentation, inst.delta);
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(out_path);
    if (!f) throw InputError("cannot write to '" + out_path + "'");
    f << text;
    out << "written = " << out_path << "\n";
  }
  return kExitPass;
}

int cmd_semidirect_verify(const Shared& shared, const std::string& base_spec,
                          const std::string& h_text, int strands, std::ostream& out) {
  garside::VerifyOptions opts;
  opts.cap = shared.cap;
  opts.seed = shared.seed;
  semidirect::GarsideBase base = resolve_garside_base(base_spec, h_text, opts);
  semidirect::SemidirectInstance inst = semidirect::build_instance(base, strands);
  semidirect::StructureReport result = semidirect::verify_semidirect_structure(inst, opts);
  Report report(out, shared.format);
  emit_certificate(report, result.certificate, inst.presentation.alphabet);
  bool diverged = false;
  for (const CheckRecord& c : result.auxiliary) {
    std::string value = status_word(c.status);
    if (!c.detail.empty()) value += " (" + c.detail + ")";
    report.line("check " + c.name, value);
    if (c.status == CheckRecord::Status::Diverged) diverged = true;
  }
  report.line("structure", result.passed() ? "pass" : "fail");
  if (result.passed()) return kExitPass;
  if (diverged || certificate_exit(result.certificate) == kExitDiverged) return kExitDiverged;
  return kExitFail;
}

// ---------------------------------------------------------------------------
// wada subcommands

int cmd_wada_check(const Shared& shared, int n, int h, std::ostream& out) {
  Report report(out, shared.format);
  bool all = true;
  auto emit = [&](const std::string& name, bool pass) {
    report.line(name, pass ? "pass" : "fail");
    all = all && pass;
  };

  for (int type = 1; type <= 3; ++type) {
    wada::WadaRep rep{type == 1   ? wada::WadaType::Type1
                      : type == 2 ? wada::WadaType::Type2
                                  : wada::WadaType::Type3,
                      h, n};
    emit("braid-relations-type" + std::to_string(type), wada::check_braid_relations(rep));
  }
  emit("inversion-witness(h=" + std::to_string(h) + ")", wada::check_inversion_witness(h, n));
  emit("inversion-negative-control",
       !wada::check_inversion_witness(h, n, /*corrupt=*/true));
  emit("equivalence-2-3", wada::check_equivalence_witness_23(n));
  emit("equivalence-negative-control", !wada::check_equivalence_witness_23(n, true));
  wada::FixedSubgroupReport fixed = wada::fixed_subgroup_checks(h, n, 200, shared.seed);
  emit("fixed-generators", fixed.generators_fixed);
  emit("fixed-center", fixed.center_fixed);
  emit("fixed-converse-sampling", fixed.converse_ok);

  // distinction: type 1 abelianizes to permutation matrices, type 2 grows
  bool perms = true;
  for (int k = 1; k <= n - 1; ++k) {
    braidrep::BraidWord beta;
    beta.strands = n;
    beta.letters.letters.push_back({static_cast<Letter>(k - 1), +1});
    perms = perms && wada::abelianized_action(wada::WadaRep{wada::WadaType::Type1, h, n}, beta)
                         .is_permutation();
  }
  emit("type1-abelianized-permutations", perms);
  {
    braidrep::BraidWord power;
    power.strands = n;
    for (int i = 0; i < 50; ++i) power.letters.letters.push_back({0, +1});
    auto m = wada::abelianized_action(wada::WadaRep{wada::WadaType::Type2, 0, n}, power);
    emit("type2-abelianized-growth", m.at(0, 0) == 51 && m.at(1, 0) == -50);
  }
  report.line("all", all ? "pass" : "fail");
  return all ? kExitPass : kExitFail;
}

int cmd_wada_act(const Shared& shared, int type, int h, int strands,
                 const std::string& braid_text, const std::string& word_text, bool abelianized,
                 std::ostream& out) {
  wada::WadaRep rep{type == 1   ? wada::WadaType::Type1
                    : type == 2 ? wada::WadaType::Type2
                                : wada::WadaType::Type3,
                    h, strands};
  rep.validate();
  braidrep::BraidWord beta = braidrep::BraidWord::parse(strands, braid_text);
  Report report(out, shared.format);
  if (abelianized) {
    report.raw(wada::abelianized_action(rep, beta).to_string());
    return kExitPass;
  }
  if (word_text.empty()) {
    throw InputError("wada act needs --word <w> unless --abelianized is given");
  }
  SignedWord w = words::parse_signed_word(word_text, rep.alphabet());
  report.line("image", words::to_string(wada_apply_braid(rep, beta, w), rep.alphabet()));
  return kExitPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Artin-type braid representations, link-group fingerprints, and a Garside-monoid "
               "engine"};
  app.require_subcommand(1);
  // --h is a real option below, so the help flag is long-form only.
  app.set_help_flag("--help", "print help");
  Shared shared;

  // --- garside ---
  CLI::App* garside_cmd = app.add_subcommand("garside", "word reversing and Garside certificates");
  garside_cmd->require_subcommand(1);
  std::string g_file, g_word, g_lhs, g_rhs, g_side = "both";
  bool g_right = false;

  CLI::App* g_reverse = garside_cmd->add_subcommand("reverse", "reverse a signed word");
  g_reverse->set_help_flag("--help", "print help");
  g_reverse->add_option("--file", g_file, "presentation file")->required();
  g_reverse->add_option("--word", g_word, "signed word")->required();
  g_reverse->add_flag("--right", g_right, "right reversing (default: left)");
  shared.attach(g_reverse);

  CLI::App* g_coherence = garside_cmd->add_subcommand("coherence", "check the cube condition");
  g_coherence->set_help_flag("--help", "print help");
  g_coherence->add_option("--file", g_file, "presentation file")->required();
  g_coherence->add_option("--side", g_side, "left, right, or both")
      ->check(CLI::IsMember({"left", "right", "both"}));
  shared.attach(g_coherence);

  CLI::App* g_verify = garside_cmd->add_subcommand("verify", "run the Garside criterion");
  g_verify->set_help_flag("--help", "print help");
  g_verify->add_option("--file", g_file, "presentation file with a delta line")->required();
  shared.attach(g_verify);

  CLI::App* g_nf = garside_cmd->add_subcommand("nf", "greedy or fraction normal form");
  g_nf->set_help_flag("--help", "print help");
  g_nf->add_option("--file", g_file, "presentation file with a delta line")->required();
  g_nf->add_option("--word", g_word, "word (signed words give fraction form)")->required();
  shared.attach(g_nf);

  CLI::App* g_wp = garside_cmd->add_subcommand("wp", "decide equality in the group of fractions");
  g_wp->set_help_flag("--help", "print help");
  g_wp->add_option("--file", g_file, "presentation file with a delta line")->required();
  g_wp->add_option("--lhs", g_lhs, "left word")->required();
  g_wp->add_option("--rhs", g_rhs, "right word")->required();
  shared.attach(g_wp);

  CLI::App* g_ball = garside_cmd->add_subcommand("ball", "enumerate congruence classes");
  g_ball->set_help_flag("--help", "print help");
  g_ball->add_option("--file", g_file, "presentation file")->required();
  shared.attach(g_ball);

  // --- braid ---
  CLI::App* braid_cmd = app.add_subcommand("braid", "Artin type representations");
  braid_cmd->require_subcommand(1);
  std::string b_base = "Z", b_h, b_braid, b_element;
  int b_n = 2;

  CLI::App* b_apply = braid_cmd->add_subcommand("apply", "apply rho(beta) to an element of G");
  b_apply->set_help_flag("--help", "print help");
  b_apply->add_option("--base", b_base, "Z, Z/<k>, or a presentation file");
  b_apply->add_option("--h", b_h, "distinguished element of H (default: the file distinguished line, else a)");
  b_apply->add_option("--n", b_n, "strand count")->required()->check(CLI::PositiveNumber);
  b_apply->add_option("--braid", b_braid, "braid word over s1..s{n-1}")->required();
  b_apply->add_option("--element", b_element, "element of G, e.g. 'a_1 a_2^-1'")->required();
  shared.attach(b_apply);

  CLI::App* b_trivial = braid_cmd->add_subcommand("trivial", "decide triviality in B_n");
  b_trivial->set_help_flag("--help", "print help");
  b_trivial->add_option("--n", b_n, "strand count")->required()->check(CLI::PositiveNumber);
  b_trivial->add_option("--braid", b_braid, "braid word")->required();
  shared.attach(b_trivial);

  // --- linkinv ---
  CLI::App* linkinv_cmd = app.add_subcommand("linkinv", "link-group invariants");
  linkinv_cmd->require_subcommand(1);
  std::string l_base = "Z", l_h, l_braid;
  int l_n = 2, l_cases = 100;

  CLI::App* l_fp = linkinv_cmd->add_subcommand("fingerprint", "abelianization fingerprint");
  l_fp->set_help_flag("--help", "print help");
  l_fp->add_option("--base", l_base, "Z, Z/<k>, or a presentation file");
  l_fp->add_option("--h", l_h, "distinguished element of H (default: the file distinguished line, else a)");
  l_fp->add_option("--braid", l_braid, "braid word")->required();
  l_fp->add_option("--n", l_n, "strand count")->required()->check(CLI::PositiveNumber);
  shared.attach(l_fp);

  CLI::App* l_markov = linkinv_cmd->add_subcommand("markov-test", "Markov-invariance harness");
  l_markov->set_help_flag("--help", "print help");
  l_markov->add_option("--cases", l_cases, "number of random cases")->check(CLI::PositiveNumber);
  shared.attach(l_markov);

  // --- semidirect ---
  CLI::App* semi_cmd = app.add_subcommand("semidirect", "Garside structure on G x| B_n");
  semi_cmd->require_subcommand(1);
  std::string s_base = "Z", s_h = "a", s_out;
  int s_n = 2;

  CLI::App* s_build = semi_cmd->add_subcommand("build", "emit the semidirect presentation");
  s_build->set_help_flag("--help", "print help");
  s_build->add_option("--base", s_base, "Z or a presentation file");
  s_build->add_option("--h", s_h, "Garside element of H as a positive word")->required();
  s_build->add_option("--n", s_n, "strand count")->required()->check(CLI::PositiveNumber);
  s_build->add_option("--out", s_out, "output file (stdout if omitted)");
  shared.attach(s_build);

  CLI::App* s_verify = semi_cmd->add_subcommand("verify", "verify the Garside structure");
  s_verify->set_help_flag("--help", "print help");
  s_verify->add_option("--base", s_base, "Z or a presentation file");
  s_verify->add_option("--h", s_h, "Garside element of H as a positive word")->required();
  s_verify->add_option("--n", s_n, "strand count")->required()->check(CLI::PositiveNumber);
  shared.attach(s_verify);

  // --- wada ---
  CLI::App* wada_cmd = app.add_subcommand("wada", "Wada representation certificates");
  wada_cmd->require_subcommand(1);
  int w_n = 4, w_h = 1, w_type = 2;
  std::string w_braid, w_word;
  bool w_all = false, w_abelianized = false;

  CLI::App* w_check = wada_cmd->add_subcommand("check", "run the classification certificates");
  w_check->set_help_flag("--help", "print help");
  w_check->add_flag("--all", w_all, "run every certificate");
  w_check->add_option("--n", w_n, "rank")->check(CLI::PositiveNumber);
  w_check->add_option("--h", w_h, "type 1 parameter");
  shared.attach(w_check);

  CLI::App* w_act = wada_cmd->add_subcommand("act", "apply a Wada representation");
  w_act->set_help_flag("--help", "print help");
  w_act->add_option("--type", w_type, "1, 2, or 3")->required()->check(CLI::Range(1, 3));
  w_act->add_option("--h", w_h, "type 1 parameter");
  w_act->add_option("--n", w_n, "rank")->check(CLI::PositiveNumber);
  w_act->add_option("--braid", w_braid, "braid word")->required();
  w_act->add_option("--word", w_word, "word in x1..xn");
  w_act->add_flag("--abelianized", w_abelianized, "print the H_1 matrix");
  shared.attach(w_act);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitPass;
    }
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (g_reverse->parsed()) return cmd_garside_reverse(shared, g_file, g_word, g_right, out);
    if (g_coherence->parsed()) return cmd_garside_coherence(shared, g_file, g_side, out);
    if (g_verify->parsed()) return cmd_garside_verify(shared, g_file, out);
    if (g_nf->parsed()) return cmd_garside_nf(shared, g_file, g_word, out);
    if (g_wp->parsed()) return cmd_garside_wp(shared, g_file, g_lhs, g_rhs, out);
    if (g_ball->parsed()) return cmd_garside_ball(shared, g_file, out);
    if (b_apply->parsed())
      return cmd_braid_apply(shared, b_base, b_h, b_n, b_braid, b_element, out);
    if (b_trivial->parsed()) return cmd_braid_trivial(shared, b_n, b_braid, out);
    if (l_fp->parsed()) return cmd_linkinv_fingerprint(shared, l_base, l_h, l_n, l_braid, out);
    if (l_markov->parsed()) return cmd_linkinv_markov(shared, l_cases, out);
    if (s_build->parsed()) return cmd_semidirect_build(shared, s_base, s_h, s_n, s_out, out);
    if (s_verify->parsed()) return cmd_semidirect_verify(shared, s_base, s_h, s_n, out);
    if (w_check->parsed()) return cmd_wada_check(shared, w_n, w_h, out);
    if (w_act->parsed())
      return cmd_wada_act(shared, w_type, w_h, w_n, w_braid, w_word, w_abelianized, out);
    err << "error: no subcommand\n";
    return kExitInput;
  } catch (const DivergenceError& e) {
    err << "diverged: " << e.what() << "\n";
    return kExitDiverged;
  } catch (const ResourceError& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return kExitDiverged;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace garlink::cli
