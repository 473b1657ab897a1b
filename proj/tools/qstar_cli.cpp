// qstar: command-line front end.
//
// Exit codes: 0 ok, 1 verification failure, 2 input error, 3 the two
// enumeration paths disagree.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qstar/algebra.hpp"
#include "qstar/cubes.hpp"
#include "qstar/error.hpp"
#include "qstar/expansion.hpp"
#include "qstar/oracle.hpp"
#include "qstar/tables.hpp"
#include "qstar/words.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;
constexpr int kPathMismatch = 3;

struct SpecArgs {
  std::string alpha, beta, p, q;
  std::uint64_t n = 0;
};

void add_spec_options(CLI::App* cmd, SpecArgs& args, bool monomials_required) {
  cmd->add_option("--alpha", args.alpha, "multi-index, e.g. 1,1")->required();
  cmd->add_option("--beta", args.beta, "multi-index, e.g. 2,1")->required();
  auto* p = cmd->add_option("--p", args.p, "monomials paired with alpha, e.g. \"x^2y,x^3y\"");
  auto* q = cmd->add_option("--q", args.q, "monomials paired with beta");
  if (monomials_required) {
    p->required();
    q->required();
  }
  cmd->add_option("--n", args.n, "number of copies of R^2")->required();
}

qstar::ProblemSpec make_spec(const SpecArgs& args) {
  qstar::ProblemSpec spec;
  spec.alpha = qstar::parse_multi_index(args.alpha);
  spec.beta = qstar::parse_multi_index(args.beta);
  spec.p = qstar::parse_bare_monomials(args.p);
  spec.q = qstar::parse_bare_monomials(args.q);
  spec.n = args.n;
  spec.validate();
  return spec;
}

unsigned default_threads() {
  if (const char* env = std::getenv("QSTAR_THREADS")) {
    try {
      const unsigned long value = std::stoul(env);
      if (value > 0) return static_cast<unsigned>(value);
    } catch (const std::exception&) {
    }
    std::cerr << "qstar: ignoring invalid QSTAR_THREADS='" << env << "'\n";
  }
  return 1;
}

// Collects stdout so --output can redirect it as a unit.
struct Sink {
  std::ostringstream buf;
  std::string path;

  void flush() const {
    if (path.empty()) {
      std::cout << buf.str();
      return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw qstar::InputError("cannot open output file '" + path + "'");
    file << buf.str();
  }
};

int run_star(const SpecArgs& args, const std::string& path, const std::string& format, unsigned threads,
             Sink& out) {
  const qstar::ProblemSpec spec = make_spec(args);
  qstar::StarOptions options;
  options.par.threads = threads;

  qstar::StarExpansion result;
  if (path == "both") {
    options.path = qstar::Path::Enumerate;
    const auto enumerated = qstar::star_product(spec, options);
    options.path = qstar::Path::Lift;
    result = qstar::star_product(spec, options);
    if (enumerated.byOrder != result.byOrder) {
      std::cerr << "qstar: enumerate and lift paths disagree\n  enumerate: " << qstar::render_text(enumerated)
                << "\n  lift:      " << qstar::render_text(result) << "\n";
      return kPathMismatch;
    }
  } else {
    options.path = path == "enumerate" ? qstar::Path::Enumerate : qstar::Path::Lift;
    result = qstar::star_product(spec, options);
  }

  if (format == "json") {
    out.buf << qstar::render_json(result) << "\n";
  } else {
    out.buf << qstar::render_text(result) << "\n";
  }
  return kOk;
}

struct EnumArgs {
  std::string kind;
  SpecArgs spec;
  std::uint64_t m = 0;
  bool countOnly = false;
  std::string layout = "matrix";
  std::optional<std::size_t> levels;
};

int run_enum(const EnumArgs& args, unsigned threads, Sink& out) {
  const auto alpha = qstar::parse_multi_index(args.spec.alpha);
  const auto beta = qstar::parse_multi_index(args.spec.beta);
  const std::uint64_t n = args.spec.n;
  const qstar::Parallelism par{threads};

  if (args.kind == "L") {
    const auto list = qstar::enumerate_l(alpha, beta, n, par);
    if (args.countOnly) {
      out.buf << list.size() << "\n";
    } else {
      for (const auto& gamma : list) out.buf << qstar::to_string(gamma) << "\n";
    }
    return kOk;
  }

  if (args.kind == "A") {
    const auto list = qstar::enumerate_a(alpha, beta, n, args.m, par);
    if (args.countOnly) {
      out.buf << list.size() << "\n";
    } else {
      for (const auto& word : list) out.buf << qstar::to_string(word) << "\n";
    }
    return kOk;
  }

  const auto list = qstar::enumerate_q(alpha, beta, n, args.m, par);
  if (args.countOnly) {
    out.buf << list.size() << "\n";
    return kOk;
  }
  if (args.layout == "by-pair") {
    if (args.spec.p.empty() || args.spec.q.empty()) throw qstar::InputError("--layout by-pair needs --p and --q");
    const auto p = qstar::parse_bare_monomials(args.spec.p);
    const auto q = qstar::parse_bare_monomials(args.spec.q);
    if (p.size() != alpha.size() || q.size() != beta.size()) {
      throw qstar::InputError("--p/--q lengths must match --alpha/--beta");
    }
    const qstar::BTable btable(p, q);
    for (const auto& gamma : list) {
      // Matrices with a unit above the depth of its pair contribute nothing
      // and have no by-pair vector.
      if (qstar::gamma_to_eterm(gamma, btable)) out.buf << qstar::format_vector(qstar::to_vector_by_pair(gamma, btable)) << "\n";
    }
    return kOk;
  }
  if (args.layout == "by-level") {
    const std::size_t levels = args.levels.value_or(std::max<std::uint64_t>(args.m, 1) + 1);
    for (const auto& gamma : list) out.buf << qstar::format_vector(qstar::to_vector_by_level(gamma, levels)) << "\n";
    return kOk;
  }
  for (const auto& gamma : list) out.buf << qstar::to_string(gamma) << "\n";
  return kOk;
}

int run_word(const std::string& action, const std::string& input, Sink& out) {
  if (action == "encode") {
    const auto gamma = input.empty() ? qstar::CubicalMatrix() : qstar::parse_cubical_matrix(input);
    out.buf << qstar::to_string(qstar::encode(gamma)) << "\n";
    return kOk;
  }
  const qstar::ThreeWord word = qstar::parse_word(input);
  if (action == "decode") {
    out.buf << qstar::to_string(qstar::decode(word)) << "\n";
    return kOk;
  }
  if (auto violation = qstar::validate_word(word)) {
    throw qstar::InputError("invalid 3-word: condition " + violation->condition + " fails at column " +
                            std::to_string(violation->column) + ": " + violation->detail);
  }
  const auto stats = qstar::word_stats(word);
  out.buf << "N=" << stats.size << " s=" << stats.support << " m=" << stats.weight
          << " alpha=" << qstar::to_string(stats.alpha) << " beta=" << qstar::to_string(stats.beta) << "\n";
  return kOk;
}

int run_verify(const SpecArgs& args, bool dropScalars, unsigned threads, Sink& out) {
  const qstar::ProblemSpec spec = make_spec(args);
  qstar::VerifyOptions options;
  options.dropScalars = dropScalars;
  options.par.threads = threads;
  const auto report = qstar::verify(spec, options);
  auto line = [&](const char* name, const qstar::CheckOutcome& check) {
    out.buf << name << ": " << (check.passed ? "PASS" : "FAIL") << "\n";
    if (!check.passed) out.buf << check.diff;
  };
  line("oracle identity", report.oracleIdentity);
  line("classical limit", report.classicalLimit);
  line("path equivalence", report.pathEquivalence);
  return report.passed() ? kOk : kVerifyFailed;
}

int run_b(const std::string& p_text, const std::string& q_text, Sink& out) {
  const auto p = qstar::parse_bare_monomials(p_text);
  const auto q = qstar::parse_bare_monomials(q_text);
  const qstar::BTable btable(p, q);
  for (std::size_t pos = 0; pos < btable.flat_length(); ++pos) {
    out.buf << qstar::to_string(btable.flat_entry(pos)) << "\n";
  }
  return kOk;
}

int run_pair(const std::string& p_text, const std::string& q_text, Sink& out) {
  const auto p = qstar::parse_bare_monomials(p_text);
  const auto q = qstar::parse_bare_monomials(q_text);
  if (p.size() != 1 || q.size() != 1) throw qstar::InputError("pair takes a single monomial for --p and --q");
  std::string line;
  for (const auto& [k, term] : qstar::star_pair(p[0], q[0])) {
    if (!line.empty()) line += " + ";
    line += qstar::to_string(term);
    if (k == 1) line += " h";
    if (k > 1) line += " h^" + std::to_string(k);
  }
  out.buf << (line.empty() ? "0" : line) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Star products of elementary multisymmetric functions"};
  app.require_subcommand(1);
  // let --threads and --output follow the subcommand
  app.fallthrough();

  Sink sink;
  unsigned threads = default_threads();
  app.add_option("--output", sink.path, "write results to FILE instead of stdout");
  app.add_option("--threads", threads, "worker threads (default: QSTAR_THREADS or 1)")
      ->check(CLI::PositiveNumber);

  SpecArgs starArgs;
  std::string path = "lift";
  std::string format = "text";
  auto* star = app.add_subcommand("star", "expand e_alpha(p) * e_beta(q)");
  add_spec_options(star, starArgs, true);
  star->add_option("--path", path, "enumeration path")->check(CLI::IsMember({"enumerate", "lift", "both"}));
  star->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

  EnumArgs enumArgs;
  auto* enumerate = app.add_subcommand("enum", "list L, Q or A");
  enumerate->add_option("kind", enumArgs.kind, "L, Q or A")->required()->check(CLI::IsMember({"L", "Q", "A"}));
  add_spec_options(enumerate, enumArgs.spec, false);
  enumerate->add_option("--m", enumArgs.m, "order (Q and A)");
  enumerate->add_flag("--count-only", enumArgs.countOnly, "print only the number of elements");
  enumerate->add_option("--layout", enumArgs.layout, "Q output: matrix, by-level or by-pair")
      ->check(CLI::IsMember({"matrix", "by-level", "by-pair"}));
  enumerate->add_option("--levels", enumArgs.levels, "levels in by-level vectors (default max(m,1)+1)");

  std::string wordAction;
  std::string wordInput;
  auto* word = app.add_subcommand("word", "3-word codec");
  word->add_option("action", wordAction, "encode, decode or stats")
      ->required()
      ->check(CLI::IsMember({"encode", "decode", "stats"}));
  word->add_option("input", wordInput, "cubical matrix (encode) or 3-word (decode, stats)");

  SpecArgs verifyArgs;
  bool dropScalars = false;
  auto* verify = app.add_subcommand("verify", "check the expansion against the explicit Moyal product");
  add_spec_options(verify, verifyArgs, true);
  verify->add_flag("--inject-drop-scalar", dropScalars, "test hook: forget term scalars before checking");

  std::string bP, bQ;
  auto* b = app.add_subcommand("b", "list B(p,q)");
  b->add_option("--p", bP)->required();
  b->add_option("--q", bQ)->required();

  std::string pairP, pairQ;
  auto* pair = app.add_subcommand("pair", "Moyal product of two monomials");
  pair->add_option("--p", pairP)->required();
  pair->add_option("--q", pairQ)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    int code = kOk;
    if (*star) code = run_star(starArgs, path, format, threads, sink);
    if (*enumerate) code = run_enum(enumArgs, threads, sink);
    if (*word) code = run_word(wordAction, wordInput, sink);
    if (*verify) code = run_verify(verifyArgs, dropScalars, threads, sink);
    if (*b) code = run_b(bP, bQ, sink);
    if (*pair) code = run_pair(pairP, pairQ, sink);
    sink.flush();
    return code;
  } catch (const qstar::InputError& e) {
    std::cerr << "qstar: " << e.what() << "\n";
    return kInputError;
  }
}
