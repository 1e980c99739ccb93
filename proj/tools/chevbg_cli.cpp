// chevbg: elementary-group arithmetic and bounded-generation witnesses.
//
// Exit status: 0 success / verified, 1 verification failure, 2 input error.

#include <algorithm>
#include <fstream>
#include <limits>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chevbg/chevalley.hpp"
#include "chevbg/cocycle.hpp"
#include "chevbg/errors.hpp"
#include "chevbg/factorization.hpp"
#include "chevbg/random.hpp"
#include "chevbg/symplectic.hpp"
#include "chevbg/witness_io.hpp"
#include "chevbg/word_io.hpp"

namespace {

using chevbg::Ring;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;

struct JobConfig {
  std::size_t n = 3;
  std::size_t vars = 1;
  std::uint64_t modulus = 0;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::string out;
};

Ring make_ring(const JobConfig& cfg) {
  return Ring{cfg.modulus == 0 ? chevbg::CoeffSpec::integers()
                               : chevbg::CoeffSpec::modular(cfg.modulus),
              cfg.vars};
}

ordered_json ring_json(const Ring& ring) {
  return {{"k", ring.vars}, {"coeff", ring.coeff.to_string()}};
}

ordered_json matrix_rows(const chevbg::SqMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json header(const char* command) {
  ordered_json doc;
  doc["schema"] = chevbg::kSchemaVersion;
  doc["command"] = command;
  return doc;
}

void emit(const JobConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw chevbg::Error("cannot open output file '" + cfg.out + "'");
  f << text;
}

void emit(const JobConfig& cfg, const ordered_json& doc) { emit(cfg, doc.dump(2) + "\n"); }

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw chevbg::Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int cmd_eval(const JobConfig& cfg, const std::string& text) {
  const Ring ring = make_ring(cfg);
  ordered_json doc = header("eval");
  chevbg::SqMatrix m = chevbg::SqMatrix::identity(2, ring);
  if (chevbg::mentions_symplectic(text)) {
    const auto w = chevbg::parse_sp_word(text, cfg.n, ring);
    m = chevbg::sp_word_eval(w);
    doc["type"] = "C";
    doc["word"] = chevbg::format_word(w);
  } else {
    const auto w = chevbg::parse_word(text, cfg.n, ring);
    m = chevbg::word_eval(w);
    doc["type"] = "A";
    doc["word"] = chevbg::format_word(w);
  }
  doc["dimension"] = m.dim();
  doc["ring"] = ring_json(ring);
  doc["matrix"] = matrix_rows(m);
  doc["det"] = chevbg::mat_det(m).to_string();
  emit(cfg, doc);
  return kExitOk;
}

int cmd_conjugate_factor(const JobConfig& cfg, const std::string& gamma_text, std::size_t i,
                         std::size_t j, const std::string& poly_text) {
  const Ring ring = make_ring(cfg);
  const auto gamma = chevbg::parse_word(gamma_text, cfg.n, ring);
  const auto a = chevbg::parse_poly(poly_text, ring);
  const auto wit = chevbg::conj_decompose(gamma, i, j, a);
  emit(cfg, chevbg::witness_to_json(wit));
  return wit.verified == chevbg::Verified::Yes ? kExitOk : kExitFailed;
}

int cmd_verify(const JobConfig& cfg, const std::string& path) {
  const auto wit = chevbg::witness_from_json(read_file(path));
  const auto result = chevbg::verify_witness(wit);
  ordered_json doc = header("verify");
  doc["file"] = path;
  doc["length"] = wit.word.size();
  doc["claimed_bound"] = wit.claimed_bound;
  doc["stored_verified"] = chevbg::to_string(wit.verified);
  doc["verified"] = chevbg::to_string(result);
  emit(cfg, doc);
  return result == chevbg::Verified::Yes ? kExitOk : kExitFailed;
}

struct Tally {
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  void record(bool ok) {
    ++trials;
    ok ? ++passed : ++failed;
  }
  ordered_json json() const { return {{"trials", trials}, {"passed", passed}, {"failed", failed}}; }
};

int cmd_relations_fuzz(const JobConfig& cfg) {
  if (cfg.trials < 1) throw chevbg::Error("--trials must be at least 1");
  if (cfg.n < 3) throw chevbg::Error("relations-fuzz needs --n >= 3");
  const Ring ring = make_ring(cfg);
  const chevbg::PolyShape shape{3, 2, 5};
  chevbg::Rng rng(cfg.seed);
  const std::size_t n = cfg.n;

  Tally commutator, commuting, inverse;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    std::size_t idx[3];
    idx[0] = static_cast<std::size_t>(rng.uniform(1, n));
    do idx[1] = static_cast<std::size_t>(rng.uniform(1, n)); while (idx[1] == idx[0]);
    do idx[2] = static_cast<std::size_t>(rng.uniform(1, n)); while (idx[2] == idx[0] || idx[2] == idx[1]);
    const chevbg::ElemGen g1(idx[0], idx[1], chevbg::random_poly(rng, ring, shape));
    const chevbg::ElemGen g2(idx[1], idx[2], chevbg::random_poly(rng, ring, shape));
    const auto expected = chevbg::elem_matrix(chevbg::ElemGen(idx[0], idx[2], g1.param * g2.param), n);
    const auto closed = chevbg::chevalley_commutator(n, g1, g2);
    const auto* w = std::get_if<chevbg::Word>(&closed);
    commutator.record(chevbg::word_eval(chevbg::commutator_word(n, g1, g2)) == expected &&
                      w != nullptr && chevbg::word_eval(*w) == expected);

    if (n >= 4) {
      std::vector<std::size_t> perm;
      while (perm.size() < 4) {
        auto p = static_cast<std::size_t>(rng.uniform(1, n));
        if (std::find(perm.begin(), perm.end(), p) == perm.end()) perm.push_back(p);
      }
      const chevbg::ElemGen h1(perm[0], perm[1], chevbg::random_poly(rng, ring, shape));
      const chevbg::ElemGen h2(perm[2], perm[3], chevbg::random_poly(rng, ring, shape));
      commuting.record(chevbg::word_eval(chevbg::commutator_word(n, h1, h2)).is_identity());
    }

    const auto word = chevbg::random_word(rng, n, ring, 12, shape);
    inverse.record((chevbg::word_eval(chevbg::word_inverse(word)) * chevbg::word_eval(word)).is_identity());
  }

  const auto sp = chevbg::sp_relations_fuzz(n, ring, cfg.seed, cfg.trials);

  ordered_json doc = header("relations-fuzz");
  doc["seed"] = cfg.seed;
  doc["trials"] = cfg.trials;
  doc["dimension"] = n;
  doc["ring"] = ring_json(ring);
  doc["type_a"] = {{"commutator", commutator.json()},
                   {"disjoint_commute", commuting.json()},
                   {"inverse", inverse.json()}};
  doc["type_c"] = {{"half_dimension", n},
                   {"trials", sp.trials},
                   {"passed", sp.passed},
                   {"failed", sp.failed},
                   {"form_failures", sp.form_failures},
                   {"det_failures", sp.det_failures},
                   {"inverse_failures", sp.inverse_failures},
                   {"additivity_failures", sp.additivity_failures}};
  emit(cfg, doc);
  const bool ok = commutator.failed == 0 && commuting.failed == 0 && inverse.failed == 0 && sp.failed == 0;
  return ok ? kExitOk : kExitFailed;
}

Ring cocycle_ring(const JobConfig& cfg) {
  if (cfg.modulus != 0 || cfg.vars != 1) {
    throw chevbg::Unsupported("cocycle commands work over Z[x1] (use --vars 1 without --mod)");
  }
  return make_ring(cfg);
}

ordered_json int_rows(const chevbg::IntMatrix& m) { return m.rows(); }

int cmd_cocycle(const JobConfig& cfg, const std::string& text) {
  const Ring ring = cocycle_ring(cfg);
  const auto g = chevbg::word_eval(chevbg::parse_word(text, cfg.n, ring));
  ordered_json doc = header("cocycle");
  doc["dimension"] = cfg.n;
  doc["matrix"] = matrix_rows(g);
  doc["pi"] = int_rows(chevbg::reduce_at_zero_int(g));
  doc["cocycle"] = int_rows(chevbg::derivation_cocycle(g));
  doc["in_kernel"] = chevbg::in_congruence_kernel(g);
  emit(cfg, doc);
  return kExitOk;
}

int cmd_subring(const JobConfig& cfg, const std::string& text) {
  const Ring ring = make_ring(cfg);
  const auto w = chevbg::parse_word(text, cfg.n, ring);
  ordered_json gens = ordered_json::array();
  for (const auto& p : chevbg::minimal_subring_generators(w)) gens.push_back(p.to_string());
  ordered_json doc = header("subring");
  doc["ring"] = ring_json(ring);
  doc["generators"] = std::move(gens);
  emit(cfg, doc);
  return kExitOk;
}

// One sample per line: "WORD_G | WORD_H"; blank lines and '#' comments skipped.
int cmd_defect(const JobConfig& cfg, const std::string& path) {
  const Ring ring = cocycle_ring(cfg);
  std::istringstream in(read_file(path));
  std::vector<chevbg::SamplePair> samples;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto bar = line.find('|');
    if (bar == std::string::npos) throw chevbg::ParseError("expected 'WORD | WORD'", lineno, first + 1);
    auto g = chevbg::parse_word(std::string_view(line).substr(0, bar), cfg.n, ring, lineno);
    std::string rhs(bar + 1, ' ');
    rhs += line.substr(bar + 1);
    auto h = chevbg::parse_word(rhs, cfg.n, ring, lineno);
    samples.emplace_back(chevbg::word_eval(g), chevbg::word_eval(h));
  }
  const auto defect = chevbg::cocycle_defect(chevbg::derivation_cocycle, samples);
  ordered_json doc = header("defect");
  doc["file"] = path;
  doc["samples"] = samples.size();
  doc["defect"] = defect.get_str();
  emit(cfg, doc);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elementary Chevalley group arithmetic and bounded-generation witnesses"};
  app.require_subcommand(1);
  JobConfig cfg;
  app.add_option("--n", cfg.n, "Matrix dimension (half-dimension for symplectic words)")
      ->check(CLI::Range(2, 12));
  app.add_option("--vars", cfg.vars, "Number of ring variables x1..xk");
  app.add_option("--mod", cfg.modulus, "Coefficient modulus m >= 2 (default: integers)")
      ->check(CLI::Range(std::uint64_t{2}, std::numeric_limits<std::uint64_t>::max()));
  app.add_option("--seed", cfg.seed, "Seed for every random draw");
  app.add_option("--trials", cfg.trials, "Number of fuzz trials")->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.out, "Write the report here instead of stdout");
  app.fallthrough();

  std::string word, gamma, poly, path;
  std::size_t row = 0, col = 0;
  int status = kExitOk;

  auto* eval = app.add_subcommand("eval", "Print the matrix of a word");
  eval->add_option("WORD", word)->required();
  eval->callback([&] { status = cmd_eval(cfg, word); });

  auto* conj = app.add_subcommand("conjugate-factor", "Factor GAMMA e_ij(POLY) GAMMA^-1 into a witness");
  conj->add_option("GAMMA", gamma)->required();
  conj->add_option("i", row)->required();
  conj->add_option("j", col)->required();
  conj->add_option("POLY", poly)->required();
  conj->callback([&] { status = cmd_conjugate_factor(cfg, gamma, row, col, poly); });

  auto* verify = app.add_subcommand("verify", "Re-check a witness file");
  verify->add_option("WITNESS-FILE", path)->required();
  verify->callback([&] { status = cmd_verify(cfg, path); });

  auto* fuzz = app.add_subcommand("relations-fuzz", "Seeded type A and C relation suites");
  fuzz->callback([&] { status = cmd_relations_fuzz(cfg); });

  auto* cocycle = app.add_subcommand("cocycle", "Reduction at x=0, derivation cocycle, kernel membership");
  cocycle->add_option("WORD", word)->required();
  cocycle->callback([&] { status = cmd_cocycle(cfg, word); });

  auto* subring = app.add_subcommand("subring", "Ring elements generating the subring of a word");
  subring->add_option("WORD", word)->required();
  subring->callback([&] { status = cmd_subring(cfg, word); });

  auto* defect = app.add_subcommand("defect", "Defect of the derivation cocycle on sample pairs");
  defect->add_option("SAMPLES-FILE", path)->required();
  defect->callback([&] { status = cmd_defect(cfg, path); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  } catch (const chevbg::ConstructionFailure& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  } catch (const chevbg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return status;
}
