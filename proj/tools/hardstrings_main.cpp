#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hardstrings/counting.hpp"
#include "hardstrings/gapstrings.hpp"
#include "hardstrings/hardgen.hpp"
#include "hardstrings/instance_io.hpp"
#include "hardstrings/reduction.hpp"
#include "hardstrings/rng.hpp"
#include "hardstrings/solvers.hpp"
#include "hardstrings/verify.hpp"

namespace hs = hardstrings;

namespace {

uint64_t env_seed() {
  const char* raw = std::getenv("HARDSTRINGS_SEED");
  if (!raw || !*raw) return 0;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (!end || *end != '\0')
    throw hs::ParamError(std::string("HARDSTRINGS_SEED is not an integer: '") + raw + "'");
  return value;
}

// Accepts "a/b", a decimal fraction, or an integer; exact rational result.
hs::Rational parse_probability(const std::string& text) {
  const auto bad = [&] {
    return hs::ParamError("cannot parse probability '" + text + "'");
  };
  if (text.empty()) throw bad();
  const size_t slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      const hs::BigInt num(text.substr(0, slash));
      const hs::BigInt den(text.substr(slash + 1));
      if (den == 0) throw bad();
      return hs::Rational(num, den);
    }
    const size_t dot = text.find('.');
    if (dot == std::string::npos) return hs::Rational(hs::BigInt(text));
    const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const hs::BigInt num(digits.empty() ? "0" : digits);
    return hs::Rational(num, hs::ipow(10, text.size() - dot - 1));
  } catch (const std::runtime_error&) {
    throw bad();
  }
}

hs::SymbolString parse_pattern(const std::string& text) {
  if (text.find(' ') != std::string::npos) return hs::SymbolString::decode_tokens(text);
  return hs::SymbolString::decode_compact(text);
}

// Writes to the given path, or to stdout when the path is empty.
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw hs::IoError("cannot open '" + path + "' for writing");
    path_ = path;
  }
  std::ostream& stream() { return path_.empty() ? std::cout : file_; }
  void finish() {
    stream().flush();
    if (!path_.empty() && !file_) throw hs::IoError("write to '" + path_ + "' failed");
  }

 private:
  std::string path_;
  std::ofstream file_;
};

hs::GapStrategy resolve_strategy(const std::string& name, int d) {
  if (name == "exhaustive") return hs::GapStrategy::Exhaustive;
  if (name == "random") return hs::GapStrategy::RandomRetry;
  if (name == "kwise") return hs::GapStrategy::KWise;
  // auto: exhaustive is practical exactly while the candidate space is small.
  return 2 * d <= 24 ? hs::GapStrategy::Exhaustive : hs::GapStrategy::RandomRetry;
}

int run_gen(const std::string& kind, int k, int d, size_t count, uint64_t seed,
            const std::string& select_prob, int prune_radius, const std::string& encoding,
            const std::string& out_path) {
  const hs::BlockParams params(k, d);
  std::vector<hs::BlockString> generated;
  if (kind == "queries") {
    generated = hs::enumerate_queries(params);
  } else if (kind == "base") {
    generated = hs::enumerate_base_strings(params);
  } else {
    const hs::DictionaryConfig cfg{params, parse_probability(select_prob), prune_radius, seed};
    generated = hs::generate_dictionary(cfg);
  }
  if (count > 0 && generated.size() > count)
    generated.erase(generated.begin() + static_cast<ptrdiff_t>(count), generated.end());

  std::vector<hs::SymbolString> strings;
  strings.reserve(generated.size());
  for (const hs::BlockString& b : generated) strings.push_back(b.to_symbols());
  const hs::Instance inst = hs::make_instance(std::move(strings), k, hs::Mode::Hamming);

  OutputTarget out(out_path);
  hs::write_instance(out.stream(), inst, hs::parse_encoding(encoding));
  out.finish();
  return 0;
}

int run_transform(const std::string& in_path, const std::string& out_path) {
  const hs::Instance input = hs::load_instance(in_path);
  if (input.mode != hs::Mode::Hamming)
    throw hs::ParamError("transform expects a Hamming-mode instance file");
  const hs::Instance output = hs::transform_instance(input);
  OutputTarget out(out_path);
  hs::write_instance(out.stream(), output, hs::Encoding::Tokens);
  out.finish();
  return 0;
}

int run_gen_gap(int d, const std::string& mode, const std::string& strategy, uint64_t seed,
                uint64_t budget, const std::string& out_path) {
  hs::GapString gap = [&] {
    if (mode == "edit") return hs::edit_gap(d);
    const hs::GapStrategy st = resolve_strategy(strategy, d);
    const uint64_t effective = budget > 0 ? budget : hs::default_gap_budget(st, d);
    return hs::mismatch_gap(d, st, seed, effective);
  }();
  OutputTarget out(out_path);
  hs::write_gap(out.stream(), gap);
  out.finish();
  return 0;
}

int run_build_text(const std::string& dict_path, const std::string& gap_path, uint64_t seed,
                   const std::string& encoding, const std::string& out_path) {
  const hs::Instance dict = hs::load_instance(dict_path);
  std::optional<hs::GapString> gap;
  if (gap_path != "auto") gap = hs::load_gap(gap_path);
  const hs::TextArtifact art = hs::build_text(dict, std::move(gap), seed);
  const hs::Encoding enc = encoding == "auto"
                               ? (art.text.compactable() ? hs::Encoding::Compact
                                                         : hs::Encoding::Tokens)
                               : hs::parse_encoding(encoding);
  OutputTarget out(out_path);
  hs::write_text_artifact(out.stream(), art, enc);
  out.finish();
  return 0;
}

int run_query(const std::string& text_path, const std::string& pattern, int k,
              const std::string& mode_flag, const std::string& out_path) {
  const hs::TextArtifact art = hs::load_text_artifact(text_path);
  const hs::Mode mode = mode_flag.empty()
                            ? (art.gap.mode == hs::GapMode::Mismatch ? hs::Mode::Hamming
                                                                     : hs::Mode::Edit)
                            : hs::parse_mode(mode_flag);
  const hs::SymbolString q = parse_pattern(pattern);
  OutputTarget out(out_path);
  for (const hs::MatchAnswer& a : hs::dict_lookup_via_text(art, q, k, mode))
    out.stream() << a.dict_index << " " << a.distance << "\n";
  out.finish();
  return 0;
}

int run_verify(const std::string& suite, int max_d, int trials, int k, int d,
               const std::string& forced_gap, uint64_t seed) {
  std::vector<hs::CheckResult> results;
  if (suite == "stoppers") {
    results = hs::verify_stoppers(max_d, trials > 0 ? trials : 200, seed);
  } else if (suite == "gap") {
    std::optional<hs::SymbolString> forced;
    if (!forced_gap.empty()) forced = hs::SymbolString::decode_compact(forced_gap);
    results = hs::verify_gap_suite(d, seed, forced);
  } else if (suite == "counts") {
    results = hs::verify_counts(k, d);
  } else if (suite == "reduction") {
    results = hs::verify_reduction(trials > 0 ? trials : 100, max_d, seed);
  } else {
    results = hs::verify_solvers(trials > 0 ? trials : 200, seed);
  }
  for (const hs::CheckResult& r : results)
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.name
              << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
  return hs::all_pass(results) ? 0 : 1;
}

int run_bench(const std::string& solver, int kmin, int kmax, int d, int n, int queries,
              uint64_t seed, const std::string& out_path) {
  if (kmin < 0 || kmax < kmin) throw hs::ParamError("need 0 <= kmin <= kmax");
  if (kmax >= d) throw hs::ParamError("need kmax < d");
  if (n < 1 || queries < 1) throw hs::ParamError("need n >= 1 and queries >= 1");
  if (d <= 62 && static_cast<uint64_t>(n) > (uint64_t{1} << d))
    throw hs::ParamError("cannot draw " + std::to_string(n) +
                         " distinct binary strings of length " + std::to_string(d));

  // Dictionary: n distinct random binary strings; queries: random binary.
  hs::SplitMix rng(seed);
  const auto draw = [&] {
    hs::SymbolString s;
    uint64_t word = 0;
    for (int i = 0; i < d; ++i) {
      if (i % 64 == 0) word = rng.next();
      s.push_back(hs::Symbol::from_bit((word >> (i % 64)) & 1));
    }
    return s;
  };
  std::vector<hs::SymbolString> strings;
  std::set<std::string> seen;
  while (static_cast<int>(strings.size()) < n) {
    hs::SymbolString s = draw();
    if (seen.insert(s.encode_compact()).second) strings.push_back(std::move(s));
  }
  const hs::Instance dict = hs::make_instance(std::move(strings), kmax, hs::Mode::Hamming);
  const hs::TrieIndex idx = solver == "trie" ? hs::trie_build(dict) : hs::TrieIndex{};
  std::vector<hs::SymbolString> qs;
  for (int i = 0; i < queries; ++i) qs.push_back(draw());

  OutputTarget out(out_path);
  out.stream() << "solver,k,d,n,queries,mean_ns,median_ns,max_ns,nodes,answers\n";
  const int warmup = queries / 10;  // first 10% excluded from the statistics
  for (int k = kmin; k <= kmax; ++k) {
    std::vector<uint64_t> times;
    uint64_t nodes = 0, answers = 0;
    for (int i = 0; i < queries; ++i) {
      uint64_t query_nodes = 0;
      size_t query_answers = 0;
      const auto t0 = std::chrono::steady_clock::now();
      if (solver == "trie") {
        const auto [ans, stats] = hs::trie_lookup(idx, qs[i], k);
        query_nodes = stats.nodes_visited;
        query_answers = ans.size();
      } else {
        query_answers = hs::dict_lookup_brute(dict, qs[i], k, hs::Mode::Hamming).size();
      }
      const auto t1 = std::chrono::steady_clock::now();
      if (i < warmup) continue;
      times.push_back(static_cast<uint64_t>(
          std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()));
      nodes += query_nodes;
      answers += query_answers;
    }
    std::sort(times.begin(), times.end());
    const uint64_t total = std::accumulate(times.begin(), times.end(), uint64_t{0});
    const uint64_t mean = total / times.size();
    const uint64_t median = times.size() % 2 == 1
                                ? times[times.size() / 2]
                                : (times[times.size() / 2 - 1] + times[times.size() / 2]) / 2;
    out.stream() << solver << "," << k << "," << d << "," << n << "," << queries << ","
                 << mean << "," << median << "," << times.back() << "," << nodes << ","
                 << answers << "\n";
  }
  out.finish();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hard-instance construction, verification and benchmarking for "
               "dictionary look-up and text indexing with k errors"};
  app.require_subcommand(1);

  std::string gen_kind, gen_prob = "1", gen_enc = "compact", gen_out;
  int gen_k = 0, gen_d = 0, gen_prune = 0;
  size_t gen_count = 0;
  uint64_t gen_seed = 0;
  bool gen_seed_set = false;
  auto* gen = app.add_subcommand("gen", "generate query/base/dictionary instance files");
  gen->add_option("kind", gen_kind, "what to generate")
      ->required()
      ->check(CLI::IsMember({"queries", "dict", "base"}));
  gen->add_option("--k", gen_k, "number of blocks (even)")->required();
  gen->add_option("--d", gen_d, "string length (multiple of k)")->required();
  gen->add_option("--count", gen_count, "keep only the first COUNT strings");
  gen->add_option("--seed", gen_seed, "dictionary selection seed")
      ->each([&](const std::string&) { gen_seed_set = true; });
  gen->add_option("--select-prob", gen_prob, "selection probability (a/b, decimal or int)");
  gen->add_option("--prune-radius", gen_prune, "prune pairs at Hamming distance <= radius");
  gen->add_option("--encoding", gen_enc, "file encoding")
      ->check(CLI::IsMember({"compact", "tokens"}));
  gen->add_option("--out", gen_out, "output file (stdout when omitted)");

  std::string tr_in, tr_out;
  auto* transform = app.add_subcommand("transform", "apply the stoppers transform to a file");
  transform->add_option("--in", tr_in, "input instance file")->required();
  transform->add_option("--out", tr_out, "output file (stdout when omitted)");

  std::string gap_mode = "mismatch", gap_strategy = "auto", gap_out;
  int gap_d = 0;
  uint64_t gap_seed = 0, gap_budget = 0;
  bool gap_seed_set = false;
  auto* gen_gap = app.add_subcommand("gen-gap", "search for and write a gap string");
  gen_gap->add_option("--d", gap_d, "block length")->required();
  gen_gap->add_option("--mode", gap_mode, "gap kind")
      ->check(CLI::IsMember({"mismatch", "edit"}));
  gen_gap->add_option("--strategy", gap_strategy, "search strategy")
      ->check(CLI::IsMember({"auto", "exhaustive", "random", "kwise"}));
  gen_gap->add_option("--seed", gap_seed, "search seed")
      ->each([&](const std::string&) { gap_seed_set = true; });
  gen_gap->add_option("--budget", gap_budget, "max candidates (0 = default)");
  gen_gap->add_option("--out", gap_out, "output file (stdout when omitted)");

  std::string bt_dict, bt_gap = "auto", bt_enc = "auto", bt_out;
  uint64_t bt_seed = 0;
  bool bt_seed_set = false;
  auto* build_text = app.add_subcommand("build-text", "interleave a dictionary into a text");
  build_text->add_option("--dict", bt_dict, "dictionary instance file")->required();
  build_text->add_option("--gap", bt_gap, "gap file, or 'auto' to search/construct");
  build_text->add_option("--seed", bt_seed, "gap search seed when --gap auto")
      ->each([&](const std::string&) { bt_seed_set = true; });
  build_text->add_option("--encoding", bt_enc, "file encoding")
      ->check(CLI::IsMember({"auto", "compact", "tokens"}));
  build_text->add_option("--out", bt_out, "output file (stdout when omitted)");

  std::string q_text, q_pattern, q_mode, q_out;
  int q_k = 0;
  auto* query = app.add_subcommand("query", "answer a dictionary look-up through a text");
  query->add_option("--text", q_text, "text artifact file")->required();
  query->add_option("--pattern", q_pattern, "query string (compact or tokens)")->required();
  query->add_option("--k", q_k, "distance threshold")->required();
  query->add_option("--mode", q_mode, "hamming|edit (defaults to the artifact's mode)")
      ->check(CLI::IsMember({"hamming", "edit"}));
  query->add_option("--out", q_out, "output file (stdout when omitted)");

  std::string v_suite, v_gap;
  int v_max_d = 8, v_trials = 0, v_k = 2, v_d = 4;
  uint64_t v_seed = 0;
  bool v_seed_set = false;
  auto* verify = app.add_subcommand("verify", "run a property-verification suite");
  verify->add_option("suite", v_suite, "which suite to run")
      ->required()
      ->check(CLI::IsMember({"stoppers", "gap", "counts", "reduction", "solvers"}));
  verify->add_option("--max-d", v_max_d, "largest string width");
  verify->add_option("--trials", v_trials, "randomized trials (0 = suite default)");
  verify->add_option("--k", v_k, "block count for the counts suite");
  verify->add_option("--d", v_d, "string length (gap / counts suites)");
  verify->add_option("--gap", v_gap, "forced gap string for the gap suite");
  verify->add_option("--seed", v_seed, "randomization seed")
      ->each([&](const std::string&) { v_seed_set = true; });

  std::string b_solver = "brute", b_out;
  int b_kmin = 0, b_kmax = 4, b_d = 0, b_n = 0, b_queries = 1000;
  uint64_t b_seed = 0;
  bool b_seed_set = false;
  auto* bench = app.add_subcommand("bench", "benchmark a solver, CSV output");
  bench->add_option("--solver", b_solver, "solver to time")
      ->check(CLI::IsMember({"brute", "trie"}));
  bench->add_option("--kmin", b_kmin, "smallest k");
  bench->add_option("--kmax", b_kmax, "largest k");
  bench->add_option("--d", b_d, "dictionary string length")->required();
  bench->add_option("--n", b_n, "number of dictionary strings")->required();
  bench->add_option("--queries", b_queries, "queries per k");
  bench->add_option("--seed", b_seed, "instance seed")
      ->each([&](const std::string&) { b_seed_set = true; });
  bench->add_option("--out", b_out, "output CSV file (stdout when omitted)");

  try {
    app.parse(argc, argv);
    if (gen->parsed())
      return run_gen(gen_kind, gen_k, gen_d, gen_count,
                     gen_seed_set ? gen_seed : env_seed(), gen_prob, gen_prune, gen_enc,
                     gen_out);
    if (transform->parsed()) return run_transform(tr_in, tr_out);
    if (gen_gap->parsed())
      return run_gen_gap(gap_d, gap_mode, gap_strategy,
                         gap_seed_set ? gap_seed : env_seed(), gap_budget, gap_out);
    if (build_text->parsed())
      return run_build_text(bt_dict, bt_gap, bt_seed_set ? bt_seed : env_seed(), bt_enc,
                            bt_out);
    if (query->parsed()) return run_query(q_text, q_pattern, q_k, q_mode, q_out);
    if (verify->parsed())
      return run_verify(v_suite, v_max_d, v_trials, v_k, v_d, v_gap,
                        v_seed_set ? v_seed : env_seed());
    if (bench->parsed())
      return run_bench(b_solver, b_kmin, b_kmax, b_d, b_n, b_queries,
                       b_seed_set ? b_seed : env_seed(), b_out);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const hs::GapNotFound& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const hs::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const hs::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const hs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
