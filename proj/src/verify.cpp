#include "hardstrings/verify.hpp"

#include <algorithm>
#include <map>

#include "hardstrings/counting.hpp"
#include "hardstrings/distance.hpp"
#include "hardstrings/gapstrings.hpp"
#include "hardstrings/hardgen.hpp"
#include "hardstrings/instance.hpp"
#include "hardstrings/reduction.hpp"
#include "hardstrings/rng.hpp"
#include "hardstrings/solvers.hpp"
#include "hardstrings/stoppers.hpp"

namespace hardstrings {

namespace {

SymbolString random_bits(SplitMix& rng, int len) {
  SymbolString s;
  uint64_t word = 0;
  for (int i = 0; i < len; ++i) {
    if (i % 64 == 0) word = rng.next();
    s.push_back(Symbol::from_bit((word >> (i % 64)) & 1));
  }
  return s;
}

SymbolString bits_of(uint64_t mask, int len) {
  SymbolString s;
  for (int i = len - 1; i >= 0; --i) s.push_back(Symbol::from_bit((mask >> i) & 1));
  return s;
}

std::vector<std::pair<int, int>> answer_pairs(const std::vector<MatchAnswer>& answers) {
  std::vector<std::pair<int, int>> out;
  for (const MatchAnswer& a : answers) out.emplace_back(a.dict_index, a.distance);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool all_pass(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

std::vector<CheckResult> verify_stoppers(int max_d, int trials, uint64_t seed) {
  if (max_d < 1) throw ParamError("max-d must be >= 1");
  if (trials < 0) throw ParamError("trials must be >= 0");
  std::vector<CheckResult> out;

  {
    CheckResult r{"transform-length", true, ""};
    int widths = 0;
    for (int d = 1; d <= max_d; d *= 2, ++widths) {
      const SymbolString x = bits_of(0, d);
      const size_t want = transform_length(static_cast<size_t>(d));
      const size_t got = stoppers_transform(x).size();
      if (got != want) {
        r.pass = false;
        r.detail = "d=" + std::to_string(d) + ": |transform| = " + std::to_string(got) +
                   ", formula gives " + std::to_string(want);
        break;
      }
    }
    if (r.pass) r.detail = std::to_string(widths) + " widths checked";
    out.push_back(std::move(r));
  }

  {
    CheckResult r{"edit-equals-hamming-exhaustive", true, ""};
    size_t pairs = 0;
    for (int d = 1; d <= std::min(max_d, 4) && r.pass; d *= 2) {
      std::vector<SymbolString> tau(size_t{1} << d);
      for (uint64_t m = 0; m < (uint64_t{1} << d); ++m)
        tau[m] = stoppers_transform(bits_of(m, d));
      for (uint64_t a = 0; a < (uint64_t{1} << d) && r.pass; ++a) {
        for (uint64_t b = 0; b < (uint64_t{1} << d); ++b, ++pairs) {
          const size_t ham = hamming(bits_of(a, d), bits_of(b, d));
          const size_t ed = edit_distance(tau[a], tau[b]);
          if (ed != ham) {
            r.pass = false;
            r.detail = "d=" + std::to_string(d) + ", X=" + bits_of(a, d).display() +
                       ", Y=" + bits_of(b, d).display() + ": ED=" + std::to_string(ed) +
                       " != HAM=" + std::to_string(ham);
            break;
          }
        }
      }
    }
    if (r.pass) r.detail = std::to_string(pairs) + " pairs checked";
    out.push_back(std::move(r));
  }

  {
    CheckResult r{"edit-equals-hamming-random", true, ""};
    int d = 1;
    while (2 * d <= max_d) d *= 2;
    SplitMix rng(seed);
    for (int t = 0; t < trials && r.pass; ++t) {
      const SymbolString x = random_bits(rng, d);
      const SymbolString y = random_bits(rng, d);
      const size_t ham = hamming(x, y);
      const size_t ed = edit_distance(stoppers_transform(x), stoppers_transform(y));
      if (ed != ham) {
        r.pass = false;
        r.detail = "d=" + std::to_string(d) + ", X=" + x.display() + ", Y=" + y.display() +
                   ": ED=" + std::to_string(ed) + " != HAM=" + std::to_string(ham);
      }
    }
    if (r.pass)
      r.detail = std::to_string(trials) + " random pairs at d=" + std::to_string(d);
    out.push_back(std::move(r));
  }

  return out;
}

std::vector<CheckResult> verify_gap_suite(int d, uint64_t seed,
                                          const std::optional<SymbolString>& forced_gap) {
  std::vector<CheckResult> out;
  if (forced_gap) {
    CheckResult r{"gap-verifies", true, ""};
    if (auto bad = gap_counterexample(*forced_gap, d)) {
      const SymbolString prefix = forced_gap->substr(0, static_cast<size_t>(*bad));
      const SymbolString suffix =
          forced_gap->substr(forced_gap->size() - static_cast<size_t>(*bad),
                             static_cast<size_t>(*bad));
      r.pass = false;
      r.detail = "counterexample i=" + std::to_string(*bad) + ": hamming(" +
                 prefix.display() + ", " + suffix.display() + ") = " +
                 std::to_string(hamming(prefix, suffix)) + " < " +
                 std::to_string(d / 2 + 1);
    } else {
      r.detail = "supplied gap " + forced_gap->display() + " passes";
    }
    out.push_back(std::move(r));
    return out;
  }

  const GapStrategy strategy =
      2 * d <= 24 ? GapStrategy::Exhaustive : GapStrategy::RandomRetry;
  CheckResult search{"gap-search", true, ""};
  std::optional<GapString> found;
  try {
    found = mismatch_gap(d, strategy, seed, default_gap_budget(strategy, d));
    search.detail = "found " + found->symbols.display();
  } catch (const GapNotFound& e) {
    search.pass = false;
    search.detail = e.what();
  }
  out.push_back(std::move(search));
  if (found) {
    CheckResult r{"gap-verifies", true, "search result passes verify_gap"};
    if (auto bad = gap_counterexample(found->symbols, d)) {
      r.pass = false;
      r.detail = "counterexample i=" + std::to_string(*bad);
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckResult> verify_counts(int k, int d) {
  const BlockParams p(k, d);
  std::vector<CheckResult> out;

  {
    CheckResult r{"query-generation-overcount", true, ""};
    const BigInt sequence = count_queries_paper(p);
    const BigInt distinct = count_queries_distinct(p);
    const BigInt factor = ipow(2, static_cast<uint64_t>(k / 2));
    if (sequence == factor * distinct) {
      r.detail = "generation-sequence count " + sequence.str() + " = 2^" +
                 std::to_string(k / 2) + " x " + distinct.str() + " distinct strings";
    } else {
      r.pass = false;
      r.detail = "generation-sequence count " + sequence.str() + " vs distinct " +
                 distinct.str() + ": ratio is not 2^(k/2)";
    }
    out.push_back(std::move(r));
  }

  const std::vector<BlockString> queries = enumerate_queries(p);
  const std::vector<BlockString> bases = enumerate_base_strings(p);

  {
    CheckResult r{"query-enumeration-count", true, ""};
    if (BigInt(queries.size()) == count_queries_distinct(p)) {
      r.detail = std::to_string(queries.size()) + " distinct queries";
    } else {
      r.pass = false;
      r.detail = "enumerated " + std::to_string(queries.size()) + ", formula gives " +
                 count_queries_distinct(p).str();
    }
    out.push_back(std::move(r));
  }

  {
    CheckResult r{"ball-closed-form-vs-brute", true, ""};
    const int max_delta = 3 * k + 1;
    for (const BlockString& q : queries) {
      std::map<int, BigInt> histogram;
      for (const BlockString& s : bases) ++histogram[static_cast<int>(hamming(q, s))];
      for (int delta = 0; delta <= max_delta && r.pass; ++delta) {
        const BigInt closed = count_within_ball_closed_form(q, delta);
        const BigInt brute = histogram.count(delta) ? histogram[delta] : BigInt(0);
        if (closed != brute) {
          r.pass = false;
          r.detail = "P=" + q.bit_string() + ", delta=" + std::to_string(delta) +
                     ": closed form " + closed.str() + " != enumeration " + brute.str();
        }
      }
      if (!r.pass) break;
    }
    if (r.pass)
      r.detail = std::to_string(queries.size()) + " queries x distances 0.." +
                 std::to_string(max_delta);
    out.push_back(std::move(r));
  }

  return out;
}

std::vector<CheckResult> verify_reduction(int trials, int max_d, uint64_t seed) {
  if (trials < 1) throw ParamError("trials must be >= 1");
  if (max_d < 2) throw ParamError("max-d must be >= 2");
  CheckResult ham_rt{"hamming-round-trip", true, ""};
  CheckResult ham_off{"offset-exclusion", true, ""};
  CheckResult edit_rt{"edit-round-trip", true, ""};
  CheckResult edit_off{"edit-offsets", true, ""};
  CheckResult corr{"transform-round-trip", true, ""};

  std::vector<int> widths;
  std::map<int, GapString> gaps;  // searched once per width, reused across trials
  for (int d = 2; d <= max_d; d *= 2) {
    widths.push_back(d);
    const GapStrategy strategy =
        2 * d <= 24 ? GapStrategy::Exhaustive : GapStrategy::RandomRetry;
    gaps.emplace(d, mismatch_gap(d, strategy, seed, default_gap_budget(strategy, d)));
  }
  SplitMix rng(seed);

  for (int t = 0; t < trials; ++t) {
    const int d = widths[rng.next() % widths.size()];
    const int count = 1 + static_cast<int>(rng.next() % 8);
    const int k = static_cast<int>(rng.next() % d);
    std::vector<SymbolString> strings;
    for (int i = 0; i < count; ++i) strings.push_back(random_bits(rng, d));
    const SymbolString q = random_bits(rng, d);
    const std::string tag = "trial " + std::to_string(t) + " (d=" + std::to_string(d) +
                            ", k=" + std::to_string(k) + ", n=" + std::to_string(count) + ")";

    const Instance ham_dict = make_instance(strings, k, Mode::Hamming);
    const TextArtifact ham_art = build_text(ham_dict, gaps.at(d));
    if (ham_rt.pass &&
        answer_pairs(dict_lookup_via_text(ham_art, q, k, Mode::Hamming)) !=
            answer_pairs(dict_lookup_brute(ham_dict, q, k, Mode::Hamming))) {
      ham_rt.pass = false;
      ham_rt.detail = tag;
    }
    if (ham_off.pass && !verify_offset_exclusion(ham_art, q, k)) {
      ham_off.pass = false;
      ham_off.detail = tag;
    }

    const Instance edit_dict = make_instance(strings, k, Mode::Edit);
    const TextArtifact edit_art = build_text(edit_dict);
    if (edit_rt.pass &&
        answer_pairs(dict_lookup_via_text(edit_art, q, k, Mode::Edit)) !=
            answer_pairs(dict_lookup_brute(edit_dict, q, k, Mode::Edit))) {
      edit_rt.pass = false;
      edit_rt.detail = tag;
    }
    if (edit_off.pass && !verify_edit_offsets(edit_art, q, k)) {
      edit_off.pass = false;
      edit_off.detail = tag;
    }

    if (corr.pass) {
      const Instance tau_dict = transform_instance(ham_dict);
      const SymbolString tau_q = stoppers_transform(pad_to_power_of_two(q));
      std::vector<std::pair<int, int>> via_tau;
      for (const MatchAnswer& a :
           dict_lookup_brute(tau_dict, tau_q, k, Mode::Edit))
        via_tau.emplace_back(a.dict_index, a.distance);
      std::sort(via_tau.begin(), via_tau.end());
      if (via_tau != answer_pairs(dict_lookup_brute(ham_dict, q, k, Mode::Hamming))) {
        corr.pass = false;
        corr.detail = tag;
      }
    }
  }

  const std::string summary = std::to_string(trials) + " randomized trials";
  for (CheckResult* r : {&ham_rt, &ham_off, &edit_rt, &edit_off, &corr})
    if (r->pass) r->detail = summary;
  return {ham_rt, ham_off, edit_rt, edit_off, corr};
}

std::vector<CheckResult> verify_solvers(int trials, uint64_t seed) {
  if (trials < 1) throw ParamError("trials must be >= 1");
  CheckResult trie{"trie-vs-brute", true, ""};
  CheckResult trie_mono{"trie-nodes-monotone", true, ""};
  CheckResult edit_oracle{"edit-search-vs-substring-oracle", true, ""};
  CheckResult ham_recount{"hamming-search-recount", true, ""};
  SplitMix rng(seed);

  for (int t = 0; t < trials; ++t) {
    const int d = 2 + static_cast<int>(rng.next() % 7);
    const int count = 1 + static_cast<int>(rng.next() % 16);
    std::vector<SymbolString> strings;
    for (int i = 0; i < count; ++i) strings.push_back(random_bits(rng, d));
    const Instance dict = make_instance(strings, d - 1, Mode::Hamming);
    const TrieIndex idx = trie_build(dict);
    const SymbolString q = random_bits(rng, d);
    const std::string tag = "trial " + std::to_string(t);

    uint64_t prev_nodes = 0;
    for (int k = 0; k < d; ++k) {
      const auto [answers, stats] = trie_lookup(idx, q, k);
      if (trie.pass &&
          answer_pairs(answers) != answer_pairs(dict_lookup_brute(dict, q, k, Mode::Hamming))) {
        trie.pass = false;
        trie.detail = tag + ", k=" + std::to_string(k);
      }
      if (trie_mono.pass && stats.nodes_visited < prev_nodes) {
        trie_mono.pass = false;
        trie_mono.detail = tag + ", k=" + std::to_string(k);
      }
      prev_nodes = stats.nodes_visited;
    }

    const int tn = 1 + static_cast<int>(rng.next() % 10);
    const int pm = 1 + static_cast<int>(rng.next() % 6);
    SymbolString text, pat;
    for (int i = 0; i < tn; ++i) text.push_back(Symbol::letter(static_cast<int>(rng.next() % 3)));
    for (int i = 0; i < pm; ++i) pat.push_back(Symbol::letter(static_cast<int>(rng.next() % 3)));
    const int k_edit = static_cast<int>(rng.next() % (pm + 1));
    std::vector<std::pair<int, int>> expected;
    for (int end = 1; end <= tn; ++end) {
      size_t best = edit_distance(SymbolString(), pat);
      for (int s = 1; s <= end; ++s)
        best = std::min(best, edit_distance(text.substr(static_cast<size_t>(s) - 1,
                                                        static_cast<size_t>(end - s) + 1),
                                            pat));
      if (best <= static_cast<size_t>(k_edit))
        expected.emplace_back(end, static_cast<int>(best));
    }
    std::vector<std::pair<int, int>> got;
    for (const EndHit& h : text_search_edit(text, pat, k_edit))
      got.emplace_back(h.end, h.distance);
    if (edit_oracle.pass && got != expected) {
      edit_oracle.pass = false;
      edit_oracle.detail = tag + ": t=" + text.display() + ", p=" + pat.display() +
                           ", k=" + std::to_string(k_edit);
    }

    if (ham_recount.pass && pm <= tn) {
      const int k_ham = static_cast<int>(rng.next() % (pm + 1));
      std::vector<std::pair<int, int>> naive;
      for (int s = 1; s + pm - 1 <= tn; ++s) {
        const size_t dist = hamming(
            text.substr(static_cast<size_t>(s) - 1, static_cast<size_t>(pm)), pat);
        if (dist <= static_cast<size_t>(k_ham)) naive.emplace_back(s, static_cast<int>(dist));
      }
      std::vector<std::pair<int, int>> scan;
      for (const TextHit& h : text_search_hamming(text, pat, k_ham))
        scan.emplace_back(h.start, h.distance);
      if (scan != naive) {
        ham_recount.pass = false;
        ham_recount.detail = tag;
      }
    }
  }

  const std::string summary = std::to_string(trials) + " randomized trials";
  for (CheckResult* r : {&trie, &trie_mono, &edit_oracle, &ham_recount})
    if (r->pass) r->detail = summary;
  return {trie, trie_mono, edit_oracle, ham_recount};
}

}  // namespace hardstrings
