// Python bindings for the core operations: distances, the stoppers
// transform, hard-instance generation and counting, gap strings, the
// dictionary-to-text reductions, and the reference solvers.
//
// Strings cross the boundary as text: compact one-character-per-symbol form
// where the alphabet allows it, space-separated tokens otherwise.  Exact
// big-integer counts become Python ints, exact rationals become
// fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "hardstrings/distance.hpp"
#include "hardstrings/gapstrings.hpp"
#include "hardstrings/hardgen.hpp"
#include "hardstrings/instance.hpp"
#include "hardstrings/instance_io.hpp"
#include "hardstrings/reduction.hpp"
#include "hardstrings/solvers.hpp"
#include "hardstrings/stoppers.hpp"

namespace py = pybind11;
namespace hs = hardstrings;

namespace {

hs::SymbolString parse_string(const std::string& text) {
  if (text.find(' ') != std::string::npos) return hs::SymbolString::decode_tokens(text);
  try {
    return hs::SymbolString::decode_compact(text);
  } catch (const hs::Error&) {
    return hs::SymbolString::letters(text);  // plain letters, e.g. "kitten"
  }
}

std::string render_string(const hs::SymbolString& s) {
  return s.compactable() ? s.encode_compact() : s.encode_tokens();
}

std::vector<hs::SymbolString> parse_strings(const std::vector<std::string>& texts) {
  std::vector<hs::SymbolString> out;
  out.reserve(texts.size());
  for (const std::string& t : texts) out.push_back(parse_string(t));
  return out;
}

std::vector<std::string> render_strings(const std::vector<hs::SymbolString>& strings) {
  std::vector<std::string> out;
  out.reserve(strings.size());
  for (const hs::SymbolString& s : strings) out.push_back(render_string(s));
  return out;
}

hs::Mode parse_mode_name(const std::string& name) {
  if (name == "hamming") return hs::Mode::Hamming;
  if (name == "edit") return hs::Mode::Edit;
  throw hs::ParamError("mode must be 'hamming' or 'edit', got '" + name + "'");
}

hs::GapStrategy parse_strategy_name(const std::string& name) {
  if (name == "exhaustive") return hs::GapStrategy::Exhaustive;
  if (name == "random") return hs::GapStrategy::RandomRetry;
  if (name == "kwise") return hs::GapStrategy::KWise;
  throw hs::ParamError("strategy must be 'exhaustive', 'random' or 'kwise', got '" + name +
                       "'");
}

// Exact probability parser: "a/b", a decimal fraction, or an integer.
hs::Rational parse_probability(const std::string& text) {
  const auto bad = [&] {
    return hs::ParamError("cannot parse probability '" + text + "'");
  };
  if (text.empty()) throw bad();
  try {
    const size_t slash = text.find('/');
    if (slash != std::string::npos) {
      const hs::BigInt den(text.substr(slash + 1));
      if (den == 0) throw bad();
      return hs::Rational(hs::BigInt(text.substr(0, slash)), den);
    }
    const size_t dot = text.find('.');
    if (dot == std::string::npos) return hs::Rational(hs::BigInt(text));
    const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    return hs::Rational(hs::BigInt(digits.empty() ? "0" : digits),
                        hs::ipow(10, text.size() - dot - 1));
  } catch (const std::runtime_error&) {
    throw bad();
  }
}

py::object to_py_int(const hs::BigInt& value) {
  return py::module_::import("builtins").attr("int")(value.str());
}

py::object to_py_fraction(const hs::Rational& value) {
  return py::module_::import("fractions")
      .attr("Fraction")(to_py_int(boost::multiprecision::numerator(value)),
                        to_py_int(boost::multiprecision::denominator(value)));
}

std::vector<std::pair<int, int>> answers_to_pairs(const std::vector<hs::MatchAnswer>& in) {
  std::vector<std::pair<int, int>> out;
  out.reserve(in.size());
  for (const hs::MatchAnswer& a : in) out.emplace_back(a.dict_index, a.distance);
  return out;
}

hs::Instance instance_from(const std::vector<std::string>& strings, int k,
                           const std::string& mode) {
  return hs::make_instance(parse_strings(strings), k, parse_mode_name(mode));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "hard instances and reductions for dictionary look-up and text indexing "
      "with k mismatches or differences";

  static py::exception<hs::GapNotFound> gap_not_found(m, "GapNotFoundError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const hs::GapNotFound& e) {
      gap_not_found(e.what());
    } catch (const hs::IoError& e) {
      PyErr_SetString(PyExc_OSError, e.what());
    } catch (const hs::Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  // --- distances -------------------------------------------------------------
  m.def(
      "hamming",
      [](const std::string& a, const std::string& b) {
        return hs::hamming(parse_string(a), parse_string(b));
      },
      py::arg("a"), py::arg("b"), "Hamming distance between equal-length strings.");
  m.def(
      "edit_distance",
      [](const std::string& a, const std::string& b) {
        return hs::edit_distance(parse_string(a), parse_string(b));
      },
      py::arg("a"), py::arg("b"), "Exact edit (Levenshtein) distance.");

  // --- stoppers transform ----------------------------------------------------
  m.def(
      "transform_length", [](size_t d) { return hs::transform_length(d); }, py::arg("d"),
      "Transformed length d*(1 + 6*log2(d)) for a power-of-two d.");
  m.def(
      "stoppers_transform",
      [](const std::string& x) { return render_string(hs::stoppers_transform(parse_string(x))); },
      py::arg("x"),
      "Insert stopper runs so edit distance between images equals Hamming "
      "distance between the binary inputs (token-encoded result).");
  m.def(
      "transform_set",
      [](const std::vector<std::string>& xs) {
        return render_strings(hs::transform_set(parse_strings(xs)));
      },
      py::arg("strings"), "Pad to one power of two, then transform every string.");

  // --- hard-instance generation and counting ---------------------------------
  m.def(
      "enumerate_queries",
      [](int k, int d) {
        std::vector<std::string> out;
        for (const hs::BlockString& b : hs::enumerate_queries(hs::BlockParams(k, d)))
          out.push_back(b.bit_string());
        return out;
      },
      py::arg("k"), py::arg("d"),
      "All distinct queries with k/2 single-bit and k/2 double-bit blocks.");
  m.def(
      "enumerate_base_strings",
      [](int k, int d) {
        std::vector<std::string> out;
        for (const hs::BlockString& b : hs::enumerate_base_strings(hs::BlockParams(k, d)))
          out.push_back(b.bit_string());
        return out;
      },
      py::arg("k"), py::arg("d"), "All strings with exactly one set bit per block.");
  m.def(
      "count_queries_paper",
      [](int k, int d) { return to_py_int(hs::count_queries_paper(hs::BlockParams(k, d))); },
      py::arg("k"), py::arg("d"),
      "Generation-sequence count C(k,k/2)*b^k*(b-1)^(k/2); overcounts each "
      "distinct query exactly 2^(k/2) times.");
  m.def(
      "count_queries_distinct",
      [](int k, int d) {
        return to_py_int(hs::count_queries_distinct(hs::BlockParams(k, d)));
      },
      py::arg("k"), py::arg("d"), "Number of distinct query strings.");
  m.def(
      "count_within_ball",
      [](const std::string& p, int k, int d, int delta) {
        return to_py_int(hs::count_within_ball_closed_form(
            hs::BlockString::from_bits(hs::BlockParams(k, d), p), delta));
      },
      py::arg("p"), py::arg("k"), py::arg("d"), py::arg("delta"),
      "Exact number of base strings at Hamming distance delta from a query.");
  m.def(
      "generate_dictionary",
      [](int k, int d, const std::string& select_prob, int prune_radius, uint64_t seed) {
        const hs::DictionaryConfig cfg{hs::BlockParams(k, d), parse_probability(select_prob),
                                       prune_radius, seed};
        std::vector<std::string> out;
        for (const hs::BlockString& b : hs::generate_dictionary(cfg))
          out.push_back(b.bit_string());
        return out;
      },
      py::arg("k"), py::arg("d"), py::arg("select_prob") = "1",
      py::arg("prune_radius") = 0, py::arg("seed") = 0,
      "Bernoulli-selected base strings with close pairs pruned.");
  m.def(
      "compute_alpha", [](uint64_t n, int k, int d) { return hs::compute_alpha(n, k, d); },
      py::arg("n"), py::arg("k"), py::arg("d"),
      "alpha = log_{d/k}(log2(n)/k), all logarithms base 2.");
  m.def(
      "select_probability",
      [](int d, int radius) { return to_py_fraction(hs::select_probability(d, radius)); },
      py::arg("d"), py::arg("radius"), "Exact 1 / sum_{i<=radius} C(d, i).");
  m.def(
      "intersection_upper_bound",
      [](int64_t z, int64_t delta1, int64_t delta2, int k, int d) {
        return to_py_fraction(
            hs::intersection_upper_bound(z, delta1, delta2, hs::BlockParams(k, d)));
      },
      py::arg("z"), py::arg("delta1"), py::arg("delta2"), py::arg("k"), py::arg("d"),
      "Per-(delta1, delta2) bound on |Q intersect ball(S1) intersect ball(S2)|.");

  // --- gap strings -----------------------------------------------------------
  m.def(
      "mismatch_gap",
      [](int d, const std::string& strategy, uint64_t seed, uint64_t budget) {
        const hs::GapStrategy st = parse_strategy_name(strategy);
        const uint64_t effective = budget > 0 ? budget : hs::default_gap_budget(st, d);
        return hs::mismatch_gap(d, st, seed, effective).symbols.encode_compact();
      },
      py::arg("d"), py::arg("strategy") = "exhaustive", py::arg("seed") = 0,
      py::arg("budget") = 0,
      "A length-2d gap string over {$,#} whose prefixes and suffixes stay far "
      "apart in Hamming distance (budget 0 uses the strategy default).");
  m.def(
      "edit_gap", [](int d) { return hs::edit_gap(d).symbols.encode_compact(); },
      py::arg("d"), "The edit-mode gap $^d #^d.");
  m.def(
      "verify_gap",
      [](const std::string& g, int d) { return hs::verify_gap(parse_string(g), d); },
      py::arg("g"), py::arg("d"), "Check the overlap property of a candidate gap.");
  m.def(
      "gap_counterexample",
      [](const std::string& g, int d) { return hs::gap_counterexample(parse_string(g), d); },
      py::arg("g"), py::arg("d"),
      "Smallest failing overlap length, or None when the gap verifies.");
  m.def(
      "kwise_bits",
      [](uint64_t seed, int independence, size_t count) {
        return hs::kwise_bits(seed, independence, count).encode_compact();
      },
      py::arg("seed"), py::arg("independence"), py::arg("count"),
      "Bits of a t-wise independent family member (GF(2^m) polynomial).");

  // --- reductions ------------------------------------------------------------
  py::class_<hs::TextArtifact>(m, "TextArtifact",
                               "Reduced text G S_1 G ... S_M G with its gap and layout.")
      .def_property_readonly("text",
                             [](const hs::TextArtifact& a) { return render_string(a.text); })
      .def_property_readonly(
          "gap", [](const hs::TextArtifact& a) { return a.gap.symbols.encode_compact(); })
      .def_property_readonly("d", [](const hs::TextArtifact& a) { return a.d; })
      .def_property_readonly("layout", [](const hs::TextArtifact& a) {
        std::vector<std::pair<int, int>> out;
        for (const hs::TextArtifact::Placement& pl : a.layout)
          out.emplace_back(pl.block_index, pl.start);
        return out;
      });
  m.def(
      "build_text",
      [](const std::vector<std::string>& dict, int k, const std::string& mode,
         const std::optional<std::string>& gap, uint64_t seed) {
        const hs::Instance inst = instance_from(dict, k, mode);
        std::optional<hs::GapString> parsed;
        if (gap)
          parsed = hs::gap_from_symbols(parse_string(*gap), inst.d(),
                                        parse_mode_name(mode) == hs::Mode::Edit
                                            ? hs::GapMode::Edit
                                            : hs::GapMode::Mismatch);
        return hs::build_text(inst, std::move(parsed), seed);
      },
      py::arg("dict"), py::arg("k"), py::arg("mode") = "hamming",
      py::arg("gap") = std::nullopt, py::arg("seed") = 0,
      "Interleave dictionary strings with gap copies into one text.");
  m.def(
      "dict_lookup_via_text",
      [](const hs::TextArtifact& art, const std::string& q, int k, const std::string& mode) {
        return answers_to_pairs(
            hs::dict_lookup_via_text(art, parse_string(q), k, parse_mode_name(mode)));
      },
      py::arg("text"), py::arg("q"), py::arg("k"), py::arg("mode") = "hamming",
      "Answer a dictionary look-up by searching the reduced text; returns "
      "(index, distance) pairs with 1-based indices.");
  m.def(
      "transform_instance",
      [](const std::vector<std::string>& dict, int k) {
        return render_strings(hs::transform_instance(instance_from(dict, k, "hamming")).strings);
      },
      py::arg("dict"), py::arg("k"),
      "Stoppers-transform a Hamming dictionary into an edit-mode one.");
  m.def(
      "bichromatic_closest_pair",
      [](const std::vector<std::string>& red, const std::vector<std::string>& blue,
         const std::string& mode) {
        const hs::BcpResult r = hs::bichromatic_closest_pair(
            parse_strings(red), parse_strings(blue), parse_mode_name(mode));
        return std::make_tuple(r.r_index, r.b_index, r.distance);
      },
      py::arg("red"), py::arg("blue"), py::arg("mode") = "hamming",
      "Exact closest red/blue pair: (red_index, blue_index, distance), 1-based.");

  // --- solvers ---------------------------------------------------------------
  m.def(
      "dict_lookup_brute",
      [](const std::vector<std::string>& dict, const std::string& q, int k,
         const std::string& mode) {
        const hs::Mode md = parse_mode_name(mode);
        return answers_to_pairs(
            hs::dict_lookup_brute(instance_from(dict, k, mode), parse_string(q), k, md));
      },
      py::arg("dict"), py::arg("q"), py::arg("k"), py::arg("mode") = "hamming",
      "Scan every dictionary string; returns (index, distance) pairs.");
  m.def(
      "trie_lookup",
      [](const std::vector<std::string>& dict, const std::string& q, int k) {
        const hs::TrieIndex idx = hs::trie_build(instance_from(dict, k, "hamming"));
        const auto [answers, stats] = hs::trie_lookup(idx, parse_string(q), k);
        return std::make_tuple(answers_to_pairs(answers), stats.nodes_visited);
      },
      py::arg("dict"), py::arg("q"), py::arg("k"),
      "Branch-and-prune trie look-up: ((index, distance) pairs, nodes visited).");
  m.def(
      "text_search_hamming",
      [](const std::string& t, const std::string& p, int k) {
        std::vector<std::pair<size_t, int>> out;
        for (const hs::TextHit& h : hs::text_search_hamming(parse_string(t), parse_string(p), k))
          out.emplace_back(h.start, h.distance);
        return out;
      },
      py::arg("t"), py::arg("p"), py::arg("k"),
      "All window starts (1-based) within Hamming distance k.");
  m.def(
      "text_search_edit",
      [](const std::string& t, const std::string& p, int k) {
        std::vector<std::tuple<int, int, int>> out;
        for (const hs::EndHit& h : hs::text_search_edit(parse_string(t), parse_string(p), k))
          out.emplace_back(h.end, h.distance, h.witness_start);
        return out;
      },
      py::arg("t"), py::arg("p"), py::arg("k"),
      "Per-end minima: (end, distance, witness_start) for ends within k.");
}
