#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hardstrings/errors.hpp"

namespace hardstrings {

// One symbol of the extended alphabet {0, 1, $, #, c_1, c_2, ..., letters}.
// Every kind occupies a disjoint range of a single int32 so that equality and
// ordering are plain integer comparisons:
//   0 -> '0',  1 -> '1',  2 -> '$',  3 -> '#',
//   3 + i -> stopper c_i (level i >= 1),
//   -1 - c -> letter with code c >= 0 (free-form examples like Fig-style a,b,c).
class Symbol {
 public:
  static Symbol zero() { return Symbol(0); }
  static Symbol one() { return Symbol(1); }
  static Symbol dollar() { return Symbol(2); }
  static Symbol hash_mark() { return Symbol(3); }
  static Symbol from_bit(int bit) { return bit ? one() : zero(); }

  static Symbol stopper(int level) {
    if (level < 1) throw InvalidLevel("stopper level must be >= 1");
    return Symbol(3 + level);
  }

  static Symbol letter(int code) {
    if (code < 0) throw ParamError("letter code must be >= 0");
    return Symbol(-1 - code);
  }

  bool is_zero() const { return code_ == 0; }
  bool is_one() const { return code_ == 1; }
  bool is_binary() const { return code_ == 0 || code_ == 1; }
  bool is_dollar() const { return code_ == 2; }
  bool is_hash() const { return code_ == 3; }
  bool is_gap() const { return code_ == 2 || code_ == 3; }
  bool is_stopper() const { return code_ > 3; }
  bool is_letter() const { return code_ < 0; }

  int bit() const {
    if (!is_binary()) throw NonBinarySymbol("symbol is not 0/1");
    return static_cast<int>(code_);
  }
  int stopper_level() const {
    if (!is_stopper()) throw ParamError("symbol is not a stopper");
    return static_cast<int>(code_) - 3;
  }
  int letter_code() const {
    if (!is_letter()) throw ParamError("symbol is not a letter");
    return -1 - static_cast<int>(code_);
  }

  // Raw packed code; useful for deterministic child ordering in tries.
  int32_t code() const { return code_; }

  // Token text form: "0", "1", "$", "#", "c<level>", "l<code>".
  std::string token() const;
  static Symbol parse_token(std::string_view tok);

  friend bool operator==(Symbol a, Symbol b) = default;
  friend std::strong_ordering operator<=>(Symbol a, Symbol b) = default;

 private:
  explicit Symbol(int32_t code) : code_(code) {}
  int32_t code_;
};

// An immutable-by-convention sequence of symbols.  Construction helpers parse
// the compact one-character-per-symbol forms used throughout the tests.
class SymbolString {
 public:
  SymbolString() = default;
  explicit SymbolString(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

  // "0101" -> binary string; throws NonBinarySymbol on anything else.
  static SymbolString bits(std::string_view s);
  // "$#$#" -> gap string; throws ParamError on anything else.
  static SymbolString gaps(std::string_view s);
  // "aabcab" -> letters with codes 0..25; throws ParamError otherwise.
  static SymbolString letters(std::string_view s);
  // Chars from {0,1,$,#} plus lowercase letters, mixed freely.
  static SymbolString mixed(std::string_view s);

  size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  Symbol operator[](size_t i) const { return symbols_[i]; }

  void push_back(Symbol s) { symbols_.push_back(s); }
  void append(const SymbolString& other) {
    symbols_.insert(symbols_.end(), other.symbols_.begin(), other.symbols_.end());
  }

  // Substring of `len` symbols starting at 0-based `pos` (clamped to the end).
  SymbolString substr(size_t pos, size_t len) const;

  const std::vector<Symbol>& raw() const { return symbols_; }
  std::vector<Symbol>::const_iterator begin() const { return symbols_.begin(); }
  std::vector<Symbol>::const_iterator end() const { return symbols_.end(); }

  bool all_binary() const;
  bool all_gap() const;
  // True when every symbol is in {0,1,$,#}, i.e. the compact file form applies.
  bool compactable() const;
  bool contains_gap_symbol() const;

  // Compact form: one character per symbol, only when compactable().
  std::string encode_compact() const;
  // Token form: space-separated tokens, always applicable.
  std::string encode_tokens() const;
  // Compact when possible, tokens otherwise; for messages and display.
  std::string display() const;

  static SymbolString decode_compact(std::string_view line);
  static SymbolString decode_tokens(std::string_view line);

  friend bool operator==(const SymbolString& a, const SymbolString& b) = default;
  friend std::strong_ordering operator<=>(const SymbolString& a, const SymbolString& b);

 private:
  std::vector<Symbol> symbols_;
};

SymbolString operator+(const SymbolString& a, const SymbolString& b);

}  // namespace hardstrings
