#include "hardstrings/symbols.hpp"

#include <charconv>

namespace hardstrings {

std::string Symbol::token() const {
  if (is_zero()) return "0";
  if (is_one()) return "1";
  if (is_dollar()) return "$";
  if (is_hash()) return "#";
  if (is_stopper()) return "c" + std::to_string(stopper_level());
  return "l" + std::to_string(letter_code());
}

Symbol Symbol::parse_token(std::string_view tok) {
  if (tok == "0") return zero();
  if (tok == "1") return one();
  if (tok == "$") return dollar();
  if (tok == "#") return hash_mark();
  if (tok.size() >= 2 && (tok[0] == 'c' || tok[0] == 'l')) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), value);
    if (ec == std::errc() && ptr == tok.data() + tok.size()) {
      if (tok[0] == 'c') return stopper(value);
      return letter(value);
    }
  }
  throw FormatError("unrecognized symbol token: '" + std::string(tok) + "'");
}

SymbolString SymbolString::bits(std::string_view s) {
  std::vector<Symbol> out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '0') out.push_back(Symbol::zero());
    else if (c == '1') out.push_back(Symbol::one());
    else throw NonBinarySymbol(std::string("non-binary character '") + c + "'");
  }
  return SymbolString(std::move(out));
}

SymbolString SymbolString::gaps(std::string_view s) {
  std::vector<Symbol> out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '$') out.push_back(Symbol::dollar());
    else if (c == '#') out.push_back(Symbol::hash_mark());
    else throw ParamError(std::string("non-gap character '") + c + "'");
  }
  return SymbolString(std::move(out));
}

SymbolString SymbolString::letters(std::string_view s) {
  std::vector<Symbol> out;
  out.reserve(s.size());
  for (char c : s) {
    if (c < 'a' || c > 'z') throw ParamError(std::string("expected a-z, got '") + c + "'");
    out.push_back(Symbol::letter(c - 'a'));
  }
  return SymbolString(std::move(out));
}

SymbolString SymbolString::mixed(std::string_view s) {
  std::vector<Symbol> out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '0': out.push_back(Symbol::zero()); break;
      case '1': out.push_back(Symbol::one()); break;
      case '$': out.push_back(Symbol::dollar()); break;
      case '#': out.push_back(Symbol::hash_mark()); break;
      default:
        if (c < 'a' || c > 'z') throw ParamError(std::string("unsupported character '") + c + "'");
        out.push_back(Symbol::letter(c - 'a'));
    }
  }
  return SymbolString(std::move(out));
}

SymbolString SymbolString::substr(size_t pos, size_t len) const {
  if (pos >= symbols_.size()) return SymbolString();
  len = std::min(len, symbols_.size() - pos);
  return SymbolString(std::vector<Symbol>(symbols_.begin() + pos, symbols_.begin() + pos + len));
}

bool SymbolString::all_binary() const {
  for (Symbol s : symbols_)
    if (!s.is_binary()) return false;
  return true;
}

bool SymbolString::all_gap() const {
  for (Symbol s : symbols_)
    if (!s.is_gap()) return false;
  return true;
}

bool SymbolString::compactable() const {
  for (Symbol s : symbols_)
    if (!s.is_binary() && !s.is_gap()) return false;
  return true;
}

bool SymbolString::contains_gap_symbol() const {
  for (Symbol s : symbols_)
    if (s.is_gap()) return true;
  return false;
}

std::string SymbolString::encode_compact() const {
  if (!compactable()) throw FormatError("string has symbols outside {0,1,$,#}; use token form");
  std::string out;
  out.reserve(symbols_.size());
  for (Symbol s : symbols_) {
    if (s.is_zero()) out.push_back('0');
    else if (s.is_one()) out.push_back('1');
    else if (s.is_dollar()) out.push_back('$');
    else out.push_back('#');
  }
  return out;
}

std::string SymbolString::encode_tokens() const {
  std::string out;
  for (size_t i = 0; i < symbols_.size(); ++i) {
    if (i) out.push_back(' ');
    out += symbols_[i].token();
  }
  return out;
}

std::string SymbolString::display() const {
  return compactable() ? encode_compact() : encode_tokens();
}

SymbolString SymbolString::decode_compact(std::string_view line) {
  std::vector<Symbol> out;
  out.reserve(line.size());
  for (char c : line) {
    switch (c) {
      case '0': out.push_back(Symbol::zero()); break;
      case '1': out.push_back(Symbol::one()); break;
      case '$': out.push_back(Symbol::dollar()); break;
      case '#': out.push_back(Symbol::hash_mark()); break;
      default:
        throw FormatError(std::string("invalid compact character '") + c + "'");
    }
  }
  return SymbolString(std::move(out));
}

SymbolString SymbolString::decode_tokens(std::string_view line) {
  std::vector<Symbol> out;
  size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && line[pos] == ' ') ++pos;
    if (pos >= line.size()) break;
    size_t end = line.find(' ', pos);
    if (end == std::string_view::npos) end = line.size();
    out.push_back(Symbol::parse_token(line.substr(pos, end - pos)));
    pos = end;
  }
  return SymbolString(std::move(out));
}

std::strong_ordering operator<=>(const SymbolString& a, const SymbolString& b) {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return a.size() <=> b.size();
}

SymbolString operator+(const SymbolString& a, const SymbolString& b) {
  SymbolString out = a;
  out.append(b);
  return out;
}

}  // namespace hardstrings
