#include "hardstrings/instance_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace hardstrings {

namespace {

constexpr const char* kInstanceMagic = "hardstrings-instance v1";
constexpr const char* kGapMagic = "hardstrings-gap v1";
constexpr const char* kTextMagic = "hardstrings-text v1";

std::string gap_mode_name(GapMode m) {
  return m == GapMode::Mismatch ? "mismatch" : "edit";
}

GapMode parse_gap_mode(const std::string& name) {
  if (name == "mismatch") return GapMode::Mismatch;
  if (name == "edit") return GapMode::Edit;
  throw FormatError("unknown gap mode '" + name + "'");
}

std::string read_line(std::istream& in, const char* what) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError(std::string("missing ") + what);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

void expect_line(std::istream& in, const std::string& want) {
  const std::string got = read_line(in, want.c_str());
  if (got != want)
    throw FormatError("expected '" + want + "', got '" + got + "'");
}

// Parses a "key value" header line and returns the value.
std::string header_value(std::istream& in, const std::string& key) {
  const std::string line = read_line(in, key.c_str());
  if (line.size() < key.size() + 2 || line.compare(0, key.size(), key) != 0 ||
      line[key.size()] != ' ')
    throw FormatError("expected header line '" + key + " ...', got '" + line + "'");
  return line.substr(key.size() + 1);
}

long parse_long(const std::string& text, const char* what) {
  size_t used = 0;
  long value = 0;
  try {
    value = std::stol(text, &used);
  } catch (const std::exception&) {
    throw FormatError(std::string("bad ") + what + " '" + text + "'");
  }
  if (used != text.size()) throw FormatError(std::string("bad ") + what + " '" + text + "'");
  return value;
}

void expect_end(std::istream& in, const char* what) {
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty())
      throw FormatError(std::string("trailing content after ") + what + ": '" + line + "'");
  }
}

template <class T, class Reader>
T load_from(const std::string& path, Reader reader) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return reader(in);
}

template <class Writer>
void save_to(const std::string& path, Writer writer) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  writer(out);
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace

std::string encoding_name(Encoding e) {
  return e == Encoding::Compact ? "compact" : "tokens";
}

Encoding parse_encoding(const std::string& name) {
  if (name == "compact") return Encoding::Compact;
  if (name == "tokens") return Encoding::Tokens;
  throw FormatError("unknown encoding '" + name + "'");
}

std::string mode_name(Mode m) {
  return m == Mode::Hamming ? "hamming" : "edit";
}

Mode parse_mode(const std::string& name) {
  if (name == "hamming") return Mode::Hamming;
  if (name == "edit") return Mode::Edit;
  throw FormatError("unknown mode '" + name + "'");
}

std::string encode_string(const SymbolString& s, Encoding e) {
  return e == Encoding::Compact ? s.encode_compact() : s.encode_tokens();
}

SymbolString decode_string(const std::string& line, Encoding e) {
  return e == Encoding::Compact ? SymbolString::decode_compact(line)
                                : SymbolString::decode_tokens(line);
}

void write_instance(std::ostream& out, const Instance& inst, Encoding e) {
  out << kInstanceMagic << "\n";
  out << "mode " << mode_name(inst.mode) << "\n";
  out << "k " << inst.k << "\n";
  out << "d " << (inst.strings.empty() ? 0 : inst.d()) << "\n";
  out << "count " << inst.strings.size() << "\n";
  out << "encoding " << encoding_name(e) << "\n";
  for (const SymbolString& s : inst.strings) out << encode_string(s, e) << "\n";
}

Instance read_instance(std::istream& in) {
  expect_line(in, kInstanceMagic);
  const Mode mode = parse_mode(header_value(in, "mode"));
  const long k = parse_long(header_value(in, "k"), "k");
  const long d = parse_long(header_value(in, "d"), "d");
  const long count = parse_long(header_value(in, "count"), "count");
  const Encoding enc = parse_encoding(header_value(in, "encoding"));
  if (k < 0 || d < 0 || count < 0) throw FormatError("negative header field");
  std::vector<SymbolString> strings;
  for (long i = 0; i < count; ++i) {
    SymbolString s = decode_string(read_line(in, "instance string"), enc);
    if (static_cast<long>(s.size()) != d)
      throw FormatError("string length " + std::to_string(s.size()) +
                        " differs from declared d " + std::to_string(d));
    strings.push_back(std::move(s));
  }
  expect_end(in, "instance body");
  return make_instance(std::move(strings), static_cast<int>(k), mode);
}

void write_gap(std::ostream& out, const GapString& g) {
  out << kGapMagic << "\n";
  out << "mode " << gap_mode_name(g.mode) << "\n";
  out << "d " << g.d << "\n";
  out << g.symbols.encode_compact() << "\n";
}

GapString read_gap(std::istream& in) {
  expect_line(in, kGapMagic);
  const GapMode mode = parse_gap_mode(header_value(in, "mode"));
  const long d = parse_long(header_value(in, "d"), "d");
  SymbolString s = SymbolString::decode_compact(read_line(in, "gap line"));
  expect_end(in, "gap body");
  return gap_from_symbols(std::move(s), static_cast<int>(d), mode);
}

void write_text_artifact(std::ostream& out, const TextArtifact& art, Encoding e) {
  out << kTextMagic << "\n";
  out << "mode " << (art.gap.mode == GapMode::Mismatch ? "hamming" : "edit") << "\n";
  out << "d " << art.d << "\n";
  out << "count " << art.layout.size() << "\n";
  out << "encoding " << encoding_name(e) << "\n";
  out << art.gap.symbols.encode_compact() << "\n";
  out << encode_string(art.text, e) << "\n";
}

TextArtifact read_text_artifact(std::istream& in) {
  expect_line(in, kTextMagic);
  const Mode mode = parse_mode(header_value(in, "mode"));
  const long d = parse_long(header_value(in, "d"), "d");
  const long count = parse_long(header_value(in, "count"), "count");
  const Encoding enc = parse_encoding(header_value(in, "encoding"));
  if (d < 1 || count < 1) throw FormatError("text artifact needs d >= 1 and count >= 1");
  SymbolString gap_symbols = SymbolString::decode_compact(read_line(in, "gap line"));
  SymbolString text = decode_string(read_line(in, "text line"), enc);
  expect_end(in, "text body");

  TextArtifact art;
  art.gap = gap_unchecked(std::move(gap_symbols), static_cast<int>(d),
                          mode == Mode::Hamming ? GapMode::Mismatch : GapMode::Edit);
  art.d = static_cast<int>(d);
  art.text = std::move(text);
  if (static_cast<long>(art.text.size()) != 3 * count * d + 2 * d)
    throw FormatError("text length " + std::to_string(art.text.size()) +
                      " does not match 3nd + 2d for the declared header");
  for (long i = 1; i <= count; ++i)
    art.layout.push_back({static_cast<int>(i), static_cast<int>((3 * (i - 1) + 2) * d + 1)});
  // Cross-check the interleaving: every gap slice must equal the gap string.
  for (long i = 0; i <= count; ++i) {
    const SymbolString slice =
        art.text.substr(static_cast<size_t>(3 * i * d), static_cast<size_t>(2 * d));
    if (slice != art.gap.symbols)
      throw FormatError("text does not interleave the declared gap at block " +
                        std::to_string(i));
  }
  return art;
}

void save_instance(const std::string& path, const Instance& inst, Encoding e) {
  save_to(path, [&](std::ostream& out) { write_instance(out, inst, e); });
}

Instance load_instance(const std::string& path) {
  return load_from<Instance>(path, [](std::istream& in) { return read_instance(in); });
}

void save_gap(const std::string& path, const GapString& g) {
  save_to(path, [&](std::ostream& out) { write_gap(out, g); });
}

GapString load_gap(const std::string& path) {
  return load_from<GapString>(path, [](std::istream& in) { return read_gap(in); });
}

void save_text_artifact(const std::string& path, const TextArtifact& art, Encoding e) {
  save_to(path, [&](std::ostream& out) { write_text_artifact(out, art, e); });
}

TextArtifact load_text_artifact(const std::string& path) {
  return load_from<TextArtifact>(path, [](std::istream& in) { return read_text_artifact(in); });
}

}  // namespace hardstrings
