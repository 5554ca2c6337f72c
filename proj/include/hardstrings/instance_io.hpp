#pragma once

#include <iosfwd>
#include <string>

#include "hardstrings/instance.hpp"
#include "hardstrings/reduction.hpp"

namespace hardstrings {

// On-disk encodings: Compact is one character per symbol (0 1 $ #), Tokens is
// space-separated symbol tokens and covers the full alphabet.
enum class Encoding { Compact, Tokens };

std::string encoding_name(Encoding e);
Encoding parse_encoding(const std::string& name);

std::string mode_name(Mode m);
Mode parse_mode(const std::string& name);

std::string encode_string(const SymbolString& s, Encoding e);
SymbolString decode_string(const std::string& line, Encoding e);

// Instance files: versioned header (mode, k, d, count, encoding) followed by
// one encoded string per line, LF line endings.
void write_instance(std::ostream& out, const Instance& inst, Encoding e);
Instance read_instance(std::istream& in);
void save_instance(const std::string& path, const Instance& inst, Encoding e);
Instance load_instance(const std::string& path);

// Gap files: versioned header (mode, d) and the compact gap line.  Mismatch
// gaps are re-verified on read.
void write_gap(std::ostream& out, const GapString& g);
GapString read_gap(std::istream& in);
void save_gap(const std::string& path, const GapString& g);
GapString load_gap(const std::string& path);

// Text-artifact files: versioned header (mode, d, count, encoding), the
// compact gap line, then the encoded text; the block layout is rebuilt and
// cross-checked on read.
void write_text_artifact(std::ostream& out, const TextArtifact& art, Encoding e);
TextArtifact read_text_artifact(std::istream& in);
void save_text_artifact(const std::string& path, const TextArtifact& art, Encoding e);
TextArtifact load_text_artifact(const std::string& path);

}  // namespace hardstrings
