#pragma once

// Text formats for codes and Turán systems. Both start with the header line
// `n=<int> k=<int> r=<int>` followed by one word (or subset) per line with
// symbols separated by spaces.

#include "inscover/words.hpp"

#include <iosfwd>
#include <string>

#include <json.hpp>

namespace inscover {

// Which header field fixes the length of body words. Covering codes use r;
// packings store length-k words.
enum class BodyLength { r, k };

struct CodeFile {
  int n = 0;
  int k = 0;
  int r = 0;
  Code code{1, 1};
};

struct SystemFile {
  int n = 0;
  int k = 0;
  int r = 0;
  TuranSystem system{1, 1};
};

// Throw FormatError (with the offending line) on a bad header, a line with
// the wrong number of symbols, a symbol outside [n], a duplicate line, a CR,
// or (for systems) a line that is not strictly increasing.
CodeFile parse_code_file(std::istream& in, BodyLength body = BodyLength::r);
SystemFile parse_system_file(std::istream& in);

// As above; std::runtime_error if the file cannot be opened.
CodeFile read_code_file(const std::string& path, BodyLength body = BodyLength::r);
SystemFile read_system_file(const std::string& path);

std::string format_code_file(const CodeFile& file);
std::string format_system_file(const SystemFile& file);

void write_text_file(const std::string& path, const std::string& contents);

// Arrays of symbol arrays, in the same order as the text body.
nlohmann::json to_json(const Code& c);
nlohmann::json to_json(const TuranSystem& t);

}  // namespace inscover
