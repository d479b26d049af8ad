#include "inscover/io.hpp"

#include "inscover/errors.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

namespace inscover {

namespace {

struct Header {
  int n = 0;
  int k = 0;
  int r = 0;
};

bool parse_int(std::string_view text, int& out) {
  if (text.empty()) return false;
  for (char ch : text)
    if (ch < '0' || ch > '9') return false;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

bool read_line(std::istream& in, std::string& line, std::size_t number) {
  if (!std::getline(in, line)) return false;
  if (line.find('\r') != std::string::npos) throw FormatError(number, "carriage return (use LF line endings)");
  return true;
}

Header parse_header(std::istream& in) {
  std::string line;
  if (!read_line(in, line, 1)) throw FormatError(1, "missing header `n=<int> k=<int> r=<int>`");
  Header h;
  const char* keys[] = {"n=", "k=", "r="};
  int* fields[] = {&h.n, &h.k, &h.r};
  std::string_view rest = line;
  for (int i = 0; i < 3; ++i) {
    if (rest.substr(0, 2) != keys[i])
      throw FormatError(1, "expected header `n=<int> k=<int> r=<int>`, got `" + line + "`");
    rest.remove_prefix(2);
    const auto end = i < 2 ? rest.find(' ') : rest.size();
    if (end == std::string_view::npos || !parse_int(rest.substr(0, end), *fields[i]))
      throw FormatError(1, "expected header `n=<int> k=<int> r=<int>`, got `" + line + "`");
    rest.remove_prefix(i < 2 ? end + 1 : end);
  }
  if (h.n < 1 || h.n > kMaxAlphabet) throw FormatError(1, "n must be in [1, 255]");
  if (h.r < 1) throw FormatError(1, "r must be positive");
  if (h.k < h.r) throw FormatError(1, "k must be at least r");
  return h;
}

// Calls on_word(word, line_number) for every body line.
template <class F>
void parse_body(std::istream& in, const Header& h, std::size_t length, F&& on_word) {
  std::string line;
  std::vector<Symbol> symbols;
  for (std::size_t number = 2; read_line(in, line, number); ++number) {
    std::istringstream tokens(line);
    std::string token;
    symbols.clear();
    while (tokens >> token) {
      int value = 0;
      if (!parse_int(token, value)) throw FormatError(number, "`" + token + "` is not a symbol");
      if (value >= h.n)
        throw FormatError(number, "symbol " + token + " outside [" + std::to_string(h.n) + "]");
      symbols.push_back(static_cast<Symbol>(value));
    }
    if (symbols.size() != length)
      throw FormatError(number, "expected " + std::to_string(length) + " symbols, got " +
                                    std::to_string(symbols.size()));
    on_word(Word(symbols), number);
  }
}

std::string header_line(int n, int k, int r) {
  return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " r=" + std::to_string(r) + "\n";
}

void append_word(std::string& out, const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w[i]);
  }
  out += '\n';
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

nlohmann::json words_json(const std::set<Word>& words) {
  auto out = nlohmann::json::array();
  for (const auto& w : words) {
    auto row = nlohmann::json::array();
    for (Symbol s : w) row.push_back(static_cast<int>(s));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

CodeFile parse_code_file(std::istream& in, BodyLength body) {
  const Header h = parse_header(in);
  const int length = body == BodyLength::r ? h.r : h.k;
  CodeFile file{h.n, h.k, h.r, Code(h.n, length)};
  parse_body(in, h, static_cast<std::size_t>(length), [&](Word w, std::size_t line) {
    if (!file.code.insert(std::move(w))) throw FormatError(line, "duplicate word");
  });
  return file;
}

SystemFile parse_system_file(std::istream& in) {
  const Header h = parse_header(in);
  SystemFile file{h.n, h.k, h.r, TuranSystem(h.n, h.r)};
  parse_body(in, h, static_cast<std::size_t>(h.r), [&](Word w, std::size_t line) {
    for (std::size_t i = 1; i < w.size(); ++i)
      if (w[i - 1] >= w[i]) throw FormatError(line, "symbols must be strictly increasing");
    if (!file.system.insert(std::move(w))) throw FormatError(line, "duplicate set");
  });
  return file;
}

CodeFile read_code_file(const std::string& path, BodyLength body) {
  auto in = open_input(path);
  return parse_code_file(in, body);
}

SystemFile read_system_file(const std::string& path) {
  auto in = open_input(path);
  return parse_system_file(in);
}

std::string format_code_file(const CodeFile& file) {
  std::string out = header_line(file.n, file.k, file.r);
  for (const auto& w : file.code) append_word(out, w);
  return out;
}

std::string format_system_file(const SystemFile& file) {
  std::string out = header_line(file.n, file.k, file.r);
  for (const auto& s : file.system) append_word(out, s);
  return out;
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
  if (!out) throw std::runtime_error("write failed: " + path);
}

nlohmann::json to_json(const Code& c) { return words_json(c.words()); }

nlohmann::json to_json(const TuranSystem& t) { return words_json(t.sets()); }

}  // namespace inscover
