#include "corpus.hpp"
#include "inscover/errors.hpp"
#include "inscover/io.hpp"

#include <doctest.h>

#include <sstream>

using namespace inscover;

namespace {

CodeFile parse_code(const std::string& text, BodyLength body = BodyLength::r) {
  std::istringstream in(text);
  return parse_code_file(in, body);
}

SystemFile parse_system(const std::string& text) {
  std::istringstream in(text);
  return parse_system_file(in);
}

std::size_t error_line(const std::string& text, bool system = false) {
  try {
    if (system)
      (void)parse_system(text);
    else
      (void)parse_code(text);
  } catch (const FormatError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("code files round trip") {
  const CodeFile file{3, 4, 3, testing_support::grozea_code()};
  const std::string text = format_code_file(file);
  CHECK(text.rfind("n=3 k=4 r=3\n0 0 0\n0 0 1\n", 0) == 0);
  const auto back = parse_code(text);
  CHECK(back.n == 3);
  CHECK(back.k == 4);
  CHECK(back.r == 3);
  CHECK(back.code == file.code);
}

TEST_CASE("system files round trip") {
  const SystemFile file{5, 3, 2, TuranSystem(5, 2, {{0, 1}, {2, 3}, {2, 4}, {3, 4}})};
  const std::string text = format_system_file(file);
  CHECK(text == "n=5 k=3 r=2\n0 1\n2 3\n2 4\n3 4\n");
  CHECK(parse_system(text).system == file.system);
}

TEST_CASE("packing files carry length-k words") {
  const auto f = parse_code("n=2 k=3 r=2\n0 0 0\n1 1 1\n", BodyLength::k);
  CHECK(f.code.word_length() == 3);
  CHECK(f.code.size() == 2);
}

TEST_CASE("JSON mirrors the body") {
  const auto j = to_json(Code(2, 2, {{1, 1}, {0, 0}}));
  CHECK(j.dump() == "[[0,0],[1,1]]");
  CHECK(to_json(TuranSystem(4, 2, {{2, 3}})).dump() == "[[2,3]]");
}

TEST_CASE("malformed files are rejected with line numbers") {
  CHECK(error_line("") == 1);
  CHECK(error_line("n=3 k=4\n") == 1);
  CHECK(error_line("n=3  k=4 r=3\n") == 1);
  CHECK(error_line("n=3 k=4 r=x\n") == 1);
  CHECK(error_line("n=3 k=2 r=3\n") == 1);
  CHECK(error_line("n=0 k=4 r=3\n") == 1);
  CHECK(error_line("n=3 k=4 r=3\r\n0 0 0\n") == 1);
  CHECK(error_line("n=3 k=4 r=3\n0 0 0\n0 1\n") == 3);
  CHECK(error_line("n=3 k=4 r=3\n0 0 0\n0 1 3\n") == 3);
  CHECK(error_line("n=3 k=4 r=3\n0 0 0\n0 -1 2\n") == 3);
  CHECK(error_line("n=3 k=4 r=3\n0 0 0\n0 0 0\n") == 3);
  CHECK(error_line("n=3 k=4 r=3\n0 0 0\n\n") == 3);
  CHECK(error_line("n=3 k=4 r=3\n0 0 0\n1 1 1\r\n") == 3);
  CHECK(error_line("n=5 k=3 r=2\n0 1\n1 0\n", true) == 3);
  CHECK(error_line("n=5 k=3 r=2\n0 1\n1 1\n", true) == 3);
  CHECK(error_line("n=5 k=3 r=2\n0 1\n0 1\n", true) == 3);
  CHECK(error_line("n=3 k=4 r=3\n0 0 0\n1 1 1\n") == 0);
}

TEST_CASE("missing files raise runtime errors") {
  CHECK_THROWS_AS(read_code_file("/nonexistent/dir/x.code"), std::runtime_error);
  CHECK_THROWS_AS(read_system_file("/nonexistent/dir/x.sys"), std::runtime_error);
}
