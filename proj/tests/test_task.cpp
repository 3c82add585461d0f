#include <filesystem>
#include <fstream>
#include <sstream>

#include "dimjump/errors.hpp"
#include "dimjump/task.hpp"
#include "doctest.h"

using namespace dimjump;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::filesystem::path> corpus_files(bool with_subdirs = false) {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::recursive_directory_iterator(DIMJUMP_CORPUS_DIR))
    if (e.path().extension() == ".task" && (with_subdirs || e.path().parent_path() == DIMJUMP_CORPUS_DIR))
      out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

ParseError parse_error(const std::string& text) {
  try {
    parse_task(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no parse error for: " << text);
  return ParseError(0, 0, "");
}

}  // namespace

TEST_CASE("corpus round trip") {
  auto files = corpus_files();
  REQUIRE(files.size() >= 8);
  for (const auto& f : files) {
    INFO(f.string());
    TaskFile t = parse_task(slurp(f));
    std::string once = format_task(t);
    std::string twice = format_task(parse_task(once));
    CHECK(once == twice);
    CHECK(parse_task(once).checks.size() == t.checks.size());
  }
}

TEST_CASE("degree errors name the cell") {
  ParseError e = parse_error("ring QQ[x, y]\nmodule M = coker [[x, y^2]] rows [0] cols [1, 1]\n");
  CHECK(e.line() == 2);
  CHECK(e.column() == 23);
  CHECK(std::string(e.what()).find("entry (0, 1)") != std::string::npos);
}

TEST_CASE("syntax errors carry positions") {
  ParseError e = parse_error("ring QQ[x]\nmodule M = coker [[x^]] rows [0] cols [1]\n");
  CHECK(e.line() == 2);
  CHECK(e.column() == 22);
  CHECK(std::string(e.what()).find("expected natural number") != std::string::npos);

  ParseError u = parse_error("ring QQ[x]\nmodule M = coker [[z]] rows [0] cols [1]");
  CHECK(u.line() == 2);
  CHECK(std::string(u.what()).find("unknown identifier 'z'") != std::string::npos);

  CHECK(parse_error("ring QQ[x:0]").line() == 1);
  CHECK(parse_error("ring QQ[a, b, c, d, e, f, g]").line() == 1);
  CHECK(parse_error("ring QQ[x]\nmodule A = free [0]\norder lex").line() == 3);
  CHECK(parse_error("ring GF(4)[x]").line() == 1);
  CHECK(parse_error("ring QQ[x]\nwindow 5:1").line() == 2);
  CHECK(parse_error("ring QQ[x]\nmodule A = free [0]\nmodule A = free [1]").line() == 3);
  CHECK(parse_error("ring QQ[x]\ncheck lemma3 Nope").line() == 2);
}

TEST_CASE("field and order overrides") {
  std::string text = "ring QQ[x, y]\nmodule M = coker [[1/2*x - y]] rows [0] cols [1]\n";
  TaskFile t = parse_task(text, TaskOverrides{Field::prime(7), OrderKind::lex});
  CHECK(t.ring->field() == Field::prime(7));
  CHECK(t.ring->order() == OrderKind::lex);
  CHECK(t.modules[0].module->presentation().entry(0, 0).to_string() == "4*x + 6*y");
  CHECK_THROWS_AS(parse_task("ring QQ[x]\nmodule M = coker [[1/7*x]] rows [0] cols [1]",
                             TaskOverrides{Field::prime(7), {}}),
                  ParseError);
}

TEST_CASE("inferred column twists and ungraded modules") {
  TaskFile t = parse_task("ring QQ[x:1, y:2]\nmodule M = coker [[x^2 - y, x]] rows [1]\nmodule U = coker [[x - 1]] ungraded");
  CHECK(t.modules[0].module->presentation().source().twists == std::vector<int>{3, 2});
  CHECK_FALSE(t.modules[1].module->graded());
}
