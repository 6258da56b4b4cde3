#include <doctest.h>

#include <sstream>
#include <string>

#include "halinstar/errors.hpp"
#include "halinstar/io.hpp"
#include "support.hpp"

using namespace halinstar;

namespace {

const char* kK13 = "tree 4 0\n0: 1 2 3\ncycle: 1 2 3\nmode: generalized\n";

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

std::string parse_error_of(const char* text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("K_{1,3} serializes to four lines and round-trips") {
  const HalinInstance h = parse_instance(kK13);
  const std::string text = serialize_instance(h);
  CHECK(count_lines(text) == 4);
  CHECK(text == kK13);
  CHECK(parse_instance(text) == h);
}

TEST_CASE("comments and blank lines are ignored; mode defaults from the cycle") {
  const auto h = parse_instance("# a wheel\n\ntree 4 0   # header\n0: 1 2 3\n\ncycle: 1 2 3\n");
  CHECK(h.mode == Mode::GeneralizedHalin);
  const auto t = parse_instance("tree 4 0\n0: 1 2 3\n");
  CHECK(t.mode == Mode::TreeOnly);
  CHECK_FALSE(t.has_cycle());
}

TEST_CASE("parse errors") {
  CHECK(parse_error_of("tree 5 0\n0: 1 2 3\n1: 4\ncycle: 4 2\n").find("cycle must cover all leaves") !=
        std::string::npos);
  CHECK(parse_error_of("tree 4 0\n0: 1 2 2\ncycle: 1 2 3\n").find("duplicate child") != std::string::npos);
  CHECK(parse_error_of("tree 4 0\n0: 1 2 3\n0: 1\n").find("listed twice") != std::string::npos);
  CHECK(parse_error_of("0: 1 2 3\n").find("tree <n> <root>") != std::string::npos);
  CHECK(parse_error_of("tree 5 0\n0: 1 2 3 4\ncycle: 1 3 2 4\n").find("rotation") != std::string::npos);
  CHECK(parse_error_of("tree 4 0\n0: 1 2 3\ncycle: 1 2 3\nmode: tree\n").find("tree mode") !=
        std::string::npos);
  CHECK(parse_error_of("tree 4 0\n0: 1 2 3\nmode: complete\n").find("need a cycle") != std::string::npos);
  CHECK(parse_error_of("tree 4 0\n0: 1 2 3\ncycle: 1 2 3\nmode: generalized\n0: 1\n") != "");
  CHECK(parse_error_of("tree 4 0\n0: 1 x 3\n") != "");
}

TEST_CASE("parse errors carry the line number") {
  try {
    parse_instance("tree 4 0\n0: 1 2 2\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).rfind("line 2: ", 0) == 0);
  }
}

TEST_CASE("list documents") {
  const HalinInstance h = parse_instance(kK13);
  const EdgeIndex idx(h);
  const auto lists = parse_lists(
      R"({"0-1":[3,1,1],"0-2":[0],"0-3":[2,5],"1~2":[0,1,2],"2~3":[4],"1~3":[7]})", idx);
  CHECK(lists[0] == ColorList{1, 3});
  CHECK(lists[5] == ColorList{7});
  CHECK(parse_lists(serialize_lists(lists, idx), idx) == lists);

  CHECK_THROWS_AS(parse_lists(R"({"0-1":[1]})", idx), ParseError);
  CHECK_THROWS_AS(parse_lists(R"({"0-1":[1],"0-2":[0],"0-3":[2],"1~2":[0],"2~3":[4],"3~1":[7],"9-9":[1]})", idx),
                  ParseError);
  CHECK_THROWS_AS(parse_lists(R"({"0-1":[-1],"0-2":[0],"0-3":[2],"1~2":[0],"2~3":[4],"3~1":[7]})", idx),
                  ParseError);
  CHECK_THROWS_AS(parse_lists("not json", idx), ParseError);
}

TEST_CASE("coloring documents") {
  const HalinInstance h = parse_instance(kK13);
  const EdgeIndex idx(h);
  const EdgeColoring c{0, 1, 2, 3, 4, 5};
  CHECK(parse_coloring(serialize_coloring(c, idx), idx) == c);
  CHECK_THROWS_AS(parse_coloring(R"({"0-1":0})", idx), ParseError);
  CHECK_THROWS_AS(parse_coloring(R"({"0-1":"a","0-2":1,"0-3":2,"1~2":3,"2~3":4,"3~1":5})", idx), ParseError);
}

TEST_CASE("DOT view draws cycle edges dashed") {
  const HalinInstance h = parse_instance(kK13);
  const std::string dot = to_dot(h, {0, 1, 2, 3, 4, 5});
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(dot.find("dashed") != std::string::npos);
}

TEST_CASE("missing files throw") {
  CHECK_THROWS_AS(read_file("/nonexistent/halin/instance.txt"), std::runtime_error);
}
