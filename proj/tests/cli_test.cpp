#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wordrep/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = wordrep::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  return ("\n" + text).find("\n" + line + "\n") != std::string::npos;
}

}  // namespace

TEST_CASE("repnum on the triangular prism") {
  const auto r = run({"repnum", "prism:3"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "representation_number: 3"));
  CHECK(r.out.find("attempt: k=1 status=exhausted") != std::string::npos);
  CHECK(r.out.find("attempt: k=2 status=exhausted") != std::string::npos);
  CHECK(r.out.find("attempt: k=3 status=witness-found") != std::string::npos);
  CHECK(r.out.find("elapsed_ms") == std::string::npos);
}

TEST_CASE("deterministic reports are byte-identical across runs and workers") {
  const auto a = run({"repnum", "--graph", "prism:4", "--jobs", "1"});
  const auto b = run({"repnum", "--graph", "prism:4", "--jobs", "4"});
  const auto c = run({"repnum", "--graph", "prism:4", "--jobs", "1"});
  CHECK(a.out == c.out);
  CHECK(a.out.substr(a.out.find("graph:")) == b.out.substr(b.out.find("graph:")));
  const auto timed = run({"find", "cycle:5", "--k", "2", "--deterministic", "false"});
  CHECK(timed.out.find("elapsed_ms: ") != std::string::npos);
}

TEST_CASE("check the Petersen word") {
  const auto r = run({"check", "--graph", "petersen", "--word",
                      "1 3 8 7 2 9 6 10 7 4 9 3 5 4 1 2 8 3 10 7 6 8 5 10 1 9 4 5 6 2"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "represents: true"));
  CHECK(has_line(r.out, "uniform: 3"));
  const auto bad = run({"check", "--graph", "complete:2", "--word", "1122"});
  CHECK(bad.code == 1);
  CHECK(has_line(bad.out, "represents: false"));
}

TEST_CASE("tables") {
  const auto ladder = run({"tables", "ladder", "--max", "5"});
  CHECK(ladder.code == 0);
  CHECK(ladder.out ==
        "1: 1 1' 1 1'\n"
        "2: 1' 2 1 2' 2 1' 2' 1\n"
        "3: 1 2' 1' 3 2 3' 3 2' 3' 1 2 1'\n"
        "4: 1' 2 1 3' 2' 4 3 4' 4 3' 4' 2 3 1' 2' 1\n"
        "5: 1 2' 1' 3 2 4' 3' 5 4 5' 5 4' 5' 3 4 2' 3' 1 2 1'\n");
  const auto crown = run({"tables", "crown", "--max", "2", "--compact"});
  CHECK(crown.out == "1: 11'1'1\n2: 12'21'21'12'\n");
}

TEST_CASE("find, orient and perm") {
  CHECK(run({"find", "prism:3", "--k", "2"}).code == 1);
  const auto f = run({"find", "prism:3", "--k", "3"});
  CHECK(f.code == 0);
  CHECK(has_line(f.out, "status: witness-found"));
  const auto o = run({"orient", "cycle:5"});
  CHECK(o.code == 0);
  const auto perm = run({"perm", "cycle:5"});
  CHECK(perm.code == 1);
  const auto p3 = run({"perm", "path:3"});
  CHECK(p3.code == 0);
  CHECK(has_line(p3.out, "dimension: 2"));
}

TEST_CASE("graphs and words from stdin and files") {
  const auto r = run({"find", "--graph", "-", "--k", "2"}, "vertices: a b c\na b\nb c\n");
  CHECK(r.code == 0);
  const auto path = (std::filesystem::temp_directory_path() / "wordrep_cli_test_word.txt").string();
  {
    std::ofstream f(path);
    f << "1 2 1 2\n";
  }
  CHECK(run({"check", "--graph", "complete:2", "--word", path}).code == 0);
  std::remove(path.c_str());
  const auto b = run({"build", "prism", "3"});
  CHECK(b.out.rfind("vertices: 1 2 3 1' 2' 3'\n", 0) == 0);
}

TEST_CASE("errors and refusals") {
  const auto parse = run({"find", "--graph", "-", "--k", "2"}, "vertices: a b\na c c\n");
  CHECK(parse.code == 2);
  CHECK(parse.err.find("2:") != std::string::npos);
  CHECK(run({"find", "prism:20", "--k", "3"}).code == 2);
  CHECK(run({"repnum", "petersen:10", "--max-k", "3"}).code == 0);
  CHECK(run({"repnum", "prism:6"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"find", "--graph", "prism:3"}).code == 2);
  CHECK(run({"tables", "stairs", "--max", "3"}).code == 2);
  CHECK(run({"chord", "--word", "123"}).code == 2);
}

TEST_CASE("transform subcommand") {
  const auto leaf = run({"transform", "leaf", "--word", "1212", "--x", "1", "--y", "3"});
  CHECK(leaf.code == 0);
  CHECK(has_line(leaf.out, "verified: true"));
  const auto glue = run({"transform", "glue", "--word", "x1 x x1 x", "--word2", "y y1 y y1", "--x", "x", "--y", "y"});
  CHECK(has_line(glue.out, "word: x1 z x1 y1 z y1"));
  const auto lifted = run({"transform", "connect", "--word", "123", "--word2", "a b a b", "--x", "1", "--y", "a"});
  CHECK(lifted.code == 0);
  CHECK(has_line(lifted.out, "uniform: 2"));
  const auto cone = run({"transform", "cone", "--perms", "1 2 3' 3 2' 1' 1 3 2' 2 3' 1' 2 3 1' 1 3' 2'"});
  CHECK(has_line(cone.out, "graph: vertices=7 edges=12"));
  CHECK(run({"transform", "module", "--word", "1212", "--x", "1", "--perms", "a b c"}).code == 0);
  CHECK(run({"transform", "cycle", "--n", "7"}).code == 0);
  CHECK(run({"transform", "tree", "--graph", "path:4"}).code == 0);
  CHECK(run({"transform", "tree", "--graph", "cycle:4"}).code == 2);
  CHECK(run({"transform", "nope"}).code == 2);
}

TEST_CASE("chord export") {
  const auto svg = run({"chord", "--word", "1212"});
  CHECK(svg.code == 0);
  CHECK(svg.out.rfind("<svg", 0) == 0);
}

TEST_CASE("digest") {
  CHECK(wordrep::cli::fnv1a_hex("") == "cbf29ce484222325");
  CHECK(wordrep::cli::fnv1a_hex("a") == "af63dc4c8601ec8c");
}
