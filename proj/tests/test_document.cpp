#include <doctest.h>

#include <random>

#include "neuralcode/document.hpp"
#include "neuralcode/errors.hpp"
#include "support.hpp"

using namespace neuralcode;
using namespace neuralcode::testing;

namespace {

int error_line(const std::string& text) {
  try {
    parse_code(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("binary strings") {
  CHECK(parse_code("n=3\n000\n010\n001\n110\n101") == running_code());
}

TEST_CASE("full and empty codes are rejected") {
  CHECK_THROWS_AS(parse_code("n=1\n1\n0"), ParseError);
  CHECK(error_line("n=1\n1\n0") == 3);
  CHECK(error_line("n=2\n# nothing\n") == 2);
}

TEST_CASE("mixed syntax, comments and blank lines") {
  CHECK(parse_code("n=3\n{2,3}\n110") == make_code(3, {"23", "12"}));
  CHECK(parse_code("# header comment\n\nn = 3  # three neurons\n{}\n 2 \n3\n\n12 # pair\n13\n") ==
        running_code());
}

TEST_CASE("duplicates are dropped with a warning") {
  std::vector<std::string> warnings;
  Code c = parse_code("n=2\n10\n1\n{1}\n", &warnings);
  CHECK(c == make_code(2, {"1"}));
  REQUIRE(warnings.size() == 2);
  CHECK(warnings[0] == "line 3: duplicate codeword 1 ignored");
}

TEST_CASE("large n needs brace lists") {
  Code c = parse_code("n=11\n{2,11}\n{}\n00000000001\n");
  CHECK(c.size() == 3);
  CHECK(c.contains(Codeword{neuron_bit(2) | neuron_bit(11)}));
  CHECK(error_line("n=11\n12\n") == 2);
}

TEST_CASE("error positions") {
  CHECK(error_line("3\n000\n") == 1);
  CHECK(error_line("n=0\n") == 1);
  CHECK(error_line("n=17\n") == 1);
  CHECK(error_line("n=x\n") == 1);
  CHECK(error_line("n=3\n000\n4\n") == 3);
  CHECK(error_line("n=3\n000\n{1,4}\n") == 3);
  CHECK(error_line("n=3\n000\n{1,\n") == 3);
  CHECK(error_line("n=3\n000\n01a\n") == 3);
  CHECK(error_line("") == 1);
  CHECK_THROWS_WITH_AS(parse_code("n=3\n000\n4\n"), "line 3: neuron 4 is outside [3]", ParseError);
}

TEST_CASE("render then parse returns the same code") {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 1000; ++k) {
    Code c = random_code(1 + k % 6, rng);
    CHECK(parse_code(render_code(c)) == c);
  }
  CHECK(render_code(running_code()) == "n=3\n000\n010\n110\n001\n101\n");
}
