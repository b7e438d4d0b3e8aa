#include <doctest.h>

#include <random>

#include "neuralcode/bits.hpp"
#include "oracles.hpp"

using namespace neuralcode;

TEST_CASE("minimal and maximal sets") {
  CHECK(minimal_sets({7, 3, 1, 6, 3}) == std::vector<Mask>{1, 6});
  CHECK(maximal_sets({7, 3, 1, 8}) == std::vector<Mask>{7, 8});
  CHECK(is_antichain(std::vector<Mask>{1, 2, 4}));
  CHECK_FALSE(is_antichain(std::vector<Mask>{1, 3}));
}

TEST_CASE("minimal transversals edge cases") {
  CHECK(minimal_transversals({}) == std::vector<Mask>{0});
  CHECK(minimal_transversals(std::vector<Mask>{0}).empty());
  CHECK(minimal_transversals(std::vector<Mask>{0b110}) == std::vector<Mask>{0b010, 0b100});
  CHECK(minimal_transversals_by_product({}) == std::vector<Mask>{0});
  CHECK(minimal_transversals_by_product(std::vector<Mask>{0}).empty());
}

TEST_CASE("both transversal algorithms agree with a subset scan") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int vertices = 1 + static_cast<int>(rng() % 8);
    const int count = static_cast<int>(rng() % 6);
    std::vector<Mask> edges;
    for (int k = 0; k < count; ++k) edges.push_back(static_cast<Mask>(rng()) & full_mask(vertices));
    // Minimal hitting sets by definition.
    std::vector<Mask> expected;
    auto hits = [&](Mask s) {
      return std::all_of(edges.begin(), edges.end(), [&](Mask e) { return (e & s) != 0; });
    };
    for (Mask s = 0; s < (Mask{1} << vertices); ++s) {
      if (!hits(s)) continue;
      bool minimal = true;
      for (int v = 0; v < vertices; ++v)
        if ((s >> v & 1) && hits(s & ~(Mask{1} << v))) minimal = false;
      if (minimal) expected.push_back(s);
    }
    CHECK(minimal_transversals(edges) == expected);
    CHECK(minimal_transversals_by_product(edges) == expected);
  }
}
