#include "doctest.h"

#include <random>
#include <stdexcept>

#include "sandwich/transformation.hpp"

using namespace sandwich;

namespace {

Transformation t(const std::string& text) { return Transformation::parse(text); }

Transformation random_map(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> dist(1, n);
  std::vector<std::uint8_t> img(n);
  for (auto& v : img) {
    v = static_cast<std::uint8_t>(dist(rng));
  }
  return Transformation(img);
}

}  // namespace

TEST_CASE("composition is left to right") {
  CHECK(compose(t("[2,3,1]"), t("[1,1,2]")) == t("[1,2,1]"));
  CHECK(compose(t("[2,3,1]"), Transformation::identity(3)) == t("[2,3,1]"));
  CHECK(compose(Transformation::identity(3), t("[2,3,1]")) == t("[2,3,1]"));
  // A constant map followed by gamma is the constant at gamma's value.
  CHECK(compose(Transformation::constant(3, 1), t("[3,2,1]")) == Transformation::constant(3, 3));
}

TEST_CASE("composition requires equal degrees") {
  CHECK_THROWS_AS(compose(t("[1,2]"), t("[1,2,3]")), std::invalid_argument);
}

TEST_CASE("kernel, image and rank") {
  Transformation beta = t("[1,1,3]");
  CHECK(kernel(beta).to_string() == "{1,2|3}");
  CHECK(image(beta) == std::vector<std::uint8_t>{1, 3});
  CHECK(rank(beta) == 2);

  CHECK(kernel(Transformation::identity(4)).block_count() == 4);
  CHECK(rank(Transformation::identity(4)) == 4);

  CHECK(kernel(Transformation::constant(3, 2)).to_string() == "{1,2,3}");
  CHECK(rank(Transformation::constant(3, 2)) == 1);
}

TEST_CASE("rank of a composition never exceeds either factor") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    Transformation beta = random_map(rng, 5);
    Transformation gamma = random_map(rng, 5);
    CHECK(rank(compose(beta, gamma)) <= std::min(rank(beta), rank(gamma)));
  }
}

TEST_CASE("plain composition is associative") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    Transformation a = random_map(rng, 5);
    Transformation b = random_map(rng, 5);
    Transformation c = random_map(rng, 5);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("dense index codec is a bijection") {
  const std::uint64_t total = universe_size(3);
  CHECK(total == 27);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    CHECK(Transformation::from_index(3, idx).index() == idx);
  }
  CHECK(universe_size(5) == 3125);
  CHECK_THROWS_AS(universe_size(16), std::overflow_error);
}

TEST_CASE("transformation parsing and validation") {
  CHECK(t("[2,3,1]").to_string() == "[2,3,1]");
  CHECK(Transformation::parse(" [ 2 , 3 , 1 ] ") == t("[2,3,1]"));
  CHECK_THROWS_WITH_AS(Transformation::parse("[1,4,2]"), doctest::Contains("entry 2"),
                       std::invalid_argument);
  CHECK_THROWS_AS(Transformation::parse("[1,2"), std::invalid_argument);
  CHECK_THROWS_AS(Transformation::parse("1,2]"), std::invalid_argument);
  CHECK_THROWS_AS(Transformation::parse("[]"), std::invalid_argument);
  CHECK_THROWS_AS(Transformation::parse("[1,2,3]x"), std::invalid_argument);
  CHECK_THROWS_AS(Transformation::parse("[1,2]", 3), std::invalid_argument);
  CHECK_THROWS_AS(Transformation(std::vector<std::uint8_t>{1, 0}), std::invalid_argument);
}

TEST_CASE("partition canonical form and parsing") {
  Partition p = kernel(t("[3,1,3,1]"));
  CHECK(p.to_string() == "{1,3|2,4}");
  CHECK(p.block_count() == 2);
  CHECK(p.block_of(1) == p.block_of(3));
  CHECK(p.block_of(1) != p.block_of(2));

  CHECK(Partition::parse("{1,3|2,4}") == p);
  CHECK(Partition::parse("{2,4|3,1}") == p);  // canonicalized
  CHECK(Partition::parse("{1,2|3}").to_string() == "{1,2|3}");
  CHECK_THROWS_AS(Partition::parse("{1,2|2,3}"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("{1,3}"), std::invalid_argument);  // 2 missing
}

TEST_CASE("partition refinement") {
  Partition fine = Partition::parse("{1|2|3,4}");
  Partition coarse = Partition::parse("{1,2|3,4}");
  CHECK(fine.refines(coarse));
  CHECK(!coarse.refines(fine));
  CHECK(fine.refines(fine));
}
