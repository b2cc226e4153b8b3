#include "doctest.h"

#include <set>
#include <stdexcept>

#include "helpers.hpp"
#include "sandwich/families.hpp"

using namespace sandwich;
using namespace sandwich::testing;

namespace {

const Guards kGuards{};

std::uint64_t ipow_u(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    out *= base;
  }
  return out;
}

}  // namespace

TEST_CASE("top-layer index sets of the rank-two context") {
  SandwichContext ctx = ctx3();
  TopIndexSets sets = enum_index_sets(ctx);
  REQUIRE(sets.kernels.size() == 2);
  CHECK(sets.kernels[0].to_string() == "{1,2|3}");
  CHECK(sets.kernels[1].to_string() == "{1|2,3}");
  REQUIRE(sets.images.size() == 2);
  CHECK(sets.images[0] == std::vector<std::uint8_t>{1, 3});
  CHECK(sets.images[1] == std::vector<std::uint8_t>{2, 3});
}

TEST_CASE("identity contexts have singleton index sets") {
  for (int n : {2, 3, 4}) {
    SandwichContext ctx = SandwichContext::from_idempotent(Transformation::identity(n));
    TopIndexSets sets = enum_index_sets(ctx);
    CHECK(sets.kernels.size() == 1);
    CHECK(sets.images.size() == 1);
  }
}

TEST_CASE("index set cardinalities for every sandwich element, n <= 4") {
  for (int n : {1, 2, 3, 4}) {
    for (const auto& alpha : all_plain_idempotents(n)) {
      SandwichContext ctx = SandwichContext::from_idempotent(alpha);
      const int l = ctx.sandwich_rank();
      TopIndexSets sets = enum_index_sets(ctx);
      CHECK(sets.kernels.size() == ipow_u(l, n - l));
      std::uint64_t p = 1;
      for (const auto& block : ctx.blocks()) {
        p *= block.size();
      }
      CHECK(sets.images.size() == p);
      if (l >= 2) {
        for (int k = 1; k <= l; ++k) {
          for (int m = 1; m <= l; ++m) {
            if (k == m) {
              continue;
            }
            CorankIndexSets corank = enum_index_sets_lm1(ctx, k, m);
            CHECK(corank.kernels.size() == ipow_u(l - 1, n - l));
            CHECK(corank.images.size() == p / ctx.blocks()[k - 1].size());
          }
        }
      }
    }
  }
}

TEST_CASE("corank index sets of the rank-three context") {
  SandwichContext ctx = ctx4();
  for (int k = 1; k <= 3; ++k) {
    for (int m = 1; m <= 3; ++m) {
      if (k == m) {
        continue;
      }
      CHECK(enum_index_sets_lm1(ctx, k, m).kernels.size() == 2);
    }
  }
  CHECK(enum_index_sets_lm1(ctx, 1, 2).images.size() == 1);
  CHECK(enum_index_sets_lm1(ctx, 2, 1).images.size() == 2);
  CHECK(enum_index_sets_lm1(ctx, 3, 1).images.size() == 2);
  CHECK_THROWS_AS(enum_index_sets_lm1(ctx3(), 1, 1), std::invalid_argument);
  SandwichContext rank_one = SandwichContext::from_idempotent(Transformation::constant(3, 1));
  CHECK_THROWS_AS(enum_index_sets_lm1(rank_one, 1, 2), std::invalid_argument);
}

TEST_CASE("constructed idempotents match the scan, per layer, n <= 4") {
  for (int n : {2, 3, 4}) {
    for (const auto& alpha : all_plain_idempotents(n)) {
      SandwichContext ctx = SandwichContext::from_idempotent(alpha);
      const int l = ctx.sandwich_rank();
      RootClassTable table(ctx, kGuards);

      // Top layer: the constructed idempotents are exactly the scanned
      // rank-l idempotents, one per (kernel, image) pair.
      TopIndexSets sets = enum_index_sets(ctx);
      std::set<std::uint64_t> constructed;
      for (const auto& ker : sets.kernels) {
        for (const auto& img : sets.images) {
          Transformation eps = top_idempotent(ctx, ker, img);
          CHECK(kernel(eps) == ker);
          CHECK(image(eps) == img);
          constructed.insert(eps.index());
        }
      }
      std::set<std::uint64_t> scanned;
      for (std::size_t c = 0; c < table.idempotents().size(); ++c) {
        if (table.ranks()[c] == l) {
          scanned.insert(table.idempotents()[c].index());
        }
      }
      CHECK(constructed == scanned);

      // Corank layer, split by (trifle, burdened).
      if (l >= 2) {
        std::set<std::uint64_t> constructed_corank;
        for (int k = 1; k <= l; ++k) {
          for (int m = 1; m <= l; ++m) {
            if (k == m) {
              continue;
            }
            CorankIndexSets corank = enum_index_sets_lm1(ctx, k, m);
            for (const auto& ker : corank.kernels) {
              for (const auto& img : corank.images) {
                Transformation eps = corank_idempotent(ctx, k, m, ker, img);
                CHECK(kernel(eps) == ker);
                CHECK(image(eps) == img);
                RankLm1Data d = rank_lm1_data(ctx, eps);
                CHECK(d.trifle_index == k);
                CHECK(d.burdened_index == m);
                constructed_corank.insert(eps.index());
              }
            }
          }
        }
        std::set<std::uint64_t> scanned_corank;
        for (std::size_t c = 0; c < table.idempotents().size(); ++c) {
          if (table.ranks()[c] == l - 1) {
            scanned_corank.insert(table.idempotents()[c].index());
          }
        }
        CHECK(constructed_corank == scanned_corank);
      }
    }
  }
}

TEST_CASE("family element sets of the rank-two context") {
  SandwichContext ctx = ctx3();
  RootClassTable table(ctx, kGuards);
  TopIndexSets sets = enum_index_sets(ctx);

  ElementSet top = family_elements(ctx, FamilyDescriptor::f(sets.kernels, sets.images), table);
  ElementSet ideal = family_elements(
      ctx, FamilyDescriptor::root_union({Transformation::constant(3, 1),
                                         Transformation::constant(3, 2),
                                         Transformation::constant(3, 3)}),
      table);
  CHECK((top & ideal).empty());
  CHECK((top | ideal).size() == 27);

  // F restricted to alpha's own kernel and image is the root class of alpha.
  ElementSet f_alpha =
      family_elements(ctx, FamilyDescriptor::f({kernel(ctx.alpha())}, {image(ctx.alpha())}), table);
  CHECK(f_alpha.contains(ctx.alpha()));
  CHECK(f_alpha.contains(t("[3,3,1]")));
  CHECK(f_alpha == sqrt_class(ctx, ctx.alpha(), kGuards));
}

TEST_CASE("for the classical semigroup a singleton corank family is a maximal subgroup") {
  SandwichContext classical = SandwichContext::from_idempotent(Transformation::identity(3));
  RootClassTable table(classical, kGuards);
  CorankIndexSets corank = enum_index_sets_lm1(classical, 2, 1);
  REQUIRE(corank.kernels.size() == 1);
  REQUIRE(corank.images.size() == 1);
  ElementSet h = family_elements(
      classical, FamilyDescriptor::h(2, 1, corank.kernels, corank.images), table);
  // The idempotent sending 2 to 1 and fixing the rest.
  CHECK(h == sqrt_class(classical, t("[1,1,3]"), kGuards));
  CHECK(h == group_of(classical, t("[1,1,3]"), kGuards));
}

TEST_CASE("descriptor validation") {
  SandwichContext ctx = ctx3();
  RootClassTable table(ctx, kGuards);
  TopIndexSets sets = enum_index_sets(ctx);
  CHECK_THROWS_AS(family_elements(ctx, FamilyDescriptor::f({}, sets.images), table),
                  std::invalid_argument);
  CHECK_THROWS_AS(family_elements(ctx, FamilyDescriptor::ideal(), table), std::invalid_argument);
  CHECK_THROWS_AS(
      family_elements(ctx, FamilyDescriptor::l(1, {2}, enum_index_sets_lm1(ctx, 1, 2).images),
                      table),
      std::invalid_argument);
  CHECK_THROWS_AS(family_elements(ctx, FamilyDescriptor::root_union({}), table),
                  std::invalid_argument);
  SandwichContext big = ctx4();
  RootClassTable big_table(big, kGuards);
  CHECK(family_elements(big, FamilyDescriptor::ideal(), big_table).size() > 0);
}

TEST_CASE("subsets of a rectangular band are subsemigroups exactly when they are rectangles") {
  // Abstract product on a grid: (x, y) (x', y') = (x, y').
  for (auto [rows, cols] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{4, 4}}) {
    const int cells = rows * cols;
    REQUIRE(cells <= 16);
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << cells); ++mask) {
      bool closed = true;
      for (int a = 0; a < cells && closed; ++a) {
        if (!(mask >> a & 1)) {
          continue;
        }
        for (int b = 0; b < cells && closed; ++b) {
          if (!(mask >> b & 1)) {
            continue;
          }
          int product = (a / cols) * cols + b % cols;
          closed = (mask >> product & 1) != 0;
        }
      }
      std::uint32_t row_mask = 0;
      std::uint32_t col_mask = 0;
      for (int a = 0; a < cells; ++a) {
        if (mask >> a & 1) {
          row_mask |= std::uint32_t(1) << (a / cols);
          col_mask |= std::uint32_t(1) << (a % cols);
        }
      }
      bool rectangle = true;
      for (int r = 0; r < rows && rectangle; ++r) {
        for (int c = 0; c < cols && rectangle; ++c) {
          bool should = (row_mask >> r & 1) && (col_mask >> c & 1);
          rectangle = (static_cast<bool>(mask >> (r * cols + c) & 1) == should);
        }
      }
      CHECK(closed == rectangle);
    }
  }
}
