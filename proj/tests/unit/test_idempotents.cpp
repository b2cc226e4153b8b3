#include "doctest.h"

#include <map>
#include <set>
#include <stdexcept>

#include "helpers.hpp"
#include "sandwich/idempotents.hpp"

using namespace sandwich;
using namespace sandwich::testing;

namespace {

const Guards kGuards{};

std::uint64_t factorial(int k) {
  std::uint64_t out = 1;
  for (int i = 2; i <= k; ++i) {
    out *= i;
  }
  return out;
}

}  // namespace

TEST_CASE("idempotents of the rank-two context") {
  SandwichContext ctx = ctx3();
  auto infos = enumerate_idempotents(ctx, kGuards);
  std::set<std::string> elements;
  for (const auto& info : infos) {
    elements.insert(info.element.to_string());
  }
  CHECK(elements == std::set<std::string>{"[1,1,1]", "[1,1,3]", "[1,3,3]", "[2,2,2]", "[2,2,3]",
                                          "[2,3,3]", "[3,3,3]"});
  CHECK(count_idempotents_formula(ctx) == 7);
}

TEST_CASE("the scan guard refuses large degrees and names the bound") {
  SandwichContext ctx = SandwichContext::from_idempotent(Transformation::identity(6));
  CHECK_THROWS_WITH_AS(enumerate_idempotents(ctx, kGuards), doctest::Contains("3125"),
                       GuardError);
  Guards wide;
  wide.max_scan = 46656;
  CHECK_NOTHROW(enumerate_idempotents(ctx, wide));
}

TEST_CASE("rank-one sandwich elements have exactly the constant idempotents") {
  SandwichContext ctx = SandwichContext::from_idempotent(Transformation::constant(3, 1));
  auto infos = enumerate_idempotents(ctx, kGuards);
  REQUIRE(infos.size() == 3);
  for (const auto& info : infos) {
    CHECK(info.rank == 1);
  }
  CHECK(count_idempotents_formula(ctx) == 3);
}

TEST_CASE("idempotent count formula at identity sandwich elements") {
  CHECK(count_idempotents_formula(SandwichContext::from_idempotent(Transformation::identity(3))) ==
        10);
  CHECK(count_idempotents_formula(SandwichContext::from_idempotent(Transformation::identity(5))) ==
        196);
  CHECK(count_idempotents_formula(SandwichContext::from_idempotent(Transformation::identity(10)))
            .str() == "2237921");
}

TEST_CASE("structural and definitional idempotent checks agree on every map, n <= 4") {
  for (int n : {1, 2, 3, 4}) {
    auto maps = all_maps(n);
    for (const auto& alpha : all_plain_idempotents(n)) {
      SandwichContext ctx = SandwichContext::from_idempotent(alpha);
      for (const auto& eps : maps) {
        auto structural = structural_idempotent_check(ctx, eps);
        REQUIRE(structural.has_value() == is_variant_idempotent(ctx, eps));
        if (structural) {
          CHECK(structural->element == eps);
          CHECK(structural->rank == rank(eps));
          // f(i) names the alpha-block of e_i, and its representative lies in E_i.
          for (int i = 0; i < structural->rank; ++i) {
            int f = structural->injection[i];
            CHECK(ctx.block_index(structural->block_images[i]) == f - 1);
            CHECK(structural->kernel_blocks.block_of(ctx.reps()[f - 1]) == i);
          }
        }
      }
    }
  }
}

TEST_CASE("idempotent scan count equals the formula for every sandwich element, n <= 4") {
  for (int n : {1, 2, 3, 4}) {
    for (const auto& alpha : all_plain_idempotents(n)) {
      SandwichContext ctx = SandwichContext::from_idempotent(alpha);
      CHECK(BigInt(enumerate_idempotents(ctx, kGuards).size()) == count_idempotents_formula(ctx));
    }
  }
}

TEST_CASE("the structural example from the rank-two context") {
  SandwichContext ctx = ctx3();
  auto info = structural_idempotent_check(ctx, t("[2,2,3]"));
  REQUIRE(info);
  CHECK(info->injection == std::vector<int>{1, 2});
  CHECK(!structural_idempotent_check(ctx, Transformation::identity(3)));
  CHECK(structural_idempotent_check(ctx, ctx.alpha()));
}

TEST_CASE("root classes partition the semigroup") {
  SandwichContext ctx = ctx3();
  RootClassTable table(ctx, kGuards);
  REQUIRE(table.class_count() == 7);
  std::uint64_t covered = 0;
  for (int c = 0; c < table.class_count(); ++c) {
    covered += table.class_set(c).size();
  }
  CHECK(covered == 27);

  Transformation theta2 = Transformation::constant(3, 2);
  ElementSet cls = sqrt_class(ctx, theta2, kGuards);
  CHECK(cls.contains(theta2));
  CHECK(cls.contains(t("[2,3,1]")));
  CHECK(cls == table.class_set(table.class_of_idempotent(theta2)));
  CHECK_THROWS_AS(sqrt_class(ctx, t("[2,3,1]"), kGuards), std::invalid_argument);
}

TEST_CASE("maximal subgroups") {
  SandwichContext ctx = ctx3();
  ElementSet g = group_of(ctx, ctx.alpha(), kGuards);
  CHECK(g.size() == 2);
  CHECK(g.contains(t("[1,1,3]")));
  CHECK(g.contains(t("[3,3,1]")));
  CHECK(group_membership(ctx, ctx.alpha(), t("[3,3,1]")));
  CHECK(!group_membership(ctx, ctx.alpha(), t("[1,3,3]")));

  CHECK(group_of(ctx, Transformation::constant(3, 1), kGuards).size() == 1);

  SandwichContext classical = SandwichContext::from_idempotent(Transformation::identity(3));
  CHECK(group_of(classical, Transformation::identity(3), kGuards).size() == 6);
}

TEST_CASE("group order is rank factorial for every idempotent, n <= 4") {
  for (int n : {1, 2, 3, 4}) {
    auto maps = all_maps(n);
    for (const auto& alpha : all_plain_idempotents(n)) {
      SandwichContext ctx = SandwichContext::from_idempotent(alpha);
      // One pass: tally the (kernel, image) signatures, then look up each
      // idempotent.
      std::map<std::pair<std::string, std::vector<std::uint8_t>>, std::uint64_t> tally;
      for (const auto& beta : maps) {
        ++tally[{kernel(beta).to_string(), image(beta)}];
      }
      for (const auto& info : enumerate_idempotents(ctx, kGuards)) {
        CHECK(tally[{info.kernel_blocks.to_string(), image(info.element)}] ==
              factorial(info.rank));
      }
    }
  }
}

TEST_CASE("distinguished pair, trifle and burdened element") {
  SandwichContext classical = SandwichContext::from_idempotent(Transformation::identity(3));

  RankLm1Data d = rank_lm1_data(classical, t("[1,1,3]"));
  CHECK(d.distinguished == std::pair<int, int>{1, 2});
  CHECK(d.burdened == 1);
  CHECK(d.trifle == 2);
  CHECK(d.burdened_index == 1);
  CHECK(d.trifle_index == 2);

  d = rank_lm1_data(classical, t("[3,2,3]"));
  CHECK(d.distinguished == std::pair<int, int>{1, 3});
  CHECK(d.burdened == 3);
  CHECK(d.trifle == 1);

  SandwichContext ctx = ctx3();
  d = rank_lm1_data(ctx, Transformation::constant(3, 2));
  CHECK(d.burdened == 1);
  CHECK(d.trifle == 3);
  CHECK(d.distinguished == std::pair<int, int>{1, 3});

  CHECK_THROWS_AS(rank_lm1_data(ctx, ctx.alpha()), std::invalid_argument);
  CHECK_THROWS_AS(rank_lm1_data(classical, Transformation::identity(3)), std::invalid_argument);
}

TEST_CASE("phi_l and phi_r are homomorphisms preserving the stable rank") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 3 + trial % 3;
    SandwichContext ctx = SandwichContext::from_idempotent(random_plain_idempotent(rng, n));
    Transformation beta = random_map(rng, n);
    Transformation gamma = random_map(rng, n);
    CHECK(phi_r(ctx, ctx.product(beta, gamma)) ==
          compose(phi_r(ctx, beta), phi_r(ctx, gamma)));
    CHECK(phi_l(ctx, ctx.product(beta, gamma)) ==
          compose(phi_l(ctx, beta), phi_l(ctx, gamma)));
    int strk = stable_rank(ctx, beta);
    CHECK(stable_rank(ctx, phi_l(ctx, beta)) == strk);
    CHECK(stable_rank(ctx, phi_r(ctx, beta)) == strk);
  }
}

TEST_CASE("phi_bar restriction") {
  SandwichContext ctx = ctx3();
  CHECK(phi_bar(ctx, ctx.alpha()) == Transformation::identity(2));
  // [2,3,1] sends both representatives to a_1: the restriction is constant.
  CHECK(phi_bar(ctx, t("[2,3,1]")) == Transformation::constant(2, 1));
}

TEST_CASE("phi_bar is a bijection exactly on the stable-rank-l elements, n <= 3") {
  for (int n : {1, 2, 3}) {
    for (const auto& alpha : all_plain_idempotents(n)) {
      SandwichContext ctx = SandwichContext::from_idempotent(alpha);
      for (const auto& beta : all_maps(n)) {
        bool bijective = rank(phi_bar(ctx, beta)) == ctx.sandwich_rank();
        CHECK(bijective == (stable_rank(ctx, beta) == ctx.sandwich_rank()));
      }
    }
  }
}

TEST_CASE("top-layer elements: stable kernel and image read off from one product") {
  for (int n : {2, 3}) {
    for (const auto& alpha : all_plain_idempotents(n)) {
      SandwichContext ctx = SandwichContext::from_idempotent(alpha);
      const int l = ctx.sandwich_rank();
      for (const auto& beta : all_maps(n)) {
        if (stable_rank(ctx, beta) != l) {
          continue;
        }
        StableData d = stable_data(ctx, beta);
        CHECK(d.stable_kernel == kernel(compose(beta, ctx.alpha())));
        CHECK(d.stable_image == image(compose(ctx.alpha(), beta)));
        // im(alpha beta) is the image of the representatives under beta.
        std::set<std::uint8_t> rep_image;
        for (std::uint8_t a : ctx.reps()) {
          rep_image.insert(static_cast<std::uint8_t>(beta(a)));
        }
        CHECK(std::vector<std::uint8_t>(rep_image.begin(), rep_image.end()) == d.stable_image);
      }
    }
  }
}

TEST_CASE("top-layer products: kernel from the left factor, image from the right, n <= 4") {
  for (int n : {2, 3, 4}) {
    for (const auto& alpha : all_plain_idempotents(n)) {
      SandwichContext ctx = SandwichContext::from_idempotent(alpha);
      const int l = ctx.sandwich_rank();
      std::vector<Transformation> top;
      std::vector<StableData> data;
      for (const auto& beta : all_maps(n)) {
        StableData d = stable_data(ctx, beta);
        if (d.stable_rank == l) {
          top.push_back(beta);
          data.push_back(std::move(d));
        }
      }
      for (std::size_t i = 0; i < top.size(); ++i) {
        for (std::size_t j = 0; j < top.size(); ++j) {
          StableData dp = stable_data(ctx, ctx.product(top[i], top[j]));
          REQUIRE(dp.stable_rank == l);
          REQUIRE(dp.stable_kernel == data[i].stable_kernel);
          REQUIRE(dp.stable_image == data[j].stable_image);
        }
      }
    }
  }
}

TEST_CASE("trifle and burdened data propagate through corank-one products, n <= 3") {
  for (int n : {2, 3}) {
    for (const auto& alpha : all_plain_idempotents(n)) {
      SandwichContext ctx = SandwichContext::from_idempotent(alpha);
      const int l = ctx.sandwich_rank();
      if (l < 2) {
        continue;
      }
      std::vector<Transformation> corank;
      for (const auto& beta : all_maps(n)) {
        if (stable_rank(ctx, beta) == l - 1) {
          corank.push_back(beta);
        }
      }
      for (const auto& beta : corank) {
        RankLm1Data db = rank_lm1_data(ctx, idempotent_power(ctx, beta).element);
        for (const auto& gamma : corank) {
          Transformation prod = ctx.product(beta, gamma);
          if (stable_rank(ctx, prod) != l - 1) {
            continue;
          }
          RankLm1Data dg = rank_lm1_data(ctx, idempotent_power(ctx, gamma).element);
          RankLm1Data dp = rank_lm1_data(ctx, idempotent_power(ctx, prod).element);
          CHECK(dp.distinguished == db.distinguished);
          CHECK(dp.trifle == dg.trifle);
        }
      }
    }
  }
}

TEST_CASE("root classes are closed exactly in ranks l and l-1, n <= 4") {
  for (int n : {1, 2, 3, 4}) {
    for (const auto& alpha : all_plain_idempotents(n)) {
      SandwichContext ctx = SandwichContext::from_idempotent(alpha);
      const int l = ctx.sandwich_rank();
      RootClassTable table(ctx, kGuards);
      for (int c = 0; c < table.class_count(); ++c) {
        ElementSet cls = table.class_set(c);
        auto members = cls.to_indices();
        bool closed = true;
        for (std::uint64_t a : members) {
          Transformation ta = Transformation::from_index(n, a);
          for (std::uint64_t b : members) {
            if (!cls.contains(ctx.product(ta, Transformation::from_index(n, b)))) {
              closed = false;
              break;
            }
          }
          if (!closed) {
            break;
          }
        }
        CHECK(closed == (table.ranks()[c] == l || table.ranks()[c] == l - 1));
      }
    }
  }
}
