#pragma once
//
// Complete lists of isolated / completely isolated / one-sided convex /
// convex subsemigroups of (T_n, *), with the closed-form counts.
//
// The isolated list is assembled per the case split on l = rank(alpha):
//   l = 1:  unions of root classes of the constant maps (all such unions are
//           *-closed);
//   l = 2:  F(X,Y) and F(X,Y) together with the rank-one ideal, plus those
//           unions of constant-map root classes that are *-closed (the closed
//           ones are exactly the unions inside a single block side plus the
//           full ideal; mixed unions fail closure, so candidates are filtered
//           by an explicit product check);
//   l > 2:  F / H / K / L families, the ideal of stable rank < l, and
//           F(X,Y) united with that ideal.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sandwich/bigint.hpp"
#include "sandwich/context.hpp"
#include "sandwich/element_set.hpp"
#include "sandwich/families.hpp"
#include "sandwich/guards.hpp"

namespace sandwich {

struct ClassifiedFamily {
  FamilyDescriptor descriptor;
  ElementSet elements;
};

enum class Side { Left, Right };

std::vector<ClassifiedFamily> enumerate_isolated(const SandwichContext& ctx, const Guards& guards);
std::vector<ClassifiedFamily> enumerate_completely_isolated(const SandwichContext& ctx,
                                                            const Guards& guards);
std::vector<ClassifiedFamily> enumerate_one_sided_convex(const SandwichContext& ctx, Side side,
                                                         const Guards& guards);
std::vector<ClassifiedFamily> enumerate_convex(const SandwichContext& ctx, const Guards& guards);

// Closed-form counts, exact big-integer arithmetic, no guards.
struct IsolatedCountFormulas {
  // The one-line closed form for this l.  For l = 2 and l > 2 it disagrees
  // with the family-level count; the enumeration is authoritative.
  BigInt closed_form;
  // Family-level closed forms keyed by tag, and their total.
  std::map<std::string, BigInt> per_family;
  BigInt family_total;
  // l = 2 only: the size of the candidate list in which every union of
  // constant-map root classes is included, before the closure filter.
  std::optional<BigInt> all_root_unions_total;
};

IsolatedCountFormulas isolated_count_formulas(const SandwichContext& ctx);

// Least isolated subsemigroup containing beta: alternates *-closure with
// root completion (adding every element some *-power of which is inside).
ElementSet minimal_isolated(const SandwichContext& ctx, const Transformation& beta,
                            const Guards& guards);

// The partition of T_n induced by the convex subsemigroups: nonempty
// intersections of each proper convex T_i or its complement.  Verifies that
// the partition is a congruence for * and that every class is isolated.
std::vector<ElementSet> convex_congruence(const SandwichContext& ctx, const Guards& guards);

}  // namespace sandwich
