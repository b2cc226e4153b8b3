#pragma once
//
// Definition-level brute force, independent of the family machinery: it
// shares only the core arithmetic (products, powers) with the classification
// module.  Subsemigroup and closure checks, the literal isolated /
// completely-isolated / convex predicates, exhaustive enumeration of all
// isolated subsemigroups as *-closed unions of root classes, and the
// set-for-set comparison report.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sandwich/bigint.hpp"
#include "sandwich/context.hpp"
#include "sandwich/element_set.hpp"
#include "sandwich/guards.hpp"

namespace sandwich::oracle {

// Rejects empty input: the subsemigroups under study are nonempty.
bool is_subsemigroup(const SandwichContext& ctx, const ElementSet& set);
ElementSet closure(const SandwichContext& ctx, const ElementSet& set);

// Literal quantifier checks over all of T_n; the isolated check walks each
// element's distinct *-powers.  All require a nonempty subsemigroup and the
// scan guard.
bool is_isolated_def(const SandwichContext& ctx, const ElementSet& set, const Guards& guards);
bool is_ci_def(const SandwichContext& ctx, const ElementSet& set, const Guards& guards);
bool is_rc_def(const SandwichContext& ctx, const ElementSet& set, const Guards& guards);
bool is_lc_def(const SandwichContext& ctx, const ElementSet& set, const Guards& guards);
bool is_convex_def(const SandwichContext& ctx, const ElementSet& set, const Guards& guards);

// Complement characterizations: a subsemigroup is completely isolated / right
// convex / left convex / convex exactly when its complement is empty or a
// subsemigroup / left ideal / right ideal / two-sided ideal.
bool complement_is_empty_or_subsemigroup(const SandwichContext& ctx, const ElementSet& set);
bool complement_is_empty_or_left_ideal(const SandwichContext& ctx, const ElementSet& set);
bool complement_is_empty_or_right_ideal(const SandwichContext& ctx, const ElementSet& set);
bool complement_is_empty_or_ideal(const SandwichContext& ctx, const ElementSet& set);

// Every isolated subsemigroup is a *-closed union of root classes, and every
// such union is isolated.  Enumerates all nonempty subsets of the idempotent
// set (guarded by |E| <= max_subset_idempotents); with the pruned-search flag
// a closure-driven enumeration handles |E| up to 30.  Output is sorted
// lexicographically by bit-vector.
std::vector<ElementSet> brute_isolated_all(const SandwichContext& ctx, const Guards& guards);

struct ListComparison {
  std::string status;  // "pass" | "fail" | "skipped"
  std::string mode;    // "exact" | "definitional" | "none"
  std::string note;
  std::uint64_t expected_count = 0;
  std::uint64_t actual_count = 0;
  std::vector<ElementSet> missing;  // expected by the oracle, absent from the lists
  std::vector<ElementSet> extra;    // emitted by the lists, rejected by the oracle
};

struct CountReport {
  BigInt closed_form;
  BigInt family_total;
  std::optional<BigInt> all_root_unions_total;
  std::map<std::string, BigInt> per_family_formula;
  std::map<std::string, std::uint64_t> per_family_enumerated;
  std::uint64_t enumerated = 0;
  std::optional<std::uint64_t> oracle_count;
  bool closed_form_matches = false;
  bool family_total_matches = false;
};

struct Report {
  std::string verdict;  // "pass" | "fail" | "partial(skips)"
  ListComparison isolated;
  ListComparison completely_isolated;
  ListComparison left_convex;
  ListComparison right_convex;
  ListComparison convex;
  CountReport counts;
  std::uint64_t idempotent_scan_count = 0;
  BigInt idempotent_formula_count;
  bool idempotents_agree = false;
  bool isolated_sets_distinct = false;
  std::vector<std::string> notes;
};

Report verify_classification(const SandwichContext& ctx, const Guards& guards);

}  // namespace sandwich::oracle
