#pragma once
//
// JSON rendering of contexts, idempotent records, classification lists and
// verification reports.  Field order is fixed and all iteration is over
// sorted containers, so identical inputs produce byte-identical output.
// Big-integer values are rendered as decimal strings.

#include "json.hpp"  // vendored nlohmann/json

#include "sandwich/classification.hpp"
#include "sandwich/idempotents.hpp"
#include "sandwich/oracle.hpp"
#include "sandwich/variants.hpp"

namespace sandwich {

using Json = nlohmann::ordered_json;

Json context_json(const SandwichContext& ctx);
Json idempotent_info_json(const IdempotentInfo& info);
Json descriptor_json(const FamilyDescriptor& d);
Json family_json(const ClassifiedFamily& fam, bool with_elements);
Json element_set_json(const ElementSet& set, bool with_elements);
Json counts_json(const oracle::CountReport& counts);
Json count_formulas_json(const IsolatedCountFormulas& formulas);
Json comparison_json(const oracle::ListComparison& cmp, bool with_elements);
Json report_json(const oracle::Report& report, bool with_elements);

}  // namespace sandwich
