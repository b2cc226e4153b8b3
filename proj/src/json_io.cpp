#include "sandwich/json_io.hpp"

#include <sstream>

namespace sandwich {

namespace {

std::string big_string(const BigInt& value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

Json image_json(const std::vector<std::uint8_t>& image) {
  Json out = Json::array();
  for (std::uint8_t x : image) {
    out.push_back(int(x));
  }
  return out;
}

}  // namespace

Json context_json(const SandwichContext& ctx) {
  Json out;
  out["n"] = ctx.degree();
  out["alpha"] = ctx.alpha().to_string();
  out["l"] = ctx.sandwich_rank();
  Json blocks = Json::array();
  for (const auto& block : ctx.blocks()) {
    blocks.push_back(image_json(block));
  }
  out["blocks"] = std::move(blocks);
  out["reps"] = image_json(ctx.reps());
  return out;
}

Json idempotent_info_json(const IdempotentInfo& info) {
  Json out;
  out["element"] = info.element.to_string();
  out["rank"] = info.rank;
  out["kernel"] = info.kernel_blocks.to_string();
  out["image"] = image_json(info.block_images);
  out["injection"] = info.injection;
  if (info.corank_one) {
    Json c;
    c["distinguished"] = {info.corank_one->distinguished.first,
                          info.corank_one->distinguished.second};
    c["trifle"] = info.corank_one->trifle;
    c["burdened"] = info.corank_one->burdened;
    c["trifle_index"] = info.corank_one->trifle_index;
    c["burdened_index"] = info.corank_one->burdened_index;
    out["corank_one"] = std::move(c);
  }
  return out;
}

Json descriptor_json(const FamilyDescriptor& d) {
  Json out;
  out["tag"] = d.tag_name();
  out["text"] = d.to_string();
  using Tag = FamilyDescriptor::Tag;
  if (d.tag == Tag::H || d.tag == Tag::K) {
    out["k"] = d.k;
    out["m"] = d.m;
  }
  if (d.tag == Tag::L) {
    out["k"] = d.k;
    out["burdened_indices"] = d.burdened_indices;
  }
  if (!d.kernels.empty()) {
    Json kernels = Json::array();
    for (const auto& ker : d.kernels) {
      kernels.push_back(ker.to_string());
    }
    out["kernels"] = std::move(kernels);
  }
  if (!d.images.empty()) {
    Json images = Json::array();
    for (const auto& img : d.images) {
      images.push_back(image_json(img));
    }
    out["images"] = std::move(images);
  }
  if (!d.roots.empty()) {
    Json roots = Json::array();
    for (const auto& root : d.roots) {
      roots.push_back(root.to_string());
    }
    out["roots"] = std::move(roots);
  }
  return out;
}

Json element_set_json(const ElementSet& set, bool with_elements) {
  Json out;
  out["cardinality"] = set.size();
  if (with_elements) {
    Json elements = Json::array();
    set.for_each([&](std::uint64_t idx) {
      elements.push_back(Transformation::from_index(set.degree(), idx).to_string());
    });
    out["elements"] = std::move(elements);
  }
  return out;
}

Json family_json(const ClassifiedFamily& fam, bool with_elements) {
  Json out;
  out["descriptor"] = descriptor_json(fam.descriptor);
  out["cardinality"] = fam.elements.size();
  if (with_elements) {
    Json elements = Json::array();
    fam.elements.for_each([&](std::uint64_t idx) {
      elements.push_back(Transformation::from_index(fam.elements.degree(), idx).to_string());
    });
    out["elements"] = std::move(elements);
  }
  return out;
}

Json count_formulas_json(const IsolatedCountFormulas& formulas) {
  Json out;
  out["formula"] = big_string(formulas.closed_form);
  Json per_family;
  for (const auto& [tag, value] : formulas.per_family) {
    per_family[tag] = big_string(value);
  }
  out["per_family"] = std::move(per_family);
  out["family_formula_total"] = big_string(formulas.family_total);
  if (formulas.all_root_unions_total) {
    out["all_root_unions_total"] = big_string(*formulas.all_root_unions_total);
  }
  return out;
}

Json counts_json(const oracle::CountReport& counts) {
  Json out;
  out["formula"] = big_string(counts.closed_form);
  out["family_formula_total"] = big_string(counts.family_total);
  if (counts.all_root_unions_total) {
    out["all_root_unions_total"] = big_string(*counts.all_root_unions_total);
  }
  Json per_family;
  for (const auto& [tag, value] : counts.per_family_formula) {
    per_family[tag] = big_string(value);
  }
  out["per_family"] = std::move(per_family);
  Json per_family_enumerated;
  for (const auto& [tag, value] : counts.per_family_enumerated) {
    per_family_enumerated[tag] = value;
  }
  out["per_family_enumerated"] = std::move(per_family_enumerated);
  out["enumerated"] = counts.enumerated;
  if (counts.oracle_count) {
    out["oracle_count"] = *counts.oracle_count;
  }
  out["match"] = counts.closed_form_matches;
  out["family_match"] = counts.family_total_matches;
  return out;
}

Json comparison_json(const oracle::ListComparison& cmp, bool with_elements) {
  Json out;
  out["status"] = cmp.status;
  out["mode"] = cmp.mode;
  if (!cmp.note.empty()) {
    out["note"] = cmp.note;
  }
  out["expected_count"] = cmp.expected_count;
  out["actual_count"] = cmp.actual_count;
  Json missing = Json::array();
  for (const auto& set : cmp.missing) {
    missing.push_back(element_set_json(set, with_elements));
  }
  out["missing"] = std::move(missing);
  Json extra = Json::array();
  for (const auto& set : cmp.extra) {
    extra.push_back(element_set_json(set, with_elements));
  }
  out["extra"] = std::move(extra);
  return out;
}

Json report_json(const oracle::Report& report, bool with_elements) {
  Json out;
  out["verdict"] = report.verdict;
  Json idem;
  idem["scan_count"] = report.idempotent_scan_count;
  idem["formula_count"] = big_string(report.idempotent_formula_count);
  idem["agrees"] = report.idempotents_agree;
  out["idempotents"] = std::move(idem);
  out["isolated"] = comparison_json(report.isolated, with_elements);
  out["completely_isolated"] = comparison_json(report.completely_isolated, with_elements);
  out["left_convex"] = comparison_json(report.left_convex, with_elements);
  out["right_convex"] = comparison_json(report.right_convex, with_elements);
  out["convex"] = comparison_json(report.convex, with_elements);
  out["counts"] = counts_json(report.counts);
  out["isolated_sets_distinct"] = report.isolated_sets_distinct;
  out["notes"] = report.notes;
  return out;
}

}  // namespace sandwich
