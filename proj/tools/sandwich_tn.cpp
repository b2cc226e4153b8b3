// Command-line front end: parse a sandwich element, run the requested
// computation, print a text summary or the machine-readable JSON report.
//
// Exit codes: 0 success / verification pass, 1 verification failure,
// 2 usage or guard errors.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "sandwich/classification.hpp"
#include "sandwich/idempotents.hpp"
#include "sandwich/json_io.hpp"
#include "sandwich/oracle.hpp"
#include "sandwich/variants.hpp"

namespace {

using namespace sandwich;

constexpr int kSchemaVersion = 1;

Guards guards_from_env() {
  Guards guards;
  if (const char* env = std::getenv("SANDWICH_TN_MAX_SCAN")) {
    guards.max_scan = std::stoull(env);
  }
  return guards;
}

void emit(const Json& payload, bool as_json, const std::string& text) {
  if (as_json) {
    std::cout << payload.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::string comparison_line(const std::string& name, const oracle::ListComparison& cmp) {
  std::string line = "  " + name + ": " + cmp.status + " (" + cmp.mode;
  if (cmp.mode == "exact") {
    line += ", oracle " + std::to_string(cmp.expected_count) + " vs lists " +
            std::to_string(cmp.actual_count);
  } else {
    line += ", " + std::to_string(cmp.actual_count) + " sets checked";
  }
  line += ")\n";
  return line;
}

int run(int argc, char** argv) {
  CLI::App app{"computations in the variants (T_n, *_alpha) of the full transformation semigroup"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit the JSON report instead of the text summary");

  std::string alpha_text;
  std::string alpha2_text;
  bool with_elements = false;
  Guards guards = guards_from_env();

  auto* info_cmd = app.add_subcommand("info", "normalization, rank and kernel data of alpha");
  info_cmd->add_option("alpha", alpha_text, "sandwich element, e.g. \"[1,1,3]\"")->required();

  auto* idem_cmd = app.add_subcommand("idempotents", "idempotent list, scan count and formula");
  idem_cmd->add_option("alpha", alpha_text)->required();
  idem_cmd->add_option("--max-scan", guards.max_scan, "scan bound on n^n");

  auto* classify_cmd =
      app.add_subcommand("classify", "isolated / completely isolated / convex classification");
  classify_cmd->add_option("alpha", alpha_text)->required();
  classify_cmd->add_flag("--elements", with_elements, "include the elements of every set");
  classify_cmd->add_option("--max-scan", guards.max_scan, "scan bound on n^n");

  auto* verify_cmd =
      app.add_subcommand("verify", "compare the classification against the brute-force oracle");
  verify_cmd->add_option("alpha", alpha_text)->required();
  verify_cmd->add_option("--max-scan", guards.max_scan, "scan bound on n^n");
  verify_cmd->add_option("--max-subsets", guards.max_subset_idempotents,
                         "largest idempotent count |E| for the 2^|E| subset enumeration");
  verify_cmd->add_flag("--pruned", guards.pruned_search,
                       "closure-driven enumeration for |E| up to 30");
  verify_cmd->add_flag("--elements", with_elements, "include elements of mismatching sets");

  auto* count_cmd = app.add_subcommand("count", "closed-form counts only, no guards");
  count_cmd->add_option("alpha", alpha_text)->required();

  auto* iso_cmd = app.add_subcommand("iso", "variant isomorphism test for two sandwich elements");
  iso_cmd->add_option("alpha1", alpha_text)->required();
  iso_cmd->add_option("alpha2", alpha2_text)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    // Help requests exit cleanly; everything else is a usage error.
    return code == 0 ? 0 : 2;
  }

  Transformation alpha = Transformation::parse(alpha_text);

  if (iso_cmd->parsed()) {
    Transformation alpha2 = Transformation::parse(alpha2_text);
    bool isomorphic = variants_isomorphic(alpha, alpha2);
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["alpha1"] = alpha.to_string();
    out["alpha2"] = alpha2.to_string();
    out["kernel_type1"] = kernel_type(alpha);
    out["kernel_type2"] = kernel_type(alpha2);
    out["isomorphic"] = isomorphic;
    emit(out, as_json, std::string("isomorphic: ") + (isomorphic ? "true" : "false") + "\n");
    return 0;
  }

  NormalizedSandwich normalized = normalize_sandwich(alpha);
  const SandwichContext& ctx = normalized.context;

  if (info_cmd->parsed()) {
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["input"] = alpha.to_string();
    out["normalized"] = ctx.alpha().to_string();
    out["changed"] = normalized.changed;
    out["l"] = ctx.sandwich_rank();
    Json ctx_json = context_json(ctx);
    out["blocks"] = ctx_json["blocks"];
    out["reps"] = ctx_json["reps"];
    out["kernel_type"] = kernel_type(alpha);
    std::string text = "alpha " + alpha.to_string() + (normalized.changed ? " -> " : " = ") +
                       ctx.alpha().to_string() + ", rank l = " +
                       std::to_string(ctx.sandwich_rank()) + "\n";
    emit(out, as_json, text);
    return 0;
  }

  if (idem_cmd->parsed()) {
    auto infos = enumerate_idempotents(ctx, guards);
    BigInt formula = count_idempotents_formula(ctx);
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["context"] = context_json(ctx);
    Json list = Json::array();
    for (const auto& info : infos) {
      list.push_back(idempotent_info_json(info));
    }
    out["idempotents"] = std::move(list);
    out["scan_count"] = infos.size();
    out["formula_count"] = formula.str();
    bool agrees = BigInt(infos.size()) == formula;
    out["agrees"] = agrees;
    std::string text = "idempotents: scan " + std::to_string(infos.size()) + ", formula " +
                       formula.str() + (agrees ? " (agree)\n" : " (DISAGREE)\n");
    emit(out, as_json, text);
    return 0;
  }

  if (count_cmd->parsed()) {
    IsolatedCountFormulas formulas = isolated_count_formulas(ctx);
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["context"] = context_json(ctx);
    out["idempotent_count"] = count_idempotents_formula(ctx).str();
    out["isolated"] = count_formulas_json(formulas);
    std::string text = "idempotents: " + count_idempotents_formula(ctx).str() +
                       "\nisolated, closed form: " + formulas.closed_form.str() +
                       "\nisolated, family-level total: " + formulas.family_total.str() + "\n";
    if (formulas.all_root_unions_total) {
      text += "isolated, with every root-class union: " +
              formulas.all_root_unions_total->str() + "\n";
    }
    emit(out, as_json, text);
    return 0;
  }

  if (classify_cmd->parsed()) {
    auto isolated = enumerate_isolated(ctx, guards);
    auto ci = enumerate_completely_isolated(ctx, guards);
    auto lc = enumerate_one_sided_convex(ctx, Side::Left, guards);
    auto rc = enumerate_one_sided_convex(ctx, Side::Right, guards);
    auto convex = enumerate_convex(ctx, guards);
    IsolatedCountFormulas formulas = isolated_count_formulas(ctx);

    Json out;
    out["schema_version"] = kSchemaVersion;
    out["context"] = context_json(ctx);
    auto render = [&](const std::vector<ClassifiedFamily>& families) {
      Json list = Json::array();
      for (const auto& fam : families) {
        list.push_back(family_json(fam, with_elements));
      }
      return list;
    };
    out["isolated"] = render(isolated);
    out["completely_isolated"] = render(ci);
    out["left_convex"] = render(lc);
    out["right_convex"] = render(rc);
    out["convex"] = render(convex);
    Json counts = count_formulas_json(formulas);
    counts["enumerated"] = isolated.size();
    counts["match"] = formulas.closed_form == BigInt(isolated.size());
    counts["family_match"] = formulas.family_total == BigInt(isolated.size());
    Json per_family_enumerated;
    {
      std::map<std::string, std::uint64_t> tally;
      for (const auto& fam : isolated) {
        ++tally[fam.descriptor.tag_name()];
      }
      for (const auto& [tag, value] : tally) {
        per_family_enumerated[tag] = value;
      }
    }
    counts["per_family_enumerated"] = std::move(per_family_enumerated);
    out["counts"] = std::move(counts);

    std::string text = "isolated: " + std::to_string(isolated.size()) +
                       "\ncompletely isolated: " + std::to_string(ci.size()) +
                       "\nleft convex: " + std::to_string(lc.size()) +
                       "\nright convex: " + std::to_string(rc.size()) +
                       "\nconvex: " + std::to_string(convex.size()) +
                       "\nclosed-form count: " + formulas.closed_form.str() +
                       "\nfamily-level count: " + formulas.family_total.str() + "\n";
    emit(out, as_json, text);
    return 0;
  }

  // verify
  oracle::Report report = oracle::verify_classification(ctx, guards);
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["context"] = context_json(ctx);
  Json rep = report_json(report, with_elements);
  for (auto& [key, value] : rep.items()) {
    out[key] = value;
  }
  std::string text = "verdict: " + report.verdict + "\n";
  text += comparison_line("isolated", report.isolated);
  text += comparison_line("completely isolated", report.completely_isolated);
  text += comparison_line("left convex", report.left_convex);
  text += comparison_line("right convex", report.right_convex);
  text += comparison_line("convex", report.convex);
  text += "  idempotents: scan " + std::to_string(report.idempotent_scan_count) + ", formula " +
          report.idempotent_formula_count.str() +
          (report.idempotents_agree ? " (agree)\n" : " (DISAGREE)\n");
  text += "  counts: closed form " + report.counts.closed_form.str() + ", family total " +
          report.counts.family_total.str() + ", enumerated " +
          std::to_string(report.counts.enumerated);
  if (report.counts.oracle_count) {
    text += ", oracle " + std::to_string(*report.counts.oracle_count);
  }
  text += "\n";
  for (const auto& note : report.notes) {
    text += "  note: " + note + "\n";
  }
  emit(out, as_json, text);
  return report.verdict == "fail" ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const sandwich::GuardError& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
