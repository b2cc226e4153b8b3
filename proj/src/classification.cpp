#include "sandwich/classification.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sandwich {

namespace {

void require_subset_width(std::size_t size) {
  if (size > 20) {
    throw GuardError("subset enumeration over an index set of size " + std::to_string(size) +
                     " exceeds the supported width 20");
  }
}

template <typename T>
std::vector<std::vector<T>> nonempty_subsets(const std::vector<T>& items) {
  require_subset_width(items.size());
  std::vector<std::vector<T>> out;
  const std::uint32_t limit = std::uint32_t(1) << items.size();
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    std::vector<T> subset;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (mask & (std::uint32_t(1) << i)) {
        subset.push_back(items[i]);
      }
    }
    out.push_back(std::move(subset));
  }
  return out;
}

bool is_star_closed(const SandwichContext& ctx, const ElementSet& set) {
  auto members = set.to_indices();
  const int n = ctx.degree();
  for (std::uint64_t a : members) {
    Transformation beta = Transformation::from_index(n, a);
    for (std::uint64_t b : members) {
      Transformation gamma = Transformation::from_index(n, b);
      if (!set.contains(ctx.product(beta, gamma))) {
        return false;
      }
    }
  }
  return true;
}

std::vector<Transformation> constant_maps(const SandwichContext& ctx) {
  std::vector<Transformation> out;
  for (int y = 1; y <= ctx.degree(); ++y) {
    out.push_back(Transformation::constant(ctx.degree(), y));
  }
  return out;
}

// Deduplicates by element set, keeping the least descriptor key, and sorts by
// key.  For l > 2 the general classification asserts the families are already
// pairwise distinct.
std::vector<ClassifiedFamily> finalize(std::vector<ClassifiedFamily> families,
                                       bool assert_distinct) {
  std::map<ElementSet, FamilyDescriptor> by_set;
  std::size_t collapsed = 0;
  for (auto& fam : families) {
    auto [it, inserted] = by_set.emplace(fam.elements, fam.descriptor);
    if (!inserted) {
      ++collapsed;
      if (fam.descriptor.key() < it->second.key()) {
        it->second = fam.descriptor;
      }
    }
  }
  if (assert_distinct && collapsed > 0) {
    throw std::logic_error("family lists produced " + std::to_string(collapsed) +
                           " duplicated element sets; they are expected to be distinct");
  }
  std::vector<ClassifiedFamily> out;
  out.reserve(by_set.size());
  for (auto& [set, descriptor] : by_set) {
    out.push_back({descriptor, set});
  }
  std::sort(out.begin(), out.end(), [](const ClassifiedFamily& a, const ClassifiedFamily& b) {
    return a.descriptor.key() < b.descriptor.key();
  });
  return out;
}

std::vector<ClassifiedFamily> isolated_l1(const SandwichContext& ctx,
                                          const RootClassTable& table) {
  std::vector<ClassifiedFamily> out;
  for (auto& roots : nonempty_subsets(constant_maps(ctx))) {
    FamilyDescriptor d = FamilyDescriptor::root_union(roots);
    out.push_back({d, family_elements(ctx, d, table)});
  }
  return finalize(std::move(out), false);
}

std::vector<ClassifiedFamily> isolated_l2(const SandwichContext& ctx,
                                          const RootClassTable& table) {
  std::vector<ClassifiedFamily> out;
  TopIndexSets top = enum_index_sets(ctx);
  auto kernel_subsets = nonempty_subsets(top.kernels);
  auto image_subsets = nonempty_subsets(top.images);
  for (const auto& X : kernel_subsets) {
    for (const auto& Y : image_subsets) {
      FamilyDescriptor f = FamilyDescriptor::f(X, Y);
      out.push_back({f, family_elements(ctx, f, table)});
      FamilyDescriptor fu = FamilyDescriptor::f_union_ideal(X, Y);
      out.push_back({fu, family_elements(ctx, fu, table)});
    }
  }
  // Candidate unions of constant-map root classes; only the *-closed ones are
  // isolated (mixed-side unions fail the product check).
  for (auto& roots : nonempty_subsets(constant_maps(ctx))) {
    FamilyDescriptor d = FamilyDescriptor::root_union(roots);
    ElementSet set = family_elements(ctx, d, table);
    if (is_star_closed(ctx, set)) {
      out.push_back({d, std::move(set)});
    }
  }
  return finalize(std::move(out), false);
}

std::vector<ClassifiedFamily> isolated_general(const SandwichContext& ctx,
                                               const RootClassTable& table) {
  const int l = ctx.sandwich_rank();
  std::vector<ClassifiedFamily> out;
  auto emit = [&](FamilyDescriptor d) {
    ElementSet set = family_elements(ctx, d, table);
    out.push_back({std::move(d), std::move(set)});
  };

  TopIndexSets top = enum_index_sets(ctx);
  auto top_kernel_subsets = nonempty_subsets(top.kernels);
  auto top_image_subsets = nonempty_subsets(top.images);
  for (const auto& X : top_kernel_subsets) {
    for (const auto& Y : top_image_subsets) {
      emit(FamilyDescriptor::f(X, Y));
      emit(FamilyDescriptor::f_union_ideal(X, Y));
    }
  }
  emit(FamilyDescriptor::ideal());

  for (int k = 1; k <= l; ++k) {
    for (int m = 1; m <= l; ++m) {
      if (m == k) {
        continue;
      }
      CorankIndexSets sets = enum_index_sets_lm1(ctx, k, m);
      auto kernel_subsets = nonempty_subsets(sets.kernels);
      auto image_subsets = nonempty_subsets(sets.images);
      for (const auto& X : kernel_subsets) {
        for (const auto& Y : image_subsets) {
          emit(FamilyDescriptor::h(k, m, X, Y));
        }
      }
      if (k < m) {
        for (const auto& X : kernel_subsets) {
          emit(FamilyDescriptor::kk(k, m, X));
        }
      }
    }
    // M runs over the subsets of {1..l} minus k with more than one index.
    std::vector<int> others;
    for (int i = 1; i <= l; ++i) {
      if (i != k) {
        others.push_back(i);
      }
    }
    auto image_subsets = nonempty_subsets(enum_index_sets_lm1(ctx, k, others[0]).images);
    for (auto& M : nonempty_subsets(others)) {
      if (M.size() < 2) {
        continue;
      }
      for (const auto& Y : image_subsets) {
        emit(FamilyDescriptor::l(k, M, Y));
      }
    }
  }
  return finalize(std::move(out), true);
}

ElementSet materialize_t_n(const SandwichContext& ctx) {
  return ElementSet::full(ctx.degree());
}

// Stable-rank-l layer and its complement.
ElementSet top_layer(const RootClassTable& table, const SandwichContext& ctx) {
  std::vector<int> ids;
  for (int c = 0; c < table.class_count(); ++c) {
    if (table.ranks()[c] == ctx.sandwich_rank()) {
      ids.push_back(c);
    }
  }
  return table.union_of(ids);
}

FamilyDescriptor whole_semigroup_descriptor(const SandwichContext& ctx, const TopIndexSets& top) {
  if (ctx.sandwich_rank() == 1) {
    return FamilyDescriptor::root_union(constant_maps(ctx));
  }
  return FamilyDescriptor::f_union_ideal(top.kernels, top.images);
}

FamilyDescriptor ideal_descriptor(const SandwichContext& ctx) {
  // For l = 2 the ideal is the union of all constant-map root classes; for
  // l > 2 it is its own family.
  if (ctx.sandwich_rank() == 2) {
    return FamilyDescriptor::root_union(constant_maps(ctx));
  }
  return FamilyDescriptor::ideal();
}

}  // namespace

std::vector<ClassifiedFamily> enumerate_isolated(const SandwichContext& ctx,
                                                 const Guards& guards) {
  RootClassTable table(ctx, guards);
  const int l = ctx.sandwich_rank();
  if (l == 1) {
    return isolated_l1(ctx, table);
  }
  if (l == 2) {
    return isolated_l2(ctx, table);
  }
  return isolated_general(ctx, table);
}

std::vector<ClassifiedFamily> enumerate_completely_isolated(const SandwichContext& ctx,
                                                            const Guards& guards) {
  RootClassTable table(ctx, guards);
  const int l = ctx.sandwich_rank();
  if (l == 1) {
    // Every isolated subsemigroup is completely isolated here.
    return isolated_l1(ctx, table);
  }
  TopIndexSets top = enum_index_sets(ctx);
  std::vector<ClassifiedFamily> out;
  auto emit = [&](FamilyDescriptor d) {
    ElementSet set = family_elements(ctx, d, table);
    out.push_back({std::move(d), std::move(set)});
  };
  // F with one full coordinate, alone and united with the ideal, plus the
  // ideal itself.
  for (auto& X : nonempty_subsets(top.kernels)) {
    emit(FamilyDescriptor::f(X, top.images));
    emit(FamilyDescriptor::f_union_ideal(X, top.images));
  }
  for (auto& Y : nonempty_subsets(top.images)) {
    emit(FamilyDescriptor::f(top.kernels, Y));
    emit(FamilyDescriptor::f_union_ideal(top.kernels, Y));
  }
  out.push_back({ideal_descriptor(ctx), top_layer(table, ctx).complement()});
  return finalize(std::move(out), false);
}

std::vector<ClassifiedFamily> enumerate_one_sided_convex(const SandwichContext& ctx, Side side,
                                                         const Guards& guards) {
  RootClassTable table(ctx, guards);
  const int l = ctx.sandwich_rank();
  if (l == 1 && side == Side::Right) {
    // Right convexity degenerates to the full isolated list.
    return isolated_l1(ctx, table);
  }
  TopIndexSets top = enum_index_sets(ctx);
  std::vector<ClassifiedFamily> out;
  out.push_back({whole_semigroup_descriptor(ctx, top), materialize_t_n(ctx)});
  if (side == Side::Right) {
    // The stable image of a product comes from the right factor: image-side
    // families are right convex.
    for (auto& Y : nonempty_subsets(top.images)) {
      FamilyDescriptor d = FamilyDescriptor::f(top.kernels, Y);
      out.push_back({d, family_elements(ctx, d, table)});
    }
  } else if (l >= 2) {
    // The stable kernel comes from the left factor: kernel-side families are
    // left convex.  For l = 1 only the whole semigroup is left convex.
    for (auto& X : nonempty_subsets(top.kernels)) {
      FamilyDescriptor d = FamilyDescriptor::f(X, top.images);
      out.push_back({d, family_elements(ctx, d, table)});
    }
  }
  return finalize(std::move(out), false);
}

std::vector<ClassifiedFamily> enumerate_convex(const SandwichContext& ctx, const Guards& guards) {
  RootClassTable table(ctx, guards);
  TopIndexSets top = enum_index_sets(ctx);
  std::vector<ClassifiedFamily> out;
  out.push_back({whole_semigroup_descriptor(ctx, top), materialize_t_n(ctx)});
  if (ctx.sandwich_rank() >= 2) {
    FamilyDescriptor d = FamilyDescriptor::f(top.kernels, top.images);
    out.push_back({d, family_elements(ctx, d, table)});
  }
  return finalize(std::move(out), false);
}

IsolatedCountFormulas isolated_count_formulas(const SandwichContext& ctx) {
  const int n = ctx.degree();
  const int l = ctx.sandwich_rank();
  IsolatedCountFormulas out;

  BigInt x_size = ipow(l, n - l);                 // |X|
  BigInt u_size = l >= 2 ? ipow(l - 1, n - l) : BigInt(0);  // |U^(k,m)|
  BigInt p = 1;                                   // |Y| = prod |A_i|
  std::vector<BigInt> p_without(l);               // p_k = prod_{i != k} |A_i|
  for (int i = 0; i < l; ++i) {
    p *= static_cast<int>(ctx.blocks()[i].size());
  }
  for (int k = 0; k < l; ++k) {
    p_without[k] = p / static_cast<int>(ctx.blocks()[k].size());
  }

  BigInt f_count = (pow2(x_size) - 1) * (pow2(p) - 1);

  if (l == 1) {
    out.closed_form = pow2(n) - 1;
    out.per_family["RootUnion"] = pow2(n) - 1;
  } else if (l == 2) {
    // The one-line closed form for l = 2.
    out.closed_form = pow2(x_size + p) - pow2(x_size) - pow2(p) + pow2(n);
    out.per_family["F"] = f_count;
    out.per_family["FUnionIdeal"] = f_count;
    BigInt root_unions = 1;  // the full rank-one ideal
    for (int i = 0; i < l; ++i) {
      root_unions += pow2(static_cast<int>(ctx.blocks()[i].size())) - 1;
    }
    out.per_family["RootUnion"] = root_unions;
    out.all_root_unions_total = 2 * f_count + pow2(n) - 1;
  } else {
    // The one-line closed form for l > 2, evaluated term by term.
    BigInt total = 0;
    for (int k = 2; k <= l; ++k) {
      for (int m = 1; m < k; ++m) {
        total += (pow2(u_size) - 1) * (pow2(p_without[k - 1]) - 1) * (pow2(p_without[m - 1]) - 1);
      }
    }
    for (int k = 1; k <= l; ++k) {
      total += l * (pow2(u_size + p_without[k - 1]) - pow2(u_size) - pow2(p_without[k - 1]) + 1);
    }
    for (int k = 1; k <= l; ++k) {
      total += (pow2(l - 1) - l) * (pow2(p_without[k - 1]) - 1);
    }
    total += 2 * (pow2(x_size + p) - pow2(x_size) - pow2(p) + 1);
    total += 1;
    out.closed_form = total;

    out.per_family["F"] = f_count;
    out.per_family["FUnionIdeal"] = f_count;
    BigInt h_count = 0;
    BigInt l_count = 0;
    for (int k = 0; k < l; ++k) {
      h_count += (l - 1) * (pow2(u_size) - 1) * (pow2(p_without[k]) - 1);
      l_count += (pow2(l - 1) - l) * (pow2(p_without[k]) - 1);
    }
    out.per_family["H"] = h_count;
    out.per_family["K"] = BigInt(l) * (l - 1) / 2 * (pow2(u_size) - 1);
    out.per_family["L"] = l_count;
    out.per_family["Ideal"] = 1;
  }

  out.family_total = 0;
  for (const auto& [tag, count] : out.per_family) {
    out.family_total += count;
  }
  return out;
}

ElementSet minimal_isolated(const SandwichContext& ctx, const Transformation& beta,
                            const Guards& guards) {
  require_scan(guards, ctx.degree());
  const int n = ctx.degree();
  const std::uint64_t total = universe_size(n);
  ElementSet set(n);
  set.insert(beta);
  bool changed = true;
  while (changed) {
    changed = false;
    // *-closure.
    std::vector<std::uint64_t> worklist = set.to_indices();
    for (std::size_t i = 0; i < worklist.size(); ++i) {
      Transformation a = Transformation::from_index(n, worklist[i]);
      for (std::size_t j = 0; j < worklist.size(); ++j) {
        Transformation b = Transformation::from_index(n, worklist[j]);
        for (const Transformation& prod : {ctx.product(a, b), ctx.product(b, a)}) {
          if (!set.contains(prod)) {
            set.insert(prod);
            worklist.push_back(prod.index());
            changed = true;
          }
        }
      }
    }
    // Root completion: pull in every element some *-power of which is inside.
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      if (set.contains(idx)) {
        continue;
      }
      for (const Transformation& power :
           star_power_orbit(ctx, Transformation::from_index(n, idx))) {
        if (set.contains(power)) {
          set.insert(idx);
          changed = true;
          break;
        }
      }
    }
  }
  return set;
}

std::vector<ElementSet> convex_congruence(const SandwichContext& ctx, const Guards& guards) {
  require_scan(guards, ctx.degree());
  const int n = ctx.degree();
  const std::uint64_t total = universe_size(n);
  std::vector<ElementSet> proper;
  for (auto& fam : enumerate_convex(ctx, guards)) {
    if (fam.elements.size() != total) {
      proper.push_back(fam.elements);
    }
  }
  require_subset_width(proper.size());

  // Group elements by their membership pattern across the proper convex sets.
  std::map<std::uint32_t, ElementSet> classes_by_pattern;
  std::vector<std::uint32_t> pattern_of(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint32_t pattern = 0;
    for (std::size_t i = 0; i < proper.size(); ++i) {
      if (proper[i].contains(idx)) {
        pattern |= std::uint32_t(1) << i;
      }
    }
    pattern_of[idx] = pattern;
    auto [it, inserted] = classes_by_pattern.try_emplace(pattern, ElementSet(n));
    it->second.insert(idx);
  }

  // Congruence check: the class of a product depends only on the classes of
  // the factors.
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> product_class;
  for (std::uint64_t a = 0; a < total; ++a) {
    Transformation ta = Transformation::from_index(n, a);
    for (std::uint64_t b = 0; b < total; ++b) {
      Transformation tb = Transformation::from_index(n, b);
      std::uint32_t result = pattern_of[ctx.product(ta, tb).index()];
      auto key = std::make_pair(pattern_of[a], pattern_of[b]);
      auto [it, inserted] = product_class.emplace(key, result);
      if (!inserted && it->second != result) {
        throw std::logic_error("convex intersection classes do not form a congruence");
      }
    }
  }
  for (const auto& [pattern, set] : classes_by_pattern) {
    auto it = product_class.find({pattern, pattern});
    if (it != product_class.end() && it->second != pattern) {
      throw std::logic_error("convex intersection class is not *-closed");
    }
  }

  // Every class is an isolated subsemigroup: *-closed (granted by the
  // congruence check) and closed under taking roots.
  std::vector<ElementSet> classes;
  for (auto& [pattern, set] : classes_by_pattern) {
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      if (set.contains(idx)) {
        continue;
      }
      for (const Transformation& power :
           star_power_orbit(ctx, Transformation::from_index(n, idx))) {
        if (set.contains(power)) {
          throw std::logic_error("convex intersection class is not isolated");
        }
      }
    }
    classes.push_back(set);
  }
  std::sort(classes.begin(), classes.end());
  return classes;
}

}  // namespace sandwich
