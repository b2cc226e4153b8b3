#include "sandwich/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace sandwich {

namespace {

std::vector<int> non_representatives(const SandwichContext& ctx) {
  std::vector<int> out;
  for (int x = 1; x <= ctx.degree(); ++x) {
    if (!ctx.in_image(x)) {
      out.push_back(x);
    }
  }
  return out;
}

// All partitions obtained by attaching every non-representative point to one
// of the given seed groups; each seed group ends up one block.
std::vector<Partition> partitions_over_seeds(const SandwichContext& ctx,
                                             const std::vector<std::vector<int>>& seeds) {
  const int n = ctx.degree();
  const int groups = static_cast<int>(seeds.size());
  std::vector<int> free_points = non_representatives(ctx);
  std::vector<int> choice(free_points.size(), 0);
  std::vector<Partition> out;
  while (true) {
    std::vector<int> block_of(n, -1);
    for (int g = 0; g < groups; ++g) {
      for (int x : seeds[g]) {
        block_of[x - 1] = g;
      }
    }
    for (std::size_t j = 0; j < free_points.size(); ++j) {
      block_of[free_points[j] - 1] = choice[j];
    }
    out.emplace_back(block_of);
    // Odometer over the assignments.
    std::size_t pos = 0;
    while (pos < choice.size() && ++choice[pos] == groups) {
      choice[pos++] = 0;
    }
    if (pos == choice.size() && !choice.empty()) {
      break;
    }
    if (choice.empty()) {
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Images {b_i : i in indices} with b_i in A_i, each as a sorted set.
std::vector<std::vector<std::uint8_t>> image_choices(const SandwichContext& ctx,
                                                     const std::vector<int>& indices) {
  std::vector<std::vector<std::uint8_t>> out;
  std::vector<std::size_t> choice(indices.size(), 0);
  while (true) {
    std::vector<std::uint8_t> img;
    for (std::size_t j = 0; j < indices.size(); ++j) {
      img.push_back(ctx.blocks()[indices[j]][choice[j]]);
    }
    std::sort(img.begin(), img.end());
    out.push_back(std::move(img));
    std::size_t pos = 0;
    while (pos < choice.size() && ++choice[pos] == ctx.blocks()[indices[pos]].size()) {
      choice[pos++] = 0;
    }
    if (choice.empty() || pos == choice.size()) {
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void check_top_kernel(const SandwichContext& ctx, const Partition& ker) {
  const int l = ctx.sandwich_rank();
  if (ker.degree() != ctx.degree() || ker.block_count() != l) {
    throw std::invalid_argument("kernel " + ker.to_string() + " does not have " +
                                std::to_string(l) + " blocks");
  }
  std::vector<bool> seen(l, false);
  for (int i = 0; i < l; ++i) {
    int b = ker.block_of(ctx.reps()[i]);
    if (seen[b]) {
      throw std::invalid_argument("kernel " + ker.to_string() +
                                  " does not separate the representatives");
    }
    seen[b] = true;
  }
}

void check_corank_kernel(const SandwichContext& ctx, int k, int m, const Partition& ker) {
  const int l = ctx.sandwich_rank();
  if (ker.degree() != ctx.degree() || ker.block_count() != l - 1) {
    throw std::invalid_argument("kernel " + ker.to_string() + " does not have " +
                                std::to_string(l - 1) + " blocks");
  }
  if (ker.block_of(ctx.reps()[k - 1]) != ker.block_of(ctx.reps()[m - 1])) {
    throw std::invalid_argument("kernel " + ker.to_string() + " separates a_" +
                                std::to_string(k) + " and a_" + std::to_string(m));
  }
  std::vector<bool> met(l - 1, false);
  for (int i = 0; i < l; ++i) {
    met[ker.block_of(ctx.reps()[i])] = true;
  }
  for (int b = 0; b < l - 1; ++b) {
    if (!met[b]) {
      throw std::invalid_argument("kernel " + ker.to_string() +
                                  " has a block without representatives");
    }
  }
}

// img must contain exactly one element of A_i for each i in indices.
void check_image(const SandwichContext& ctx, const std::vector<int>& indices,
                 const std::vector<std::uint8_t>& img) {
  std::vector<int> count(ctx.sandwich_rank(), 0);
  for (std::uint8_t x : img) {
    ++count[ctx.block_index(x)];
  }
  std::size_t covered = 0;
  for (int i : indices) {
    if (count[i] != 1) {
      throw std::invalid_argument("image does not pick exactly one element of block " +
                                  std::to_string(i + 1));
    }
    ++covered;
  }
  if (covered != img.size()) {
    throw std::invalid_argument("image has elements outside the selected blocks");
  }
}

std::vector<int> all_indices(int l) {
  std::vector<int> idx(l);
  for (int i = 0; i < l; ++i) {
    idx[i] = i;
  }
  return idx;
}

void require_pair(const SandwichContext& ctx, int k, int m) {
  const int l = ctx.sandwich_rank();
  if (l < 2) {
    throw std::invalid_argument("corank-one families need sandwich rank >= 2, got l = " +
                                std::to_string(l));
  }
  if (k < 1 || k > l || m < 1 || m > l || k == m) {
    throw std::invalid_argument("invalid representative pair (" + std::to_string(k) + "," +
                                std::to_string(m) + ") for l = " + std::to_string(l));
  }
}

std::string join_kernels(const std::vector<Partition>& kernels) {
  std::string out = "{";
  for (std::size_t i = 0; i < kernels.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += kernels[i].to_string();
  }
  return out + "}";
}

std::string join_images(const std::vector<std::vector<std::uint8_t>>& images) {
  std::string out = "{";
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += '{';
    for (std::size_t j = 0; j < images[i].size(); ++j) {
      if (j > 0) {
        out += ',';
      }
      out += std::to_string(int(images[i][j]));
    }
    out += '}';
  }
  return out + "}";
}

}  // namespace

TopIndexSets enum_index_sets(const SandwichContext& ctx) {
  const int l = ctx.sandwich_rank();
  std::vector<std::vector<int>> seeds(l);
  for (int i = 0; i < l; ++i) {
    seeds[i] = {ctx.reps()[i]};
  }
  TopIndexSets out{partitions_over_seeds(ctx, seeds), image_choices(ctx, all_indices(l))};
  const int n = ctx.degree();
  std::uint64_t expected_kernels = 1;
  for (int i = 0; i < n - l; ++i) {
    expected_kernels *= l;
  }
  std::uint64_t expected_images = 1;
  for (int i = 0; i < l; ++i) {
    expected_images *= ctx.blocks()[i].size();
  }
  if (out.kernels.size() != expected_kernels || out.images.size() != expected_images) {
    throw std::logic_error("index set cardinalities differ from l^(n-l) and prod |A_i|");
  }
  return out;
}

CorankIndexSets enum_index_sets_lm1(const SandwichContext& ctx, int k, int m) {
  require_pair(ctx, k, m);
  const int l = ctx.sandwich_rank();
  std::vector<std::vector<int>> seeds;
  seeds.push_back({ctx.reps()[k - 1], ctx.reps()[m - 1]});
  std::vector<int> image_indices;
  for (int i = 0; i < l; ++i) {
    if (i != k - 1 && i != m - 1) {
      seeds.push_back({ctx.reps()[i]});
    }
    if (i != k - 1) {
      image_indices.push_back(i);
    }
  }
  CorankIndexSets out{partitions_over_seeds(ctx, seeds), image_choices(ctx, image_indices)};
  const int n = ctx.degree();
  std::uint64_t expected_kernels = 1;
  for (int i = 0; i < n - l; ++i) {
    expected_kernels *= (l - 1);
  }
  std::uint64_t expected_images = 1;
  for (int i : image_indices) {
    expected_images *= ctx.blocks()[i].size();
  }
  if (out.kernels.size() != expected_kernels || out.images.size() != expected_images) {
    throw std::logic_error("corank index set cardinalities differ from (l-1)^(n-l) and prod");
  }
  return out;
}

Transformation top_idempotent(const SandwichContext& ctx, const Partition& ker,
                              const std::vector<std::uint8_t>& img) {
  check_top_kernel(ctx, ker);
  check_image(ctx, all_indices(ctx.sandwich_rank()), img);
  const int n = ctx.degree();
  const int l = ctx.sandwich_rank();
  // Block containing a_i maps to the image element inside A_i.
  std::vector<std::uint8_t> value_of_block(l);
  std::vector<std::uint8_t> image_in(l);
  for (std::uint8_t x : img) {
    image_in[ctx.block_index(x)] = x;
  }
  for (int i = 0; i < l; ++i) {
    value_of_block[ker.block_of(ctx.reps()[i])] = image_in[i];
  }
  std::vector<std::uint8_t> values(n);
  for (int x = 1; x <= n; ++x) {
    values[x - 1] = value_of_block[ker.block_of(x)];
  }
  Transformation eps{std::move(values)};
  if (!is_variant_idempotent(ctx, eps)) {
    throw std::logic_error("constructed top-layer element is not idempotent");
  }
  return eps;
}

Transformation corank_idempotent(const SandwichContext& ctx, int k, int m, const Partition& ker,
                                 const std::vector<std::uint8_t>& img) {
  require_pair(ctx, k, m);
  check_corank_kernel(ctx, k, m, ker);
  const int l = ctx.sandwich_rank();
  std::vector<int> image_indices;
  for (int i = 0; i < l; ++i) {
    if (i != k - 1) {
      image_indices.push_back(i);
    }
  }
  check_image(ctx, image_indices, img);
  const int n = ctx.degree();
  std::vector<std::uint8_t> image_in(l, 0);
  for (std::uint8_t x : img) {
    image_in[ctx.block_index(x)] = x;
  }
  // The block of the pair {a_k, a_m} maps into A_m, the block of any other
  // a_j to the image element in A_j; this makes a_m burdened and a_k trifle.
  std::vector<std::uint8_t> value_of_block(l - 1, 0);
  for (int i = 0; i < l; ++i) {
    if (i == k - 1) {
      continue;
    }
    value_of_block[ker.block_of(ctx.reps()[i])] = image_in[i];
  }
  std::vector<std::uint8_t> values(n);
  for (int x = 1; x <= n; ++x) {
    values[x - 1] = value_of_block[ker.block_of(x)];
  }
  Transformation eps{std::move(values)};
  if (!is_variant_idempotent(ctx, eps)) {
    throw std::logic_error("constructed corank-one element is not idempotent");
  }
  return eps;
}

FamilyDescriptor FamilyDescriptor::f(std::vector<Partition> X,
                                     std::vector<std::vector<std::uint8_t>> Y) {
  FamilyDescriptor d;
  d.tag = Tag::F;
  d.kernels = std::move(X);
  d.images = std::move(Y);
  return d;
}

FamilyDescriptor FamilyDescriptor::h(int k, int m, std::vector<Partition> X,
                                     std::vector<std::vector<std::uint8_t>> Y) {
  FamilyDescriptor d;
  d.tag = Tag::H;
  d.k = k;
  d.m = m;
  d.kernels = std::move(X);
  d.images = std::move(Y);
  return d;
}

FamilyDescriptor FamilyDescriptor::kk(int k, int m, std::vector<Partition> X) {
  FamilyDescriptor d;
  d.tag = Tag::K;
  d.k = std::min(k, m);
  d.m = std::max(k, m);
  d.kernels = std::move(X);
  return d;
}

FamilyDescriptor FamilyDescriptor::l(int k, std::vector<int> M,
                                     std::vector<std::vector<std::uint8_t>> Y) {
  FamilyDescriptor d;
  d.tag = Tag::L;
  d.k = k;
  std::sort(M.begin(), M.end());
  d.burdened_indices = std::move(M);
  d.images = std::move(Y);
  return d;
}

FamilyDescriptor FamilyDescriptor::ideal() {
  FamilyDescriptor d;
  d.tag = Tag::Ideal;
  return d;
}

FamilyDescriptor FamilyDescriptor::f_union_ideal(std::vector<Partition> X,
                                                 std::vector<std::vector<std::uint8_t>> Y) {
  FamilyDescriptor d;
  d.tag = Tag::FUnionIdeal;
  d.kernels = std::move(X);
  d.images = std::move(Y);
  return d;
}

FamilyDescriptor FamilyDescriptor::root_union(std::vector<Transformation> roots) {
  FamilyDescriptor d;
  d.tag = Tag::RootUnion;
  std::sort(roots.begin(), roots.end(),
            [](const Transformation& a, const Transformation& b) { return a.index() < b.index(); });
  d.roots = std::move(roots);
  return d;
}

const char* FamilyDescriptor::tag_name() const {
  switch (tag) {
    case Tag::F: return "F";
    case Tag::H: return "H";
    case Tag::K: return "K";
    case Tag::L: return "L";
    case Tag::Ideal: return "Ideal";
    case Tag::FUnionIdeal: return "FUnionIdeal";
    case Tag::RootUnion: return "RootUnion";
  }
  return "?";
}

std::string FamilyDescriptor::key() const {
  std::string out(1, static_cast<char>('0' + static_cast<int>(tag)));
  out += '|';
  out += std::to_string(k) + "," + std::to_string(m) + "|";
  out += join_kernels(kernels) + "|" + join_images(images) + "|";
  for (int i : burdened_indices) {
    out += std::to_string(i) + ",";
  }
  out += '|';
  for (const auto& r : roots) {
    out += r.to_string();
  }
  return out;
}

std::string FamilyDescriptor::to_string() const {
  std::string out = tag_name();
  switch (tag) {
    case Tag::F:
    case Tag::FUnionIdeal:
      out += "(X=" + join_kernels(kernels) + ", Y=" + join_images(images) + ")";
      break;
    case Tag::H:
      out += "(" + std::to_string(k) + "," + std::to_string(m) + ", X=" + join_kernels(kernels) +
             ", Y=" + join_images(images) + ")";
      break;
    case Tag::K:
      out += "({" + std::to_string(k) + "," + std::to_string(m) + "}, X=" + join_kernels(kernels) +
             ")";
      break;
    case Tag::L: {
      out += "(" + std::to_string(k) + ", M={";
      for (std::size_t i = 0; i < burdened_indices.size(); ++i) {
        if (i > 0) {
          out += ',';
        }
        out += std::to_string(burdened_indices[i]);
      }
      out += "}, Y=" + join_images(images) + ")";
      break;
    }
    case Tag::Ideal:
      break;
    case Tag::RootUnion: {
      out += "(";
      for (std::size_t i = 0; i < roots.size(); ++i) {
        if (i > 0) {
          out += ',';
        }
        out += roots[i].to_string();
      }
      out += ")";
      break;
    }
  }
  return out;
}

namespace {

std::vector<int> ideal_class_ids(const SandwichContext& ctx, const RootClassTable& table) {
  std::vector<int> ids;
  for (int c = 0; c < table.class_count(); ++c) {
    if (table.ranks()[c] < ctx.sandwich_rank()) {
      ids.push_back(c);
    }
  }
  return ids;
}

}  // namespace

ElementSet family_elements(const SandwichContext& ctx, const FamilyDescriptor& d,
                           const RootClassTable& table) {
  const int l = ctx.sandwich_rank();
  std::vector<int> class_ids;
  auto add = [&](const Transformation& eps) {
    class_ids.push_back(table.class_of_idempotent(eps));
  };
  switch (d.tag) {
    case FamilyDescriptor::Tag::F:
    case FamilyDescriptor::Tag::FUnionIdeal: {
      if (d.kernels.empty() || d.images.empty()) {
        throw std::invalid_argument("F family needs nonempty X and Y");
      }
      if (d.tag == FamilyDescriptor::Tag::FUnionIdeal && l < 2) {
        throw std::invalid_argument("FUnionIdeal needs l >= 2");
      }
      for (const auto& ker : d.kernels) {
        for (const auto& img : d.images) {
          add(top_idempotent(ctx, ker, img));
        }
      }
      if (d.tag == FamilyDescriptor::Tag::FUnionIdeal) {
        for (int c : ideal_class_ids(ctx, table)) {
          class_ids.push_back(c);
        }
      }
      break;
    }
    case FamilyDescriptor::Tag::H: {
      if (d.kernels.empty() || d.images.empty()) {
        throw std::invalid_argument("H family needs nonempty X and Y");
      }
      for (const auto& ker : d.kernels) {
        for (const auto& img : d.images) {
          add(corank_idempotent(ctx, d.k, d.m, ker, img));
        }
      }
      break;
    }
    case FamilyDescriptor::Tag::K: {
      if (d.kernels.empty()) {
        throw std::invalid_argument("K family needs nonempty X");
      }
      auto images_k = enum_index_sets_lm1(ctx, d.k, d.m).images;
      auto images_m = enum_index_sets_lm1(ctx, d.m, d.k).images;
      for (const auto& ker : d.kernels) {
        for (const auto& img : images_k) {
          add(corank_idempotent(ctx, d.k, d.m, ker, img));
        }
        for (const auto& img : images_m) {
          add(corank_idempotent(ctx, d.m, d.k, ker, img));
        }
      }
      break;
    }
    case FamilyDescriptor::Tag::L: {
      if (d.burdened_indices.size() < 2) {
        throw std::invalid_argument("L family needs |M| > 1");
      }
      if (d.images.empty()) {
        throw std::invalid_argument("L family needs nonempty Y");
      }
      for (int m : d.burdened_indices) {
        if (m == d.k) {
          throw std::invalid_argument("L family: M may not contain k");
        }
        auto kernels = enum_index_sets_lm1(ctx, d.k, m).kernels;
        for (const auto& ker : kernels) {
          for (const auto& img : d.images) {
            add(corank_idempotent(ctx, d.k, m, ker, img));
          }
        }
      }
      break;
    }
    case FamilyDescriptor::Tag::Ideal: {
      if (l <= 2) {
        throw std::invalid_argument("the ideal alone is a family only for l > 2");
      }
      class_ids = ideal_class_ids(ctx, table);
      break;
    }
    case FamilyDescriptor::Tag::RootUnion: {
      if (d.roots.empty()) {
        throw std::invalid_argument("RootUnion needs at least one idempotent");
      }
      for (const auto& eps : d.roots) {
        add(eps);
      }
      break;
    }
  }
  return table.union_of(class_ids);
}

ElementSet family_elements(const SandwichContext& ctx, const FamilyDescriptor& d,
                           const Guards& guards) {
  RootClassTable table(ctx, guards);
  return family_elements(ctx, d, table);
}

}  // namespace sandwich
