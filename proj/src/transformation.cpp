#include "sandwich/transformation.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sandwich {

std::uint64_t universe_size(int n) {
  if (n < 1) {
    throw std::invalid_argument("degree must be positive, got " + std::to_string(n));
  }
  if (n > 15) {
    throw std::overflow_error("n^n does not fit in 64 bits for n = " + std::to_string(n));
  }
  std::uint64_t result = 1;
  for (int i = 0; i < n; ++i) {
    result *= static_cast<std::uint64_t>(n);
  }
  return result;
}

Transformation::Transformation(std::vector<std::uint8_t> images) : images_(std::move(images)) {
  const int n = degree();
  if (n < 1) {
    throw std::invalid_argument("transformation must have positive degree");
  }
  for (int i = 0; i < n; ++i) {
    if (images_[i] < 1 || images_[i] > n) {
      throw std::invalid_argument("entry " + std::to_string(i + 1) + " is " +
                                  std::to_string(int(images_[i])) + ", outside [1," +
                                  std::to_string(n) + "]");
    }
  }
}

Transformation Transformation::identity(int n) {
  std::vector<std::uint8_t> img(n);
  for (int i = 0; i < n; ++i) {
    img[i] = static_cast<std::uint8_t>(i + 1);
  }
  return Transformation(std::move(img));
}

Transformation Transformation::constant(int n, int value) {
  return Transformation(std::vector<std::uint8_t>(n, static_cast<std::uint8_t>(value)));
}

Transformation Transformation::from_index(int n, std::uint64_t index) {
  std::vector<std::uint8_t> img(n);
  for (int i = 0; i < n; ++i) {
    img[i] = static_cast<std::uint8_t>(index % n + 1);
    index /= n;
  }
  return Transformation(std::move(img));
}

std::uint64_t Transformation::index() const {
  const int n = degree();
  std::uint64_t result = 0;
  for (int i = n - 1; i >= 0; --i) {
    result = result * n + (images_[i] - 1);
  }
  return result;
}

bool Transformation::operator<(const Transformation& other) const {
  if (degree() != other.degree()) {
    return degree() < other.degree();
  }
  return images_ < other.images_;
}

std::string Transformation::to_string() const {
  std::string out = "[";
  for (int i = 0; i < degree(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(int(images_[i]));
  }
  out += ']';
  return out;
}

Transformation Transformation::parse(const std::string& text, int expected_degree) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };
  skip_space();
  if (pos >= text.size() || text[pos] != '[') {
    throw std::invalid_argument("expected '[' at start of transformation: " + text);
  }
  ++pos;
  std::vector<std::uint8_t> img;
  while (true) {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (start == pos) {
      throw std::invalid_argument("expected entry " + std::to_string(img.size() + 1) +
                                  " in transformation: " + text);
    }
    long value = std::stol(text.substr(start, pos - start));
    if (value < 1 || value > 255) {
      throw std::invalid_argument("entry " + std::to_string(img.size() + 1) + " is " +
                                  std::to_string(value) + ", outside [1,255]");
    }
    img.push_back(static_cast<std::uint8_t>(value));
    skip_space();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  if (pos >= text.size() || text[pos] != ']') {
    throw std::invalid_argument("expected ']' at end of transformation: " + text);
  }
  ++pos;
  skip_space();
  if (pos != text.size()) {
    throw std::invalid_argument("trailing characters after transformation: " + text);
  }
  if (expected_degree >= 0 && static_cast<int>(img.size()) != expected_degree) {
    throw std::invalid_argument("degree mismatch: expected " + std::to_string(expected_degree) +
                                ", got " + std::to_string(img.size()));
  }
  const int n = static_cast<int>(img.size());
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (img[i] < 1 || img[i] > n) {
      throw std::invalid_argument("entry " + std::to_string(i + 1) + " is " +
                                  std::to_string(int(img[i])) + ", outside [1," +
                                  std::to_string(n) + "]");
    }
  }
  return Transformation(std::move(img));
}

Transformation compose(const Transformation& beta, const Transformation& gamma) {
  if (beta.degree() != gamma.degree()) {
    throw std::invalid_argument("degree mismatch: " + std::to_string(beta.degree()) + " vs " +
                                std::to_string(gamma.degree()));
  }
  const int n = beta.degree();
  std::vector<std::uint8_t> img(n);
  for (int i = 0; i < n; ++i) {
    img[i] = static_cast<std::uint8_t>(gamma(beta.images()[i]));
  }
  return Transformation(std::move(img));
}

bool is_plain_idempotent(const Transformation& beta) {
  return compose(beta, beta) == beta;
}

Partition kernel(const Transformation& beta) {
  const int n = beta.degree();
  std::vector<int> block_of(n);
  std::vector<int> id_of_value(n + 1, -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    int v = beta.images()[i];
    if (id_of_value[v] < 0) {
      id_of_value[v] = next++;
    }
    block_of[i] = id_of_value[v];
  }
  return Partition(block_of);
}

std::vector<std::uint8_t> image(const Transformation& beta) {
  std::set<std::uint8_t> values(beta.images().begin(), beta.images().end());
  return std::vector<std::uint8_t>(values.begin(), values.end());
}

int rank(const Transformation& beta) {
  return static_cast<int>(image(beta).size());
}

Partition::Partition(const std::vector<int>& block_of) {
  const int n = static_cast<int>(block_of.size());
  if (n < 1) {
    throw std::invalid_argument("partition must have positive degree");
  }
  block_of_.resize(n);
  std::vector<int> renumber;
  for (int i = 0; i < n; ++i) {
    int id = block_of[i];
    auto it = std::find(renumber.begin(), renumber.end(), id);
    if (it == renumber.end()) {
      renumber.push_back(id);
      block_of_[i] = static_cast<std::uint8_t>(renumber.size() - 1);
    } else {
      block_of_[i] = static_cast<std::uint8_t>(it - renumber.begin());
    }
  }
  block_count_ = static_cast<int>(renumber.size());
}

Partition Partition::from_blocks(int n, const std::vector<std::vector<std::uint8_t>>& blocks) {
  std::vector<int> block_of(n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::uint8_t x : blocks[b]) {
      if (x < 1 || x > n || block_of[x - 1] >= 0) {
        throw std::invalid_argument("blocks are not a partition of {1.." + std::to_string(n) + "}");
      }
      block_of[x - 1] = static_cast<int>(b);
    }
  }
  for (int i = 0; i < n; ++i) {
    if (block_of[i] < 0) {
      throw std::invalid_argument("point " + std::to_string(i + 1) + " missing from partition");
    }
  }
  return Partition(block_of);
}

std::vector<std::vector<std::uint8_t>> Partition::blocks() const {
  std::vector<std::vector<std::uint8_t>> out(block_count_);
  for (int i = 0; i < degree(); ++i) {
    out[block_of_[i]].push_back(static_cast<std::uint8_t>(i + 1));
  }
  return out;
}

bool Partition::refines(const Partition& coarser) const {
  if (degree() != coarser.degree()) {
    return false;
  }
  // Two points in one block here must share a block in coarser.
  std::vector<int> target(block_count_, -1);
  for (int i = 0; i < degree(); ++i) {
    int b = block_of_[i];
    int c = coarser.block_of_[i];
    if (target[b] < 0) {
      target[b] = c;
    } else if (target[b] != c) {
      return false;
    }
  }
  return true;
}

bool Partition::operator<(const Partition& other) const {
  if (degree() != other.degree()) {
    return degree() < other.degree();
  }
  return block_of_ < other.block_of_;
}

std::string Partition::to_string() const {
  auto bs = blocks();
  std::string out = "{";
  for (std::size_t b = 0; b < bs.size(); ++b) {
    if (b > 0) {
      out += '|';
    }
    for (std::size_t i = 0; i < bs[b].size(); ++i) {
      if (i > 0) {
        out += ',';
      }
      out += std::to_string(int(bs[b][i]));
    }
  }
  out += '}';
  return out;
}

Partition Partition::parse(const std::string& text, int expected_degree) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };
  skip_space();
  if (pos >= text.size() || text[pos] != '{') {
    throw std::invalid_argument("expected '{' at start of partition: " + text);
  }
  ++pos;
  std::vector<std::vector<std::uint8_t>> blocks(1);
  int max_point = 0;
  while (true) {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (start == pos) {
      throw std::invalid_argument("expected point in partition: " + text);
    }
    long value = std::stol(text.substr(start, pos - start));
    if (value < 1 || value > 255) {
      throw std::invalid_argument("point " + std::to_string(value) + " outside [1,255]");
    }
    blocks.back().push_back(static_cast<std::uint8_t>(value));
    max_point = std::max(max_point, static_cast<int>(value));
    skip_space();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < text.size() && text[pos] == '|') {
      ++pos;
      blocks.emplace_back();
      continue;
    }
    break;
  }
  if (pos >= text.size() || text[pos] != '}') {
    throw std::invalid_argument("expected '}' at end of partition: " + text);
  }
  ++pos;
  skip_space();
  if (pos != text.size()) {
    throw std::invalid_argument("trailing characters after partition: " + text);
  }
  int n = expected_degree >= 0 ? expected_degree : max_point;
  return from_blocks(n, blocks);
}

}  // namespace sandwich
