#pragma once
//
// Transformations of {1..n} under left-to-right composition, their kernels,
// images and ranks, and the dense index codec used by the set machinery.
//
// Composition is left-to-right throughout: (beta gamma)(x) = gamma(beta(x)).

#include <cstdint>
#include <string>
#include <vector>

namespace sandwich {

// n^n as uint64_t; throws std::overflow_error for n > 15.
std::uint64_t universe_size(int n);

class Partition;

// A total map beta: {1..n} -> {1..n}.  Entry i (0-based) of images() is
// beta(i+1); values are 1-based.  Immutable after construction.
class Transformation {
 public:
  Transformation() = default;
  explicit Transformation(std::vector<std::uint8_t> images);

  static Transformation identity(int n);
  // theta_value: the constant map x |-> value.
  static Transformation constant(int n, int value);
  static Transformation from_index(int n, std::uint64_t index);

  int degree() const { return static_cast<int>(images_.size()); }
  // Value on a 1-based point.
  int operator()(int x) const { return images_[x - 1]; }
  const std::vector<std::uint8_t>& images() const { return images_; }

  // Canonical dense encoding: sum over i of (images[i]-1) * n^i, a bijection
  // onto [0, n^n).
  std::uint64_t index() const;

  bool operator==(const Transformation& other) const = default;
  bool operator<(const Transformation& other) const;

  // "[2,3,1]"
  std::string to_string() const;
  // Accepts "[2,3,1]" with optional spaces.  If expected_degree >= 0, the
  // parsed degree must match.  Throws std::invalid_argument naming the
  // offending entry on bad input.
  static Transformation parse(const std::string& text, int expected_degree = -1);

 private:
  std::vector<std::uint8_t> images_;
};

// beta followed by gamma: result(x) = gamma(beta(x)).  Degrees must match.
Transformation compose(const Transformation& beta, const Transformation& gamma);

bool is_plain_idempotent(const Transformation& beta);

// The partition of {1..n} into the preimage classes of beta.
Partition kernel(const Transformation& beta);
// Sorted ascending, 1-based.
std::vector<std::uint8_t> image(const Transformation& beta);
int rank(const Transformation& beta);

// A partition of {1..n} in canonical form: blocks ordered by minimal element,
// elements inside a block ascending.  Stored as a block id per point, ids
// assigned in order of first appearance (which matches the canonical block
// order).
class Partition {
 public:
  Partition() = default;
  // block_of[i] identifies the block of point i+1; ids are renumbered to the
  // canonical first-appearance order.
  explicit Partition(const std::vector<int>& block_of);
  static Partition from_blocks(int n, const std::vector<std::vector<std::uint8_t>>& blocks);

  int degree() const { return static_cast<int>(block_of_.size()); }
  int block_count() const { return block_count_; }
  // 0-based canonical block id of a 1-based point.
  int block_of(int x) const { return block_of_[x - 1]; }
  std::vector<std::vector<std::uint8_t>> blocks() const;

  // True when every block of this partition is contained in one block of
  // coarser.
  bool refines(const Partition& coarser) const;

  bool operator==(const Partition& other) const = default;
  bool operator<(const Partition& other) const;

  // "{1,2|3}"
  std::string to_string() const;
  static Partition parse(const std::string& text, int expected_degree = -1);

 private:
  std::vector<std::uint8_t> block_of_;
  int block_count_ = 0;
};

}  // namespace sandwich
