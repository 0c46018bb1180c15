#ifndef KCOVER_PERMUTATION_H_
#define KCOVER_PERMUTATION_H_

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kcover {

// Bijection on 0..n-1 stored as its image array.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int n);
  // Throws InputError unless `image` is a bijection on 0..n-1.
  static Permutation from_image(std::vector<int> image);
  // Product of the given disjoint cycles; unlisted points are fixed.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  // Parses "p(0) p(1) ... p(n-1)".
  static Permutation parse_image(std::string_view text);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int v) const { return image_[v]; }
  std::span<const int> image() const { return image_; }

  Permutation inverse() const;
  bool is_identity() const;
  bool is_involution() const;
  std::vector<int> fixed_points() const;

  // Nontrivial cycles, each starting at its least point, ordered by that
  // point.
  std::vector<std::vector<int>> cycles() const;
  // "(0 7)(1 9)(2 4)"; "()" for the identity.
  std::string cycle_string() const;
  // "p(0) p(1) ... p(n-1)".
  std::string image_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> image) : image_(std::move(image)) {}
  std::vector<int> image_;
};

// v -> p(q(v)). Throws PreconditionError on size mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

// alpha * p * alpha^-1.
Permutation conjugate(const Permutation& p, const Permutation& alpha);

// Sorted, duplicate-free collection of permutations of a common degree.
class PermutationSet {
 public:
  PermutationSet() = default;
  // Sorts and deduplicates. Throws PreconditionError on mixed degrees.
  explicit PermutationSet(std::vector<Permutation> elements);

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  // Degree of the elements; -1 when empty.
  int degree() const { return elements_.empty() ? -1 : elements_.front().size(); }
  bool contains(const Permutation& p) const;

  const Permutation& operator[](std::size_t i) const { return elements_[i]; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }
  const std::vector<Permutation>& elements() const { return elements_; }

  friend bool operator==(const PermutationSet&, const PermutationSet&) = default;

 private:
  std::vector<Permutation> elements_;
};

// True if `group` contains the identity and is closed under composition and
// inverse.
bool is_group(const PermutationSet& group);

// Partition of `set` into conjugacy classes under `group`: each class is the
// orbit of a member intersected with `set`. Classes are ordered by their
// least member. Throws PreconditionError if the degrees differ or `group` is
// not a group.
std::vector<PermutationSet> conjugacy_classes(const PermutationSet& set,
                                              const PermutationSet& group);

}  // namespace kcover

#endif  // KCOVER_PERMUTATION_H_
