#include "kcover/permutation.h"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "kcover/errors.h"

namespace kcover {

Permutation Permutation::identity(int n) {
  std::vector<int> image(n);
  for (int v = 0; v < n; ++v) image[v] = v;
  return Permutation(std::move(image));
}

Permutation Permutation::from_image(std::vector<int> image) {
  const int n = static_cast<int>(image.size());
  std::vector<bool> hit(n, false);
  for (int x : image) {
    if (x < 0 || x >= n || hit[x]) {
      throw InputError("permutation image is not a bijection on 0.." +
                       std::to_string(n - 1));
    }
    hit[x] = true;
  }
  return Permutation(std::move(image));
}

Permutation Permutation::from_cycles(int n,
                                     const std::vector<std::vector<int>>& cycles) {
  std::vector<int> image(n);
  for (int v = 0; v < n; ++v) image[v] = v;
  std::vector<bool> used(n, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int v = c[i];
      if (v < 0 || v >= n || used[v]) {
        throw InputError("cycles are not disjoint or reference points outside 0.." +
                         std::to_string(n - 1));
      }
      used[v] = true;
      image[v] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(image));
}

Permutation Permutation::parse_image(std::string_view text) {
  std::vector<int> image;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r') {
      ++i;
      continue;
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + i) {
      throw InputError("permutation: expected integer image list");
    }
    image.push_back(value);
    i = ptr - text.data();
  }
  return from_image(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int v = 0; v < size(); ++v) inv[image_[v]] = v;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int v = 0; v < size(); ++v) {
    if (image_[v] != v) return false;
  }
  return true;
}

bool Permutation::is_involution() const {
  for (int v = 0; v < size(); ++v) {
    if (image_[image_[v]] != v) return false;
  }
  return true;
}

std::vector<int> Permutation::fixed_points() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v) {
    if (image_[v] == v) out.push_back(v);
  }
  return out;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(image_.size(), false);
  for (int v = 0; v < size(); ++v) {
    if (seen[v] || image_[v] == v) continue;
    std::vector<int> c;
    for (int w = v; !seen[w]; w = image_[w]) {
      seen[w] = true;
      c.push_back(w);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Permutation::cycle_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream out;
  for (const auto& c : cs) {
    out << '(';
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
    out << ')';
  }
  return out.str();
}

std::string Permutation::image_string() const {
  std::ostringstream out;
  for (int v = 0; v < size(); ++v) out << (v ? " " : "") << image_[v];
  return out.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw PreconditionError("compose: permutation sizes differ");
  std::vector<int> image(p.size());
  for (int v = 0; v < p.size(); ++v) image[v] = p(q(v));
  return Permutation::from_image(std::move(image));
}

Permutation conjugate(const Permutation& p, const Permutation& alpha) {
  return compose(compose(alpha, p), alpha.inverse());
}

PermutationSet::PermutationSet(std::vector<Permutation> elements)
    : elements_(std::move(elements)) {
  for (const auto& p : elements_) {
    if (p.size() != elements_.front().size()) {
      throw PreconditionError("permutation set mixes degrees");
    }
  }
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool PermutationSet::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool is_group(const PermutationSet& group) {
  if (group.empty()) return false;
  if (!group.contains(Permutation::identity(group.degree()))) return false;
  for (const auto& a : group) {
    if (!group.contains(a.inverse())) return false;
    for (const auto& b : group) {
      if (!group.contains(compose(a, b))) return false;
    }
  }
  return true;
}

std::vector<PermutationSet> conjugacy_classes(const PermutationSet& set,
                                              const PermutationSet& group) {
  if (set.empty()) return {};
  if (!group.empty() && set.degree() != group.degree()) {
    throw PreconditionError("conjugacy_classes: set and group degrees differ");
  }
  if (!is_group(group)) {
    throw PreconditionError("conjugacy_classes: acting set is not closed under "
                            "composition and inverse");
  }
  std::vector<bool> assigned(set.size(), false);
  std::vector<PermutationSet> classes;
  // set is sorted, so scanning in order yields classes keyed by least member.
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (assigned[i]) continue;
    std::vector<Permutation> members;
    for (const auto& alpha : group) {
      Permutation c = conjugate(set[i], alpha);
      auto it = std::lower_bound(set.begin(), set.end(), c);
      if (it == set.end() || *it != c) continue;
      const auto j = static_cast<std::size_t>(it - set.begin());
      if (!assigned[j]) {
        assigned[j] = true;
        members.push_back(std::move(c));
      }
    }
    assigned[i] = true;
    members.push_back(set[i]);
    classes.emplace_back(std::move(members));
  }
  return classes;
}

}  // namespace kcover
