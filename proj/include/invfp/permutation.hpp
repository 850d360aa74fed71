#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace invfp {

// One-line notation: image[i] = pi(i+1), values in 1..n, each exactly once.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image);  // throws if not a bijection

  static std::optional<Permutation> parse(const std::string& text);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[static_cast<size_t>(i) - 1]; }  // 1-based
  std::span<const int> image() const { return image_; }

  bool is_involution() const;
  int fixed_points() const;

  std::string to_string() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> image_;
};

// A pattern is an explicit permutation; the named monotone tags expand to
// 12...m / m...21 at construction.
class Pattern {
 public:
  explicit Pattern(Permutation p) : perm_(std::move(p)) {}

  static Pattern increasing(int length);  // 1 2 ... length
  static Pattern decreasing(int length);  // length ... 2 1

  // Accepts "321", "3 2 1", "inc:4", "dec:4".
  static std::optional<Pattern> parse(const std::string& text);

  const Permutation& perm() const { return perm_; }
  int size() const { return perm_.size(); }

 private:
  Permutation perm_;
};

bool is_involution_image(std::span<const int> image);
int count_fixed_points(std::span<const int> image);

// True iff some subsequence of pi is order-isomorphic to sigma.  Length-3
// patterns go through a triple loop with early exits; longer patterns use
// recursive subsequence matching with a remaining-length prune.
bool contains_image(std::span<const int> pi, std::span<const int> sigma);

inline bool contains(const Permutation& pi, const Permutation& sigma) {
  return contains_image(pi.image(), sigma.image());
}
inline bool contains(const Permutation& pi, const Pattern& sigma) {
  return contains_image(pi.image(), sigma.perm().image());
}
inline bool avoids(std::span<const int> pi, std::span<const int> sigma) {
  return !contains_image(pi, sigma);
}

}  // namespace invfp
