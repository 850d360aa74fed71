#include "invfp/permutation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace invfp {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = static_cast<int>(image_.size());
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int v : image_) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v)]) {
      throw std::invalid_argument("permutation image is not a bijection on 1..n");
    }
    seen[static_cast<size_t>(v)] = 1;
  }
}

std::optional<Permutation> Permutation::parse(const std::string& text) {
  std::vector<int> image;
  if (text.find(' ') == std::string::npos && text.find(',') == std::string::npos) {
    // Compact digit form, usable up to n = 9.
    for (char c : text) {
      if (c < '1' || c > '9') return std::nullopt;
      image.push_back(c - '0');
    }
  } else {
    std::string norm = text;
    std::replace(norm.begin(), norm.end(), ',', ' ');
    std::istringstream in(norm);
    int v = 0;
    while (in >> v) image.push_back(v);
    if (!in.eof()) return std::nullopt;
  }
  if (image.empty() && !text.empty()) return std::nullopt;
  try {
    return Permutation(std::move(image));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

bool Permutation::is_involution() const { return is_involution_image(image_); }
int Permutation::fixed_points() const { return count_fixed_points(image_); }

std::string Permutation::to_string() const {
  std::string out;
  const bool compact = size() <= 9;
  for (size_t i = 0; i < image_.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += std::to_string(image_[i]);
  }
  return out;
}

Pattern Pattern::increasing(int length) {
  if (length < 1) throw std::invalid_argument("pattern length must be >= 1");
  std::vector<int> image(static_cast<size_t>(length));
  for (int i = 0; i < length; ++i) image[static_cast<size_t>(i)] = i + 1;
  return Pattern(Permutation(std::move(image)));
}

Pattern Pattern::decreasing(int length) {
  if (length < 1) throw std::invalid_argument("pattern length must be >= 1");
  std::vector<int> image(static_cast<size_t>(length));
  for (int i = 0; i < length; ++i) image[static_cast<size_t>(i)] = length - i;
  return Pattern(Permutation(std::move(image)));
}

std::optional<Pattern> Pattern::parse(const std::string& text) {
  auto tagged = [&](const std::string& tag) -> std::optional<int> {
    if (text.rfind(tag + ":", 0) != 0) return std::nullopt;
    try {
      size_t pos = 0;
      int len = std::stoi(text.substr(tag.size() + 1), &pos);
      if (pos + tag.size() + 1 != text.size() || len < 1) return std::nullopt;
      return len;
    } catch (...) {
      return std::nullopt;
    }
  };
  if (auto len = tagged("inc")) return Pattern::increasing(*len);
  if (auto len = tagged("dec")) return Pattern::decreasing(*len);
  auto perm = Permutation::parse(text);
  if (!perm || perm->size() == 0) return std::nullopt;
  return Pattern(std::move(*perm));
}

bool is_involution_image(std::span<const int> image) {
  const int n = static_cast<int>(image.size());
  for (int i = 1; i <= n; ++i) {
    if (image[static_cast<size_t>(image[static_cast<size_t>(i) - 1]) - 1] != i) return false;
  }
  return true;
}

int count_fixed_points(std::span<const int> image) {
  int fp = 0;
  for (size_t i = 0; i < image.size(); ++i) {
    if (image[i] == static_cast<int>(i) + 1) ++fp;
  }
  return fp;
}

namespace {

inline int cmp(int a, int b) { return a < b ? -1 : 1; }  // values are distinct

bool contains3(std::span<const int> pi, std::span<const int> sigma) {
  const int n = static_cast<int>(pi.size());
  const int s01 = cmp(sigma[0], sigma[1]);
  const int s02 = cmp(sigma[0], sigma[2]);
  const int s12 = cmp(sigma[1], sigma[2]);
  for (int i = 0; i < n - 2; ++i) {
    for (int j = i + 1; j < n - 1; ++j) {
      if (cmp(pi[static_cast<size_t>(i)], pi[static_cast<size_t>(j)]) != s01) continue;
      for (int k = j + 1; k < n; ++k) {
        if (cmp(pi[static_cast<size_t>(i)], pi[static_cast<size_t>(k)]) == s02 &&
            cmp(pi[static_cast<size_t>(j)], pi[static_cast<size_t>(k)]) == s12) {
          return true;
        }
      }
    }
  }
  return false;
}

bool match_general(std::span<const int> pi, std::span<const int> sigma, std::vector<int>& chosen,
                   size_t t, size_t start) {
  const size_t m = sigma.size();
  if (t == m) return true;
  // Not enough positions left for the rest of the pattern.
  for (size_t p = start; p + (m - t) <= pi.size(); ++p) {
    const int v = pi[p];
    bool ok = true;
    for (size_t s = 0; s < t; ++s) {
      if ((v > chosen[s]) != (sigma[t] > sigma[s])) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chosen[t] = v;
    if (match_general(pi, sigma, chosen, t + 1, p + 1)) return true;
  }
  return false;
}

}  // namespace

bool contains_image(std::span<const int> pi, std::span<const int> sigma) {
  if (sigma.empty()) throw std::invalid_argument("pattern must be nonempty");
  if (sigma.size() > pi.size()) return false;
  if (sigma.size() == 3) return contains3(pi, sigma);
  std::vector<int> chosen(sigma.size(), 0);
  return match_general(pi, sigma, chosen, 0, 0);
}

}  // namespace invfp
