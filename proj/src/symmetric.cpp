#include "abbvloc/symmetric.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "abbvloc/error.hpp"

namespace abbvloc {

Multiindex::Multiindex(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int j : parts_)
    if (j <= 0) fail(ErrorKind::InvalidInput, "multi-index parts must be positive");
  std::sort(parts_.begin(), parts_.end());
}

int Multiindex::weight() const {
  int w = 0;
  for (int j : parts_) w += j;
  return w;
}

Multiindex Multiindex::parse(const std::string& text) {
  std::vector<int> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      parts.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidInput, "malformed multi-index '" + text + "'");
    }
  }
  return Multiindex(std::move(parts));
}

std::string Multiindex::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::vector<Multiindex> multiindices_of_weight(int total) {
  std::vector<Multiindex> out;
  std::vector<int> current;
  // Non-increasing parts, so each partition is produced once.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  if (total >= 0) rec(total, total);
  return out;
}

std::vector<Rational> elementary_symmetric_all(std::span<const Rational> xs) {
  // Coefficients of prod (1 + x_i t), built one factor at a time.
  std::vector<Rational> e(xs.size() + 1, Rational(0));
  e[0] = 1;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t k = i + 1; k >= 1; --k) e[k] += xs[i] * e[k - 1];
  return e;
}

Rational elementary_symmetric(int k, std::span<const Rational> xs) {
  if (k < 0 || static_cast<std::size_t>(k) > xs.size()) return 0;
  if (k == 0) return 1;
  return elementary_symmetric_all(xs)[static_cast<std::size_t>(k)];
}

Rational complete_homogeneous(int k, std::span<const Rational> xs) {
  if (k < 0) return 0;
  // h[j] for the prefix of variables processed so far: h_j <- h_j + x * h_{j-1}.
  std::vector<Rational> h(static_cast<std::size_t>(k) + 1, Rational(0));
  h[0] = 1;
  for (const auto& x : xs)
    for (std::size_t j = 1; j <= static_cast<std::size_t>(k); ++j) h[j] += x * h[j - 1];
  return h[static_cast<std::size_t>(k)];
}

Rational power_sum(int k, std::span<const Rational> xs) {
  Rational s = 0;
  for (const auto& x : xs) s += power(x, k);
  return s;
}

Rational s_J(const Multiindex& J, std::span<const Rational> xs) {
  if (J.empty()) return 1;
  const auto e = elementary_symmetric_all(xs);
  Rational p = 1;
  for (int j : J.parts()) p *= static_cast<std::size_t>(j) < e.size() ? e[static_cast<std::size_t>(j)] : Rational(0);
  return p;
}

}  // namespace abbvloc
