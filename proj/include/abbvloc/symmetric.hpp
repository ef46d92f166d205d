#pragma once

#include <span>
#include <string>
#include <vector>

#include "abbvloc/rational.hpp"

namespace abbvloc {

/// Multi-index J = (j_1, ..., j_l) of positive parts, kept sorted ascending.
class Multiindex {
 public:
  Multiindex() = default;
  explicit Multiindex(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  /// j_1 + ... + j_l
  int weight() const;

  /// Parses "1,1,2" (empty string gives the empty multi-index).
  static Multiindex parse(const std::string& text);
  std::string to_string() const;

  friend bool operator==(const Multiindex&, const Multiindex&) = default;

 private:
  std::vector<int> parts_;
};

/// All multi-indices whose parts sum to `total` (the partitions of total).
std::vector<Multiindex> multiindices_of_weight(int total);

/// e_k(xs); 1 for k = 0 and 0 for k > len(xs).
Rational elementary_symmetric(int k, std::span<const Rational> xs);

/// All e_0..e_len(xs) from one incremental expansion of prod (1 + x_i t).
std::vector<Rational> elementary_symmetric_all(std::span<const Rational> xs);

/// h_k(xs), the sum of all degree-k monomials; h_0 = 1 and h_k = 0 for k < 0.
Rational complete_homogeneous(int k, std::span<const Rational> xs);

/// p_k(xs) = sum of x_i^k.
Rational power_sum(int k, std::span<const Rational> xs);

/// s_J(xs) = prod_j e_j(xs).
Rational s_J(const Multiindex& J, std::span<const Rational> xs);

}  // namespace abbvloc
