#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "omegaq/rational.hpp"

namespace omegaq {

/// Integer partition with every part >= 2, stored ascending (canonical form).
/// The empty partition is allowed and acts as the unit monomial of degree 0.
/// Partitions index both the t-monomials of the bordism ring and the
/// ch-monomials of the characteristic-number matrix.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  bool operator==(const Partition&) const = default;

  /// "(2, 2, 3)"; the empty partition renders as "()".
  std::string to_string() const;

 private:
  std::vector<int> parts_;
};

/// Canonical total order among partitions of equal weight: greater length
/// first, ties broken by elementwise comparison of the ascending part
/// sequences with the larger entry first. For n = 6 this yields
/// (2,2,2), (3,3), (2,4), (6). The order extends refinement: a proper
/// refinement always sorts strictly earlier.
bool canonical_less(const Partition& a, const Partition& b);

/// Strict weak order usable across mixed weights (weight ascending, then
/// canonical). Map comparator for graded sparse data.
struct PartitionOrder {
  bool operator()(const Partition& a, const Partition& b) const;
};

/// All partitions of n with parts >= 2, in canonical order.
/// n = 0 yields [()]; n = 1 yields [].
std::vector<Partition> enumerate_partitions(int n);

/// p'(n): the number of partitions of n with parts >= 2. Computed by dynamic
/// programming, so large n are fine; equals enumerate_partitions(n).size().
Int p_prime(long long n);

/// True iff p and q have equal weight and the parts of p can be grouped into
/// length(q) disjoint blocks whose sums form exactly the multiset of parts of
/// q. Decided by exhaustive backtracking. Reflexive and transitive.
bool refines(const Partition& p, const Partition& q);

/// Multiset union of parts; weights add. Monomial multiplication support.
Partition concat(const Partition& p, const Partition& q);

}  // namespace omegaq
