#include "omegaq/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace omegaq {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 2) throw std::invalid_argument("partition part must be >= 2");
  }
  std::sort(parts_.begin(), parts_.end());
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(parts_[i]);
  }
  out += ")";
  return out;
}

bool canonical_less(const Partition& a, const Partition& b) {
  if (a.length() != b.length()) return a.length() > b.length();
  const auto& x = a.parts();
  const auto& y = b.parts();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != y[i]) return x[i] > y[i];
  }
  return false;
}

bool PartitionOrder::operator()(const Partition& a, const Partition& b) const {
  if (a.weight() != b.weight()) return a.weight() < b.weight();
  return canonical_less(a, b);
}

namespace {

void generate(int n, int min_part, std::vector<int>& current,
              std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(current));
    return;
  }
  for (int part = min_part; part <= n; ++part) {
    if (n - part == 1) continue;  // a leftover of 1 can never be completed
    current.push_back(part);
    generate(n - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
  std::vector<Partition> out;
  std::vector<int> current;
  generate(n, 2, current, out);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

Int p_prime(long long n) {
  if (n < 0) throw std::invalid_argument("p_prime: n must be >= 0");
  std::vector<Int> count(static_cast<std::size_t>(n) + 1, 0);
  count[0] = 1;
  for (long long part = 2; part <= n; ++part) {
    for (long long total = part; total <= n; ++total) {
      count[total] += count[total - part];
    }
  }
  return count[static_cast<std::size_t>(n)];
}

namespace {

bool place_parts(const std::vector<int>& parts, std::size_t i,
                 std::vector<int>& remaining) {
  if (i == parts.size()) return true;  // sums match, so all remainders are 0
  for (std::size_t j = 0; j < remaining.size(); ++j) {
    // Blocks with equal remaining capacity are interchangeable here.
    bool duplicate = false;
    for (std::size_t j2 = 0; j2 < j; ++j2) {
      if (remaining[j2] == remaining[j]) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;
    const int after = remaining[j] - parts[i];
    if (after < 0 || after == 1) continue;  // parts >= 2 can never fill a 1
    remaining[j] = after;
    if (place_parts(parts, i + 1, remaining)) {
      remaining[j] += parts[i];
      return true;
    }
    remaining[j] += parts[i];
  }
  return false;
}

}  // namespace

bool refines(const Partition& p, const Partition& q) {
  if (p.weight() != q.weight()) return false;
  if (q.empty()) return p.empty();
  std::vector<int> parts(p.parts().rbegin(), p.parts().rend());
  std::vector<int> remaining = q.parts();
  return place_parts(parts, 0, remaining);
}

Partition concat(const Partition& p, const Partition& q) {
  std::vector<int> merged;
  merged.reserve(p.parts().size() + q.parts().size());
  std::merge(p.parts().begin(), p.parts().end(), q.parts().begin(),
             q.parts().end(), std::back_inserter(merged));
  return Partition(std::move(merged));
}

}  // namespace omegaq
