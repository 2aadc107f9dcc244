#include "stablerep/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace stablerep {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw error("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw error("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  if (!text.empty()) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t pos = 0;
      int v = 0;
      try {
        v = std::stoi(item, &pos);
      } catch (const std::exception&) {
        throw error("bad partition syntax: " + text);
      }
      if (pos != item.size()) throw error("bad partition syntax: " + text);
      parts.push_back(v);
    }
  }
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

Partition pad(const Partition& lambda, int n) {
  int first = n - lambda.size();
  if (first < lambda.part(1) || first < 0)
    throw error("n too small to pad " + lambda.to_string() + " to size " +
                std::to_string(n));
  if (first == 0) return Partition();  // only reachable for the empty partition
  std::vector<int> parts;
  parts.reserve(lambda.parts().size() + 1);
  parts.push_back(first);
  parts.insert(parts.end(), lambda.parts().begin(), lambda.parts().end());
  return Partition(std::move(parts));
}

Order dominance_leq(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw error("dominance comparison requires equal sizes");
  int len = std::max(lambda.length(), mu.length());
  long a = 0, b = 0;
  bool le = true, ge = true;
  for (int i = 1; i <= len; ++i) {
    a += lambda.part(i);
    b += mu.part(i);
    if (a > b) le = false;
    if (a < b) ge = false;
  }
  if (le) return Order::LessEq;
  if (ge) return Order::Greater;
  return Order::Incomparable;
}

Order stable_leq(const Partition& lambda, const Partition& mu) {
  int witness = 2 * (lambda.size() + mu.size()) +
                std::max(lambda.part(1), mu.part(1)) + 1;
  // lambda precedes mu exactly when its pad dominates mu's pad
  Order d = dominance_leq(pad(mu, witness), pad(lambda, witness));
  return d;
}

bool is_p_regular(const Partition& lambda, Prime p) {
  int run = 1;
  for (int i = 2; i <= lambda.length(); ++i) {
    if (lambda.part(i) == lambda.part(i - 1)) {
      if (++run >= p.value()) return false;
    } else {
      run = 1;
    }
  }
  return true;
}

Partition conjugate(const Partition& lambda) {
  if (lambda.empty()) return Partition();
  std::vector<int> conj(static_cast<std::size_t>(lambda.part(1)), 0);
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 0; j < lambda.part(i); ++j) ++conj[static_cast<std::size_t>(j)];
  return Partition(std::move(conj));
}

BigInt perm_module_dim(const Partition& lambda) {
  BigInt dim = 1;
  int placed = 0;
  for (int i = lambda.length(); i >= 1; --i) {
    // multiply by C(placed + part, part)
    int part = lambda.part(i);
    for (int j = 1; j <= part; ++j) {
      dim *= placed + j;
      dim /= j;
    }
    placed += part;
  }
  return dim;
}

Partition sorted_partition(std::vector<int> entries) {
  entries.erase(std::remove(entries.begin(), entries.end(), 0), entries.end());
  std::sort(entries.begin(), entries.end(), std::greater<int>());
  return Partition(std::move(entries));
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(rest, maxpart); k >= 1; --k) {
      cur.push_back(k);
      self(self, rest - k, k);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

}  // namespace stablerep
