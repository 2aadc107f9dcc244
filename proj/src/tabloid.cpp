#include "stablerep/tabloid.hpp"

#include <algorithm>

namespace stablerep {

void Tabloid::validate() const {
  if (counts.size() != static_cast<std::size_t>(shape.length()))
    throw error("tabloid row count mismatch");
  std::vector<long> colsum(static_cast<std::size_t>(type.length()), 0);
  for (int i = 1; i <= shape.length(); ++i) {
    const auto& row = counts[static_cast<std::size_t>(i - 1)];
    if (row.size() != static_cast<std::size_t>(type.length()))
      throw error("tabloid column count mismatch");
    long rowsum = 0;
    for (int j = 0; j < type.length(); ++j) {
      if (row[static_cast<std::size_t>(j)] < 0) throw error("tabloid entry negative");
      rowsum += row[static_cast<std::size_t>(j)];
      colsum[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j)];
    }
    if (rowsum != shape.part(i)) throw error("tabloid row sum mismatch");
  }
  for (int j = 1; j <= type.length(); ++j)
    if (colsum[static_cast<std::size_t>(j - 1)] != type.part(j))
      throw error("tabloid column sum mismatch");
}

void StableTabloid::validate() const {
  if (counts.size() != static_cast<std::size_t>(shape.length()))
    throw error("stable tabloid row count mismatch");
  std::vector<long> colsum(static_cast<std::size_t>(type.length()) + 1, 0);
  for (int i = 1; i <= shape.length(); ++i) {
    const auto& row = counts[static_cast<std::size_t>(i - 1)];
    if (row.size() != static_cast<std::size_t>(type.length()) + 1)
      throw error("stable tabloid column count mismatch");
    long rowsum = 0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] < 0) throw error("stable tabloid entry negative");
      rowsum += row[j];
      colsum[j] += row[j];
    }
    if (rowsum != shape.part(i)) throw error("stable tabloid row sum mismatch");
  }
  for (int j = 1; j <= type.length(); ++j)
    if (colsum[static_cast<std::size_t>(j)] > type.part(j))
      throw error("stable tabloid column bound exceeded");
}

StableTabloid StableTabloid::identity(const Partition& mu) {
  StableTabloid t;
  t.shape = mu;
  t.type = mu;
  t.counts.assign(static_cast<std::size_t>(mu.length()),
                  std::vector<int>(static_cast<std::size_t>(mu.length()) + 1, 0));
  for (int i = 1; i <= mu.length(); ++i)
    t.counts[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i)] = mu.part(i);
  return t;
}

bool operator<(const StableTabloid& a, const StableTabloid& b) {
  if (a.shape != b.shape) return a.shape < b.shape;
  if (a.type != b.type) return a.type < b.type;
  return a.counts < b.counts;
}

std::vector<StableTabloid> enumerate_stable(const Partition& mu, const Partition& lambda) {
  const int rows = mu.length();
  const int cols = lambda.length() + 1;
  std::vector<StableTabloid> out;
  std::vector<std::vector<int>> counts(static_cast<std::size_t>(rows),
                                       std::vector<int>(static_cast<std::size_t>(cols), 0));
  std::vector<int> colroom(static_cast<std::size_t>(cols), 0);
  for (int j = 1; j < cols; ++j) colroom[static_cast<std::size_t>(j)] = lambda.part(j);

  // fill cell by cell, row-major, in lexicographically increasing order
  auto rec = [&](auto&& self, int i, int j, int rowleft) -> void {
    if (i == rows) {
      StableTabloid t{mu, lambda, counts};
      out.push_back(std::move(t));
      return;
    }
    if (j == cols - 1) {
      // last cell of the row takes the remainder; column 0 has no bound
      if (j > 0 && rowleft > colroom[static_cast<std::size_t>(j)]) return;
      counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = rowleft;
      if (j > 0) colroom[static_cast<std::size_t>(j)] -= rowleft;
      int next_left = (i + 1 < rows) ? mu.part(i + 2) : 0;
      self(self, i + 1, 0, next_left);
      if (j > 0) colroom[static_cast<std::size_t>(j)] += rowleft;
      counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 0;
      return;
    }
    int cap = (j == 0) ? rowleft : std::min(rowleft, colroom[static_cast<std::size_t>(j)]);
    for (int v = 0; v <= cap; ++v) {
      counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
      if (j > 0) colroom[static_cast<std::size_t>(j)] -= v;
      self(self, i, j + 1, rowleft - v);
      if (j > 0) colroom[static_cast<std::size_t>(j)] += v;
    }
    counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 0;
  };
  rec(rec, 0, 0, mu.part(1));
  std::sort(out.begin(), out.end());
  return out;
}

int instantiation_threshold(const Partition& mu, const Partition& lambda) {
  return std::max({1, mu.size() + mu.part(1), lambda.size() + lambda.part(1),
                   mu.size() + lambda.size()});
}

Tabloid instantiate(const StableTabloid& tau, int n) {
  if (n < instantiation_threshold(tau.shape, tau.type))
    throw error("instantiation level " + std::to_string(n) + " below threshold " +
                std::to_string(instantiation_threshold(tau.shape, tau.type)));
  Tabloid full;
  full.shape = pad(tau.shape, n);
  full.type = pad(tau.type, n);
  const int rows = tau.shape.length();
  const int cols = tau.type.length() + 1;
  full.counts.assign(static_cast<std::size_t>(rows) + 1,
                     std::vector<int>(static_cast<std::size_t>(cols), 0));
  std::vector<int> colsum(static_cast<std::size_t>(cols), 0);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      int v = tau.counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      full.counts[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(j)] = v;
      colsum[static_cast<std::size_t>(j)] += v;
    }
  for (int j = 0; j < cols; ++j)
    full.counts[0][static_cast<std::size_t>(j)] =
        full.type.part(j + 1) - colsum[static_cast<std::size_t>(j)];
  full.validate();
  return full;
}

StableTabloid de_instantiate(const Tabloid& full) {
  StableTabloid t;
  std::vector<int> shape_rest(full.shape.parts().begin() + 1, full.shape.parts().end());
  std::vector<int> type_rest(full.type.parts().begin() + 1, full.type.parts().end());
  if (full.shape.empty() || full.type.empty())
    throw error("de_instantiate expects padded shapes");
  t.shape = Partition(std::move(shape_rest));
  t.type = Partition(std::move(type_rest));
  t.counts.assign(full.counts.begin() + 1, full.counts.end());
  t.validate();
  return t;
}

StableTabloid transpose_dual(const StableTabloid& tau) {
  StableTabloid out;
  out.shape = tau.type;
  out.type = tau.shape;
  const int rows = tau.type.length();
  const int cols = tau.shape.length() + 1;
  out.counts.assign(static_cast<std::size_t>(rows),
                    std::vector<int>(static_cast<std::size_t>(cols), 0));
  for (int j = 1; j <= rows; ++j) {
    int placed = 0;
    for (int i = 1; i < cols; ++i) {
      int v = tau.counts[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
      out.counts[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i)] = v;
      placed += v;
    }
    // leftover boxes of type row j sit in the dropped first row
    out.counts[static_cast<std::size_t>(j - 1)][0] = tau.type.part(j) - placed;
  }
  out.validate();
  return out;
}

}  // namespace stablerep
