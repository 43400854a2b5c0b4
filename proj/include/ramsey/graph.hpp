#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ramsey/rng.hpp"

namespace ramsey {

/// Simple undirected graph on vertices 0..n-1 stored as symmetric bitset rows.
class RandomGraph {
 public:
  explicit RandomGraph(int n = 0);

  static RandomGraph complete(int n);
  static RandomGraph cycle(int n);
  static RandomGraph path(int n);

  int n() const { return n_; }
  int words() const { return words_; }
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  int degree(int v) const;
  long long edge_count() const;
  std::span<const std::uint64_t> row(int v) const {
    return {adj_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
  }
  /// Row as a single word; requires n <= 64.
  std::uint64_t row_mask(int v) const { return adj_[static_cast<std::size_t>(v) * words_]; }

 private:
  std::uint64_t& word(int u, int v) { return adj_[static_cast<std::size_t>(u) * words_ + v / 64]; }

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> adj_;
};

/// G(n, p): every unordered pair is an edge independently with probability p.
RandomGraph gnp_sample(int n, double p, Rng& rng);

inline constexpr int kChromaticLimit = 20;
inline constexpr int kCliqueLimit = 40;

/// Exact chromatic number; n <= 20.
int chromatic_number(const RandomGraph& g);
/// Exact clique number; n <= 40.
int clique_number(const RandomGraph& g);
/// Every pair of distinct vertices is joined by a simple path with exactly
/// three edges.
bool has_three_path_all_pairs(const RandomGraph& g);
/// Longest strictly increasing subsequence.
int lis_length(std::span<const double> x);

}  // namespace ramsey
