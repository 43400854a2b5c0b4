#include "ramsey/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "ramsey/counting.hpp"

namespace ramsey {

RandomGraph::RandomGraph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 0) throw PreconditionError("n must be >= 0");
  adj_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

RandomGraph RandomGraph::complete(int n) {
  RandomGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

RandomGraph RandomGraph::cycle(int n) {
  if (n < 3) throw PreconditionError("a cycle needs n >= 3");
  RandomGraph g(n);
  for (int u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
  return g;
}

RandomGraph RandomGraph::path(int n) {
  RandomGraph g(n);
  for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

void RandomGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw PreconditionError("vertex out of range");
  if (u == v) throw PreconditionError("self-loops are not allowed");
  word(u, v) |= std::uint64_t{1} << (v % 64);
  word(v, u) |= std::uint64_t{1} << (u % 64);
}

bool RandomGraph::has_edge(int u, int v) const {
  return (row(u)[v / 64] >> (v % 64)) & 1U;
}

int RandomGraph::degree(int v) const {
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

long long RandomGraph::edge_count() const {
  long long twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

RandomGraph gnp_sample(int n, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("p must lie in [0, 1]");
  RandomGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) g.add_edge(u, v);
  return g;
}

// --- clique number -----------------------------------------------------------

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

// Branch and bound over candidate sets, pruning with a greedy coloring bound.
class CliqueSearch {
 public:
  explicit CliqueSearch(const RandomGraph& g) {
    for (int v = 0; v < g.n(); ++v) adj_.push_back(g.row_mask(v));
  }

  int run(Mask all) {
    if (all) expand(0, all);
    return best_;
  }

 private:
  void expand(int size, Mask P) {
    std::vector<int> order;
    std::vector<int> bound;
    Mask uncolored = P;
    int color = 0;
    while (uncolored) {
      ++color;
      Mask q = uncolored;
      while (q) {
        const int v = std::countr_zero(q);
        q &= ~bit(v) & ~adj_[v];
        uncolored &= ~bit(v);
        order.push_back(v);
        bound.push_back(color);
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (size + bound[i] <= best_) return;
      const int v = order[i];
      const Mask next = P & adj_[v];
      if (next == 0)
        best_ = std::max(best_, size + 1);
      else
        expand(size + 1, next);
      P &= ~bit(v);
    }
  }

  std::vector<Mask> adj_;
  int best_ = 0;
};

// --- chromatic number ----------------------------------------------------------

class Colorer {
 public:
  explicit Colorer(const RandomGraph& g) : n_(g.n()), color_(n_, -1) {
    for (int v = 0; v < n_; ++v) adj_.push_back(static_cast<std::uint32_t>(g.row_mask(v)));
  }

  // DSATUR greedy coloring; returns the number of colors used.
  int dsatur() {
    std::fill(color_.begin(), color_.end(), -1);
    int used = 0;
    for (int step = 0; step < n_; ++step) {
      const int v = pick();
      const std::uint32_t taken = neighbor_colors(v);
      const int c = std::countr_one(taken);
      color_[v] = c;
      used = std::max(used, c + 1);
    }
    return used;
  }

  bool colorable(int k) {
    std::fill(color_.begin(), color_.end(), -1);
    return assign(k, 0, 0);
  }

 private:
  std::uint32_t neighbor_colors(int v) const {
    std::uint32_t taken = 0;
    for (std::uint32_t m = adj_[v]; m; m &= m - 1) {
      const int w = std::countr_zero(m);
      if (color_[w] >= 0) taken |= 1U << color_[w];
    }
    return taken;
  }

  // Uncolored vertex of maximum saturation, ties broken by degree, then index.
  int pick() const {
    int best = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < n_; ++v) {
      if (color_[v] >= 0) continue;
      const int sat = std::popcount(neighbor_colors(v));
      const int deg = std::popcount(adj_[v]);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  bool assign(int k, int colored, int used) {
    if (colored == n_) return true;
    const int v = pick();
    const std::uint32_t taken = neighbor_colors(v);
    // A fresh color is interchangeable with any other unused one.
    const int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (taken & (1U << c)) continue;
      color_[v] = c;
      if (assign(k, colored + 1, std::max(used, c + 1))) return true;
    }
    color_[v] = -1;
    return false;
  }

  int n_;
  std::vector<std::uint32_t> adj_;
  std::vector<int> color_;
};

}  // namespace

int clique_number(const RandomGraph& g) {
  if (g.n() > kCliqueLimit)
    throw BudgetError("clique_number is limited to n <= " + std::to_string(kCliqueLimit));
  const Mask all = g.n() == 64 ? ~Mask{0} : (Mask{1} << g.n()) - 1;
  return CliqueSearch(g).run(all);
}

int chromatic_number(const RandomGraph& g) {
  if (g.n() > kChromaticLimit)
    throw BudgetError("chromatic_number is limited to n <= " + std::to_string(kChromaticLimit));
  if (g.n() == 0) return 0;
  Colorer colorer(g);
  const int upper = colorer.dsatur();
  for (int k = clique_number(g); k < upper; ++k)
    if (colorer.colorable(k)) return k;
  return upper;
}

bool has_three_path_all_pairs(const RandomGraph& g) {
  const int n = g.n();
  const int words = g.words();
  for (int u = 0; u < n; ++u) {
    const auto ru = g.row(u);
    for (int v = u + 1; v < n; ++v) {
      const auto rv = g.row(v);
      bool found = false;
      for (int wi = 0; wi < words && !found; ++wi) {
        for (std::uint64_t m = ru[wi]; m && !found; m &= m - 1) {
          const int w1 = wi * 64 + std::countr_zero(m);
          if (w1 == v) continue;
          const auto r1 = g.row(w1);
          // w2 must be a common neighbor of w1 and v other than u.
          for (int x = 0; x < words && !found; ++x) {
            std::uint64_t common = r1[x] & rv[x];
            if (x == u / 64) common &= ~(std::uint64_t{1} << (u % 64));
            found = common != 0;
          }
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

int lis_length(std::span<const double> x) {
  std::vector<double> tails;
  for (double v : x) {
    auto it = std::lower_bound(tails.begin(), tails.end(), v);
    if (it == tails.end())
      tails.push_back(v);
    else
      *it = v;
  }
  return static_cast<int>(tails.size());
}

}  // namespace ramsey
