#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>

#include "ramsey/progressions.hpp"

namespace ramsey {

struct SearchProgress {
  int n = 0;                   // size currently being decided
  std::uint64_t nodes = 0;     // nodes explored so far in this run
  std::chrono::milliseconds elapsed{0};
};

struct SearchConfig {
  ProgressionKind kind = ProgressionKind::arithmetic();
  int k = 3;
  int max_n = 64;
  /// Fix the color of position 1 to 0 (color swap preserves goodness).
  bool symmetry_break = true;
  /// Depth at which the tree is cut into independent subtrees; 0 disables
  /// the split and runs the plain single-threaded walk.
  int parallel_width = 0;
  /// Worker count for the split search.
  int threads = 1;
  std::uint64_t node_budget = 1'000'000'000ULL;
  /// Wall-clock budget; zero means unlimited.
  std::chrono::milliseconds time_budget{0};
  /// Called roughly every 2^22 nodes.
  std::function<void(const SearchProgress&)> on_progress;

  /// Throws PreconditionError describing the first violated invariant.
  void validate() const;
};

struct Certificate {
  ProgressionKind kind = ProgressionKind::arithmetic();
  int k = 0;
  int n = 0;
  Coloring coloring;
};

struct RamseyResult {
  int value = 0;
  Certificate witness;  // good coloring of [1, value - 1]
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds elapsed{0};
};

/// Why a search stopped before deciding its question.
enum class StopReason { node_budget, time_budget, ceiling };

/// The search ended without an exact answer. `lower_bound` is the best proven
/// lower bound on the Ramsey-type number and `best` the largest good coloring
/// found on the way.
class SearchIncomplete : public std::runtime_error {
 public:
  SearchIncomplete(StopReason reason, int lower_bound, std::optional<Certificate> best,
                   std::uint64_t nodes);
  StopReason reason() const { return reason_; }
  int lower_bound() const { return lower_bound_; }
  const std::optional<Certificate>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  StopReason reason_;
  int lower_bound_;
  std::optional<Certificate> best_;
  std::uint64_t nodes_;
};

/// Lexicographically least coloring of [1, N] with no monochromatic k-term
/// progression of `kind`, or nullopt if every coloring has one.
std::optional<Coloring> exists_good_coloring(int N, const ProgressionKind& kind, int k);

/// Same, honoring the budgets, symmetry and parallel settings in `cfg`
/// (cfg.max_n is ignored). `nodes` receives the number of nodes explored.
std::optional<Coloring> exists_good_coloring(int N, const SearchConfig& cfg,
                                             std::uint64_t* nodes = nullptr);

/// Least N <= cfg.max_n such that every 2-coloring of [1, N] contains a
/// monochromatic k-term progression of cfg.kind, with the lexicographically
/// least good coloring of [1, N-1] as witness. Throws SearchIncomplete when a
/// budget runs out or good colorings still exist at cfg.max_n.
RamseyResult ramsey_number(const SearchConfig& cfg);

/// Independent full-scan check that the certificate's coloring is good.
bool verify_certificate(const Certificate& c);

}  // namespace ramsey
