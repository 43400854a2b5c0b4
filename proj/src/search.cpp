#include "ramsey/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace ramsey {

void SearchConfig::validate() const {
  if (k < 2) throw PreconditionError("k must be >= 2");
  if (max_n < k) throw PreconditionError("max_n must be >= k");
  if (parallel_width < 0 || parallel_width >= max_n)
    throw PreconditionError("parallel_width must lie in [0, max_n)");
  if (threads < 1) throw PreconditionError("threads must be >= 1");
  if (k > 250) throw PreconditionError("k above 250 is not supported");
}

SearchIncomplete::SearchIncomplete(StopReason reason, int lower_bound,
                                   std::optional<Certificate> best, std::uint64_t nodes)
    : std::runtime_error(reason == StopReason::ceiling       ? "ceiling reached"
                         : reason == StopReason::node_budget ? "node budget exceeded"
                                                             : "time budget exceeded"),
      reason_(reason),
      lower_bound_(lower_bound),
      best_(std::move(best)),
      nodes_(nodes) {}

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetStop {
  StopReason reason;
};

// Node and time accounting shared by every walker of one search.
class Budget {
 public:
  Budget(const SearchConfig& cfg, Clock::time_point started)
      : limit_(cfg.node_budget), started_(started), on_progress_(cfg.on_progress) {
    if (cfg.time_budget.count() > 0) deadline_ = started + cfg.time_budget;
  }

  void charge(std::uint64_t nodes, int n) {
    const auto before = total_.fetch_add(nodes, std::memory_order_relaxed);
    const auto after = before + nodes;
    if (stopped_.load(std::memory_order_relaxed)) throw BudgetStop{stop_reason_};
    if (after > limit_) stop(StopReason::node_budget);
    if (deadline_ && Clock::now() >= *deadline_) stop(StopReason::time_budget);
    if (on_progress_ && (before >> kProgressShift) != (after >> kProgressShift)) {
      std::lock_guard lock(progress_mutex_);
      on_progress_(SearchProgress{
          n, after, std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started_)});
    }
  }

  [[noreturn]] void stop(StopReason reason) {
    bool expected = false;
    if (stopped_.compare_exchange_strong(expected, true)) stop_reason_ = reason;
    throw BudgetStop{reason};
  }

  // Accounts for leftover nodes without budget checks.
  void settle(std::uint64_t nodes) { total_.fetch_add(nodes, std::memory_order_relaxed); }

  std::uint64_t total() const { return total_.load(); }

 private:
  static constexpr int kProgressShift = 22;
  std::atomic<std::uint64_t> total_{0};
  std::atomic<bool> stopped_{false};
  StopReason stop_reason_ = StopReason::node_budget;
  std::uint64_t limit_;
  Clock::time_point started_;
  std::optional<Clock::time_point> deadline_;
  const std::function<void(const SearchProgress&)>& on_progress_;
  std::mutex progress_mutex_;
};

// Lexicographic depth-first walk over colorings of [1, n].
//
// For every placed position x and difference d the walker keeps
//   chain(x, d) = length of the longest monochromatic progression with
//                 witness d that ends at x (capped at k),
// computed from chain(x - j, d) over the allowed jumps j. A position can be
// placed iff no chain reaches k, which is exactly the check for a
// monochromatic progression whose last term is the new position.
class Walker {
 public:
  Walker(const ProgressionKind& kind, int k, int n, Budget& budget)
      : k_(k), n_(n), max_d_(n > 1 ? (n - 1) / (k - 1) : 0), budget_(budget) {
    colors_.assign(static_cast<std::size_t>(n), 0);
    chain_.assign(static_cast<std::size_t>(n) * (max_d_ + 1), 0);
    jump_offsets_.push_back(0);
    jump_offsets_.push_back(0);  // d = 0 unused
    for (int d = 1; d <= max_d_; ++d) {
      for (int j : kind.jumps(d)) jumps_.push_back(j);
      jump_offsets_.push_back(static_cast<int>(jumps_.size()));
    }
  }

  ~Walker() { budget_.settle(pending_); }
  Walker(const Walker&) = delete;
  Walker& operator=(const Walker&) = delete;

  /// Starts a walk at `start` (a prefix of the first coloring considered).
  /// The first `fixed` positions are pinned to start's values.
  void begin(std::span<const std::uint8_t> start, int fixed) {
    start_.assign(start.begin(), start.end());
    fixed_ = fixed;
    pos_ = 0;
    color_ = start_.empty() ? 0 : start_[0];
    on_start_ = !start_.empty();
    resume_ = false;
  }

  /// Next good coloring in lexicographic order, or nullopt when exhausted.
  std::optional<Coloring> next() {
    if (resume_) {
      resume_ = false;
      pos_ = n_ - 1;
      color_ = colors_[pos_];
      if (!advance()) return std::nullopt;
    }
    if (n_ == 0) {
      resume_ = true;
      return Coloring(0);
    }
    while (true) {
      if (place(pos_, color_)) {
        if (++pos_ == n_) {
          resume_ = true;
          return Coloring(colors_);
        }
        color_ = (on_start_ && pos_ < static_cast<int>(start_.size())) ? start_[pos_] : 0;
        continue;
      }
      if (!advance()) return std::nullopt;
    }
  }

  std::uint64_t nodes() const { return nodes_ + pending_; }

 private:
  // Moves to the next untried (position, color) after a failure or leaf.
  bool advance() {
    while (true) {
      if (pos_ < fixed_) return false;
      on_start_ = false;
      if (color_ == 0) {
        color_ = 1;
        return true;
      }
      if (pos_ == 0) return false;
      --pos_;
      color_ = colors_[pos_];
    }
  }

  bool place(int pos, std::uint8_t color) {
    if (++pending_ == kFlushEvery) flush();
    colors_[pos] = color;
    const std::size_t stride = static_cast<std::size_t>(max_d_) + 1;
    std::uint8_t* row = &chain_[pos * stride];
    for (int d = 1; d <= max_d_; ++d) {
      int best = 1;
      for (int idx = jump_offsets_[d]; idx < jump_offsets_[d + 1]; ++idx) {
        const int prev = pos - jumps_[idx];
        if (prev < 0) break;
        if (colors_[prev] == color) best = std::max(best, chain_[prev * stride + d] + 1);
      }
      if (best >= k_) return false;
      row[d] = static_cast<std::uint8_t>(best);
    }
    return true;
  }

  void flush() {
    if (pending_ == 0) return;
    const auto p = pending_;
    nodes_ += p;
    pending_ = 0;
    budget_.charge(p, n_);
  }

  static constexpr std::uint64_t kFlushEvery = 4096;

  int k_;
  int n_;
  int max_d_;
  Budget& budget_;
  std::vector<std::uint8_t> colors_;
  std::vector<std::uint8_t> chain_;
  std::vector<int> jumps_;
  std::vector<int> jump_offsets_;

  std::vector<std::uint8_t> start_;
  int fixed_ = 0;
  int pos_ = 0;
  std::uint8_t color_ = 0;
  bool on_start_ = false;
  bool resume_ = false;

  std::uint64_t nodes_ = 0;
  std::uint64_t pending_ = 0;
};

// Lexicographically least good coloring of [1, n] that is >= start, where
// start is either empty or begins with 0.
std::optional<Coloring> solve(int n, const SearchConfig& cfg, std::vector<std::uint8_t> start,
                              Budget& budget) {
  if (n == 0) return Coloring(0);
  if (cfg.symmetry_break && start.empty()) start.push_back(0);
  const int pinned = cfg.symmetry_break ? 1 : 0;
  const int width = std::min(cfg.parallel_width, n);

  if (width == 0) {
    Walker walker(cfg.kind, cfg.k, n, budget);
    walker.begin(start, pinned);
    return walker.next();
  }

  // Enumerate good prefixes of length `width` that can still lead to a
  // coloring >= start, in lexicographic order.
  std::vector<Coloring> prefixes;
  {
    Walker walker(cfg.kind, cfg.k, width, budget);
    const auto head = std::span(start).first(std::min<std::size_t>(start.size(), width));
    walker.begin(head, std::min(pinned, width));
    while (auto p = walker.next()) prefixes.push_back(std::move(*p));
  }
  if (prefixes.empty()) return std::nullopt;

  const std::size_t tasks = prefixes.size();
  std::vector<std::optional<Coloring>> results(tasks);
  std::atomic<std::size_t> next_task{0};
  std::atomic<std::size_t> best{tasks};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    try {
      while (true) {
        const std::size_t i = next_task.fetch_add(1);
        if (i >= tasks) return;
        if (i > best.load()) continue;
        const auto prefix = prefixes[i].colors();
        const bool warm = start.size() > prefix.size() &&
                          std::equal(prefix.begin(), prefix.end(), start.begin());
        Walker walker(cfg.kind, cfg.k, n, budget);
        if (warm)
          walker.begin(start, width);
        else
          walker.begin(prefix, width);
        if (auto found = walker.next()) {
          results[i] = std::move(found);
          auto current = best.load();
          while (i < current && !best.compare_exchange_weak(current, i)) {
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next_task.store(tasks);
    }
  };

  const int workers = std::max(1, std::min<int>(cfg.threads, static_cast<int>(tasks)));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  const auto b = best.load();
  if (b == tasks) return std::nullopt;
  return results[b];
}

std::vector<std::uint8_t> as_start(const Coloring& prev) {
  std::vector<std::uint8_t> start(prev.colors().begin(), prev.colors().end());
  start.push_back(0);
  return start;
}

}  // namespace

std::optional<Coloring> exists_good_coloring(int N, const ProgressionKind& kind, int k) {
  SearchConfig cfg;
  cfg.kind = kind;
  cfg.k = k;
  return exists_good_coloring(N, cfg);
}

std::optional<Coloring> exists_good_coloring(int N, const SearchConfig& cfg,
                                             std::uint64_t* nodes) {
  if (N < 0) throw PreconditionError("N must be >= 0");
  if (cfg.k < 2) throw PreconditionError("k must be >= 2");
  if (cfg.threads < 1 || cfg.parallel_width < 0)
    throw PreconditionError("invalid parallel settings");
  Budget budget(cfg, Clock::now());
  try {
    auto out = solve(N, cfg, {}, budget);
    if (nodes) *nodes = budget.total();
    return out;
  } catch (const BudgetStop& stop) {
    throw SearchIncomplete(stop.reason, 0, std::nullopt, budget.total());
  }
}

RamseyResult ramsey_number(const SearchConfig& cfg) {
  cfg.validate();
  const auto started = Clock::now();
  Budget budget(cfg, started);

  Coloring prev(cfg.k - 1);  // every coloring of [1, k-1] is good
  try {
    for (int n = cfg.k; n <= cfg.max_n; ++n) {
      auto found = solve(n, cfg, as_start(prev), budget);
      if (!found) {
        return RamseyResult{n, Certificate{cfg.kind, cfg.k, n - 1, std::move(prev)},
                            budget.total(), Clock::now() - started};
      }
      prev = std::move(*found);
    }
  } catch (const BudgetStop& stop) {
    const int good = prev.size();
    throw SearchIncomplete(stop.reason, good + 1, Certificate{cfg.kind, cfg.k, good, prev},
                           budget.total());
  }
  const int good = prev.size();
  throw SearchIncomplete(StopReason::ceiling, good + 1,
                         Certificate{cfg.kind, cfg.k, good, std::move(prev)}, budget.total());
}

bool verify_certificate(const Certificate& c) {
  if (c.k < 1 || c.coloring.size() != c.n) return false;
  return !find_monochromatic(c.coloring, c.kind, c.k).has_value();
}

}  // namespace ramsey
