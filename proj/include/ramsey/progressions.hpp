#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey {

/// Raised when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A 2-coloring of [1, n]. Position i (1-based) carries color 0 or 1.
class Coloring {
 public:
  Coloring() = default;
  /// All-zero coloring of [1, n].
  explicit Coloring(int n);
  explicit Coloring(std::vector<std::uint8_t> colors);

  /// Parses a string over {0,1}, index 1 first.
  static Coloring parse(std::string_view text);

  int size() const { return static_cast<int>(colors_.size()); }
  int color(int position) const { return colors_.at(position - 1); }
  void set(int position, int color);

  std::span<const std::uint8_t> colors() const { return colors_; }
  std::string to_string() const;

  /// Bit i holds the color of position i+1. Only valid for n <= 64.
  std::uint64_t mask() const;
  static Coloring from_mask(int n, std::uint64_t bits);

  friend bool operator==(const Coloring&, const Coloring&) = default;
  /// Lexicographic with 0 < 1, position 1 most significant.
  friend auto operator<=>(const Coloring& a, const Coloring& b) { return a.colors_ <=> b.colors_; }

 private:
  std::vector<std::uint8_t> colors_;
};

enum class Family { arithmetic, semi, quasi };

/// Arithmetic, semi-progression of scope m, or quasi-progression of diameter n.
///
/// For a witness difference d the allowed jumps between consecutive terms are
///   arithmetic: {d}
///   semi(m):    {d, 2d, ..., m d}
///   quasi(n):   {d, d+1, ..., d+n}
/// so semi(1) and quasi(0) behave exactly like arithmetic.
class ProgressionKind {
 public:
  static ProgressionKind arithmetic() { return ProgressionKind(Family::arithmetic, 0); }
  static ProgressionKind semi(int scope);
  static ProgressionKind quasi(int diameter);
  /// Accepts "ap", "semi", "quasi" (param ignored for ap).
  static ProgressionKind from_name(std::string_view family, int param);

  Family family() const { return family_; }
  /// Scope for semi, diameter for quasi, 0 for arithmetic.
  int param() const { return param_; }
  bool is_arithmetic_family() const;

  bool allows(int jump, int d) const;
  int min_jump(int d) const { return d; }
  int max_jump(int d) const;
  /// Allowed jumps for difference d, ascending.
  std::vector<int> jumps(int d) const;

  std::string family_name() const;
  /// "ap", "semi(2)", "quasi(1)".
  std::string to_string() const;

  friend bool operator==(const ProgressionKind&, const ProgressionKind&) = default;

 private:
  ProgressionKind(Family f, int p) : family_(f), param_(p) {}
  Family family_;
  int param_;
};

struct Progression {
  std::vector<int> terms;
  ProgressionKind kind = ProgressionKind::arithmetic();
  std::optional<int> difference;

  std::string to_string() const;  // "1,2,4"
  friend bool operator==(const Progression&, const Progression&) = default;
};

/// Parses a comma-separated integer list.
std::vector<int> parse_terms(std::string_view text);

/// Every d >= 1 for which all consecutive jumps of `terms` are allowed.
/// Throws PreconditionError unless terms is strictly increasing with length >= 2.
std::vector<int> feasible_differences(std::span<const int> terms, const ProgressionKind& kind);

/// A single term is a progression of every kind; an empty or non-increasing
/// sequence is never one.
bool is_progression(std::span<const int> terms, const ProgressionKind& kind);

/// All k-term progressions of `kind` starting at `a` with witness difference
/// `d` whose terms stay within [1, N], ordered lexicographically by jump
/// pattern.
std::vector<Progression> enumerate_progressions(int N, const ProgressionKind& kind, int k, int a,
                                                int d);

/// Full forward scan over every first term a and difference d. Returns the
/// first monochromatic progression in (a, d, jump pattern) order.
std::optional<Progression> find_monochromatic(const Coloring& c, const ProgressionKind& kind,
                                              int k);

/// Same search restricted to progressions whose last term is `last`.
std::optional<Progression> find_monochromatic_ending_at(const Coloring& c,
                                                        const ProgressionKind& kind, int k,
                                                        int last);

}  // namespace ramsey
