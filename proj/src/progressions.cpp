#include "ramsey/progressions.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace ramsey {

Coloring::Coloring(int n) {
  if (n < 0) throw PreconditionError("coloring size must be non-negative");
  colors_.assign(static_cast<std::size_t>(n), 0);
}

Coloring::Coloring(std::vector<std::uint8_t> colors) : colors_(std::move(colors)) {
  for (auto c : colors_)
    if (c > 1) throw PreconditionError("coloring entries must be 0 or 1");
}

Coloring Coloring::parse(std::string_view text) {
  std::vector<std::uint8_t> colors;
  colors.reserve(text.size());
  for (char ch : text) {
    if (ch != '0' && ch != '1')
      throw PreconditionError("coloring string may only contain '0' and '1'");
    colors.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return Coloring(std::move(colors));
}

void Coloring::set(int position, int color) {
  if (color != 0 && color != 1) throw PreconditionError("color must be 0 or 1");
  colors_.at(position - 1) = static_cast<std::uint8_t>(color);
}

std::string Coloring::to_string() const {
  std::string out;
  out.reserve(colors_.size());
  for (auto c : colors_) out.push_back(static_cast<char>('0' + c));
  return out;
}

std::uint64_t Coloring::mask() const {
  if (size() > 64) throw PreconditionError("mask() requires n <= 64");
  std::uint64_t bits = 0;
  for (int i = 0; i < size(); ++i)
    if (colors_[i]) bits |= std::uint64_t{1} << i;
  return bits;
}

Coloring Coloring::from_mask(int n, std::uint64_t bits) {
  if (n < 0 || n > 64) throw PreconditionError("from_mask() requires 0 <= n <= 64");
  std::vector<std::uint8_t> colors(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) colors[i] = static_cast<std::uint8_t>((bits >> i) & 1U);
  return Coloring(std::move(colors));
}

ProgressionKind ProgressionKind::semi(int scope) {
  if (scope < 1) throw PreconditionError("semi-progression scope must be >= 1");
  return ProgressionKind(Family::semi, scope);
}

ProgressionKind ProgressionKind::quasi(int diameter) {
  if (diameter < 0) throw PreconditionError("quasi-progression diameter must be >= 0");
  return ProgressionKind(Family::quasi, diameter);
}

ProgressionKind ProgressionKind::from_name(std::string_view family, int param) {
  if (family == "ap" || family == "arithmetic") return arithmetic();
  if (family == "semi") return semi(param);
  if (family == "quasi") return quasi(param);
  throw PreconditionError("unknown progression family '" + std::string(family) +
                          "' (expected ap, semi or quasi)");
}

bool ProgressionKind::is_arithmetic_family() const {
  return family_ == Family::arithmetic || (family_ == Family::semi && param_ == 1) ||
         (family_ == Family::quasi && param_ == 0);
}

bool ProgressionKind::allows(int jump, int d) const {
  if (d < 1 || jump < d) return false;
  switch (family_) {
    case Family::arithmetic: return jump == d;
    case Family::semi: return jump % d == 0 && jump / d <= param_;
    case Family::quasi: return jump <= d + param_;
  }
  return false;
}

int ProgressionKind::max_jump(int d) const {
  switch (family_) {
    case Family::arithmetic: return d;
    case Family::semi: return d * param_;
    case Family::quasi: return d + param_;
  }
  return d;
}

std::vector<int> ProgressionKind::jumps(int d) const {
  std::vector<int> out;
  switch (family_) {
    case Family::arithmetic: out.push_back(d); break;
    case Family::semi:
      for (int i = 1; i <= param_; ++i) out.push_back(i * d);
      break;
    case Family::quasi:
      for (int j = d; j <= d + param_; ++j) out.push_back(j);
      break;
  }
  return out;
}

std::string ProgressionKind::family_name() const {
  switch (family_) {
    case Family::arithmetic: return "ap";
    case Family::semi: return "semi";
    case Family::quasi: return "quasi";
  }
  return "?";
}

std::string ProgressionKind::to_string() const {
  if (family_ == Family::arithmetic) return "ap";
  return family_name() + "(" + std::to_string(param_) + ")";
}

std::string Progression::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(terms[i]);
  }
  return out;
}

std::vector<int> parse_terms(std::string_view text) {
  std::vector<int> out;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto token = text.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty())
      throw PreconditionError("malformed integer list");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

namespace {

bool strictly_increasing(std::span<const int> terms) {
  return std::adjacent_find(terms.begin(), terms.end(),
                            [](int a, int b) { return b <= a; }) == terms.end();
}

}  // namespace

std::vector<int> feasible_differences(std::span<const int> terms, const ProgressionKind& kind) {
  if (terms.size() < 2) throw PreconditionError("need at least two terms to fix a difference");
  if (!strictly_increasing(terms)) throw PreconditionError("terms must be strictly increasing");

  std::vector<int> jumps(terms.size() - 1);
  for (std::size_t i = 1; i < terms.size(); ++i) jumps[i - 1] = terms[i] - terms[i - 1];
  const auto [lo, hi] = std::minmax_element(jumps.begin(), jumps.end());
  const int min_jump = *lo;
  const int max_jump = *hi;

  std::vector<int> out;
  switch (kind.family()) {
    case Family::arithmetic:
      if (min_jump == max_jump) out.push_back(min_jump);
      break;
    case Family::semi: {
      // d divides every jump and the largest jump is at most m d.
      int g = 0;
      for (int j : jumps) g = std::gcd(g, j);
      for (int d = 1; d <= g; ++d)
        if (g % d == 0 && max_jump <= kind.param() * d) out.push_back(d);
      break;
    }
    case Family::quasi:
      for (int d = std::max(1, max_jump - kind.param()); d <= min_jump; ++d) out.push_back(d);
      break;
  }
  return out;
}

bool is_progression(std::span<const int> terms, const ProgressionKind& kind) {
  if (terms.empty()) return false;
  if (terms.size() == 1) return true;
  if (!strictly_increasing(terms)) return false;
  return !feasible_differences(terms, kind).empty();
}

std::vector<Progression> enumerate_progressions(int N, const ProgressionKind& kind, int k, int a,
                                                int d) {
  if (k < 1) throw PreconditionError("k must be >= 1");
  if (d < 1) throw PreconditionError("difference must be >= 1");
  if (a < 1 || a > N) throw PreconditionError("first term must lie in [1, N]");

  std::vector<Progression> out;
  if (a + static_cast<long long>(k - 1) * d > N) return out;

  const auto jumps = kind.jumps(d);
  std::vector<int> terms{a};
  terms.reserve(static_cast<std::size_t>(k));
  // Odometer over jump indices; the first index varies slowest, which
  // yields lexicographic order of jump patterns.
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(terms.size()) == k) {
      out.push_back(Progression{terms, kind, d});
      return;
    }
    for (int j : jumps) {
      const int next = terms.back() + j;
      if (next > N) break;
      terms.push_back(next);
      self(self);
      terms.pop_back();
    }
  };
  extend(extend);
  return out;
}

namespace {

// Depth-first extension of `terms` by allowed jumps through positions sharing
// `color`. `step` is +1 for a forward scan, -1 for a backward scan.
bool extend_mono(const Coloring& c, const ProgressionKind& kind, int k, int d, int color,
                 int step, std::vector<int>& terms) {
  if (static_cast<int>(terms.size()) == k) return true;
  const int n = c.size();
  for (int j : kind.jumps(d)) {
    const int next = terms.back() + step * j;
    if (next < 1 || next > n) break;
    if (c.color(next) != color) continue;
    terms.push_back(next);
    if (extend_mono(c, kind, k, d, color, step, terms)) return true;
    terms.pop_back();
  }
  return false;
}

}  // namespace

std::optional<Progression> find_monochromatic(const Coloring& c, const ProgressionKind& kind,
                                              int k) {
  if (k < 1) throw PreconditionError("k must be >= 1");
  const int n = c.size();
  if (n < k) return std::nullopt;
  if (k == 1) return Progression{{1}, kind, std::nullopt};
  std::vector<int> terms;
  for (int a = 1; a + (k - 1) <= n; ++a) {
    for (int d = 1; a + (k - 1) * d <= n; ++d) {
      terms.assign(1, a);
      if (extend_mono(c, kind, k, d, c.color(a), +1, terms)) return Progression{terms, kind, d};
    }
  }
  return std::nullopt;
}

std::optional<Progression> find_monochromatic_ending_at(const Coloring& c,
                                                        const ProgressionKind& kind, int k,
                                                        int last) {
  if (k < 1) throw PreconditionError("k must be >= 1");
  if (last < 1 || last > c.size()) throw PreconditionError("last term must lie in [1, n]");
  if (k == 1) return Progression{{last}, kind, std::nullopt};
  std::vector<int> terms;
  for (int d = 1; last - (k - 1) * d >= 1; ++d) {
    terms.assign(1, last);
    if (extend_mono(c, kind, k, d, c.color(last), -1, terms)) {
      std::reverse(terms.begin(), terms.end());
      return Progression{terms, kind, d};
    }
  }
  return std::nullopt;
}

}  // namespace ramsey
