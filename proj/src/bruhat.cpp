#include "rook/bruhat.hpp"

#include "rook/length.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace rook {

namespace {

void require_same_length(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": length mismatch (" + std::to_string(a) +
                                " vs " + std::to_string(b) + ")");
  }
}

// Inserts v into a non-increasing vector, keeping it non-increasing.
void insert_sorted(IntVector& sorted, int v) {
  sorted.insert(std::upper_bound(sorted.begin(), sorted.end(), v, std::greater<>{}), v);
}

// Visited set for the closure search, dense while (n+1)^n stays small.
class VisitedSet {
 public:
  explicit VisitedSet(int n) {
    std::uint64_t states = 1;
    for (int i = 0; i < n && states <= kDenseLimit; ++i) states *= static_cast<std::uint64_t>(n) + 1;
    if (states <= kDenseLimit) dense_.assign(states, 0);
  }

  // True if newly inserted.
  bool insert(std::uint64_t code) {
    if (!dense_.empty()) {
      if (dense_[code]) return false;
      dense_[code] = 1;
      return true;
    }
    return sparse_.insert(code).second;
  }

 private:
  static constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 21;
  std::vector<char> dense_;
  std::unordered_set<std::uint64_t> sparse_;
};

// Positions (0-based) where x and y differ.
std::vector<int> differing_positions(const OneLine& x, const OneLine& y) {
  std::vector<int> diff;
  for (int p = 0; p < x.size(); ++p) {
    if (x.entries()[p] != y.entries()[p]) diff.push_back(p);
  }
  return diff;
}

}  // namespace

IntVector nonincreasing(std::span<const int> a) {
  IntVector out(a.begin(), a.end());
  std::sort(out.begin(), out.end(), std::greater<>{});
  return out;
}

IntVector truncate(std::span<const int> a, int k) {
  if (k < 1 || k > static_cast<int>(a.size())) {
    throw std::out_of_range("truncate: k = " + std::to_string(k) + " outside [1, " +
                            std::to_string(a.size()) + "]");
  }
  return IntVector(a.begin(), a.begin() + k);
}

bool containment_leq(std::span<const int> a, std::span<const int> b) {
  require_same_length(a.size(), b.size(), "containment_leq");
  const IntVector sa = nonincreasing(a);
  const IntVector sb = nonincreasing(b);
  for (std::size_t p = 0; p < sa.size(); ++p) {
    if (sa[p] > sb[p]) return false;
  }
  return true;
}

bool deodhar_leq(std::span<const int> a, std::span<const int> b) {
  require_same_length(a.size(), b.size(), "deodhar_leq");
  IntVector sa;
  IntVector sb;
  sa.reserve(a.size());
  sb.reserve(b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    insert_sorted(sa, a[k]);
    insert_sorted(sb, b[k]);
    for (std::size_t p = 0; p <= k; ++p) {
      if (sa[p] > sb[p]) return false;
    }
  }
  return true;
}

bool deodhar_leq(const OneLine& x, const OneLine& y) {
  return deodhar_leq(x.entries(), y.entries());
}

int gamma_count(std::span<const int> a, int threshold) {
  return static_cast<int>(
      std::count_if(a.begin(), a.end(), [threshold](int v) { return v > threshold; }));
}

bool deodhar_leq_gamma(const OneLine& x, const OneLine& y) {
  require_same_length(x.entries().size(), y.entries().size(), "deodhar_leq_gamma");
  const auto a = x.entries();
  const auto b = y.entries();
  for (std::size_t k = 1; k <= a.size(); ++k) {
    const auto xk = a.first(k);
    const auto yk = b.first(k);
    for (std::size_t m = 0; m < k; ++m) {
      if (gamma_count(xk, a[m] - 1) > gamma_count(yk, a[m] - 1)) return false;
    }
  }
  return true;
}

OneLine apply_move(const OneLine& x, const GeneratorMove& move) {
  std::vector<int> e(x.entries().begin(), x.entries().end());
  const int n = x.size();
  if (move.i < 1 || move.i > n) throw std::invalid_argument("apply_move: position out of range");
  if (move.kind == GeneratorMove::Kind::raise) {
    if (!move.new_value || *move.new_value <= e[move.i - 1]) {
      throw std::invalid_argument("apply_move: raise must increase the entry");
    }
    e[move.i - 1] = *move.new_value;
  } else {
    if (!move.j || *move.j <= move.i || *move.j > n) {
      throw std::invalid_argument("apply_move: swap needs positions i < j");
    }
    if (e[move.i - 1] >= e[*move.j - 1]) {
      throw std::invalid_argument("apply_move: swap must move the larger value left");
    }
    std::swap(e[move.i - 1], e[*move.j - 1]);
  }
  return OneLine(std::move(e));  // validates the raise target
}

std::vector<GeneratorMove> generator_moves(const OneLine& x) {
  const int n = x.size();
  const auto a = x.entries();
  std::vector<char> used(n + 1, 0);
  for (int v : a) used[v] = 1;

  std::vector<GeneratorMove> moves;
  for (int i = 1; i <= n; ++i) {
    for (int v = a[i - 1] + 1; v <= n; ++v) {
      if (!used[v]) moves.push_back({GeneratorMove::Kind::raise, i, std::nullopt, v});
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (a[i - 1] < a[j - 1]) moves.push_back({GeneratorMove::Kind::swap, i, j, std::nullopt});
    }
  }
  return moves;
}

std::vector<OneLine> ppr_raises(const OneLine& x) {
  std::vector<OneLine> out;
  for (const GeneratorMove& m : generator_moves(x)) out.push_back(apply_move(x, m));
  return out;
}

bool ppr_leq(const OneLine& x, const OneLine& y) {
  require_same_length(x.entries().size(), y.entries().size(), "ppr_leq");
  if (x == y) return true;
  const int bound = length(y);
  if (length(x) >= bound) return false;

  VisitedSet visited(x.size());
  visited.insert(x.code());
  std::deque<OneLine> frontier{x};
  while (!frontier.empty()) {
    const OneLine z = std::move(frontier.front());
    frontier.pop_front();
    for (OneLine& next : ppr_raises(z)) {
      if (next == y) return true;
      if (!visited.insert(next.code())) continue;
      if (length(next) >= bound) continue;
      frontier.push_back(std::move(next));
    }
  }
  return false;
}

bool is_cover_type1(const OneLine& x, const OneLine& y) {
  if (x.size() != y.size()) return false;
  const std::vector<int> diff = differing_positions(x, y);
  if (diff.size() != 1) return false;
  const int p = diff.front();
  const auto a = x.entries();
  const int from = a[p];
  const int to = y.entries()[p];
  if (to <= from) return false;

  // Every value strictly between the old and new entry sits to the left.
  std::vector<char> left(x.size() + 1, 0);
  for (int q = 0; q < p; ++q) left[a[q]] = 1;
  for (int v = from + 1; v < to; ++v) {
    if (!left[v]) return false;
  }
  // Filling an empty column also gains a_i + n - i from the position, which
  // is only cancelled when every later entry is larger than the new value.
  if (from == 0) {
    for (int q = p + 1; q < x.size(); ++q) {
      if (a[q] <= to) return false;
    }
  }
  return true;
}

bool is_cover_type2(const OneLine& x, const OneLine& y) {
  if (x.size() != y.size()) return false;
  const std::vector<int> diff = differing_positions(x, y);
  if (diff.size() != 2) return false;
  const int i = diff[0];
  const int j = diff[1];
  const auto a = x.entries();
  const auto b = y.entries();
  if (b[i] != a[j] || b[j] != a[i] || a[i] >= a[j]) return false;
  for (int s = i + 1; s < j; ++s) {
    if (a[s] >= a[i] && a[s] <= a[j]) return false;
  }
  return true;
}

std::vector<OneLine> covers_of(const OneLine& x) {
  std::vector<OneLine> out;
  for (OneLine& y : ppr_raises(x)) {
    if (is_cover_type1(x, y) || is_cover_type2(x, y)) out.push_back(std::move(y));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rook
