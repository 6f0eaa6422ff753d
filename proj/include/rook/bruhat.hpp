#pragma once

#include "rook/one_line.hpp"

#include <optional>
#include <span>
#include <vector>

namespace rook {

using IntVector = std::vector<int>;

// ---------------------------------------------------------------------------
// Containment and Deodhar orders on integer vectors
// ---------------------------------------------------------------------------

/// Same multiset, sorted non-increasingly.
IntVector nonincreasing(std::span<const int> a);

/// First k entries; k is in [1, a.size()], otherwise std::out_of_range.
IntVector truncate(std::span<const int> a, int k);

/// Componentwise comparison of the non-increasing rearrangements.
/// Throws std::invalid_argument on a length mismatch.
bool containment_leq(std::span<const int> a, std::span<const int> b);

/// Every prefix of `a`, sorted, is contained in the matching prefix of `b`.
///
/// Both sorted prefixes are maintained by insertion as the prefix grows and
/// compared with early exit, O(n^2) in the worst case. Defined on arbitrary
/// integer vectors of equal length.
bool deodhar_leq(std::span<const int> a, std::span<const int> b);
bool deodhar_leq(const OneLine& x, const OneLine& y);

/// |{ v in a : v > threshold }|.
int gamma_count(std::span<const int> a, int threshold);

/// The Deodhar order restated with Γ-counts: for every prefix length k and
/// every m <= k, |Γ(x(k), a_m - 1)| <= |Γ(y(k), a_m - 1)|. The threshold is
/// shifted by one so the counts are of entries >= a_m; see README.
bool deodhar_leq_gamma(const OneLine& x, const OneLine& y);

// ---------------------------------------------------------------------------
// Generator moves and their closure
// ---------------------------------------------------------------------------

/// One generating relation x < y of the Bruhat-Chevalley order.
struct GeneratorMove {
  enum class Kind { raise, swap };

  Kind kind = Kind::raise;
  /// 1-based position.
  int i = 0;
  /// Second position for a swap, i < j.
  std::optional<int> j;
  /// Target value for a raise.
  std::optional<int> new_value;

  friend bool operator==(const GeneratorMove&, const GeneratorMove&) = default;
};

/// Applies a move; throws std::invalid_argument if it is not an ascending
/// move of x (raise to a strictly larger free value, or swap a_i < a_j).
OneLine apply_move(const OneLine& x, const GeneratorMove& move);

/// Every legal move: raise any entry to any larger value not used
/// elsewhere, or swap positions i < j whenever a_i < a_j.
std::vector<GeneratorMove> generator_moves(const OneLine& x);

/// Results of generator_moves, in move order.
std::vector<OneLine> ppr_raises(const OneLine& x);

/// Reflexive-transitive closure of the generator moves, by breadth-first
/// search from x pruned to length(z) <= length(y). Throws
/// std::invalid_argument on a size mismatch.
bool ppr_leq(const OneLine& x, const OneLine& y);

// ---------------------------------------------------------------------------
// Covering relations
// ---------------------------------------------------------------------------

/// y is x with one entry raised, and y covers x. Returns false whenever y
/// is not a single-entry raise of x.
bool is_cover_type1(const OneLine& x, const OneLine& y);

/// y is x with positions i < j swapped where a_i < a_j, and y covers x:
/// every a_s with i < s < j lies outside [a_i, a_j]. Returns false whenever y
/// is not such a swap of x.
bool is_cover_type2(const OneLine& x, const OneLine& y);

/// Upper covers of x, sorted lexicographically.
std::vector<OneLine> covers_of(const OneLine& x);

}  // namespace rook
