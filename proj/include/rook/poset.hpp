#pragma once

#include "rook/one_line.hpp"

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rook {

struct HasseNode {
  int id = 0;
  OneLine element;
  int length = 0;

  friend bool operator==(const HasseNode&, const HasseNode&) = default;
};

/// Graded Hasse diagram of (a subset of) R_n. Node ids are dense from 0 and
/// follow lexicographic one-line order; edges are (lower id, upper id) cover
/// pairs, sorted.
struct HasseDiagram {
  int n = 0;
  std::vector<HasseNode> nodes;
  std::vector<std::pair<int, int>> edges;

  std::optional<int> find(const OneLine& x) const;

  friend bool operator==(const HasseDiagram&, const HasseDiagram&) = default;
};

/// Whole R_n with edges from covers_of. Throws std::invalid_argument unless
/// 1 <= n <= 5.
HasseDiagram build_hasse(int n);

/// Node counts per length 0..n^2.
std::vector<std::size_t> rank_sizes(const HasseDiagram& h);

/// Sub-diagram induced on { z : lo <= z <= hi }, with ids renumbered densely.
/// Throws std::invalid_argument if lo is not below hi or either is missing.
HasseDiagram interval(const HasseDiagram& h, const OneLine& lo, const OneLine& hi);

std::string export_dot(const HasseDiagram& h);

/// {"n":..,"nodes":[{"id":..,"oneline":"a1,..,an","length":..}],"edges":[[lo,hi],..]}
std::string export_json(const HasseDiagram& h);
HasseDiagram parse_hasse_json(std::string_view text);

// ---------------------------------------------------------------------------
// Verification campaign
// ---------------------------------------------------------------------------

enum class VerifyMode { exhaustive, sampled };

struct VerifyOptions {
  VerifyMode mode = VerifyMode::exhaustive;
  std::size_t sample_count = 100000;
  std::uint64_t seed = 1;
  /// Elements whose covers are cross-checked in sampled mode.
  std::size_t cover_sample = 64;
};

struct PairMismatch {
  OneLine x;
  OneLine y;
  bool deodhar = false;
  bool gamma = false;
  bool ppr = false;
};

struct CoverMismatch {
  OneLine x;
  std::vector<OneLine> lemma_covers;
  std::vector<OneLine> brute_covers;
};

struct OracleMismatch {
  OneLine x;
  int formula = 0;
  int oracle = 0;
};

struct VerificationReport {
  int n = 0;
  VerifyMode mode = VerifyMode::exhaustive;
  std::uint64_t seed = 0;
  std::size_t pairs_checked = 0;
  std::size_t covers_checked = 0;
  std::size_t oracle_checked = 0;
  std::vector<PairMismatch> mismatches;
  std::vector<CoverMismatch> cover_mismatches;
  std::vector<OracleMismatch> oracle_mismatches;
  std::chrono::milliseconds elapsed{0};

  bool passed() const noexcept {
    return mismatches.empty() && cover_mismatches.empty() && oracle_mismatches.empty();
  }
};

/// Compares the Deodhar, Γ-count and generator-closure orders on pairs, the
/// lemma covers against brute-force covers, and the closed-form length
/// against the span oracle. Exhaustive mode needs 1 <= n <= 4, sampled mode
/// 1 <= n <= 6; otherwise std::invalid_argument.
VerificationReport verify(int n, const VerifyOptions& options = {});

/// Brute-force upper covers: minimal elements strictly above x under
/// deodhar_leq, found by scanning all of R_n.
std::vector<OneLine> brute_force_covers(const OneLine& x, const std::vector<OneLine>& universe);

/// Labeled text; deterministic (elapsed time is not included).
std::string format_report(const VerificationReport& r);
/// Machine-readable form; deterministic (elapsed time is not included).
std::string report_json(const VerificationReport& r);

}  // namespace rook
