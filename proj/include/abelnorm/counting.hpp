#pragma once

#include <optional>
#include <span>
#include <vector>

#include "abelnorm/digits.hpp"
#include "abelnorm/word.hpp"

namespace abelnorm {

// --- Exact and abelian occurrence counts -----------------------------------
//
// A window i..i+l-1 is counted at cutoff n iff it ends at or before n.
// Overlapping occurrences each count. The grid overloads take strictly
// increasing cutoffs and return one count per cutoff from a single pass.

/// Occurrences of E spelled exactly (A_E).
Count count_A(const DigitStream& s, const Word& E, Count n);
std::vector<Count> count_A(const DigitStream& s, const Word& E, std::span<const Count> grid);

/// Total occurrences of any of `patterns` (duplicates are ignored).
std::vector<Count> count_A_any(const DigitStream& s, std::span<const Word> patterns,
                               std::span<const Count> grid);

/// Occurrences of E or any rearrangement of E (B_E).
Count count_B(const DigitStream& s, const Word& E, Count n);
std::vector<Count> count_B(const DigitStream& s, const Word& E, std::span<const Count> grid);

/// Multi-pattern matcher (Aho-Corasick) over the decimal alphabet.
class PatternAutomaton {
 public:
  explicit PatternAutomaton(std::span<const Word> patterns);

  /// Advances by one digit; returns how many patterns end here.
  Count feed(Digit d) noexcept {
    state_ = delta_[state_][d];
    return hits_[state_];
  }
  void reset() noexcept { state_ = 0; }

 private:
  std::vector<std::array<std::uint32_t, kBase>> delta_;
  std::vector<Count> hits_;
  std::uint32_t state_ = 0;
};

/// Fixed-length window whose Parikh vector is updated in O(1) per digit.
class AbelianWindow {
 public:
  explicit AbelianWindow(const Word& target);

  /// Pushes a digit; true iff the window is full and a rearrangement of the
  /// target.
  bool push(Digit d) noexcept;

  const ParikhVector& counts() const noexcept { return window_; }
  bool full() const noexcept { return filled_ == ring_.size(); }
  /// Current window contents, oldest first. Requires full().
  Word contents() const;

 private:
  void bump(Digit d, int delta) noexcept;

  ParikhVector target_;
  ParikhVector window_;
  std::vector<Digit> ring_;
  std::size_t head_ = 0;
  std::size_t filled_ = 0;
  int mismatched_ = 0;  // digits whose window count differs from the target
};

// --- Boundary context ------------------------------------------------------

/// Composition of a (possibly empty) binary boundary piece.
struct BinaryPiece {
  Count zeros = 0;
  Count ones = 0;

  Count length() const noexcept { return zeros + ones; }
  bool empty() const noexcept { return length() == 0; }
  friend bool operator==(const BinaryPiece&, const BinaryPiece&) = default;
};

/// The binary prefix c1 and suffix c2 of a window with at least one
/// non-binary digit, with the maximal runs d1, d2 they sit in. Empty pieces
/// get their run from the empty-word rule at the window edge.
struct BoundaryContext {
  BinaryPiece c1;
  BinaryPiece c2;
  std::optional<BinaryRun> d1;
  std::optional<BinaryRun> d2;
};

/// How far outside a window its boundary runs are resolved.
enum class Lookaround {
  full,    // scan both ways until the runs close
  causal,  // never read past the window's last digit; d2 is clipped there
};

/// Throws std::invalid_argument for an all-binary window or one that runs
/// past the end of a literal.
BoundaryContext boundary_context(const DigitStream& s, Position i, Count length,
                                 Lookaround look = Lookaround::full);

/// The pieces c1, c2 of a word taken in isolation (nullopt if all binary).
std::optional<std::pair<BinaryPiece, BinaryPiece>> boundary_pieces(const Word& v);

/// Zeros and ones that sorting the surrounding runs leaves in c1 and c2.
struct SortedBoundary {
  Count zeros = 0;
  Count ones = 0;
};
SortedBoundary sorted_boundary(const BoundaryContext& ctx) noexcept;

// --- Context-dependent cases -----------------------------------------------

/// How Case 2's "v differs from w" is read.
enum class Case2Mode {
  parikh_distinct,  // v is not a rearrangement of w (default)
  string_distinct,  // v is not literally w
};

/// Case 1: an occurrence `occ` of a rearrangement of w whose boundary
/// composition changes under sorting. Throws std::logic_error if occ is not
/// a rearrangement of w, w is not mixed, or ctx does not fit occ.
bool case1_predicate(const Word& w, const BoundaryContext& ctx, const Word& occ);

/// Case 2: a window v that is not counted for w before sorting but is after.
bool case2_predicate(const Word& w, const Word& v, const BoundaryContext& ctx,
                     Case2Mode mode = Case2Mode::parikh_distinct);

struct CaseOptions {
  Case2Mode case2 = Case2Mode::parikh_distinct;
  /// `causal` reproduces a search that cannot see past the window end. It
  /// breaks the exact count identity and exists for diagnostics only.
  Lookaround lookaround = Lookaround::full;
};

struct CaseCounts {
  Count case1 = 0;  // the C count
  Count case2 = 0;  // the D count
  std::optional<Position> first_case1_end;
  std::optional<Position> first_case2_end;
};

/// Case 1 and Case 2 window counts on an unsorted source (C10 by default) at
/// every cutoff of `grid`, in one pass. w must contain binary and non-binary
/// digits (std::invalid_argument otherwise).
std::vector<CaseCounts> case_counts(const Word& w, std::span<const Count> grid, const CaseOptions& opts = {},
                                    const DigitStream& source = DigitStream::c10());

Count count_C(const Word& w, Count n, const CaseOptions& opts = {}, const DigitStream& source = DigitStream::c10());
Count count_D(const Word& w, Count n, const CaseOptions& opts = {}, const DigitStream& source = DigitStream::c10());

/// Sorts every maximal binary factor that touches neither end of p.
Word sort_interior_runs(const Word& p);

}  // namespace abelnorm
