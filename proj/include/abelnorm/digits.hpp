#pragma once

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "abelnorm/word.hpp"

namespace abelnorm {

/// The p-th digit of Champernowne's constant 0.123456789101112...
/// Requires p >= 1. O(log p).
Digit champernowne_digit(Position p);

/// The positive integer whose decimal expansion covers position p of C10.
Position champernowne_number_at(Position p);

/// Position of the first digit of the positive integer `number` within C10.
Position champernowne_offset(Position number);

/// A maximal stretch of binary digits.
struct BinaryRun {
  Position start = 0;
  Count length = 0;
  Count zeros = 0;
  Count ones = 0;

  Position last() const noexcept { return start + length - 1; }
  bool contains(Position p) const noexcept { return p >= start && p <= last(); }

  friend bool operator==(const BinaryRun&, const BinaryRun&) = default;
};

enum class SourceKind { c10, d10, literal };

class DigitCursor;

/// Describes a digit expansion: Champernowne's C10, its run-sorted variant
/// D10, or a finite literal word. Cheap to copy; all queries are const and
/// reentrant.
class DigitStream {
 public:
  static DigitStream c10();
  static DigitStream d10();
  static DigitStream literal(Word w);

  SourceKind kind() const noexcept;
  /// True when every maximal binary run is emitted sorted ascending.
  bool sorted() const noexcept { return sorted_; }
  /// Number of digits, or nullopt for an infinite expansion.
  std::optional<Position> length() const noexcept;

  /// Random access; nullopt outside a literal's extent.
  std::optional<Digit> digit_at(Position p) const;

  /// Sequential reader starting at position `start`.
  DigitCursor cursor(Position start = 1) const;

  /// The same expansion with sorting disabled (C10 for D10).
  DigitStream unsorted() const;

 private:
  friend DigitStream sigma_transform(const DigitStream& s);
  friend class DigitCursor;

  DigitStream(std::shared_ptr<const Word> lit, bool sorted) : literal_(std::move(lit)), sorted_(sorted) {}

  std::optional<Digit> raw_digit_at(Position p) const;

  std::shared_ptr<const Word> literal_;  // null for Champernowne
  bool sorted_ = false;
};

/// Single-consumer sequential reader over a DigitStream. Advancing costs
/// amortized O(1) per digit.
class DigitCursor {
 public:
  /// Next digit, or nullopt once a literal is exhausted.
  std::optional<Digit> next();
  /// Position of the digit the next call to next() returns.
  Position position() const noexcept { return pos_; }

 private:
  friend class DigitStream;
  DigitCursor(const DigitStream& s, Position start);

  std::optional<Digit> next_raw();
  void seek_raw(Position p);

  DigitStream stream_;
  Position pos_ = 1;

  // Unsorted source state.
  Position raw_pos_ = 1;
  std::array<Digit, 20> number_{};  // decimal digits of the current integer
  int number_len_ = 0;
  int number_idx_ = 0;

  // Sorting layer: pending output for the current run and its terminator.
  Count pending_zeros_ = 0;
  Count pending_ones_ = 0;
  std::optional<Digit> pending_tail_;
  bool tail_pending_ = false;
};

/// Replaces every maximal binary run by its ascending sort. Position
/// preserving; idempotent. sigma_transform(c10()) is d10().
DigitStream sigma_transform(const DigitStream& s);

/// Convenience overload for literal words.
Word sigma_transform(const Word& w);

/// First n digits of s. Throws std::out_of_range if a literal is shorter.
Word stream_prefix(const DigitStream& s, Count n);

/// All maximal binary runs intersecting positions 1..n, in order. A run that
/// crosses n is reported with its full extent.
std::vector<BinaryRun> binary_runs(const DigitStream& s, Count n);

/// A cut between positions `after` and `after + 1` (after = 0 is before the
/// first digit). Used to locate the run of an empty boundary piece.
struct Cut {
  Position after = 0;
};

/// The maximal run containing position p, or nullopt when that digit is
/// non-binary (or absent).
std::optional<BinaryRun> maximal_run_of(const DigitStream& s, Position p);

/// Empty-word rule at a cut: the run of the digit on the left if it is
/// binary, else the run of the digit on the right if it is binary, else
/// nullopt. The left neighbour takes precedence.
std::optional<BinaryRun> maximal_run_of(const DigitStream& s, Cut cut);

}  // namespace abelnorm
