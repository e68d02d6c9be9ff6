#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace abelnorm {

using Digit = std::uint8_t;
using Position = std::uint64_t;  // 1-indexed, past the decimal point
using Count = std::uint64_t;

inline constexpr int kBase = 10;

constexpr bool is_binary(Digit d) noexcept { return d <= 1; }

/// A finite, nonempty string of base-10 digits.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Digit> digits);

  /// Parses a string of '0'..'9'. Throws std::invalid_argument on any other
  /// character or on an empty string.
  static Word parse(std::string_view text);

  std::size_t size() const noexcept { return digits_.size(); }
  bool empty() const noexcept { return digits_.empty(); }
  Digit operator[](std::size_t i) const { return digits_[i]; }
  std::span<const Digit> digits() const noexcept { return digits_; }
  auto begin() const noexcept { return digits_.begin(); }
  auto end() const noexcept { return digits_.end(); }

  bool has_binary() const noexcept;
  bool has_nonbinary() const noexcept;
  bool is_mixed() const noexcept { return has_binary() && has_nonbinary(); }

  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Digit> digits_;
};

/// Per-digit occurrence counts of a word.
struct ParikhVector {
  std::array<std::uint32_t, kBase> counts{};

  std::uint32_t operator[](Digit d) const { return counts[d]; }
  std::uint32_t& operator[](Digit d) { return counts[d]; }
  std::uint64_t total() const noexcept;
  std::uint32_t zeros() const noexcept { return counts[0]; }
  std::uint32_t ones() const noexcept { return counts[1]; }
  std::uint64_t binary() const noexcept { return counts[0] + counts[1]; }
  /// True iff digits 2..9 agree.
  bool same_nonbinary(const ParikhVector& other) const noexcept;

  friend bool operator==(const ParikhVector&, const ParikhVector&) = default;
};

ParikhVector parikh(std::span<const Digit> digits) noexcept;
inline ParikhVector parikh(const Word& w) noexcept { return parikh(w.digits()); }

/// All distinct rearrangements of w, in lexicographic order.
std::vector<Word> distinct_permutations(const Word& w);

}  // namespace abelnorm
