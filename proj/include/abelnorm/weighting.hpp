#pragma once

#include <optional>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "abelnorm/counting.hpp"
#include "abelnorm/word.hpp"

namespace abelnorm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class WeightCase { pure, nonbinary, single_binary, binary_series, mixed_estimated };

std::string_view to_string(WeightCase c) noexcept;

/// A weight together with how far it can be trusted.
struct WeightValue {
  double value = 0.0;
  /// Certified absolute error; nullopt when the value is an estimate with no
  /// error bound (mixed words).
  std::optional<double> abs_error;
  WeightCase case_tag = WeightCase::pure;
  /// Prefix length of the estimate (mixed words only).
  std::optional<Count> estimator_n;
  /// Exact rational behind `value` (truncated series for binary words).
  Rational exact;

  bool certified() const noexcept { return abs_error.has_value(); }
};

/// l! / (0_E! 1_E! ... 9_E!), the number of distinct rearrangements.
BigInt multinomial(const ParikhVector& counts);

/// The pure weighting: number of distinct rearrangements of E.
WeightValue pure_weight(const Word& E);

/// Words without binary digits. Throws std::invalid_argument otherwise.
WeightValue weight_nonbinary(const Word& w);

/// Sum over j = zeros..k-ones of C(k, j): the number of binary words of
/// length k with at least `zeros` zeros and at least `ones` ones.
BigInt binomial_band(unsigned k, unsigned zeros, unsigned ones);

/// Truncation of the binary-word series after the terms k = l .. K-1, with
/// the tail bound 64 * 10^l * (1/5)^K / 80 for the omitted terms.
struct BinarySeriesPartial {
  Rational sum;
  Rational tail_bound;
  unsigned terms_end = 0;  // K
};
BinarySeriesPartial binary_series_partial(const Word& b, unsigned terms_end);

/// Words over {0, 1}. A single digit weighs exactly 1. Longer words sum
/// 64 * 10^l * sum_{k>=l} 10^-(k+2) * binomial_band(k, 0_b, 1_b) up to the
/// first K whose tail bound is below tol. Throws std::invalid_argument for
/// non-binary digits or tol <= 0.
WeightValue weight_binary(const Word& b, double tol = 1e-12);

/// Mixed words: multinomial + 10^l * (D - C) / N from the case counts on the
/// first N digits of C10. Uncertified by construction.
WeightValue weight_mixed(const Word& w, Count N, const CaseOptions& opts = {});
WeightValue weight_mixed(const Word& w, Count N, const CaseCounts& counts);

struct WeightOptions {
  double tol = 1e-12;
  Count estimate_n = 1'000'000;
  CaseOptions cases;
};

/// Dispatches on the binary content of E.
WeightValue weight(const Word& E, const WeightOptions& opts = {});

}  // namespace abelnorm
