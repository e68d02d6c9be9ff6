#include "abelnorm/weighting.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace abelnorm {

namespace {

BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

BigInt pow10(unsigned e) {
  BigInt p = 1;
  for (unsigned k = 0; k < e; ++k) p *= 10;
  return p;
}

// Upper bound on |exact - value| after rounding `exact` to double.
double rounding_slack(double value) {
  return std::abs(value) * std::numeric_limits<double>::epsilon();
}

WeightValue exact_weight(Rational exact, WeightCase tag) {
  WeightValue w;
  w.value = exact.convert_to<double>();
  w.abs_error = 0.0;
  w.case_tag = tag;
  w.exact = std::move(exact);
  return w;
}

}  // namespace

std::string_view to_string(WeightCase c) noexcept {
  switch (c) {
    case WeightCase::pure: return "pure";
    case WeightCase::nonbinary: return "nonbinary";
    case WeightCase::single_binary: return "single-binary";
    case WeightCase::binary_series: return "binary-series";
    case WeightCase::mixed_estimated: return "mixed-estimated";
  }
  return "unknown";
}

BigInt multinomial(const ParikhVector& counts) {
  BigInt denom = 1;
  for (auto c : counts.counts) denom *= factorial(c);
  return factorial(static_cast<unsigned>(counts.total())) / denom;
}

WeightValue pure_weight(const Word& E) {
  if (E.empty()) throw std::invalid_argument("weights are defined for nonempty words");
  return exact_weight(Rational(multinomial(parikh(E))), WeightCase::pure);
}

WeightValue weight_nonbinary(const Word& w) {
  if (w.empty() || w.has_binary())
    throw std::invalid_argument("expected a word without binary digits: " + w.to_string());
  return exact_weight(Rational(multinomial(parikh(w))), WeightCase::nonbinary);
}

BigInt binomial_band(unsigned k, unsigned zeros, unsigned ones) {
  BigInt total = 0;
  if (zeros + ones > k) return total;  // empty band
  BigInt c = 1;  // C(k, j), starting at j = 0
  for (unsigned j = 0; j <= k - ones; ++j) {
    if (j >= zeros) total += c;
    c = c * (k - j) / (j + 1);
  }
  return total;
}

BinarySeriesPartial binary_series_partial(const Word& b, unsigned terms_end) {
  if (b.has_nonbinary()) throw std::invalid_argument("expected a binary word: " + b.to_string());
  const auto len = static_cast<unsigned>(b.size());
  const ParikhVector pb = parikh(b);
  const BigInt scale = 64 * pow10(len);

  BinarySeriesPartial out;
  out.terms_end = terms_end;
  for (unsigned k = len; k < terms_end; ++k)
    out.sum += Rational(scale * binomial_band(k, pb.zeros(), pb.ones()), pow10(k + 2));
  // sum_{k>=K} 2^k / 10^(k+2) = (1/5)^K / 80
  BigInt five_pow = 1;
  for (unsigned k = 0; k < terms_end; ++k) five_pow *= 5;
  out.tail_bound = Rational(scale, 80 * five_pow);
  return out;
}

WeightValue weight_binary(const Word& b, double tol) {
  if (b.empty() || b.has_nonbinary()) throw std::invalid_argument("expected a binary word: " + b.to_string());
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (b.size() == 1) return exact_weight(Rational(1), WeightCase::single_binary);

  const auto len = static_cast<unsigned>(b.size());
  const Rational scale(64 * pow10(len), 80);
  unsigned terms_end = len;
  Rational tail = scale;
  for (unsigned k = 0; k < terms_end; ++k) tail /= 5;
  while (tail.convert_to<double>() >= tol) {
    ++terms_end;
    tail /= 5;
  }

  const BinarySeriesPartial partial = binary_series_partial(b, terms_end);
  WeightValue w;
  w.value = partial.sum.convert_to<double>();
  w.abs_error = std::nextafter(partial.tail_bound.convert_to<double>(), std::numeric_limits<double>::infinity()) +
                rounding_slack(w.value);
  w.case_tag = WeightCase::binary_series;
  w.exact = partial.sum;
  return w;
}

WeightValue weight_mixed(const Word& w, Count N, const CaseCounts& counts) {
  if (!w.is_mixed()) throw std::invalid_argument("expected a word with binary and non-binary digits: " + w.to_string());
  if (N < w.size()) throw std::invalid_argument("estimate prefix shorter than the word");
  const BigInt correction = BigInt(counts.case2) - BigInt(counts.case1);
  Rational exact = Rational(multinomial(parikh(w))) +
                   Rational(pow10(static_cast<unsigned>(w.size())) * correction, BigInt(N));
  WeightValue out;
  out.value = exact.convert_to<double>();
  out.abs_error = std::nullopt;
  out.case_tag = WeightCase::mixed_estimated;
  out.estimator_n = N;
  out.exact = std::move(exact);
  return out;
}

WeightValue weight_mixed(const Word& w, Count N, const CaseOptions& opts) {
  if (!w.is_mixed()) throw std::invalid_argument("expected a word with binary and non-binary digits: " + w.to_string());
  if (N < w.size()) throw std::invalid_argument("estimate prefix shorter than the word");
  const CaseCounts counts = case_counts(w, std::span<const Count>(&N, 1), opts).front();
  return weight_mixed(w, N, counts);
}

WeightValue weight(const Word& E, const WeightOptions& opts) {
  if (E.empty()) throw std::invalid_argument("weights are defined for nonempty words");
  if (!E.has_binary()) return weight_nonbinary(E);
  if (!E.has_nonbinary()) return weight_binary(E, opts.tol);
  return weight_mixed(E, opts.estimate_n, opts.cases);
}

}  // namespace abelnorm
