#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "abelnorm/counting.hpp"
#include "abelnorm/digits.hpp"
#include "abelnorm/weighting.hpp"

namespace abelnorm {

/// (A_E(s, n) / n) * 10^l(E); tends to 1 on a normal expansion.
double normality_ratio(const DigitStream& s, const Word& E, Count n);

/// One point of an abelian-normality convergence study.
struct ConvergenceRecord {
  Count n = 0;
  Word pattern;
  Count count_b = 0;
  WeightValue weight;
  double ratio = 0.0;      // (1/W) * (B/n) * 10^l, target 1
  double deviation = 0.0;  // |ratio - 1|
};

/// The normalized abelian quotient (count_b * 10^length) / (n * weight).
double abelian_quotient(Count count_b, Count n, std::size_t length, double weight);

ConvergenceRecord make_record(Count n, const Word& E, Count count_b, const WeightValue& W);
ConvergenceRecord abelian_ratio(const DigitStream& s, const Word& E, Count n, const WeightValue& W);

/// One record per cutoff, from a single pass over s.
std::vector<ConvergenceRecord> convergence_table(const DigitStream& s, const Word& E,
                                                 std::span<const Count> grid, const WeightValue& W);

/// Pure-weight quotients on D10 for each pattern. Patterns are processed
/// concurrently; records come back grouped by pattern in input order.
std::vector<ConvergenceRecord> pure_abelian_probe(std::span<const Word> patterns,
                                                  std::span<const Count> grid);

inline constexpr std::string_view kCsvHeader =
    "n,pattern,count_b,weight_value,weight_err,case_tag,ratio,deviation";

/// Header plus one line per record. Uncertified errors print as
/// "uncertified".
void write_csv(std::ostream& out, std::span<const ConvergenceRecord> records);
std::string csv_line(const ConvergenceRecord& r);

// --- Verification reports --------------------------------------------------

struct Check {
  std::string name;
  bool passed = false;
  std::string expected;
  std::string actual;
};

struct Report {
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool passed() const noexcept;
  void add(std::string name, const std::string& expected, const std::string& actual);
};

std::ostream& operator<<(std::ostream& out, const Report& r);

/// Operations the worked-example suite exercises. Defaults are the library's
/// own; tests substitute broken ones to confirm the suite notices.
struct ExampleToolkit {
  std::function<Count(const DigitStream&, const Word&, Count)> count_A =
      [](const DigitStream& s, const Word& E, Count n) { return abelnorm::count_A(s, E, n); };
  std::function<Count(const DigitStream&, const Word&, Count)> count_B =
      [](const DigitStream& s, const Word& E, Count n) { return abelnorm::count_B(s, E, n); };
  std::function<Word(const Word&)> sigma = [](const Word& w) { return sigma_transform(w); };
  std::function<Word(Count)> d10_prefix = [](Count n) { return stream_prefix(DigitStream::d10(), n); };
  std::function<std::vector<CaseCounts>(const Word&, std::span<const Count>)> case_counts =
      [](const Word& w, std::span<const Count> grid) { return abelnorm::case_counts(w, grid); };
};

/// The worked examples: A_12 and B_12 on 50 digits of C10, the first 50
/// digits of D10, the sorting example, and the C/D counts for 4501140.
/// Notes carry the first-hit end positions and the digits around the first
/// Case 1 hit.
Report verify_paper_examples(const ExampleToolkit& tk = {});

struct LemmaOptions {
  Count samples = 100'000;
  Position max_position = 1'000'000;
  unsigned min_length = 2;
  unsigned max_length = 20;
  std::uint64_t seed = 20260101;
};

/// Samples windows of C10 with at least one non-binary digit and checks the
/// composition that sorting leaves in c1 and c2 (read from D10) against the
/// run-based closed forms.
Report verify_lemma(const LemmaOptions& opts = {});

/// B_w(D10, n) against sum over rearrangements of A(C10, n) + D - C.
struct IdentityReport {
  Word pattern;
  Count requested_n = 0;
  Count n = 0;  // after snapping to a non-binary digit of C10
  Count lhs = 0;
  Count sum_a = 0;
  Count case1 = 0;
  Count case2 = 0;
  std::int64_t rhs = 0;
  std::int64_t mismatch = 0;
};

/// Largest p <= n holding a non-binary digit of C10 (smallest p > n if none).
Position snap_to_nonbinary(Position n);

std::vector<IdentityReport> verify_identity(const Word& w, std::span<const Count> n_list,
                                            const CaseOptions& opts = {}, bool snap = true);

}  // namespace abelnorm
