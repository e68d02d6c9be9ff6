#include "abelnorm/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace abelnorm {

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string digits_between(const DigitStream& s, Position from, Position to) {
  std::string out;
  auto cur = s.cursor(from);
  for (Position p = from; p <= to; ++p) out.push_back(static_cast<char>('0' + *cur.next()));
  return out;
}

// Integers first-2 .. first+2 around the one holding position p, in C10 and
// D10, space separated.
std::string hit_region(Position p) {
  const Position center = champernowne_number_at(p);
  const Position lo = center > 2 ? center - 2 : 1;
  const Position hi = center + 2;
  std::string c10_line, d10_line;
  for (Position k = lo; k <= hi; ++k) {
    const Position from = champernowne_offset(k);
    const Position to = champernowne_offset(k + 1) - 1;
    c10_line += digits_between(DigitStream::c10(), from, to) + " ";
    d10_line += digits_between(DigitStream::d10(), from, to) + " ";
  }
  return "C10: " + c10_line + "| D10: " + d10_line;
}

}  // namespace

double normality_ratio(const DigitStream& s, const Word& E, Count n) {
  if (n < E.size()) throw std::invalid_argument("prefix shorter than the pattern");
  const auto a = static_cast<double>(count_A(s, E, n));
  return a / static_cast<double>(n) * std::pow(10.0, static_cast<double>(E.size()));
}

double abelian_quotient(Count count_b, Count n, std::size_t length, double weight) {
  return static_cast<double>(count_b) * std::pow(10.0, static_cast<double>(length)) /
         (static_cast<double>(n) * weight);
}

ConvergenceRecord make_record(Count n, const Word& E, Count count_b, const WeightValue& W) {
  ConvergenceRecord r;
  r.n = n;
  r.pattern = E;
  r.count_b = count_b;
  r.weight = W;
  r.ratio = abelian_quotient(count_b, n, E.size(), W.value);
  r.deviation = std::abs(r.ratio - 1.0);
  return r;
}

ConvergenceRecord abelian_ratio(const DigitStream& s, const Word& E, Count n, const WeightValue& W) {
  if (n < E.size()) throw std::invalid_argument("prefix shorter than the pattern");
  return make_record(n, E, count_B(s, E, n), W);
}

std::vector<ConvergenceRecord> convergence_table(const DigitStream& s, const Word& E,
                                                 std::span<const Count> grid, const WeightValue& W) {
  const std::vector<Count> counts = count_B(s, E, grid);
  std::vector<ConvergenceRecord> out;
  out.reserve(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) out.push_back(make_record(grid[k], E, counts[k], W));
  return out;
}

std::vector<ConvergenceRecord> pure_abelian_probe(std::span<const Word> patterns, std::span<const Count> grid) {
  std::vector<Count> grid_copy(grid.begin(), grid.end());
  std::vector<std::future<std::vector<ConvergenceRecord>>> jobs;
  jobs.reserve(patterns.size());
  for (const Word& E : patterns) {
    jobs.push_back(std::async(std::launch::async, [E, &grid_copy] {
      return convergence_table(DigitStream::d10(), E, grid_copy, pure_weight(E));
    }));
  }
  std::vector<ConvergenceRecord> out;
  for (auto& job : jobs) {
    auto part = job.get();
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::string csv_line(const ConvergenceRecord& r) {
  std::ostringstream line;
  line << r.n << ',' << r.pattern.to_string() << ',' << r.count_b << ',' << fmt_double(r.weight.value) << ','
       << (r.weight.abs_error ? fmt_double(*r.weight.abs_error) : std::string("uncertified")) << ','
       << to_string(r.weight.case_tag) << ',' << fmt_double(r.ratio) << ',' << fmt_double(r.deviation);
  return line.str();
}

void write_csv(std::ostream& out, std::span<const ConvergenceRecord> records) {
  out << kCsvHeader << '\n';
  for (const auto& r : records) out << csv_line(r) << '\n';
}

// --- Reports ---------------------------------------------------------------

bool Report::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void Report::add(std::string name, const std::string& expected, const std::string& actual) {
  checks.push_back({std::move(name), expected == actual, expected, actual});
}

std::ostream& operator<<(std::ostream& out, const Report& r) {
  for (const auto& c : r.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << ": expected " << c.expected << ", got " << c.actual
        << '\n';
  }
  for (const auto& note : r.notes) out << "note: " << note << '\n';
  return out;
}

Report verify_paper_examples(const ExampleToolkit& tk) {
  Report report;
  const DigitStream c10 = DigitStream::c10();
  const Word twelve = Word::parse("12");
  report.add("A_12(C10, 50)", "3", std::to_string(tk.count_A(c10, twelve, 50)));
  report.add("B_12(C10, 50)", "5", std::to_string(tk.count_B(c10, twelve, 50)));
  report.add("D10 first 50 digits", "12345678901111213141516171819202122232425262728293",
             tk.d10_prefix(50).to_string());
  report.add("sorting 24911010010772", "24900001111772", tk.sigma(Word::parse("24911010010772")).to_string());

  const Word w = Word::parse("4501140");
  const std::vector<Count> grid{39123, 40972};
  const auto counts = tk.case_counts(w, grid);
  report.add("C_4501140(C10, 40972)", "1", std::to_string(counts[1].case1));
  report.add("D_4501140(C10, 39123)", "1", std::to_string(counts[0].case2));

  const auto wide = tk.case_counts(w, std::vector<Count>{100'000});
  const auto& first = wide.front();
  if (first.first_case1_end) {
    report.notes.push_back("first Case 1 window for 4501140 ends at position " +
                           std::to_string(*first.first_case1_end));
    report.notes.push_back("Case 1 hit region " + hit_region(*first.first_case1_end));
  }
  if (first.first_case2_end) {
    report.notes.push_back("first Case 2 window for 4501140 ends at position " +
                           std::to_string(*first.first_case2_end));
    report.notes.push_back("Case 2 hit region " + hit_region(*first.first_case2_end));
  }

  // Same counts when runs are never resolved past the window end.
  const auto causal = abelnorm::case_counts(w, grid, CaseOptions{Case2Mode::parikh_distinct, Lookaround::causal});
  report.notes.push_back("causal look-around (diagnostic): C(40972) = " + std::to_string(causal[1].case1) +
                         ", D(39123) = " + std::to_string(causal[0].case2));
  return report;
}

Report verify_lemma(const LemmaOptions& opts) {
  if (opts.samples == 0) throw std::invalid_argument("need at least one sample");
  if (opts.min_length < 1 || opts.min_length > opts.max_length || opts.max_length > opts.max_position)
    throw std::invalid_argument("bad window length range");

  const Word d10 = stream_prefix(DigitStream::d10(), opts.max_position);
  const DigitStream c10 = DigitStream::c10();
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<unsigned> length_dist(opts.min_length, opts.max_length);

  Count checked = 0, skipped = 0, violations = 0;
  Report report;
  while (checked < opts.samples) {
    const unsigned len = length_dist(rng);
    std::uniform_int_distribution<Position> start_dist(1, opts.max_position - len + 1);
    const Position i = start_dist(rng);
    BoundaryContext ctx;
    try {
      ctx = boundary_context(c10, i, len);
    } catch (const std::invalid_argument&) {
      ++skipped;  // all-binary window
      continue;
    }
    ++checked;

    BinaryPiece s1, s2;  // compositions read from D10 at the same positions
    for (Count k = 0; k < ctx.c1.length(); ++k) (d10[i - 1 + k] == 0 ? s1.zeros : s1.ones)++;
    for (Count k = 0; k < ctx.c2.length(); ++k) (d10[i + len - 2 - k] == 0 ? s2.zeros : s2.ones)++;

    const Count l1 = ctx.c1.length(), l2 = ctx.c2.length();
    const Count m1 = std::min<Count>(ctx.d1 ? ctx.d1->ones : 0, l1);
    const Count m2 = std::min<Count>(ctx.d2 ? ctx.d2->zeros : 0, l2);
    const bool ok = s1.zeros == l1 - m1 && s1.ones == m1 && s2.zeros == m2 && s2.ones == l2 - m2;
    if (!ok && violations++ == 0) {
      std::ostringstream detail;
      detail << "first violation: window at " << i << " length " << len << " C10 "
             << digits_between(c10, i, i + len - 1) << " D10 " << digits_between(DigitStream::d10(), i, i + len - 1)
             << " c1=(" << ctx.c1.zeros << "," << ctx.c1.ones << ") c2=(" << ctx.c2.zeros << "," << ctx.c2.ones
             << ")";
      report.notes.push_back(detail.str());
    }
  }
  report.add("windows checked", std::to_string(opts.samples), std::to_string(checked));
  report.add("relation violations", "0", std::to_string(violations));
  report.notes.push_back("all-binary windows skipped: " + std::to_string(skipped));
  return report;
}

Position snap_to_nonbinary(Position n) {
  for (Position p = n; p >= 1; --p)
    if (!is_binary(champernowne_digit(p))) return p;
  Position p = n + 1;
  while (is_binary(champernowne_digit(p))) ++p;
  return p;
}

std::vector<IdentityReport> verify_identity(const Word& w, std::span<const Count> n_list, const CaseOptions& opts,
                                            bool snap) {
  if (!w.is_mixed()) throw std::invalid_argument("identity check needs a mixed word: " + w.to_string());
  if (n_list.empty()) return {};

  std::vector<Count> effective;
  effective.reserve(n_list.size());
  for (Count n : n_list) effective.push_back(snap ? snap_to_nonbinary(n) : n);
  std::vector<Count> grid = effective;
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  const std::vector<Word> perms = distinct_permutations(w);
  const auto lhs = count_B(DigitStream::d10(), w, grid);
  const auto sum_a = count_A_any(DigitStream::c10(), perms, grid);
  const auto cases = case_counts(w, grid, opts);

  std::vector<IdentityReport> out;
  out.reserve(n_list.size());
  for (std::size_t k = 0; k < n_list.size(); ++k) {
    const auto g = static_cast<std::size_t>(std::lower_bound(grid.begin(), grid.end(), effective[k]) - grid.begin());
    IdentityReport r;
    r.pattern = w;
    r.requested_n = n_list[k];
    r.n = effective[k];
    r.lhs = lhs[g];
    r.sum_a = sum_a[g];
    r.case1 = cases[g].case1;
    r.case2 = cases[g].case2;
    r.rhs = static_cast<std::int64_t>(r.sum_a + r.case2) - static_cast<std::int64_t>(r.case1);
    r.mismatch = static_cast<std::int64_t>(r.lhs) - r.rhs;
    out.push_back(r);
  }
  return out;
}

}  // namespace abelnorm
