// abelnorm: digit streams, abelian counts and weights for Champernowne's
// constant C10 and its run-sorted variant D10.

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "abelnorm/experiments.hpp"

using namespace abelnorm;

namespace {

// Accepts plain integers and exact powers written as 1e7.
Count parse_count(const std::string& text) {
  Count value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec == std::errc() && ptr == text.data() + text.size()) return value;
  double d = 0;
  try {
    std::size_t used = 0;
    d = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw CLI::ValidationError("not a count: " + text);
  }
  if (d < 0 || d != std::floor(d) || d > 1.8e19) throw CLI::ValidationError("not a count: " + text);
  return static_cast<Count>(d);
}

std::vector<Count> parse_grid(const std::string& text) {
  std::vector<Count> grid;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) grid.push_back(parse_count(item));
  return grid;
}

std::vector<Word> parse_words(const std::string& text) {
  std::vector<Word> words;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) words.push_back(Word::parse(item));
  return words;
}

DigitStream source_from(const std::string& name) { return name == "d10" ? DigitStream::d10() : DigitStream::c10(); }

std::string weight_line(const WeightValue& w) {
  std::ostringstream out;
  out.precision(17);
  out << w.value << ',';
  if (w.abs_error) {
    out << *w.abs_error;
  } else {
    out << "uncertified";
  }
  out << ',' << to_string(w.case_tag) << ',';
  if (w.estimator_n) out << *w.estimator_n;
  return out.str();
}

void print_identity(std::ostream& out, const char* mode, const std::vector<IdentityReport>& reports) {
  for (const auto& r : reports) {
    out << mode << ',' << r.pattern.to_string() << ',' << r.requested_n << ',' << r.n << ',' << r.lhs << ','
        << r.sum_a << ',' << r.case2 << ',' << r.case1 << ',' << r.rhs << ',' << r.mismatch << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Abelian counts, weights and checks on C10 and D10"};
  app.require_subcommand(1);
  const std::vector<std::string> sources{"c10", "d10"};

  // digits
  auto* digits = app.add_subcommand("digits", "Print N digits starting at position P");
  std::string digits_source = "c10";
  std::string digits_start = "1", digits_len;
  digits->add_option("--source", digits_source)->check(CLI::IsMember(sources));
  digits->add_option("--start", digits_start);
  digits->add_option("--len", digits_len)->required();

  // runs
  auto* runs = app.add_subcommand("runs", "Maximal binary runs as start,length,zeros,ones");
  std::string runs_source = "c10", runs_n;
  runs->add_option("--source", runs_source)->check(CLI::IsMember(sources));
  runs->add_option("--n", runs_n)->required();

  // count
  auto* count = app.add_subcommand("count", "Exact (A) or abelian (B) occurrence count");
  std::string count_source = "c10", count_pattern, count_n, count_mode = "exact";
  count->add_option("--source", count_source)->check(CLI::IsMember(sources));
  count->add_option("--pattern", count_pattern)->required();
  count->add_option("--n", count_n)->required();
  count->add_option("--mode", count_mode)->check(CLI::IsMember({"exact", "abelian"}));

  // casecount
  auto* casecount = app.add_subcommand("casecount", "Case 1 (c) or Case 2 (d) window count on C10");
  std::string case_pattern, case_n, case_which = "c";
  bool case_literal = false, case_causal = false;
  casecount->add_option("--pattern", case_pattern)->required();
  casecount->add_option("--n", case_n)->required();
  casecount->add_option("--which", case_which)->check(CLI::IsMember({"c", "d"}));
  casecount->add_flag("--case2-literal", case_literal, "Case 2 excludes only v equal to w as a string");
  casecount->add_flag("--causal", case_causal, "Diagnostic: do not resolve runs past the window end");

  // weight
  auto* weight_cmd = app.add_subcommand("weight", "Weight of a pattern as value,abs_error,case_tag,estimator_n");
  std::string weight_pattern, weight_estimate_n = "1000000";
  double weight_tol = 1e-12;
  bool weight_literal = false;
  weight_cmd->add_option("--pattern", weight_pattern)->required();
  weight_cmd->add_option("--tol", weight_tol);
  weight_cmd->add_option("--estimate-n", weight_estimate_n);
  weight_cmd->add_flag("--case2-literal", weight_literal);

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite; exit code 0 iff it passes");
  std::string verify_suite, verify_n = "50000", verify_pattern = "4501140";
  Count verify_samples = 100'000;
  std::uint64_t verify_seed = LemmaOptions{}.seed;
  bool verify_literal = false, verify_no_snap = false;
  verify->add_option("--suite", verify_suite)->required()->check(CLI::IsMember({"paper", "lemma", "identity"}));
  verify->add_option("--n", verify_n, "Cutoff(s) for the identity suite, comma separated");
  verify->add_option("--samples", verify_samples);
  verify->add_option("--seed", verify_seed);
  verify->add_option("--pattern", verify_pattern, "Mixed word for the identity suite");
  verify->add_flag("--case2-literal", verify_literal);
  verify->add_flag("--no-snap", verify_no_snap, "Do not move n to a non-binary digit of C10");

  // converge
  auto* converge = app.add_subcommand("converge", "Abelian-normality quotients along a grid, as CSV");
  std::string conv_source = "d10", conv_pattern, conv_grid, conv_weight = "auto", conv_out;
  double conv_tol = 1e-12;
  converge->add_option("--source", conv_source)->check(CLI::IsMember(sources));
  converge->add_option("--pattern", conv_pattern)->required();
  converge->add_option("--grid", conv_grid)->required();
  converge->add_option("--weight", conv_weight)->check(CLI::IsMember({"auto", "pure"}));
  converge->add_option("--tol", conv_tol);
  converge->add_option("--out", conv_out, "CSV file (stdout if omitted)");

  // probe-pure
  auto* probe = app.add_subcommand("probe-pure", "Pure-weight quotients on D10 (evidence only), as CSV");
  std::string probe_patterns, probe_grid, probe_out;
  probe->add_option("--patterns", probe_patterns)->required();
  probe->add_option("--grid", probe_grid)->required();
  probe->add_option("--out", probe_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*digits) {
      const Count len = parse_count(digits_len);
      auto cur = source_from(digits_source).cursor(parse_count(digits_start));
      std::string out;
      out.reserve(len);
      for (Count k = 0; k < len; ++k) out.push_back(static_cast<char>('0' + *cur.next()));
      std::cout << out << '\n';
    } else if (*runs) {
      for (const auto& r : binary_runs(source_from(runs_source), parse_count(runs_n)))
        std::cout << r.start << ',' << r.length << ',' << r.zeros << ',' << r.ones << '\n';
    } else if (*count) {
      const auto s = source_from(count_source);
      const Word E = Word::parse(count_pattern);
      const Count n = parse_count(count_n);
      std::cout << (count_mode == "exact" ? count_A(s, E, n) : count_B(s, E, n)) << '\n';
    } else if (*casecount) {
      CaseOptions opts;
      if (case_literal) opts.case2 = Case2Mode::string_distinct;
      if (case_causal) opts.lookaround = Lookaround::causal;
      const Word w = Word::parse(case_pattern);
      const Count n = parse_count(case_n);
      std::cout << (case_which == "c" ? count_C(w, n, opts) : count_D(w, n, opts)) << '\n';
    } else if (*weight_cmd) {
      WeightOptions opts;
      opts.tol = weight_tol;
      opts.estimate_n = parse_count(weight_estimate_n);
      if (weight_literal) opts.cases.case2 = Case2Mode::string_distinct;
      std::cout << weight_line(weight(Word::parse(weight_pattern), opts)) << '\n';
    } else if (*verify) {
      if (verify_suite == "paper") {
        const Report r = verify_paper_examples();
        std::cout << r;
        return r.passed() ? 0 : 1;
      }
      if (verify_suite == "lemma") {
        LemmaOptions opts;
        opts.samples = verify_samples;
        opts.seed = verify_seed;
        const Report r = verify_lemma(opts);
        std::cout << r;
        return r.passed() ? 0 : 1;
      }
      // identity: both Case 2 readings are always reported.
      const Word w = Word::parse(verify_pattern);
      const auto grid = parse_grid(verify_n);
      const auto shipped = verify_identity(w, grid, CaseOptions{Case2Mode::parikh_distinct}, !verify_no_snap);
      const auto literal = verify_identity(w, grid, CaseOptions{Case2Mode::string_distinct}, !verify_no_snap);
      std::cout << "mode,pattern,requested_n,n,lhs,sum_a,case2,case1,rhs,mismatch\n";
      print_identity(std::cout, "parikh-distinct", shipped);
      print_identity(std::cout, "string-distinct", literal);
      const auto& checked = verify_literal ? literal : shipped;
      for (const auto& r : checked)
        if (r.mismatch != 0) return 1;
      return 0;
    } else if (*converge) {
      const Word E = Word::parse(conv_pattern);
      const auto grid = parse_grid(conv_grid);
      WeightValue W;
      if (conv_weight == "pure") {
        W = pure_weight(E);
      } else {
        WeightOptions opts;
        opts.tol = conv_tol;
        opts.estimate_n = grid.empty() ? opts.estimate_n : grid.back();
        W = weight(E, opts);
      }
      const auto records = convergence_table(source_from(conv_source), E, grid, W);
      if (conv_out.empty()) {
        write_csv(std::cout, records);
      } else {
        std::ofstream file(conv_out);
        if (!file) throw std::runtime_error("cannot open " + conv_out);
        write_csv(file, records);
      }
    } else if (*probe) {
      const auto words = parse_words(probe_patterns);
      const auto records = pure_abelian_probe(words, parse_grid(probe_grid));
      std::cerr << "# pure-weight quotients on D10: empirical evidence only, no verdict\n";
      if (probe_out.empty()) {
        write_csv(std::cout, records);
      } else {
        std::ofstream file(probe_out);
        if (!file) throw std::runtime_error("cannot open " + probe_out);
        write_csv(file, records);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
