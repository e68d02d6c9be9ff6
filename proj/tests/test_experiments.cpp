#include <algorithm>
#include <sstream>

#include "abelnorm/experiments.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace abelnorm;

namespace {

Word w(const std::string& s) { return Word::parse(s); }

const Check* find(const Report& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("normality_ratio") {
  CHECK(normality_ratio(DigitStream::c10(), w("12"), 50) == doctest::Approx(6.0));
  CHECK(normality_ratio(DigitStream::d10(), w("10"), 100'000) == 0.0);
  CHECK(normality_ratio(DigitStream::c10(), w("1234"), 4) == doctest::Approx(10'000.0 / 4.0));
}

TEST_CASE("abelian quotient") {
  const auto r = abelian_ratio(DigitStream::c10(), w("12"), 50, pure_weight(w("12")));
  CHECK(r.count_b == 5);
  CHECK(r.ratio == doctest::Approx(5.0));
  CHECK(r.deviation == doctest::Approx(4.0));
  CHECK(abelian_ratio(DigitStream::d10(), w("10"), 1000, weight(w("10"))).ratio > 0.0);
  CHECK(abelian_quotient(0, 10, 2, 1.0) == 0.0);
}

TEST_CASE("convergence_table agrees with per-cutoff counts") {
  const std::vector<Count> grid{100, 1000, 10'000, 100'000};
  const Word E = w("10");
  const WeightValue W = weight(E);
  const auto table = convergence_table(DigitStream::d10(), E, grid, W);
  REQUIRE(table.size() == grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    CHECK(table[k].n == grid[k]);
    CHECK(table[k].count_b == count_B(DigitStream::d10(), E, grid[k]));
    CHECK(table[k].ratio == abelian_quotient(table[k].count_b, grid[k], 2, W.value));
    CHECK(table[k].deviation == std::abs(table[k].ratio - 1.0));
  }
  CHECK(table[2].count_b == 269);
}

TEST_CASE("CSV output") {
  const std::vector<Count> grid{50};
  auto records = convergence_table(DigitStream::c10(), w("12"), grid, pure_weight(w("12")));
  std::ostringstream out;
  write_csv(out, records);
  CHECK(out.str() == "n,pattern,count_b,weight_value,weight_err,case_tag,ratio,deviation\n"
                     "50,12,5,2,0,pure,5,4\n");

  records[0].weight = weight_mixed(w("4501140"), 1000);
  const std::string line = csv_line(records[0]);
  CHECK(line.find(",uncertified,mixed-estimated,") != std::string::npos);

  const std::string binary = csv_line(make_record(10, w("10"), 1, weight(w("10"))));
  std::vector<std::string> fields;
  std::stringstream in(binary);
  for (std::string f; std::getline(in, f, ',');) fields.push_back(f);
  REQUIRE(fields.size() == 8);
  CHECK(std::stod(fields[3]) == weight(w("10")).value);  // round-trips at %.17g
  CHECK(fields[5] == "binary-series");
}

TEST_CASE("worked examples") {
  const Report r = verify_paper_examples();
  for (const char* name : {"A_12(C10, 50)", "B_12(C10, 50)", "D10 first 50 digits", "sorting 24911010010772",
                           "D_4501140(C10, 39123)"}) {
    const Check* c = find(r, name);
    REQUIRE(c != nullptr);
    CHECK_MESSAGE(c->passed, name);
  }
  // Runs resolved past the window end add two Case 1 windows before 40972.
  const Check* c = find(r, "C_4501140(C10, 40972)");
  REQUIRE(c != nullptr);
  CHECK(c->actual == "3");
  CHECK(std::any_of(r.notes.begin(), r.notes.end(),
                    [](const std::string& n) { return n.find("ends at position 39120") != std::string::npos; }));
}

TEST_CASE("worked examples catch broken operations") {
  SUBCASE("descending sort") {
    ExampleToolkit tk;
    tk.sigma = [](const Word& v) {
      std::string s = sigma_transform(v).to_string();
      for (char& ch : s) ch = ch == '0' ? '1' : ch == '1' ? '0' : ch;  // swaps 0s and 1s in each run
      return Word::parse(s);
    };
    tk.d10_prefix = [](Count n) {
      std::string s = oracle::champernowne(n);
      std::size_t k = 0;
      while (k < s.size()) {
        std::size_t e = k;
        while (e < s.size() && oracle::binary(s[e])) ++e;
        std::sort(s.begin() + static_cast<std::ptrdiff_t>(k), s.begin() + static_cast<std::ptrdiff_t>(e),
                  std::greater<>());
        k = e == k ? k + 1 : e;
      }
      return Word::parse(s);
    };
    const Report r = verify_paper_examples(tk);
    CHECK_FALSE(find(r, "sorting 24911010010772")->passed);
    CHECK_FALSE(find(r, "D10 first 50 digits")->passed);
  }
  SUBCASE("swapped counters") {
    ExampleToolkit tk;
    tk.count_A = [](const DigitStream& s, const Word& E, Count n) { return count_B(s, E, n); };
    tk.count_B = [](const DigitStream& s, const Word& E, Count n) { return count_A(s, E, n); };
    const Report r = verify_paper_examples(tk);
    CHECK_FALSE(find(r, "A_12(C10, 50)")->passed);
    CHECK_FALSE(find(r, "B_12(C10, 50)")->passed);
    CHECK_FALSE(r.passed());
  }
}

TEST_CASE("report printing") {
  Report r;
  r.add("x", "1", "1");
  r.add("y", "1", "2");
  r.notes.push_back("hello");
  std::ostringstream out;
  out << r;
  CHECK(out.str() == "PASS x: expected 1, got 1\nFAIL y: expected 1, got 2\nnote: hello\n");
  CHECK_FALSE(r.passed());
}

TEST_CASE("boundary relations on a small sample") {
  const Report r = verify_lemma(LemmaOptions{5'000, 200'000, 2, 20, 7});
  CHECK(r.passed());
  CHECK_THROWS_AS(verify_lemma(LemmaOptions{0}), std::invalid_argument);
}

TEST_CASE("count identity") {
  const Word E = w("4501140");
  const std::vector<Count> ns{50'000, 7, 41'000, 39'123};
  const auto reports = verify_identity(E, ns);
  REQUIRE(reports.size() == ns.size());
  for (const auto& r : reports) CHECK(r.mismatch == 0);
  CHECK(reports[0].requested_n == 50'000);
  CHECK(reports[0].n == 49'998);
  CHECK(reports[1].lhs == 0);
  CHECK(reports[1].rhs == 0);
  CHECK(reports[2].case1 >= 1);

  const auto unsnapped = verify_identity(E, ns, {}, false);
  for (const auto& r : unsnapped) CHECK(r.mismatch == 0);
  CHECK(snap_to_nonbinary(12) == 9);
  CHECK(snap_to_nonbinary(13) == 9);  // 1234567891011
  CHECK(snap_to_nonbinary(15) == 15);
}

TEST_CASE("identity holds for random mixed words") {
  std::mt19937_64 rng(13);
  int checked = 0;
  while (checked < 12) {
    std::uniform_int_distribution<std::size_t> len(2, 5);
    const Word E = w(oracle::random_word(rng, len(rng), "0112345"));
    if (!E.is_mixed()) continue;
    ++checked;
    for (const auto& r : verify_identity(E, std::vector<Count>{3'000, 40'000, 123'457}, {}, false))
      CHECK_MESSAGE(r.mismatch == 0, E.to_string() << " n=" << r.n);
  }
}

TEST_CASE("pure probe") {
  const std::vector<Word> words{w("22"), w("10"), w("456")};
  const std::vector<Count> grid{1000, 100'000};
  const auto records = pure_abelian_probe(words, grid);
  REQUIRE(records.size() == 6);
  CHECK(records[0].pattern == w("22"));
  CHECK(records[0].weight.value == 1.0);
  CHECK(records[5].pattern == w("456"));
  for (const auto& r : records) {
    CHECK(r.count_b == count_B(DigitStream::d10(), r.pattern, r.n));
    CHECK(r.weight.case_tag == WeightCase::pure);
  }
  // For 10 the pure weight is 2, so the quotient scales by 16/9 / 2.
  const auto series = abelian_ratio(DigitStream::d10(), w("10"), 100'000, weight(w("10")));
  CHECK(records[3].ratio == doctest::Approx(series.ratio * weight(w("10")).value / 2.0));
}
