#include "abelnorm/counting.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace abelnorm {

namespace {

void check_grid(std::span<const Count> grid) {
  if (grid.empty()) throw std::invalid_argument("cutoff grid is empty");
  if (grid.front() == 0) throw std::invalid_argument("cutoffs must be >= 1");
  for (std::size_t k = 1; k < grid.size(); ++k)
    if (grid[k] <= grid[k - 1]) throw std::invalid_argument("cutoff grid must be strictly increasing");
}

// Streams s once up to the last cutoff; `step(p, d)` returns the number of
// windows ending at p that count.
template <class Step>
std::vector<Count> scan_grid(const DigitStream& s, std::span<const Count> grid, Step step) {
  check_grid(grid);
  std::vector<Count> out;
  out.reserve(grid.size());
  Count total = 0;
  auto cur = s.cursor();
  for (Position p = 1; out.size() < grid.size(); ++p) {
    const auto d = cur.next();
    if (!d) break;
    total += step(p, *d);
    if (grid[out.size()] == p) out.push_back(total);
  }
  out.resize(grid.size(), total);  // literal ran out before the last cutoff
  return out;
}

}  // namespace

// --- PatternAutomaton ------------------------------------------------------

PatternAutomaton::PatternAutomaton(std::span<const Word> patterns) {
  constexpr std::uint32_t kNone = UINT32_MAX;
  std::vector<Word> unique(patterns.begin(), patterns.end());
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

  delta_.push_back({});
  delta_[0].fill(kNone);
  hits_.push_back(0);
  for (const Word& w : unique) {
    std::uint32_t node = 0;
    for (Digit d : w) {
      if (delta_[node][d] == kNone) {
        delta_[node][d] = static_cast<std::uint32_t>(delta_.size());
        delta_.push_back({});
        delta_.back().fill(kNone);
        hits_.push_back(0);
      }
      node = delta_[node][d];
    }
    ++hits_[node];
  }

  // Breadth-first: complete the transition table through failure links.
  std::vector<std::uint32_t> fail(delta_.size(), 0);
  std::deque<std::uint32_t> queue;
  for (auto& next : delta_[0]) {
    if (next == kNone) {
      next = 0;
    } else {
      queue.push_back(next);
    }
  }
  while (!queue.empty()) {
    const std::uint32_t node = queue.front();
    queue.pop_front();
    hits_[node] += hits_[fail[node]];
    for (int d = 0; d < kBase; ++d) {
      std::uint32_t& next = delta_[node][static_cast<std::size_t>(d)];
      if (next == kNone) {
        next = delta_[fail[node]][static_cast<std::size_t>(d)];
      } else {
        fail[next] = delta_[fail[node]][static_cast<std::size_t>(d)];
        queue.push_back(next);
      }
    }
  }
}

// --- AbelianWindow ---------------------------------------------------------

AbelianWindow::AbelianWindow(const Word& target) : target_(parikh(target)), ring_(target.size()) {
  if (target.empty()) throw std::invalid_argument("target word must be nonempty");
  for (auto c : target_.counts) mismatched_ += c != 0;
}

void AbelianWindow::bump(Digit d, int delta) noexcept {
  const bool before = window_[d] == target_[d];
  window_[d] = static_cast<std::uint32_t>(static_cast<int>(window_[d]) + delta);
  const bool after = window_[d] == target_[d];
  mismatched_ += static_cast<int>(before) - static_cast<int>(after);
}

bool AbelianWindow::push(Digit d) noexcept {
  if (full()) bump(ring_[head_], -1);
  ring_[head_] = d;
  head_ = (head_ + 1) % ring_.size();
  bump(d, +1);
  if (!full()) ++filled_;
  return full() && mismatched_ == 0;
}

Word AbelianWindow::contents() const {
  std::vector<Digit> out;
  out.reserve(ring_.size());
  for (std::size_t k = 0; k < ring_.size(); ++k) out.push_back(ring_[(head_ + k) % ring_.size()]);
  return Word(std::move(out));
}

// --- Counting --------------------------------------------------------------

std::vector<Count> count_A_any(const DigitStream& s, std::span<const Word> patterns,
                               std::span<const Count> grid) {
  PatternAutomaton automaton(patterns);
  return scan_grid(s, grid, [&](Position, Digit d) { return automaton.feed(d); });
}

std::vector<Count> count_A(const DigitStream& s, const Word& E, std::span<const Count> grid) {
  return count_A_any(s, std::span<const Word>(&E, 1), grid);
}

Count count_A(const DigitStream& s, const Word& E, Count n) {
  return count_A(s, E, std::span<const Count>(&n, 1)).front();
}

std::vector<Count> count_B(const DigitStream& s, const Word& E, std::span<const Count> grid) {
  AbelianWindow window(E);
  return scan_grid(s, grid, [&](Position, Digit d) -> Count { return window.push(d); });
}

Count count_B(const DigitStream& s, const Word& E, Count n) {
  return count_B(s, E, std::span<const Count>(&n, 1)).front();
}

// --- Boundary context ------------------------------------------------------

std::optional<std::pair<BinaryPiece, BinaryPiece>> boundary_pieces(const Word& v) {
  std::size_t head = 0;
  while (head < v.size() && is_binary(v[head])) ++head;
  if (head == v.size()) return std::nullopt;
  std::size_t tail = v.size();
  while (is_binary(v[tail - 1])) --tail;
  BinaryPiece c1, c2;
  for (std::size_t k = 0; k < head; ++k) (v[k] == 0 ? c1.zeros : c1.ones)++;
  for (std::size_t k = tail; k < v.size(); ++k) (v[k] == 0 ? c2.zeros : c2.ones)++;
  return std::pair{c1, c2};
}

BoundaryContext boundary_context(const DigitStream& s, Position i, Count length, Lookaround look) {
  if (i == 0 || length == 0) throw std::invalid_argument("window must be nonempty and 1-indexed");
  std::vector<Digit> digits;
  digits.reserve(length);
  auto cur = s.cursor(i);
  for (Count k = 0; k < length; ++k) {
    const auto d = cur.next();
    if (!d) throw std::invalid_argument("window runs past the end of the stream");
    digits.push_back(*d);
  }
  const auto pieces = boundary_pieces(Word(std::move(digits)));
  if (!pieces) throw std::invalid_argument("window consists of binary digits only");

  BoundaryContext ctx;
  ctx.c1 = pieces->first;
  ctx.c2 = pieces->second;
  const Position last = i + length - 1;
  ctx.d1 = ctx.c1.empty() ? maximal_run_of(s, Cut{i - 1}) : maximal_run_of(s, i);
  if (look == Lookaround::full) {
    ctx.d2 = ctx.c2.empty() ? maximal_run_of(s, Cut{last}) : maximal_run_of(s, last);
  } else if (!ctx.c2.empty()) {
    // c2 is preceded by a non-binary digit, so the clipped run is c2 itself.
    ctx.d2 = BinaryRun{last - ctx.c2.length() + 1, ctx.c2.length(), ctx.c2.zeros, ctx.c2.ones};
  }
  return ctx;
}

SortedBoundary sorted_boundary(const BoundaryContext& ctx) noexcept {
  // c1 is a suffix of its run and c2 a prefix of its; sorting pushes the
  // run's ones to the right end and its zeros to the left end.
  const Count l1 = ctx.c1.length();
  const Count l2 = ctx.c2.length();
  const Count ones1 = std::min<Count>(ctx.d1 ? ctx.d1->ones : 0, l1);
  const Count zeros2 = std::min<Count>(ctx.d2 ? ctx.d2->zeros : 0, l2);
  return {l1 - ones1 + zeros2, l2 - zeros2 + ones1};
}

// --- Cases -----------------------------------------------------------------

namespace {

void check_context_fits(const BoundaryContext& ctx, const Word& v) {
  const auto pieces = boundary_pieces(v);
  if (!pieces) throw std::logic_error("window has no non-binary digit");
  if (pieces->first != ctx.c1 || pieces->second != ctx.c2)
    throw std::logic_error("boundary context does not describe " + v.to_string());
  if ((!ctx.c1.empty() && !ctx.d1) || (!ctx.c2.empty() && !ctx.d2))
    throw std::logic_error("nonempty boundary piece without a run");
}

// Binary digits of w not supplied by the interior of v; these must come from
// v's boundary pieces after sorting.
struct BoundaryNeed {
  std::int64_t zeros;
  std::int64_t ones;
};

BoundaryNeed boundary_need(const ParikhVector& w, const ParikhVector& v, const BoundaryContext& ctx) {
  const auto interior_zeros = static_cast<std::int64_t>(v.zeros() - ctx.c1.zeros - ctx.c2.zeros);
  const auto interior_ones = static_cast<std::int64_t>(v.ones() - ctx.c1.ones - ctx.c2.ones);
  return {static_cast<std::int64_t>(w.zeros()) - interior_zeros,
          static_cast<std::int64_t>(w.ones()) - interior_ones};
}

bool need_met(const BoundaryNeed& need, const SortedBoundary& got) {
  return need.zeros == static_cast<std::int64_t>(got.zeros) && need.ones == static_cast<std::int64_t>(got.ones);
}

}  // namespace

bool case1_predicate(const Word& w, const BoundaryContext& ctx, const Word& occ) {
  if (!w.is_mixed()) throw std::logic_error("case 1 needs a word with binary and non-binary digits");
  const ParikhVector pw = parikh(w);
  const ParikhVector po = parikh(occ);
  if (pw != po) throw std::logic_error(occ.to_string() + " is not a rearrangement of " + w.to_string());
  check_context_fits(ctx, occ);
  if (ctx.c1.empty() && ctx.c2.empty()) return false;
  return !need_met(boundary_need(pw, po, ctx), sorted_boundary(ctx));
}

bool case2_predicate(const Word& w, const Word& v, const BoundaryContext& ctx, Case2Mode mode) {
  if (!w.is_mixed()) throw std::logic_error("case 2 needs a word with binary and non-binary digits");
  if (v.size() != w.size()) return false;
  const ParikhVector pw = parikh(w);
  const ParikhVector pv = parikh(v);
  if (!pv.same_nonbinary(pw)) return false;
  if (mode == Case2Mode::parikh_distinct ? pv == pw : v == w) return false;
  check_context_fits(ctx, v);
  return need_met(boundary_need(pw, pv, ctx), sorted_boundary(ctx));
}

std::vector<CaseCounts> case_counts(const Word& w, std::span<const Count> grid, const CaseOptions& opts,
                                    const DigitStream& source) {
  const Case2Mode mode = opts.case2;
  if (!w.is_mixed())
    throw std::invalid_argument("case counts need a word with binary and non-binary digits: " + w.to_string());
  if (source.sorted()) throw std::invalid_argument("case counts are taken on the unsorted expansion");
  check_grid(grid);

  const ParikhVector target = parikh(w);
  const Count len = w.size();
  AbelianWindow window(w);
  std::vector<CaseCounts> out;
  out.reserve(grid.size());
  CaseCounts running;
  auto cur = source.cursor();
  for (Position p = 1; out.size() < grid.size(); ++p) {
    const auto d = cur.next();
    if (!d) break;
    const bool rearranged = window.push(*d);
    if (window.full()) {
      const Position start = p - len + 1;
      if (rearranged) {
        const Word occ = window.contents();
        if (is_binary(occ[0]) || is_binary(occ[len - 1])) {
          if (case1_predicate(w, boundary_context(source, start, len, opts.lookaround), occ)) {
            ++running.case1;
            if (!running.first_case1_end) running.first_case1_end = p;
          }
        }
      }
      if (window.counts().same_nonbinary(target) && (mode == Case2Mode::string_distinct || !rearranged)) {
        const Word v = window.contents();
        if (case2_predicate(w, v, boundary_context(source, start, len, opts.lookaround), mode)) {
          ++running.case2;
          if (!running.first_case2_end) running.first_case2_end = p;
        }
      }
    }
    if (grid[out.size()] == p) out.push_back(running);
  }
  out.resize(grid.size(), running);
  return out;
}

Count count_C(const Word& w, Count n, const CaseOptions& opts, const DigitStream& source) {
  return case_counts(w, std::span<const Count>(&n, 1), opts, source).front().case1;
}

Count count_D(const Word& w, Count n, const CaseOptions& opts, const DigitStream& source) {
  return case_counts(w, std::span<const Count>(&n, 1), opts, source).front().case2;
}

Word sort_interior_runs(const Word& p) {
  std::vector<Digit> out(p.begin(), p.end());
  std::size_t k = 0;
  while (k < out.size()) {
    if (!is_binary(out[k])) {
      ++k;
      continue;
    }
    std::size_t end = k;
    while (end < out.size() && is_binary(out[end])) ++end;
    if (k > 0 && end < out.size()) std::sort(out.begin() + static_cast<std::ptrdiff_t>(k), out.begin() + static_cast<std::ptrdiff_t>(end));
    k = end;
  }
  return Word(std::move(out));
}

}  // namespace abelnorm
