#include "abelnorm/digits.hpp"

#include <stdexcept>

namespace abelnorm {

namespace {

struct Located {
  Position number;  // the integer holding the position
  int width;        // its decimal length
  int index;        // 0-based digit index within it
};

// Positions 1..9 hold the 1-digit integers, the next 180 the 2-digit ones, ...
Located locate_champernowne(Position p) {
  if (p == 0) throw std::invalid_argument("positions are 1-indexed");
  unsigned __int128 rem = p - 1;
  unsigned __int128 block = 9;
  Position first = 1;
  int width = 1;
  while (rem >= block * static_cast<unsigned>(width)) {
    rem -= block * static_cast<unsigned>(width);
    ++width;
    block *= 10;
    first *= 10;
  }
  return {first + static_cast<Position>(rem / static_cast<unsigned>(width)), width,
          static_cast<int>(rem % static_cast<unsigned>(width))};
}

}  // namespace

Digit champernowne_digit(Position p) {
  const Located loc = locate_champernowne(p);
  Position n = loc.number;
  for (int i = loc.width - 1; i > loc.index; --i) n /= 10;
  return static_cast<Digit>(n % 10);
}

Position champernowne_number_at(Position p) { return locate_champernowne(p).number; }

Position champernowne_offset(Position number) {
  if (number == 0) throw std::invalid_argument("integers start at 1");
  Position pos = 1;
  Position first = 1;
  Position block = 9;
  int width = 1;
  while (number >= first * 10) {
    pos += block * static_cast<Position>(width);
    first *= 10;
    block *= 10;
    ++width;
  }
  return pos + (number - first) * static_cast<Position>(width);
}

// --- DigitStream -----------------------------------------------------------

DigitStream DigitStream::c10() { return DigitStream(nullptr, false); }
DigitStream DigitStream::d10() { return DigitStream(nullptr, true); }
DigitStream DigitStream::literal(Word w) {
  if (w.empty()) throw std::invalid_argument("literal stream needs a nonempty word");
  return DigitStream(std::make_shared<const Word>(std::move(w)), false);
}

SourceKind DigitStream::kind() const noexcept {
  if (literal_) return SourceKind::literal;
  return sorted_ ? SourceKind::d10 : SourceKind::c10;
}

std::optional<Position> DigitStream::length() const noexcept {
  if (literal_) return literal_->size();
  return std::nullopt;
}

DigitStream DigitStream::unsorted() const { return DigitStream(literal_, false); }

std::optional<Digit> DigitStream::raw_digit_at(Position p) const {
  if (p == 0) return std::nullopt;
  if (literal_) {
    if (p > literal_->size()) return std::nullopt;
    return (*literal_)[p - 1];
  }
  return champernowne_digit(p);
}

std::optional<Digit> DigitStream::digit_at(Position p) const {
  const auto d = raw_digit_at(p);
  if (!d || !sorted_ || !is_binary(*d)) return d;
  const auto run = maximal_run_of(*this, p);
  return static_cast<Digit>(p - run->start < run->zeros ? 0 : 1);
}

DigitCursor DigitStream::cursor(Position start) const { return DigitCursor(*this, start); }

DigitStream sigma_transform(const DigitStream& s) { return DigitStream(s.literal_, true); }

Word sigma_transform(const Word& w) {
  return stream_prefix(sigma_transform(DigitStream::literal(w)), w.size());
}

// --- DigitCursor -----------------------------------------------------------

DigitCursor::DigitCursor(const DigitStream& s, Position start) : stream_(s) {
  if (start == 0) throw std::invalid_argument("positions are 1-indexed");
  if (!s.sorted()) {
    seek_raw(start);
    pos_ = start;
    return;
  }
  // A sorted run can only be emitted from its first digit.
  const auto run = maximal_run_of(s, start);
  const Position from = run ? run->start : start;
  seek_raw(from);
  pos_ = from;
  while (pos_ < start) next();
}

void DigitCursor::seek_raw(Position p) {
  raw_pos_ = p;
  if (stream_.literal_) return;
  const Located loc = locate_champernowne(p);
  number_len_ = loc.width;
  Position n = loc.number;
  for (int i = loc.width - 1; i >= 0; --i) {
    number_[static_cast<std::size_t>(i)] = static_cast<Digit>(n % 10);
    n /= 10;
  }
  number_idx_ = loc.index;
}

std::optional<Digit> DigitCursor::next_raw() {
  if (stream_.literal_) {
    if (raw_pos_ > stream_.literal_->size()) return std::nullopt;
    return (*stream_.literal_)[raw_pos_++ - 1];
  }
  if (number_idx_ == number_len_) {
    int i = number_len_ - 1;
    while (i >= 0 && number_[static_cast<std::size_t>(i)] == 9) number_[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) {
      // 99..9 -> 100..0
      number_[0] = 1;
      number_[static_cast<std::size_t>(number_len_)] = 0;
      ++number_len_;
    } else {
      ++number_[static_cast<std::size_t>(i)];
    }
    number_idx_ = 0;
  }
  ++raw_pos_;
  return number_[static_cast<std::size_t>(number_idx_++)];
}

std::optional<Digit> DigitCursor::next() {
  for (;;) {
    if (pending_zeros_ > 0) {
      --pending_zeros_;
      ++pos_;
      return Digit{0};
    }
    if (pending_ones_ > 0) {
      --pending_ones_;
      ++pos_;
      return Digit{1};
    }
    if (tail_pending_) {
      tail_pending_ = false;
      if (pending_tail_) ++pos_;
      return pending_tail_;
    }
    const auto d = next_raw();
    if (!d) return d;
    if (!stream_.sorted() || !is_binary(*d)) {
      ++pos_;
      return d;
    }
    // Only the run's composition is kept; its contents are never stored.
    Count zeros = *d == 0, ones = *d == 1;
    for (;;) {
      const auto e = next_raw();
      if (e && is_binary(*e)) {
        zeros += *e == 0;
        ones += *e == 1;
        continue;
      }
      pending_tail_ = e;
      tail_pending_ = true;
      break;
    }
    pending_zeros_ = zeros;
    pending_ones_ = ones;
  }
}

// --- Prefixes and runs -----------------------------------------------------

Word stream_prefix(const DigitStream& s, Count n) {
  if (n == 0) throw std::invalid_argument("prefix length must be >= 1");
  std::vector<Digit> out;
  out.reserve(n);
  auto cur = s.cursor();
  for (Count i = 0; i < n; ++i) {
    const auto d = cur.next();
    if (!d) throw std::out_of_range("stream shorter than requested prefix");
    out.push_back(*d);
  }
  return Word(std::move(out));
}

std::vector<BinaryRun> binary_runs(const DigitStream& s, Count n) {
  if (n == 0) throw std::invalid_argument("prefix length must be >= 1");
  std::vector<BinaryRun> runs;
  std::optional<BinaryRun> open;
  auto cur = s.unsorted().cursor();
  for (;;) {
    const Position p = cur.position();
    const auto d = cur.next();
    if (d && is_binary(*d)) {
      if (!open) open = BinaryRun{p, 0, 0, 0};
      ++open->length;
      open->zeros += *d == 0;
      open->ones += *d == 1;
      continue;
    }
    if (open) {
      runs.push_back(*open);
      open.reset();
    }
    if (!d || p >= n) break;
  }
  return runs;
}

std::optional<BinaryRun> maximal_run_of(const DigitStream& s, Position p) {
  const DigitStream raw = s.unsorted();
  const auto d = raw.digit_at(p);
  if (!d || !is_binary(*d)) return std::nullopt;
  Position start = p;
  while (start > 1) {
    const auto left = raw.digit_at(start - 1);
    if (!left || !is_binary(*left)) break;
    --start;
  }
  BinaryRun run{start, 0, 0, 0};
  auto cur = raw.cursor(start);
  for (;;) {
    const auto e = cur.next();
    if (!e || !is_binary(*e)) break;
    ++run.length;
    run.zeros += *e == 0;
    run.ones += *e == 1;
  }
  return run;
}

std::optional<BinaryRun> maximal_run_of(const DigitStream& s, Cut cut) {
  if (cut.after >= 1) {
    if (auto run = maximal_run_of(s, cut.after)) return run;
  }
  return maximal_run_of(s, cut.after + 1);
}

}  // namespace abelnorm
