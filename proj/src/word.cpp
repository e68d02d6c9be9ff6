#include "abelnorm/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace abelnorm {

Word::Word(std::vector<Digit> digits) : digits_(std::move(digits)) {
  if (digits_.empty()) throw std::invalid_argument("word must be nonempty");
  for (Digit d : digits_)
    if (d >= kBase) throw std::invalid_argument("digit out of range");
}

Word Word::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("word must be nonempty");
  std::vector<Digit> digits;
  digits.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > '9')
      throw std::invalid_argument("not a decimal digit: '" + std::string(1, c) + "'");
    digits.push_back(static_cast<Digit>(c - '0'));
  }
  return Word(std::move(digits));
}

bool Word::has_binary() const noexcept {
  return std::any_of(digits_.begin(), digits_.end(), is_binary);
}

bool Word::has_nonbinary() const noexcept {
  return std::any_of(digits_.begin(), digits_.end(), [](Digit d) { return !is_binary(d); });
}

std::string Word::to_string() const {
  std::string s;
  s.reserve(digits_.size());
  for (Digit d : digits_) s.push_back(static_cast<char>('0' + d));
  return s;
}

std::uint64_t ParikhVector::total() const noexcept {
  std::uint64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

bool ParikhVector::same_nonbinary(const ParikhVector& other) const noexcept {
  return std::equal(counts.begin() + 2, counts.end(), other.counts.begin() + 2);
}

ParikhVector parikh(std::span<const Digit> digits) noexcept {
  ParikhVector v;
  for (Digit d : digits) ++v.counts[d];
  return v;
}

std::vector<Word> distinct_permutations(const Word& w) {
  std::vector<Digit> d(w.begin(), w.end());
  std::sort(d.begin(), d.end());
  std::vector<Word> out;
  do {
    out.emplace_back(d);
  } while (std::next_permutation(d.begin(), d.end()));
  return out;
}

}  // namespace abelnorm
