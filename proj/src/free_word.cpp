#include "tss/free_word.hpp"

#include <string>

#include "tss/error.hpp"

namespace tss {

FreeWord FreeWord::reduce(const std::vector<Letter>& raw, int rank) {
  FreeWord w;
  for (const Letter& l : raw) {
    if (l.exponent != 1 && l.exponent != -1) {
      throw DomainError("free word letter exponent must be +-1");
    }
    if (l.generator < 0 || (rank >= 0 && l.generator >= rank)) {
      throw DomainError("free word generator index out of range: " +
                        std::to_string(l.generator));
    }
    if (!w.letters_.empty() && w.letters_.back().generator == l.generator &&
        w.letters_.back().exponent == -l.exponent) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(l);
    }
  }
  return w;
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
  std::vector<Letter> raw = letters_;
  raw.insert(raw.end(), o.letters_.begin(), o.letters_.end());
  return reduce(raw);
}

FreeWord FreeWord::inverse() const {
  std::vector<Letter> raw;
  raw.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    raw.push_back({it->generator, -it->exponent});
  }
  FreeWord w;
  w.letters_ = std::move(raw);  // already reduced if *this was
  return w;
}

FreeWord FreeWord::invert_letters() const {
  FreeWord w;
  w.letters_.reserve(letters_.size());
  for (const Letter& l : letters_) w.letters_.push_back({l.generator, -l.exponent});
  return w;
}

bool commutes_with_generator(const FreeWord& w, int i) {
  FreeWord g = FreeWord::reduce({{i, +1}});
  return (w * g * w.inverse() * g.inverse()).empty();
}

std::optional<long> is_power_of_generator(const FreeWord& w, int i) {
  long k = 0;
  for (const Letter& l : w.letters()) {
    if (l.generator != i) return std::nullopt;
    k += l.exponent;
  }
  // A reduced word on one generator has all exponents equal, so |k| = length.
  if (static_cast<std::size_t>(k < 0 ? -k : k) != w.length()) return std::nullopt;
  return k;
}

}  // namespace tss
