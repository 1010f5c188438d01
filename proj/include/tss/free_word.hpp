#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace tss {

/// A letter of a free-group word: generator index and exponent +-1.
struct Letter {
  int generator = 0;
  int exponent = +1;

  bool operator==(const Letter&) const = default;
};

/// A freely reduced word in a free group. Construction reduces eagerly, so
/// adjacent inverse pairs never survive.
class FreeWord {
 public:
  FreeWord() = default;

  /// Reduces the raw letter list. Throws DomainError if an exponent is not
  /// +-1 or, when rank >= 0, a generator index is out of [0, rank).
  static FreeWord reduce(const std::vector<Letter>& raw, int rank = -1);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  FreeWord operator*(const FreeWord& o) const;  // concatenate and reduce
  FreeWord inverse() const;                     // reverse and invert letters

  /// The automorphism sending every generator to its inverse: exponents flip,
  /// order is kept.
  FreeWord invert_letters() const;

  bool operator==(const FreeWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// True iff w commutes with the generator g_i, i.e. w g_i w^-1 g_i^-1 reduces
/// to the empty word.
bool commutes_with_generator(const FreeWord& w, int i);

/// If w = g_i^k returns k (k = 0 for the empty word), otherwise nullopt.
std::optional<long> is_power_of_generator(const FreeWord& w, int i);

}  // namespace tss
