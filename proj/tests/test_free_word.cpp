#include <doctest.h>

#include <functional>
#include <random>

#include "tss/error.hpp"
#include "tss/free_word.hpp"

using namespace tss;

namespace {

FreeWord word(std::initializer_list<Letter> letters, int rank = -1) {
  return FreeWord::reduce(std::vector<Letter>(letters), rank);
}

// All freely reduced words of length exactly `len` over `rank` generators.
void each_reduced_word(int rank, int len, const std::function<void(const FreeWord&)>& fn) {
  std::vector<Letter> current;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(current.size()) == len) {
      fn(FreeWord::reduce(current));
      return;
    }
    for (int g = 0; g < rank; ++g) {
      for (int e : {+1, -1}) {
        if (!current.empty() && current.back().generator == g && current.back().exponent == -e) {
          continue;
        }
        current.push_back({g, e});
        rec();
        current.pop_back();
      }
    }
  };
  rec();
}

}  // namespace

TEST_CASE("free reduction cancels adjacent inverse pairs") {
  CHECK(word({{0, +1}, {0, -1}}).empty());
  CHECK(word({{0, +1}, {1, +1}, {1, -1}, {0, +1}}) == word({{0, +1}, {0, +1}}));
  CHECK(word({{2, -1}, {2, +1}, {2, +1}}) == word({{2, +1}}));
}

TEST_CASE("reduce validates letters") {
  CHECK_THROWS_AS(word({{0, +2}}), DomainError);
  CHECK_THROWS_AS(word({{-1, +1}}), DomainError);
  CHECK_THROWS_AS(FreeWord::reduce({{3, +1}}, 3), DomainError);
  CHECK_NOTHROW(FreeWord::reduce({{2, +1}}, 3));
}

TEST_CASE("reduction is idempotent and length-nonincreasing") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Letter> raw;
    int len = static_cast<int>(rng() % 12);
    for (int i = 0; i < len; ++i) {
      raw.push_back({static_cast<int>(rng() % 3), rng() % 2 ? +1 : -1});
    }
    FreeWord w = FreeWord::reduce(raw);
    CHECK(w.length() <= raw.size());
    CHECK(FreeWord::reduce(w.letters()) == w);
  }
}

TEST_CASE("w * w^-1 reduces to the empty word") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Letter> raw;
    int len = static_cast<int>(rng() % 10);
    for (int i = 0; i < len; ++i) {
      raw.push_back({static_cast<int>(rng() % 4), rng() % 2 ? +1 : -1});
    }
    FreeWord w = FreeWord::reduce(raw);
    CHECK((w * w.inverse()).empty());
    CHECK((w.inverse() * w).empty());
  }
}

TEST_CASE("powers of a generator commute with it") {
  FreeWord g0cubed = word({{0, +1}, {0, +1}, {0, +1}});
  CHECK(commutes_with_generator(g0cubed, 0));
  CHECK(is_power_of_generator(g0cubed, 0) == 3);

  FreeWord mixed = word({{0, +1}, {1, +1}});
  CHECK_FALSE(commutes_with_generator(mixed, 0));
  CHECK_FALSE(is_power_of_generator(mixed, 0).has_value());

  CHECK(is_power_of_generator(FreeWord(), 0) == 0);
  CHECK(commutes_with_generator(FreeWord(), 1));
  CHECK(is_power_of_generator(word({{0, -1}, {0, -1}}), 0) == -2);
  CHECK_FALSE(is_power_of_generator(word({{1, +1}}), 0).has_value());
}

TEST_CASE("commuting with a generator is equivalent to being its power") {
  // Exhaustive over all reduced words of length <= 6 in ranks 2 and 3.
  for (int rank : {2, 3}) {
    long checked = 0;
    for (int len = 0; len <= 6; ++len) {
      each_reduced_word(rank, len, [&](const FreeWord& w) {
        for (int i = 0; i < rank; ++i) {
          bool commutes = commutes_with_generator(w, i);
          bool power = is_power_of_generator(w, i).has_value();
          if (commutes != power) {
            CAPTURE(len);
            CAPTURE(i);
            REQUIRE(commutes == power);
          }
          ++checked;
        }
      });
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("letterwise inversion is an automorphism, not the group inverse") {
  FreeWord w = word({{0, +1}, {1, -1}});
  FreeWord inv_letters = w.invert_letters();
  CHECK(inv_letters == word({{0, -1}, {1, +1}}));
  CHECK(inv_letters.invert_letters() == w);
  CHECK(w.inverse() == word({{1, +1}, {0, -1}}));
}
