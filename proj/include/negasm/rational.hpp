#pragma once

#include <cstdint>
#include <compare>
#include <string>

namespace negasm {

// Exact rational with a distinguished +infinity. Glue strengths, bond
// weights and cut weights are all Rat; no floating point enters the model.
// Infinity saturates under addition and compares greater than any finite
// value. Subtraction of infinite values is not used by the model and traps.
class Rat {
 public:
  constexpr Rat() = default;
  Rat(std::int64_t numerator, std::int64_t denominator);
  constexpr Rat(std::int64_t whole) : num_(whole), den_(1) {}

  static Rat infinity();
  static Rat eighths(std::int64_t n) { return Rat(n, 8); }

  bool is_infinite() const { return inf_; }
  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Rat operator+(const Rat& o) const;
  Rat operator-(const Rat& o) const;
  Rat operator-() const;
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }

  bool operator==(const Rat& o) const;
  std::strong_ordering operator<=>(const Rat& o) const;

  bool is_negative() const { return !inf_ && num_ < 0; }
  bool is_positive() const { return inf_ || num_ > 0; }

  // "p/q", "p", or "inf"
  std::string str() const;
  static Rat parse(const std::string& s);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  bool inf_ = false;
};

inline Rat operator""_r8(unsigned long long n) {
  return Rat::eighths(static_cast<std::int64_t>(n));
}

}  // namespace negasm
