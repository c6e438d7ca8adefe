#include "negasm/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace negasm {

Rat::Rat(std::int64_t numerator, std::int64_t denominator)
    : num_(numerator), den_(denominator) {
  if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rat Rat::infinity() {
  Rat r;
  r.inf_ = true;
  return r;
}

Rat Rat::operator+(const Rat& o) const {
  if (inf_ || o.inf_) return infinity();
  return Rat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rat Rat::operator-(const Rat& o) const {
  if (o.inf_) throw std::domain_error("subtracting infinity");
  if (inf_) return infinity();
  return Rat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rat Rat::operator-() const {
  if (inf_) throw std::domain_error("negating infinity");
  Rat r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

bool Rat::operator==(const Rat& o) const {
  if (inf_ || o.inf_) return inf_ == o.inf_;
  return num_ == o.num_ && den_ == o.den_;
}

std::strong_ordering Rat::operator<=>(const Rat& o) const {
  if (inf_ && o.inf_) return std::strong_ordering::equal;
  if (inf_) return std::strong_ordering::greater;
  if (o.inf_) return std::strong_ordering::less;
  // reduced forms with positive denominators; cross-multiply
  __int128 lhs = static_cast<__int128>(num_) * o.den_;
  __int128 rhs = static_cast<__int128>(o.num_) * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rat::str() const {
  if (inf_) return "inf";
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rat Rat::parse(const std::string& s) {
  if (s == "inf") return infinity();
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(std::stoll(s), 1);
  return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

}  // namespace negasm
