#ifndef ALCOR_EXTENDED_NAT_HPP
#define ALCOR_EXTENDED_NAT_HPP

#include <cassert>
#include <cstdint>
#include <limits>
#include <string>

#include "alcor/errors.hpp"

namespace alcor {

// Natural numbers extended with infinity.  Weights, world costs, and ranks
// all live here.  Infinity absorbs under addition, compares above every
// finite value, and multiplying it by a zero count yields zero (a satisfied
// axiom contributes nothing, whatever its weight).
class ExtendedNat {
 public:
  constexpr ExtendedNat() = default;
  constexpr ExtendedNat(std::uint64_t v) : v_(v) { assert(v != kInfSentinel); }

  static constexpr ExtendedNat infinity() {
    ExtendedNat e;
    e.v_ = kInfSentinel;
    return e;
  }

  constexpr bool is_finite() const { return v_ != kInfSentinel; }
  constexpr bool is_infinite() const { return v_ == kInfSentinel; }

  constexpr std::uint64_t value() const {
    assert(is_finite());
    return v_;
  }

  friend constexpr bool operator==(ExtendedNat a, ExtendedNat b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(ExtendedNat a, ExtendedNat b) { return a.v_ != b.v_; }
  // The sentinel is the maximal word, so plain word comparison gives the
  // total order with n < infinity for every finite n.
  friend constexpr bool operator<(ExtendedNat a, ExtendedNat b) { return a.v_ < b.v_; }
  friend constexpr bool operator<=(ExtendedNat a, ExtendedNat b) { return a.v_ <= b.v_; }
  friend constexpr bool operator>(ExtendedNat a, ExtendedNat b) { return a.v_ > b.v_; }
  friend constexpr bool operator>=(ExtendedNat a, ExtendedNat b) { return a.v_ >= b.v_; }

  friend constexpr ExtendedNat operator+(ExtendedNat a, ExtendedNat b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return ExtendedNat(a.v_ + b.v_);
  }

  ExtendedNat& operator+=(ExtendedNat o) {
    *this = *this + o;
    return *this;
  }

  // a - b with b finite and b <= a; infinity minus a finite value stays
  // infinite.
  friend constexpr ExtendedNat operator-(ExtendedNat a, ExtendedNat b) {
    assert(b.is_finite());
    if (a.is_infinite()) return infinity();
    assert(a.v_ >= b.v_);
    return ExtendedNat(a.v_ - b.v_);
  }

  // weight * violation count
  friend constexpr ExtendedNat operator*(ExtendedNat w, std::uint64_t count) {
    if (count == 0) return ExtendedNat(std::uint64_t{0});
    if (w.is_infinite()) return infinity();
    return ExtendedNat(w.v_ * count);
  }

  friend constexpr ExtendedNat min(ExtendedNat a, ExtendedNat b) { return a < b ? a : b; }

  std::string to_string() const { return is_finite() ? std::to_string(v_) : "inf"; }

 private:
  static constexpr std::uint64_t kInfSentinel = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t v_ = 0;
};

// rank + signed offset with infinity absorbing.  The result must stay a
// natural number; a negative outcome is a caller bug.
inline ExtendedNat shift(ExtendedNat rank, std::int64_t offset) {
  if (rank.is_infinite()) return ExtendedNat::infinity();
  const std::int64_t shifted = static_cast<std::int64_t>(rank.value()) + offset;
  if (shifted < 0) throw ContractError("rank shift produced a negative value");
  return ExtendedNat(static_cast<std::uint64_t>(shifted));
}

}  // namespace alcor

#endif  // ALCOR_EXTENDED_NAT_HPP
