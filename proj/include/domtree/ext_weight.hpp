#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace domtree {

/// Non-negative edge weight in exact fixed-point units plus an explicit
/// infinite value. The unit scale (fixed-point denominator) is declared
/// per instance file; all in-memory arithmetic is on integer units.
///
/// Every finite value orders below infinity. Addition with infinity
/// yields infinity; finite addition is exact and reports int64 overflow
/// as an error instead of wrapping.
class ExtWeight {
 public:
  constexpr ExtWeight() = default;

  static ExtWeight finite(std::int64_t units) {
    if (units < 0) throw std::invalid_argument("ExtWeight: negative weight");
    ExtWeight w;
    w.units_ = units;
    return w;
  }

  static constexpr ExtWeight infinity() {
    ExtWeight w;
    w.infinite_ = true;
    return w;
  }

  static constexpr ExtWeight zero() { return ExtWeight{}; }

  bool is_finite() const { return !infinite_; }
  bool is_infinite() const { return infinite_; }

  std::int64_t units() const {
    if (infinite_) throw std::logic_error("ExtWeight: units() on infinity");
    return units_;
  }

  ExtWeight operator+(ExtWeight other) const {
    if (infinite_ || other.infinite_) return infinity();
    std::int64_t sum = 0;
    if (__builtin_add_overflow(units_, other.units_, &sum))
      throw std::overflow_error("ExtWeight: addition overflow");
    return finite(sum);
  }

  ExtWeight& operator+=(ExtWeight other) { return *this = *this + other; }

  // Member order (infinite_, units_) puts every finite value below
  // infinity; infinite values keep units_ == 0 so equality is sound.
  friend constexpr auto operator<=>(const ExtWeight&, const ExtWeight&) = default;

  /// "inf" or the decimal unit count.
  std::string to_string() const {
    return infinite_ ? "inf" : std::to_string(units_);
  }

 private:
  bool infinite_ = false;
  std::int64_t units_ = 0;
};

}  // namespace domtree
