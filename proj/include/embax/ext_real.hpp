#pragma once

#include <compare>
#include <ostream>

namespace embax {

/// A value in [0, +inf] over the reals extended by a single top element.
///
/// Only comparison is defined. There is deliberately no arithmetic: anything
/// that needs to compute with a finite value must unwrap it with value().
class ExtReal {
 public:
  constexpr ExtReal() noexcept = default;

  /// Throws Error{NonFiniteEntry} for NaN or IEEE infinities.
  explicit ExtReal(double finite_value);

  static constexpr ExtReal infinity() noexcept { return ExtReal(Tag{}); }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  constexpr bool is_finite() const noexcept { return !infinite_; }

  /// Finite payload; throws Error{InvalidArgument} on +inf.
  double value() const;

  constexpr bool operator==(const ExtReal& other) const noexcept {
    return infinite_ == other.infinite_ && (infinite_ || value_ == other.value_);
  }

  constexpr std::partial_ordering operator<=>(const ExtReal& other) const noexcept {
    if (infinite_ || other.infinite_) {
      return static_cast<int>(infinite_) <=> static_cast<int>(other.infinite_);
    }
    return value_ <=> other.value_;
  }

 private:
  struct Tag {};
  constexpr explicit ExtReal(Tag) noexcept : infinite_(true) {}

  double value_ = 0.0;
  bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const ExtReal& x);

}  // namespace embax
