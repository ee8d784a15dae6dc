#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace laguerre {

enum class SquareClass : std::uint8_t { zero, square, nonsquare };

const char* to_string(SquareClass c);

class FieldSpec;
using FieldRef = std::shared_ptr<const FieldSpec>;

/// Prime field GF(q). Elements are plain ints in [0, q); the table-backed
/// helpers below are the hot path used by every geometric sweep.
class FieldSpec {
 public:
  static constexpr int kDefaultBound = 101;

  /// Validates q (prime, 2 <= q <= bound) and precomputes inverse and
  /// square-class tables. Throws Error{not_prime | out_of_range}.
  static FieldRef make(int q, int bound = kDefaultBound);

  int q() const noexcept { return q_; }
  bool char_two() const noexcept { return q_ == 2; }

  int reduce(long long v) const noexcept {
    long long r = v % q_;
    return static_cast<int>(r < 0 ? r + q_ : r);
  }
  int add(int a, int b) const noexcept { return reduce(static_cast<long long>(a) + b); }
  int sub(int a, int b) const noexcept { return reduce(static_cast<long long>(a) - b); }
  int mul(int a, int b) const noexcept { return reduce(static_cast<long long>(a) * b); }
  int neg(int a) const noexcept { return a == 0 ? 0 : q_ - a; }
  int inv(int a) const;
  int div(int a, int b) const { return mul(a, inv(b)); }
  int pow(int a, long long e) const;

  /// Throws Error{char_two} for q = 2.
  SquareClass square_class(int a) const;
  bool is_nonzero_square(int a) const { return square_class(a) == SquareClass::square; }

  /// Nonzero squares in increasing order.
  std::vector<int> nonzero_squares() const;

  /// Square root of a square (least root), or -1 for a nonsquare.
  int sqrt(int a) const;

 private:
  explicit FieldSpec(int q);

  int q_;
  std::vector<int> inverse_;
  std::vector<SquareClass> square_class_;
  std::vector<int> sqrt_;
};

bool is_prime(int n);

/// Value-semantic element bound to its field. Mixing fields throws
/// Error{field_mismatch}.
class FieldElement {
 public:
  FieldElement(FieldRef field, long long value);

  int value() const noexcept { return value_; }
  const FieldSpec& field() const noexcept { return *field_; }
  const FieldRef& field_ref() const noexcept { return field_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(long long e) const;
  SquareClass square_class() const { return field_->square_class(value_); }

  bool operator==(const FieldElement& o) const noexcept {
    return value_ == o.value_ && field_->q() == o.field_->q();
  }

 private:
  const FieldSpec& same_field(const FieldElement& o) const;

  FieldRef field_;
  int value_;
};

}  // namespace laguerre
