#include "laguerre/field.hpp"

#include <string>

#include "laguerre/error.hpp"

namespace laguerre {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::not_prime: return "not_prime";
    case Errc::out_of_range: return "out_of_range";
    case Errc::char_two: return "char_two";
    case Errc::division_by_zero: return "division_by_zero";
    case Errc::field_mismatch: return "field_mismatch";
    case Errc::parallel_points: return "parallel_points";
    case Errc::not_incident: return "not_incident";
    case Errc::incident: return "incident";
    case Errc::identical_circles: return "identical_circles";
    case Errc::a3_failure: return "a3_failure";
    case Errc::on_ideal_generator: return "on_ideal_generator";
    case Errc::group_axioms: return "group_axioms";
    case Errc::unknown_id: return "unknown_id";
    case Errc::invalid_argument: return "invalid_argument";
  }
  return "unknown";
}

const char* to_string(SquareClass c) {
  switch (c) {
    case SquareClass::zero: return "zero";
    case SquareClass::square: return "square";
    case SquareClass::nonsquare: return "nonsquare";
  }
  return "unknown";
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldRef FieldSpec::make(int q, int bound) {
  if (q < 2 || q > bound)
    throw Error(Errc::out_of_range,
                "field order " + std::to_string(q) + " outside [2, " + std::to_string(bound) + "]");
  if (!is_prime(q)) throw Error(Errc::not_prime, std::to_string(q) + " is not prime");
  return FieldRef(new FieldSpec(q));
}

FieldSpec::FieldSpec(int q) : q_(q), inverse_(q, 0), square_class_(q, SquareClass::nonsquare), sqrt_(q, -1) {
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if ((a * b) % q == 1) {
        inverse_[a] = b;
        break;
      }
  square_class_[0] = SquareClass::zero;
  sqrt_[0] = 0;
  for (int k = q - 1; k >= 1; --k) {
    int s = (k * k) % q;
    square_class_[s] = SquareClass::square;
    sqrt_[s] = k;
  }
}

int FieldSpec::inv(int a) const {
  if (a == 0) throw Error(Errc::division_by_zero, "inverse of zero in GF(" + std::to_string(q_) + ")");
  return inverse_[a];
}

int FieldSpec::pow(int a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  long long result = 1 % q_;
  long long base = a;
  while (e > 0) {
    if (e & 1) result = result * base % q_;
    base = base * base % q_;
    e >>= 1;
  }
  return static_cast<int>(result);
}

SquareClass FieldSpec::square_class(int a) const {
  if (char_two()) throw Error(Errc::char_two, "no square classes in char 2");
  return square_class_[reduce(a)];
}

std::vector<int> FieldSpec::nonzero_squares() const {
  std::vector<int> out;
  for (int a = 1; a < q_; ++a)
    if (square_class_[a] == SquareClass::square || (char_two() && a == 1)) out.push_back(a);
  return out;
}

int FieldSpec::sqrt(int a) const { return sqrt_[reduce(a)]; }

FieldElement::FieldElement(FieldRef field, long long value) : field_(std::move(field)), value_(field_->reduce(value)) {}

const FieldSpec& FieldElement::same_field(const FieldElement& o) const {
  if (field_->q() != o.field_->q())
    throw Error(Errc::field_mismatch, "operands from GF(" + std::to_string(field_->q()) + ") and GF(" +
                                          std::to_string(o.field_->q()) + ")");
  return *field_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  return {field_, same_field(o).add(value_, o.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  return {field_, same_field(o).sub(value_, o.value_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  return {field_, same_field(o).mul(value_, o.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  return {field_, same_field(o).div(value_, o.value_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }
FieldElement FieldElement::inv() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(long long e) const { return {field_, field_->pow(value_, e)}; }

}  // namespace laguerre
