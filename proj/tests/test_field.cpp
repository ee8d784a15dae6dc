#include <algorithm>
#include <string>

#include "doctest.h"

#include "test_util.hpp"
#include "laguerre/field.hpp"

using namespace laguerre;

namespace {

long long naive_pow(long long a, long long e, long long q) {
  long long r = 1 % q;
  for (long long i = 0; i < e; ++i) r = r * a % q;
  return r;
}

}  // namespace

TEST_CASE("make validates the order") {
  CHECK(code_of([] { FieldSpec::make(4); }) == Errc::not_prime);
  CHECK(code_of([] { FieldSpec::make(9); }) == Errc::not_prime);
  CHECK(code_of([] { FieldSpec::make(1); }) == Errc::out_of_range);
  CHECK(code_of([] { FieldSpec::make(0); }) == Errc::out_of_range);
  CHECK(code_of([] { FieldSpec::make(103); }) == Errc::out_of_range);
  CHECK(code_of([] { FieldSpec::make(13, 11); }) == Errc::out_of_range);
  CHECK(FieldSpec::make(101)->q() == 101);
  CHECK(FieldSpec::make(2)->char_two());
}

TEST_CASE("is_prime matches trial division") {
  int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  int n = 0;
  for (int k = 0; k < 50; ++k) n += is_prime(k);
  CHECK(n == 15);
  for (int p : primes) CHECK(is_prime(p));
}

TEST_CASE("arithmetic against plain modular integers") {
  for (int q : {2, 3, 5, 7, 11, 13}) {
    auto f = FieldSpec::make(q);
    for (int a = 0; a < q; ++a) {
      CHECK(f->neg(a) == (q - a) % q);
      for (int b = 0; b < q; ++b) {
        CHECK(f->add(a, b) == (a + b) % q);
        CHECK(f->sub(a, b) == ((a - b) % q + q) % q);
        CHECK(f->mul(a, b) == (a * b) % q);
        if (b != 0) CHECK(f->mul(f->div(a, b), b) == a);
      }
      if (a != 0) CHECK((a * f->inv(a)) % q == 1);
      for (int e = 0; e < 2 * q; ++e) CHECK(f->pow(a, e) == naive_pow(a, e, q));
    }
    CHECK(f->reduce(-1) == q - 1);
    CHECK(f->reduce(-3LL * q) == 0);
  }
}

TEST_CASE("inverse and negative powers") {
  auto f = FieldSpec::make(7);
  CHECK(code_of([&] { f->inv(0); }) == Errc::division_by_zero);
  CHECK(code_of([&] { f->div(3, 0); }) == Errc::division_by_zero);
  CHECK(f->pow(3, -1) == f->inv(3));
  CHECK(f->pow(3, -2) == f->mul(f->inv(3), f->inv(3)));
}

TEST_CASE("square classes follow Euler's criterion") {
  for (int q : {3, 5, 7, 11, 13, 17, 19, 23}) {
    auto f = FieldSpec::make(q);
    CHECK(f->square_class(0) == SquareClass::zero);
    for (int a = 1; a < q; ++a) {
      long long euler = naive_pow(a, (q - 1) / 2, q);
      CHECK(f->is_nonzero_square(a) == (euler == 1));
    }
    auto sq = f->nonzero_squares();
    CHECK(sq.size() == static_cast<std::size_t>((q - 1) / 2));
    CHECK(std::is_sorted(sq.begin(), sq.end()));
  }
}

TEST_CASE("sqrt returns the least root") {
  for (int q : {3, 5, 7, 11, 13}) {
    auto f = FieldSpec::make(q);
    for (int a = 0; a < q; ++a) {
      int r = f->sqrt(a);
      int least = -1;
      for (int k = 0; k < q && least < 0; ++k)
        if (k * k % q == a) least = k;
      CHECK(r == least);
    }
  }
  auto f5 = FieldSpec::make(5);
  CHECK(f5->sqrt(4) == 2);
  CHECK(f5->sqrt(2) == -1);
}

TEST_CASE("square class is undefined in characteristic two") {
  auto f = FieldSpec::make(2);
  CHECK(code_of([&] { f->square_class(1); }) == Errc::char_two);
}

TEST_CASE("FieldElement") {
  auto f = FieldSpec::make(11);
  FieldElement a(f, 7), b(f, -2);
  CHECK(b.value() == 9);
  CHECK((a + b).value() == 5);
  CHECK((a - b).value() == 9);
  CHECK((a * b).value() == 8);
  CHECK(((a / b) * b) == a);
  CHECK((-a).value() == 4);
  CHECK((a * a.inv()).value() == 1);
  CHECK(a.pow(10).value() == 1);
  CHECK(FieldElement(f, 3).square_class() == SquareClass::square);
  CHECK(FieldElement(f, 2).square_class() == SquareClass::nonsquare);

  auto g = FieldSpec::make(13);
  FieldElement c(g, 7);
  CHECK(code_of([&] { (void)(a + c); }) == Errc::field_mismatch);
  CHECK_FALSE(a == c);
  CHECK(code_of([&] { (void)FieldElement(f, 0).inv(); }) == Errc::division_by_zero);
}

TEST_CASE("string names") {
  CHECK(std::string(to_string(SquareClass::nonsquare)) == "nonsquare");
  CHECK(std::string(to_string(Errc::a3_failure)) == "a3_failure");
}
