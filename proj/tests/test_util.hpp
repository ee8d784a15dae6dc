#pragma once

#include "doctest.h"
#include "laguerre/error.hpp"

// Code of the laguerre::Error thrown by fn; fails the test if none is.
template <typename Fn>
laguerre::Errc code_of(Fn&& fn) {
  try {
    fn();
  } catch (const laguerre::Error& e) {
    return e.code();
  }
  FAIL("no exception");
  return laguerre::Errc::invalid_argument;
}
