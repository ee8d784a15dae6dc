#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

namespace laguerre {

enum class Errc {
  not_prime,
  out_of_range,
  char_two,
  division_by_zero,
  field_mismatch,
  parallel_points,
  not_incident,
  incident,
  identical_circles,
  a3_failure,
  on_ideal_generator,
  group_axioms,
  unknown_id,
  invalid_argument,
};

const char* to_string(Errc code);

/// Exception carrying a machine-readable code and an optional JSON payload
/// (witness data for geometric failures).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, nlohmann::json detail = nullptr)
      : std::runtime_error(message), code_(code), detail_(std::move(detail)) {}

  Errc code() const noexcept { return code_; }
  const nlohmann::json& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  nlohmann::json detail_;
};

}  // namespace laguerre
