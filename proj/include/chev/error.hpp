#pragma once

#include <stdexcept>
#include <string>

namespace chev {

enum class Errc {
  invalid_spec,
  parse_error,
  not_unit,
  invalid_root,
  dimension_mismatch,
  cap_exceeded,
  no_consistent_signs,
  unsupported_group,
  not_coprime,
  k_too_small,
  wrong_group,
  no_f2_factors,
  not_two_torsion,
  hypothesis_violated,
  cache_mismatch,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace chev
