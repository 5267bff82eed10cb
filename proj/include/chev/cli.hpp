#pragma once

// chevtool front end.  Every result is one line of JSON:
//   {"command": ..., "inputs": {...}, "result": ..., "elapsed_ms": n, "cache_hit": b}
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace chev {

struct RunRecord {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json result;
  std::int64_t elapsed_ms = 0;
  bool cache_hit = false;

  nlohmann::json to_json() const;
  static RunRecord from_json(const nlohmann::json& j);
  /// Single line, keys sorted.
  std::string to_line() const;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

/// args excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chev
