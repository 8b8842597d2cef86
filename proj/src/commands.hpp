#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "partitions.hpp"

namespace weylsig {

inline constexpr const char* kVersion = "0.1.0";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Request {
  std::string command;
  std::vector<std::string> args;
  std::string format = "json";  // json | tsv
  bool generalized = false;
  std::optional<int> cap;  // --n: rank cap; oracle-check sweeps ranks up to it
  int parallel = 1;
  std::string to;    // branch target: aa:k, bb:k, dd:k, sn
  std::string type;  // wcell / oracle-check group type
  bool envelope = false;
};

// {"command": ..., "args": [...], "format": ..., ...}; unknown keys are usage errors.
Request request_from_json(const std::string& text);

struct Response {
  int status = 0;  // 0 ok, 1 domain error, 2 usage error
  std::string output;
};

// Never throws. Domain and usage errors become {"error": ...} with the matching status.
Response run(const Request& req);

}  // namespace weylsig
