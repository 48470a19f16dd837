#pragma once

/*
 * Command engine behind the CLI and the python module.  One JSON
 * request in, one JSON response out:
 *
 *   {"command": ..., "ring": ..., "atoms": ..., "args": {...},
 *    "seed": 0, "exhaustive_limit": 10000}
 *
 * Success: {"command": ..., "ok": true, "result": {...}}, exit code 0.
 * Failure: {"command": ..., "ok": false, "error": {"code", "message"
 * (, "data")}}, exit code 2 for malformed requests and 1 for domain
 * errors.  Responses serialize deterministically (sorted keys, two
 * space indent).
 */

#include <string>

#include "specker/json_io.hpp"

namespace specker {

struct EngineResult {
  Json response;
  int exit_code = 0;
};

EngineResult run_request(const Json& request);
EngineResult run_request_text(const std::string& text);

// canonical byte form of a response
std::string render_response(const Json& response);

}  // namespace specker
