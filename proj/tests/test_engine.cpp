#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "specker/engine.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

using namespace specker;

namespace {

const std::vector<std::string> kCommands = {
    "normalize", "arith",    "idempotents", "faithful",
    "homs",      "minspec",  "ann",         "baer",
    "hull",      "lattice",  "equivalence-report", "quotient"};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(bool(in), "cannot open " << path.string());
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

std::filesystem::path golden(const std::string& name) {
  return std::filesystem::path(SPECKER_GOLDEN_DIR) / name;
}

struct ProcResult {
  std::string out;
  int exit_code;
};

// run through /bin/sh, capturing stdout; stderr is dropped
ProcResult run_shell(const std::string& line) {
  FILE* pipe = popen((line + " 2>/dev/null").c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), n);
  int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  return {out, WEXITSTATUS(status)};
}

std::string quoted(const std::string& s) { return "'" + s + "'"; }

// reconstruct the flag form of a stored request
std::string cli_line(const Json& request, const std::filesystem::path& args) {
  std::string line = std::string(SPECKER_CLI_PATH);
  line += " --command " + quoted(request["command"].get<std::string>());
  line += " --ring " + quoted(request["ring"].dump());
  if (request.contains("atoms"))
    line += " --atoms " + std::to_string(request["atoms"].get<int>());
  if (request.contains("args")) {
    std::ofstream out(args, std::ios::binary);
    out << request["args"].dump();
    out.close();
    line += " --in " + quoted(args.string());
  }
  return line;
}

}  // namespace

TEST_CASE("stored transcripts replay byte for byte") {
  for (const std::string& name : kCommands) {
    CAPTURE(name);
    std::string request = read_file(golden(name + "_request.json"));
    std::string expected = read_file(golden(name + "_response.json"));

    EngineResult first = run_request_text(request);
    CHECK(first.exit_code == 0);
    CHECK(render_response(first.response) == expected);

    // same bytes in, same bytes out
    EngineResult second = run_request_text(request);
    CHECK(render_response(second.response) == expected);
  }
}

TEST_CASE("the cli produces the same bytes as the engine") {
  std::filesystem::path args_path =
      std::filesystem::temp_directory_path() /
      ("specker_cli_args_" + std::to_string(getpid()) + ".json");
  for (const std::string& name : kCommands) {
    CAPTURE(name);
    Json request = Json::parse(read_file(golden(name + "_request.json")));
    std::string expected = read_file(golden(name + "_response.json"));

    ProcResult run = run_shell(cli_line(request, args_path));
    CHECK(run.exit_code == 0);
    CHECK(run.out == expected);
  }
  std::filesystem::remove(args_path);
}

TEST_CASE("the cli rejects bad input without crashing") {
  std::string cli(SPECKER_CLI_PATH);

  // --ring that is not JSON
  ProcResult bad_ring =
      run_shell(cli + " --command idempotents --ring '{nope' --atoms 2");
  CHECK(bad_ring.exit_code == 2);
  Json doc = Json::parse(bad_ring.out);
  CHECK(doc["ok"] == false);
  CHECK(doc["error"]["code"] == "ParseError");

  // missing required flags: usage error, nothing on stdout
  ProcResult no_args = run_shell(cli);
  CHECK(no_args.exit_code == 2);
  CHECK(no_args.out.empty());

  // args file that does not exist
  ProcResult gone = run_shell(cli +
                              " --command ann --ring '{\"kind\":\"Z\"}'"
                              " --atoms 1 --in /nonexistent/x.json");
  CHECK(gone.exit_code == 2);
  CHECK(Json::parse(gone.out)["error"]["code"] == "ParseError");
}

TEST_CASE("malformed requests come back as parse envelopes") {
  EngineResult garbled = run_request_text("{this is not json");
  CHECK(garbled.exit_code == 2);
  CHECK(garbled.response["ok"] == false);
  CHECK(garbled.response["command"] == "?");
  CHECK(garbled.response["error"]["code"] == "ParseError");

  EngineResult unknown = run_request_text(
      R"({"command": "frobnicate", "ring": {"kind": "Z"}})");
  CHECK(unknown.exit_code == 2);
  CHECK(unknown.response["error"]["code"] == "ParseError");
  std::string msg = unknown.response["error"]["message"].get<std::string>();
  CHECK(msg.find("frobnicate") != std::string::npos);

  EngineResult no_ring = run_request_text(R"({"command": "idempotents"})");
  CHECK(no_ring.exit_code == 2);
  CHECK(no_ring.response["error"]["code"] == "ParseError");

  EngineResult bad_atoms = run_request_text(
      R"({"command": "idempotents", "ring": {"kind": "Z"}, "atoms": 65})");
  CHECK(bad_atoms.exit_code == 2);

  // pointwise arity must match the atom count
  EngineResult short_element = run_request_text(
      R"({"command": "ann", "ring": {"kind": "Z"}, "atoms": 3,
          "args": {"element": {"pointwise": ["1", "2"]}}})");
  CHECK(short_element.exit_code == 2);
  CHECK(short_element.response["error"]["code"] == "ParseError");
}

TEST_CASE("domain errors exit 1 and carry their own codes") {
  // minimal primes as evaluation kernels need a domain underneath
  EngineResult composite = run_request_text(
      R"({"command": "minspec", "ring": {"kind": "Zmod", "modulus": 6},
          "atoms": 2})");
  CHECK(composite.exit_code == 1);
  CHECK(composite.response["ok"] == false);
  CHECK(composite.response["error"]["code"] == "NotADomain");

  // annihilators over Z/4 hit the non-squarefree witness
  EngineResult z4 = run_request_text(
      R"({"command": "ann", "ring": {"kind": "Zmod", "modulus": 4},
          "atoms": 1, "args": {"element": {"pointwise": ["2"]}}})");
  CHECK(z4.exit_code == 1);
  CHECK(z4.response["error"]["code"] == "NotWeakBaerAt");
  CHECK(z4.response["error"]["data"] == "2");

  // faithfulness is a question about idempotents only
  EngineResult not_idem = run_request_text(
      R"({"command": "faithful", "ring": {"kind": "Zmod", "modulus": 6},
          "atoms": 2, "args": {"element": {"pointwise": ["2", "3"]}}})");
  CHECK(not_idem.exit_code == 1);
  CHECK(not_idem.response["error"]["code"] == "NotIdempotent");

  // a lattice order needs a totally ordered coefficient ring
  EngineResult unordered = run_request_text(
      R"({"command": "lattice", "ring": {"kind": "Zmod", "modulus": 6},
          "atoms": 2, "args": {"op": "join",
          "lhs": {"pointwise": ["1", "2"]},
          "rhs": {"pointwise": ["2", "1"]}}})");
  CHECK(unordered.exit_code == 1);
  CHECK(unordered.response["error"]["code"] == "UnorderedRing");
}

TEST_CASE("orthogonal input is another spelling of the same element") {
  std::string expected = read_file(golden("ann_response.json"));
  // (2,3) written as 2 on atom 0 plus 3 on atom 1
  EngineResult res = run_request_text(
      R"({"command": "ann", "ring": {"kind": "Zmod", "modulus": 6},
          "atoms": 2, "args": {"element": {"orthogonal": [
            {"coeff": "2", "idem": [0]},
            {"coeff": "3", "idem": [1]}]}}})");
  CHECK(res.exit_code == 0);
  CHECK(render_response(res.response) == expected);

  // even unnormalized overlapping terms land in the same place:
  // 2*(atoms 0,1) + 1*(atom 1) has values (2, 3)
  EngineResult overlapping = run_request_text(
      R"({"command": "ann", "ring": {"kind": "Zmod", "modulus": 6},
          "atoms": 2, "args": {"element": {"orthogonal": [
            {"coeff": "2", "idem": [0, 1]},
            {"coeff": "1", "idem": [1]}]}}})");
  CHECK(render_response(overlapping.response) == expected);
}

TEST_CASE("emitted elements feed straight back in") {
  Json arith = Json::parse(read_file(golden("arith_response.json")));
  Json value = arith["result"]["value"];  // carries pointwise and orthogonal

  // x - x = 0, with x taken verbatim from the earlier output
  Json request{{"command", "arith"},
               {"ring", Json{{"kind", "Zmod"}, {"modulus", 6}}},
               {"atoms", 3},
               {"args", Json{{"op", "sub"}, {"lhs", value}, {"rhs", value}}}};
  EngineResult res = run_request(request);
  REQUIRE(res.exit_code == 0);
  Json diff = res.response["result"]["value"];
  CHECK(diff["pointwise"] == Json::array({"0", "0", "0"}));
  CHECK(diff["orthogonal"] == Json::array());

  // the orthogonal spelling alone denotes the same element
  Json orth_only{{"orthogonal", value["orthogonal"]}};
  Json again{{"command", "arith"},
             {"ring", Json{{"kind", "Zmod"}, {"modulus", 6}}},
             {"atoms", 3},
             {"args", Json{{"op", "sub"},
                           {"lhs", orth_only},
                           {"rhs", Json{{"pointwise", value["pointwise"]}}}}}};
  EngineResult zero = run_request(again);
  REQUIRE(zero.exit_code == 0);
  CHECK(zero.response["result"]["value"]["orthogonal"] == Json::array());
}
