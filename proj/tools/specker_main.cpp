#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "specker/engine.hpp"

namespace {

int emit(const specker::EngineResult& result, const std::string& out_path) {
  std::string text = specker::render_response(result.response);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot open " << out_path << " for writing\n";
      return 2;
    }
    out << text;
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Boolean powers of commutative rings: canonical forms, idempotent "
      "algebras, hom spaces, spectra and the induced lattice order"};

  std::string command, ring_text, in_path, out_path;
  int atoms = 0;
  std::uint64_t seed = 0;
  std::uint64_t exhaustive_limit = 10000;

  app.add_option("--command", command,
                 "one of: normalize arith idempotents faithful homs minspec "
                 "ann baer hull lattice equivalence-report quotient")
      ->required();
  app.add_option("--ring", ring_text,
                 R"(ring descriptor, e.g. {"kind":"Zmod","modulus":6})")
      ->required();
  app.add_option("--atoms", atoms, "atoms of the Boolean algebra (1..64)");
  app.add_option("--in", in_path, "JSON file with the command arguments");
  app.add_option("--out", out_path, "write the response here (default stdout)");
  app.add_option("--seed", seed, "seed for sampled verification (default 0)");
  app.add_option("--exhaustive-limit", exhaustive_limit,
                 "carrier size up to which checks run exhaustively "
                 "(default 10000)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  specker::Json request{{"command", command},
                        {"seed", seed},
                        {"exhaustive_limit", exhaustive_limit}};

  specker::Json ring = specker::Json::parse(ring_text, nullptr, false);
  if (ring.is_discarded()) {
    specker::Json error{{"code", "ParseError"},
                        {"message", "--ring is not valid JSON"}};
    return emit({specker::Json{{"command", command},
                               {"ok", false},
                               {"error", error}},
                 2},
                out_path);
  }
  request["ring"] = ring;
  if (app.count("--atoms") > 0) request["atoms"] = atoms;

  if (!in_path.empty()) {
    std::ifstream in(in_path, std::ios::binary);
    if (!in) {
      specker::Json error{{"code", "ParseError"},
                          {"message", "cannot read " + in_path}};
      return emit({specker::Json{{"command", command},
                                 {"ok", false},
                                 {"error", error}},
                   2},
                  out_path);
    }
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    specker::Json args = specker::Json::parse(text, nullptr, false);
    if (args.is_discarded()) {
      specker::Json error{{"code", "ParseError"},
                          {"message", in_path + " is not valid JSON"}};
      return emit({specker::Json{{"command", command},
                                 {"ok", false},
                                 {"error", error}},
                   2},
                  out_path);
    }
    request["args"] = args;
  }

  return emit(specker::run_request(request), out_path);
}
