#pragma once

#include <stdexcept>
#include <string>

namespace specker {

// Stable error codes; the CLI maps them 1:1 onto the wire format.
enum class Errc {
  parse_error,
  mixed_algebras,
  not_prime,
  not_weak_baer_at,
  not_idempotent,
  not_a_domain,
  unordered_ring,
  unsupported_capability,
  target_mismatch,
  ring_mismatch,
  inconsistent_backend,
  too_large,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::parse_error: return "ParseError";
    case Errc::mixed_algebras: return "MixedAlgebras";
    case Errc::not_prime: return "NotPrime";
    case Errc::not_weak_baer_at: return "NotWeakBaerAt";
    case Errc::not_idempotent: return "NotIdempotent";
    case Errc::not_a_domain: return "NotADomain";
    case Errc::unordered_ring: return "UnorderedRing";
    case Errc::unsupported_capability: return "UnsupportedCapability";
    case Errc::target_mismatch: return "TargetMismatch";
    case Errc::ring_mismatch: return "RingMismatch";
    case Errc::inconsistent_backend: return "InconsistentBackend";
    case Errc::too_large: return "TooLarge";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::string data = {})
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code),
        message_(message),
        data_(std::move(data)) {}

  Errc code() const { return code_; }
  // the human text without the code prefix that what() carries
  const std::string& message() const { return message_; }
  // offending value in canonical notation, e.g. "2" for NotWeakBaerAt(2)
  const std::string& data() const { return data_; }

 private:
  Errc code_;
  std::string message_;
  std::string data_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message,
                              std::string data = {}) {
  throw Error(code, message, std::move(data));
}

}  // namespace specker
