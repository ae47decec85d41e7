#pragma once

/**
 * One two-party exchange session over a framed stream.
 *
 *   initiator                      responder
 *   HELLO ------------------------>
 *         <------------------------ HELLO
 *   PARAMS ----------------------->
 *   PUB (A) ---------------------->
 *         <------------------------ PUB (B)
 *   FIN (fp) --------------------->
 *         <------------------------ FIN (fp)  or  ERR "key mismatch"
 *
 * Both sides derive M, H from PARAMS (seed, or the explicit matrices). Only
 * public matrices and fingerprints are written; the private exponent never
 * leaves the session. Sends and receives alternate in a fixed order, so the
 * transcript is a pure function of roles, seeds and parameters.
 */

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "tropkex/channel.hpp"
#include "tropkex/frame.hpp"
#include "tropkex/protocol.hpp"

namespace tropkex {

inline constexpr int kExitOk = 0;
inline constexpr int kExitKeyMismatch = 2;
inline constexpr int kExitProtocol = 3;
inline constexpr int kExitUsage = 4;

inline constexpr int kProtocolVersion = 1;

struct SessionConfig {
  Role role = Role::initiator;
  /// Sent by the initiator; ignored by the responder.
  ParamsMessage params;
  std::uint64_t key_seed = 0;
  Variant variant = Variant::literal;
};

struct SessionReport {
  int exit_code = kExitProtocol;
  /// Reason sent or received in an ERR frame; empty on success.
  std::string error;
  std::optional<SharedKey> key;
  std::optional<std::uint64_t> fingerprint;
  std::optional<std::uint64_t> peer_fingerprint;
  bool peer_match = false;
  /// Every frame in order, each as "> " (sent) or "< " (received), the raw
  /// frame bytes, then a line feed.
  std::string transcript;
};

/// Never throws for protocol-level failures; they are reported through
/// exit_code and error.
SessionReport run_session(FdChannel& ch, const SessionConfig& cfg);

/// Initiator connects to `endpoint`; responder listens on it and serves one
/// connection. `on_listening` receives the bound port (useful with port 0).
SessionReport run_exchange_network(const std::string& endpoint, const SessionConfig& cfg,
                                   std::chrono::milliseconds timeout,
                                   const std::function<void(std::uint16_t)>& on_listening = {});

}  // namespace tropkex
