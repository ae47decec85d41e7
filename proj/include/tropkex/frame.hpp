#pragma once

/**
 * Wire frames for the two-party exchange:
 *
 *   MSG <type> <payload-byte-count>\n<payload>
 *
 * type is one of HELLO, PARAMS, PUB, FIN, ERR; the count is decimal without
 * leading zeros. Payloads:
 *
 *   HELLO   TROPKEX 1 <initiator|responder>
 *   PARAMS  scheme=<1|2> k=<k> lo=<lo> hi=<hi> seed=<u64> expbits=<b>
 *           (explicit-matrix mode appends " mode=explicit\n" followed by the
 *           canonical texts of M and H)
 *   PUB     canonical matrix text
 *   FIN     16 lowercase hex digits (key fingerprint)
 *   ERR     free text reason
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "tropkex/errors.hpp"
#include "tropkex/protocol.hpp"

namespace tropkex {

enum class FrameType { hello, params, pub, fin, err };

std::string_view to_string(FrameType t);

struct Frame {
  FrameType type;
  std::string payload;

  friend bool operator==(const Frame&, const Frame&) = default;
};

enum class FrameErrc {
  bad_header,     // header line is not "MSG <type> <count>"
  unknown_type,
  bad_length,     // count is not canonical decimal
  too_large,
  truncated,      // input ends before the header or payload is complete
  trailing_data,  // bytes after a complete frame
  bad_payload,    // payload does not match its type's grammar
};

std::string_view to_string(FrameErrc c);

class FrameError : public Error {
 public:
  FrameError(FrameErrc code, const std::string& detail)
      : Error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  FrameErrc code() const noexcept { return code_; }

 private:
  FrameErrc code_;
};

inline constexpr std::size_t kMaxHeaderBytes = 32;
inline constexpr std::size_t kMaxPayloadBytes = 16u << 20;

std::string encode_frame(const Frame& f);

struct FrameHeader {
  FrameType type;
  std::size_t length;
};

/// `line` excludes the trailing line feed.
FrameHeader parse_header(std::string_view line);

/// Decodes one frame from the front of `bytes`; sets `consumed`.
Frame decode_frame_prefix(std::string_view bytes, std::size_t& consumed);

/// `bytes` must hold exactly one frame.
Frame decode_frame(std::string_view bytes);

enum class Role { initiator, responder };

std::string_view to_string(Role r);

struct Hello {
  int version;
  Role role;
};

std::string encode_hello(const Hello& h);
/// Any integer version parses; the session decides whether it is supported.
Hello decode_hello(std::string_view payload);

struct ParamsMessage {
  ParamSpec spec;
  std::uint64_t seed = 0;
  std::optional<TropMatrix> explicit_m;
  std::optional<TropMatrix> explicit_h;
};

std::string encode_params(const ParamsMessage& p);
ParamsMessage decode_params(std::string_view payload);

std::string encode_fin(std::uint64_t fingerprint);
std::uint64_t decode_fin(std::string_view payload);

}  // namespace tropkex
