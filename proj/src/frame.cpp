#include "tropkex/frame.hpp"

#include <array>
#include <charconv>
#include <vector>

#include "tropkex/codec.hpp"

namespace tropkex {

namespace {

constexpr std::array<std::pair<FrameType, std::string_view>, 5> kTypes{{
    {FrameType::hello, "HELLO"},
    {FrameType::params, "PARAMS"},
    {FrameType::pub, "PUB"},
    {FrameType::fin, "FIN"},
    {FrameType::err, "ERR"},
}};

[[noreturn]] void bad_payload(const std::string& what) {
  throw FrameError(FrameErrc::bad_payload, what);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

// Canonical decimal: no sign for unsigned, no leading zeros, no "-0".
template <typename Int>
std::optional<Int> parse_canonical(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::string_view digits = s.front() == '-' ? s.substr(1) : s;
  if (digits.empty() || (digits.size() > 1 && digits.front() == '0')) return std::nullopt;
  if (s.front() == '-' && digits == "0") return std::nullopt;
  Int v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

template <typename Int>
Int field(std::string_view token, std::string_view name) {
  if (token.substr(0, name.size()) != name || token.size() <= name.size() ||
      token[name.size()] != '=') {
    bad_payload("expected field '" + std::string(name) + "='");
  }
  auto v = parse_canonical<Int>(token.substr(name.size() + 1));
  if (!v) bad_payload("bad value for '" + std::string(name) + "'");
  return *v;
}

}  // namespace

std::string_view to_string(FrameType t) {
  for (const auto& [type, name] : kTypes) {
    if (type == t) return name;
  }
  return "?";
}

std::string_view to_string(FrameErrc c) {
  switch (c) {
    case FrameErrc::bad_header: return "bad header";
    case FrameErrc::unknown_type: return "unknown frame type";
    case FrameErrc::bad_length: return "bad length";
    case FrameErrc::too_large: return "frame too large";
    case FrameErrc::truncated: return "truncated frame";
    case FrameErrc::trailing_data: return "trailing data";
    case FrameErrc::bad_payload: return "bad payload";
  }
  return "?";
}

std::string_view to_string(Role r) {
  return r == Role::initiator ? "initiator" : "responder";
}

std::string encode_frame(const Frame& f) {
  std::string out = "MSG ";
  out += to_string(f.type);
  out += ' ';
  out += std::to_string(f.payload.size());
  out += '\n';
  out += f.payload;
  return out;
}

FrameHeader parse_header(std::string_view line) {
  const auto parts = split(line, ' ');
  if (parts.size() != 3 || parts[0] != "MSG") {
    throw FrameError(FrameErrc::bad_header, "expected 'MSG <type> <count>'");
  }
  std::optional<FrameType> type;
  for (const auto& [t, name] : kTypes) {
    if (parts[1] == name) type = t;
  }
  if (!type) throw FrameError(FrameErrc::unknown_type, std::string(parts[1].substr(0, 16)));
  if (parts[2].empty() || parts[2].front() == '-') {
    throw FrameError(FrameErrc::bad_length, "payload count is not decimal");
  }
  auto len = parse_canonical<std::size_t>(parts[2]);
  if (!len) {
    const bool all_digits = parts[2].find_first_not_of("0123456789") == std::string_view::npos;
    throw FrameError(all_digits && parts[2].front() != '0' ? FrameErrc::too_large
                                                           : FrameErrc::bad_length,
                     "payload count");
  }
  if (*len > kMaxPayloadBytes) throw FrameError(FrameErrc::too_large, "payload count");
  return {*type, *len};
}

Frame decode_frame_prefix(std::string_view bytes, std::size_t& consumed) {
  const std::size_t nl = bytes.substr(0, kMaxHeaderBytes + 1).find('\n');
  if (nl == std::string_view::npos) {
    if (bytes.size() > kMaxHeaderBytes) {
      throw FrameError(FrameErrc::bad_header, "header line too long");
    }
    // Reject early when what we have can never start a header.
    if (bytes.substr(0, 4) != std::string_view("MSG ").substr(0, std::min<std::size_t>(4, bytes.size()))) {
      throw FrameError(FrameErrc::bad_header, "expected 'MSG <type> <count>'");
    }
    throw FrameError(FrameErrc::truncated, "header incomplete");
  }
  const FrameHeader h = parse_header(bytes.substr(0, nl));
  if (bytes.size() - nl - 1 < h.length) {
    throw FrameError(FrameErrc::truncated, "payload has " +
                                               std::to_string(bytes.size() - nl - 1) +
                                               " of " + std::to_string(h.length) + " bytes");
  }
  consumed = nl + 1 + h.length;
  return {h.type, std::string(bytes.substr(nl + 1, h.length))};
}

Frame decode_frame(std::string_view bytes) {
  std::size_t consumed = 0;
  Frame f = decode_frame_prefix(bytes, consumed);
  if (consumed != bytes.size()) {
    throw FrameError(FrameErrc::trailing_data,
                     std::to_string(bytes.size() - consumed) + " bytes after frame");
  }
  return f;
}

std::string encode_hello(const Hello& h) {
  return "TROPKEX " + std::to_string(h.version) + " " + std::string(to_string(h.role));
}

Hello decode_hello(std::string_view payload) {
  const auto parts = split(payload, ' ');
  if (parts.size() != 3 || parts[0] != "TROPKEX") bad_payload("expected 'TROPKEX <version> <role>'");
  auto version = parse_canonical<int>(parts[1]);
  if (!version) bad_payload("bad version");
  Role role;
  if (parts[2] == "initiator") {
    role = Role::initiator;
  } else if (parts[2] == "responder") {
    role = Role::responder;
  } else {
    bad_payload("bad role");
  }
  return {*version, role};
}

std::string encode_params(const ParamsMessage& p) {
  std::string out = "scheme=" + std::to_string(static_cast<int>(p.spec.scheme)) +
                    " k=" + std::to_string(p.spec.k) + " lo=" + std::to_string(p.spec.lo) +
                    " hi=" + std::to_string(p.spec.hi) + " seed=" + std::to_string(p.seed) +
                    " expbits=" + std::to_string(p.spec.exp_bits);
  if (p.explicit_m && p.explicit_h) {
    out += " mode=explicit\n";
    out += encode_matrix(*p.explicit_m);
    out += encode_matrix(*p.explicit_h);
  }
  return out;
}

ParamsMessage decode_params(std::string_view payload) {
  const std::size_t nl = payload.find('\n');
  const std::string_view line = payload.substr(0, nl);
  const auto parts = split(line, ' ');
  const bool explicit_mode = parts.size() == 7;
  if (parts.size() != 6 && !explicit_mode) bad_payload("PARAMS needs six fields");
  if (explicit_mode != (nl != std::string_view::npos)) bad_payload("malformed explicit mode");
  if (explicit_mode && parts[6] != "mode=explicit") bad_payload("unknown PARAMS extension");

  ParamsMessage p;
  const int scheme = field<int>(parts[0], "scheme");
  if (scheme != 1 && scheme != 2) bad_payload("scheme must be 1 or 2");
  p.spec.scheme = static_cast<Scheme>(scheme);
  p.spec.k = field<std::size_t>(parts[1], "k");
  p.spec.lo = field<std::int64_t>(parts[2], "lo");
  p.spec.hi = field<std::int64_t>(parts[3], "hi");
  p.seed = field<std::uint64_t>(parts[4], "seed");
  p.spec.exp_bits = field<unsigned>(parts[5], "expbits");
  if (p.spec.k > 4096 || p.spec.exp_bits > (1u << 20)) bad_payload("parameters out of range");
  try {
    p.spec.validate();
  } catch (const InputError& e) {
    bad_payload(e.what());
  }

  if (explicit_mode) {
    // M's text is the header plus k rows; H follows immediately.
    std::string_view body = payload.substr(nl + 1);
    std::size_t split_at = 0;
    for (std::size_t lines = 0; lines < p.spec.k + 1; ++lines) {
      const std::size_t next = body.find('\n', split_at);
      if (next == std::string_view::npos) bad_payload("explicit matrices truncated");
      split_at = next + 1;
    }
    try {
      p.explicit_m = decode_matrix(body.substr(0, split_at));
      p.explicit_h = decode_matrix(body.substr(split_at));
    } catch (const ParseError& e) {
      bad_payload(std::string("explicit matrix: ") + e.what());
    }
    if (p.explicit_m->size() != p.spec.k || p.explicit_h->size() != p.spec.k) {
      bad_payload("explicit matrix side differs from k");
    }
  }
  return p;
}

std::string encode_fin(std::uint64_t fingerprint) { return to_hex(fingerprint); }

std::uint64_t decode_fin(std::string_view payload) {
  try {
    return from_hex(payload);
  } catch (const InputError& e) {
    bad_payload(e.what());
  }
}

}  // namespace tropkex
