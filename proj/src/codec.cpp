#include "tropkex/codec.hpp"

#include <charconv>

#include "tropkex/errors.hpp"

namespace tropkex {

namespace {

constexpr std::string_view kMagic = "TROPMAT 1 ";
constexpr std::size_t kMaxSide = 1u << 16;

bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, column_, what); }

  bool at_end() const { return pos_ == text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n; ++i) {
      if (text_[pos_++] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
    }
  }

  void expect(char c, const char* what) {
    if (peek() != c || at_end()) fail(what);
    advance();
  }

  /// Maximal run of non-separator bytes.
  std::string_view token() const {
    std::size_t end = pos_;
    while (end < text_.size() && text_[end] != ' ' && text_[end] != '\n') ++end;
    return text_.substr(pos_, end - pos_);
  }

  std::string_view rest() const { return text_.substr(pos_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

bool canonical_integer(std::string_view tok) {
  std::string_view digits = tok;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty()) return false;
  for (char c : digits) {
    if (!is_digit(c)) return false;
  }
  if (digits.size() > 1 && digits.front() == '0') return false;
  if (digits == "0" && tok.front() == '-') return false;
  return true;
}

}  // namespace

std::string encode_matrix(const TropMatrix& x) {
  std::string out = std::string(kMagic) + std::to_string(x.size()) + "\n";
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (j) out += ' ';
      out += x(i, j).to_string();
    }
    out += '\n';
  }
  return out;
}

TropMatrix decode_matrix(std::string_view text) {
  Cursor cur(text);
  if (cur.rest().substr(0, kMagic.size()) != kMagic) cur.fail("expected header 'TROPMAT 1 <k>'");
  cur.advance(kMagic.size());
  const std::string_view side = cur.token();
  std::size_t k = 0;
  auto [ptr, ec] = std::from_chars(side.data(), side.data() + side.size(), k);
  if (side.empty() || ec != std::errc() || ptr != side.data() + side.size() ||
      (side.size() > 1 && side.front() == '0') || k == 0 || k > kMaxSide) {
    cur.fail("bad matrix side '" + std::string(side) + "'");
  }
  cur.advance(side.size());
  cur.expect('\n', "expected end of header line");

  TropMatrix out(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (j > 0) {
        if (cur.peek() == '\n' || cur.at_end()) {
          cur.fail("row " + std::to_string(i + 1) + " has " + std::to_string(j) +
                   " tokens, expected " + std::to_string(k));
        }
        cur.expect(' ', "expected single space between tokens");
      }
      const std::string_view tok = cur.token();
      if (tok.empty()) cur.fail(cur.at_end() ? "unexpected end of input" : "empty token");
      if (tok == "inf") {
        out(i, j) = ExtVal::infinity();
      } else if (canonical_integer(tok)) {
        out(i, j) = ExtVal(BigInt(std::string(tok), 10));
      } else {
        cur.fail("bad token '" + std::string(tok) + "'");
      }
      cur.advance(tok.size());
    }
    if (cur.peek() == ' ') cur.fail("row " + std::to_string(i + 1) + " has extra tokens or trailing space");
    cur.expect('\n', "expected line feed at end of row");
  }
  if (!cur.at_end()) cur.fail("trailing data after matrix");
  return out;
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t fingerprint(const TropMatrix& k) { return fnv1a(encode_matrix(k)); }

std::string to_hex(std::uint64_t v) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kDigits[v & 0xf];
    v >>= 4;
  }
  return out;
}

std::uint64_t from_hex(std::string_view s) {
  if (s.size() != 16) throw InputError("fingerprint must be 16 hex digits");
  std::uint64_t v = 0;
  for (char c : s) {
    v <<= 4;
    if (is_digit(c)) {
      v |= static_cast<std::uint64_t>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      v |= static_cast<std::uint64_t>(c - 'a' + 10);
    } else {
      throw InputError("fingerprint must be lowercase hex");
    }
  }
  return v;
}

}  // namespace tropkex
