#pragma once

/**
 * Canonical text form of a matrix:
 *
 *   TROPMAT 1 <k>\n
 *   <k lines of k space-separated tokens>\n
 *
 * A token is a decimal integer without leading zeros or "+" ("-0" is not
 * allowed) or "inf" for epsilon. There is exactly one canonical text per
 * matrix, so fingerprints computed on either side of an exchange agree.
 */

#include <cstdint>
#include <string>
#include <string_view>

#include "tropkex/matrix.hpp"

namespace tropkex {

std::string encode_matrix(const TropMatrix& x);

/// Throws ParseError (line/column) on any deviation from the canonical form.
TropMatrix decode_matrix(std::string_view text);

/// 64-bit FNV-1a. Not a MAC: it only confirms both sides hold the same bytes.
std::uint64_t fnv1a(std::string_view bytes);

/// FNV-1a of encode_matrix(k).
std::uint64_t fingerprint(const TropMatrix& k);

/// 16 lowercase hex digits.
std::string to_hex(std::uint64_t v);
/// Inverse of to_hex; throws InputError unless given exactly 16 lowercase hex digits.
std::uint64_t from_hex(std::string_view s);

}  // namespace tropkex
