#include "tropkex/ext_val.hpp"

#include <ostream>

#include "tropkex/errors.hpp"

namespace tropkex {

ExtVal::ExtVal(long long v) : finite_(true) {
  // mpz_class has no long long constructor on LP64 glibc builds.
  value_ = static_cast<long>(v);
}

const BigInt& ExtVal::value() const {
  if (!finite_) throw InputError("epsilon has no finite value");
  return value_;
}

std::string ExtVal::to_string() const {
  return finite_ ? value_.get_str() : std::string("inf");
}

bool operator==(const ExtVal& a, const ExtVal& b) {
  if (a.finite_ != b.finite_) return false;
  return !a.finite_ || cmp(a.value_, b.value_) == 0;
}

std::strong_ordering operator<=>(const ExtVal& a, const ExtVal& b) {
  if (!a.finite_ || !b.finite_) return b.finite_ <=> a.finite_;
  int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater
                        : std::strong_ordering::equal);
}

void ExtVal::assign_sum(const ExtVal& a, const ExtVal& b) {
  if (!a.finite_ || !b.finite_) {
    finite_ = false;
    return;
  }
  mpz_add(value_.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
  finite_ = true;
}

void ExtVal::take_min(ExtVal& candidate) {
  if (!candidate.finite_) return;
  if (!finite_ || mpz_cmp(candidate.value_.get_mpz_t(), value_.get_mpz_t()) < 0) {
    mpz_swap(value_.get_mpz_t(), candidate.value_.get_mpz_t());
    std::swap(finite_, candidate.finite_);
  }
}

void ExtVal::min_assign(const ExtVal& other) {
  if (!other.finite_) return;
  if (!finite_ || mpz_cmp(other.value_.get_mpz_t(), value_.get_mpz_t()) < 0) {
    value_ = other.value_;
    finite_ = true;
  }
}

ExtVal add(const ExtVal& a, const ExtVal& b) { return a <= b ? a : b; }

ExtVal mul(const ExtVal& a, const ExtVal& b) {
  ExtVal r;
  r.assign_sum(a, b);
  return r;
}

ExtVal adjoint(const ExtVal& a, const ExtVal& b) {
  return add(add(a, b), mul(a, b));
}

std::ostream& operator<<(std::ostream& os, const ExtVal& v) {
  return os << v.to_string();
}

}  // namespace tropkex
