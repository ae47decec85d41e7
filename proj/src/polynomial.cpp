#include "tropkex/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "tropkex/errors.hpp"

namespace tropkex {

std::uint64_t TropMonomial::degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), std::uint64_t{0});
}

bool deglex_before(const TropMonomial& a, const TropMonomial& b) {
  auto da = a.degree();
  auto db = b.degree();
  if (da != db) return da > db;
  return std::lexicographical_compare(b.exponents.begin(), b.exponents.end(),
                                      a.exponents.begin(), a.exponents.end());
}

TropPolynomial canonicalize(std::vector<TropMonomial> raw) {
  TropPolynomial p;
  if (raw.empty()) return p;
  const std::size_t vars = raw.front().exponents.size();
  for (const auto& m : raw) {
    if (m.exponents.size() != vars) {
      throw InputError("monomials disagree on the number of variables");
    }
  }
  std::stable_sort(raw.begin(), raw.end(), deglex_before);
  for (auto& m : raw) {
    if (!p.monomials_.empty() && p.monomials_.back().exponents == m.exponents) {
      p.monomials_.back().coefficient.min_assign(m.coefficient);
    } else {
      p.monomials_.push_back(std::move(m));
    }
  }
  std::erase_if(p.monomials_,
                [](const TropMonomial& m) { return m.coefficient.is_infinity(); });
  p.variables_ = vars;
  return p;
}

std::uint64_t degree(const TropPolynomial& p) {
  if (p.empty()) throw UndefinedDegreeError("degree of the empty polynomial");
  std::uint64_t d = 0;
  for (const auto& m : p.monomials()) d = std::max(d, m.degree());
  return d;
}

ExtVal evaluate(const TropMonomial& m, std::span<const ExtVal> point) {
  if (point.size() != m.exponents.size()) {
    throw InputError("point dimension does not match the variable count");
  }
  ExtVal acc = m.coefficient;
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (m.exponents[i] == 0) continue;  // x^0 is the (x)-identity, even for epsilon
    if (point[i].is_infinity()) return ExtVal::infinity();
    acc = mul(acc, ExtVal(BigInt(point[i].value() * m.exponents[i])));
  }
  return acc;
}

ExtVal evaluate(const TropPolynomial& p, std::span<const ExtVal> point) {
  if (!p.empty() && point.size() != p.variable_count()) {
    throw InputError("point dimension does not match the variable count");
  }
  ExtVal best;
  for (const auto& m : p.monomials()) best.min_assign(evaluate(m, point));
  return best;
}

}  // namespace tropkex
