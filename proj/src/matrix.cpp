#include "tropkex/matrix.hpp"

#include <ostream>

#include "tropkex/errors.hpp"
#include "tropkex/power.hpp"

namespace tropkex {

namespace {

void require_same_size(const TropMatrix& x, const TropMatrix& y) {
  if (x.size() != y.size()) {
    throw InputError("matrix size mismatch: " + std::to_string(x.size()) +
                     " vs " + std::to_string(y.size()));
  }
}

}  // namespace

TropMatrix::TropMatrix(std::size_t k) : k_(k), entries_(k * k) {
  if (k == 0) throw InputError("matrix side must be at least 1");
}

TropMatrix::TropMatrix(std::initializer_list<std::initializer_list<ExtVal>> rows)
    : TropMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != k_) throw InputError("matrix rows must form a square grid");
    std::size_t j = 0;
    for (const auto& v : row) (*this)(i, j++) = v;
    ++i;
  }
}

bool TropMatrix::all_finite() const {
  for (const auto& v : entries_) {
    if (v.is_infinity()) return false;
  }
  return true;
}

TropMatrix identity(std::size_t k) { return scalar_matrix(k, ExtVal(0)); }

TropMatrix diagonal(std::span<const ExtVal> d) {
  TropMatrix out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out(i, i) = d[i];
  return out;
}

TropMatrix scalar_matrix(std::size_t k, const ExtVal& lambda) {
  TropMatrix out(k);
  for (std::size_t i = 0; i < k; ++i) out(i, i) = lambda;
  return out;
}

TropMatrix transpose(const TropMatrix& x) {
  TropMatrix out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) out(j, i) = x(i, j);
  }
  return out;
}

TropMatrix add(const TropMatrix& x, const TropMatrix& y) {
  require_same_size(x, y);
  TropMatrix out = x;
  auto dst = out.entries();
  auto src = y.entries();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i].min_assign(src[i]);
  return out;
}

TropMatrix mul(const TropMatrix& x, const TropMatrix& y) {
  require_same_size(x, y);
  const std::size_t k = x.size();
  TropMatrix out(k);
  ExtVal tmp;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      const ExtVal& xil = x(i, l);
      if (xil.is_infinity()) continue;
      for (std::size_t j = 0; j < k; ++j) {
        tmp.assign_sum(xil, y(l, j));
        out(i, j).take_min(tmp);
      }
    }
  }
  return out;
}

TropMatrix scalar_mul(const ExtVal& lambda, const TropMatrix& x) {
  TropMatrix out(x.size());
  auto src = x.entries();
  auto dst = out.entries();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i].assign_sum(lambda, src[i]);
  return out;
}

TropMatrix adjoint(const TropMatrix& x, const TropMatrix& y) {
  TropMatrix out = mul(x, y);
  auto dst = out.entries();
  auto xs = x.entries();
  auto ys = y.entries();
  for (std::size_t i = 0; i < dst.size(); ++i) {
    dst[i].min_assign(xs[i]);
    dst[i].min_assign(ys[i]);
  }
  return out;
}

std::optional<PermDiag> is_invertible(const TropMatrix& x) {
  const std::size_t k = x.size();
  PermDiag pd{std::vector<std::size_t>(k), std::vector<ExtVal>(k)};
  std::vector<bool> column_used(k, false);
  for (std::size_t i = 0; i < k; ++i) {
    bool found = false;
    for (std::size_t j = 0; j < k; ++j) {
      if (x(i, j).is_infinity()) continue;
      if (found || column_used[j]) return std::nullopt;
      found = true;
      column_used[j] = true;
      pd.perm[i] = j;
      pd.diag[i] = x(i, j);
    }
    if (!found) return std::nullopt;
  }
  return pd;
}

TropMatrix to_matrix(const PermDiag& pd) {
  TropMatrix out(pd.perm.size());
  for (std::size_t i = 0; i < pd.perm.size(); ++i) out(i, pd.perm[i]) = pd.diag[i];
  return out;
}

TropMatrix inverse(const TropMatrix& x) {
  auto pd = is_invertible(x);
  if (!pd) throw NotInvertibleError("matrix is not a permuted diagonal");
  TropMatrix out(x.size());
  for (std::size_t i = 0; i < pd->perm.size(); ++i) {
    out(pd->perm[i], i) = ExtVal(BigInt(-pd->diag[i].value()));
  }
  return out;
}

TropMatrix conjugate(const TropMatrix& d, const TropMatrix& x) {
  require_same_size(d, x);
  return mul(mul(inverse(d), x), d);
}

TropMatrix mul_power(const TropMatrix& h, const BigInt& n) {
  return power(h, n, [](const TropMatrix& a, const TropMatrix& b) { return mul(a, b); });
}

TropMatrix adjoint_power(const TropMatrix& h, const BigInt& n) {
  return power(h, n,
               [](const TropMatrix& a, const TropMatrix& b) { return adjoint(a, b); });
}

std::vector<ExtVal> mat_vec(const TropMatrix& x, std::span<const ExtVal> v) {
  if (v.size() != x.size()) throw InputError("vector length does not match matrix side");
  std::vector<ExtVal> out(v.size());
  ExtVal tmp;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      tmp.assign_sum(x(i, j), v[j]);
      out[i].take_min(tmp);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const TropMatrix& x) {
  os << '[';
  for (std::size_t i = 0; i < x.size(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < x.size(); ++j) os << (j ? "," : "") << x(i, j);
    os << ']';
  }
  return os << ']';
}

}  // namespace tropkex
