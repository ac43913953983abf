#include "krein/galois_field.hpp"

#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "krein/error.hpp"

namespace krein {
namespace {

struct FieldSpec {
  int q;
  int p;
  int k;
  // Primitive polynomial x^k = sum_i tail[i] x^i over GF(p), i < k.
  std::vector<int> tail;
};

const FieldSpec* find_spec(int q) {
  static const FieldSpec specs[] = {
      {2, 2, 1, {1}},
      {3, 3, 1, {2}},        // generator 2
      {4, 2, 2, {1, 1}},     // x^2 = x + 1
      {5, 5, 1, {2}},        // generator 2
      {7, 7, 1, {3}},        // generator 3
      {8, 2, 3, {1, 1, 0}},  // x^3 = x + 1
      {9, 3, 2, {1, 1}},     // x^2 = x + 1 (x^2 - x - 1, primitive over GF(3))
  };
  for (const auto& s : specs)
    if (s.q == q) return &s;
  return nullptr;
}

std::vector<int> digits(int a, int p, int k) {
  std::vector<int> d(k);
  for (int i = 0; i < k; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

int undigits(const std::vector<int>& d, int p) {
  int a = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) a = a * p + d[i];
  return a;
}

}  // namespace

bool GaloisField::supported(int q) { return find_spec(q) != nullptr; }

GaloisField::GaloisField(int q) : q_(q) {
  const FieldSpec* spec = find_spec(q);
  if (spec == nullptr) {
    throw ParameterError("GF(" + std::to_string(q) +
                         ") is not supported; use q in {2,3,4,5,7,8,9}");
  }
  p_ = spec->p;
  const int k = spec->k;

  add_.resize(q * q);
  neg_.resize(q);
  for (int a = 0; a < q; ++a) {
    const auto da = digits(a, p_, k);
    std::vector<int> dn(k);
    for (int i = 0; i < k; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = undigits(dn, p_);
    for (int b = 0; b < q; ++b) {
      const auto db = digits(b, p_, k);
      std::vector<int> ds(k);
      for (int i = 0; i < k; ++i) ds[i] = (da[i] + db[i]) % p_;
      add_[a * q + b] = undigits(ds, p_);
    }
  }

  // Powers of the generator: for prime fields the residue spec->tail[0];
  // for extensions the class of x modulo the primitive polynomial.
  exp_.assign(2 * (q - 1), 0);
  log_.assign(q, -1);
  std::vector<int> cur(k, 0);
  cur[0] = 1;
  for (int e = 0; e < q - 1; ++e) {
    const int a = undigits(cur, p_);
    if (log_[a] >= 0) throw NumericalError("GF table: generator is not primitive");
    log_[a] = e;
    exp_[e] = exp_[e + q - 1] = a;
    if (k == 1) {
      cur[0] = (cur[0] * spec->tail[0]) % p_;
    } else {
      const int top = cur[k - 1];
      for (int i = k - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      for (int i = 0; i < k; ++i) cur[i] = (cur[i] + top * spec->tail[i]) % p_;
    }
  }
}

int GaloisField::mul(int a, int b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

int GaloisField::inv(int a) const {
  if (a == 0) throw ParameterError("GF: inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

int reduce_row_echelon(const GaloisField& field, std::vector<std::vector<int>>& rows) {
  if (rows.empty()) return 0;
  const int cols = static_cast<int>(rows.front().size());
  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    const int scale = field.inv(rows[rank][c]);
    for (int& x : rows[rank]) x = field.mul(x, scale);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const int f = rows[r][c];
      for (int j = 0; j < cols; ++j) rows[r][j] = field.sub(rows[r][j], field.mul(f, rows[rank][j]));
    }
    ++rank;
  }
  rows.resize(rank);
  return rank;
}

std::uint64_t gaussian_binomial(int q, int v, int d) {
  if (d < 0 || d > v) return 0;
  // [v, i+1]_q = [v, i]_q (q^{v-i} - 1) / (q^{i+1} - 1); every step is exact.
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (int i = 0; i < d; ++i) {
    std::uint64_t num = 1, den = 1;
    for (int t = 0; t < v - i; ++t)
      if (__builtin_mul_overflow(num, static_cast<std::uint64_t>(q), &num)) return cap;
    for (int t = 0; t < i + 1; ++t) den *= static_cast<std::uint64_t>(q);
    num -= 1;
    den -= 1;
    const std::uint64_t g = std::gcd(result, den);
    result /= g;
    den /= g;
    if (__builtin_mul_overflow(result, num / den, &result)) return cap;
  }
  return result;
}

}  // namespace krein
