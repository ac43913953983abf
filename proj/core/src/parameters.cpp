#include "krein/parameters.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "krein/error.hpp"

namespace krein {
namespace {

constexpr int kFullCheckLimit = 64;
constexpr int kSamplesPerClass = 32;

std::string triple(int i, int j, int k) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) + ")";
}

}  // namespace

IntersectionTensor intersection_numbers(const AssociationScheme& s) {
  const int n = s.n();
  const int classes = s.num_classes();
  const std::size_t table = static_cast<std::size_t>(classes) * classes;

  std::vector<std::vector<std::pair<int, int>>> pairs(classes);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) pairs[s.relation(x, y)].emplace_back(x, y);

  auto count = [&](int x, int y) {
    std::vector<std::int64_t> c(table, 0);
    for (int z = 0; z < n; ++z) ++c[s.relation(x, z) * classes + s.relation(z, y)];
    return c;
  };

  IntersectionTensor out{Tensor3<std::int64_t>(classes, 0)};
  for (int k = 0; k < classes; ++k) {
    if (pairs[k].empty()) throw AxiomViolation("intersection numbers: class " + std::to_string(k) + " is empty");
    const auto [x0, y0] = pairs[k].front();
    const auto ref = count(x0, y0);
    for (int i = 0; i < classes; ++i)
      for (int j = 0; j < classes; ++j) out.p(i, j, k) = ref[i * classes + j];

    const std::size_t total = pairs[k].size();
    const std::size_t stride =
        n <= kFullCheckLimit ? 1 : std::max<std::size_t>(1, total / kSamplesPerClass);
    for (std::size_t t = stride; t < total; t += stride) {
      const auto [x, y] = pairs[k][t];
      if (count(x, y) != ref) {
        throw AxiomViolation("intersection numbers: path counts for pair (" + std::to_string(x) +
                             ", " + std::to_string(y) + ") differ from the representative (" +
                             std::to_string(x0) + ", " + std::to_string(y0) + ") of class " +
                             std::to_string(k));
      }
    }
  }
  return out;
}

std::int64_t intersection_identity_residual(const AssociationScheme& s,
                                            const IntersectionTensor& t) {
  const int classes = s.num_classes();
  if (t.p.size() != classes) throw ShapeError("intersection tensor size does not match scheme");
  std::vector<IntMatrix> a;
  for (int j = 0; j < classes; ++j) a.push_back(s.adjacency(j));
  std::int64_t worst = 0;
  for (int i = 0; i < classes; ++i)
    for (int j = 0; j < classes; ++j) {
      IntMatrix diff = a[i] * a[j];
      for (int k = 0; k < classes; ++k) diff -= t.p(i, j, k) * a[k];
      worst = std::max(worst, diff.cwiseAbs().maxCoeff());
    }
  return worst;
}

KreinTensor krein_parameters(const BoseMesnerDecomposition& dec) {
  const int n = dec.n();
  const int classes = static_cast<int>(dec.idempotents.size());
  KreinTensor out{Tensor3<double>(classes, 0.0), kKreinTolerance};
  for (int i = 0; i < classes; ++i) {
    for (int j = i; j < classes; ++j) {
      const CMatrix prod = schur(dec.idempotents[i], dec.idempotents[j]);
      for (int k = 0; k < classes; ++k) {
        // tr(M E_k) = sum_xy M(x,y) E_k(y,x)
        const Complex tr = prod.cwiseProduct(dec.idempotents[k].transpose()).sum();
        const double q = static_cast<double>(n) / dec.multiplicities[k] * tr.real();
        out.q(i, j, k) = q;
        out.q(j, i, k) = q;
      }
    }
  }
  const auto bad = check_krein_condition(out);
  if (!bad.empty()) {
    const auto& t = bad.front();
    throw CertificationError("krein: q" + triple(t[0], t[1], t[2]) + " = " +
                             std::to_string(out.q(t[0], t[1], t[2])) +
                             " violates the Krein condition");
  }
  return out;
}

std::vector<std::array<int, 3>> check_krein_condition(const KreinTensor& q) {
  std::vector<std::array<int, 3>> bad;
  const int s = q.q.size();
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      for (int k = 0; k < s; ++k)
        if (q.q(i, j, k) < -q.tolerance_used) bad.push_back({i, j, k});
  return bad;
}

double krein_identity_residual(const BoseMesnerDecomposition& dec, const KreinTensor& q) {
  const int n = dec.n();
  const int classes = static_cast<int>(dec.idempotents.size());
  double worst = 0.0;
  for (int i = 0; i < classes; ++i)
    for (int j = 0; j < classes; ++j) {
      CMatrix diff = schur(dec.idempotents[i], dec.idempotents[j]);
      for (int k = 0; k < classes; ++k) diff -= (q.q(i, j, k) / n) * dec.idempotents[k];
      worst = std::max(worst, max_abs(diff));
    }
  return worst;
}

double krein_trace_residual(const BoseMesnerDecomposition& dec, const KreinTensor& q) {
  const int classes = static_cast<int>(dec.multiplicities.size());
  double worst = 0.0;
  for (int i = 0; i < classes; ++i)
    for (int j = 0; j < classes; ++j) {
      double sum = 0.0;
      for (int k = 0; k < classes; ++k) sum += dec.multiplicities[k] * q.q(i, j, k);
      worst = std::max(worst, std::abs(sum - static_cast<double>(dec.multiplicities[i]) *
                                                 dec.multiplicities[j]));
    }
  return worst;
}

}  // namespace krein
