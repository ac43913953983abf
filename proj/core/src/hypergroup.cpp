#include "krein/hypergroup.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "krein/error.hpp"

namespace krein {
namespace {

constexpr double kClampFloor = -1e-8;
constexpr double kSliceTol = 1e-8;
constexpr double kDistributionTol = 1e-10;

void require_size(const Distribution& p, int size, const char* what) {
  if (static_cast<int>(p.size()) != size) {
    throw ShapeError(std::string(what) + ": expected " + std::to_string(size) + " entries, got " +
                     std::to_string(p.size()));
  }
}

}  // namespace

Hypergroup hypergroup_from(const BoseMesnerDecomposition& dec, const KreinTensor& q) {
  const int size = static_cast<int>(dec.multiplicities.size());
  if (q.q.size() != size) throw ShapeError("hypergroup: Krein tensor does not match decomposition");
  const double n = static_cast<double>(dec.n());
  const auto& m = dec.multiplicities;

  Hypergroup h{Tensor3<double>(size, 0.0), m, {}};
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      double sum = 0.0;
      for (int k = 0; k < size; ++k) {
        double w = static_cast<double>(m[k]) / (static_cast<double>(m[i]) * m[j]) * q.q(i, j, k);
        if (w < kClampFloor) {
          throw NumericalError("hypergroup: weight (e_" + std::to_string(i) + " * e_" +
                               std::to_string(j) + ")(" + std::to_string(k) + ") = " +
                               std::to_string(w) + " is negative");
        }
        if (w < 0.0) w = 0.0;
        if (i == 0 || j == 0) {
          // e_0 is the unit; snap float noise so the identity law holds exactly
          const double unit = k == i + j ? 1.0 : 0.0;
          if (std::abs(w - unit) > kSliceTol) {
            throw NumericalError("hypergroup: e_0 is not a unit at slice (" + std::to_string(i) +
                                 ", " + std::to_string(j) + ")");
          }
          w = unit;
        }
        h.convolution(i, j, k) = w;
        sum += w;
      }
      if (std::abs(sum - 1.0) > kSliceTol) {
        throw NumericalError("hypergroup: slice (" + std::to_string(i) + ", " + std::to_string(j) +
                             ") sums to " + std::to_string(sum));
      }
    }
  }
  for (int j = 0; j < size; ++j) h.normalized_idempotents.push_back((n / m[j]) * dec.idempotents[j]);
  return h;
}

double hypergroup_consistency_residual(const Hypergroup& h) {
  const int size = h.size();
  double worst = 0.0;
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) {
      CMatrix diff = h.normalized_idempotents[i].cwiseProduct(h.normalized_idempotents[j]);
      for (int k = 0; k < size; ++k) diff -= h.convolution(i, j, k) * h.normalized_idempotents[k];
      worst = std::max(worst, max_abs(diff));
    }
  return worst;
}

Distribution convolve(const Hypergroup& h, const Distribution& mu, const Distribution& nu) {
  const int size = h.size();
  require_size(mu, size, "convolve");
  require_size(nu, size, "convolve");
  require_distribution(mu, kDistributionTol, "convolve: mu");
  require_distribution(nu, kDistributionTol, "convolve: nu");
  Distribution out(size, 0.0);
  for (int i = 0; i < size; ++i) {
    if (mu[i] == 0.0) continue;
    for (int j = 0; j < size; ++j) {
      const double w = mu[i] * nu[j];
      if (w == 0.0) continue;
      for (int k = 0; k < size; ++k) out[k] += w * h.convolution(i, j, k);
    }
  }
  return out;
}

Coin Coin::index(int i, int size) {
  if (i < 0 || i >= size) {
    throw ValidationError("coin index " + std::to_string(i) + " outside 0.." +
                          std::to_string(size - 1));
  }
  Distribution w(size, 0.0);
  w[i] = 1.0;
  return Coin{std::move(w)};
}

RMatrix classical_chain(const Hypergroup& h, const Coin& coin) {
  const int size = h.size();
  require_size(coin.weights, size, "coin");
  require_distribution(coin.weights, kDistributionTol, "coin");
  RMatrix t = RMatrix::Zero(size, size);
  for (int i = 0; i < size; ++i) {
    const double c = coin.weights[i];
    if (c == 0.0) continue;
    for (int j = 0; j < size; ++j)
      for (int k = 0; k < size; ++k) t(k, j) += c * h.convolution(i, j, k);
  }
  return t;
}

std::vector<Distribution> walk(const Hypergroup& h, const Coin& coin, const Distribution& start,
                               int steps) {
  if (steps < 0) throw ParameterError("walk: steps must be >= 0");
  require_size(start, h.size(), "walk start");
  require_distribution(start, kDistributionTol, "walk start");
  const RMatrix t = classical_chain(h, coin);
  std::vector<Distribution> out{start};
  out.reserve(static_cast<std::size_t>(steps) + 1);
  RVector state = Eigen::Map<const RVector>(start.data(), static_cast<Eigen::Index>(start.size()));
  for (int s = 0; s < steps; ++s) {
    state = t * state;
    out.emplace_back(state.data(), state.data() + state.size());
  }
  return out;
}

Distribution plancherel(const Hypergroup& h) {
  const double n = std::accumulate(h.multiplicities.begin(), h.multiplicities.end(), 0.0);
  Distribution p;
  for (int m : h.multiplicities) p.push_back(m / n);
  return p;
}

}  // namespace krein
