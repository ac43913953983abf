#include "krein/qmc.hpp"

#include <algorithm>
#include <cmath>
#include <type_traits>
#include <string>

#include "krein/error.hpp"

namespace krein {
namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kStochasticTol = 1e-12;
constexpr double kStateTol = 1e-10;
constexpr double kAbsorbedTrace = 1e-14;

void require_square(const CMatrix& m, Eigen::Index n, const char* what) {
  if (m.rows() != n || m.cols() != n) {
    throw ShapeError(std::string(what) + ": expected " + std::to_string(n) + "x" +
                     std::to_string(n) + ", got " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()));
  }
}

void require_state(const CMatrix& rho) {
  if (rho.rows() != rho.cols() || rho.rows() == 0) throw ShapeError("state must be square");
  if (hermitian_residual(rho) > kStateTol) throw ValidationError("state is not Hermitian");
  if (min_hermitian_eigenvalue(rho) < -kStateTol) throw ValidationError("state is not PSD");
  const Complex tr = rho.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > kStateTol) {
    throw ValidationError("state trace is " + std::to_string(tr.real()) + ", not 1");
  }
}

}  // namespace

SchurChannel::SchurChannel(CMatrix multiplier) : multiplier_(std::move(multiplier)) {
  if (multiplier_.rows() != multiplier_.cols() || multiplier_.rows() == 0) {
    throw ShapeError("schur channel: multiplier must be a non-empty square matrix");
  }
  const double herm = hermitian_residual(multiplier_);
  if (herm > kHermitianTol * std::max(1.0, max_abs(multiplier_))) {
    throw ShapeError("schur channel: multiplier is not Hermitian (residual " +
                     std::to_string(herm) + ")");
  }
}

SchurChannel SchurChannel::from_coin(const Hypergroup& h, const Coin& coin) {
  if (static_cast<int>(coin.weights.size()) != h.size()) throw ShapeError("coin has wrong length");
  require_distribution(coin.weights, 1e-10, "coin");
  const auto n = h.normalized_idempotents.front().rows();
  CMatrix e = CMatrix::Zero(n, n);
  for (int i = 0; i < h.size(); ++i) e += coin.weights[i] * h.normalized_idempotents[i];
  return SchurChannel(std::move(e));
}

CMatrix schur_channel_apply(const SchurChannel& c, const CMatrix& m) {
  require_square(m, c.dim(), "schur channel input");
  return c.multiplier().cwiseProduct(m);
}

CMatrix choi_matrix(const SchurChannel& c) {
  const Eigen::Index n = c.dim();
  CMatrix choi = CMatrix::Zero(n * n, n * n);
  // T(|i><j|) = e(i, j) |i><j|, so the block (i, j) holds e(i, j) at (i, j).
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) choi(i * n + i, j * n + j) = c.multiplier()(i, j);
  return choi;
}

CpReport certify_cp(const SchurChannel& c) {
  CpReport r;
  r.choi_min_eigenvalue = min_hermitian_eigenvalue(choi_matrix(c));
  r.multiplier_min_eigenvalue = min_hermitian_eigenvalue(c.multiplier());
  r.completely_positive = r.choi_min_eigenvalue >= -kPsdTolerance;
  r.multiplier_psd = r.multiplier_min_eigenvalue >= -kPsdTolerance;
  return r;
}

std::pair<RMatrix, double> restrict_to_idempotents(const SchurChannel& c, const Hypergroup& h) {
  const int size = h.size();
  const auto& e = h.normalized_idempotents;
  const double n = static_cast<double>(e.front().rows());
  RMatrix r(size, size);
  double residual = 0.0;
  for (int j = 0; j < size; ++j) {
    const CMatrix image = schur_channel_apply(c, e[j]);
    CMatrix rebuilt = CMatrix::Zero(image.rows(), image.cols());
    for (int k = 0; k < size; ++k) {
      // tr(e_k e_l) = delta_kl n^2 / m_k
      const Complex coeff = image.cwiseProduct(e[k].transpose()).sum() *
                            (static_cast<double>(h.multiplicities[k]) / (n * n));
      r(k, j) = coeff.real();
      rebuilt += coeff * e[k];
    }
    residual = std::max(residual, max_abs(image - rebuilt));
  }
  return {r, residual};
}

RMatrix dilation_unitary(const Distribution& p) {
  require_distribution(p, 1e-12, "dilation");
  const auto d = static_cast<Eigen::Index>(p.size());
  RVector root(d);
  for (Eigen::Index i = 0; i < d; ++i) root(i) = std::sqrt(p[i]);
  RMatrix u(d, d);
  const double denom = 1.0 + root(0);
  for (Eigen::Index j = 0; j < d; ++j) u(0, j) = root(j);
  for (Eigen::Index i = 1; i < d; ++i) {
    u(i, 0) = -root(i);
    for (Eigen::Index j = 1; j < d; ++j) u(i, j) = (i == j ? 1.0 : 0.0) - root(i) * root(j) / denom;
  }
  return u;
}

TransitionExpectation::TransitionExpectation(RMatrix transition)
    : transition_(std::move(transition)) {
  require_stochastic(transition_, Stochastic::kRows, kStochasticTol, "transition expectation");
  const Eigen::Index d = transition_.rows();
  isometry_ = CMatrix::Zero(d * d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) isometry_(i * d + j, i) = std::sqrt(transition_(i, j));
}

TransitionExpectation make_transition_expectation(const RMatrix& p) {
  return TransitionExpectation(p);
}

CMatrix apply_transition_expectation(const TransitionExpectation& te, const CMatrix& m,
                                     const CMatrix& n) {
  require_square(m, te.dim(), "transition expectation M");
  require_square(n, te.dim(), "transition expectation N");
  return te.isometry().adjoint() * kron(m, n) * te.isometry();
}

CMatrix apply_transition_expectation_schur(const TransitionExpectation& te, const CMatrix& m,
                                           const CMatrix& n) {
  require_square(m, te.dim(), "transition expectation M");
  require_square(n, te.dim(), "transition expectation N");
  const CMatrix root = te.transition().cwiseSqrt().cast<Complex>();
  const CMatrix g = root * n * root.transpose();
  return m.cwiseProduct(g);
}

CMatrix transition_expectation_dual(const TransitionExpectation& te, const CMatrix& rho) {
  require_square(rho, te.dim(), "transition expectation state");
  const Eigen::Index d = te.dim();
  const CMatrix big = te.isometry() * rho * te.isometry().adjoint();
  CMatrix out = CMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) out += big.block(i * d, i * d, d, d);
  return out;
}

ChannelRun iterate_channel(const Channel& channel, const CMatrix& rho0, int steps) {
  if (steps < 0) throw ParameterError("iterate_channel: steps must be >= 0");
  require_state(rho0);
  if (const auto* sc = std::get_if<SchurChannel>(&channel)) {
    require_square(rho0, sc->dim(), "iterate_channel state");
    const CpReport cp = certify_cp(*sc);
    if (!cp.completely_positive) {
      throw CertificationError("iterate_channel: channel is not completely positive (min Choi "
                               "eigenvalue " + std::to_string(cp.choi_min_eigenvalue) + ")");
    }
  } else {
    require_square(rho0, std::get<TransitionExpectation>(channel).dim(), "iterate_channel state");
  }

  ChannelRun run;
  run.states.push_back(rho0);
  for (int s = 0; s < steps; ++s) {
    const CMatrix& rho = run.states.back();
    CMatrix next = std::visit(
        [&](const auto& c) -> CMatrix {
          if constexpr (std::is_same_v<std::decay_t<decltype(c)>, SchurChannel>) {
            return schur_channel_apply(c, rho);
          } else {
            return transition_expectation_dual(c, rho);
          }
        },
        channel);
    const double tr = next.trace().real();
    if (!(tr > kAbsorbedTrace)) {
      throw AbsorbedStateError("iterate_channel: state annihilated at step " +
                               std::to_string(s + 1) + " (trace " + std::to_string(tr) + ")");
    }
    run.renormalization.push_back(tr);
    run.states.push_back(next / tr);
  }
  return run;
}

WalkOperator szegedy_walk(const RMatrix& d, Stochastic convention) {
  require_stochastic(d, convention, kStochasticTol, "szegedy");
  const Eigen::Index n = d.rows();
  WalkOperator w;
  w.dim_v = static_cast<int>(n);
  w.convention = convention;
  w.a_op = CMatrix::Zero(n * n, n);
  for (Eigen::Index v = 0; v < n; ++v)
    for (Eigen::Index u = 0; u < n; ++u) {
      const double prob = convention == Stochastic::kColumns ? d(u, v) : d(v, u);
      w.a_op(v * n + u, v) = std::sqrt(prob);
    }
  w.projector = w.a_op * w.a_op.adjoint();
  w.swap = CMatrix::Zero(n * n, n * n);
  for (Eigen::Index v = 0; v < n; ++v)
    for (Eigen::Index u = 0; u < n; ++u) w.swap(u * n + v, v * n + u) = 1.0;
  w.unitary = w.swap * (2.0 * w.projector - CMatrix::Identity(n * n, n * n));
  return w;
}

bool is_irreducible(const RMatrix& d) {
  const Eigen::Index n = d.rows();
  auto reach = [&](bool transpose) {
    std::vector<bool> seen(n, false);
    std::vector<Eigen::Index> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (Eigen::Index u = 0; u < n; ++u) {
        const double w = transpose ? d(v, u) : d(u, v);
        if (w > 0.0 && !seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
      }
    }
    for (bool s : seen)
      if (!s) return false;
    return true;
  };
  return n > 0 && reach(false) && reach(true);
}

Distribution stationary_distribution(const RMatrix& d, Stochastic convention) {
  require_stochastic(d, convention, 1e-9, "stationary distribution");
  const Eigen::Index n = d.rows();
  const RMatrix col = convention == Stochastic::kColumns ? d : RMatrix(d.transpose());
  RMatrix system(n + 1, n);
  system.topRows(n) = col - RMatrix::Identity(n, n);
  system.row(n).setOnes();
  RVector rhs = RVector::Zero(n + 1);
  rhs(n) = 1.0;
  const RVector pi = system.colPivHouseholderQr().solve(rhs);
  return Distribution(pi.data(), pi.data() + n);
}

}  // namespace krein
