#pragma once

#include <variant>
#include <vector>

#include "krein/hypergroup.hpp"
#include "krein/linalg.hpp"

namespace krein {

/// M -> e o M for a Hermitian multiplier e.
class SchurChannel {
 public:
  /// Throws ShapeError unless the multiplier is square and Hermitian within 1e-12.
  explicit SchurChannel(CMatrix multiplier);

  /// Channel of the normalized idempotent coin e_i (or a convex mixture).
  static SchurChannel from_coin(const Hypergroup& h, const Coin& coin);

  const CMatrix& multiplier() const { return multiplier_; }
  Eigen::Index dim() const { return multiplier_.rows(); }

 private:
  CMatrix multiplier_;
};

CMatrix schur_channel_apply(const SchurChannel& c, const CMatrix& m);

/// Choi matrix sum_ij |i><j| (x) T(|i><j|), of size n^2.
CMatrix choi_matrix(const SchurChannel& c);

struct CpReport {
  double choi_min_eigenvalue = 0.0;
  double multiplier_min_eigenvalue = 0.0;
  bool completely_positive = false;
  bool multiplier_psd = false;
  bool verdicts_agree() const { return completely_positive == multiplier_psd; }
};

inline constexpr double kPsdTolerance = 1e-10;

CpReport certify_cp(const SchurChannel& c);

/// Matrix of the channel restricted to span{e_k}: T(e_j) = sum_k R(k, j) e_k.
/// The second member is the residual of T(e_j) outside that span.
std::pair<RMatrix, double> restrict_to_idempotents(const SchurChannel& c, const Hypergroup& h);

/// Orthogonal U whose first row is sqrt(p):
/// U(0, j) = sqrt(p_j), U(i, 0) = -sqrt(p_i), U(i, j) = delta_ij - sqrt(p_i p_j)/(1 + sqrt(p_0)).
RMatrix dilation_unitary(const Distribution& p);

/// Stinespring isometry for a row-stochastic transition matrix P:
/// V e_i = sum_j sqrt(P(i, j)) e_i (x) e_j, stored as a (d^2 x d) matrix.
class TransitionExpectation {
 public:
  explicit TransitionExpectation(RMatrix transition);

  int dim() const { return static_cast<int>(transition_.rows()); }
  const RMatrix& transition() const { return transition_; }
  const CMatrix& isometry() const { return isometry_; }

 private:
  RMatrix transition_;
  CMatrix isometry_;
};

TransitionExpectation make_transition_expectation(const RMatrix& p);

/// V^*(M (x) N) V.
CMatrix apply_transition_expectation(const TransitionExpectation& te, const CMatrix& m,
                                     const CMatrix& n);

/// Schur form M o G(N) with G(N) = sqrt(P) N sqrt(P)^T (entrywise square root).
CMatrix apply_transition_expectation_schur(const TransitionExpectation& te, const CMatrix& m,
                                           const CMatrix& n);

/// State-space dual of N -> E(I (x) N): rho -> Tr_1(V rho V^*). Trace preserving.
CMatrix transition_expectation_dual(const TransitionExpectation& te, const CMatrix& rho);

struct ChannelRun {
  std::vector<CMatrix> states;
  /// Trace of the unnormalized image at each step (1 for trace-preserving maps).
  std::vector<double> renormalization;
};

using Channel = std::variant<SchurChannel, TransitionExpectation>;

/// Iterates rho -> T(rho) / tr T(rho).
/// Throws ValidationError for non-state rho0, CertificationError for a
/// non-CP Schur channel, AbsorbedStateError when the trace drops below 1e-14.
ChannelRun iterate_channel(const Channel& channel, const CMatrix& rho0, int steps);

/// Szegedy walk on the pair space of a stochastic matrix D.
struct WalkOperator {
  int dim_v = 0;
  Stochastic convention = Stochastic::kColumns;
  CMatrix a_op;       // (dim_v^2 x dim_v) isometry
  CMatrix projector;  // A A^*
  CMatrix swap;       // |v,w> -> |w,v>
  CMatrix unitary;    // S (2 Pi - I)
};

/// Column convention: A|v> = sum_w sqrt(D(w, v)) |v, w>.
/// Row convention:    A|v> = sum_w sqrt(D(v, w)) |v, w>.
WalkOperator szegedy_walk(const RMatrix& d, Stochastic convention = Stochastic::kColumns);

/// Stationary distribution of an irreducible stochastic matrix (per convention).
Distribution stationary_distribution(const RMatrix& d, Stochastic convention);

bool is_irreducible(const RMatrix& d);

}  // namespace krein
