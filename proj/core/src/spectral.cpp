#include "krein/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "krein/error.hpp"

namespace krein {
namespace {

double unit_double(std::mt19937_64& gen) {
  // Fixed-width conversion, reproducible across standard libraries.
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Splits the columns of an orthonormal basis into groups of (numerically)
// equal eigenvalues of the Hermitian matrix h restricted to the basis.
std::vector<CMatrix> split_by_hermitian(const CMatrix& basis, const CMatrix& h, double tol) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
  const RVector& vals = solver.eigenvalues();
  const double scale = std::max(1.0, vals.cwiseAbs().maxCoeff());
  std::vector<CMatrix> groups;
  Eigen::Index start = 0;
  for (Eigen::Index i = 1; i <= vals.size(); ++i) {
    if (i == vals.size() || vals(i) - vals(i - 1) >= tol * scale) {
      groups.push_back(basis * solver.eigenvectors().middleCols(start, i - start));
      start = i;
    }
  }
  return groups;
}

// Refines an eigenspace of the generic combination until every A_j acts on
// each piece as a scalar.
void refine(const CMatrix& basis, const std::vector<CMatrix>& adj, double tol,
            std::vector<CMatrix>& out) {
  const Eigen::Index r = basis.cols();
  for (std::size_t j = 1; j < adj.size(); ++j) {
    const CMatrix b = basis.adjoint() * adj[j] * basis;
    const Complex lambda = b.trace() / static_cast<double>(r);
    const double scale = std::max(1.0, max_abs(b));
    if (max_abs(b - lambda * CMatrix::Identity(r, r)) <= tol * scale) continue;
    // b is normal; a generic real combination of its Hermitian and
    // anti-Hermitian parts has the same eigenspaces.
    const CMatrix herm = 0.5 * (b + b.adjoint());
    const CMatrix anti = Complex(0.0, -0.5) * (b - b.adjoint());
    const CMatrix h = herm + 0.7548776662466927 * anti;
    auto pieces = split_by_hermitian(CMatrix::Identity(r, r), h, tol);
    if (pieces.size() < 2) {
      throw NumericalError("decompose: eigenspace refinement failed to split against A_" +
                           std::to_string(j) + " (residual " +
                           std::to_string(max_abs(b - lambda * CMatrix::Identity(r, r))) + ")");
    }
    for (const auto& p : pieces) refine(basis * p, adj, tol, out);
    return;
  }
  out.push_back(basis);
}

struct Eigenspace {
  CMatrix projector;
  std::vector<Complex> eigenvalues;  // one per class
  double trace = 0.0;
};

// Lexicographic comparison of eigenvalue tuples, descending, with tolerance.
int compare_desc(const std::vector<Complex>& a, const std::vector<Complex>& b, double tol) {
  for (std::size_t j = 1; j < a.size(); ++j) {
    if (std::abs(a[j].real() - b[j].real()) > tol) return a[j].real() > b[j].real() ? -1 : 1;
    if (std::abs(a[j].imag() - b[j].imag()) > tol) return a[j].imag() > b[j].imag() ? -1 : 1;
  }
  return 0;
}

}  // namespace

CMatrix schur(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("schur: shapes " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " and " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()) +
                     " differ");
  }
  return a.cwiseProduct(b);
}

CMatrix schur_identity(Eigen::Index n) {
  if (n < 1) throw ParameterError("schur_identity: n must be >= 1");
  return CMatrix::Ones(n, n);
}

BoseMesnerDecomposition decompose(const AssociationScheme& s, const DecomposeOptions& opts) {
  require_scheme(s, /*require_commutative=*/true);
  const int n = s.n();
  const int classes = s.num_classes();
  const auto valency = s.valencies();

  std::vector<CMatrix> adj;
  adj.reserve(classes);
  for (int j = 0; j < classes; ++j) adj.push_back(s.adjacency_real(j).cast<Complex>());

  std::mt19937_64 gen(opts.seed);
  CMatrix h = CMatrix::Zero(n, n);
  const Complex i_unit(0.0, 1.0);
  for (int j = 1; j < classes; ++j) {
    const double c = 0.5 + unit_double(gen);
    const double c_anti = 0.5 + unit_double(gen);
    h += c * (adj[j] + adj[j].transpose()) + c_anti * i_unit * (adj[j] - adj[j].transpose());
  }

  std::vector<CMatrix> bases;
  for (const auto& group : split_by_hermitian(CMatrix::Identity(n, n), h, opts.grouping_tol))
    refine(group, adj, opts.grouping_tol, bases);

  double scale = 1.0;
  for (int k : valency) scale = std::max(scale, static_cast<double>(k));
  const double tuple_tol = opts.grouping_tol * scale;

  std::vector<Eigenspace> spaces;
  for (const auto& basis : bases) {
    Eigenspace e;
    e.projector = basis * basis.adjoint();
    e.trace = static_cast<double>(basis.cols());
    for (int j = 0; j < classes; ++j)
      e.eigenvalues.push_back((basis.adjoint() * adj[j] * basis).trace() /
                              static_cast<double>(basis.cols()));
    // merge with an existing space carrying the same eigenvalue tuple
    auto same = std::find_if(spaces.begin(), spaces.end(), [&](const Eigenspace& o) {
      return compare_desc(o.eigenvalues, e.eigenvalues, tuple_tol) == 0;
    });
    if (same != spaces.end()) {
      same->projector += e.projector;
      same->trace += e.trace;
    } else {
      spaces.push_back(std::move(e));
    }
  }

  if (static_cast<int>(spaces.size()) != classes) {
    throw NumericalError("decompose: found " + std::to_string(spaces.size()) +
                         " common eigenspaces for a scheme with " + std::to_string(classes) +
                         " classes");
  }

  std::vector<Complex> trivial(classes);
  for (int j = 0; j < classes; ++j) trivial[j] = static_cast<double>(valency[j]);
  auto principal = std::find_if(spaces.begin(), spaces.end(), [&](const Eigenspace& e) {
    for (int j = 0; j < classes; ++j)
      if (std::abs(e.eigenvalues[j] - trivial[j]) > tuple_tol) return false;
    return true;
  });
  if (principal == spaces.end() || std::abs(principal->trace - 1.0) > 0.5) {
    throw NumericalError("decompose: could not isolate the all-ones eigenspace");
  }
  std::iter_swap(spaces.begin(), principal);
  spaces.front().projector = CMatrix::Constant(n, n, Complex(1.0 / n, 0.0));
  spaces.front().eigenvalues = trivial;
  std::stable_sort(spaces.begin() + 1, spaces.end(), [&](const Eigenspace& a, const Eigenspace& b) {
    return compare_desc(a.eigenvalues, b.eigenvalues, tuple_tol) < 0;
  });

  BoseMesnerDecomposition dec{s, {}, {}, CMatrix(classes, classes), CMatrix(classes, classes)};
  for (int i = 0; i < classes; ++i) {
    const double tr = spaces[i].projector.trace().real();
    const double rounded = std::round(tr);
    if (std::abs(tr - rounded) > 1e-6 || rounded < 1.0) {
      throw NumericalError("decompose: trace of E_" + std::to_string(i) + " = " +
                           std::to_string(tr) + " is not a positive integer");
    }
    dec.multiplicities.push_back(static_cast<int>(rounded));
    for (int j = 0; j < classes; ++j) dec.eigenmatrix_P(i, j) = spaces[i].eigenvalues[j];
    dec.idempotents.push_back(std::move(spaces[i].projector));
  }

  // Q(i, j) = n * (E_j on R_i) = (sum of E_j over R_i) / k_i.
  dec.eigenmatrix_Q.setZero();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int i = s.relation(x, y);
      for (int j = 0; j < classes; ++j) dec.eigenmatrix_Q(i, j) += dec.idempotents[j](x, y);
    }
  for (int i = 0; i < classes; ++i) dec.eigenmatrix_Q.row(i) /= static_cast<double>(valency[i]);

  const auto res = residuals(dec);
  const double worst = std::max({res.reconstruction, res.orthogonality, res.completeness});
  if (worst > opts.residual_tol) {
    throw NumericalError("decompose: refinement residual " + std::to_string(worst) +
                         " exceeds " + std::to_string(opts.residual_tol));
  }
  if (res.pq_identity > opts.residual_tol * n) {
    throw NumericalError("decompose: PQ - nI residual " + std::to_string(res.pq_identity));
  }
  return dec;
}

DecompositionResiduals residuals(const BoseMesnerDecomposition& dec) {
  DecompositionResiduals r;
  const int n = dec.n();
  const int classes = static_cast<int>(dec.idempotents.size());
  CMatrix total = CMatrix::Zero(n, n);
  for (int i = 0; i < classes; ++i) {
    const CMatrix& ei = dec.idempotents[i];
    total += ei;
    r.hermiticity = std::max(r.hermiticity, hermitian_residual(ei));
    for (int j = 0; j < classes; ++j) {
      const CMatrix prod = ei * dec.idempotents[j];
      r.orthogonality = std::max(r.orthogonality, max_abs(i == j ? CMatrix(prod - ei) : prod));
    }
  }
  r.completeness = max_abs(total - CMatrix::Identity(n, n));
  for (int j = 0; j < classes; ++j) {
    const CMatrix a = dec.scheme.adjacency_real(j).cast<Complex>();
    CMatrix rebuilt = CMatrix::Zero(n, n);
    for (int i = 0; i < classes; ++i) rebuilt += dec.eigenmatrix_P(i, j) * dec.idempotents[i];
    r.reconstruction = std::max(r.reconstruction, max_abs(a - rebuilt));
    for (int k = 0; k < classes; ++k) {
      const CMatrix& e = dec.idempotents[k];
      r.commutation = std::max(r.commutation, max_abs(a * e - e * a));
    }
  }
  r.pq_identity = max_abs(dec.eigenmatrix_P * dec.eigenmatrix_Q -
                          static_cast<double>(n) * CMatrix::Identity(classes, classes));
  return r;
}

}  // namespace krein
