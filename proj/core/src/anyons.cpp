#include "krein/anyons.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "krein/error.hpp"

namespace krein {
namespace {

constexpr double kUnitaryTol = 1e-12;
constexpr double kDimTol = 1e-10;

std::string key_text(const FKey& k) {
  std::ostringstream os;
  os << "F[" << k[0] << "," << k[1] << "," << k[2] << ";" << k[3] << "](" << k[4] << "," << k[5]
     << ")";
  return os.str();
}

// Admissible channel lists (e, f) of the F-move F^{abc}_d.
std::pair<std::vector<int>, std::vector<int>> f_channels(const FusionSystem& fs, int a, int b,
                                                         int c, int d) {
  std::vector<int> left, right;
  for (int x = 0; x < fs.rank(); ++x) {
    if (fs.admissible(a, b, x) && fs.admissible(x, c, d)) left.push_back(x);
    if (fs.admissible(b, c, x) && fs.admissible(a, x, d)) right.push_back(x);
  }
  return {left, right};
}

void check_f_unitarity(const FusionSystem& fs) {
  if (fs.F.empty()) return;
  const int r = fs.rank();
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c)
        for (int d = 0; d < r; ++d) {
          const auto [left, right] = f_channels(fs, a, b, c, d);
          if (left.empty() && right.empty()) continue;
          std::vector<FKey> missing;
          CMatrix m(static_cast<Eigen::Index>(left.size()), static_cast<Eigen::Index>(right.size()));
          for (std::size_t i = 0; i < left.size(); ++i)
            for (std::size_t j = 0; j < right.size(); ++j)
              m(i, j) = fs.f_symbol({a, b, c, d, left[i], right[j]}, &missing);
          if (!missing.empty()) continue;  // incomplete blocks are reported by verify_pentagon
          if (left.size() != right.size()) {
            throw ValidationError("fusion system: F^{" + std::to_string(a) + std::to_string(b) +
                                  std::to_string(c) + "}_" + std::to_string(d) + " is not square");
          }
          const double res = max_abs(m * m.adjoint() - CMatrix::Identity(m.rows(), m.rows()));
          if (res > kUnitaryTol) {
            throw ValidationError("fusion system: F^{" + std::to_string(a) + std::to_string(b) +
                                  std::to_string(c) + "}_" + std::to_string(d) +
                                  " is not unitary (residual " + std::to_string(res) + ")");
          }
        }
}

}  // namespace

int FusionSystem::label_index(const std::string& name) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == name) return static_cast<int>(i);
  if (!name.empty() && std::all_of(name.begin(), name.end(), ::isdigit)) {
    const int i = std::stoi(name);
    if (i < rank()) return i;
  }
  throw ValidationError("fusion system: unknown label '" + name + "'");
}

bool FusionSystem::multiplicity_free() const {
  return std::all_of(N.data().begin(), N.data().end(), [](int v) { return v <= 1; });
}

Complex FusionSystem::f_symbol(const FKey& k, std::vector<FKey>* missing) const {
  const auto [a, b, c, d, e, f] = k;
  if (!(admissible(a, b, e) && admissible(e, c, d) && admissible(b, c, f) && admissible(a, f, d))) {
    return 0.0;
  }
  const auto it = F.find(k);
  if (it != F.end()) return it->second;
  if (missing != nullptr) missing->push_back(k);
  return 0.0;
}

std::vector<double> quantum_dimensions(const Tensor3<int>& n,
                                       const std::vector<std::string>& labels) {
  const int r = n.size();
  std::vector<double> dims(r);
  for (int a = 0; a < r; ++a) {
    RMatrix na(r, r);
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c) na(b, c) = n(a, b, c);
    dims[a] = na.eigenvalues().cwiseAbs().maxCoeff();
  }
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      double rhs = 0.0;
      for (int c = 0; c < r; ++c) rhs += n(a, b, c) * dims[c];
      const double res = std::abs(dims[a] * dims[b] - rhs);
      if (res > kDimTol) {
        const std::string name = a < static_cast<int>(labels.size()) ? labels[a] : std::to_string(a);
        throw ValidationError("quantum dimensions: label '" + name +
                              "' is not consistent with the fusion rules (residual " +
                              std::to_string(res) + ")");
      }
    }
  return dims;
}

FusionSystem make_fusion_system(std::vector<std::string> labels, Tensor3<int> n,
                                std::map<FKey, Complex> f, std::map<RKey, Complex> r,
                                std::vector<Complex> twist) {
  const int rank = n.size();
  if (rank == 0) throw ValidationError("fusion system: empty label set");
  if (static_cast<int>(labels.size()) != rank) {
    throw ShapeError("fusion system: " + std::to_string(labels.size()) + " labels for rank " +
                     std::to_string(rank));
  }
  if (!twist.empty() && static_cast<int>(twist.size()) != rank) {
    throw ShapeError("fusion system: twist list has wrong length");
  }
  auto name = [&](int a) { return "'" + labels[a] + "'"; };
  for (int v : n.data())
    if (v < 0) throw ValidationError("fusion system: negative multiplicity");
  for (int b = 0; b < rank; ++b)
    for (int c = 0; c < rank; ++c)
      if (n(0, b, c) != (b == c ? 1 : 0)) {
        throw ValidationError("fusion system: vacuum is not a unit for " + name(b));
      }
  for (int a = 0; a < rank; ++a)
    for (int b = 0; b < rank; ++b)
      for (int c = 0; c < rank; ++c)
        if (n(a, b, c) != n(b, a, c)) {
          throw ValidationError("fusion system: fusion of " + name(a) + " and " + name(b) +
                                " is not commutative");
        }
  for (int a = 0; a < rank; ++a)
    for (int b = 0; b < rank; ++b)
      for (int c = 0; c < rank; ++c)
        for (int x = 0; x < rank; ++x) {
          long lhs = 0, rhs = 0;
          for (int e = 0; e < rank; ++e) {
            lhs += static_cast<long>(n(a, b, e)) * n(e, c, x);
            rhs += static_cast<long>(n(b, c, e)) * n(a, e, x);
          }
          if (lhs != rhs) {
            throw ValidationError("fusion system: associativity fails for (" + name(a) + " x " +
                                  name(b) + ") x " + name(c) + " -> " + name(x));
          }
        }

  FusionSystem fs;
  fs.labels = std::move(labels);
  fs.N = std::move(n);
  fs.F = std::move(f);
  fs.R = std::move(r);
  fs.twist = std::move(twist);
  fs.dual.assign(rank, -1);
  for (int a = 0; a < rank; ++a) {
    for (int b = 0; b < rank; ++b)
      if (fs.N(a, b, 0) == 1) fs.dual[a] = b;
    if (fs.dual[a] < 0) throw ValidationError("fusion system: label " + name(a) + " has no dual");
  }
  for (const auto& [key, value] : fs.R) {
    if (std::abs(std::abs(value) - 1.0) > kUnitaryTol) {
      throw ValidationError("fusion system: R[" + std::to_string(key[0]) + "," +
                            std::to_string(key[1]) + ";" + std::to_string(key[2]) +
                            "] is not a phase");
    }
  }
  check_f_unitarity(fs);
  fs.dims = quantum_dimensions(fs.N, fs.labels);
  return fs;
}

namespace {

// Every admissible F entry set to 1; callers override the non-trivial blocks.
std::map<FKey, Complex> trivial_f(const Tensor3<int>& n) {
  const int r = n.size();
  std::map<FKey, Complex> f;
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c)
        for (int d = 0; d < r; ++d)
          for (int e = 0; e < r; ++e)
            for (int g = 0; g < r; ++g)
              if (n(a, b, e) && n(e, c, d) && n(b, c, g) && n(a, g, d)) f[{a, b, c, d, e, g}] = 1.0;
  return f;
}

std::map<RKey, Complex> trivial_vacuum_r(int rank) {
  std::map<RKey, Complex> r;
  for (int a = 0; a < rank; ++a) {
    r[{0, a, a}] = 1.0;
    r[{a, 0, a}] = 1.0;
  }
  return r;
}

FusionSystem ising() {
  constexpr int one = 0, sigma = 1, psi = 2;
  Tensor3<int> n(3, 0);
  for (int a = 0; a < 3; ++a) {
    n(one, a, a) = 1;
    n(a, one, a) = 1;
  }
  n(sigma, sigma, one) = n(sigma, sigma, psi) = 1;
  n(sigma, psi, sigma) = n(psi, sigma, sigma) = 1;
  n(psi, psi, one) = 1;

  auto f = trivial_f(n);
  const double h = 1.0 / std::numbers::sqrt2;
  f[{sigma, sigma, sigma, sigma, one, one}] = h;
  f[{sigma, sigma, sigma, sigma, one, psi}] = h;
  f[{sigma, sigma, sigma, sigma, psi, one}] = h;
  f[{sigma, sigma, sigma, sigma, psi, psi}] = -h;
  f[{sigma, psi, sigma, psi, sigma, sigma}] = -1.0;
  f[{psi, sigma, psi, sigma, sigma, sigma}] = -1.0;

  // R_{sigma sigma} = e^{i pi/8} diag(1, i) over the channels (1, psi).
  auto r = trivial_vacuum_r(3);
  const Complex base = std::polar(1.0, std::numbers::pi / 8.0);
  r[{sigma, sigma, one}] = base;
  r[{sigma, sigma, psi}] = base * Complex(0.0, 1.0);

  std::vector<Complex> twist{1.0, std::polar(1.0, std::numbers::pi / 8.0), -1.0};
  return make_fusion_system({"1", "sigma", "psi"}, std::move(n), std::move(f), std::move(r),
                            std::move(twist));
}

FusionSystem fibonacci() {
  constexpr int one = 0, tau = 1;
  Tensor3<int> n(2, 0);
  n(one, one, one) = 1;
  n(one, tau, tau) = n(tau, one, tau) = 1;
  n(tau, tau, one) = n(tau, tau, tau) = 1;

  auto f = trivial_f(n);
  const double phi = std::numbers::phi;
  f[{tau, tau, tau, tau, one, one}] = 1.0 / phi;
  f[{tau, tau, tau, tau, one, tau}] = 1.0 / std::sqrt(phi);
  f[{tau, tau, tau, tau, tau, one}] = 1.0 / std::sqrt(phi);
  f[{tau, tau, tau, tau, tau, tau}] = -1.0 / phi;

  auto r = trivial_vacuum_r(2);
  r[{tau, tau, one}] = std::polar(1.0, 4.0 * std::numbers::pi / 5.0);
  r[{tau, tau, tau}] = std::polar(1.0, -3.0 * std::numbers::pi / 5.0);

  std::vector<Complex> twist{1.0, std::polar(1.0, 4.0 * std::numbers::pi / 5.0)};
  return make_fusion_system({"1", "f"}, std::move(n), std::move(f), std::move(r),
                            std::move(twist));
}

}  // namespace

FusionSystem builtin_fusion_system(const std::string& name) {
  if (name == "ising") return ising();
  if (name == "fibonacci") return fibonacci();
  throw ValidationError("unknown fusion system '" + name + "' (expected ising or fibonacci)");
}

FusionSystem cyclic_fusion_system(int order) {
  if (order < 1) throw ParameterError("cyclic fusion system: order must be >= 1");
  Tensor3<int> n(order, 0);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) n(a, b, (a + b) % order) = 1;
  std::vector<std::string> labels;
  for (int a = 0; a < order; ++a) labels.push_back(a == 0 ? "1" : "g" + std::to_string(a));
  if (order == 2) labels[1] = "psi";
  std::map<RKey, Complex> r;
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) r[{a, b, (a + b) % order}] = 1.0;
  auto f = trivial_f(n);
  return make_fusion_system(std::move(labels), std::move(n), std::move(f), std::move(r));
}

std::vector<int> fuse(const FusionSystem& fs, int a, int b) {
  const int r = fs.rank();
  if (a < 0 || a >= r || b < 0 || b >= r) throw ValidationError("fuse: label index out of range");
  std::vector<int> out(r);
  for (int c = 0; c < r; ++c) out[c] = fs.N(a, b, c);
  return out;
}

double phase_aligned_residual(const CMatrix& x, const CMatrix& y) {
  const Complex overlap = (y.adjoint() * x).trace();
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0, 0.0);
  return max_abs(x - phase * y);
}

BraidGenerators braid_generators(const FusionSystem& fs) {
  const int r = fs.rank();
  for (int a = 1; a < r; ++a) {
    for (int t = 0; t < r; ++t) {
      std::vector<int> basis;
      for (int e = 0; e < r; ++e)
        if (fs.admissible(a, a, e) && fs.admissible(e, a, t)) basis.push_back(e);
      if (basis.size() != 2) continue;

      const auto dim = static_cast<Eigen::Index>(basis.size());
      CMatrix rmat = CMatrix::Zero(dim, dim);
      CMatrix fmat(dim, dim);
      for (Eigen::Index i = 0; i < dim; ++i) {
        const auto it = fs.R.find({a, a, basis[i]});
        if (it == fs.R.end()) {
          throw UnsupportedInput("braid: missing R[" + fs.labels[a] + "," + fs.labels[a] + ";" +
                                 fs.labels[basis[i]] + "]");
        }
        rmat(i, i) = it->second;
        for (Eigen::Index j = 0; j < dim; ++j) {
          const FKey key{a, a, a, t, basis[i], basis[j]};
          const auto fit = fs.F.find(key);
          if (fit == fs.F.end()) throw UnsupportedInput("braid: missing " + key_text(key));
          fmat(i, j) = fit->second;
        }
      }
      const CMatrix finv = fmat.inverse();
      BraidGenerators g;
      g.anyon = a;
      g.total = t;
      g.basis = basis;
      g.sigma1 = rmat;
      g.sigma2 = fmat * rmat * finv;
      g.braid = fmat * rmat * rmat * finv;
      g.braid_relation_residual = phase_aligned_residual(g.sigma1 * g.sigma2 * g.sigma1,
                                                         g.sigma2 * g.sigma1 * g.sigma2);
      return g;
    }
  }
  throw UnsupportedInput("braid: no two-dimensional fusion space of three identical anyons");
}

ConsistencyReport verify_pentagon(const FusionSystem& fs) {
  const int r = fs.rank();
  if (!fs.multiplicity_free() || r > 3) {
    throw UnsupportedInput("pentagon: only multiplicity-free systems of rank <= 3 are supported");
  }
  std::vector<FKey> missing;
  ConsistencyReport rep;
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c)
        for (int d = 0; d < r; ++d)
          for (int e = 0; e < r; ++e)
            for (int f = 0; f < r; ++f)
              for (int g = 0; g < r; ++g)
                for (int k = 0; k < r; ++k)
                  for (int l = 0; l < r; ++l) {
                    const Complex lhs = fs.f_symbol({f, c, d, e, g, l}, &missing) *
                                        fs.f_symbol({a, b, l, e, f, k}, &missing);
                    Complex rhs = 0.0;
                    for (int h = 0; h < r; ++h) {
                      rhs += fs.f_symbol({a, b, c, g, f, h}, &missing) *
                             fs.f_symbol({a, h, d, e, g, k}, &missing) *
                             fs.f_symbol({b, c, d, k, h, l}, &missing);
                    }
                    const double res = std::abs(lhs - rhs);
                    if (res > rep.max_residual || rep.worst.empty()) {
                      rep.max_residual = std::max(rep.max_residual, res);
                      rep.worst = {a, b, c, d, e, f, g, k, l};
                    }
                  }
  if (!missing.empty()) {
    std::sort(missing.begin(), missing.end());
    missing.erase(std::unique(missing.begin(), missing.end()), missing.end());
    std::string text;
    for (std::size_t i = 0; i < missing.size() && i < 12; ++i) text += " " + key_text(missing[i]);
    if (missing.size() > 12) text += " ...";
    throw ValidationError("pentagon: incomplete F data; missing" + text);
  }
  rep.passed = rep.max_residual < kConsistencyTolerance;
  return rep;
}

ConsistencyReport verify_hexagon(const FusionSystem& fs) {
  const int r = fs.rank();
  if (!fs.multiplicity_free() || r > 2) {
    throw UnsupportedInput("hexagon: only multiplicity-free systems of rank <= 2 are supported");
  }
  std::vector<FKey> missing_f;
  std::vector<RKey> missing_r;
  auto rsym = [&](int a, int b, int c) -> Complex {
    if (!fs.admissible(a, b, c)) return 0.0;
    const auto it = fs.R.find({a, b, c});
    if (it != fs.R.end()) return it->second;
    missing_r.push_back({a, b, c});
    return 0.0;
  };
  auto rinv = [&](int a, int b, int c) -> Complex {
    const Complex v = rsym(a, b, c);
    return v == Complex(0.0) ? Complex(0.0) : 1.0 / v;
  };
  ConsistencyReport rep;
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c)
        for (int d = 0; d < r; ++d)
          for (int e = 0; e < r; ++e)
            for (int g = 0; g < r; ++g) {
              const Complex f_acb = fs.f_symbol({a, c, b, d, e, g}, &missing_f);
              Complex lhs1 = rsym(c, a, e) * f_acb * rsym(c, b, g);
              Complex lhs2 = rinv(a, c, e) * f_acb * rinv(b, c, g);
              Complex rhs1 = 0.0, rhs2 = 0.0;
              for (int f = 0; f < r; ++f) {
                const Complex left = fs.f_symbol({c, a, b, d, e, f}, &missing_f);
                const Complex right = fs.f_symbol({a, b, c, d, f, g}, &missing_f);
                rhs1 += left * rsym(c, f, d) * right;
                rhs2 += left * rinv(f, c, d) * right;
              }
              const double res = std::max(std::abs(lhs1 - rhs1), std::abs(lhs2 - rhs2));
              if (res > rep.max_residual || rep.worst.empty()) {
                rep.max_residual = std::max(rep.max_residual, res);
                rep.worst = {a, b, c, d, e, g};
              }
            }
  if (!missing_f.empty() || !missing_r.empty()) {
    std::string text;
    for (std::size_t i = 0; i < missing_f.size() && i < 8; ++i) text += " " + key_text(missing_f[i]);
    for (std::size_t i = 0; i < missing_r.size() && i < 8; ++i)
      text += " R[" + std::to_string(missing_r[i][0]) + "," + std::to_string(missing_r[i][1]) +
              ";" + std::to_string(missing_r[i][2]) + "]";
    throw ValidationError("hexagon: incomplete data; missing" + text);
  }
  rep.passed = rep.max_residual < kConsistencyTolerance;
  return rep;
}

BridgeReport scheme_fusion_bridge(const BoseMesnerDecomposition& dec, const KreinTensor& q,
                                  const FusionSystem& fs) {
  const int r = fs.rank();
  if (static_cast<int>(dec.multiplicities.size()) != r || q.q.size() != r) {
    throw ShapeError("bridge: scheme has " + std::to_string(q.q.size()) +
                     " idempotents but the fusion system has rank " + std::to_string(r));
  }

  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  BridgeReport best;
  best.deviation = std::numeric_limits<double>::infinity();
  std::size_t tried = 0;
  do {
    ++tried;
    // log-space least squares: x_a + x_b - x_c = log N - log q, x_0 = 0
    std::vector<std::array<int, 3>> rows;
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b)
        for (int c = 0; c < r; ++c)
          if (fs.N(a, b, c) > 0 && q.q(perm[a], perm[b], perm[c]) > 1e-12) rows.push_back({a, b, c});
    RVector x = RVector::Zero(r);
    if (r > 1 && !rows.empty()) {
      RMatrix m = RMatrix::Zero(static_cast<Eigen::Index>(rows.size()), r - 1);
      RVector rhs(static_cast<Eigen::Index>(rows.size()));
      for (std::size_t t = 0; t < rows.size(); ++t) {
        const auto [a, b, c] = rows[t];
        if (a > 0) m(t, a - 1) += 1.0;
        if (b > 0) m(t, b - 1) += 1.0;
        if (c > 0) m(t, c - 1) -= 1.0;
        rhs(t) = std::log(static_cast<double>(fs.N(a, b, c))) - std::log(q.q(perm[a], perm[b], perm[c]));
      }
      x.tail(r - 1) = m.completeOrthogonalDecomposition().solve(rhs);
    }
    std::vector<double> s(r);
    for (int a = 0; a < r; ++a) s[a] = std::exp(x(a));

    double dev = 0.0, integral = 0.0;
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b)
        for (int c = 0; c < r; ++c) {
          const double v = q.q(perm[a], perm[b], perm[c]) * s[a] * s[b] / s[c];
          dev = std::max(dev, std::abs(v - fs.N(a, b, c)));
          integral = std::max(integral, std::abs(v - std::max(0.0, std::round(v))));
        }
    if (dev < best.deviation) {
      best.bijection = perm;
      best.scalars = s;
      best.deviation = dev;
      best.integrality_deviation = integral;
    }
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  best.candidates_tried = tried;
  best.match = best.deviation < kBridgeMatchTolerance;
  return best;
}

}  // namespace krein
