#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "krein/parameters.hpp"

namespace krein {

/// F-symbol key {a, b, c, d, e, f} for [F^{abc}_d]_{ef}: e is the a x b
/// channel, f the b x c channel.
using FKey = std::array<int, 6>;
/// R-symbol key {a, b, c} for R^{ab}_c.
using RKey = std::array<int, 3>;

/// Multiplicity data, quantum dimensions and optional F/R/twist data of a
/// fusion category. Label 0 is the vacuum.
struct FusionSystem {
  std::vector<std::string> labels;
  Tensor3<int> N;
  std::vector<int> dual;
  std::vector<double> dims;
  std::map<FKey, Complex> F;
  std::map<RKey, Complex> R;
  /// Per-label topological spin; stored, not used by any operation.
  std::vector<Complex> twist;

  int rank() const { return N.size(); }
  /// Index of a label name, or of a decimal index string. Throws ValidationError.
  int label_index(const std::string& name) const;
  bool multiplicity_free() const;
  bool admissible(int a, int b, int c) const { return N(a, b, c) > 0; }
  /// Value of an F-symbol, 0 if any vertex is inadmissible. Missing admissible
  /// entries are reported through `missing` when provided, else read as 0.
  Complex f_symbol(const FKey& key, std::vector<FKey>* missing = nullptr) const;
};

/// Validates the fusion tensor (unit, commutativity, associativity, duals),
/// F unitarity and R phases, then fills `dual` and `dims`.
FusionSystem make_fusion_system(std::vector<std::string> labels, Tensor3<int> n,
                                std::map<FKey, Complex> f = {}, std::map<RKey, Complex> r = {},
                                std::vector<Complex> twist = {});

/// "ising" or "fibonacci".
FusionSystem builtin_fusion_system(const std::string& name);

/// Group ring of Z_n: a x b = a + b mod n, all F = R = 1.
FusionSystem cyclic_fusion_system(int n);

/// Perron-Frobenius eigenvalue of each fusion matrix (N_a)_{bc} = N_ab^c.
std::vector<double> quantum_dimensions(const Tensor3<int>& n, const std::vector<std::string>& labels);

/// c -> N_ab^c.
std::vector<int> fuse(const FusionSystem& fs, int a, int b);

struct BraidGenerators {
  int anyon = 0;
  int total = 0;
  /// Intermediate channels e in a x a spanning the fusion space.
  std::vector<int> basis;
  CMatrix sigma1;  // R, diagonal in the fusion basis
  CMatrix sigma2;  // F R F^-1
  CMatrix braid;   // F R^2 F^-1
  /// min over phases of |s1 s2 s1 - phase s2 s1 s2|_max
  double braid_relation_residual = 0.0;
};

/// Generators on the first two-dimensional space of three identical anyons.
/// Throws UnsupportedInput when F or R data is missing.
BraidGenerators braid_generators(const FusionSystem& fs);

/// Max entrywise distance of x and phase * y over the best unit phase.
double phase_aligned_residual(const CMatrix& x, const CMatrix& y);

struct ConsistencyReport {
  double max_residual = 0.0;
  bool passed = false;
  /// Label assignment {a,b,c,d,e,f,g,k,l} (pentagon) or {a,b,c,d,e,g} (hexagon)
  /// attaining the maximum residual.
  std::vector<int> worst;
};

inline constexpr double kConsistencyTolerance = 1e-10;

/// Pentagon identity over all label assignments. Requires a multiplicity-free
/// system of rank <= 3; throws ValidationError listing missing F entries.
ConsistencyReport verify_pentagon(const FusionSystem& fs);

/// Both hexagon identities; rank <= 2 multiplicity-free systems only.
ConsistencyReport verify_hexagon(const FusionSystem& fs);

struct BridgeReport {
  /// fusion label a -> scheme idempotent index
  std::vector<int> bijection;
  /// fitted s_a with q_{ab}^c s_a s_b / s_c ~ N_ab^c
  std::vector<double> scalars;
  /// max |rescaled q - N|
  double deviation = 0.0;
  /// max distance of the rescaled q to the nearest non-negative integer tensor
  double integrality_deviation = 0.0;
  bool match = false;
  std::size_t candidates_tried = 0;
};

inline constexpr double kBridgeMatchTolerance = 1e-6;

/// Compares a scheme's Krein tensor with a fusion tensor of the same rank,
/// up to a label bijection fixing the vacuum and per-label positive rescaling.
BridgeReport scheme_fusion_bridge(const BoseMesnerDecomposition& dec, const KreinTensor& q,
                                  const FusionSystem& fs);

}  // namespace krein
