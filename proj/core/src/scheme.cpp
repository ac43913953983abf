#include "krein/scheme.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <sstream>

#include "krein/error.hpp"
#include "krein/galois_field.hpp"

namespace krein {
namespace {

constexpr std::size_t kMaxWitnessesPerAxiom = 16;

std::string pair_text(int x, int y) {
  return "(" + std::to_string(x) + ", " + std::to_string(y) + ")";
}

std::string describe(const Violation& v) {
  std::ostringstream os;
  os << "axiom (" << v.axiom << ") violated";
  if (!v.witness.empty()) {
    os << " at [";
    for (std::size_t i = 0; i < v.witness.size(); ++i) os << (i ? ", " : "") << v.witness[i];
    os << "]";
  }
  if (!v.detail.empty()) os << ": " << v.detail;
  return os.str();
}

}  // namespace

AssociationScheme::AssociationScheme(std::vector<std::vector<int>> relation, int d,
                                     std::vector<std::string> labels)
    : n_(static_cast<int>(relation.size())), d_(d), labels_(std::move(labels)) {
  if (n_ == 0) throw ShapeError("scheme: relation matrix is empty");
  if (d_ < 0) throw ShapeError("scheme: class count d must be >= 0");
  relation_.reserve(static_cast<std::size_t>(n_) * n_);
  for (int x = 0; x < n_; ++x) {
    if (static_cast<int>(relation[x].size()) != n_) {
      throw ShapeError("scheme: relation row " + std::to_string(x) + " has length " +
                       std::to_string(relation[x].size()) + ", expected " + std::to_string(n_));
    }
    for (int y = 0; y < n_; ++y) {
      const int j = relation[x][y];
      if (j < 0 || j > d_) {
        throw ShapeError("scheme: relation entry " + pair_text(x, y) + " = " + std::to_string(j) +
                         " outside 0.." + std::to_string(d_));
      }
      relation_.push_back(j);
    }
  }
  if (!labels_.empty() && static_cast<int>(labels_.size()) != d_ + 1) {
    throw ShapeError("scheme: expected " + std::to_string(d_ + 1) + " labels, got " +
                     std::to_string(labels_.size()));
  }
}

std::vector<std::vector<int>> AssociationScheme::relation_rows() const {
  std::vector<std::vector<int>> rows(n_);
  for (int x = 0; x < n_; ++x)
    rows[x].assign(relation_.begin() + static_cast<std::ptrdiff_t>(x) * n_,
                   relation_.begin() + static_cast<std::ptrdiff_t>(x + 1) * n_);
  return rows;
}

IntMatrix AssociationScheme::adjacency(int j) const {
  IntMatrix a = IntMatrix::Zero(n_, n_);
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (relation(x, y) == j) a(x, y) = 1;
  return a;
}

RMatrix AssociationScheme::adjacency_real(int j) const { return adjacency(j).cast<double>(); }

std::vector<int> AssociationScheme::valencies() const {
  std::vector<int> k(d_ + 1, 0);
  for (int y = 0; y < n_; ++y) ++k[relation(0, y)];
  return k;
}

AxiomReport verify_axioms(const AssociationScheme& s) {
  const int n = s.n();
  const int classes = s.num_classes();
  AxiomReport report;
  std::vector<std::size_t> per_axiom(5, 0);
  auto add = [&](int axiom, std::vector<int> witness, std::string detail) {
    if (per_axiom[axiom]++ < kMaxWitnessesPerAxiom) {
      report.violations.push_back({axiom, std::move(witness), std::move(detail)});
    }
  };

  // (1) A_0 = I
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int j = s.relation(x, y);
      if (x == y && j != 0) add(1, {x, y}, "diagonal pair in class " + std::to_string(j));
      if (x != y && j == 0) add(1, {x, y}, "off-diagonal pair in class 0");
    }
  }

  // (2) every A_j is nonzero, so the classes partition X x X
  std::vector<int> first_x(classes, -1), first_y(classes, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int j = s.relation(x, y);
      if (first_x[j] < 0) {
        first_x[j] = x;
        first_y[j] = y;
      }
    }
  for (int j = 0; j < classes; ++j)
    if (first_x[j] < 0) add(2, {j}, "class " + std::to_string(j) + " is empty");

  // (3) A_j^T is some A_j'
  std::vector<int> partner(classes, -1);
  for (int j = 0; j < classes; ++j)
    if (first_x[j] >= 0) partner[j] = s.relation(first_y[j], first_x[j]);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int j = s.relation(x, y);
      if (s.relation(y, x) != partner[j]) {
        add(3, {x, y},
            "transpose of class " + std::to_string(j) + " is not a single class");
      }
    }

  // (4) #{z : (x,z) in R_i, (z,y) in R_j} depends only on the class of (x,y)
  const std::size_t table_size = static_cast<std::size_t>(classes) * classes;
  std::vector<std::vector<std::int64_t>> reference(classes);
  std::vector<std::int64_t> counts(table_size, 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) ++counts[s.relation(x, z) * classes + s.relation(z, y)];
      auto& ref = reference[s.relation(x, y)];
      if (ref.empty()) {
        ref = counts;
      } else if (ref != counts) {
        std::size_t bad = 0;
        while (ref[bad] == counts[bad]) ++bad;
        add(4, {x, y},
            "path count for classes (" + std::to_string(bad / classes) + ", " +
                std::to_string(bad % classes) + ") differs from the first pair in class " +
                std::to_string(s.relation(x, y)));
      }
      for (int z = 0; z < n; ++z) counts[s.relation(x, z) * classes + s.relation(z, y)] = 0;
    }
  }

  report.passed = report.violations.empty();
  if (report.passed) {
    // (5) p_ij^k = p_ji^k for all i, j, k
    report.commutative = true;
    for (int k = 0; k < classes && report.commutative; ++k)
      for (int i = 0; i < classes && report.commutative; ++i)
        for (int j = i + 1; j < classes; ++j)
          if (reference[k][i * classes + j] != reference[k][j * classes + i]) {
            report.commutative = false;
            break;
          }
  }
  return report;
}

void require_scheme(const AssociationScheme& s, bool require_commutative) {
  const AxiomReport report = verify_axioms(s);
  if (!report.passed) throw AxiomViolation("scheme: " + describe(report.violations.front()));
  if (require_commutative && !report.commutative) {
    throw UnsupportedInput("scheme: not commutative (axiom (5) fails)");
  }
}

AssociationScheme build_group_scheme(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<int> cls(n);
  std::vector<std::string> labels(n);
  int next = 1;
  for (int x = 0; x < n; ++x) {
    cls[x] = x == g.identity() ? 0 : next++;
    labels[cls[x]] = g.names().empty() ? (x == g.identity() ? "e" : "g" + std::to_string(x))
                                       : g.names()[x];
  }
  std::vector<std::vector<int>> rel(n, std::vector<int>(n));
  for (int y = 0; y < n; ++y)
    for (int z = 0; z < n; ++z) rel[y][z] = cls[g.mul(y, g.inverse(z))];
  return AssociationScheme(std::move(rel), n - 1, std::move(labels));
}

AssociationScheme build_conjugacy_scheme(const FiniteGroup& g) {
  auto classes = g.conjugacy_classes();
  std::stable_partition(classes.begin(), classes.end(), [&](const std::vector<int>& c) {
    return std::find(c.begin(), c.end(), g.identity()) != c.end();
  });
  const int n = g.order();
  std::vector<int> cls(n);
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < classes.size(); ++j) {
    for (int x : classes[j]) cls[x] = static_cast<int>(j);
    const int rep = classes[j].front();
    labels.push_back("C" + std::to_string(j) + "[" +
                     (g.names().empty() ? std::to_string(rep) : g.names()[rep]) + "]x" +
                     std::to_string(classes[j].size()));
  }
  std::vector<std::vector<int>> rel(n, std::vector<int>(n));
  for (int y = 0; y < n; ++y)
    for (int z = 0; z < n; ++z) rel[y][z] = cls[g.mul(y, g.inverse(z))];
  return AssociationScheme(std::move(rel), static_cast<int>(classes.size()) - 1,
                           std::move(labels));
}

AssociationScheme build_orbit_scheme(const std::vector<Permutation>& generators, int points) {
  if (points <= 0) throw ParameterError("orbit scheme: point count must be positive");
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != points) {
      throw ConstructionError("orbit scheme: generator has degree " + std::to_string(g.size()) +
                              ", expected " + std::to_string(points));
    }
    Permutation sorted = g;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < points; ++i)
      if (sorted[i] != i) throw ConstructionError("orbit scheme: generator is not a permutation");
  }

  // transitivity on points
  std::vector<int> point_orbit(points, -1);
  int orbit_count = 0;
  for (int start = 0; start < points; ++start) {
    if (point_orbit[start] >= 0) continue;
    std::vector<int> stack{start};
    point_orbit[start] = orbit_count;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (const auto& g : generators)
        if (point_orbit[g[x]] < 0) {
          point_orbit[g[x]] = orbit_count;
          stack.push_back(g[x]);
        }
    }
    ++orbit_count;
  }
  if (orbit_count > 1) {
    std::ostringstream os;
    os << "orbit scheme: action is not transitive; orbits:";
    for (int o = 0; o < orbit_count; ++o) {
      os << " {";
      bool first = true;
      for (int x = 0; x < points; ++x)
        if (point_orbit[x] == o) {
          os << (first ? "" : ",") << x;
          first = false;
        }
      os << "}";
    }
    throw ValidationError(os.str());
  }

  std::vector<std::vector<int>> rel(points, std::vector<int>(points, -1));
  int next = 0;
  auto flood = [&](int x0, int y0) {
    std::vector<std::pair<int, int>> stack{{x0, y0}};
    rel[x0][y0] = next;
    while (!stack.empty()) {
      const auto [x, y] = stack.back();
      stack.pop_back();
      for (const auto& g : generators)
        if (rel[g[x]][g[y]] < 0) {
          rel[g[x]][g[y]] = next;
          stack.emplace_back(g[x], g[y]);
        }
    }
    ++next;
  };
  flood(0, 0);  // the diagonal is one orbit because the action is transitive
  for (int x = 0; x < points; ++x)
    for (int y = 0; y < points; ++y)
      if (rel[x][y] < 0) flood(x, y);
  return AssociationScheme(std::move(rel), next - 1);
}

AssociationScheme build_johnson(int v, int k, std::size_t max_vertices) {
  if (k <= 0 || 2 * k > v) {
    throw ParameterError("johnson: need 0 < k <= v/2, got v=" + std::to_string(v) +
                         " k=" + std::to_string(k));
  }
  if (v > 62) throw SizeError("johnson: v must be <= 62");
  std::vector<std::uint64_t> subsets;
  // lexicographic k-subsets as bit masks
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::uint64_t mask = 0;
    for (int p : pick) mask |= std::uint64_t{1} << p;
    subsets.push_back(mask);
    if (subsets.size() > max_vertices) {
      throw SizeError("johnson: more than " + std::to_string(max_vertices) + " vertices");
    }
    int i = k - 1;
    while (i >= 0 && pick[i] == v - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  const int n = static_cast<int>(subsets.size());
  std::vector<std::vector<int>> rel(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) rel[a][b] = k - std::popcount(subsets[a] & subsets[b]);
  return AssociationScheme(std::move(rel), k);
}

AssociationScheme build_grassmann(int q, int v, int d, std::size_t max_vertices) {
  const GaloisField field(q);
  if (d <= 0 || 2 * d > v) {
    throw ParameterError("grassmann: need 0 < d <= v/2, got v=" + std::to_string(v) +
                         " d=" + std::to_string(d));
  }
  const std::uint64_t count = gaussian_binomial(q, v, d);
  if (count > max_vertices) {
    throw SizeError("grassmann: J_" + std::to_string(q) + "(" + std::to_string(v) + "," +
                    std::to_string(d) + ") has " + std::to_string(count) +
                    " vertices, above the cap of " + std::to_string(max_vertices));
  }

  // Enumerate reduced row echelon bases: pivot columns, then free entries.
  std::vector<std::vector<std::vector<int>>> bases;
  bases.reserve(count);
  std::vector<int> pivots(d);
  std::iota(pivots.begin(), pivots.end(), 0);
  while (true) {
    std::vector<std::pair<int, int>> free_slots;
    for (int r = 0; r < d; ++r)
      for (int c = pivots[r] + 1; c < v; ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free_slots.emplace_back(r, c);
    std::vector<int> digits(free_slots.size(), 0);
    while (true) {
      std::vector<std::vector<int>> m(d, std::vector<int>(v, 0));
      for (int r = 0; r < d; ++r) m[r][pivots[r]] = 1;
      for (std::size_t s = 0; s < free_slots.size(); ++s)
        m[free_slots[s].first][free_slots[s].second] = digits[s];
      bases.push_back(std::move(m));
      std::size_t s = 0;
      while (s < digits.size() && ++digits[s] == q) digits[s++] = 0;
      if (s == digits.size()) break;
    }
    int i = d - 1;
    while (i >= 0 && pivots[i] == v - d + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (int j = i + 1; j < d; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  if (bases.size() != count) {
    throw NumericalError("grassmann: enumerated " + std::to_string(bases.size()) +
                         " subspaces, expected " + std::to_string(count));
  }

  const int n = static_cast<int>(bases.size());
  std::vector<std::vector<int>> rel(n, std::vector<int>(n, 0));
  std::vector<std::vector<int>> stacked;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      stacked = bases[a];
      stacked.insert(stacked.end(), bases[b].begin(), bases[b].end());
      const int meet = 2 * d - reduce_row_echelon(field, stacked);
      rel[a][b] = rel[b][a] = d - meet;
    }
  }
  return AssociationScheme(std::move(rel), d);
}

}  // namespace krein
