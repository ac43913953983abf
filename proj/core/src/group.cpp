#include "krein/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <string>

#include "krein/error.hpp"

namespace krein {
namespace {

std::string triple(int a, int b, int c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

Permutation compose(const Permutation& x, const Permutation& y) {
  // (x*y)(i) = x(y(i))
  Permutation out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = x[y[i]];
  return out;
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> cayley, std::vector<std::string> names)
    : cayley_(std::move(cayley)), names_(std::move(names)) {
  const int n = order();
  if (n == 0) throw ConstructionError("group: empty Cayley table");
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(cayley_[x].size()) != n) {
      throw ConstructionError("group: Cayley row " + std::to_string(x) + " has wrong length");
    }
    std::vector<bool> seen(n, false);
    for (int y = 0; y < n; ++y) {
      const int v = cayley_[x][y];
      if (v < 0 || v >= n) {
        throw ConstructionError("group: entry (" + std::to_string(x) + ", " + std::to_string(y) +
                                ") out of range");
      }
      if (seen[v]) {
        throw ConstructionError("group: Cayley row " + std::to_string(x) +
                                " is not a permutation (repeats " + std::to_string(v) + ")");
      }
      seen[v] = true;
    }
  }
  for (int y = 0; y < n; ++y) {
    std::vector<bool> seen(n, false);
    for (int x = 0; x < n; ++x) {
      if (seen[cayley_[x][y]]) {
        throw ConstructionError("group: Cayley column " + std::to_string(y) +
                                " is not a permutation");
      }
      seen[cayley_[x][y]] = true;
    }
  }

  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = cayley_[e][x] == x && cayley_[x][e] == x;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw ConstructionError("group: no two-sided identity element");

  inverse_.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (cayley_[x][y] == identity_) {
        if (cayley_[y][x] != identity_) {
          throw ConstructionError("group: element " + std::to_string(x) +
                                  " has a one-sided inverse only");
        }
        inverse_[x] = y;
      }
    }
  }

  if (n <= kAssociativityCheckLimit) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (cayley_[cayley_[a][b]][c] != cayley_[a][cayley_[b][c]]) {
            throw ConstructionError("group: associativity fails on triple " + triple(a, b, c));
          }
  }

  if (!names_.empty() && static_cast<int>(names_.size()) != n) {
    throw ConstructionError("group: expected " + std::to_string(n) + " element names");
  }
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<Permutation>& generators,
                                           int degree) {
  if (degree <= 0) throw ParameterError("group: permutation degree must be positive");
  for (const auto& g : generators) {
    Permutation sorted = g;
    std::sort(sorted.begin(), sorted.end());
    Permutation iota(degree);
    std::iota(iota.begin(), iota.end(), 0);
    if (sorted != iota) throw ConstructionError("group: generator is not a permutation of 0..n-1");
  }

  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Permutation> elements{id};
  std::map<Permutation, int> index{{id, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : generators) {
      Permutation next = compose(g, elements[head]);
      if (index.emplace(next, static_cast<int>(elements.size())).second) {
        elements.push_back(std::move(next));
      }
    }
  }

  const int n = static_cast<int>(elements.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) table[x][y] = index.at(compose(elements[x], elements[y]));
  return FiniteGroup(std::move(table));
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n <= 0) throw ParameterError("group: Z_n needs n >= 1");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) table[x][y] = (x + y) % n;
  return FiniteGroup(std::move(table));
}

FiniteGroup FiniteGroup::dihedral(int n) {
  if (n < 3) throw ParameterError("group: D_n needs n >= 3");
  Permutation rotation(n), reflection(n);
  for (int i = 0; i < n; ++i) {
    rotation[i] = (i + 1) % n;
    reflection[i] = (n - i) % n;
  }
  return from_permutations({rotation, reflection}, n);
}

FiniteGroup FiniteGroup::symmetric(int degree) {
  if (degree < 1) throw ParameterError("group: S_n needs n >= 1");
  if (degree == 1) return cyclic(1);
  Permutation swap(degree), cycle(degree);
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[0], swap[1]);
  for (int i = 0; i < degree; ++i) cycle[i] = (i + 1) % degree;
  return from_permutations({swap, cycle}, degree);
}

FiniteGroup FiniteGroup::quaternion() {
  // Elements: 1, -1, i, -i, j, -j, k, -k encoded as (unit u in {1,i,j,k}, sign).
  // unit products: table[u][v] = (sign, unit)
  static const int unit_prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int unit_sign[4][4] = {
      {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  auto encode = [](int unit, int sign) { return 2 * unit + (sign < 0 ? 1 : 0); };
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const int ux = x / 2, uy = y / 2;
      const int sign = (x % 2 ? -1 : 1) * (y % 2 ? -1 : 1) * unit_sign[ux][uy];
      table[x][y] = encode(unit_prod[ux][uy], sign);
    }
  }
  return FiniteGroup(std::move(table), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

FiniteGroup FiniteGroup::named(const std::string& name) {
  if (name.size() < 2) throw ParameterError("group: unknown group name '" + name + "'");
  const char kind = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  int param = 0;
  try {
    std::size_t used = 0;
    param = std::stoi(name.substr(1), &used);
    if (used != name.size() - 1) throw std::invalid_argument(name);
  } catch (const std::exception&) {
    throw ParameterError("group: unknown group name '" + name + "'");
  }
  switch (kind) {
    case 'Z':
    case 'C':
      return cyclic(param);
    case 'S':
      if (param > 6) throw SizeError("group: S_n supported for n <= 6");
      return symmetric(param);
    case 'D':
      return dihedral(param);
    case 'Q':
      if (param != 8) break;
      return quaternion();
    default:
      break;
  }
  throw ParameterError("group: unknown group name '" + name + "'");
}

bool FiniteGroup::is_abelian() const {
  const int n = order();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (cayley_[x][y] != cayley_[y][x]) return false;
  return true;
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const {
  const int n = order();
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < n; ++x) {
    if (cls[x] >= 0) continue;
    std::vector<int> members;
    for (int g = 0; g < n; ++g) {
      const int c = mul(mul(g, x), inverse_[g]);
      if (cls[c] < 0) {
        cls[c] = static_cast<int>(classes.size());
        members.push_back(c);
      }
    }
    std::sort(members.begin(), members.end());
    classes.push_back(std::move(members));
  }
  return classes;
}

}  // namespace krein
