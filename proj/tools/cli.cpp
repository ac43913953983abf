#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "krein/anyons.hpp"
#include "krein/error.hpp"
#include "krein/hypergroup.hpp"
#include "krein/io.hpp"
#include "krein/qmc.hpp"

namespace krein::cli {
namespace {

using io::json;

constexpr const char* kVersion = "krein 0.3.0";
constexpr const char* kNormalizationNotice =
    "normalization: hypergroup weights are (e_i * e_j)(k) = m_k q_ij^k / (m_i m_j) with\n"
    "E_i o E_j = (1/|X|) sum_k q_ij^k E_k. Since sum_k m_k q_ij^k = m_i m_j, an extra 1/|X|\n"
    "factor would make every slice sum to 1/|X|; it is omitted so each slice is a\n"
    "probability distribution. Normalized idempotents are e_j = (|X|/m_j) E_j, e_0 = J.";

struct Output {
  std::ostream& out;
  bool as_json = false;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\n\r") - b + 1);
}

// Inline JSON literal (array, object or number) or a file path.
json value_or_file(const std::string& arg) {
  const std::string t = trim(arg);
  if (!t.empty() && (t[0] == '[' || t[0] == '{' || t[0] == '-' || std::isdigit(static_cast<unsigned char>(t[0])))) {
    return io::parse(t, "argument");
  }
  return io::load_json(t);
}

std::string fixed(double v, int digits = 8) {
  if (std::abs(v) < 0.5 * std::pow(10.0, -digits)) v = 0.0;
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

std::string fixed(Complex z, int digits = 8) {
  if (std::abs(z.imag()) < 1e-12) return fixed(z.real(), digits);
  std::ostringstream os;
  os << fixed(z.real(), digits) << (z.imag() < 0 ? "-" : "+") << fixed(std::abs(z.imag()), digits)
     << "i";
  return os.str();
}

template <typename Matrix>
void print_matrix(std::ostream& os, const Matrix& m, int digits = 8) {
  std::vector<std::vector<std::string>> cells(m.rows());
  std::size_t width = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      cells[i].push_back(fixed(m(i, k), digits));
      width = std::max(width, cells[i].back().size());
    }
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << (i == 0 ? "[[" : " [");
    for (Eigen::Index k = 0; k < m.cols(); ++k)
      os << (k ? ", " : "") << std::setw(static_cast<int>(width)) << cells[i][k];
    os << (i + 1 == m.rows() ? "]]" : "],") << '\n';
  }
}

void print_distribution(std::ostream& os, const Distribution& p) {
  os << "[";
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? ", " : "") << fixed(p[i]);
  os << "]\n";
}

Coin parse_coin(const std::string& arg, int size) {
  const json j = value_or_file(arg);
  if (j.is_number_integer()) return Coin::index(j.get<int>(), size);
  Distribution w = io::distribution_from_json(j);
  if (static_cast<int>(w.size()) != size) throw ValidationError("coin has the wrong length");
  return Coin::mixture(std::move(w));
}

Distribution parse_start(const std::string& arg, int size) { return parse_coin(arg, size).weights; }

struct SchemeSpectrum {
  BoseMesnerDecomposition dec;
  KreinTensor q;
  Hypergroup h;
};

SchemeSpectrum spectrum_of(const std::string& path) {
  auto scheme = io::scheme_from_json(io::load_json(path));
  auto dec = decompose(scheme);
  auto q = krein_parameters(dec);
  auto h = hypergroup_from(dec, q);
  return {std::move(dec), std::move(q), std::move(h)};
}

FusionSystem load_system(const std::string& name) {
  if (name == "ising" || name == "fibonacci") return builtin_fusion_system(name);
  if (name.size() > 1 && (name[0] == 'z' || name[0] == 'Z') &&
      std::all_of(name.begin() + 1, name.end(), ::isdigit)) {
    return cyclic_fusion_system(std::stoi(name.substr(1)));
  }
  return io::fusion_from_json(io::load_json(name));
}

std::vector<Permutation> parse_generators(const std::string& arg) {
  const json j = value_or_file(arg);
  if (!j.is_array()) throw ValidationError("generators: expected an array of permutations");
  return j.get<std::vector<Permutation>>();
}

// ---------------------------------------------------------------------------
// scheme

struct BuildArgs {
  std::string family;
  std::string group = "Z2";
  std::string cayley;
  std::string generators;
  int points = 0;
  int v = 0, k = 0, q = 0, d = 0;
  std::size_t max_vertices = kDefaultVertexCap;
  std::string out;
};

void scheme_build(const BuildArgs& a, Output& o) {
  auto group = [&] {
    return a.cayley.empty() ? FiniteGroup::named(a.group) : io::group_from_json(io::load_json(a.cayley));
  };
  std::optional<AssociationScheme> s;
  if (a.family == "group") {
    s = build_group_scheme(group());
  } else if (a.family == "conjugacy") {
    s = build_conjugacy_scheme(group());
  } else if (a.family == "orbit") {
    if (a.generators.empty()) throw ValidationError("orbit family needs --generators");
    const auto gens = parse_generators(a.generators);
    const int points = a.points > 0 ? a.points : (gens.empty() ? 0 : static_cast<int>(gens[0].size()));
    s = build_orbit_scheme(gens, points);
  } else if (a.family == "johnson") {
    s = build_johnson(a.v, a.k, a.max_vertices);
  } else if (a.family == "grassmann") {
    s = build_grassmann(a.q, a.v, a.d, a.max_vertices);
  } else {
    throw ValidationError("unknown family '" + a.family + "'");
  }
  const json j = io::to_json(*s);
  if (!a.out.empty()) {
    io::save_json(a.out, j);
    if (o.as_json) {
      o.out << json{{"n", s->n()}, {"d", s->d()}, {"path", a.out}}.dump() << '\n';
    } else {
      o.out << "wrote scheme n=" << s->n() << " d=" << s->d() << " to " << a.out << '\n';
    }
  } else {
    o.out << j.dump() << '\n';
  }
}

int scheme_verify(const std::string& path, Output& o) {
  const auto s = io::scheme_from_json(io::load_json(path), /*validate=*/false);
  const auto report = verify_axioms(s);
  if (o.as_json) {
    json v = json::array();
    for (const auto& x : report.violations)
      v.push_back(json{{"axiom", x.axiom}, {"witness", x.witness}, {"detail", x.detail}});
    o.out << json{{"passed", report.passed}, {"commutative", report.commutative}, {"violations", v}}.dump()
          << '\n';
  } else if (report.passed) {
    o.out << "passed, " << (report.commutative ? "commutative" : "non-commutative") << '\n';
  } else {
    o.out << "failed\n";
    for (const auto& x : report.violations) {
      o.out << "  axiom (" << x.axiom << ") at [";
      for (std::size_t i = 0; i < x.witness.size(); ++i) o.out << (i ? ", " : "") << x.witness[i];
      o.out << "]: " << x.detail << '\n';
    }
  }
  return report.passed ? 0 : 1;
}

void scheme_spectrum(const std::string& path, const std::string& out_path, Output& o) {
  const auto dec = decompose(io::scheme_from_json(io::load_json(path)));
  const json j = io::to_json(dec);
  if (!out_path.empty()) io::save_json(out_path, j);
  if (o.as_json) {
    o.out << j.dump() << '\n';
    return;
  }
  o.out << "n = " << dec.n() << ", d = " << dec.d() << "\nmultiplicities:";
  for (int m : dec.multiplicities) o.out << ' ' << m;
  o.out << "\neigenmatrix P (row i: eigenvalues of A_0..A_d on E_i):\n";
  print_matrix(o.out, dec.eigenmatrix_P);
  o.out << "eigenmatrix Q:\n";
  print_matrix(o.out, dec.eigenmatrix_Q);
  const auto r = residuals(dec);
  o.out << "residuals: orthogonality " << r.orthogonality << ", completeness " << r.completeness
        << ", reconstruction " << r.reconstruction << '\n';
}

void scheme_params(const std::string& path, const std::string& kind, const std::string& out_path,
                   Output& o) {
  const auto s = io::scheme_from_json(io::load_json(path));
  json j;
  std::ostringstream table;
  if (kind == "intersection") {
    const auto p = intersection_numbers(s);
    j = io::to_json(p);
    for (int i = 0; i <= p.d(); ++i)
      for (int k = 0; k <= p.d(); ++k)
        for (int l = 0; l <= p.d(); ++l)
          if (p.p(i, k, l) != 0) table << "p[" << i << "][" << k << "]^" << l << " = " << p.p(i, k, l) << '\n';
  } else if (kind == "krein") {
    const auto q = krein_parameters(decompose(s));
    j = io::to_json(q);
    for (int i = 0; i <= q.d(); ++i)
      for (int k = 0; k <= q.d(); ++k)
        for (int l = 0; l <= q.d(); ++l)
          if (std::abs(q.q(i, k, l)) > 1e-12)
            table << "q[" << i << "][" << k << "]^" << l << " = " << fixed(q.q(i, k, l)) << '\n';
    table << "Krein condition: satisfied (tolerance " << q.tolerance_used << ")\n";
  } else {
    throw ValidationError("--kind must be intersection or krein");
  }
  if (!out_path.empty()) io::save_json(out_path, j);
  if (o.as_json) {
    o.out << j.dump() << '\n';
  } else {
    o.out << table.str();
  }
}

// ---------------------------------------------------------------------------
// walk / qmc / szegedy / anyon

struct WalkArgs {
  std::string scheme, coin = "1", start = "0", csv;
  int steps = 10;
};

void walk_hypergroup(const WalkArgs& a, Output& o) {
  const auto sp = spectrum_of(a.scheme);
  const int size = sp.h.size();
  const auto path = walk(sp.h, parse_coin(a.coin, size), parse_start(a.start, size), a.steps);
  if (!a.csv.empty()) {
    std::ofstream csv(a.csv);
    if (!csv) throw ValidationError("cannot write " + a.csv);
    csv << "step";
    for (int k = 0; k < size; ++k) csv << ",state" << k;
    csv << '\n' << std::setprecision(17);
    for (std::size_t s = 0; s < path.size(); ++s) {
      csv << s;
      for (double x : path[s]) csv << ',' << x;
      csv << '\n';
    }
  }
  if (o.as_json) {
    o.out << json{{"states", path}}.dump() << '\n';
    return;
  }
  o.out << "step";
  for (int k = 0; k < size; ++k) o.out << "  state" << k;
  o.out << '\n';
  for (std::size_t s = 0; s < path.size(); ++s) {
    o.out << std::setw(4) << s;
    for (double x : path[s]) o.out << "  " << fixed(x);
    o.out << '\n';
  }
}

void qmc_dilate(const std::string& dist, Output& o) {
  const RMatrix u = dilation_unitary(io::distribution_from_json(value_or_file(dist)));
  if (o.as_json) {
    o.out << io::to_json(u).dump() << '\n';
  } else {
    print_matrix(o.out, u);
  }
}

void qmc_entangled(const std::string& p, const std::string& m, const std::string& n, Output& o) {
  const auto te = make_transition_expectation(io::rmatrix_from_json(value_or_file(p)));
  const CMatrix mm = io::cmatrix_from_json(value_or_file(m));
  const CMatrix nn = io::cmatrix_from_json(value_or_file(n));
  const CMatrix stinespring = apply_transition_expectation(te, mm, nn);
  const double agreement = max_abs(stinespring - apply_transition_expectation_schur(te, mm, nn));
  if (o.as_json) {
    o.out << json{{"result", io::to_json(stinespring)}, {"schur_form_residual", agreement}}.dump() << '\n';
  } else {
    print_matrix(o.out, stinespring);
    o.out << "Stinespring vs Schur form residual: " << agreement << '\n';
  }
}

void qmc_schur(const std::string& scheme, const std::string& coin, const std::string& rho,
               int steps, Output& o) {
  const auto sp = spectrum_of(scheme);
  const auto channel = SchurChannel::from_coin(sp.h, parse_coin(coin, sp.h.size()));
  const auto cp = certify_cp(channel);
  if (!cp.completely_positive) {
    throw CertificationError("schur channel is not completely positive (min Choi eigenvalue " +
                             std::to_string(cp.choi_min_eigenvalue) + ")");
  }
  const auto run = iterate_channel(channel, io::cmatrix_from_json(value_or_file(rho)), steps);
  if (o.as_json) {
    json states = json::array();
    for (const auto& s : run.states) states.push_back(io::to_json(s));
    o.out << json{{"states", states},
                  {"renormalization", run.renormalization},
                  {"choi_min_eigenvalue", cp.choi_min_eigenvalue}}
                 .dump()
          << '\n';
    return;
  }
  o.out << "channel completely positive (min Choi eigenvalue " << cp.choi_min_eigenvalue << ")\n";
  for (std::size_t s = 0; s < run.states.size(); ++s) {
    o.out << "step " << s;
    if (s > 0) o.out << " (trace before renormalization " << fixed(run.renormalization[s - 1]) << ")";
    o.out << ":\n";
    print_matrix(o.out, run.states[s]);
  }
}

void szegedy_cmd(const std::string& transition, const std::string& convention,
                 const std::string& out_path, Output& o) {
  Stochastic conv;
  if (convention == "column") {
    conv = Stochastic::kColumns;
  } else if (convention == "row") {
    conv = Stochastic::kRows;
  } else {
    throw ValidationError("--convention must be column or row");
  }
  const auto w = szegedy_walk(io::rmatrix_from_json(value_or_file(transition)), conv);
  const Eigen::Index dim = w.unitary.rows();
  const double unitarity = max_abs(w.unitary.adjoint() * w.unitary - CMatrix::Identity(dim, dim));
  if (!out_path.empty()) io::save_json(out_path, io::to_json(w.unitary));
  if (o.as_json) {
    o.out << json{{"dim_v", w.dim_v}, {"unitarity_residual", unitarity}, {"U", io::to_json(w.unitary)}}.dump()
          << '\n';
    return;
  }
  o.out << "Szegedy walk on " << w.dim_v << " vertices (" << dim << "-dim pair space)\n"
        << "unitarity residual |U*U - I|_max = " << unitarity << '\n';
  if (out_path.empty()) print_matrix(o.out, w.unitary);
}

int anyon_op(const std::string& system, const std::string& op, const std::vector<std::string>& rest,
             Output& o) {
  const auto fs = load_system(system);
  if (op == "fuse") {
    if (rest.size() != 2) throw ValidationError("fuse needs two labels");
    const auto v = fuse(fs, fs.label_index(rest[0]), fs.label_index(rest[1]));
    json j = json::object();
    std::string text;
    for (int c = 0; c < fs.rank(); ++c) {
      if (v[c] == 0) continue;
      j[fs.labels[c]] = v[c];
      text += (text.empty() ? "" : " + ") + (v[c] > 1 ? std::to_string(v[c]) + " " : "") + fs.labels[c];
    }
    if (o.as_json) {
      o.out << j.dump() << '\n';
    } else {
      o.out << rest[0] << " x " << rest[1] << " = " << text << '\n';
    }
    return 0;
  }
  if (op == "dims") {
    if (o.as_json) {
      json j = json::object();
      for (int a = 0; a < fs.rank(); ++a) j[fs.labels[a]] = fs.dims[a];
      o.out << j.dump() << '\n';
    } else {
      for (int a = 0; a < fs.rank(); ++a) o.out << "d_" << fs.labels[a] << " = " << std::setprecision(15) << fs.dims[a] << '\n';
    }
    return 0;
  }
  if (op == "braid") {
    const auto b = braid_generators(fs);
    if (o.as_json) {
      o.out << json{{"anyon", fs.labels[b.anyon]},
                    {"total", fs.labels[b.total]},
                    {"sigma1", io::to_json(b.sigma1)},
                    {"sigma2", io::to_json(b.sigma2)},
                    {"B", io::to_json(b.braid)},
                    {"braid_relation_residual", b.braid_relation_residual}}
                       .dump()
            << '\n';
    } else {
      o.out << "fusion space of " << fs.labels[b.anyon] << " x " << fs.labels[b.anyon] << " x "
            << fs.labels[b.anyon] << " -> " << fs.labels[b.total] << ", channels:";
      for (int e : b.basis) o.out << ' ' << fs.labels[e];
      o.out << "\nsigma1 = R:\n";
      print_matrix(o.out, b.sigma1);
      o.out << "sigma2 = F R F^-1:\n";
      print_matrix(o.out, b.sigma2);
      o.out << "B = F R^2 F^-1:\n";
      print_matrix(o.out, b.braid);
      o.out << "braid relation residual (up to global phase): " << b.braid_relation_residual << '\n';
    }
    return b.braid_relation_residual < kConsistencyTolerance ? 0 : 2;
  }
  if (op == "pentagon" || op == "hexagon") {
    const auto r = op == "pentagon" ? verify_pentagon(fs) : verify_hexagon(fs);
    if (o.as_json) {
      o.out << json{{"max_residual", r.max_residual}, {"passed", r.passed}, {"worst", r.worst}}.dump() << '\n';
    } else {
      o.out << op << " residual " << r.max_residual << (r.passed ? " (passed)" : " (FAILED)") << '\n';
    }
    return r.passed ? 0 : 2;
  }
  throw ValidationError("unknown --op '" + op + "' (fuse, dims, braid, pentagon, hexagon)");
}

void anyon_bridge(const std::string& scheme, const std::string& system, Output& o) {
  const auto fs = load_system(system);
  const auto dec = decompose(io::scheme_from_json(io::load_json(scheme)));
  const auto q = krein_parameters(dec);
  const auto r = scheme_fusion_bridge(dec, q, fs);
  if (o.as_json) {
    o.out << json{{"match", r.match},
                  {"bijection", r.bijection},
                  {"scalars", r.scalars},
                  {"deviation", r.deviation},
                  {"integrality_deviation", r.integrality_deviation},
                  {"candidates", r.candidates_tried}}
                 .dump()
          << '\n';
    return;
  }
  o.out << (r.match ? "match" : "no integral match") << " (best deviation " << r.deviation
        << ", " << r.candidates_tried << " bijections tried)\n";
  for (int a = 0; a < fs.rank(); ++a) {
    o.out << "  " << fs.labels[a] << " -> E_" << r.bijection[a] << "  scale " << std::setprecision(10)
          << r.scalars[a] << '\n';
  }
  o.out << "distance to nearest non-negative integer tensor: " << r.integrality_deviation << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Association schemes, hypergroup walks, quantum Markov chains and anyon fusion data",
               "krein"};
  app.require_subcommand(1);
  Output o{out};
  bool version = false;
  app.add_flag("--json", o.as_json, "Machine-readable JSON output");
  app.add_flag("--version", version, "Print version and the hypergroup normalization notice");

  std::function<int()> action;

  // scheme
  auto* scheme = app.add_subcommand("scheme", "Build, verify and analyse association schemes");
  scheme->require_subcommand(1);

  BuildArgs build;
  auto* build_cmd = scheme->add_subcommand("build", "Construct a scheme");
  build_cmd->add_option("--family", build.family, "group | conjugacy | orbit | johnson | grassmann")->required();
  build_cmd->add_option("--group", build.group, "Built-in group: Zn, Dn, S3, S4, Q8");
  build_cmd->add_option("--cayley", build.cayley, "Cayley table JSON file");
  build_cmd->add_option("--generators", build.generators, "Permutations (JSON literal or file)");
  build_cmd->add_option("--points", build.points, "Point count for --family orbit");
  build_cmd->add_option("--v", build.v, "Ground set size / ambient dimension");
  build_cmd->add_option("--k", build.k, "Subset size (johnson)");
  build_cmd->add_option("--q", build.q, "Field order (grassmann)");
  build_cmd->add_option("--d", build.d, "Subspace dimension (grassmann)");
  build_cmd->add_option("--max-vertices", build.max_vertices, "Vertex cap");
  build_cmd->add_option("--out", build.out, "Output file (default: stdout)");
  build_cmd->callback([&] { action = [&] { scheme_build(build, o); return 0; }; });

  std::string verify_path;
  auto* verify_cmd = scheme->add_subcommand("verify", "Check the scheme axioms");
  verify_cmd->add_option("scheme", verify_path, "Scheme JSON")->required();
  verify_cmd->callback([&] { action = [&] { return scheme_verify(verify_path, o); }; });

  std::string spectrum_path, spectrum_out;
  auto* spectrum_cmd = scheme->add_subcommand("spectrum", "Primitive idempotents and eigenmatrices");
  spectrum_cmd->add_option("scheme", spectrum_path, "Scheme JSON")->required();
  spectrum_cmd->add_option("--out", spectrum_out, "Write the decomposition JSON here");
  spectrum_cmd->callback([&] { action = [&] { scheme_spectrum(spectrum_path, spectrum_out, o); return 0; }; });

  std::string params_path, params_kind = "intersection", params_out;
  auto* params_cmd = scheme->add_subcommand("params", "Intersection numbers or Krein parameters");
  params_cmd->add_option("scheme", params_path, "Scheme JSON")->required();
  params_cmd->add_option("--kind", params_kind, "intersection | krein");
  params_cmd->add_option("--out", params_out, "Write the tensor JSON here");
  params_cmd->callback([&] { action = [&] { scheme_params(params_path, params_kind, params_out, o); return 0; }; });

  // walk
  auto* walk_group = app.add_subcommand("walk", "Classical walks");
  walk_group->require_subcommand(1);
  WalkArgs walk_args;
  auto* walk_cmd = walk_group->add_subcommand("hypergroup", "Random walk on the scheme hypergroup");
  walk_cmd->add_option("scheme", walk_args.scheme, "Scheme JSON")->required();
  walk_cmd->add_option("--coin", walk_args.coin, "Coin index or weights");
  walk_cmd->add_option("--start", walk_args.start, "Start index or distribution");
  walk_cmd->add_option("--steps", walk_args.steps, "Number of steps")->check(CLI::NonNegativeNumber);
  walk_cmd->add_option("--csv", walk_args.csv, "Write the trajectory as CSV");
  walk_cmd->callback([&] { action = [&] { walk_hypergroup(walk_args, o); return 0; }; });

  // qmc
  auto* qmc = app.add_subcommand("qmc", "Quantum Markov chain constructions");
  qmc->require_subcommand(1);
  std::string dist;
  auto* dilate_cmd = qmc->add_subcommand("dilate", "Orthogonal dilation of a probability vector");
  dilate_cmd->add_option("--dist", dist, "Distribution (JSON literal or file)")->required();
  dilate_cmd->callback([&] { action = [&] { qmc_dilate(dist, o); return 0; }; });

  std::string te_p, te_m, te_n;
  auto* ent_cmd = qmc->add_subcommand("entangled", "Apply the entangled transition expectation");
  ent_cmd->add_option("--transition", te_p, "Row-stochastic P")->required();
  ent_cmd->add_option("--M", te_m, "Matrix M")->required();
  ent_cmd->add_option("--N", te_n, "Matrix N")->required();
  ent_cmd->callback([&] { action = [&] { qmc_entangled(te_p, te_m, te_n, o); return 0; }; });

  std::string sc_scheme, sc_coin = "1", sc_rho;
  int sc_steps = 1;
  auto* schur_cmd = qmc->add_subcommand("schur", "Iterate the Schur channel of a hypergroup coin");
  schur_cmd->add_option("--scheme", sc_scheme, "Scheme JSON")->required();
  schur_cmd->add_option("--coin", sc_coin, "Coin index or weights");
  schur_cmd->add_option("--rho", sc_rho, "Initial density matrix")->required();
  schur_cmd->add_option("--steps", sc_steps, "Number of steps")->check(CLI::NonNegativeNumber);
  schur_cmd->callback([&] { action = [&] { qmc_schur(sc_scheme, sc_coin, sc_rho, sc_steps, o); return 0; }; });

  // szegedy
  std::string sz_d, sz_conv = "column", sz_out;
  auto* sz_cmd = app.add_subcommand("szegedy", "Szegedy walk unitary of a stochastic matrix");
  sz_cmd->add_option("--transition", sz_d, "Stochastic matrix D")->required();
  sz_cmd->add_option("--convention", sz_conv, "column | row");
  sz_cmd->add_option("--out", sz_out, "Write U as JSON");
  sz_cmd->callback([&] { action = [&] { szegedy_cmd(sz_d, sz_conv, sz_out, o); return 0; }; });

  // anyon
  std::string system = "ising", op;
  std::vector<std::string> op_args;
  auto* anyon = app.add_subcommand("anyon", "Fusion systems: fuse, dims, braid, pentagon");
  anyon->add_option("--system", system, "ising | fibonacci | zN | fusion JSON file");
  anyon->add_option("--op", op, "fuse | dims | braid | pentagon | hexagon");
  anyon->add_option("labels", op_args, "Labels for --op fuse");
  std::string bridge_scheme, bridge_system = "ising";
  auto* bridge_cmd = anyon->add_subcommand("bridge", "Compare scheme Krein parameters with fusion rules");
  bridge_cmd->add_option("--scheme", bridge_scheme, "Scheme JSON")->required();
  bridge_cmd->add_option("--system", bridge_system, "ising | fibonacci | zN | fusion JSON file");
  bridge_cmd->callback([&] { action = [&] { anyon_bridge(bridge_scheme, bridge_system, o); return 0; }; });
  anyon->callback([&] {
    if (anyon->got_subcommand(bridge_cmd)) return;
    if (op.empty()) throw CLI::RequiredError("--op");
    action = [&] { return anyon_op(system, op, op_args, o); };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    if (std::find(args.begin(), args.end(), "--version") != args.end()) {
      out << kVersion << '\n' << kNormalizationNotice << '\n';
      return 0;
    }
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    return action ? action() : 1;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace krein::cli
