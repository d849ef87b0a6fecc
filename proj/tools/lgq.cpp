// Command-line frontend for the locally gentle quiver toolkit.
//
// Exit codes: 0 success/verified, 1 verification failure, 2 input error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lgq/lgq.hpp"

namespace {

using namespace lgq;

struct LoadedQuiver {
  ParsedQuiver parsed;
  LocallyGentleQuiver lgq;
};

LoadedQuiver load_validated(const std::string& path) {
  ParsedQuiver p = load_quiver_file(path);
  LocallyGentleQuiver g = validate(p.quiver);
  return LoadedQuiver{std::move(p), std::move(g)};
}

// --spec maps like "x_a=q^2*t,x_b=-t"
std::map<Var, SignedMonomial> parse_spec_map(const std::string& spec, VarTable& vars) {
  std::map<Var, SignedMonomial> images;
  size_t pos = 0;
  while (pos < spec.size()) {
    size_t comma = spec.find(',', pos);
    std::string item = spec.substr(pos, comma == std::string::npos ? comma : comma - pos);
    pos = comma == std::string::npos ? spec.size() : comma + 1;
    size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw Error("bad --spec entry '" + item + "' (expected name=monomial)");
    std::string name = item.substr(0, eq);
    auto v = vars.find(name);
    if (!v) throw Error("--spec names unknown indeterminate '" + name + "'");
    images[*v] = parse_signed_monomial(item.substr(eq + 1), vars);
  }
  return images;
}

void print_matrix(const Matrix<RationalFunction>& m, const Quiver& q, const VarTable& vars,
                  std::optional<long long> series_bound) {
  DegreeWeights wts;
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) {
      std::cout << "C[" << q.vertices[i] << "," << q.vertices[j] << "] = ";
      if (series_bound)
        std::cout << series_expand(m.at(i, j), wts, *series_bound).to_string(vars)
                  << "  (degree <= " << *series_bound << ")";
      else
        std::cout << m.at(i, j).to_string(vars);
      std::cout << "\n";
    }
}

int cmd_validate(const std::string& file) {
  LoadedQuiver in = load_validated(file);
  const Quiver& q = in.parsed.quiver;
  CyclePartition parts = minimal_cycles(in.lgq);
  std::cout << "OK: locally gentle quiver with " << q.vertices.size() << " vertices, "
            << q.arrows.size() << " arrows, " << q.relations.size() << " relations\n";
  std::cout << "gentle: " << (parts.ic.empty() ? "yes" : "no") << "\n";
  std::cout << "critical: " << (is_critical(in.lgq) ? "yes" : "no") << "\n";
  return 0;
}

int cmd_cycles(const std::string& file) {
  LoadedQuiver in = load_validated(file);
  CyclePartition parts = minimal_cycles(in.lgq);
  std::cout << "full-relations cycles: " << parts.zc.size() << "\n";
  for (size_t i = 0; i < parts.zc.size(); ++i)
    std::cout << "  ZC" << i << " length " << parts.zc[i].length() << " weight "
              << parts.zc[i].weight(in.parsed.weights).to_string(in.parsed.vars) << " "
              << parts.zc[i].to_string(in.parsed.quiver) << "\n";
  std::cout << "no-relations cycles: " << parts.ic.size() << "\n";
  for (size_t i = 0; i < parts.ic.size(); ++i)
    std::cout << "  IC" << i << " length " << parts.ic[i].length() << " weight "
              << parts.ic[i].weight(in.parsed.weights).to_string(in.parsed.vars) << " "
              << parts.ic[i].to_string(in.parsed.quiver) << "\n";
  return 0;
}

int cmd_dual(const std::string& file, const std::string& out_path) {
  LoadedQuiver in = load_validated(file);
  LocallyGentleQuiver d = dual(in.lgq);
  std::string text = serialize_quiver(d.quiver(), in.parsed.weights, in.parsed.vars);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write '" + out_path + "'");
    out << text;
  }
  return 0;
}

int cmd_cartan(const std::string& file, std::optional<long long> series_bound,
               const std::string& spec) {
  LoadedQuiver in = load_validated(file);
  Matrix<RationalFunction> c = cartan_exact(in.lgq, in.parsed.weights);
  if (!spec.empty()) {
    std::map<Var, SignedMonomial> images = parse_spec_map(spec, in.parsed.vars);
    for (size_t i = 0; i < c.rows(); ++i)
      for (size_t j = 0; j < c.cols(); ++j) c.at(i, j) = c.at(i, j).substitute(images);
  }
  print_matrix(c, in.parsed.quiver, in.parsed.vars, series_bound);
  return 0;
}

int cmd_det(const std::string& file, const std::string& method) {
  LoadedQuiver in = load_validated(file);
  if (method == "formula") {
    std::cout << det_formula(in.lgq, in.parsed.weights).to_string(in.parsed.vars) << "\n";
    return 0;
  }
  if (method == "elim") {
    std::cout << det_elimination(in.lgq, in.parsed.weights).to_string(in.parsed.vars) << "\n";
    return 0;
  }
  RationalFunction f = det_formula(in.lgq, in.parsed.weights);
  RationalFunction e = det_elimination(in.lgq, in.parsed.weights);
  std::cout << "formula:     " << f.to_string(in.parsed.vars) << "\n";
  std::cout << "elimination: " << e.to_string(in.parsed.vars) << "\n";
  bool equal = f.equals(e);
  std::cout << (equal ? "EQUAL" : "UNEQUAL") << "\n";
  return equal ? 0 : 1;
}

int cmd_reduce(const std::string& file, int cycle_index, const std::string& vertex) {
  LoadedQuiver in = load_validated(file);
  CyclePartition parts = minimal_cycles(in.lgq);
  if (cycle_index < 0 || static_cast<size_t>(cycle_index) >= parts.zc.size())
    throw Error("no full-relations cycle with index " + std::to_string(cycle_index) +
                " (quiver has " + std::to_string(parts.zc.size()) + ")");
  auto v = in.parsed.quiver.vertex_index(vertex);
  if (!v) throw Error("unknown vertex '" + vertex + "'");
  ReductionOutcome out =
      reduce_step(in.lgq, in.parsed.weights, parts.zc[static_cast<size_t>(cycle_index)], *v);
  std::cout << "# extracted factors:\n";
  for (const auto& factor : out.extracted_factors)
    std::cout << "#   " << factor.to_string(in.parsed.vars) << "\n";
  std::cout << serialize_quiver(out.quiver.quiver(), out.weights, in.parsed.vars);
  return 0;
}

int cmd_koszul(const std::string& file, const std::string& vertex, int terms) {
  LoadedQuiver in = load_validated(file);
  auto v = in.parsed.quiver.vertex_index(vertex);
  if (!v) throw Error("unknown vertex '" + vertex + "'");
  GradedResolution res = resolution(in.lgq, *v, terms);
  std::cout << "resolution of the simple at vertex " << vertex << " ("
            << (res.finite ? "finite" : "truncated") << "):\n";
  for (size_t d = 0; d < res.terms.size(); ++d) {
    if (res.terms[d].empty()) continue;
    std::cout << "  degree " << d << ":";
    for (int tv : res.terms[d])
      std::cout << " P[" << in.parsed.quiver.vertices[static_cast<size_t>(tv)] << "]<-"
                << d << ">";
    std::cout << "\n";
  }
  std::cout << "gldim finite: " << (gldim_finite(in.lgq) ? "yes" : "no") << "\n";
  return 0;
}

int cmd_critical(int n, bool count_only, const std::string& emit_dir, bool dihedral) {
  if (dihedral) {
    std::cout << "dihedral orbits of closed configurations: " << count_closed_up_to_dihedral(n)
              << "\n";
    return 0;
  }
  Int closed = count_closed(n);
  std::cout << "closed=" << closed << " formula=" << hz_a_n1(n) << "\n";
  if (count_only || emit_dir.empty()) return 0;
  std::filesystem::create_directories(emit_dir);
  int index = 0;
  for (const auto& c : enumerate_Pn_prime(n)) {
    if (!is_closed(c)) continue;
    CriticalQuiver built = critical_quiver_from(c);
    std::string path = emit_dir + "/critical_n" + std::to_string(n) + "_" +
                       std::to_string(index++) + ".quiver";
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << "# " << c.to_string() << "\n"
        << serialize_quiver(built.quiver.quiver(), built.weights, built.vars);
  }
  std::cout << "wrote " << index << " quiver files to " << emit_dir << "\n";
  return 0;
}

int cmd_hz(int n, bool poly) {
  Int closed = count_closed(n);
  Int formula = hz_a_n1(n);
  bool ok = closed == formula;
  std::cout << "closed=" << closed << " formula=" << formula << (ok ? " OK" : " MISMATCH")
            << "\n";
  if (poly) {
    VarTable vars;
    bool poly_ok = hz_polynomial_check(n, vars);
    std::cout << "polynomial identity n=" << n << (poly_ok ? " OK" : " MISMATCH") << "\n";
    ok = ok && poly_ok;
  }
  return ok ? 0 : 1;
}

int cmd_verify(const std::string& file, long long max_degree) {
  LoadedQuiver in = load_validated(file);
  VerifyReport rep = verify_quiver(in.lgq, in.parsed.weights, max_degree);
  std::cout << "duality:     " << (rep.duality ? "OK" : "FAIL") << "\n";
  std::cout << "determinant: " << (rep.determinant ? "OK" : "FAIL") << "\n";
  std::cout << "oracle:      " << (rep.oracle ? "OK" : "FAIL") << " (degree <= " << max_degree
            << ")\n";
  std::cout << (rep.all() ? "VERIFIED" : "FAILED") << "\n";
  return rep.all() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted locally gentle quivers: Cartan matrices, determinants, duality"};
  app.require_subcommand(1);

  std::string file, out_path, spec, vertex, method = "both", emit_dir;
  int cycle_index = 0, terms = 10, n = 2;
  long long series_bound = -1, max_degree = 12;
  bool count_only = false, dihedral = false, poly = false;

  auto* validate_cmd = app.add_subcommand("validate", "check the gentle axioms");
  validate_cmd->add_option("file", file)->required();

  auto* cycles_cmd = app.add_subcommand("cycles", "list minimal cycles of both kinds");
  cycles_cmd->add_option("file", file)->required();

  auto* dual_cmd = app.add_subcommand("dual", "write the dual quiver");
  dual_cmd->add_option("file", file)->required();
  dual_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

  auto* cartan_cmd = app.add_subcommand("cartan", "print the weighted Cartan matrix");
  cartan_cmd->add_option("file", file)->required();
  cartan_cmd->add_option("--series", series_bound, "expand entries to this weighted degree");
  cartan_cmd->add_option("--spec", spec, "substitutions, e.g. x_a=q^2*t,x_b=-t");

  auto* det_cmd = app.add_subcommand("det", "Cartan determinant");
  det_cmd->add_option("file", file)->required();
  det_cmd->add_option("--method", method, "formula|elim|both")
      ->check(CLI::IsMember({"formula", "elim", "both"}));

  auto* reduce_cmd = app.add_subcommand("reduce", "remove one full-relations cycle");
  reduce_cmd->add_option("file", file)->required();
  reduce_cmd->add_option("--cycle", cycle_index, "index into the ZC list (see cycles)")
      ->required();
  reduce_cmd->add_option("--vertex", vertex, "vertex visited once by the cycle")->required();

  auto* koszul_cmd = app.add_subcommand("koszul", "graded resolution of a simple module");
  koszul_cmd->add_option("file", file)->required();
  koszul_cmd->add_option("--vertex", vertex)->required();
  koszul_cmd->add_option("--terms", terms, "truncation depth (default 10)");

  auto* critical_cmd = app.add_subcommand("critical", "closed configurations on the 2n-polygon");
  critical_cmd->add_option("--n", n)->required();
  critical_cmd->add_flag("--count", count_only, "count only");
  critical_cmd->add_option("--emit", emit_dir, "write the critical quivers to this directory");
  critical_cmd->add_flag("--dihedral", dihedral, "count orbits under the dihedral group");

  auto* hz_cmd = app.add_subcommand("hz", "Harer-Zagier counts");
  hz_cmd->add_option("--n", n)->required();
  hz_cmd->add_flag("--poly", poly, "also check the full polynomial identity");

  auto* verify_cmd = app.add_subcommand("verify", "duality + determinant + oracle suites");
  verify_cmd->add_option("file", file)->required();
  verify_cmd->add_option("--max-degree", max_degree, "oracle truncation degree (default 12)");

  try {
    app.parse(argc, argv);
    if (validate_cmd->parsed()) return cmd_validate(file);
    if (cycles_cmd->parsed()) return cmd_cycles(file);
    if (dual_cmd->parsed()) return cmd_dual(file, out_path);
    if (cartan_cmd->parsed())
      return cmd_cartan(file,
                        series_bound >= 0 ? std::optional<long long>(series_bound)
                                          : std::nullopt,
                        spec);
    if (det_cmd->parsed()) return cmd_det(file, method);
    if (reduce_cmd->parsed()) return cmd_reduce(file, cycle_index, vertex);
    if (koszul_cmd->parsed()) return cmd_koszul(file, vertex, terms);
    if (critical_cmd->parsed()) return cmd_critical(n, count_only, emit_dir, dihedral);
    if (hz_cmd->parsed()) return cmd_hz(n, poly);
    if (verify_cmd->parsed()) return cmd_verify(file, max_degree);
    return 2;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const lgq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
