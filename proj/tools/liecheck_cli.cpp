// Command-line front end: catalog access, verification and search
// commands over exact rational Lie algebra data.  Exit codes: 0 =
// verified / found, 1 = refuted / none exists, 2 = input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "liecheck/catalog.hpp"
#include "liecheck/complex_structure.hpp"
#include "liecheck/documents.hpp"
#include "liecheck/forms.hpp"
#include "liecheck/geometry.hpp"
#include "liecheck/representation.hpp"

using namespace liecheck;

namespace {

struct ResolvedAlgebra {
  LieAlgebra algebra;
  std::optional<SemidirectAlgebra> split; // set for ct_/ct_star_ names
  std::optional<std::string> warning;
};

std::uint64_t env_seed() {
  const char* s = std::getenv("LIECHECK_SEED");
  if (!s) return 0;
  return std::strtoull(s, nullptr, 10);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

LieAlgebra algebra_from_file(const std::string& path) {
  return algebra_from_json(parse_document(read_file(path), "lie_algebra"));
}

std::optional<Rational> opt_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_rational(text);
}

/// Accepts a catalog name, a ct_/ct_star_ prefixed catalog name, or a
/// path to a lie_algebra document.
ResolvedAlgebra resolve_algebra(const std::string& spec,
                                const std::optional<Rational>& lambda,
                                const std::optional<Rational>& eta) {
  std::string name = spec;
  int mode = 0; // 0 = plain, 1 = tangent, 2 = cotangent
  if (name.rfind("ct_star_", 0) == 0) {
    mode = 2;
    name = name.substr(8);
  } else if (name.rfind("ct_", 0) == 0) {
    mode = 1;
    name = name.substr(3);
  }
  if (auto cname = parse_catalog_name(name)) {
    std::optional<Rational> param;
    if (*cname == CatalogName::r3_lambda) param = lambda;
    if (*cname == CatalogName::r3p_eta) param = eta;
    CatalogResult base = catalog({*cname, param});
    if (mode == 1) return {tangent(base.algebra).total, tangent(base.algebra), base.warning};
    if (mode == 2)
      return {cotangent(base.algebra).total, cotangent(base.algebra), base.warning};
    return {base.algebra, std::nullopt, base.warning};
  }
  if (mode != 0)
    throw ParseError("tangent/cotangent prefixes need a catalog name: " + spec);
  return {algebra_from_file(spec), std::nullopt, std::nullopt};
}

std::string rat_str(const Rational& q) { return q.get_str(); }

void emit(const Json& report, bool as_json) {
  if (as_json) {
    std::cout << report.dump(2) << "\n";
    return;
  }
  // plain text rendering: walk scalar fields
  std::function<void(const Json&, int)> walk = [&](const Json& j, int indent) {
    std::string pad(indent, ' ');
    if (j.is_object()) {
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.value().is_object() || it.value().is_array()) {
          std::cout << pad << it.key() << ":\n";
          walk(it.value(), indent + 2);
        } else {
          std::cout << pad << it.key() << ": " << it.value().dump() << "\n";
        }
      }
    } else if (j.is_array()) {
      for (const auto& v : j) {
        if (v.is_object() || v.is_array()) {
          walk(v, indent + 2);
        } else {
          std::cout << pad << "- " << v.dump() << "\n";
        }
      }
    } else {
      std::cout << pad << j.dump() << "\n";
    }
  };
  walk(report, 0);
}

int run(int argc, char** argv) {
  CLI::App app{"liecheck: exact computations with tangent/cotangent Lie algebras"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit machine-readable JSON");

  std::string lambda_text, eta_text;
  auto add_params = [&](CLI::App* cmd) {
    cmd->add_option("--lambda", lambda_text, "parameter for r3_lambda");
    cmd->add_option("--eta", eta_text, "parameter for r3p_eta");
  };

  // catalog list | catalog get NAME
  auto* cat_cmd = app.add_subcommand("catalog", "catalog of base algebras");
  auto* cat_list = cat_cmd->add_subcommand("list", "list catalog names");
  auto* cat_get = cat_cmd->add_subcommand("get", "emit one catalog algebra");
  std::string cat_name;
  cat_get->add_option("name", cat_name)->required();
  add_params(cat_get);

  std::string alg_spec, acs_file, form_file, metric_file, rep_kind, compat_file;
  bool want_witness = false, want_symplectic = false;

  auto* tan_cmd = app.add_subcommand("tangent", "tangent algebra of a base algebra");
  tan_cmd->add_option("algebra", alg_spec)->required();
  add_params(tan_cmd);

  auto* cot_cmd = app.add_subcommand("cotangent", "cotangent algebra of a base algebra");
  cot_cmd->add_option("algebra", alg_spec)->required();
  add_params(cot_cmd);

  auto* ver_cmd = app.add_subcommand("verify-jacobi", "validate an algebra document");
  std::string ver_file;
  ver_cmd->add_option("file", ver_file)->required();

  auto* nij_cmd = app.add_subcommand("nijenhuis", "integrability of a structure");
  nij_cmd->add_option("algebra", alg_spec)->required();
  nij_cmd->add_option("--acs", acs_file)->required();
  add_params(nij_cmd);

  auto* cls_cmd = app.add_subcommand("classify-acs", "classify a complex structure");
  cls_cmd->add_option("algebra", alg_spec)->required();
  cls_cmd->add_option("--acs", acs_file)->required();
  add_params(cls_cmd);

  auto* der_cmd = app.add_subcommand("derivations", "derivation space of an algebra");
  der_cmd->add_option("algebra", alg_spec)->required();
  der_cmd->add_flag("--nonsingular-witness", want_witness);
  add_params(der_cmd);

  auto* tr_cmd = app.add_subcommand("totally-real", "totally real solution space");
  tr_cmd->add_option("algebra", alg_spec)->required();
  tr_cmd->add_option("--rep", rep_kind, "ad or coad")->required();
  tr_cmd->add_flag("--witness", want_witness);
  add_params(tr_cmd);

  auto* cf_cmd = app.add_subcommand("closed-forms", "closed two-form family");
  cf_cmd->add_option("algebra", alg_spec)->required();
  cf_cmd->add_option("--compatible-with", compat_file, "acs document");
  cf_cmd->add_flag("--symplectic-witness", want_symplectic);
  add_params(cf_cmd);

  auto* ka_cmd = app.add_subcommand("kahler", "verify a candidate pair");
  ka_cmd->add_option("algebra", alg_spec)->required();
  ka_cmd->add_option("--acs", acs_file)->required();
  ka_cmd->add_option("--form", form_file)->required();
  add_params(ka_cmd);

  auto* mg_cmd = app.add_subcommand("metric-geometry", "connection and curvature");
  mg_cmd->add_option("algebra", alg_spec)->required();
  mg_cmd->add_option("--metric", metric_file)->required();
  add_params(mg_cmd);

  // let the global --json flag appear after any subcommand
  std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* a) {
    for (CLI::App* sub : a->get_subcommands([](const CLI::App*) { return true; })) {
      sub->fallthrough();
      allow_fallthrough(sub);
    }
  };
  allow_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Json report;
  report["kind"] = "report";
  report["seed"] = env_seed();
  int exit_code = 0;

  auto resolved = [&]() {
    return resolve_algebra(alg_spec, opt_rational(lambda_text), opt_rational(eta_text));
  };

  if (cat_list->parsed()) {
    Json names = Json::array();
    for (auto n : catalog_names()) names.push_back(catalog_name_string(n));
    report["catalog"] = names;
  } else if (cat_get->parsed()) {
    auto cname = parse_catalog_name(cat_name);
    if (!cname) throw ParseError("unknown catalog name: " + cat_name);
    std::optional<Rational> param;
    if (*cname == CatalogName::r3_lambda) param = opt_rational(lambda_text);
    if (*cname == CatalogName::r3p_eta) param = opt_rational(eta_text);
    CatalogResult r = catalog({*cname, param});
    report["algebra"] = algebra_document(r.algebra);
    if (r.warning) report["warning"] = *r.warning;
  } else if (tan_cmd->parsed() || cot_cmd->parsed()) {
    ResolvedAlgebra base = resolved();
    SemidirectAlgebra s =
        tan_cmd->parsed() ? tangent(base.algebra) : cotangent(base.algebra);
    report["algebra"] = algebra_document(s.total);
    report["h_dim"] = s.h_dim;
    if (base.warning) report["warning"] = *base.warning;
  } else if (ver_cmd->parsed()) {
    try {
      LieAlgebra g = algebra_from_file(ver_file);
      report["valid"] = true;
      report["dim"] = g.dim();
    } catch (const JacobiViolation& e) {
      report["valid"] = false;
      report["violation"] = e.what();
      exit_code = 1;
    }
  } else if (nij_cmd->parsed()) {
    ResolvedAlgebra r = resolved();
    MatrixQ jm = matrix_document_payload(parse_document(read_file(acs_file), "acs"));
    AlmostComplexStructure J(r.algebra, jm);
    IntegrabilityReport rep = is_integrable(J);
    bool closure = eigenspace_closure(J);
    report["integrable"] = rep.integrable;
    report["eigenspace_closed"] = closure;
    if (!rep.integrable) {
      report["violating_pair"] = {rep.violating_pair->first + 1,
                                  rep.violating_pair->second + 1};
      Json v = Json::array();
      for (const auto& x : rep.violation_value) v.push_back(rat_str(x));
      report["nijenhuis_value"] = v;
      exit_code = 1;
    }
  } else if (cls_cmd->parsed()) {
    ResolvedAlgebra r = resolved();
    MatrixQ jm = matrix_document_payload(parse_document(read_file(acs_file), "acs"));
    AlmostComplexStructure J(r.algebra, jm);
    report["integrable"] = is_integrable(J).integrable;
    ClassifyReport cls = classify(J, r.split);
    report["abelian"] = cls.abelian;
    report["bi_invariant"] = cls.bi_invariant;
    if (cls.totally_real) report["totally_real"] = *cls.totally_real;
    AscendingSeries s = ascending_series(J);
    report["nilpotent"] = s.nilpotent;
    if (s.nilpotent) report["nilpotency_step"] = s.step;
    Json dims = Json::array();
    for (const auto& t : s.terms) dims.push_back(t.dim());
    report["ascending_series_dims"] = dims;
  } else if (der_cmd->parsed()) {
    ResolvedAlgebra r = resolved();
    MatFamily d = derivation_space(r.algebra);
    report["dimension"] = d.dim();
    Json basis = Json::array();
    for (const auto& b : d.basis) basis.push_back(matrix_to_json(b));
    report["basis"] = basis;
    if (want_witness) {
      NonsingularWitness w = nonsingular_witness(d);
      report["identically_singular"] = w.identically_singular;
      if (w.identically_singular) {
        report["witness"] = nullptr;
        exit_code = 1;
      } else {
        report["witness"] = matrix_to_json(*w.witness);
        report["witness_determinant"] = rat_str(det(*w.witness));
      }
    }
  } else if (tr_cmd->parsed()) {
    ResolvedAlgebra r = resolved();
    if (rep_kind != "ad" && rep_kind != "coad")
      throw ParseError("--rep must be ad or coad");
    Representation rho =
        rep_kind == "ad" ? adjoint_rep(r.algebra) : coadjoint_rep(r.algebra);
    MatFamily fam = totally_real_space(r.algebra, rho);
    report["dimension"] = fam.dim();
    Json basis = Json::array();
    for (const auto& b : fam.basis) basis.push_back(matrix_to_json(b));
    report["basis"] = basis;
    if (want_witness) {
      NonsingularWitness w = nonsingular_witness(fam);
      report["identically_singular"] = w.identically_singular;
      if (w.identically_singular) {
        exit_code = 1;
      } else {
        report["witness"] = matrix_to_json(*w.witness);
      }
    }
  } else if (cf_cmd->parsed()) {
    ResolvedAlgebra r = resolved();
    FormFamily fam = [&]() {
      if (!compat_file.empty()) {
        MatrixQ jm =
            matrix_document_payload(parse_document(read_file(compat_file), "acs"));
        AlmostComplexStructure J(r.algebra, jm);
        report["compatible_with"] = compat_file;
        return compatible_closed_space(r.algebra, J);
      }
      return closed_form_space(r.algebra);
    }();
    report["dimension"] = fam.dim();
    Json basis = Json::array();
    for (const auto& b : fam.directions) basis.push_back(matrix_to_json(b));
    report["basis"] = basis;
    if (want_symplectic) {
      SymplecticWitness w = symplectic_witness(fam);
      report["none_exists"] = w.none_exists;
      report["pfaffian"] = w.pfaffian_poly.to_string(fam.params);
      if (w.none_exists) {
        exit_code = 1;
      } else {
        report["witness"] = matrix_to_json(*w.witness);
      }
    }
  } else if (ka_cmd->parsed()) {
    ResolvedAlgebra r = resolved();
    MatrixQ jm = matrix_document_payload(parse_document(read_file(acs_file), "acs"));
    MatrixQ wm =
        matrix_document_payload(parse_document(read_file(form_file), "two_form"));
    AlmostComplexStructure J(r.algebra, jm);
    TwoForm omega(r.algebra, wm);

    bool integrable = is_integrable(J).integrable;
    bool closed = is_closed(omega).closed;
    bool nondeg = is_nondegenerate(omega);
    MatrixQ pulled = J.matrix().transpose() * omega.matrix() * J.matrix();
    bool compatible = pulled == omega.matrix();
    report["integrable"] = integrable;
    report["closed"] = closed;
    report["nondegenerate"] = nondeg;
    report["compatible"] = compatible;
    if (integrable && closed && nondeg && compatible) {
      Metric g = kahler_metric(omega, J);
      report["metric"] = matrix_to_json(g.matrix());
      report["hermitian"] = hermitian_check(J, g);
      Connection c = levi_civita(r.algebra, g);
      Json gammas = Json::array();
      for (std::size_t i = 0; i < r.algebra.dim(); ++i)
        gammas.push_back(matrix_to_json(c.gamma(i)));
      report["connection"] = gammas;
      CurvatureReport cr = curvature_report(c);
      report["flat"] = cr.flat;
      report["ricci"] = matrix_to_json(cr.ricci);
      report["ricci_flat"] = cr.ricci_flat;
      report["parallel_J"] = is_parallel(c, J);
      if (r.split) {
        try {
          report["h_part_totally_geodesic"] =
              is_totally_geodesic(c, r.split->h_part());
        } catch (const NotASubalgebra&) {
          report["h_part_totally_geodesic"] = nullptr;
        }
      }
    } else {
      exit_code = 1;
    }
  } else if (mg_cmd->parsed()) {
    ResolvedAlgebra r = resolved();
    MatrixQ mm =
        matrix_document_payload(parse_document(read_file(metric_file), "metric"));
    Metric g(r.algebra, mm);
    Connection c = levi_civita(r.algebra, g);
    Json gammas = Json::array();
    for (std::size_t i = 0; i < r.algebra.dim(); ++i)
      gammas.push_back(matrix_to_json(c.gamma(i)));
    report["connection"] = gammas;
    CurvatureReport cr = curvature_report(c);
    report["flat"] = cr.flat;
    report["ricci"] = matrix_to_json(cr.ricci);
    report["ricci_flat"] = cr.ricci_flat;
    report["ad_invariant"] = is_ad_invariant(r.algebra, g);
    auto [pos, neg] = signature(g.matrix());
    report["signature"] = {pos, neg};
    if (r.split) {
      try {
        report["h_part_totally_geodesic"] = is_totally_geodesic(c, r.split->h_part());
      } catch (const NotASubalgebra&) {
        report["h_part_totally_geodesic"] = nullptr;
      }
    }
  }

  emit(report, as_json);
  return exit_code;
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
