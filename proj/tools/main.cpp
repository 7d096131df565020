// lie-integrate: validate inputs, evaluate bch / factorize / logderiv, and
// run the verification suite. Exit codes: 0 all checks pass, 1 check
// failures, 2 parse or usage errors.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lieint/catalog.hpp"
#include "lieint/integrator.hpp"
#include "lieint/io.hpp"
#include "lieint/suite.hpp"

using namespace lieint;

namespace {

Vec parse_vector(const std::string &spec, int dim) {
  std::vector<double> vals;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ','))
    vals.push_back(std::stod(tok));
  if (static_cast<int>(vals.size()) != dim)
    throw ParseError("expected " + std::to_string(dim) +
                     " comma-separated coordinates, got " +
                     std::to_string(vals.size()));
  return Eigen::Map<Vec>(vals.data(), dim);
}

/// "c0,c1,...;c0,c1,...;..." — one ascending-coefficient polynomial in t per
/// coordinate.
SmoothPath parse_path_spec(const std::string &spec, int dim) {
  std::vector<std::vector<double>> polys;
  std::stringstream ss(spec);
  std::string coord;
  while (std::getline(ss, coord, ';')) {
    std::vector<double> coeffs;
    std::stringstream cs(coord);
    std::string tok;
    while (std::getline(cs, tok, ','))
      coeffs.push_back(std::stod(tok));
    polys.push_back(std::move(coeffs));
  }
  if (static_cast<int>(polys.size()) != dim)
    throw ParseError("path-spec needs one polynomial per coordinate (" +
                     std::to_string(dim) + "), got " +
                     std::to_string(polys.size()));
  SmoothPath p;
  p.value = [polys, dim](double t) {
    Vec v(dim);
    for (int i = 0; i < dim; ++i) {
      double acc = 0.0;
      for (auto it = polys[i].rbegin(); it != polys[i].rend(); ++it)
        acc = acc * t + *it;
      v[i] = acc;
    }
    return v;
  };
  p.derivative = [polys, dim](double t) {
    Vec v(dim);
    for (int i = 0; i < dim; ++i) {
      double acc = 0.0;
      for (std::size_t k = polys[i].size(); k-- > 1;)
        acc = acc * t + static_cast<double>(k) * polys[i][k];
      v[i] = acc;
    }
    return v;
  };
  return p;
}

/// The positional input names either a JSON file on disk or a catalog entry.
AlgebraFile resolve_input(const std::string &source,
                          const std::string &dec_name) {
  std::ifstream probe(source);
  if (probe.good()) {
    AlgebraFile f = load_algebra_file(source);
    if (!dec_name.empty())
      throw ParseError("--decomposition selects a catalog chart; file inputs "
                       "carry their own 'decomposition' field");
    return f;
  }
  auto catalog = load_catalog();
  for (const auto &entry : catalog)
    if (entry.name == source) {
      AlgebraFile f{entry.algebra, std::nullopt};
      if (!dec_name.empty())
        f.decomposition = entry.decomposition(dec_name);
      else if (!entry.decompositions.empty())
        f.decomposition = entry.decompositions.front();
      return f;
    }
  throw ParseError(source + ": not a readable file or catalog entry");
}

int cmd_validate(const std::string &source) {
  AlgebraFile f = resolve_input(source, "");
  AlgebraValidation av = f.algebra->validate();
  std::printf("algebra %-20s %s  (antisymmetry %.3e, jacobi %.3e)\n",
              f.algebra->name().c_str(), av.pass ? "pass" : "FAIL",
              av.antisymmetry_residual, av.jacobi_residual);
  bool ok = av.pass;
  if (f.decomposition) {
    // A non-spanning decomposition is rejected at load; reaching here means
    // it passed.
    std::printf("decomposition %-14s pass  (blocks %d, condition %.3e)\n",
                f.decomposition->name().c_str(),
                f.decomposition->num_blocks(),
                f.decomposition->condition_number());
  }
  return ok ? 0 : 1;
}

int cmd_bch(const std::string &source, const std::string &xs,
            const std::string &ys, int order) {
  AlgebraFile f = resolve_input(source, "");
  BchConfig cfg;
  if (order > 0)
    cfg.max_order = order;
  Vec x = parse_vector(xs, f.algebra->dim());
  Vec y = parse_vector(ys, f.algebra->dim());
  BchResult r = bch_full(*f.algebra, x, y, cfg);
  std::cout << r.value.transpose() << "\n";
  if (r.domain_warning)
    std::fprintf(stderr,
                 "warning: operands leave the convergence ball; series "
                 "truncated at order %d (last term %.3e)\n",
                 r.orders_used, r.last_term_norm);
  return 0;
}

int cmd_factorize(const std::string &source, const std::string &zs,
                  const std::string &dec_name) {
  AlgebraFile f = resolve_input(source, dec_name);
  Decomposition D =
      f.decomposition ? *f.decomposition : trivial_decomposition(f.algebra);
  Vec z = parse_vector(zs, f.algebra->dim());
  ChartPoint p = factorize(*f.algebra, D, z);
  for (std::size_t j = 0; j < p.components.size(); ++j)
    std::cout << "x" << j + 1 << ": " << p.components[j].transpose() << "\n";
  std::printf("residual: %.3e\n", p.residual);
  return 0;
}

int cmd_logderiv(const std::string &source, const std::string &path_spec,
                 double t) {
  AlgebraFile f = resolve_input(source, "");
  SmoothPath p = parse_path_spec(path_spec, f.algebra->dim());
  GaussLegendre quad(16);
  std::cout << log_derivative(*f.algebra, p, t, quad).transpose() << "\n";
  return 0;
}

int cmd_verify(const std::string &entry_name, const std::string &file,
               const std::string &level_name, std::uint64_t seed,
               const std::string &json_out) {
  SuiteLevel level =
      level_name == "full" ? SuiteLevel::full : SuiteLevel::quick;
  std::vector<CatalogEntry> targets;
  auto catalog = load_catalog();
  if (!file.empty()) {
    AlgebraFile f = load_algebra_file(file);
    CatalogEntry e;
    e.name = f.algebra->name();
    e.algebra = f.algebra;
    e.decompositions.push_back(
        f.decomposition ? *f.decomposition : trivial_decomposition(f.algebra));
    e.notes = "loaded from " + file;
    targets.push_back(std::move(e));
  } else if (!entry_name.empty()) {
    targets.push_back(find_entry(catalog, entry_name));
  } else {
    targets = catalog;
  }

  int failures = 0;
  nlohmann::json all = nlohmann::json::array();
  for (const auto &entry : targets) {
    VerificationReport r = run_suite(entry, seed, level);
    failures += r.failed();
    std::printf("%-20s %3d/%3d checks pass\n", entry.name.c_str(), r.passed(),
                static_cast<int>(r.records.size()));
    for (const auto &rec : r.records)
      if (!rec.pass)
        std::printf("  FAIL %-50s residual %.3e tol %.3e %s\n",
                    rec.name.c_str(), rec.residual, rec.tolerance,
                    rec.error.c_str());
    all.push_back(r.to_json());
  }
  if (!json_out.empty())
    write_json_file(json_out, all.size() == 1 ? all.front() : all);
  return failures == 0 ? 0 : 1;
}

int cmd_catalog_export(const std::string &name, const std::string &out) {
  auto entry = find_entry(load_catalog(), name);
  const Decomposition *dec =
      entry.decompositions.empty() ? nullptr : &entry.decompositions.front();
  nlohmann::json j = algebra_to_json(*entry.algebra, dec);
  if (out.empty())
    std::cout << j.dump(2) << "\n";
  else
    write_json_file(out, j);
  return 0;
}

int cmd_catalog_list() {
  for (const auto &entry : load_catalog()) {
    std::printf("%-20s dim %d\n", entry.name.c_str(), entry.algebra->dim());
    for (const auto &D : entry.decompositions)
      std::printf("  chart %-16s %d block(s)\n", D.name().c_str(),
                  D.num_blocks());
    for (const auto &R : entry.representations)
      std::printf("  rep   %-16s dim_H %d%s\n", R.name().c_str(), R.dim_H(),
                  R.skew() ? " (skew)" : "");
    if (!entry.notes.empty())
      std::printf("  %s\n", entry.notes.c_str());
  }
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"numerical certification of local Lie group representations"};
  app.require_subcommand(1);

  std::string source, xs, ys, zs, dec_name, path_spec;
  std::string entry_name, file, level_name = "quick", json_out;
  std::uint64_t seed = 0;
  double t = 0.5;
  int order = 0;

  auto *validate = app.add_subcommand("validate", "validate an algebra file");
  validate->add_option("file", source)->required();

  auto *bch_cmd = app.add_subcommand("bch", "evaluate x*y");
  bch_cmd->add_option("file", source)->required();
  bch_cmd->add_option("--x", xs, "comma-separated coordinates")->required();
  bch_cmd->add_option("--y", ys, "comma-separated coordinates")->required();
  bch_cmd->add_option("--order", order, "truncation order");

  auto *fact = app.add_subcommand("factorize", "chart factorization of z");
  fact->add_option("file", source)->required();
  fact->add_option("--z", zs, "comma-separated coordinates")->required();
  fact->add_option("--decomposition", dec_name, "catalog chart name");

  auto *logd = app.add_subcommand("logderiv", "right logarithmic derivative");
  logd->add_option("file", source)->required();
  logd->add_option("--path-spec", path_spec,
                   "per-coordinate polynomials in t: 'c0,c1;c0,c1,c2;...'")
      ->required();
  logd->add_option("--t", t, "evaluation time");

  auto *verify = app.add_subcommand("verify", "run the verification suite");
  auto *opt_entry = verify->add_option("--entry", entry_name, "catalog entry");
  verify->add_option("--file", file, "algebra file")->excludes(opt_entry);
  verify->add_option("--level", level_name)
      ->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--seed", seed);
  verify->add_option("--json", json_out, "write the report here");

  auto *cat = app.add_subcommand("catalog", "fixture catalog");
  auto *cat_list = cat->add_subcommand("list", "list entries");
  std::string export_name, export_out;
  auto *cat_export =
      cat->add_subcommand("export", "write an entry's algebra file");
  cat_export->add_option("name", export_name)->required();
  cat_export->add_option("--out", export_out, "output path (default stdout)");
  cat->require_subcommand(1);

  try {
    app.parse(argc, argv);
    if (*validate)
      return cmd_validate(source);
    if (*bch_cmd)
      return cmd_bch(source, xs, ys, order);
    if (*fact)
      return cmd_factorize(source, zs, dec_name);
    if (*logd)
      return cmd_logderiv(source, path_spec, t);
    if (*verify)
      return cmd_verify(entry_name, file, level_name, seed, json_out);
    if (*cat_list)
      return cmd_catalog_list();
    if (*cat_export)
      return cmd_catalog_export(export_name, export_out);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ParseError &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
