// hallforge: exact Hall-algebra computations for type-A quiver
// representations over prime fields.
//
// Subcommands: catalog, product, verify, table. Exit codes: 0 success,
// 1 verification failure, 2 usage or parse error, 3 resource limit,
// 4 out-of-catalog, 5 I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hallforge/dh1.hpp"
#include "hallforge/dh2.hpp"
#include "hallforge/errors.hpp"
#include "hallforge/expr.hpp"
#include "hallforge/suites.hpp"

using json = nlohmann::ordered_json;
using namespace hallforge;

namespace {

enum ExitCode {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kResource = 3,
  kOutOfCatalog = 4,
  kIo = 5,
};

struct CommonArgs {
  std::string quiver_spec;
  std::uint32_t q = 2;
  std::string max_dim;
  std::uint64_t limit = 0;  // 0 = default / env
};

std::uint64_t effective_limit(std::uint64_t flag_value) {
  if (flag_value) return flag_value;
  if (const char* env = std::getenv("HALLFORGE_LIMIT")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw std::invalid_argument("HALLFORGE_LIMIT must be a positive integer");
  }
  return kDefaultEnumLimit;
}

DimVector parse_max_dim(const std::string& text, int n) {
  DimVector out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("--max-dim must be a comma list of nonnegative integers");
    out.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (static_cast<int>(out.size()) != n)
    throw std::invalid_argument("--max-dim needs one entry per vertex");
  return out;
}

json coeff_json(const Coeff& c) {
  return json{{"rat", c.rat().get_str()}, {"srt", c.srt().get_str()}};
}

json iso_json(const Catalog& cat, ClassId id) {
  json out = json::array();
  for (const auto& [iv, m] : cat.cls(id).parts()) out.push_back(json::array({iv.lo, iv.hi, m}));
  return out;
}

json rh_json(const Catalog& cat, const RHElement& x) {
  json terms = json::array();
  for (const auto& [key, c] : x) {
    json t;
    t["coeff"] = coeff_json(c);
    t["k"] = key.k;
    t["m0"] = iso_json(cat, key.m);
    terms.push_back(std::move(t));
  }
  return json{{"terms", std::move(terms)}};
}

json dh2_json(const Catalog& cat, const DH2Element& x) {
  json terms = json::array();
  for (const auto& [key, c] : x) {
    json t;
    t["coeff"] = coeff_json(c);
    t["k"] = key.k;
    t["ks"] = key.ks;
    t["m0"] = iso_json(cat, key.m0);
    t["m1"] = iso_json(cat, key.m1);
    terms.push_back(std::move(t));
  }
  return json{{"terms", std::move(terms)}};
}

json dh2red_json(const Catalog& cat, const DH2Reduced& x) {
  json terms = json::array();
  for (const auto& [key, c] : x) {
    json t;
    t["coeff"] = coeff_json(c);
    t["k"] = key.gamma;
    t["m0"] = iso_json(cat, key.m0);
    t["m1"] = iso_json(cat, key.m1);
    terms.push_back(std::move(t));
  }
  return json{{"terms", std::move(terms)}};
}

json dh1_json(const Catalog& cat, const DH1Element& x) {
  json terms = json::array();
  for (const auto& [m, c] : x) {
    json t;
    t["coeff"] = coeff_json(c);
    t["m0"] = iso_json(cat, m);
    terms.push_back(std::move(t));
  }
  return json{{"terms", std::move(terms)}};
}

int cmd_catalog(const CommonArgs& common, const std::string& format) {
  Quiver quiver = Quiver::parse(common.quiver_spec);
  DimVector dmax = parse_max_dim(common.max_dim, quiver.n());
  Catalog cat(quiver, PrimeField(common.q), dmax, effective_limit(common.limit));

  if (format == "json") {
    json out;
    out["quiver"] = quiver.text();
    out["q"] = common.q;
    out["max_dim"] = dmax;
    json classes = json::array();
    for (ClassId id = 0; id < cat.size(); ++id) {
      json c;
      c["iso"] = cat.cls(id).to_string();
      c["dim"] = cat.dim(id);
      c["aut"] = cat.aut(id).get_str();
      classes.push_back(std::move(c));
    }
    out["classes"] = std::move(classes);
    json hom = json::array(), ext = json::array();
    for (ClassId a = 0; a < cat.size(); ++a) {
      json hrow = json::array(), erow = json::array();
      for (ClassId b = 0; b < cat.size(); ++b) {
        hrow.push_back(cat.hom(a, b));
        erow.push_back(cat.ext1(a, b));
      }
      hom.push_back(std::move(hrow));
      ext.push_back(std::move(erow));
    }
    out["hom"] = std::move(hom);
    out["ext"] = std::move(ext);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "catalog for " << quiver.text() << " over F_" << common.q << ", bound "
              << dim_to_string(dmax) << ": " << cat.size() << " classes\n";
    for (ClassId id = 0; id < cat.size(); ++id)
      std::cout << "  " << id << "  " << cat.cls(id).to_string() << "  dim "
                << dim_to_string(cat.dim(id)) << "  aut " << cat.aut(id).get_str() << "\n";
  }
  return kOk;
}

DimVector expr_dim_bound(const ElementExpr& e, int n) {
  DimVector bound(n, 0);
  for (const auto& term : e.terms) {
    DimVector d(n, 0);
    for (const auto& f : term.factors) {
      if (f.kind != ExprFactor::kU) continue;
      d = dim_add(d, f.m0.dim_vector(n));
      if (f.has_m1) d = dim_add(d, f.m1.dim_vector(n));
    }
    for (int i = 0; i < n; ++i) bound[i] = std::max(bound[i], d[i]);
  }
  return bound;
}

int cmd_product(const CommonArgs& common, const std::string& algebra, const std::string& lhs,
                const std::string& rhs, const std::string& format) {
  Quiver quiver = Quiver::parse(common.quiver_spec);
  const int n = quiver.n();
  ElementExpr le = parse_element(lhs, common.q);
  ElementExpr re = parse_element(rhs, common.q);

  DimVector dmax = common.max_dim.empty()
                       ? dim_add(expr_dim_bound(le, n), expr_dim_bound(re, n))
                       : parse_max_dim(common.max_dim, n);
  Catalog cat(quiver, PrimeField(common.q), dmax, effective_limit(common.limit));

  json out;
  std::string text;
  if (algebra == "rh") {
    RingelHall alg(cat);
    RHElement prod = alg.product(eval_rh(alg, le), eval_rh(alg, re));
    out = rh_json(cat, prod);
    text = to_text(cat, prod);
  } else if (algebra == "dh2" || algebra == "dh2red") {
    DH2 alg(cat);
    DH2Element prod = alg.product(eval_dh2(alg, le), eval_dh2(alg, re));
    if (algebra == "dh2red") {
      DH2Reduced red = alg.reduce(prod);
      out = dh2red_json(cat, red);
      text = to_text(cat, red);
    } else {
      out = dh2_json(cat, prod);
      text = to_text(cat, prod);
    }
  } else if (algebra == "dh1" || algebra == "dhz1") {
    DH1 alg(cat);
    DH1Element prod = algebra == "dh1"
                          ? alg.product_u(eval_dh1(alg, le), eval_dh1(alg, re))
                          : alg.product_mu(eval_dh1(alg, le), eval_dh1(alg, re));
    out = dh1_json(cat, prod);
    text = to_text(cat, prod);
  } else {
    throw CLI::ValidationError("--algebra must be one of rh, dh2, dh2red, dh1, dhz1");
  }

  if (format == "json")
    std::cout << out.dump(2) << "\n";
  else
    std::cout << text << "\n";
  return kOk;
}

int cmd_verify(const CommonArgs& common, const std::string& suite, std::uint64_t samples,
               std::uint64_t seed) {
  SuiteConfig cfg;
  cfg.quiver = Quiver::parse(common.quiver_spec);
  cfg.q = common.q;
  cfg.dmax = parse_max_dim(common.max_dim, cfg.quiver.n());
  cfg.limit = effective_limit(common.limit);
  cfg.samples = samples;
  cfg.seed = seed;

  SuiteReport rep;
  if (suite == "green")
    rep = run_green(cfg);
  else if (suite == "assoc-dh2")
    rep = run_assoc_dh2(cfg);
  else if (suite == "assoc-dh1")
    rep = run_assoc_dh1(cfg);
  else if (suite == "assoc-dhz1")
    rep = run_assoc_dhz1(cfg);
  else if (suite == "drinfeld")
    rep = run_drinfeld(cfg);
  else if (suite == "phi")
    rep = run_phi(cfg);
  else if (suite == "prop32")
    rep = run_ext_aggregate(cfg);
  else if (suite == "rp-sum")
    rep = run_rp_sum(cfg);
  else if (suite == "triangular")
    rep = run_triangular(cfg);
  else if (suite == "k-relations")
    rep = run_k_relations(cfg);
  else if (suite == "grading")
    rep = run_grading(cfg);
  else if (suite == "aut-crosscheck")
    rep = run_aut_crosscheck(cfg);
  else
    throw CLI::ValidationError("unknown suite '" + suite + "'");

  std::cout << rep.summary() << "\n";
  return rep.ok() ? kOk : kVerifyFailed;
}

int cmd_table(const CommonArgs& common, const std::string& algebra, const std::string& out_path) {
  Quiver quiver = Quiver::parse(common.quiver_spec);
  DimVector dmax = parse_max_dim(common.max_dim, quiver.n());
  // generators live below the bound, products reach twice that
  Catalog cat(quiver, PrimeField(common.q), scale_dim(dmax, 2), effective_limit(common.limit));

  std::vector<ClassId> gens = ids_within(cat, dmax);
  json entries = json::array();
  DimVector z = dim_zero(quiver.n());

  if (algebra == "rh") {
    RingelHall alg(cat);
    for (ClassId a : gens)
      for (ClassId b : gens) {
        json e;
        e["lhs"] = json{{"m0", iso_json(cat, a)}};
        e["rhs"] = json{{"m0", iso_json(cat, b)}};
        e["product"] = rh_json(cat, alg.product(alg.monomial(a, z, Coeff::one(common.q)),
                                                alg.monomial(b, z, Coeff::one(common.q))));
        entries.push_back(std::move(e));
      }
  } else if (algebra == "dh2" || algebra == "dh2red") {
    DH2 alg(cat);
    std::vector<std::pair<ClassId, ClassId>> keys;
    for (ClassId a : gens)
      for (ClassId b : gens) keys.emplace_back(a, b);
    for (auto [a0, a1] : keys)
      for (auto [b0, b1] : keys) {
        json e;
        e["lhs"] = json{{"m0", iso_json(cat, a0)}, {"m1", iso_json(cat, a1)}};
        e["rhs"] = json{{"m0", iso_json(cat, b0)}, {"m1", iso_json(cat, b1)}};
        DH2Element prod = alg.product(alg.monomial(DH2Key{z, z, a0, a1}, Coeff::one(common.q)),
                                      alg.monomial(DH2Key{z, z, b0, b1}, Coeff::one(common.q)));
        if (algebra == "dh2red")
          e["product"] = dh2red_json(cat, alg.reduce(prod));
        else
          e["product"] = dh2_json(cat, prod);
        entries.push_back(std::move(e));
      }
  } else if (algebra == "dh1" || algebra == "dhz1") {
    DH1 alg(cat);
    for (ClassId a : gens)
      for (ClassId b : gens) {
        json e;
        e["lhs"] = json{{"m0", iso_json(cat, a)}};
        e["rhs"] = json{{"m0", iso_json(cat, b)}};
        DH1Element prod =
            algebra == "dh1"
                ? alg.product_u(alg.monomial(a, Coeff::one(common.q)),
                                alg.monomial(b, Coeff::one(common.q)))
                : alg.product_mu(alg.monomial(a, Coeff::one(common.q)),
                                 alg.monomial(b, Coeff::one(common.q)));
        e["product"] = dh1_json(cat, prod);
        entries.push_back(std::move(e));
      }
  } else {
    throw CLI::ValidationError("--algebra must be one of rh, dh2, dh2red, dh1, dhz1");
  }

  json out;
  out["algebra"] = algebra;
  out["quiver"] = quiver.text();
  out["q"] = common.q;
  out["max_dim"] = dmax;
  out["entries"] = std::move(entries);

  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
    return kIo;
  }
  file << out.dump(2) << "\n";
  file.flush();
  if (!file) {
    std::cerr << "error: write to '" << out_path << "' failed\n";
    return kIo;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Hall-algebra computations for type-A quiver representations"};
  app.require_subcommand(1);

  CommonArgs common;
  std::string algebra = "dh2", lhs, rhs, format = "text", suite, out_path;
  std::uint64_t samples = 0, seed = 0;

  auto add_common = [&](CLI::App* sub, bool need_max_dim) {
    sub->add_option("--quiver", common.quiver_spec, "quiver spec, e.g. a2:>")->required();
    sub->add_option("--q", common.q, "prime field order")->required();
    auto* md = sub->add_option("--max-dim", common.max_dim, "dimension bound, comma list");
    if (need_max_dim) md->required();
    sub->add_option("--limit", common.limit, "enumeration cap (default 2^20, env HALLFORGE_LIMIT)");
  };

  CLI::App* cat_cmd = app.add_subcommand("catalog", "list all classes below the bound");
  add_common(cat_cmd, true);
  cat_cmd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* prod_cmd = app.add_subcommand("product", "multiply two elements");
  add_common(prod_cmd, false);
  prod_cmd->add_option("--algebra", algebra, "rh, dh2, dh2red, dh1 or dhz1")
      ->check(CLI::IsMember({"rh", "dh2", "dh2red", "dh1", "dhz1"}));
  prod_cmd->add_option("--lhs", lhs, "left element expression")->required();
  prod_cmd->add_option("--rhs", rhs, "right element expression")->required();
  prod_cmd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* ver_cmd = app.add_subcommand("verify", "run an identity suite");
  ver_cmd->add_option("suite", suite,
                      "green, assoc-dh2, assoc-dh1, assoc-dhz1, drinfeld, phi, prop32, "
                      "rp-sum, triangular, k-relations, grading or aut-crosscheck")
      ->required();
  add_common(ver_cmd, true);
  ver_cmd->add_option("--samples", samples, "random cases instead of the full grid (0 = all)");
  ver_cmd->add_option("--seed", seed, "seed for sampled suites");

  CLI::App* tab_cmd = app.add_subcommand("table", "write the full multiplication table");
  add_common(tab_cmd, true);
  tab_cmd->add_option("--algebra", algebra, "rh, dh2, dh2red, dh1 or dhz1")
      ->check(CLI::IsMember({"rh", "dh2", "dh2red", "dh1", "dhz1"}));
  tab_cmd->add_option("--out", out_path, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (cat_cmd->parsed()) return cmd_catalog(common, format);
    if (prod_cmd->parsed()) return cmd_product(common, algebra, lhs, rhs, format);
    if (ver_cmd->parsed()) return cmd_verify(common, suite, samples, seed);
    if (tab_cmd->parsed()) return cmd_table(common, algebra, out_path);
    return kUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const resource_limit_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResource;
  } catch (const out_of_catalog_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOutOfCatalog;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
}
