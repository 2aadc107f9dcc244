#include "stablerep/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "stablerep/fi.hpp"
#include "stablerep/json_io.hpp"
#include "stablerep/modoracle.hpp"
#include "stablerep/stablecat.hpp"

namespace stablerep {

namespace {

Partition parse_partition_arg(const std::string& text) {
  try {
    return Partition::parse(text);
  } catch (const std::exception& e) {
    throw CLI::ValidationError(std::string("partition: ") + e.what());
  }
}

// Stable tabloid from an alias, inline JSON, or @file.
StableTabloid parse_tabloid_arg(const std::string& text, const Partition& shape,
                                const Partition& type) {
  if (text == "id") {
    if (!(shape == type))
      throw CLI::ValidationError("alias 'id' needs equal shape and type");
    return StableTabloid::identity(shape);
  }
  if (text == "dp") {
    if (!(shape == Partition({1})) || !(type == Partition({1})))
      throw CLI::ValidationError("alias 'dp' is the shape (1), type (1) tabloid");
    return StableTabloid{shape, type, {{1, 0}}};
  }
  if (text == "sum") {
    if (!shape.empty() || !(type == Partition({1})))
      throw CLI::ValidationError("alias 'sum' is the shape (), type (1) tabloid");
    return StableTabloid{shape, type, {}};
  }
  if (text == "aug") {
    if (!(shape == Partition({1})) || !type.empty())
      throw CLI::ValidationError("alias 'aug' is the shape (1), type () tabloid");
    return StableTabloid{shape, type, {{1}}};
  }
  std::string body = text;
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw CLI::ValidationError("cannot read " + text.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  Json j = Json::parse(body, nullptr, false);
  if (j.is_discarded()) throw CLI::ValidationError("tabloid is not valid JSON");
  try {
    StableTabloid t = stable_tabloid_from_json(j);
    if (!(t.shape == shape) || !(t.type == type))
      throw error("tabloid shape/type does not match the flags");
    return t;
  } catch (const error& e) {
    throw CLI::ValidationError(e.what());
  }
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
  return out;
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << "\n"; }

Json period_json(const PeriodResult& r) {
  Json j{{"found", r.found}};
  if (r.found) {
    j["period"] = r.period;
    j["preperiod"] = r.preperiod;
  }
  return j;
}

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void write(std::ostream& out) const {
    for (std::size_t i = 0; i < header.size(); ++i)
      out << header[i] << (i + 1 < header.size() ? "," : "");
    out << "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i)
        out << row[i] << (i + 1 < row.size() ? "," : "");
      out << "\n";
    }
  }
};


}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact workbench for stable permutation-module calculus"};
  app.require_subcommand(1);

  std::string format = "json";
  std::uint64_t seed = 1;
  int jobs = 1;
  app.add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", seed);
  app.add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  std::string shape_s, type_s, mid_s, lambda_s, mu_s, alpha_s, beta_s, tabloid_s;
  std::string values_s, diffs_s, file_s, perm_s, specht_s;
  int n = -1, m = -1, r = 1, ell = 0, n0 = -1, n1 = -1, texp = 0;
  std::int64_t p_in = 2, base = 0, t_residue = 0;

  CLI::App* tabloids = app.add_subcommand("tabloids", "stable tabloids of a hom-space");
  tabloids->add_option("--shape", shape_s)->required();
  tabloids->add_option("--type", type_s)->required();
  tabloids->add_option("--n", n);

  CLI::App* homdim = app.add_subcommand("homdim", "stable hom-space dimension");
  homdim->add_option("--shape", shape_s)->required();
  homdim->add_option("--type", type_s)->required();

  CLI::App* clmatrix = app.add_subcommand("clmatrix", "Carter-Lusztig matrix at a level");
  clmatrix->add_option("--shape", shape_s)->required();
  clmatrix->add_option("--type", type_s)->required();
  clmatrix->add_option("--tabloid", tabloid_s)->required();
  clmatrix->add_option("--n", n)->required();
  clmatrix->add_option("--p", p_in);
  bool cl_mod = false;
  clmatrix->add_flag("--mod", cl_mod, "reduce entries mod --p");

  CLI::App* structconst = app.add_subcommand(
      "structconst", "composition structure constants (polynomial, or concrete with --n)");
  structconst->add_option("--shape", shape_s)->required();
  structconst->add_option("--mid", mid_s)->required();
  structconst->add_option("--type", type_s)->required();
  structconst->add_option("--alpha", alpha_s)->required();
  structconst->add_option("--beta", beta_s)->required();
  structconst->add_option("--n", n);

  CLI::App* interp = app.add_subcommand("interp", "interpolate integer values");
  interp->add_option("--base", base);
  interp->add_option("--values", values_s)->required();
  bool interp_period = false;
  interp->add_option("--p", p_in);
  interp->add_flag("--period", interp_period, "also report the period mod --p");

  CLI::App* evalt = app.add_subcommand("eval-t", "structure constants at a p-adic point");
  evalt->add_option("--shape", shape_s)->required();
  evalt->add_option("--mid", mid_s)->required();
  evalt->add_option("--type", type_s)->required();
  evalt->add_option("--alpha", alpha_s)->required();
  evalt->add_option("--beta", beta_s)->required();
  evalt->add_option("--p", p_in)->required();
  evalt->add_option("--t-residue", t_residue)->required();
  evalt->add_option("--t-exp", texp)->required();

  CLI::App* checkeq = app.add_subcommand("check-equiv", "compare mod-p tables at two levels");
  checkeq->add_option("--r", r)->required();
  checkeq->add_option("--p", p_in)->required();
  checkeq->add_option("--n", n)->required();
  checkeq->add_option("--m", m)->required();

  CLI::App* tensor = app.add_subcommand("tensor", "tensor-product decomposition");
  tensor->add_option("--lambda", lambda_s)->required();
  tensor->add_option("--mu", mu_s)->required();
  tensor->add_option("--n", n);

  CLI::App* restrict_cmd = app.add_subcommand("restrict", "restriction decomposition");
  restrict_cmd->add_option("--lambda", lambda_s)->required();
  restrict_cmd->add_option("--ell", ell)->required();
  restrict_cmd->add_option("--n", n);

  CLI::App* induce_cmd = app.add_subcommand("induce", "induction product");
  induce_cmd->add_option("--mu", mu_s)->required();
  induce_cmd->add_option("--lambda", lambda_s)->required();
  induce_cmd->add_option("--n", n);

  CLI::App* spechtdim = app.add_subcommand("specht-dim", "number of standard tableaux");
  spechtdim->add_option("--lambda", lambda_s)->required();

  CLI::App* ddim = app.add_subcommand("d-dim", "dimension of the irreducible head");
  ddim->add_option("--lambda", lambda_s)->required();
  ddim->add_option("--p", p_in)->required();

  CLI::App* decomp = app.add_subcommand("decomp", "composition factors");
  decomp->add_option("--n", n);
  decomp->add_option("--m", m);
  decomp->add_option("--p", p_in)->required();
  decomp->add_option("--perm", perm_s, "chop the permutation module M(partition)");
  decomp->add_option("--specht", specht_s, "chop the Specht module of a partition");

  CLI::App* fi_cmd = app.add_subcommand("fi", "cokernel dimensions and invariants over a range");
  fi_cmd->add_option("--file", file_s)->required();
  fi_cmd->add_option("--n0", n0)->required();
  fi_cmd->add_option("--n1", n1)->required();
  fi_cmd->add_option("--p", p_in)->required();

  CLI::App* period_cmd = app.add_subcommand("period", "minimal period of a polynomial mod p");
  period_cmd->add_option("--offset", base);
  period_cmd->add_option("--diffs", diffs_s)->required();
  period_cmd->add_option("--p", p_in)->required();

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  const bool csv = format == "csv";
  try {
    if (*tabloids) {
      Partition shape = parse_partition_arg(shape_s), type = parse_partition_arg(type_s);
      auto list = enumerate_stable(shape, type);
      if (csv) throw CLI::ValidationError("tabloids has no csv form");
      Json items = Json::array();
      for (const StableTabloid& t : list)
        items.push_back(n >= 0 ? to_json(instantiate(t, n)) : to_json(t));
      emit(out, Json{{"shape", to_json(shape)}, {"type", to_json(type)},
                     {"count", list.size()}, {"tabloids", items}});
    } else if (*homdim) {
      Partition shape = parse_partition_arg(shape_s), type = parse_partition_arg(type_s);
      std::size_t count = enumerate_stable(shape, type).size();
      if (csv)
        CsvTable{{"count"}, {{std::to_string(count)}}}.write(out);
      else
        emit(out, Json{{"count", count}});
    } else if (*clmatrix) {
      Partition shape = parse_partition_arg(shape_s), type = parse_partition_arg(type_s);
      StableTabloid tau = parse_tabloid_arg(tabloid_s, shape, type);
      if (csv) throw CLI::ValidationError("clmatrix has no csv form");
      ConcreteMap cm = cl_mod ? build_cl_matrix(instantiate(tau, n), Prime(p_in))
                              : build_cl_matrix(instantiate(tau, n));
      Json entries = Json::array();
      for (std::int64_t j = 0; j < cm.mat.cols; ++j)
        for (const auto& [i, v] : cm.mat.col[static_cast<std::size_t>(j)])
          entries.push_back(Json::array({i, j, cl_mod ? v % p_in : v}));
      emit(out, Json{{"source", to_json(cm.source_shape)},
                     {"target", to_json(cm.target_shape)},
                     {"n", cm.n},
                     {"rows", cm.mat.rows},
                     {"cols", cm.mat.cols},
                     {"entries", entries}});
    } else if (*structconst) {
      Partition shape = parse_partition_arg(shape_s), midp = parse_partition_arg(mid_s),
                type = parse_partition_arg(type_s);
      StableTabloid alpha = parse_tabloid_arg(alpha_s, shape, midp);
      StableTabloid beta = parse_tabloid_arg(beta_s, midp, type);
      if (csv) throw CLI::ValidationError("structconst has no csv form");
      Json terms = Json::array();
      if (n >= 0) {
        for (const auto& [tau, c] : structure_constants_concrete(alpha, beta, n))
          terms.push_back(Json{{"tau", to_json(tau)}, {"value", c}});
        emit(out, Json{{"alpha", to_json(alpha)}, {"beta", to_json(beta)}, {"n", n},
                       {"terms", terms}});
      } else {
        for (const auto& [tau, poly] : compose_generic(alpha, beta))
          terms.push_back(Json{{"tau", to_json(tau)}, {"poly", to_json(poly)}});
        emit(out, Json{{"alpha", to_json(alpha)}, {"beta", to_json(beta)}, {"terms", terms}});
      }
    } else if (*interp) {
      std::vector<BigInt> values;
      for (std::int64_t v : parse_int_list(values_s)) values.emplace_back(v);
      if (values.empty()) throw CLI::ValidationError("--values must be nonempty");
      IvPoly f = IvPoly::from_values(base, values);
      Json j = to_json(f);
      if (interp_period) j["period"] = period_mod_p(f, Prime(p_in));
      if (csv) {
        CsvTable table{{"offset", "diffs"}, {}};
        std::string ds;
        for (const BigInt& d : f.diffs()) ds += (ds.empty() ? "" : " ") + d.str();
        table.rows.push_back({std::to_string(f.offset()), ds});
        table.write(out);
      } else {
        emit(out, j);
      }
    } else if (*evalt) {
      Partition shape = parse_partition_arg(shape_s), midp = parse_partition_arg(mid_s),
                type = parse_partition_arg(type_s);
      StableTabloid alpha = parse_tabloid_arg(alpha_s, shape, midp);
      StableTabloid beta = parse_tabloid_arg(beta_s, midp, type);
      if (csv) throw CLI::ValidationError("eval-t has no csv form");
      PAdicResidue t(Prime(p_in), texp, t_residue);
      HomEntry table = compose_generic(alpha, beta);
      Json terms = Json::array();
      for (const auto& [tau, v] : evaluate_entry(table, t))
        terms.push_back(Json{{"tau", to_json(tau)}, {"value", v}});
      emit(out, Json{{"alpha", to_json(alpha)}, {"beta", to_json(beta)}, {"p", p_in},
                     {"residue", t_residue}, {"exp", texp}, {"terms", terms}});
    } else if (*checkeq) {
      if (csv) throw CLI::ValidationError("check-equiv has no csv form");
      EquivalenceReport rep = check_perm_equivalence(r, Prime(p_in), n, m, 8, jobs);
      Json ws = Json::array();
      for (const EquivalenceWitness& w : rep.witnesses)
        ws.push_back(Json{{"mu", to_json(w.mu)},
                          {"lambda", to_json(w.lambda)},
                          {"nu", to_json(w.nu)},
                          {"alpha", to_json(w.alpha)},
                          {"beta", to_json(w.beta)},
                          {"tau", to_json(w.tau)},
                          {"value_n", w.value_n},
                          {"value_m", w.value_m}});
      emit(out, Json{{"r", rep.r}, {"p", rep.p}, {"n", rep.n}, {"m", rep.m},
                     {"size_ok", rep.size_ok}, {"divisibility_ok", rep.divisibility_ok},
                     {"weak_divisibility_ok", rep.weak_divisibility_ok},
                     {"agree", rep.agree}, {"witnesses", ws}});
    } else if (*tensor) {
      Partition lambda = parse_partition_arg(lambda_s), mu = parse_partition_arg(mu_s);
      std::vector<Partition> summands =
          n >= 0 ? tensor_decompose_concrete(pad(lambda, n), pad(mu, n))
                 : stable_tensor(lambda, mu);
      std::map<Partition, int> mult;
      for (const Partition& s : summands) ++mult[s];
      if (csv) {
        CsvTable table{{"partition", "multiplicity"}, {}};
        for (const auto& [part, k] : mult)
          table.rows.push_back({"\"" + part.to_string() + "\"", std::to_string(k)});
        table.write(out);
      } else {
        Json items = Json::array();
        for (const auto& [part, k] : mult)
          items.push_back(Json{{"partition", to_json(part)}, {"multiplicity", k}});
        emit(out, Json{{"lambda", to_json(lambda)}, {"mu", to_json(mu)},
                       {"summands", items}});
      }
    } else if (*restrict_cmd) {
      Partition lambda = parse_partition_arg(lambda_s);
      std::vector<std::pair<Partition, Partition>> pairs;
      if (n >= 0)
        pairs = restrict_decompose(lambda, ell, n);
      else
        pairs = stable_restrict(lambda, ell);
      std::map<std::pair<Partition, Partition>, int> mult;
      for (const auto& pr : pairs) ++mult[pr];
      if (csv) {
        CsvTable table{{"mu", "nu", "multiplicity"}, {}};
        for (const auto& [pr, k] : mult)
          table.rows.push_back({"\"" + pr.first.to_string() + "\"",
                                "\"" + pr.second.to_string() + "\"", std::to_string(k)});
        table.write(out);
      } else {
        Json items = Json::array();
        for (const auto& [pr, k] : mult)
          items.push_back(Json{{"mu", to_json(pr.first)}, {"nu", to_json(pr.second)},
                               {"multiplicity", k}});
        emit(out, Json{{"lambda", to_json(lambda)}, {"ell", ell}, {"pairs", items}});
      }
    } else if (*induce_cmd) {
      Partition mu = parse_partition_arg(mu_s), lambda = parse_partition_arg(lambda_s);
      Partition result = n >= 0 ? induce(mu, lambda, n) : stable_induce(mu, lambda);
      if (csv)
        CsvTable{{"result"}, {{"\"" + result.to_string() + "\""}}}.write(out);
      else
        emit(out, Json{{"mu", to_json(mu)}, {"lambda", to_json(lambda)},
                       {"result", to_json(result)}});
    } else if (*spechtdim) {
      Partition lambda = parse_partition_arg(lambda_s);
      std::int64_t count = specht_basis(lambda).count();
      if (csv)
        CsvTable{{"count"}, {{std::to_string(count)}}}.write(out);
      else
        emit(out, Json{{"lambda", to_json(lambda)}, {"count", count}});
    } else if (*ddim) {
      Partition lambda = parse_partition_arg(lambda_s);
      std::int64_t dim = irreducible_dim(lambda, Prime(p_in));
      if (csv)
        CsvTable{{"dim"}, {{std::to_string(dim)}}}.write(out);
      else
        emit(out, Json{{"dim", dim}});
    } else if (*decomp) {
      Prime p(p_in);
      if (!perm_s.empty() || !specht_s.empty()) {
        Partition lam = parse_partition_arg(perm_s.empty() ? specht_s : perm_s);
        MatrixRep rep = perm_s.empty() ? specht_rep(lam, p) : perm_module_rep(lam, p);
        std::vector<ChopFactor> factors = chop(rep, seed);
        std::map<ChopFactor, int> mult;
        for (const ChopFactor& f : factors) ++mult[f];
        if (csv) {
          CsvTable table{{"dim", "multiplicity"}, {}};
          for (const auto& [f, k] : mult)
            table.rows.push_back({std::to_string(f.dim), std::to_string(k)});
          table.write(out);
        } else {
          Json items = Json::array();
          for (const auto& [f, k] : mult)
            items.push_back(Json{{"dim", f.dim}, {"fingerprint", f.id},
                                 {"multiplicity", k}});
          emit(out, Json{{"module", to_json(lam)}, {"p", p_in}, {"seed", seed},
                         {"factors", items}});
        }
      } else {
        if (n < 0 || m < 0)
          throw CLI::ValidationError("decomp needs --n/--m, --perm, or --specht");
        std::vector<int> mult = two_row_decomposition(n, m, p, seed);
        if (csv) {
          CsvTable table{{"j", "multiplicity"}, {}};
          for (std::size_t j = 0; j < mult.size(); ++j)
            table.rows.push_back({std::to_string(j), std::to_string(mult[j])});
          table.write(out);
        } else {
          emit(out, Json{{"n", n}, {"m", m}, {"p", p_in}, {"seed", seed},
                         {"multiplicities", mult}});
        }
      }
    } else if (*fi_cmd) {
      std::ifstream in(file_s);
      if (!in) throw CLI::ValidationError("cannot read " + file_s);
      Json j = Json::parse(in, nullptr, false);
      if (j.is_discarded()) throw CLI::ValidationError("presentation is not valid JSON");
      Presentation pres = presentation_from_json(j);
      if (n0 < 0 || n1 < n0) throw CLI::ValidationError("need 0 <= n0 <= n1");
      Prime p(p_in);
      std::vector<std::int64_t> dims, invs;
      Json levels = Json::array();
      for (int level = n0; level <= n1; ++level) {
        CokerInstance inst = instantiate_coker(pres, level, p);
        dims.push_back(inst.dim);
        invs.push_back(inst.invariants);
        levels.push_back(Json{{"n", level}, {"dim", inst.dim},
                              {"invariants", inst.invariants}});
      }
      PeriodResult dim_period = detect_period(dims, p);
      PeriodResult inv_period = detect_period(invs, p);
      if (csv) {
        CsvTable table{{"n", "dim", "invariants"}, {}};
        for (std::size_t i = 0; i < dims.size(); ++i)
          table.rows.push_back({std::to_string(n0 + static_cast<int>(i)),
                                std::to_string(dims[i]), std::to_string(invs[i])});
        table.write(out);
      } else {
        emit(out, Json{{"levels", levels}, {"dim_period", period_json(dim_period)},
                       {"invariants_period", period_json(inv_period)}});
      }
    } else if (*period_cmd) {
      std::vector<BigInt> diffs;
      for (std::int64_t v : parse_int_list(diffs_s)) diffs.emplace_back(v);
      IvPoly f(base, std::move(diffs));
      std::int64_t period = period_mod_p(f, Prime(p_in));
      if (csv)
        CsvTable{{"period"}, {{std::to_string(period)}}}.write(out);
      else
        emit(out, Json{{"period", period}});
    }
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    err << Json{{"error", e.what()}}.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << Json{{"error", e.what()}}.dump() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace stablerep
