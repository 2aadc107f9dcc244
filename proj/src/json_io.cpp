#include "stablerep/json_io.hpp"

#include <limits>

namespace stablerep {

Json to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw error("partition must be a JSON array");
  return Partition(j.get<std::vector<int>>());
}

namespace {

Json counts_to_json(const std::vector<std::vector<int>>& counts) {
  Json rows = Json::array();
  for (const auto& row : counts) rows.push_back(row);
  return rows;
}

std::vector<std::vector<int>> counts_from_json(const Json& j) {
  if (!j.is_array()) throw error("counts must be a JSON array of arrays");
  return j.get<std::vector<std::vector<int>>>();
}

}  // namespace

Json to_json(const Tabloid& t) {
  return Json{{"shape", to_json(t.shape)}, {"type", to_json(t.type)},
              {"counts", counts_to_json(t.counts)}};
}

Json to_json(const StableTabloid& t) {
  return Json{{"shape", to_json(t.shape)}, {"type", to_json(t.type)},
              {"counts", counts_to_json(t.counts)}};
}

StableTabloid stable_tabloid_from_json(const Json& j) {
  StableTabloid t;
  t.shape = partition_from_json(j.at("shape"));
  t.type = partition_from_json(j.at("type"));
  t.counts = counts_from_json(j.at("counts"));
  t.validate();
  return t;
}

Json to_json(const IvPoly& f) {
  Json diffs = Json::array();
  for (const BigInt& d : f.diffs()) {
    if (d > std::numeric_limits<std::int64_t>::max() ||
        d < std::numeric_limits<std::int64_t>::min())
      throw error("polynomial coefficient does not fit the JSON integer range");
    diffs.push_back(static_cast<std::int64_t>(d));
  }
  return Json{{"offset", f.offset()}, {"diffs", diffs}};
}

IvPoly ivpoly_from_json(const Json& j) {
  std::vector<BigInt> diffs;
  for (const Json& d : j.at("diffs")) diffs.emplace_back(d.get<std::int64_t>());
  return IvPoly(j.value("offset", static_cast<std::int64_t>(0)), std::move(diffs));
}

Json to_json(const HomEntry& entry) {
  Json terms = Json::array();
  for (const auto& [tau, coeff] : entry)
    terms.push_back(Json{{"tabloid", to_json(tau)}, {"poly", to_json(coeff)}});
  return terms;
}

namespace {

HomEntry hom_entry_from_json(const Json& cell) {
  HomEntry entry;
  auto add_term = [&entry](const Json& term) {
    StableTabloid tau = stable_tabloid_from_json(term.at("tabloid"));
    IvPoly coeff = ivpoly_from_json(term.at("poly"));
    if (coeff.is_zero()) return;
    auto it = entry.find(tau);
    if (it == entry.end())
      entry[tau] = std::move(coeff);
    else
      it->second = it->second + coeff;
  };
  if (cell.is_object())
    add_term(cell);
  else if (cell.is_array())
    for (const Json& term : cell) add_term(term);
  else
    throw error("map cell must be a term object or a list of terms");
  return entry;
}

}  // namespace

Json to_json(const Presentation& pres) {
  Json map_rows = Json::array();
  for (const auto& row : pres.map.entries) {
    Json cells = Json::array();
    for (const HomEntry& entry : row) cells.push_back(to_json(entry));
    map_rows.push_back(cells);
  }
  return Json{{"generators", pres.generators}, {"relations", pres.relations},
              {"map", map_rows}};
}

Presentation presentation_from_json(const Json& j) {
  Presentation pres;
  pres.generators = j.at("generators").get<std::vector<int>>();
  pres.relations = j.value("relations", std::vector<int>{});

  StableObject gen_obj, rel_obj;
  for (int d : pres.generators) gen_obj.summands.push_back(Presentation::column(d));
  for (int d : pres.relations) rel_obj.summands.push_back(Presentation::column(d));
  pres.map = StableHom::zero(rel_obj, gen_obj);

  if (j.contains("map")) {
    const Json& rows = j.at("map");
    if (rows.size() != pres.relations.size())
      throw error("map must have one row per relation summand");
    for (std::size_t src = 0; src < rows.size(); ++src) {
      if (rows[src].size() != pres.generators.size())
        throw error("map row must have one cell per generator summand");
      for (std::size_t tgt = 0; tgt < rows[src].size(); ++tgt)
        pres.map.entries[src][tgt] = hom_entry_from_json(rows[src][tgt]);
    }
  } else if (!pres.relations.empty()) {
    throw error("presentation with relations needs a map");
  }
  pres.validate();
  return pres;
}

}  // namespace stablerep
