#include "realcmp/json_io.hpp"

#include "realcmp/error.hpp"

namespace realcmp {

using nlohmann::json;

namespace {

json map_json(const SimplicialMap& f) { return json(f.components); }

const json& field(const json& j, const std::string& ptr, const char* key) {
  if (!j.is_object()) throw SchemaError(ptr.empty() ? "/" : ptr, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(ptr + "/" + key, "missing field");
  return *it;
}

long long integer(const json& j, const std::string& ptr, long long lo, long long hi) {
  if (!j.is_number_integer()) throw SchemaError(ptr, "expected an integer");
  const auto v = j.get<long long>();
  if (v < lo || v > hi)
    throw SchemaError(ptr, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                               std::to_string(hi) + "]");
  return v;
}

const json& array(const json& j, const std::string& ptr, std::size_t size) {
  if (!j.is_array()) throw SchemaError(ptr, "expected an array");
  if (j.size() != size)
    throw SchemaError(ptr, "expected " + std::to_string(size) + " entries, found " + std::to_string(j.size()));
  return j;
}

std::vector<Cell> cell_array(const json& j, const std::string& ptr, std::size_t size, std::size_t bound) {
  array(j, ptr, size);
  std::vector<Cell> out;
  for (std::size_t c = 0; c < size; ++c)
    out.push_back(static_cast<Cell>(integer(j[c], ptr + "/" + std::to_string(c), 0,
                                            static_cast<long long>(bound) - 1)));
  return out;
}

}  // namespace

json to_json(const SimplicialSet& x) {
  json j;
  j["cap"] = x.cap();
  j["semi"] = x.is_semi();
  j["counts"] = x.counts();
  j["faces"] = x.faces();
  if (!x.is_semi()) j["degeneracies"] = x.degeneracies();
  if (x.has_labels()) j["labels"] = x.labels();
  return j;
}

json to_json(const FiniteCategory& c) {
  json j;
  j["objects"] = c.object_count();
  json ms = json::array();
  for (int f = 0; f < c.morphism_count(); ++f)
    ms.push_back({{"source", c.source(f)}, {"target", c.target(f)}, {"label", c.morphism(f).label}});
  j["morphisms"] = std::move(ms);
  j["identities"] = c.identities();
  json comp = json::array();
  for (const auto& t : c.composition_triples()) comp.push_back({t.second, t.first, t.result});
  j["composition"] = std::move(comp);
  json labels = json::array();
  for (int x = 0; x < c.object_count(); ++x) labels.push_back(c.object_label(x));
  j["object_labels"] = std::move(labels);
  return j;
}

json to_json(const SimplicialObject& x) {
  json j;
  j["cap"] = x.cap();
  j["internal_cap"] = x.internal_cap();
  j["semi"] = x.is_semi();
  json levels = json::array(), faces = json::array(), degens = json::array();
  for (int n = 0; n <= x.cap(); ++n) {
    levels.push_back(to_json(x.level(n)));
    json fs = json::array();
    for (int i = 0; n > 0 && i <= n; ++i) fs.push_back(map_json(x.face(n, i)));
    faces.push_back(std::move(fs));
    if (!x.is_semi() && n < x.cap()) {
      json ds = json::array();
      for (int k = 0; k <= n; ++k) ds.push_back(map_json(x.degeneracy(n, k)));
      degens.push_back(std::move(ds));
    }
  }
  j["levels"] = std::move(levels);
  j["faces"] = std::move(faces);
  if (!x.is_semi()) j["degeneracies"] = std::move(degens);
  return j;
}

SimplicialSet simplicial_set_from_json(const json& j) {
  const int cap = static_cast<int>(integer(field(j, "", "cap"), "/cap", 0, 64));
  bool semi = false;
  if (auto it = j.find("semi"); it != j.end()) {
    if (!it->is_boolean()) throw SchemaError("/semi", "expected a boolean");
    semi = it->get<bool>();
  }
  const auto& cj = array(field(j, "", "counts"), "/counts", static_cast<std::size_t>(cap) + 1);
  std::vector<std::size_t> counts;
  for (std::size_t n = 0; n < cj.size(); ++n)
    counts.push_back(static_cast<std::size_t>(integer(cj[n], "/counts/" + std::to_string(n), 0, 1LL << 31)));
  const auto& fj = array(field(j, "", "faces"), "/faces", static_cast<std::size_t>(cap) + 1);
  SimplicialSet::ActionTable faces(static_cast<std::size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n) {
    const auto un = static_cast<std::size_t>(n);
    const std::string p = "/faces/" + std::to_string(n);
    array(fj[un], p, n == 0 ? 0 : un + 1);
    for (int i = 0; n > 0 && i <= n; ++i)
      faces[un].push_back(cell_array(fj[un][static_cast<std::size_t>(i)], p + "/" + std::to_string(i), counts[un],
                                     counts[un - 1]));
  }
  std::optional<SimplicialSet::ActionTable> degens;
  if (!semi) {
    const auto& dj = array(field(j, "", "degeneracies"), "/degeneracies", static_cast<std::size_t>(cap));
    degens.emplace(static_cast<std::size_t>(cap));
    for (int n = 0; n < cap; ++n) {
      const auto un = static_cast<std::size_t>(n);
      const std::string p = "/degeneracies/" + std::to_string(n);
      array(dj[un], p, un + 1);
      for (int k = 0; k <= n; ++k)
        (*degens)[un].push_back(cell_array(dj[un][static_cast<std::size_t>(k)], p + "/" + std::to_string(k),
                                           counts[un], counts[un + 1]));
    }
  }
  SimplicialSet::Labels labels;
  if (auto it = j.find("labels"); it != j.end()) {
    array(*it, "/labels", static_cast<std::size_t>(cap) + 1);
    for (int n = 0; n <= cap; ++n) {
      const auto un = static_cast<std::size_t>(n);
      const std::string p = "/labels/" + std::to_string(n);
      array((*it)[un], p, counts[un]);
      std::vector<std::string> row;
      for (std::size_t c = 0; c < counts[un]; ++c) {
        if (!(*it)[un][c].is_string()) throw SchemaError(p + "/" + std::to_string(c), "expected a string");
        row.push_back((*it)[un][c].get<std::string>());
      }
      labels.push_back(std::move(row));
    }
  }
  SimplicialSet x(cap, std::move(counts), std::move(faces), std::move(degens), std::move(labels));
  x.validate();
  return x;
}

FiniteCategory finite_category_from_json(const json& j) {
  const int objects = static_cast<int>(integer(field(j, "", "objects"), "/objects", 1, 1 << 16));
  const auto& mj = field(j, "", "morphisms");
  if (!mj.is_array()) throw SchemaError("/morphisms", "expected an array");
  std::vector<FiniteCategory::Morphism> ms;
  for (std::size_t f = 0; f < mj.size(); ++f) {
    const std::string p = "/morphisms/" + std::to_string(f);
    FiniteCategory::Morphism m;
    m.source = static_cast<int>(integer(field(mj[f], p, "source"), p + "/source", 0, objects - 1));
    m.target = static_cast<int>(integer(field(mj[f], p, "target"), p + "/target", 0, objects - 1));
    if (auto it = mj[f].find("label"); it != mj[f].end()) {
      if (!it->is_string()) throw SchemaError(p + "/label", "expected a string");
      m.label = it->get<std::string>();
    }
    ms.push_back(std::move(m));
  }
  const auto count = static_cast<long long>(ms.size());
  const auto& ij = array(field(j, "", "identities"), "/identities", static_cast<std::size_t>(objects));
  std::vector<int> ids;
  for (std::size_t x = 0; x < ij.size(); ++x)
    ids.push_back(static_cast<int>(integer(ij[x], "/identities/" + std::to_string(x), 0, count - 1)));
  const auto& tj = field(j, "", "composition");
  if (!tj.is_array()) throw SchemaError("/composition", "expected an array");
  std::vector<FiniteCategory::Composite> comp;
  for (std::size_t t = 0; t < tj.size(); ++t) {
    const std::string p = "/composition/" + std::to_string(t);
    array(tj[t], p, 3);
    comp.push_back({static_cast<int>(integer(tj[t][0], p + "/0", 0, count - 1)),
                    static_cast<int>(integer(tj[t][1], p + "/1", 0, count - 1)),
                    static_cast<int>(integer(tj[t][2], p + "/2", 0, count - 1))});
  }
  std::vector<std::string> labels;
  if (auto it = j.find("object_labels"); it != j.end()) {
    array(*it, "/object_labels", static_cast<std::size_t>(objects));
    for (std::size_t x = 0; x < it->size(); ++x) {
      if (!(*it)[x].is_string()) throw SchemaError("/object_labels/" + std::to_string(x), "expected a string");
      labels.push_back((*it)[x].get<std::string>());
    }
  }
  return FiniteCategory(objects, std::move(ms), std::move(ids), comp, std::move(labels));
}

}  // namespace realcmp
