#include "realcmp/simplicial_object.hpp"

#include "realcmp/sset_ops.hpp"

namespace realcmp {

ActionWord action_word(const MonotoneMap& u) {
  ActionWord w;
  const auto [surj, inj] = epi_mono_factorize(u);
  int n = u.cod();
  for (int j : missing_values_descending(inj)) w.push_back({false, n--, j});
  for (int j : repeat_positions_ascending(surj)) w.push_back({true, n++, j});
  return w;
}

SimplicialObject::SimplicialObject(std::vector<SimplicialSet> levels, MapFamily faces,
                                   std::optional<MapFamily> degeneracies)
    : levels_(std::move(levels)), has_degeneracies_(degeneracies.has_value()), faces_(std::move(faces)) {
  if (levels_.empty()) throw ValidationError("SimplicialObject: no levels");
  const int ic = levels_.front().cap();
  for (const auto& l : levels_)
    if (l.cap() != ic) throw ValidationError("SimplicialObject: levels disagree on the internal cap");
  const auto count = levels_.size();
  if (faces_.size() != count) throw ValidationError("SimplicialObject: face family length != cap+1");
  for (std::size_t n = 0; n < count; ++n)
    if (faces_[n].size() != (n == 0 ? 0 : n + 1))
      throw ValidationError("SimplicialObject: wrong number of external faces");
  if (has_degeneracies_) {
    degeneracies_ = std::move(*degeneracies);
    if (degeneracies_.size() != count - 1) throw ValidationError("SimplicialObject: degeneracy family length != cap");
    for (std::size_t n = 0; n + 1 < count; ++n)
      if (degeneracies_[n].size() != n + 1)
        throw ValidationError("SimplicialObject: wrong number of external degeneracies");
  }
}

Cell SimplicialObject::apply(const ActionWord& word, int j, Cell c) const {
  for (const auto& s : word) {
    if (s.degeneracy && !has_degeneracies_)
      throw ValidationError("SimplicialObject: degeneracy requested on a semi-simplicial object");
    c = s.degeneracy ? degeneracy(s.degree, s.index)(j, c) : face(s.degree, s.index)(j, c);
  }
  return c;
}

SimplicialMap SimplicialObject::act_map(const MonotoneMap& u) const {
  const auto word = action_word(u);
  SimplicialMap f;
  const auto& src = level(u.cod());
  for (int j = 0; j <= internal_cap(); ++j) {
    std::vector<Cell> comp(src.size(j));
    for (Cell c = 0; c < comp.size(); ++c) comp[c] = apply(word, j, c);
    f.components.push_back(std::move(comp));
  }
  return f;
}

namespace {

bool same_map(const SimplicialMap& a, const SimplicialMap& b) { return a.components == b.components; }

std::string at(int n, int i) { return "(" + std::to_string(n) + "," + std::to_string(i) + ")"; }

}  // namespace

void SimplicialObject::validate() const {
  auto fail = [](const std::string& what) { throw ValidationError("simplicial object: " + what); };
  for (const auto& l : levels_) l.validate();
  for (int n = 1; n <= cap(); ++n)
    for (int i = 0; i <= n; ++i)
      if (auto v = map_violation(level(n), level(n - 1), face(n, i)))
        fail("external face " + at(n, i) + " is not simplicial: " + *v);
  for (int n = 2; n <= cap(); ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        if (!same_map(compose(face(n - 1, i), face(n, j)), compose(face(n - 1, j - 1), face(n, i))))
          fail("d_i d_j identity at " + at(n, j));
  if (!has_degeneracies_) return;
  for (int n = 0; n < cap(); ++n)
    for (int j = 0; j <= n; ++j) {
      if (auto v = map_violation(level(n), level(n + 1), degeneracy(n, j)))
        fail("external degeneracy " + at(n, j) + " is not simplicial: " + *v);
      const auto& s = degeneracy(n, j);
      for (int i = 0; i <= n + 1; ++i) {
        const auto lhs = compose(face(n + 1, i), s);
        SimplicialMap rhs;
        if (i == j || i == j + 1) rhs = realcmp::identity_map(level(n));
        else if (i < j) rhs = compose(degeneracy(n - 1, j - 1), face(n, i));
        else rhs = compose(degeneracy(n - 1, j), face(n, i - 1));
        if (!same_map(lhs, rhs)) fail("d_i s_j identity at " + at(n, j));
      }
      if (n + 2 <= cap())
        for (int i = 0; i <= j; ++i)
          if (!same_map(compose(degeneracy(n + 1, i), s), compose(degeneracy(n + 1, j + 1), degeneracy(n, i))))
            fail("s_i s_j identity at " + at(n, j));
    }
}

SimplicialObject SimplicialObject::restrict_to_faces() const { return {levels_, faces_, std::nullopt}; }

SimplicialObject SimplicialObject::truncated(int new_cap, int new_internal_cap) const {
  if (new_cap > cap() || new_internal_cap > internal_cap() || new_cap < 0 || new_internal_cap < 0)
    throw ConfigError("truncated: caps out of range");
  auto cut = [&](const SimplicialMap& f) {
    SimplicialMap g;
    g.components.assign(f.components.begin(), f.components.begin() + new_internal_cap + 1);
    return g;
  };
  std::vector<SimplicialSet> levels;
  MapFamily faces(static_cast<std::size_t>(new_cap) + 1);
  std::optional<MapFamily> degens;
  for (int n = 0; n <= new_cap; ++n) {
    levels.push_back(level(n).truncated(new_internal_cap));
    for (int i = 0; n > 0 && i <= n; ++i) faces[static_cast<std::size_t>(n)].push_back(cut(face(n, i)));
  }
  if (has_degeneracies_) {
    degens.emplace(static_cast<std::size_t>(new_cap));
    for (int n = 0; n < new_cap; ++n)
      for (int j = 0; j <= n; ++j) (*degens)[static_cast<std::size_t>(n)].push_back(cut(degeneracy(n, j)));
  }
  return {std::move(levels), std::move(faces), std::move(degens)};
}

namespace {

SimplicialMap constant_component(std::span<const Cell> table, int internal_cap) {
  SimplicialMap f;
  f.components.assign(static_cast<std::size_t>(internal_cap) + 1, std::vector<Cell>(table.begin(), table.end()));
  return f;
}

}  // namespace

SimplicialObject discrete_object(const SimplicialSet& y, int internal_cap) {
  std::vector<SimplicialSet> levels;
  SimplicialObject::MapFamily faces(static_cast<std::size_t>(y.cap()) + 1);
  std::optional<SimplicialObject::MapFamily> degens;
  for (int n = 0; n <= y.cap(); ++n) {
    levels.push_back(constant_set(y.size(n), internal_cap));
    for (int i = 0; n > 0 && i <= n; ++i)
      faces[static_cast<std::size_t>(n)].push_back(constant_component(y.face_table(n, i), internal_cap));
  }
  if (!y.is_semi()) {
    degens.emplace(static_cast<std::size_t>(y.cap()));
    for (int n = 0; n < y.cap(); ++n)
      for (int j = 0; j <= n; ++j)
        (*degens)[static_cast<std::size_t>(n)].push_back(constant_component(y.degeneracy_table(n, j), internal_cap));
  }
  return {std::move(levels), std::move(faces), std::move(degens)};
}

SimplicialObject constant_object(const SimplicialSet& y, int cap) {
  const auto id = realcmp::identity_map(y);
  SimplicialObject::MapFamily faces(static_cast<std::size_t>(cap) + 1), degens(static_cast<std::size_t>(cap));
  for (int n = 1; n <= cap; ++n) faces[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, id);
  for (int n = 0; n < cap; ++n) degens[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, id);
  return {std::vector<SimplicialSet>(static_cast<std::size_t>(cap) + 1, y), std::move(faces), std::move(degens)};
}

SimplicialObject point_object(int cap, int internal_cap) { return constant_object(point(internal_cap), cap); }

ObjectMap identity_map(const SimplicialObject& x) {
  ObjectMap f;
  for (const auto& l : x.levels()) f.components.push_back(realcmp::identity_map(l));
  return f;
}

ObjectMap compose(const ObjectMap& g, const ObjectMap& f) {
  if (g.components.size() != f.components.size()) throw CompositionMismatch("compose: object map caps differ");
  ObjectMap h;
  for (std::size_t n = 0; n < f.components.size(); ++n)
    h.components.push_back(compose(g.components[n], f.components[n]));
  return h;
}

std::optional<std::string> object_map_violation(const SimplicialObject& source, const SimplicialObject& target,
                                                const ObjectMap& f) {
  if (source.cap() != target.cap()) return "external caps differ";
  if (f.components.size() != source.levels().size()) return "component count mismatch";
  for (int n = 0; n <= source.cap(); ++n)
    if (auto v = map_violation(source.level(n), target.level(n), f.components[static_cast<std::size_t>(n)]))
      return "level " + std::to_string(n) + ": " + *v;
  const auto& comp = f.components;
  for (int n = 1; n <= source.cap(); ++n)
    for (int i = 0; i <= n; ++i)
      if (!same_map(compose(comp[static_cast<std::size_t>(n) - 1], source.face(n, i)),
                    compose(target.face(n, i), comp[static_cast<std::size_t>(n)])))
        return "external face " + at(n, i) + " not preserved";
  if (!source.is_semi() && !target.is_semi())
    for (int n = 0; n < source.cap(); ++n)
      for (int j = 0; j <= n; ++j)
        if (!same_map(compose(comp[static_cast<std::size_t>(n) + 1], source.degeneracy(n, j)),
                      compose(target.degeneracy(n, j), comp[static_cast<std::size_t>(n)])))
          return "external degeneracy " + at(n, j) + " not preserved";
  return std::nullopt;
}

SimplicialSet diagonal(const SimplicialObject& x) {
  const int cap = x.cap();
  if (x.internal_cap() != cap) throw ConfigError("diagonal: external and internal caps differ");
  const auto levels = static_cast<std::size_t>(cap) + 1;
  std::vector<std::size_t> counts(levels);
  for (int n = 0; n <= cap; ++n) counts[static_cast<std::size_t>(n)] = x.level(n).size(n);
  SimplicialSet::ActionTable faces(levels);
  for (int n = 1; n <= cap; ++n)
    for (int i = 0; i <= n; ++i) {
      std::vector<Cell> t(counts[static_cast<std::size_t>(n)]);
      for (Cell c = 0; c < t.size(); ++c) t[c] = x.face(n, i)(n - 1, x.level(n).face(n, i, c));
      faces[static_cast<std::size_t>(n)].push_back(std::move(t));
    }
  std::optional<SimplicialSet::ActionTable> degens;
  if (!x.is_semi() && !x.level(0).is_semi()) {
    degens.emplace(static_cast<std::size_t>(cap));
    for (int n = 0; n < cap; ++n)
      for (int j = 0; j <= n; ++j) {
        std::vector<Cell> t(counts[static_cast<std::size_t>(n)]);
        for (Cell c = 0; c < t.size(); ++c) t[c] = x.degeneracy(n, j)(n + 1, x.level(n).degeneracy(n, j, c));
        (*degens)[static_cast<std::size_t>(n)].push_back(std::move(t));
      }
  }
  return SimplicialSet(cap, std::move(counts), std::move(faces), std::move(degens));
}

SimplicialMap diagonal(const ObjectMap& f) {
  SimplicialMap d;
  for (std::size_t n = 0; n < f.components.size(); ++n) d.components.push_back(f.components[n].components[n]);
  return d;
}

}  // namespace realcmp
