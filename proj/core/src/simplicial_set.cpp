#include "realcmp/simplicial_set.hpp"

#include <numeric>
#include <sstream>

namespace realcmp {

namespace {

std::string where(int n, Cell c) {
  std::ostringstream os;
  os << "cell (" << n << ',' << c << ')';
  return os.str();
}

}  // namespace

SimplicialSet::SimplicialSet(int cap, std::vector<std::size_t> counts, ActionTable faces,
                             std::optional<ActionTable> degeneracies, Labels labels)
    : cap_(cap),
      has_degeneracies_(degeneracies.has_value()),
      counts_(std::move(counts)),
      faces_(std::move(faces)),
      labels_(std::move(labels)) {
  if (cap_ < 0) throw ValidationError("SimplicialSet: negative cap");
  const auto levels = static_cast<std::size_t>(cap_) + 1;
  if (counts_.size() != levels) throw ValidationError("SimplicialSet: counts length != cap+1");
  if (faces_.size() != levels) throw ValidationError("SimplicialSet: faces length != cap+1");
  for (int n = 0; n <= cap_; ++n) {
    const auto& fn = faces_[static_cast<std::size_t>(n)];
    if (n == 0 ? !fn.empty() : fn.size() != static_cast<std::size_t>(n) + 1)
      throw ValidationError("SimplicialSet: wrong number of face operators in degree " + std::to_string(n));
    for (const auto& table : fn) {
      if (table.size() != counts_[static_cast<std::size_t>(n)])
        throw ValidationError("SimplicialSet: face table size mismatch in degree " + std::to_string(n));
      for (Cell c : table)
        if (c >= counts_[static_cast<std::size_t>(n) - 1])
          throw ValidationError("SimplicialSet: face index out of range in degree " + std::to_string(n));
    }
  }
  if (has_degeneracies_) {
    degeneracies_ = std::move(*degeneracies);
    if (degeneracies_.size() != static_cast<std::size_t>(cap_))
      throw ValidationError("SimplicialSet: degeneracies length != cap");
    degenerate_.resize(levels);
    for (int n = 0; n <= cap_; ++n)
      degenerate_[static_cast<std::size_t>(n)].assign(counts_[static_cast<std::size_t>(n)], 0);
    for (int n = 0; n < cap_; ++n) {
      const auto& sn = degeneracies_[static_cast<std::size_t>(n)];
      if (sn.size() != static_cast<std::size_t>(n) + 1)
        throw ValidationError("SimplicialSet: wrong number of degeneracies in degree " + std::to_string(n));
      for (const auto& table : sn) {
        if (table.size() != counts_[static_cast<std::size_t>(n)])
          throw ValidationError("SimplicialSet: degeneracy table size mismatch");
        for (Cell c : table) {
          if (c >= counts_[static_cast<std::size_t>(n) + 1])
            throw ValidationError("SimplicialSet: degeneracy index out of range");
          degenerate_[static_cast<std::size_t>(n) + 1][c] = 1;
        }
      }
    }
  }
  if (!labels_.empty()) {
    if (labels_.size() != levels) throw ValidationError("SimplicialSet: labels length != cap+1");
    for (int n = 0; n <= cap_; ++n)
      if (labels_[static_cast<std::size_t>(n)].size() != counts_[static_cast<std::size_t>(n)])
        throw ValidationError("SimplicialSet: label count mismatch");
  }
}

std::size_t SimplicialSet::total_cells() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::size_t{0});
}

std::size_t SimplicialSet::nondegenerate_count(int n) const {
  std::size_t k = 0;
  for (Cell c = 0; c < size(n); ++c)
    if (!is_degenerate(n, c)) ++k;
  return k;
}

Cell SimplicialSet::act(const MonotoneMap& u, Cell c) const {
  int n = u.cod();
  if (n > cap_ || u.dom() > cap_) throw ValidationError("act: map leaves the truncation range");
  const auto [surj, inj] = epi_mono_factorize(u);
  for (int j : missing_values_descending(inj)) c = face(n--, j, c);
  if (!surj.is_identity()) {
    if (!has_degeneracies_) throw ValidationError("act: degeneracy requested on a semi-simplicial set");
    for (int j : repeat_positions_ascending(surj)) c = degeneracy(n++, j, c);
  }
  return c;
}

void SimplicialSet::validate() const {
  auto fail = [](const std::string& what) { throw ValidationError("simplicial identity failed: " + what); };
  for (int n = 2; n <= cap_; ++n)
    for (Cell c = 0; c < size(n); ++c)
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i)
          if (face(n - 1, i, face(n, j, c)) != face(n - 1, j - 1, face(n, i, c)))
            fail("d_i d_j = d_{j-1} d_i at " + where(n, c));
  if (!has_degeneracies_) return;
  for (int n = 0; n < cap_; ++n) {
    for (Cell c = 0; c < size(n); ++c) {
      for (int j = 0; j <= n; ++j) {
        const Cell sc = degeneracy(n, j, c);
        for (int i = 0; i <= n + 1; ++i) {
          const Cell lhs = face(n + 1, i, sc);
          Cell rhs;
          if (i == j || i == j + 1) rhs = c;
          else if (i < j) rhs = degeneracy(n - 1, j - 1, face(n, i, c));
          else rhs = degeneracy(n - 1, j, face(n, i - 1, c));
          if (lhs != rhs) fail("d_i s_j relation at " + where(n, c));
        }
        if (n + 2 <= cap_)
          for (int i = 0; i <= j; ++i)
            if (degeneracy(n + 1, i, sc) != degeneracy(n + 1, j + 1, degeneracy(n, i, c)))
              fail("s_i s_j = s_{j+1} s_i at " + where(n, c));
      }
    }
  }
}

SimplicialSet SimplicialSet::truncated(int new_cap) const {
  if (new_cap > cap_ || new_cap < 0) throw ConfigError("truncated: cap out of range");
  const auto levels = static_cast<std::size_t>(new_cap) + 1;
  std::vector<std::size_t> counts(counts_.begin(), counts_.begin() + static_cast<std::ptrdiff_t>(levels));
  ActionTable faces(faces_.begin(), faces_.begin() + static_cast<std::ptrdiff_t>(levels));
  std::optional<ActionTable> degens;
  if (has_degeneracies_)
    degens = ActionTable(degeneracies_.begin(), degeneracies_.begin() + new_cap);
  Labels labels;
  if (!labels_.empty()) labels.assign(labels_.begin(), labels_.begin() + static_cast<std::ptrdiff_t>(levels));
  return {new_cap, std::move(counts), std::move(faces), std::move(degens), std::move(labels)};
}

SimplicialSet SimplicialSet::as_semi() const { return {cap_, counts_, faces_, std::nullopt, labels_}; }

SimplicialMap identity_map(const SimplicialSet& x) {
  SimplicialMap f;
  f.components.resize(static_cast<std::size_t>(x.cap()) + 1);
  for (int n = 0; n <= x.cap(); ++n) {
    auto& comp = f.components[static_cast<std::size_t>(n)];
    comp.resize(x.size(n));
    std::iota(comp.begin(), comp.end(), Cell{0});
  }
  return f;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (g.components.size() != f.components.size()) throw CompositionMismatch("compose: map caps differ");
  SimplicialMap h;
  h.components.resize(f.components.size());
  for (std::size_t n = 0; n < f.components.size(); ++n) {
    auto& out = h.components[n];
    out.reserve(f.components[n].size());
    for (Cell c : f.components[n]) {
      if (c >= g.components[n].size()) throw CompositionMismatch("compose: cell out of range");
      out.push_back(g.components[n][c]);
    }
  }
  return h;
}

std::optional<std::string> map_violation(const SimplicialSet& source, const SimplicialSet& target,
                                         const SimplicialMap& f) {
  if (source.cap() != target.cap()) return "caps differ";
  if (f.cap() != source.cap()) return "map cap differs from its source";
  for (int n = 0; n <= source.cap(); ++n) {
    const auto& comp = f.components[static_cast<std::size_t>(n)];
    if (comp.size() != source.size(n)) return "component size mismatch in degree " + std::to_string(n);
    for (Cell c : comp)
      if (c >= target.size(n)) return "image out of range in degree " + std::to_string(n);
  }
  for (int n = 1; n <= source.cap(); ++n)
    for (Cell c = 0; c < source.size(n); ++c)
      for (int i = 0; i <= n; ++i)
        if (f(n - 1, source.face(n, i, c)) != target.face(n, i, f(n, c)))
          return "face d_" + std::to_string(i) + " not preserved at " + where(n, c);
  if (!source.is_semi() && !target.is_semi())
    for (int n = 0; n < source.cap(); ++n)
      for (Cell c = 0; c < source.size(n); ++c)
        for (int j = 0; j <= n; ++j)
          if (f(n + 1, source.degeneracy(n, j, c)) != target.degeneracy(n, j, f(n, c)))
            return "degeneracy s_" + std::to_string(j) + " not preserved at " + where(n, c);
  return std::nullopt;
}

void check_map(const SimplicialSet& source, const SimplicialSet& target, const SimplicialMap& f) {
  if (auto v = map_violation(source, target, f)) throw ValidationError("not a simplicial map: " + *v);
}

bool is_injective(const SimplicialSet& source, const SimplicialSet& target, const SimplicialMap& f) {
  for (int n = 0; n <= source.cap(); ++n) {
    std::vector<char> seen(target.size(n), 0);
    for (Cell c = 0; c < source.size(n); ++c) {
      auto& s = seen[f(n, c)];
      if (s) return false;
      s = 1;
    }
  }
  return true;
}

bool is_bijective(const SimplicialSet& source, const SimplicialSet& target, const SimplicialMap& f) {
  for (int n = 0; n <= source.cap(); ++n)
    if (source.size(n) != target.size(n)) return false;
  return is_injective(source, target, f);
}

bool identical(const SimplicialSet& a, const SimplicialSet& b) {
  return a.cap() == b.cap() && a.is_semi() == b.is_semi() && a.counts() == b.counts() &&
         a.faces() == b.faces() && a.degeneracies() == b.degeneracies();
}

}  // namespace realcmp
