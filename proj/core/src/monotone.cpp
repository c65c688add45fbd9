#include "realcmp/monotone.hpp"

#include <algorithm>
#include <sstream>

namespace realcmp {

MonotoneMap::MonotoneMap(int cod, std::vector<int> values) : cod_(cod), values_(std::move(values)) {
  if (values_.empty()) throw ValidationError("MonotoneMap: empty value sequence");
  if (cod_ < 0 || cod_ > kMaxOrdinal || dom() > kMaxOrdinal)
    throw ValidationError("MonotoneMap: ordinal out of supported range");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 0 || values_[i] > cod_)
      throw ValidationError("MonotoneMap: value out of range in " + to_string());
    if (i > 0 && values_[i - 1] > values_[i])
      throw ValidationError("MonotoneMap: not monotone: " + to_string());
  }
}

MonotoneMap MonotoneMap::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) v[static_cast<std::size_t>(i)] = i;
  return {n, std::move(v)};
}

MonotoneMap MonotoneMap::coface(int n, int i) {
  if (n < 1 || i < 0 || i > n) throw ValidationError("coface index out of range");
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int t = 0; t <= n; ++t)
    if (t != i) v.push_back(t);
  return {n, std::move(v)};
}

MonotoneMap MonotoneMap::codegeneracy(int n, int j) {
  if (n < 0 || j < 0 || j > n) throw ValidationError("codegeneracy index out of range");
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n) + 2);
  for (int t = 0; t <= n + 1; ++t) v.push_back(t <= j ? t : t - 1);
  return {n, std::move(v)};
}

MonotoneMap MonotoneMap::to_point(int k) {
  return {0, std::vector<int>(static_cast<std::size_t>(k) + 1, 0)};
}

MonotoneMap MonotoneMap::vertex(int n, int v) { return {n, std::vector<int>{v}}; }

bool MonotoneMap::is_injective() const {
  for (std::size_t i = 1; i < values_.size(); ++i)
    if (values_[i - 1] == values_[i]) return false;
  return true;
}

bool MonotoneMap::is_surjective() const {
  if (values_.front() != 0 || values_.back() != cod_) return false;
  for (std::size_t i = 1; i < values_.size(); ++i)
    if (values_[i] - values_[i - 1] > 1) return false;
  return true;
}

bool MonotoneMap::is_identity() const { return dom() == cod_ && is_injective(); }

std::uint64_t MonotoneMap::code() const {
  std::uint64_t c = static_cast<std::uint64_t>(dom());
  c = (c << 4) | static_cast<std::uint64_t>(cod_);
  for (int v : values_) c = (c << 4) | static_cast<std::uint64_t>(v);
  return c;
}

std::string MonotoneMap::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < values_.size(); ++i) os << (i ? "," : "") << values_[i];
  os << "):[" << dom() << "]->[" << cod_ << ']';
  return os.str();
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  if (f.cod() != g.dom())
    throw CompositionMismatch("compose: " + g.to_string() + " o " + f.to_string());
  std::vector<int> v(static_cast<std::size_t>(f.dom()) + 1);
  for (int i = 0; i <= f.dom(); ++i) v[static_cast<std::size_t>(i)] = g(f(i));
  return {g.cod(), std::move(v)};
}

EpiMono epi_mono_factorize(const MonotoneMap& u) {
  std::vector<int> image;
  std::vector<int> surj;
  surj.reserve(u.values().size());
  for (int v : u.values()) {
    if (image.empty() || image.back() != v) image.push_back(v);
    surj.push_back(static_cast<int>(image.size()) - 1);
  }
  const int r = static_cast<int>(image.size()) - 1;
  return {MonotoneMap(r, std::move(surj)), MonotoneMap(u.cod(), std::move(image))};
}

namespace {

void enumerate_rec(int k, int n, std::vector<int>& prefix, std::vector<MonotoneMap>& out) {
  if (static_cast<int>(prefix.size()) == k + 1) {
    out.emplace_back(n, prefix);
    return;
  }
  const int lo = prefix.empty() ? 0 : prefix.back();
  for (int v = lo; v <= n; ++v) {
    prefix.push_back(v);
    enumerate_rec(k, n, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<MonotoneMap> enumerate_hom(int k, int n, HomClass cls) {
  if (k < 0 || n < 0) throw ValidationError("enumerate_hom: negative ordinal");
  std::vector<MonotoneMap> all;
  std::vector<int> prefix;
  enumerate_rec(k, n, prefix, all);
  if (cls == HomClass::all) return all;
  std::vector<MonotoneMap> out;
  for (auto& u : all)
    if (cls == HomClass::surjective ? u.is_surjective() : u.is_injective()) out.push_back(std::move(u));
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t hom_count(int k, int n, HomClass cls) {
  switch (cls) {
    case HomClass::all:
      return binomial(n + k + 1, k + 1);
    case HomClass::surjective:
      return k >= n ? binomial(k, n) : 0;
    case HomClass::injective:
      return k <= n ? binomial(n + 1, k + 1) : 0;
  }
  return 0;
}

HomSet::HomSet(int k, int n, HomClass cls) : k_(k), n_(n), maps_(enumerate_hom(k, n, cls)) {
  lookup_.reserve(maps_.size());
  for (std::size_t i = 0; i < maps_.size(); ++i) lookup_.emplace(maps_[i].code(), i);
}

std::size_t HomSet::index(const MonotoneMap& u) const {
  auto it = lookup_.find(u.code());
  if (it == lookup_.end()) throw std::out_of_range("HomSet::index: " + u.to_string() + " not a member");
  return it->second;
}

std::vector<int> missing_values_descending(const MonotoneMap& injection) {
  std::vector<char> hit(static_cast<std::size_t>(injection.cod()) + 1, 0);
  for (int v : injection.values()) hit[static_cast<std::size_t>(v)] = 1;
  std::vector<int> out;
  for (int j = injection.cod(); j >= 0; --j)
    if (!hit[static_cast<std::size_t>(j)]) out.push_back(j);
  return out;
}

std::vector<int> repeat_positions_ascending(const MonotoneMap& surjection) {
  std::vector<int> out;
  for (int j = 0; j < surjection.dom(); ++j)
    if (surjection(j) == surjection(j + 1)) out.push_back(j);
  return out;
}

LatchingIndexCategory::LatchingIndexCategory(int n) : n_(n) {
  if (n < 1) return;
  for (int m = 0; m < n; ++m)
    for (auto& phi : enumerate_hom(n, m, HomClass::surjective)) objects_.push_back(std::move(phi));
  // Surjections are determined by their values, so this is lexicographic order.
  std::sort(objects_.begin(), objects_.end(), [](const MonotoneMap& a, const MonotoneMap& b) {
    return std::lexicographical_compare(a.values().begin(), a.values().end(), b.values().begin(),
                                        b.values().end());
  });
  // The connecting map, when it exists, is forced: w(phi(i)) = phi'(i).
  for (std::size_t s = 0; s < objects_.size(); ++s) {
    for (std::size_t t = 0; t < objects_.size(); ++t) {
      const auto& phi = objects_[s];
      const auto& psi = objects_[t];
      std::vector<int> w(static_cast<std::size_t>(phi.cod()) + 1, -1);
      bool ok = true;
      for (int i = 0; i <= n && ok; ++i) {
        auto& slot = w[static_cast<std::size_t>(phi(i))];
        if (slot < 0) slot = psi(i);
        else if (slot != psi(i)) ok = false;
      }
      if (!ok || !std::is_sorted(w.begin(), w.end())) continue;
      arrows_.push_back({s, t, MonotoneMap(psi.cod(), std::move(w))});
    }
  }
}

bool LatchingIndexCategory::in_filtration_stage(const MonotoneMap& phi, int k) { return phi(k) < k; }

bool LatchingIndexCategory::factors_through_codegeneracy(const MonotoneMap& phi, int k) {
  return phi(k) == phi(k + 1);
}

std::vector<std::size_t> LatchingIndexCategory::select(
    const std::function<bool(const MonotoneMap&)>& pred) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (pred(objects_[i])) out.push_back(i);
  return out;
}

LatchingIndexCategory latching_category(int n) { return LatchingIndexCategory(n); }

}  // namespace realcmp
