#include "weyl/root_system.hpp"

#include "weyl/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_map>

namespace weyl {
namespace {

struct FactorData {
  std::vector<RationalVector> simple;  // in the factor's own ambient space
  RationalVector form;                 // diagonal of the factor's form
};

RationalVector unit(std::size_t dim, std::size_t i, Rational scale = 1) {
  RationalVector v(dim, Rational(0));
  v[i] = scale;
  return v;
}

RationalVector sub(RationalVector a, const RationalVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

RationalVector add(RationalVector a, const RationalVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

// Simple roots after Bourbaki, Lie Groups ch. VI, plates I-IX. G2 carries the
// form halved so its squared lengths are 1 and 3.
FactorData factor_data(const Factor& f) {
  const auto n = static_cast<std::size_t>(f.rank);
  FactorData d;
  switch (f.family) {
    case Family::A:
      d.form.assign(n + 1, Rational(1));
      for (std::size_t i = 0; i < n; ++i) d.simple.push_back(sub(unit(n + 1, i), unit(n + 1, i + 1)));
      break;
    case Family::B:
    case Family::C:
    case Family::D:
      d.form.assign(n, Rational(1));
      for (std::size_t i = 0; i + 1 < n; ++i) d.simple.push_back(sub(unit(n, i), unit(n, i + 1)));
      if (f.family == Family::B) d.simple.push_back(unit(n, n - 1));
      if (f.family == Family::C) d.simple.push_back(unit(n, n - 1, 2));
      if (f.family == Family::D) d.simple.push_back(add(unit(n, n - 2), unit(n, n - 1)));
      break;
    case Family::E: {
      d.form.assign(8, Rational(1));
      RationalVector a1(8, Rational(-1, 2));
      a1[0] = Rational(1, 2);
      a1[7] = Rational(1, 2);
      d.simple.push_back(a1);
      d.simple.push_back(add(unit(8, 0), unit(8, 1)));
      for (std::size_t k = 3; k <= n; ++k) d.simple.push_back(sub(unit(8, k - 2), unit(8, k - 3)));
      break;
    }
    case Family::F: {
      d.form.assign(4, Rational(1));
      d.simple.push_back(sub(unit(4, 1), unit(4, 2)));
      d.simple.push_back(sub(unit(4, 2), unit(4, 3)));
      d.simple.push_back(unit(4, 3));
      d.simple.push_back({Rational(1, 2), Rational(-1, 2), Rational(-1, 2), Rational(-1, 2)});
      break;
    }
    case Family::G:
      d.form.assign(3, Rational(1, 2));
      d.simple.push_back({Rational(1), Rational(-1), Rational(0)});
      d.simple.push_back({Rational(-2), Rational(1), Rational(1)});
      break;
  }
  return d;
}

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x + 1024)) * 1099511628211ULL;
    return h;
  }
};

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / std::gcd(a, b) * b; }

}  // namespace

Rational RootSystem::form(const RationalVector& a, const RationalVector& b) const {
  if (a.size() != form_diag_.size() || b.size() != form_diag_.size())
    throw UsageError("dimension mismatch: vector of size " + std::to_string(a.size()) + "/" +
                     std::to_string(b.size()) + " in ambient space of dimension " +
                     std::to_string(form_diag_.size()));
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i] * form_diag_[i];
  return s;
}

std::shared_ptr<const RootSystem> RootSystem::build(const TypeSpec& spec) {
  if (spec.factors().empty()) throw UsageError("empty type");
  for (const auto& f : spec.factors())
    if (auto msg = check_factor(f); !msg.empty()) throw UsageError(msg);

  std::shared_ptr<RootSystem> rs(new RootSystem());
  rs->type_ = spec;
  rs->rank_ = spec.rank();

  // Block-diagonal assembly of the factors.
  std::vector<RationalVector> simple;
  std::size_t dim = 0;
  std::vector<FactorData> data;
  for (const auto& f : spec.factors()) {
    data.push_back(factor_data(f));
    dim += data.back().form.size();
  }
  std::size_t offset = 0;
  for (const auto& d : data) {
    for (const auto& s : d.simple) {
      RationalVector v(dim, Rational(0));
      std::copy(s.begin(), s.end(), v.begin() + static_cast<std::ptrdiff_t>(offset));
      simple.push_back(std::move(v));
    }
    rs->form_diag_.insert(rs->form_diag_.end(), d.form.begin(), d.form.end());
    offset += d.form.size();
  }

  const auto r = static_cast<std::size_t>(rs->rank_);
  std::vector<Rational> gram(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) gram[i * r + j] = rs->form(simple[i], simple[j]);

  rs->cartan_.assign(r * r, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Rational a = 2 * gram[i * r + j] / gram[j * r + j];
      if (a.denominator() != 1) throw InternalError("non-integral Cartan entry");
      rs->cartan_[i * r + j] = static_cast<int>(a.numerator());
    }

  // Reflection closure in simple-root coordinates.
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<int> e(r, 0);
    e[i] = 1;
    if (seen.insert(e).second) queue.push_back(e);
  }
  while (!queue.empty()) {
    auto c = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < r; ++i) {
      int pairing = 0;  // <beta, alpha_i^vee>
      for (std::size_t j = 0; j < r; ++j) pairing += c[j] * rs->cartan_[j * r + i];
      if (pairing == 0) continue;
      auto img = c;
      img[i] -= pairing;
      if (seen.insert(img).second) queue.push_back(std::move(img));
    }
  }

  std::vector<std::vector<int>> positive;
  for (const auto& c : seen)
    if (std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; })) positive.push_back(c);
  if (positive.size() * 2 != seen.size()) throw InternalError("roots do not come in +- pairs");
  auto height = [](const std::vector<int>& c) { return std::accumulate(c.begin(), c.end(), 0); };
  auto coords_of = [&](const std::vector<int>& c) {
    RationalVector v(dim, Rational(0));
    for (std::size_t j = 0; j < r; ++j)
      if (c[j] != 0)
        for (std::size_t k = 0; k < dim; ++k) v[k] += c[j] * simple[j][k];
    return v;
  };
  std::vector<std::pair<std::vector<int>, RationalVector>> keyed;
  for (auto& c : positive) keyed.emplace_back(c, coords_of(c));
  std::sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
    int ha = height(a.first), hb = height(b.first);
    if (ha != hb) return ha < hb;
    return a.second < b.second;
  });

  const std::size_t npos = keyed.size();
  rs->roots_.resize(2 * npos);
  rs->simple_.assign(r, 0);
  for (std::size_t i = 0; i < npos; ++i) {
    for (int sign : {1, -1}) {
      Root& root = rs->roots_[sign == 1 ? i : i + npos];
      root.simple_coeffs = keyed[i].first;
      for (auto& x : root.simple_coeffs) x *= sign;
      root.height = sign * height(keyed[i].first);
      root.coords = keyed[i].second;
      for (auto& x : root.coords) x *= sign;
    }
    if (rs->roots_[i].height == 1)
      for (std::size_t j = 0; j < r; ++j)
        if (keyed[i].first[j] == 1) rs->simple_[j] = i;
  }

  std::int64_t scale = 1;
  for (const auto& g : gram) scale = lcm64(scale, g.denominator());
  rs->ip_scale_ = scale;
  std::vector<std::int64_t> gint(r * r);
  for (std::size_t i = 0; i < r * r; ++i) gint[i] = (gram[i] * scale).numerator();

  const std::size_t n = rs->roots_.size();
  rs->ip_.assign(n * n, 0);
  for (std::size_t a = 0; a < npos; ++a) {
    std::vector<std::int64_t> ga(r, 0);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) ga[j] += rs->roots_[a].simple_coeffs[i] * gint[i * r + j];
    for (std::size_t b = 0; b < npos; ++b) {
      std::int64_t v = 0;
      for (std::size_t j = 0; j < r; ++j) v += ga[j] * rs->roots_[b].simple_coeffs[j];
      auto w = static_cast<std::int32_t>(v);
      rs->ip_[a * n + b] = w;
      rs->ip_[(a + npos) * n + (b + npos)] = w;
      rs->ip_[a * n + (b + npos)] = -w;
      rs->ip_[(a + npos) * n + b] = -w;
    }
  }

  std::unordered_map<std::vector<int>, std::size_t, VecHash> lookup;
  for (std::size_t i = 0; i < n; ++i) lookup.emplace(rs->roots_[i].simple_coeffs, i);

  rs->refl_.assign(npos * n, 0);
  for (std::size_t k = 0; k < npos; ++k) {
    const auto& ck = rs->roots_[k].simple_coeffs;
    const std::int32_t nk = rs->ip(k, k);
    std::vector<int> img(r);
    for (std::size_t b = 0; b < n; ++b) {
      std::int32_t twice = 2 * rs->ip(b, k);
      if (twice % nk != 0) throw InternalError("non-integral Cartan integer between roots");
      int m = twice / nk;
      const auto& cb = rs->roots_[b].simple_coeffs;
      for (std::size_t j = 0; j < r; ++j) img[j] = cb[j] - m * ck[j];
      auto it = lookup.find(img);
      if (it == lookup.end()) throw InternalError("root system not closed under reflection");
      rs->refl_[k * n + b] = static_cast<std::int32_t>(it->second);
    }
  }

  rs->padded_pos_ = (npos + 7) / 8 * 8;
  rs->pos_ip_.assign(npos * rs->padded_pos_, 0);
  for (std::size_t a = 0; a < npos; ++a)
    for (std::size_t b = 0; b < npos; ++b) rs->pos_ip_[a * rs->padded_pos_ + b] = rs->ip(a, b);

  if (rs->fits_root_mask()) {
    rs->orth_.assign(npos, RootMask{});
    for (std::size_t a = 0; a < npos; ++a)
      for (std::size_t b = 0; b < npos; ++b)
        if (rs->ip(a, b) == 0) rs->orth_[a].set(b);
  }
  return rs;
}

int RootSystem::cartan_integer(std::size_t a, std::size_t b) const {
  return 2 * ip(a, b) / ip(b, b);
}

std::optional<std::size_t> RootSystem::find_root(std::span<const int> simple_coeffs) const {
  if (simple_coeffs.size() != static_cast<std::size_t>(rank_)) return std::nullopt;
  for (std::size_t i = 0; i < roots_.size(); ++i)
    if (std::equal(simple_coeffs.begin(), simple_coeffs.end(), roots_[i].simple_coeffs.begin())) return i;
  return std::nullopt;
}

std::optional<std::size_t> RootSystem::find_root_coords(const RationalVector& coords) const {
  for (std::size_t i = 0; i < roots_.size(); ++i)
    if (roots_[i].coords == coords) return i;
  return std::nullopt;
}

std::span<const std::int32_t> RootSystem::reflection_perm(std::size_t root) const {
  const std::size_t k = positive_part(root);
  return {refl_.data() + k * roots_.size(), roots_.size()};
}

RootMask RootSystem::all_positive_mask() const {
  RootMask m;
  for (std::size_t i = 0; i < num_positive(); ++i) m.set(i);
  return m;
}

RationalVector reflect(const RootSystem& rs, const Root& mirror, const RationalVector& v) {
  Rational f = 2 * rs.form(v, mirror.coords) / rs.form(mirror.coords, mirror.coords);
  RationalVector out = v;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= f * mirror.coords[i];
  return out;
}

std::string root_system_json(const RootSystem& rs) {
  nlohmann::ordered_json j;
  j["type"] = rs.type().str();
  j["rank"] = rs.rank();
  auto roots = nlohmann::ordered_json::array();
  for (const auto& root : rs.roots()) {
    auto row = nlohmann::ordered_json::array();
    for (const auto& c : root.coords) row.push_back(to_string(c));
    roots.push_back(std::move(row));
  }
  j["roots"] = std::move(roots);
  return j.dump(2);
}

namespace {

// Node order for the search: every node after the first of its Dynkin
// component is adjacent to an earlier node, so candidates are pinned by a
// nonzero Cartan entry.
std::vector<std::size_t> search_order(const std::vector<int>& cartan, std::size_t m) {
  std::vector<std::size_t> order;
  std::vector<bool> placed(m, false);
  for (std::size_t start = 0; start < m; ++start) {
    if (placed[start]) continue;
    std::deque<std::size_t> q{start};
    placed[start] = true;
    while (!q.empty()) {
      std::size_t v = q.front();
      q.pop_front();
      order.push_back(v);
      for (std::size_t w = 0; w < m; ++w)
        if (!placed[w] && cartan[v * m + w] != 0) {
          placed[w] = true;
          q.push_back(w);
        }
    }
  }
  return order;
}

}  // namespace

std::optional<SubsystemEmbedding> find_subsystem(const RootSystemPtr& rs, const TypeSpec& target) {
  auto tgt = RootSystem::build(target);
  const auto m = static_cast<std::size_t>(tgt->rank());
  if (tgt->rank() > rs->rank() || tgt->num_roots() > rs->num_roots()) return std::nullopt;
  const auto& a = tgt->cartan_matrix();
  const auto order = search_order(a, m);

  std::vector<std::size_t> chosen(m);
  const std::size_t n = rs->num_roots();

  // Recursive DFS over positions in `order`.
  auto fits = [&](std::size_t depth, std::size_t cand) {
    const std::size_t node = order[depth];
    for (std::size_t d = 0; d < depth; ++d) {
      const std::size_t other = order[d];
      if (rs->cartan_integer(cand, chosen[other]) != a[node * m + other]) return false;
      if (rs->cartan_integer(chosen[other], cand) != a[other * m + node]) return false;
    }
    return true;
  };
  std::function<bool(std::size_t)> dfs = [&](std::size_t depth) -> bool {
    if (depth == m) return true;
    // The first root may be taken positive: negating a solution is a solution.
    const std::size_t limit = depth == 0 ? rs->num_positive() : n;
    for (std::size_t cand = 0; cand < limit; ++cand) {
      if (!fits(depth, cand)) continue;
      chosen[order[depth]] = cand;
      if (dfs(depth + 1)) return true;
    }
    return false;
  };
  if (!dfs(0)) return std::nullopt;
  return SubsystemEmbedding{rs, target, chosen};
}

std::vector<std::size_t> subsystem_closure(const SubsystemEmbedding& sub) {
  const auto& rs = *sub.ambient;
  std::vector<bool> in(rs.num_roots(), false);
  std::deque<std::size_t> queue;
  for (auto i : sub.sub_simple_roots)
    for (auto j : {i, rs.negative(i)})
      if (!in[j]) {
        in[j] = true;
        queue.push_back(j);
      }
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (auto g : sub.sub_simple_roots) {
      auto img = static_cast<std::size_t>(rs.reflection_perm(g)[v]);
      if (!in[img]) {
        in[img] = true;
        queue.push_back(img);
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < in.size(); ++i)
    if (in[i]) out.push_back(i);
  return out;
}

RootMask subsystem_positive_mask(const SubsystemEmbedding& sub) {
  RootMask m;
  for (auto i : subsystem_closure(sub))
    if (sub.ambient->is_positive(i)) m.set(i);
  return m;
}

}  // namespace weyl
