#include "weyl/gap_search.hpp"

#include "weyl/errors.hpp"

#include <json.hpp>

#include <functional>

namespace weyl {

Catalogue build_catalogue(const RootSystemPtr& rs, const GapBudget& budget) {
  Catalogue cat;
  cat.base.push_back(Representation::trivial(rs));
  cat.base.push_back(Representation::sign(rs));
  cat.base.push_back(Representation::coxeter(rs));
  for (int k = 2; k <= std::min(budget.max_exterior, rs->rank()); ++k)
    cat.base.push_back(Representation::exterior_power(rs, k));
  if (budget.permutations) {
    cat.base.push_back(Representation::root_permutation(rs));
    std::vector<TypeSpec> subs = budget.conjugate_subsystems;
    if (auto t = reduction_target(rs->type())) subs.insert(subs.begin(), *t);
    std::vector<std::string> done;
    for (const auto& t : subs) {
      if (std::find(done.begin(), done.end(), t.str()) != done.end()) continue;
      done.push_back(t.str());
      auto sub = find_subsystem(rs, t);
      if (!sub) throw UsageError(t.str() + " is not a subsystem of " + rs->type().str());
      cat.base.push_back(Representation::conjugate_permutation(*sub));
    }
  }
  cat.entries = cat.base;
  if (budget.pairs) {
    for (std::size_t i = 0; i < cat.base.size(); ++i)
      for (std::size_t j = i; j < cat.base.size(); ++j) {
        cat.entries.push_back(Representation::direct_sum(cat.base[i], cat.base[j]));
        cat.entries.push_back(Representation::tensor_product(cat.base[i], cat.base[j]));
      }
  }
  if (cat.entries.size() > budget.max_catalogue) {
    cat.entries.resize(budget.max_catalogue);
    cat.partial = true;
  }
  return cat;
}

std::string GapFindings::json() const {
  nlohmann::ordered_json j;
  j["type"] = type;
  j["pair"] = {pair[0], pair[1]};
  j["degree"] = degree;
  j["target"] = target;
  auto hs = nlohmann::ordered_json::array();
  for (const auto& h : hits) hs.push_back({{"rep", h.rep}, {"gap", h.gap}});
  j["hits"] = std::move(hs);
  j["catalogue_size"] = catalogue_size;
  j["partial"] = partial;
  return j.dump();
}

GapFindings search_gap(const Atlas& atlas, std::size_t a, std::size_t b, const Catalogue& catalogue) {
  const auto& ca = atlas.involution_classes.at(a);
  const auto& cb = atlas.involution_classes.at(b);
  if (ca.degree != cb.degree)
    throw UsageError("search_gap: classes " + atlas.class_id(a) + " and " + atlas.class_id(b) +
                     " have different degrees");
  GapFindings f;
  f.type = atlas.roots->type().str();
  f.pair = {atlas.class_id(a), atlas.class_id(b)};
  f.degree = ca.degree;
  f.target = std::int64_t{1} << ca.degree;
  f.catalogue_size = catalogue.entries.size();
  f.partial = catalogue.partial;

  // Independent representatives for re-verification: rebuilt from the
  // splittings and conjugated by a fixed simple reflection.
  const auto& rs = atlas.roots;
  const GroupElement s0 = reflection_element(rs, 0);
  const GroupElement va = conjugate(involution_from_cube(rs, ca.splitting).element, s0);
  const GroupElement vb = conjugate(involution_from_cube(rs, cb.splitting).element, s0);

  for (const auto& rho : catalogue.entries) {
    const std::int64_t gap = character_gap(*rho, ca, cb);
    if (gap != f.target && gap != -f.target) continue;
    const Rational check = rho->character(va) - rho->character(vb);
    if (check != Rational(gap)) throw InternalError("character gap of " + rho->descriptor() + " is not a class function");
    f.hits.push_back(GapHit{rho->descriptor(), gap});
  }
  return f;
}

namespace {

// All multisets of symbols (rep, i) with indices summing to `degree`.
void monomials(const std::vector<SwSymbol>& symbols, std::size_t from, int remaining, std::vector<SwSymbol>& cur,
               const std::function<void(const std::vector<SwSymbol>&)>& emit) {
  if (remaining == 0) {
    emit(cur);
    return;
  }
  for (std::size_t i = from; i < symbols.size(); ++i) {
    if (symbols[i].index > remaining) continue;
    cur.push_back(symbols[i]);
    monomials(symbols, i, remaining - symbols[i].index, cur, emit);
    cur.pop_back();
  }
}

std::size_t f2_rank(std::vector<std::uint64_t> rows) {
  std::size_t rank = 0;
  for (int bit = 0; bit < 64; ++bit) {
    const std::uint64_t mask = std::uint64_t{1} << bit;
    auto pivot = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                              [&](std::uint64_t r) { return r & mask; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(rank), pivot);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && (rows[r] & mask)) rows[r] ^= rows[rank];
    ++rank;
  }
  return rank;
}

}  // namespace

SeparationReport sw_separation(const Atlas& atlas, int degree, const std::vector<RepresentationPtr>& reps) {
  SeparationReport rep;
  rep.type = atlas.roots->type().str();
  rep.degree = degree;
  std::vector<std::size_t> cls;
  for (std::size_t i = 0; i < atlas.involution_classes.size(); ++i)
    if (atlas.involution_classes[i].degree == degree) {
      cls.push_back(i);
      rep.classes.push_back(atlas.class_id(i));
    }
  if (cls.size() > 64) throw UsageError("too many classes of one degree for the separation report");

  std::vector<SwSymbol> symbols;
  for (const auto& r : reps)
    for (int i = 1; i <= std::min(degree, r->dimension()); ++i) symbols.push_back(SwSymbol{r, i});

  std::vector<CubeContext> contexts;
  for (auto c : cls) contexts.emplace_back(atlas.roots, atlas.involution_classes[c].splitting);

  std::vector<std::uint64_t> rows;
  std::vector<SwSymbol> cur;
  monomials(symbols, 0, degree, cur, [&](const std::vector<SwSymbol>& m) {
    InvariantExpr e = InvariantExpr::one();
    for (const auto& s : m) e = e * InvariantExpr::sw(s.rep, s.index);
    std::uint64_t row = 0;
    for (std::size_t k = 0; k < contexts.size(); ++k)
      if (pairing_on_cube(e, contexts[k]).at_zero()) row |= std::uint64_t{1} << k;
    rows.push_back(row);
  });
  rep.expressions = rows.size();
  rep.rank = f2_rank(rows);
  for (std::size_t x = 0; x < cls.size(); ++x)
    for (std::size_t y = x + 1; y < cls.size(); ++y) {
      bool same = true;
      for (auto r : rows) same = same && (((r >> x) & 1U) == ((r >> y) & 1U));
      if (same) rep.unseparated.push_back({rep.classes[x], rep.classes[y]});
    }
  return rep;
}

std::vector<HardCase> builtin_hard_cases() { return {{"D6", 3}, {"E7", 3}, {"E7", 4}, {"E8", 4}}; }

std::vector<int> hard_degrees(const TypeSpec& type) {
  if (type.factors().size() != 1) return {};
  const Factor f = type.factors().front();
  if (f.family == Family::D && f.rank % 2 == 0 && f.rank >= 6) return {f.rank / 2};
  if (f.family == Family::E && f.rank == 7) return {3, 4};
  if (f.family == Family::E && f.rank == 8) return {4};
  return {};
}

HardCaseReport analyse_hard_case(const Atlas& atlas, int degree, const Catalogue& catalogue) {
  HardCaseReport out;
  out.hard_case = HardCase{atlas.roots->type().str(), degree};
  out.separation = sw_separation(atlas, degree, catalogue.base);
  std::vector<std::array<std::string, 2>> pairs = out.separation.unseparated;
  if (pairs.empty()) {
    const auto& ids = out.separation.classes;
    for (std::size_t x = 0; x < ids.size(); ++x)
      for (std::size_t y = x + 1; y < ids.size(); ++y) pairs.push_back({ids[x], ids[y]});
  }
  for (const auto& p : pairs)
    out.findings.push_back(search_gap(atlas, atlas.class_index(p[0]), atlas.class_index(p[1]), catalogue));
  return out;
}

}  // namespace weyl
