#include "weyl/involution_atlas.hpp"

#include "weyl/errors.hpp"
#include "weyl/simd/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>
#include <unordered_map>

namespace weyl {
namespace {

void require_mask_fit(const RootSystem& rs) {
  if (!rs.fits_root_mask())
    throw UsageError(rs.type().str() + " has " + std::to_string(rs.num_positive()) +
                     " positive roots; atlas computations support at most " +
                     std::to_string(RootMask::kMaxPositiveRoots));
}

// Span membership for pairwise orthogonal roots g_1..g_k:
//   beta in span  <=>  sum_i (beta,g_i)^2 / (g_i,g_i) == (beta,beta).
// Scaled by the lcm L of all root norms this is the integer identity
//   sum_i (L / |g_i|^2) ip(beta,g_i)^2 == L ip(beta,beta).
struct SpanTest {
  std::int32_t lcm_norm = 1;
  std::vector<std::int32_t> target;  // padded; padding lanes never match

  explicit SpanTest(const RootSystem& rs) : target(rs.padded_positive(), -1) {
    for (std::size_t i = 0; i < rs.num_positive(); ++i) lcm_norm = std::lcm(lcm_norm, rs.norm(i));
    for (std::size_t i = 0; i < rs.num_positive(); ++i) target[i] = lcm_norm * rs.norm(i);
  }
  std::int32_t weight(const RootSystem& rs, std::size_t root) const { return lcm_norm / rs.norm(root); }
};

RootMask mask_from_acc(const simd::Kernels& k, const SpanTest& test, const std::vector<std::int32_t>& acc) {
  RootMask m;
  k.equal_mask(acc.data(), test.target.data(), acc.size(), m.words().data());
  return m;
}

RootMask above(const RootMask& m, std::size_t i) {
  RootMask out = m;
  for (std::size_t k = 0; k <= i; ++k) out.reset(k);
  return out;
}

struct CliqueWalker {
  const RootSystem& rs;
  const SpanTest& test;
  const simd::Kernels& kernels;
  bool with_span;
  std::vector<std::vector<std::int32_t>> acc;  // per depth

  void walk(const Cube& cube, const RootMask& candidates, std::size_t depth, std::vector<CubeRecord>& out) {
    CubeRecord rec{cube, {}};
    if (with_span) rec.span_roots = mask_from_acc(kernels, test, acc[depth]);
    out.push_back(rec);
    candidates.for_each([&](std::size_t c) {
      acc[depth + 1] = acc[depth];
      if (with_span)
        kernels.accumulate_weighted_squares(acc[depth + 1].data(), rs.positive_ip_row(c).data(),
                                            test.weight(rs, c), acc[depth + 1].size());
      Cube next = cube;
      next.roots.set(c);
      walk(next, above(candidates & rs.orthogonal_mask(c), c), depth + 1, out);
    });
  }
};

std::vector<CubeRecord> enumerate(const RootSystem& rs, const AtlasOptions& opt, bool with_span) {
  require_mask_fit(rs);
  const SpanTest test(rs);
  const auto& kernels = simd::active();
  const std::size_t npos = rs.num_positive();
  const auto depth_cap = static_cast<std::size_t>(rs.rank()) + 2;

  std::vector<std::vector<CubeRecord>> per_first(npos);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    CliqueWalker w{rs, test, kernels, with_span,
                   std::vector<std::vector<std::int32_t>>(depth_cap, std::vector<std::int32_t>(rs.padded_positive(), 0))};
    for (std::size_t first = next++; first < npos; first = next++) {
      std::fill(w.acc[1].begin(), w.acc[1].end(), 0);
      if (with_span)
        kernels.accumulate_weighted_squares(w.acc[1].data(), rs.positive_ip_row(first).data(),
                                            test.weight(rs, first), w.acc[1].size());
      Cube c;
      c.roots.set(first);
      w.walk(c, above(rs.orthogonal_mask(first), first), 1, per_first[first]);
    }
  };
  unsigned threads = opt.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : opt.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(npos, 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<CubeRecord> out;
  out.push_back(CubeRecord{});  // empty cube, empty span
  for (auto& part : per_first) {
    out.insert(out.end(), part.begin(), part.end());
    std::vector<CubeRecord>().swap(part);
  }
  return out;
}

std::vector<std::function<RootMask(const RootMask&)>> simple_actions(const RootSystem& rs) {
  std::vector<std::function<RootMask(const RootMask&)>> gens;
  for (std::size_t i = 0; i < static_cast<std::size_t>(rs.rank()); ++i) {
    auto perm = rs.reflection_perm(rs.simple_root(i));
    gens.emplace_back([&rs, perm](const RootMask& m) { return act_on_mask(rs, perm, m); });
  }
  return gens;
}

}  // namespace

std::vector<Cube> enumerate_cubes(const RootSystem& rs, const AtlasOptions& opt) {
  auto records = enumerate(rs, opt, false);
  std::vector<Cube> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.cube);
  return out;
}

std::vector<CubeRecord> enumerate_cube_records(const RootSystem& rs, const AtlasOptions& opt) {
  return enumerate(rs, opt, true);
}

RootMask span_roots(const RootSystem& rs, const Cube& c) {
  require_mask_fit(rs);
  const SpanTest test(rs);
  const auto& k = simd::active();
  std::vector<std::int32_t> acc(rs.padded_positive(), 0);
  const auto roots = c.root_list();
  for (std::size_t a = 0; a < roots.size(); ++a)
    for (std::size_t b = a + 1; b < roots.size(); ++b)
      if (rs.ip(roots[a], roots[b]) != 0) throw UsageError("cube roots are not pairwise orthogonal");
  for (auto r : roots) k.accumulate_weighted_squares(acc.data(), rs.positive_ip_row(r).data(), test.weight(rs, r), acc.size());
  return mask_from_acc(k, test, acc);
}

RootMask act_on_mask(const RootSystem& rs, std::span<const std::int32_t> images, const RootMask& m) {
  RootMask out;
  m.for_each([&](std::size_t i) { out.set(rs.positive_part(static_cast<std::size_t>(images[i]))); });
  return out;
}

Involution Involution::from_element(const GroupElement& g) {
  if (!g.is_involution()) throw UsageError("element does not square to the identity");
  const RootSystem& rs = g.home();
  require_mask_fit(rs);
  Involution inv{g, {}, {}, 0};
  for (std::size_t i = 0; i < rs.num_positive(); ++i)
    if (g[i] == rs.negative(i)) inv.eigen_roots.set(i);
  RationalMatrix shifted = element_matrix(g) + RationalMatrix::identity(static_cast<std::size_t>(rs.rank()));
  inv.eigenspace = shifted.nullspace();
  inv.degree = static_cast<int>(inv.eigenspace.rows());
  return inv;
}

Involution involution_from_cube(const RootSystemPtr& rs, const Cube& c) {
  GroupElement g = identity(rs);
  std::vector<RationalVector> rows;
  for (auto r : c.root_list()) {
    g = compose(g, reflection_element(rs, r));
    const auto& coeffs = rs->root(r).simple_coeffs;
    rows.emplace_back(coeffs.begin(), coeffs.end());
  }
  Involution inv{g, {}, span_roots(*rs, c), static_cast<int>(c.rank())};
  inv.eigenspace = rows.empty() ? RationalMatrix(0, static_cast<std::size_t>(rs->rank()))
                                : RationalMatrix::from_rows(rows).rref();
  return inv;
}

Cube split_eigen_roots(const RootSystem& rs, const RootMask& eigen_roots, int degree) {
  Cube c;
  std::vector<std::size_t> chosen;
  eigen_roots.for_each([&](std::size_t b) {
    for (auto a : chosen)
      if (rs.ip(a, b) != 0) return;
    chosen.push_back(b);
    c.roots.set(b);
  });
  if (static_cast<int>(chosen.size()) != degree)
    throw InternalError("involution of degree " + std::to_string(degree) + " in " + rs.type().str() +
                        " admits no splitting: greedy search stopped at " + std::to_string(chosen.size()) +
                        " roots");
  return c;
}

Cube split_involution(const RootSystem& rs, const Involution& inv) {
  return split_eigen_roots(rs, inv.eigen_roots, inv.degree);
}

namespace {

struct InvolutionKeys {
  std::vector<RootMask> keys;
  std::vector<int> degree;
  std::uint64_t cubes = 0;
};

InvolutionKeys dedupe(const std::vector<CubeRecord>& records) {
  InvolutionKeys out;
  std::unordered_map<RootMask, std::size_t, RootMaskHash> seen;
  seen.reserve(records.size());
  for (const auto& r : records) {
    auto [it, fresh] = seen.emplace(r.span_roots, out.keys.size());
    if (fresh) {
      out.keys.push_back(r.span_roots);
      out.degree.push_back(static_cast<int>(r.cube.rank()));
    } else if (out.degree[it->second] != static_cast<int>(r.cube.rank())) {
      throw InternalError("two splittings of one involution have different sizes");
    }
  }
  out.cubes = records.size();
  return out;
}

std::vector<InvolutionClass> involution_classes(const RootSystemPtr& rs, const InvolutionKeys& inv) {
  const auto gens = simple_actions(*rs);
  auto part = orbit_partition<RootMask, RootMaskHash>(inv.keys, gens);
  std::vector<InvolutionClass> out;
  for (std::size_t c = 0; c < part.members.size(); ++c) {
    const std::size_t rep = part.representative[c];
    const int degree = inv.degree[rep];
    for (auto m : part.members[c])
      if (inv.degree[m] != degree) throw InternalError("degree is not constant on a conjugacy class");
    Cube split = split_eigen_roots(*rs, inv.keys[rep], degree);
    Involution repr = involution_from_cube(rs, split);
    if (repr.eigen_roots != inv.keys[rep]) throw InternalError("splitting does not reproduce the involution");
    out.push_back(InvolutionClass{std::move(repr), degree, part.members[c].size(), split});
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.size != b.size) return a.size < b.size;
    return a.representative.eigen_roots < b.representative.eigen_roots;
  });
  return out;
}

CubeClassification cube_classes(const RootSystem& rs, std::vector<Cube> cubes) {
  std::vector<RootMask> keys;
  keys.reserve(cubes.size());
  for (const auto& c : cubes) keys.push_back(c.roots);
  const auto gens = simple_actions(rs);
  auto part = orbit_partition<RootMask, RootMaskHash>(keys, gens);
  std::vector<std::size_t> order(part.members.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto rank_of = [&](std::size_t c) { return keys[part.representative[c]].count(); };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (rank_of(a) != rank_of(b)) return rank_of(a) < rank_of(b);
    if (part.members[a].size() != part.members[b].size()) return part.members[a].size() < part.members[b].size();
    return keys[part.representative[a]] < keys[part.representative[b]];
  });
  CubeClassification out;
  for (auto c : order) {
    out.classes.push_back(CubeClass{cubes[part.representative[c]], part.members[c].size()});
    std::vector<Cube> mem;
    mem.reserve(part.members[c].size());
    for (auto i : part.members[c]) mem.push_back(cubes[i]);
    out.members.push_back(std::move(mem));
  }
  return out;
}

}  // namespace

std::vector<InvolutionClass> classify_involutions(const RootSystemPtr& rs, const AtlasOptions& opt) {
  return involution_classes(rs, dedupe(enumerate_cube_records(*rs, opt)));
}

CubeClassification classify_cubes(const RootSystem& rs, const AtlasOptions& opt) {
  return cube_classes(rs, enumerate_cubes(rs, opt));
}

Atlas build_atlas(const RootSystemPtr& rs, const AtlasOptions& opt) {
  Atlas atlas;
  atlas.roots = rs;
  atlas.group_order = group_order(*rs);
  auto records = enumerate_cube_records(*rs, opt);
  auto keys = dedupe(records);
  atlas.involution_count = keys.keys.size();
  atlas.cube_count = keys.cubes;
  atlas.involution_classes = involution_classes(rs, keys);
  std::vector<Cube> cubes;
  cubes.reserve(records.size());
  for (const auto& r : records) cubes.push_back(r.cube);
  std::vector<CubeRecord>().swap(records);
  atlas.cube_classes = cube_classes(*rs, std::move(cubes)).classes;
  return atlas;
}

std::string Atlas::class_id(std::size_t i) const {
  const int d = involution_classes.at(i).degree;
  std::size_t k = 0;
  for (std::size_t j = 0; j < i; ++j)
    if (involution_classes[j].degree == d) ++k;
  std::string id = std::to_string(d);
  if (k < 26) return id + static_cast<char>('a' + k);
  return id + "_" + std::to_string(k);
}

std::size_t Atlas::class_index(const std::string& id) const {
  for (std::size_t i = 0; i < involution_classes.size(); ++i)
    if (class_id(i) == id) return i;
  throw UsageError("no involution class '" + id + "' in " + roots->type().str());
}

ReductionReport verify_reduction(const RootSystemPtr& rs, const SubsystemEmbedding& sub, const AtlasOptions& opt) {
  if (sub.ambient != rs) throw UsageError("subsystem embedding belongs to another root system");
  ReductionReport rep;
  rep.type = rs->type().str();
  rep.sub_type = sub.sub_type.str();
  rep.group_order = group_order(*rs);
  rep.sub_order = reflection_subgroup_order(*rs, sub.sub_simple_roots);
  if (rep.sub_order == 0 || rep.group_order % rep.sub_order != 0)
    throw InternalError("subgroup order does not divide the group order");
  rep.index = rep.group_order / rep.sub_order;
  rep.index_odd = rep.index % 2 == 1;

  const RootMask inside = subsystem_positive_mask(sub);
  auto cls = classify_cubes(*rs, opt);
  rep.all_covered = true;
  for (std::size_t c = 0; c < cls.classes.size(); ++c) {
    CoverageEntry e;
    e.cube_class = c;
    e.cube_rank = cls.classes[c].representative.rank();
    e.class_size = cls.classes[c].size;
    for (const auto& m : cls.members[c])
      if (m.roots.subset_of(inside)) {
        e.covered = true;
        e.witness = m;
        break;
      }
    rep.all_covered = rep.all_covered && e.covered;
    rep.coverage.push_back(e);
  }
  rep.pass = rep.index_odd && rep.all_covered;
  return rep;
}

std::optional<TypeSpec> reduction_target(const TypeSpec& type) {
  if (type.factors().size() != 1) return std::nullopt;
  const Factor f = type.factors().front();
  switch (f.family) {
    case Family::E:
      if (f.rank == 6) return TypeSpec::parse("D5");
      if (f.rank == 7) return TypeSpec::parse("A1xD6");
      return TypeSpec::parse("D8");
    case Family::F:
      return TypeSpec::parse("B4");
    case Family::G:
      return TypeSpec::parse("A1xA1");
    default:
      return std::nullopt;
  }
}

}  // namespace weyl
