#include "weyl/representation.hpp"

#include "weyl/errors.hpp"
#include "weyl/simd/kernels.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <optional>
#include <unordered_set>

namespace weyl {

std::int64_t exterior_trace_on_involution(int plus, int minus, int k) {
  if (k < 0 || k > plus + minus) return 0;
  // coefficients of (1+x)^plus (1-x)^minus
  std::vector<std::int64_t> poly{1};
  auto times = [&](std::int64_t sign) {
    std::vector<std::int64_t> next(poly.size() + 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i];
      next[i + 1] += sign * poly[i];
    }
    poly = std::move(next);
  };
  for (int i = 0; i < plus; ++i) times(1);
  for (int i = 0; i < minus; ++i) times(-1);
  return poly[static_cast<std::size_t>(k)];
}

std::size_t element_length(const GroupElement& g) {
  const RootSystem& rs = g.home();
  std::size_t len = 0;
  for (std::size_t i = 0; i < rs.num_positive(); ++i) len += !rs.is_positive(g[i]);
  return len;
}

RepresentationPtr Representation::trivial(const RootSystemPtr& rs) {
  std::shared_ptr<Representation> r(new Representation());
  r->kind_ = Kind::Trivial;
  r->home_ = rs;
  r->dimension_ = 1;
  r->descriptor_ = "trivial";
  return r;
}

RepresentationPtr Representation::sign(const RootSystemPtr& rs) {
  std::shared_ptr<Representation> r(new Representation());
  r->kind_ = Kind::Sign;
  r->home_ = rs;
  r->dimension_ = 1;
  r->descriptor_ = "sign";
  return r;
}

RepresentationPtr Representation::coxeter(const RootSystemPtr& rs) {
  std::shared_ptr<Representation> r(new Representation());
  r->kind_ = Kind::Coxeter;
  r->home_ = rs;
  r->dimension_ = rs->rank();
  r->descriptor_ = "cox";
  return r;
}

RepresentationPtr Representation::root_permutation(const RootSystemPtr& rs) {
  std::shared_ptr<Representation> r(new Representation());
  r->kind_ = Kind::RootPermutation;
  r->home_ = rs;
  r->dimension_ = static_cast<int>(rs->num_roots());
  r->descriptor_ = "roots";
  auto iota = std::make_shared<std::vector<std::int32_t>>(rs->num_roots());
  std::iota(iota->begin(), iota->end(), 0);
  r->iota_ = std::move(iota);
  return r;
}

RepresentationPtr Representation::conjugate_permutation(const SubsystemEmbedding& sub) {
  const RootSystemPtr& rs = sub.ambient;
  auto conj = std::make_shared<std::vector<RootMask>>();
  std::unordered_set<RootMask, RootMaskHash> seen;
  std::deque<RootMask> queue;
  const RootMask start = subsystem_positive_mask(sub);
  seen.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    RootMask m = queue.front();
    queue.pop_front();
    conj->push_back(m);
    for (std::size_t i = 0; i < static_cast<std::size_t>(rs->rank()); ++i) {
      RootMask img = act_on_mask(*rs, rs->reflection_perm(rs->simple_root(i)), m);
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  std::sort(conj->begin(), conj->end());
  std::shared_ptr<Representation> r(new Representation());
  r->kind_ = Kind::ConjugatePermutation;
  r->home_ = rs;
  r->dimension_ = static_cast<int>(conj->size());
  r->descriptor_ = "conj(" + sub.sub_type.str() + ")";
  r->conjugates_ = std::move(conj);
  return r;
}

RepresentationPtr Representation::exterior_power(const RootSystemPtr& rs, int k) {
  if (k < 0 || k > rs->rank())
    throw UsageError("exterior power " + std::to_string(k) + " outside [0, " + std::to_string(rs->rank()) + "]");
  std::shared_ptr<Representation> r(new Representation());
  r->kind_ = Kind::ExteriorPower;
  r->home_ = rs;
  r->power_ = k;
  std::int64_t binom = 1;
  for (int i = 0; i < k; ++i) binom = binom * (rs->rank() - i) / (i + 1);
  r->dimension_ = static_cast<int>(binom);
  r->descriptor_ = "lambda" + std::to_string(k);
  return r;
}

RepresentationPtr Representation::direct_sum(const RepresentationPtr& a, const RepresentationPtr& b) {
  if (a->home_ != b->home_) throw UsageError("direct sum of representations of different groups");
  std::shared_ptr<Representation> r(new Representation());
  r->kind_ = Kind::DirectSum;
  r->home_ = a->home_;
  r->dimension_ = a->dimension_ + b->dimension_;
  r->descriptor_ = "sum(" + a->descriptor_ + "," + b->descriptor_ + ")";
  r->parts_ = {a, b};
  return r;
}

RepresentationPtr Representation::tensor_product(const RepresentationPtr& a, const RepresentationPtr& b) {
  if (a->home_ != b->home_) throw UsageError("tensor product of representations of different groups");
  std::shared_ptr<Representation> r(new Representation());
  r->kind_ = Kind::TensorProduct;
  r->home_ = a->home_;
  r->dimension_ = a->dimension_ * b->dimension_;
  r->descriptor_ = "tensor(" + a->descriptor_ + "," + b->descriptor_ + ")";
  r->parts_ = {a, b};
  return r;
}

RepresentationPtr Representation::custom(const RootSystemPtr& rs, std::string descriptor, int dimension, TraceFn trace) {
  std::shared_ptr<Representation> r(new Representation());
  r->kind_ = Kind::Custom;
  r->home_ = rs;
  r->dimension_ = dimension;
  r->descriptor_ = std::move(descriptor);
  r->custom_ = std::move(trace);
  return r;
}

Rational Representation::character(const GroupElement& g) const {
  if (g.home_ptr() != home_) throw UsageError("character: element of another group");
  switch (kind_) {
    case Kind::Trivial:
      return 1;
    case Kind::Sign:
      return element_length(g) % 2 == 0 ? 1 : -1;
    case Kind::Coxeter:
      return element_trace(g);
    case Kind::RootPermutation:
      return static_cast<std::int64_t>(
          simd::active().count_equal(g.images().data(), iota_->data(), iota_->size()));
    case Kind::ConjugatePermutation: {
      std::int64_t fixed = 0;
      for (const auto& c : *conjugates_) fixed += act_on_mask(*home_, g.images(), c) == c;
      return fixed;
    }
    case Kind::ExteriorPower: {
      const int r = home_->rank();
      if (g.is_involution()) {
        const auto tr = element_trace(g);
        const int minus = static_cast<int>((r - tr) / 2);
        return exterior_trace_on_involution(r - minus, minus, power_);
      }
      // e_k of the eigenvalues = (-1)^k c_{r-k} of det(xI - g)
      auto c = element_matrix(g).characteristic_polynomial();
      Rational v = c[static_cast<std::size_t>(r - power_)];
      return power_ % 2 == 0 ? v : -v;
    }
    case Kind::DirectSum:
      return parts_[0]->character(g) + parts_[1]->character(g);
    case Kind::TensorProduct:
      return parts_[0]->character(g) * parts_[1]->character(g);
    case Kind::Custom:
      return custom_(g);
  }
  throw InternalError("unknown representation kind");
}

std::int64_t character_gap(const Representation& rho, const InvolutionClass& a, const InvolutionClass& b) {
  Rational gap = rho.character(a.representative.element) - rho.character(b.representative.element);
  if (gap.denominator() != 1) throw InternalError("non-integral character gap");
  return gap.numerator();
}

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// Splits "a,b" at the top-level comma.
std::pair<std::string_view, std::string_view> split_pair(std::string_view inner, std::string_view whole) {
  int depth = 0;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] == '(') ++depth;
    if (inner[i] == ')') --depth;
    if (inner[i] == ',' && depth == 0) return {inner.substr(0, i), inner.substr(i + 1)};
  }
  throw UsageError("expected two arguments in '" + std::string(whole) + "'");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

RepresentationPtr parse_representation(const RootSystemPtr& rs, std::string_view name) {
  name = trim(name);
  const std::string key = lower(name);
  if (key == "trivial" || key == "1") return Representation::trivial(rs);
  if (key == "sign" || key == "det") return Representation::sign(rs);
  if (key == "cox" || key == "coxeter") return Representation::coxeter(rs);
  if (key == "roots") return Representation::root_permutation(rs);
  if (key.rfind("lambda", 0) == 0) {
    int k = 0;
    auto digits = std::string_view(key).substr(6);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
      throw UsageError("malformed exterior power '" + std::string(name) + "'");
    return Representation::exterior_power(rs, k);
  }
  auto call = [&](std::string_view prefix) -> std::optional<std::string_view> {
    if (key.rfind(prefix, 0) == 0 && key.size() > prefix.size() + 1 && key[prefix.size()] == '(' && key.back() == ')')
      return name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
    return std::nullopt;
  };
  if (auto inner = call("conj")) {
    auto target = TypeSpec::parse(trim(*inner));
    auto sub = find_subsystem(rs, target);
    if (!sub) throw UsageError(target.str() + " is not a subsystem of " + rs->type().str());
    return Representation::conjugate_permutation(*sub);
  }
  if (auto inner = call("sum")) {
    auto [a, b] = split_pair(*inner, name);
    return Representation::direct_sum(parse_representation(rs, a), parse_representation(rs, b));
  }
  if (auto inner = call("tensor")) {
    auto [a, b] = split_pair(*inner, name);
    return Representation::tensor_product(parse_representation(rs, a), parse_representation(rs, b));
  }
  throw UsageError("unknown representation '" + std::string(name) + "'");
}

}  // namespace weyl
