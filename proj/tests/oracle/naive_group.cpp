#include "oracle/naive_group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace weyl::oracle {

namespace {

std::string key(const RationalMatrix& m) {
  std::string k;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) k += to_string(m(r, c)) + ',';
  return k;
}

}  // namespace

RationalMatrix ambient_reflection(const RootSystem& rs, std::size_t i) {
  const auto& a = rs.root(i).coords;
  const auto& d = rs.form_diagonal();
  const std::size_t n = a.size();
  const Rational aa = rs.form(a, a);
  RationalMatrix m = RationalMatrix::identity(n);
  // s(e_k) = e_k - 2 (e_k, a)/(a, a) a
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t r = 0; r < n; ++r) m(r, k) -= Rational(2) * d[k] * a[k] / aa * a[r];
  return m;
}

std::vector<RationalMatrix> enumerate_group(const RootSystem& rs) {
  std::vector<RationalMatrix> gens;
  for (auto i : rs.simple_roots()) gens.push_back(ambient_reflection(rs, i));
  std::vector<RationalMatrix> elements{RationalMatrix::identity(rs.ambient_dim())};
  std::unordered_set<std::string> seen{key(elements.front())};
  for (std::size_t head = 0; head < elements.size(); ++head)
    for (const auto& s : gens) {
      RationalMatrix g = s * elements[head];
      if (seen.insert(key(g)).second) elements.push_back(std::move(g));
    }
  return elements;
}

NaiveInvolutionData naive_involutions(const RootSystem& rs) {
  const auto group = enumerate_group(rs);
  const std::size_t n = rs.ambient_dim();
  const RationalMatrix one = RationalMatrix::identity(n);

  std::vector<RationalMatrix> inverses;
  inverses.reserve(group.size());
  {
    // Orthogonal for a diagonal form D: g^{-1} = D^{-1} g^T D.
    RationalMatrix dm(n, n), dinv(n, n);
    for (std::size_t k = 0; k < n; ++k) {
      dm(k, k) = rs.form_diagonal()[k];
      dinv(k, k) = Rational(1) / rs.form_diagonal()[k];
    }
    for (const auto& g : group) inverses.push_back(dinv * g.transpose() * dm);
  }

  NaiveInvolutionData out;
  out.group_order = group.size();
  std::unordered_map<std::string, std::size_t> invols;
  std::vector<std::size_t> inv_index;
  for (std::size_t i = 0; i < group.size(); ++i)
    if (group[i] * group[i] == one) {
      invols.emplace(key(group[i]), inv_index.size());
      inv_index.push_back(i);
    }
  out.involution_count = inv_index.size();

  std::vector<bool> done(inv_index.size(), false);
  for (std::size_t a = 0; a < inv_index.size(); ++a) {
    if (done[a]) continue;
    const RationalMatrix& g = group[inv_index[a]];
    std::set<std::size_t> orbit;
    for (std::size_t h = 0; h < group.size(); ++h) {
      const auto it = invols.find(key(group[h] * g * inverses[h]));
      orbit.insert(it->second);
    }
    for (auto m : orbit) done[m] = true;
    Rational tr = g.trace();
    Rational deg = (Rational(static_cast<std::int64_t>(n)) - tr) / Rational(2);
    out.classes.push_back(NaiveClass{static_cast<int>(boost::rational_cast<std::int64_t>(deg)), orbit.size()});
  }
  std::sort(out.classes.begin(), out.classes.end(), [](const NaiveClass& x, const NaiveClass& y) {
    return x.degree != y.degree ? x.degree < y.degree : x.size < y.size;
  });
  return out;
}

std::vector<RationalVector> naive_root_closure(const RootSystem& rs) {
  std::vector<RationalMatrix> gens;
  std::vector<RationalVector> roots;
  std::set<std::string> seen;
  auto vkey = [](const RationalVector& v) {
    std::string k;
    for (const auto& x : v) k += to_string(x) + ',';
    return k;
  };
  for (auto i : rs.simple_roots()) {
    gens.push_back(ambient_reflection(rs, i));
    roots.push_back(rs.root(i).coords);
    seen.insert(vkey(roots.back()));
  }
  for (std::size_t head = 0; head < roots.size(); ++head)
    for (const auto& s : gens) {
      RationalVector v(roots[head].size());
      for (std::size_t r = 0; r < v.size(); ++r)
        for (std::size_t c = 0; c < v.size(); ++c) v[r] += s(r, c) * roots[head][c];
      if (seen.insert(vkey(v)).second) roots.push_back(std::move(v));
    }
  return roots;
}

}  // namespace weyl::oracle
