#include "weyl/base_poly.hpp"

#include "weyl/errors.hpp"

#include <bit>
#include <charconv>
#include <stdexcept>

namespace weyl {

BasePoly BasePoly::t(int k) {
  if (k < 0) throw UsageError("negative power of t");
  if (k > kMaxDegree) throw std::overflow_error("power of t exceeds " + std::to_string(kMaxDegree));
  return BasePoly(std::uint64_t{1} << k);
}

int BasePoly::degree() const { return bits_ == 0 ? -1 : 63 - std::countl_zero(bits_); }

BasePoly BasePoly::truncated(int max_degree) const {
  if (max_degree < 0 || max_degree >= kMaxDegree) return *this;
  return BasePoly(bits_ & ((std::uint64_t{1} << (max_degree + 1)) - 1));
}

BasePoly BasePoly::shifted(int k) const {
  if (bits_ == 0 || k == 0) return *this;
  if (degree() + k > kMaxDegree) throw std::overflow_error("F2[t] degree overflow");
  return BasePoly(bits_ << k);
}

BasePoly operator*(BasePoly a, BasePoly b) {
  if (a.is_zero() || b.is_zero()) return BasePoly::zero();
  if (a.degree() + b.degree() > BasePoly::kMaxDegree) throw std::overflow_error("F2[t] degree overflow");
  std::uint64_t out = 0;
  std::uint64_t x = b.bits_;
  while (x) {
    int k = std::countr_zero(x);
    out ^= a.bits_ << k;
    x &= x - 1;
  }
  return BasePoly(out);
}

std::string BasePoly::str() const {
  if (bits_ == 0) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    if (!coefficient(k)) continue;
    if (!out.empty()) out += '+';
    if (k == 0)
      out += '1';
    else if (k == 1)
      out += 't';
    else
      out += "t^" + std::to_string(k);
  }
  return out;
}

BasePoly BasePoly::parse(std::string_view text) {
  auto fail = [&] { return UsageError("malformed F2[t] element '" + std::string(text) + "'"); };
  if (text == "0") return zero();
  BasePoly p;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('+', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view term = text.substr(pos, end - pos);
    if (term == "1") {
      p += one();
    } else if (term == "t") {
      p += t(1);
    } else if (term.size() > 2 && term.substr(0, 2) == "t^") {
      int k = 0;
      auto digits = term.substr(2);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
      if (ec != std::errc{} || ptr != digits.data() + digits.size()) throw fail();
      p += t(k);
    } else {
      throw fail();
    }
    pos = end + 1;
    if (end == text.size()) break;
    if (pos == text.size()) throw fail();
  }
  if (text.empty()) throw fail();
  return p;
}

}  // namespace weyl
