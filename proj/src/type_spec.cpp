#include "weyl/type_spec.hpp"

#include "weyl/errors.hpp"

#include <cctype>
#include <charconv>
#include <numeric>

namespace weyl {

std::string check_factor(const Factor& f) {
  const std::string name = std::string(1, static_cast<char>(f.family)) + std::to_string(f.rank);
  switch (f.family) {
    case Family::A:
    case Family::B:
    case Family::C:
      if (f.rank >= 1) return {};
      return "illegal factor '" + name + "': rank must be at least 1";
    case Family::D:
      if (f.rank >= 2) return {};
      return "illegal factor '" + name + "': type D needs rank at least 2";
    case Family::E:
      if (f.rank >= 6 && f.rank <= 8) return {};
      return "illegal factor '" + name + "': type E exists only in ranks 6, 7, 8";
    case Family::F:
      if (f.rank == 4) return {};
      return "illegal factor '" + name + "': type F exists only in rank 4";
    case Family::G:
      if (f.rank == 2) return {};
      return "illegal factor '" + name + "': type G exists only in rank 2";
  }
  return "illegal factor '" + name + "'";
}

TypeSpec::TypeSpec(std::vector<Factor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw UsageError("empty type");
  for (const auto& f : factors_)
    if (auto msg = check_factor(f); !msg.empty()) throw UsageError(msg);
}

TypeSpec TypeSpec::parse(std::string_view text) {
  std::vector<Factor> factors;
  std::size_t pos = 0;
  if (text.empty()) throw UsageError("empty type");
  while (pos <= text.size()) {
    std::size_t end = pos;
    while (end < text.size() && text[end] != 'x' && text[end] != 'X') ++end;
    std::string_view piece = text.substr(pos, end - pos);
    if (piece.size() < 2) throw UsageError("illegal factor '" + std::string(piece) + "' in '" + std::string(text) + "'");
    char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(piece[0])));
    if (letter < 'A' || letter > 'G')
      throw UsageError("illegal factor '" + std::string(piece) + "': unknown family");
    int rank = 0;
    auto digits = piece.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
    if (ec != std::errc{} || ptr != digits.data() + digits.size())
      throw UsageError("illegal factor '" + std::string(piece) + "': rank is not a decimal integer");
    Factor f{static_cast<Family>(letter), rank};
    if (auto msg = check_factor(f); !msg.empty()) throw UsageError(msg);
    factors.push_back(f);
    if (end == text.size()) break;
    pos = end + 1;
  }
  return TypeSpec(std::move(factors));
}

int TypeSpec::rank() const {
  return std::accumulate(factors_.begin(), factors_.end(), 0,
                         [](int acc, const Factor& f) { return acc + f.rank; });
}

std::string TypeSpec::str() const {
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += 'x';
    out += static_cast<char>(factors_[i].family);
    out += std::to_string(factors_[i].rank);
  }
  return out;
}

}  // namespace weyl
