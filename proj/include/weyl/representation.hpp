#pragma once

#include "weyl/involution_atlas.hpp"
#include "weyl/linear_algebra.hpp"
#include "weyl/root_system.hpp"
#include "weyl/weyl_group.hpp"

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace weyl {

class Representation;
using RepresentationPtr = std::shared_ptr<const Representation>;

/// An orthogonal representation of a Weyl group given by an exact,
/// matrix-free trace oracle.
class Representation {
 public:
  enum class Kind {
    Trivial,
    Sign,
    Coxeter,
    RootPermutation,
    ConjugatePermutation,
    ExteriorPower,
    DirectSum,
    TensorProduct,
    Custom,
  };
  using TraceFn = std::function<Rational(const GroupElement&)>;

  static RepresentationPtr trivial(const RootSystemPtr& rs);
  static RepresentationPtr sign(const RootSystemPtr& rs);
  static RepresentationPtr coxeter(const RootSystemPtr& rs);
  /// Permutation representation on all roots.
  static RepresentationPtr root_permutation(const RootSystemPtr& rs);
  /// Permutation representation on the W-conjugates of a root subsystem.
  static RepresentationPtr conjugate_permutation(const SubsystemEmbedding& sub);
  /// k-th exterior power of the Coxeter representation, 0 <= k <= rank.
  static RepresentationPtr exterior_power(const RootSystemPtr& rs, int k);
  static RepresentationPtr direct_sum(const RepresentationPtr& a, const RepresentationPtr& b);
  static RepresentationPtr tensor_product(const RepresentationPtr& a, const RepresentationPtr& b);
  /// Caller-supplied trace oracle; nothing is checked until it is used.
  static RepresentationPtr custom(const RootSystemPtr& rs, std::string descriptor, int dimension, TraceFn trace);

  Kind kind() const { return kind_; }
  int dimension() const { return dimension_; }
  const std::string& descriptor() const { return descriptor_; }
  const RootSystemPtr& home() const { return home_; }
  /// Number of subsystem conjugates (ConjugatePermutation only).
  std::size_t conjugate_count() const { return conjugates_ ? conjugates_->size() : 0; }

  Rational character(const GroupElement& g) const;

 private:
  Representation() = default;

  Kind kind_ = Kind::Trivial;
  RootSystemPtr home_;
  int dimension_ = 0;
  int power_ = 0;
  std::string descriptor_;
  std::vector<RepresentationPtr> parts_;
  std::shared_ptr<const std::vector<RootMask>> conjugates_;
  std::shared_ptr<const std::vector<std::int32_t>> iota_;
  TraceFn custom_;
};

inline Rational character(const Representation& rho, const GroupElement& g) { return rho.character(g); }

/// chi(rep of a) - chi(rep of b); InternalError if not an integer.
std::int64_t character_gap(const Representation& rho, const InvolutionClass& a, const InvolutionClass& b);

/// Trace of the k-th exterior power on an involution with eigenvalue
/// multiplicities (plus, minus): the x^k coefficient of (1+x)^plus (1-x)^minus.
std::int64_t exterior_trace_on_involution(int plus, int minus, int k);

/// Length of g: positive roots sent to negative roots.
std::size_t element_length(const GroupElement& g);

/// Resolves "trivial", "sign", "cox", "roots", "lambda<k>", "conj(<type>)",
/// "sum(a,b)", "tensor(a,b)" (case-insensitive). Throws UsageError otherwise.
RepresentationPtr parse_representation(const RootSystemPtr& rs, std::string_view name);

}  // namespace weyl
