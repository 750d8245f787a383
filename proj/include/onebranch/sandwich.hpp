#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "onebranch/fq_linalg.hpp"
#include "onebranch/ideal.hpp"

namespace onebranch {

using OrderPtr = std::shared_ptr<const Order<Fp>>;
using Ideal = FracIdeal<Fp>;

/// Basis of a quotient top/bottom of spans (bottom contained in top). Labels are the reduced
/// coset representatives of least valuation, one per valuation of top missing from bottom.
class QuotientBasis {
 public:
  QuotientBasis(TailSpan<Fp> top, TailSpan<Fp> bottom);

  const TailSpan<Fp>& top() const { return top_; }
  const TailSpan<Fp>& bottom() const { return bottom_; }
  const std::vector<Series<Fp>>& labels() const { return labels_; }
  std::vector<std::size_t> label_valuations() const;
  std::size_t dim() const { return labels_.size(); }

  /// Coordinates of the class of s (s must lie in top); nullopt if s is not in top.
  std::optional<std::vector<std::uint32_t>> coords(const Series<Fp>& s) const;
  /// Representative sum of coords[i] * labels[i].
  Series<Fp> lift(const std::vector<std::uint32_t>& coords) const;

 private:
  TailSpan<Fp> top_;
  TailSpan<Fp> bottom_;
  std::vector<Series<Fp>> labels_;
  std::vector<std::size_t> pivots_;
};

/// W = I'/M I' and its quotient W^ = I'/M' I' for one sandwich step S in S' = End(rad S).
struct QuotientModule {
  std::shared_ptr<const Ideal> layer_ideal;  // I', an S'-ideal
  QuotientBasis w;                           // I' / M I'
  QuotientBasis w_hat;                       // I' / M' I'
  FqMat projection;                          // hat_dim x dim

  const TailSpan<Fp>& bottom() const { return w.bottom(); }
  std::size_t dim() const { return w.dim(); }
  std::size_t hat_dim() const { return w_hat.dim(); }
};

/// Image of E = End I' in End_K(W), i.e. E^ = E/E_0, and its group of units.
struct UnitActionGroup {
  std::optional<TailSpan<Fp>> endo;       // E
  std::optional<TailSpan<Fp>> endo_zero;  // E_0 = { a : a I' in M I' }
  std::vector<FqMat> e_hat_basis;   // action matrices spanning E^
  std::vector<FqMat> units;         // all invertible elements of E^
};

/// Generating subspace V of W, as the RREF of a basis in W-coordinates.
struct GenSubspace {
  FqMat coords;
  bool contains_one = false;
};

struct LayerOutcome {
  OrderPtr ring;        // S
  OrderPtr over_ring;   // S'
  QuotientModule quotient;
  UnitActionGroup action;
  bool shortcut = false;                   // W^ already has dimension m(S)
  std::size_t generating_count = 0;        // generating V with 1 in V, V != W
  std::vector<GenSubspace> representatives;
  std::vector<std::size_t> orbit_sizes;
  std::vector<Ideal> lifted;               // S-ideal preimages of the representatives
  std::unordered_map<std::string, std::size_t> orbit_of;  // RREF key -> representative index
};

/// Quotient data for the layer over I'. S' must equal End(rad S).
QuotientModule build_quotient(const Order<Fp>& s, const Order<Fp>& s_prime, std::shared_ptr<const Ideal> layer_ideal);

/// True when dim W^ equals the multiplicity of S, so the only S-ideal over I' is I' itself.
bool shortcut_full(const Order<Fp>& s, const QuotientModule& q);

UnitActionGroup unit_action(const QuotientModule& q);

/// RREF key of the subspace spanned by 1 and the given elements of I'; nullopt if some element
/// is not in I'.
std::optional<FqMat> subspace_of(const QuotientModule& q, const std::vector<Series<Fp>>& elements);

/// Enumerates the S-ideals I with S'I = I' (I != I') up to isomorphism: generating subspaces
/// V of W containing 1, grouped into orbits of the units of E^. Representatives are the
/// lexicographically least RREF matrices of each orbit, sorted.
LayerOutcome enumerate_layer(OrderPtr s, OrderPtr s_prime, std::shared_ptr<const Ideal> layer_ideal);

/// Number of orbits of all generating subspaces V != W (with or without 1) under the units of
/// E^. Independent check of the restriction to subspaces containing 1.
std::size_t count_orbits_unrestricted(const LayerOutcome& outcome);

/// Lifts a W-subspace to the S-ideal V + M I'.
Ideal lift_subspace(const OrderPtr& s, const QuotientModule& q, const FqMat& v);

struct ClassEntry {
  std::shared_ptr<const Ideal> ideal;
  std::size_t level = 0;                  // index into CascadeResult::levels where it first appears
  std::optional<std::size_t> parent;      // index of I' among the classes of the level above
  std::optional<std::size_t> orbit;       // representative index inside that layer
};

struct CascadeLevel {
  OrderPtr ring;
  std::vector<ClassEntry> classes;        // all classes of ideals of this ring
  std::vector<LayerOutcome> layers;       // one per class of the level above
};

struct CascadeResult {
  std::vector<OrderPtr> chain;            // S, End(rad S), ..., R
  std::vector<CascadeLevel> levels;       // levels[0] is R, the last one is S
  std::vector<std::string> collisions;    // classes merged across layers (none expected)

  const CascadeLevel& level_of(const Order<Fp>& ring) const;
};

struct CascadeOptions {
  std::size_t jobs = 1;
  /// Stop after the level of this chain member (0 = go down to S itself).
  std::size_t stop_at_chain_index = 0;
};

/// All ideal classes of S over F_q, top-down along the end chain.
CascadeResult cascade(OrderPtr s, const CascadeOptions& options = {});

/// Valuations of the normalized ideal; an isomorphism invariant used for bucketing.
std::string value_signature(const TailSpan<Fp>& span);

}  // namespace onebranch
