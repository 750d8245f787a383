#pragma once

#include <memory>
#include <string>
#include <vector>

#include "onebranch/families.hpp"

namespace onebranch {

/// The monomial model of N28: S generated by x = t^5 and y = t^8, with its end chain.
struct N28Model {
  FieldSpec field;
  std::size_t precision = 64;
  OrderPtr s;
  std::vector<OrderPtr> chain;  // S0, S1, S2, S3, S4, K+t^2R, R

  static N28Model build(FieldSpec field, std::size_t precision = 64);

  /// "S", "S0".."S4", "T" (= K+t^2R) or "R".
  OrderPtr ring(const std::string& name) const;
};

/// Names of the chain members as displayed in the source: S0..S4 (R is implicit).
const std::vector<std::string>& displayed_chain_names();

/// The displayed span of a chain member, e.g. <1,z,x>+t^8R for S3.
TailSpan<Fp> displayed_chain_span(const std::string& name, FieldSpec field, std::size_t precision);

/// Names of the S3-ideal classes in list order: S3, S4, S4*, R2, R3, R3*, R.
const std::vector<std::string>& s3_ideal_names();

/// The S3-ideal with the given name, as an ideal over the computed S3.
std::shared_ptr<const Ideal> s3_ideal(const N28Model& model, const std::string& name);

/// M2 I' for the layer of the given name.
TailSpan<Fp> layer_tilde(const N28Model& model, const std::string& layer);

/// The S2-ideal <1, gens> + M2 I' of a family member of the given layer.
std::shared_ptr<const Ideal> s2_family_ideal(const N28Model& model, const std::string& layer, const FamilyDef& family,
                                             const ParamValues& params);

}  // namespace onebranch
