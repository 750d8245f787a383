#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "onebranch/families.hpp"

namespace onebranch {

/// Singularity name from Definition 1: E_{6k}, E_{6k+2}, W_{6k}, W#_{k,*}, N_{4k}.
struct TypeName {
  enum class Series { E, W, WSharp, N };
  Series series = Series::E;
  int index = 0;  // 6k, 6k+2, 6k, k, 4k respectively

  std::string to_string() const;  // "E30", "W24", "W#2,*", "N28"
  std::string pretty() const;     // "E_30", "W♯_{2,*}", ...
  static TypeName parse(const std::string& text);

  friend bool operator==(const TypeName&, const TypeName&) = default;
};

/// nullopt for vectors outside the five patterns; throws InvalidVector on invalid input.
std::optional<TypeName> type_of(int v1, int v2);
inline std::optional<TypeName> type_of(const ValuationVector& v) { return type_of(v.v1, v.v2); }

ValuationVector vector_of(const TypeName& type);

template <ExactField K>
bool dominates_type(const Order<K>& s, const ValuationVector& v) {
  return s.has_value(static_cast<std::size_t>(v.v1)) && s.has_value(static_cast<std::size_t>(v.v2));
}

/// The list of Theorem 1 for the characteristic (0 uses the list for char != 2).
const std::vector<TypeName>& criterion_types(std::uint32_t characteristic);

struct CriterionVerdict {
  bool pa_le_2 = false;
  std::optional<TypeName> dominated_type;
  std::uint32_t characteristic = 0;
};

template <ExactField K>
CriterionVerdict criterion_pa_le_2(const Order<K>& s, std::uint32_t characteristic) {
  CriterionVerdict out{false, std::nullopt, characteristic};
  for (const auto& t : criterion_types(characteristic))
    if (dominates_type(s, vector_of(t))) {
      out.pa_le_2 = true;
      out.dominated_type = t;
      break;
    }
  return out;
}

/// Plane model K[[t^v1, t^v2]]; when gcd(v1, v2) > 1 the second generator is t^v2 + t^(v2+1).
template <ExactField K>
Order<K> monomial_order(const ValuationVector& v, FieldSpec field, std::size_t precision) {
  auto y = Series<K>::monomial(field, precision, v.v2);
  if (std::gcd(v.v1, v.v2) > 1) y = y + Series<K>::monomial(field, precision, v.v2 + 1);
  return order_from_generators<K>({Series<K>::monomial(field, precision, v.v1), y}, field, precision);
}

/// dim M/M^2 for the maximal ideal M.
template <ExactField K>
std::size_t embedding_dimension(const Order<K>& s) {
  const auto m = radical(s);
  return product_span(m, m).codim() - m.codim();
}

/// The ring K + K t^5 + t^9 R.
template <ExactField K>
Order<K> witness_ring(FieldSpec field, std::size_t precision) {
  return Order<K>::from_span(TailSpan<K>::canonicalize(
      {Series<K>::one(field, precision), Series<K>::monomial(field, precision, 5)}, 9, field, precision));
}

struct WitnessReport {
  std::uint32_t q = 0;
  std::size_t ideals = 0;
  std::size_t classes = 0;
  std::size_t pairs_checked = 0;
  std::vector<std::pair<std::string, std::string>> isomorphic_pairs;  // should stay empty
  bool all_distinct() const { return classes == ideals; }
};

/// I(a,b,g) = <1, t + a t^3 + b t^4 + g t^8> + M0 over K + K t^5 + t^9 R, for all a, b, g in F_q.
std::shared_ptr<const Ideal> witness_ideal(const OrderPtr& ring, std::uint32_t a, std::uint32_t b, std::uint32_t g);

/// Builds all q^3 ideals and tests every pair for isomorphism.
WitnessReport witness_pa_ge_3(std::uint32_t q, std::size_t precision = 32);

struct GrowthRow {
  std::uint32_t q = 0;
  std::size_t total = 0;                        // classes of the ring
  std::vector<std::string> layers;              // value signature of each layer ideal
  std::vector<std::size_t> counts;              // new classes per layer
  std::vector<std::optional<std::size_t>> predicted;  // from a family table, if known
};

struct GrowthReport {
  std::vector<GrowthRow> rows;
  bool agrees = true;  // every predicted count matches
  std::string note;
};

/// Builds the ring for a given field.
using RingBuilder = std::function<OrderPtr(FieldSpec)>;
/// Optional family table for a layer, keyed by the layer ideal's value signature.
using TableLookup = std::function<const std::vector<FamilyDef>*(const std::string& signature)>;

/// Class counts per q of the ring's last cascade level, compared with family tables.
/// Finite-field evidence about family dimensions; it does not compute pa.
GrowthReport class_growth_report(const RingBuilder& ring, const std::vector<std::uint32_t>& qs,
                                 const TableLookup& tables = {}, std::size_t jobs = 1);

}  // namespace onebranch
