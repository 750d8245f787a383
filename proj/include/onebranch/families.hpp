#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "onebranch/sandwich.hpp"

namespace onebranch {

using ParamValues = std::map<char, std::uint32_t>;

/// One parametrized family of generating subspaces: V = <1, gens...> + I~.
/// Generators use the symbols x, y, z, t and parameters a, b, g, h (see ExprEvaluator).
/// Constraints are clauses joined by '|' (or) and '&' (and), e.g. "a!=0|b!=0" or "b==a^2".
struct FamilyDef {
  std::string label;
  std::vector<std::string> gens;
  std::string constraint;
  std::size_t declared_arity = 0;
  std::string display;  // as printed in the source list
};

/// Parameters that actually occur in the generators, sorted.
std::vector<char> displayed_params(const FamilyDef& family);

bool constraint_holds(const std::string& constraint, const ParamValues& params, std::uint32_t p);

/// All parameter tuples of the family over F_p satisfying its constraint; `bound` fixes
/// parameters shared with an enclosing instance.
std::vector<ParamValues> family_members(const FamilyDef& family, std::uint32_t p, const ParamValues& bound = {});

std::size_t family_cardinality(const FamilyDef& family, std::uint32_t p, const ParamValues& bound = {});
std::size_t table_cardinality(const std::vector<FamilyDef>& table, std::uint32_t p, const ParamValues& bound = {});

/// Instantiated generators of one family member.
std::vector<Series<Fp>> family_generators(const FamilyDef& family, const ParamValues& params, FieldSpec field,
                                          std::size_t precision);

struct FamilyMember {
  std::string label;
  ParamValues params;
  std::string to_string() const;
};

struct MatchReport {
  std::vector<std::optional<FamilyMember>> label_of;         // per orbit representative
  std::vector<std::size_t> unmatched;                        // orbits hit by no member
  std::vector<std::pair<std::size_t, std::vector<FamilyMember>>> doubly_matched;
  std::vector<FamilyMember> invalid;                         // members that are not generating or not in I'
  std::size_t expected = 0;                                  // number of family members
  bool complete() const { return unmatched.empty() && doubly_matched.empty() && invalid.empty(); }
};

/// Labels every orbit of the layer by the family members whose subspace lies in it.
MatchReport match_families(const LayerOutcome& outcome, const std::vector<FamilyDef>& table,
                           const ParamValues& bound = {});

/// Generators (beyond 1) of an orbit representative, as lifted series.
std::vector<Series<Fp>> representative_generators(const LayerOutcome& outcome, std::size_t index);

/// One block of the classification of S2-ideals, sorted by I' = S3 I.
struct LayerTable {
  std::string name;          // "S3", "S4", "S4*", "R3", "R3*", "R2", "R"
  std::string tilde;         // displayed I~ = M2 I'
  std::vector<FamilyDef> families;
};

const std::vector<LayerTable>& s2_layer_tables();
const LayerTable& s2_layer_table(const std::string& name);

/// Replay of one worked case: an S2-ideal I from the list, the new S1-ideals over it, and
/// the new S0-ideals over each of those (key = S1 family label; "" means over I itself).
struct CaseTable {
  std::string id;
  std::string layer;            // layer of the S2-list holding I
  std::string family;           // label of I in that layer
  std::string outer;            // constraint on the parameters of I selecting this subcase
  std::vector<FamilyDef> s1;
  std::map<std::string, std::vector<FamilyDef>> s0;
};

const std::vector<CaseTable>& case_tables();

}  // namespace onebranch
