#include "onebranch/families.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "onebranch/expr.hpp"

namespace onebranch {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::map<char, Fp> to_field(const ParamValues& params, std::uint32_t p) {
  std::map<char, Fp> out;
  for (auto [k, v] : params) out.emplace(k, Fp(v, p));
  return out;
}

bool atom_holds(const std::string& atom, const ParamValues& params, std::uint32_t p) {
  std::size_t at = atom.find("!=");
  bool negate = true;
  if (at == std::string::npos) {
    at = atom.find("==");
    negate = false;
  }
  if (at == std::string::npos) throw ParseError("constraint '" + atom + "': expected == or !=");
  ExprEvaluator<Fp> ev(FieldSpec{p}, 1, to_field(params, p));
  const Fp lhs = ev(atom.substr(0, at))[0];
  const Fp rhs = ev(atom.substr(at + 2))[0];
  return (lhs == rhs) != negate;
}

}  // namespace

std::vector<char> displayed_params(const FamilyDef& family) {
  std::set<char> all;
  for (const auto& g : family.gens)
    for (char c : params_in(g)) all.insert(c);
  return {all.begin(), all.end()};
}

bool constraint_holds(const std::string& constraint, const ParamValues& params, std::uint32_t p) {
  if (constraint.empty()) return true;
  for (const auto& clause : split(constraint, '|')) {
    bool all = true;
    for (const auto& atom : split(clause, '&'))
      if (!atom_holds(atom, params, p)) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

std::vector<ParamValues> family_members(const FamilyDef& family, std::uint32_t p, const ParamValues& bound) {
  std::vector<char> free;
  for (char c : displayed_params(family))
    if (!bound.count(c)) free.push_back(c);
  std::vector<ParamValues> out;
  std::vector<std::uint32_t> digits(free.size(), 0);
  while (true) {
    ParamValues values = bound;
    for (std::size_t i = 0; i < free.size(); ++i) values[free[i]] = digits[i];
    if (constraint_holds(family.constraint, values, p)) out.push_back(std::move(values));
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  return out;
}

std::size_t family_cardinality(const FamilyDef& family, std::uint32_t p, const ParamValues& bound) {
  return family_members(family, p, bound).size();
}

std::size_t table_cardinality(const std::vector<FamilyDef>& table, std::uint32_t p, const ParamValues& bound) {
  std::size_t total = 0;
  for (const auto& f : table) total += family_cardinality(f, p, bound);
  return total;
}

std::vector<Series<Fp>> family_generators(const FamilyDef& family, const ParamValues& params, FieldSpec field,
                                          std::size_t precision) {
  ExprEvaluator<Fp> ev(field, precision, to_field(params, field.p));
  std::vector<Series<Fp>> out;
  for (const auto& g : family.gens) out.push_back(ev(g));
  return out;
}

std::string FamilyMember::to_string() const {
  std::ostringstream os;
  os << label;
  if (!params.empty()) {
    os << '(';
    bool first = true;
    for (auto [k, v] : params) {
      if (!first) os << ',';
      os << k << '=' << v;
      first = false;
    }
    os << ')';
  }
  return os.str();
}

MatchReport match_families(const LayerOutcome& outcome, const std::vector<FamilyDef>& table, const ParamValues& bound) {
  const auto& q = outcome.quotient;
  const FieldSpec field = q.w.top().field();
  const std::size_t n = q.w.top().precision();
  MatchReport rep;
  rep.label_of.assign(outcome.representatives.size(), std::nullopt);
  std::vector<std::vector<FamilyMember>> hits(outcome.representatives.size());
  for (const auto& family : table) {
    for (auto& params : family_members(family, field.p, bound)) {
      ++rep.expected;
      ParamValues own;
      for (char c : displayed_params(family)) own[c] = params.at(c);
      FamilyMember member{family.label, own};
      auto v = subspace_of(q, family_generators(family, params, field, n));
      auto it = v ? outcome.orbit_of.find(matrix_key(*v)) : outcome.orbit_of.end();
      if (it == outcome.orbit_of.end()) {
        rep.invalid.push_back(std::move(member));
        continue;
      }
      hits[it->second].push_back(std::move(member));
    }
  }
  for (std::size_t i = 0; i < hits.size(); ++i) {
    if (hits[i].empty()) {
      rep.unmatched.push_back(i);
    } else if (hits[i].size() == 1) {
      rep.label_of[i] = hits[i].front();
    } else {
      rep.doubly_matched.emplace_back(i, hits[i]);
    }
  }
  return rep;
}

std::vector<Series<Fp>> representative_generators(const LayerOutcome& outcome, std::size_t index) {
  const auto& m = outcome.representatives.at(index).coords;
  std::vector<Series<Fp>> out;
  for (std::size_t r = 1; r < m.rows; ++r) {
    std::vector<std::uint32_t> row(m.a.begin() + r * m.cols, m.a.begin() + (r + 1) * m.cols);
    out.push_back(outcome.quotient.w.lift(row));
  }
  return out;
}

namespace {

FamilyDef fam(std::string label, std::vector<std::string> gens, std::string constraint, std::size_t declared,
              std::string display) {
  return FamilyDef{std::move(label), std::move(gens), std::move(constraint), declared, std::move(display)};
}

std::vector<LayerTable> build_s2_tables() {
  std::vector<LayerTable> t;
  t.push_back({"S3", "M2",
               {
                   fam("S2", {}, "", 0, "S_2"),
                   fam("F1", {"z+a*z^3+b*z^4"}, "", 2, "<1,z+αz^3+βz^4>+M2"),
                   fam("F2", {"z^2+a*z^3"}, "", 1, "<1,z^2+αz^3>+M2"),
                   fam("F3", {"z^3+a*z^4"}, "", 1, "<1,z^3+αz^4>+M2"),
                   fam("I1", {"z^4"}, "", 0, "<1,z^4>+M2"),
                   fam("F4", {"z+a*z^4", "z^2+b*z^4"}, "", 2, "<1,z+αz^4,z^2+βz^4>+M2"),
                   fam("F5", {"z", "z^3+a*z^4"}, "", 1, "<1,z,z^3+αz^4>+M2"),
                   fam("F6", {"z+a*z^3", "z^4"}, "", 1, "<1,z+αz^3,z^4>+M2"),
                   fam("F7", {"z^2", "z^3+a*z^4"}, "", 1, "<1,z^2,z^3+αz^4>+M2"),
                   fam("F8", {"z^2+a*z^3", "z^4"}, "", 1, "<1,z^2+αz^3,z^4>+M2"),
                   fam("I2", {"z^3", "z^4"}, "", 0, "<1,z^3,z^4>+M2"),
                   fam("I3", {"z", "z^2", "z^3"}, "", 0, "<1,z.z^2,z^3>+M2"),
                   fam("I4", {"z", "z^2", "z^4"}, "", 0, "<1,z,z^2,z^4>+M2"),
                   fam("I5", {"z", "z^3", "z^4"}, "", 0, "<1,z,z^3,z^4>+M2"),
                   fam("I6", {"z^2", "z^3", "z^4"}, "", 0, "<1,z^2,z^3,z^4>+M2"),
               }});
  t.push_back({"S4", "<x,y>+t^10R",
               {
                   fam("F9", {"z+a*t*z^2+b*z^3"}, "a!=0", 2, "<1,z+αtz^2+βz^3>+I~, α≠0"),
                   fam("F10", {"z^2+a*t*z^2+b*z^3"}, "a!=0", 2, "<1,z^2+αtz^2+βz^3>+I~, α≠0"),
                   fam("F11", {"t*z^2+a*z^3"}, "", 1, "<1,tz^2+αz^3>+I~"),
                   fam("F12", {"z+a*t*z^2", "z^2+b*t*z^2"}, "a!=0|b!=0", 2, "<1,z+αtz^2,z^2+βtz^2>+I~, α≠0 or β≠0"),
                   fam("F13", {"z+a*z^3", "t*z^2+b*z^3"}, "", 2, "<1,z+αz^3,tz^2+βz^3>+I~"),
                   fam("F14", {"z+a*t*z^2", "z^3"}, "a!=0", 1, "<1,z+αtz^2,z^3>+I~, α≠0"),
                   fam("F15", {"z^2+a*z^3", "t*z^2+b*z^3"}, "", 2, "<1,z^2+αz^3,tz^2+βz^3>+I~"),
                   fam("F16", {"z^2+a*t*z^2", "z^3"}, "a!=0", 1, "<1,z^2+αtz^2,z^3>+I~, α≠0"),
                   fam("I7", {"t*z^2", "z^3"}, "", 0, "<1,tz^2,z^3>+I~"),
                   fam("F17", {"z", "z^2", "t*z^2+a*z^3"}, "", 1, "<1,z,z^2,tz^2+αz^3>+I~"),
                   fam("F18", {"z+a*t*z^2", "z^2+b*t*z^2", "z^3"}, "a!=0|b!=0", 2,
                       "<1,z+αtz^2,z^2+βtz^2,z^3>+I~, α≠0 or β≠0"),
                   fam("I8", {"z", "t*z^2", "z^3"}, "", 0, "<1,z,tz^2,z^3>+I~"),
                   fam("I9", {"z^2", "t*z^2", "z^3"}, "", 0, "<1,z^2,tz^2,z^3>+I~"),
               }});
  t.push_back({"S4*", "<x,tz^2,y>+t^10R",
               {
                   fam("F19", {"t^2+a*z+b*z^2"}, "", 2, "<1,t^2+αz+βz^2>+I~"),
                   fam("F20", {"t^2+a*z^2", "z+b*z^3"}, "", 2, "<1,t^2+αz^2,z+βz^3>+I~"),
                   fam("F21", {"t^2+a*z", "z^2+b*z^3"}, "", 2, "<1,t^2+αz,z^2+βz^3>+I~"),
                   fam("F22", {"t^2+a*z+b*z^2", "z^3"}, "", 2, "<1,t^2+αz+βz^2,z^3>+I~"),
                   fam("F23", {"t^2", "z+a*z^3", "z^2"}, "", 1, "<1,t^2,z+αz^3,z^2>+I~"),
                   fam("F24", {"t^2+a*z", "z^2", "z^3"}, "", 1, "<1,t^2+αz,z^2,z^3>+I~"),
                   fam("F25", {"t^2+a*z^2", "z", "z^3"}, "", 1, "<1,t^2+αz^2,z,z^3>+I~"),
               }});
  t.push_back({"R3", "<x>+t^8R",
               {
                   fam("F26", {"z+a*t*z+b*t*z^2"}, "a!=0", 2, "<1,z+αtz+βtz^2>+I~, α≠0"),
                   fam("F27", {"t*z+a*z^2+b*t*z^2"}, "", 2, "<1,tz+αz^2+βtz^2>+I~"),
                   fam("F28", {"z", "t*z+a*z^2+b*t*z^2"}, "", 2, "<1,z,tz+αz^2+βtz^2>+I~"),
                   fam("F29", {"z+a*t*z", "z^2+b*t*z^2"}, "a!=0", 2, "<1,z+αtz,z^2+βtz^2>+I~, α≠0"),
                   fam("F30", {"z+a*t*z", "t*z^2"}, "a!=0", 1, "<1,z+αtz,tz^2>+I~, α≠0"),
                   fam("F31", {"t*z+a*t*z^2", "z^2+b*t*z^2"}, "", 2, "<1,tz+αtz^2,z^2+βtz^2>+I~"),
                   fam("F32", {"t*z+a*z^2", "t*z^2"}, "", 1, "<1,tz+αz^2,tz^2>+I~"),
                   fam("F33", {"z", "t*z", "z^2+a*t*z^2"}, "a!=0", 1, "<1,z,tz,z^2+αtz^2>+I~, α≠0"),
                   fam("I10", {"z", "t*z", "t*z^2"}, "", 0, "<1,z,tz,tz^2>+I~"),
                   fam("F34", {"z+a*t*z", "z^2", "t*z^2"}, "a!=0", 1, "<1,z+αtz,z^2,tz^2>+I~, α≠0"),
                   fam("I11", {"z", "z^2", "t*z^2+a*z^3"}, "", 0, "<1,z,z^2,tz^2+αz^3>+I~"),
               }});
  t.push_back({"R3*", "<x,z^2>+t^8R",
               {
                   fam("F35", {"t+a*z+b*t*z"}, "a!=0", 2, "<1,t+αz+βtz>+I~, α≠0"),
                   fam("F36", {"t", "z+a*t*z+b*t*z^2"}, "", 2, "<1,t,z+αtz+βtz^2>+I~"),
                   fam("F37", {"t+a*z", "t*z+b*t*z^2"}, "", 2, "<1,t+αz,tz+βtz^2>+I~"),
                   fam("F38", {"t+a*z+b*t*z", "t*z^2"}, "", 2, "<1,t+αz+βtz,tz^2>+I~"),
                   fam("F39", {"t", "z+a*t*z^2", "t*z"}, "", 1, "<1,t,z+αtz^2,tz>+I~"),
                   fam("F40", {"t", "z+a*t*z", "t*z^2"}, "", 1, "<1,t,z+αtz,tz^2>+I~"),
                   fam("F41", {"t+a*z", "t*z", "t*z^2"}, "", 1, "<1,t+αz,tz,tz^2>+I~"),
               }});
  t.push_back({"R2", "<x>+t^7R",
               {
                   fam("F42", {"t^2+a*z^2", "z+b*t*z"}, "b!=0", 2, "<1,t^2+αz^2,z+βtz>+I~, β≠0"),
                   fam("F43", {"t^2+a*z", "t*z"}, "", 2, "<1,t^2+αz,tz>+I~"),
                   fam("I12", {"t^2", "z", "t*z"}, "", 2, "<1,t^2,z,tz>+I~"),
                   fam("F44", {"t^2", "z+a*t*z", "z^2"}, "a!=0", 2, "<1,t^2,z+αtz,z^2>+I~, α≠0"),
                   fam("F45", {"t^2+a*z", "t*z", "z^2"}, "", 1, "<1,t^2+αz,tz,z^2>+I~"),
               }});
  t.push_back({"R", "t^5R",
               {
                   fam("F46", {"t+a*t^4", "t^2+b*t^4"}, "", 2, "<1,t+αt^4,t^2+βt^4>+I~"),
                   fam("I13", {"t", "t^2", "t^3"}, "", 0, "<1,t,t^2,t^3>+I~"),
                   fam("I14", {"t", "t^2", "t^4"}, "", 0, "<1,t,t^2,t^4>+I~"),
               }});
  return t;
}

std::vector<CaseTable> build_case_tables() {
  std::vector<CaseTable> c;
  c.push_back({"case1",
               "S3",
               "S2",
               "",
               {
                   fam("S1", {}, "", 0, "S_1"),
                   fam("I1_1", {"z^2x(1+az+bz^2)"}, "", 2, "<1,u(α,β)>+M1, u=z^2x(1+αz+βz^2)"),
                   fam("I1_2", {"z^3x+az^4x"}, "", 1, "<1,z^3x+αz^4x>+M1"),
                   fam("I1_3", {"z^4x"}, "", 0, "<1,z^4x>+M1"),
                   fam("I1_4", {"z^2x+az^4x", "z^3x+bz^4x"}, "", 2, "<1,z^2x+αz^4x,z^3x+βz^4x>+M1"),
                   fam("I1_5", {"z^2x+az^3x", "z^4x"}, "", 1, "<1,z^2x+αz^3x,z^4x>+M1"),
                   fam("I1_6", {"z^3x", "z^4x"}, "", 0, "<1,z^3x,z^4x>+M1"),
               },
               {
                   {"S1",
                    {
                        fam("S0", {}, "", 0, "S_0"),
                        fam("J1", {"t^19+g*t^22"}, "", 1, "<1,t^19+αt^22>"),
                        fam("J2", {"t^22"}, "", 0, "<1,t^22>"),
                    }},
                   {"I1_1",
                    {
                        fam("J3", {"z^2x(1+az+bz^2)+g*t^19", "z^2xy+az^3xy"}, "b==a^2", 1,
                            "<1,u(α,α^2)+γt^19,z^2xy+αz^3xy>+M0"),
                    }},
               }});
  c.push_back({"case2a",
               "S3",
               "F1",
               "a!=0",
               {fam("K1", {"z+a*z^3+b*z^4"}, "", 0, "<1,z+αz^3+βz^4>+M1 I")},
               {{"K1", {fam("K0", {"z+a*z^3+b*z^4"}, "", 0, "<1,z+αz^3+βz^4>+M0 I^1")}}}});
  c.push_back({"case2b", "S3", "F1", "a==0&b!=0", {fam("K1", {"z+b*z^4"}, "", 0, "<1,z+βz^4>+M1 I")}, {}});
  c.push_back({"case2c",
               "S3",
               "F1",
               "a==0&b==0",
               {
                   fam("K2", {"z+g*y*z^3"}, "", 1, "<1,z+γyz^3>"),
                   fam("K3", {"z+g*y*z^3", "y*z^2+h*y*z^3"}, "", 2, "<1,z+γyz^3,yz^2+γ'yz^3>"),
                   fam("K4", {"z", "y*z^3"}, "", 0, "<1,z,yz^3>"),
               },
               {}});
  c.push_back({"case3", "S3", "I1", "", {fam("L1", {"a*t*x^2+z^4"}, "", 1, "<1,αtx^2+z^4>+M1 I")}, {}});
  c.push_back({"case4", "S4", "F11", "", {fam("L2", {"t*z^2+a*z^3+b*t*x^2"}, "", 1, "<1,tz^2+αz^3+βtx^2>+M1 I")}, {}});
  c.push_back({"case5a", "S4*", "F20", "b!=0", {}, {}});
  c.push_back({"case5b", "S4*", "F20", "b==0", {fam("L3", {"t^2+a*z^2", "z"}, "", 1, "<1,t^2+αz^2,z>+M0 I")}, {}});
  return c;
}

}  // namespace

const std::vector<LayerTable>& s2_layer_tables() {
  static const std::vector<LayerTable> tables = build_s2_tables();
  return tables;
}

const LayerTable& s2_layer_table(const std::string& name) {
  for (const auto& t : s2_layer_tables())
    if (t.name == name) return t;
  throw std::out_of_range("no layer table named " + name);
}

const std::vector<CaseTable>& case_tables() {
  static const std::vector<CaseTable> tables = build_case_tables();
  return tables;
}

}  // namespace onebranch
