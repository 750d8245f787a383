#include "onebranch/classify.hpp"

#include <stdexcept>

namespace onebranch {

std::string TypeName::to_string() const {
  switch (series) {
    case Series::E: return "E" + std::to_string(index);
    case Series::W: return "W" + std::to_string(index);
    case Series::WSharp: return "W#" + std::to_string(index) + ",*";
    case Series::N: return "N" + std::to_string(index);
  }
  return {};
}

std::string TypeName::pretty() const {
  switch (series) {
    case Series::E: return "E_" + std::to_string(index);
    case Series::W: return "W_" + std::to_string(index);
    case Series::WSharp: return "W♯_{" + std::to_string(index) + ",*}";
    case Series::N: return "N_" + std::to_string(index);
  }
  return {};
}

TypeName TypeName::parse(const std::string& text) {
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    // accept "W♯" (UTF-8 E2 99 AF) as '#', drop decoration
    if (text.compare(i, 3, "\xE2\x99\xAF") == 0) {
      s.push_back('#');
      i += 2;
    } else if (text[i] != '_' && text[i] != '{' && text[i] != '}' && text[i] != ' ') {
      s.push_back(text[i]);
    }
  }
  if (s.size() >= 2 && s.substr(s.size() - 2) == ",*") s.resize(s.size() - 2);
  TypeName out;
  std::size_t pos = 1;
  if (s.empty()) throw ParseError("empty type name");
  switch (s[0]) {
    case 'E': out.series = Series::E; break;
    case 'N': out.series = Series::N; break;
    case 'W':
      if (s.size() > 1 && s[1] == '#') {
        out.series = Series::WSharp;
        pos = 2;
      } else {
        out.series = Series::W;
      }
      break;
    default: throw ParseError("unknown type name '" + text + "'");
  }
  try {
    std::size_t used = 0;
    out.index = std::stoi(s.substr(pos), &used);
    if (used != s.size() - pos || out.index <= 0) throw ParseError("bad index");
  } catch (const std::exception&) {
    throw ParseError("unknown type name '" + text + "'");
  }
  vector_of(out);  // validates the index
  return out;
}

std::optional<TypeName> type_of(int v1, int v2) {
  ValuationVector::make(v1, v2);
  using S = TypeName::Series;
  if (v1 == 3) {
    if (v2 % 3 == 1) return TypeName{S::E, 6 * ((v2 - 1) / 3)};
    return TypeName{S::E, 6 * ((v2 - 2) / 3) + 2};
  }
  if (v1 == 4) {
    if (v2 % 2 == 1) return TypeName{S::W, 6 * ((v2 - 1) / 2)};
    return TypeName{S::WSharp, (v2 - 2) / 4};
  }
  if (v1 == 5) return TypeName{S::N, 4 * (v2 - 1)};
  return std::nullopt;
}

ValuationVector vector_of(const TypeName& type) {
  using S = TypeName::Series;
  const int i = type.index;
  auto bad = [&]() -> ValuationVector { throw InvalidVector("no valuation vector for type " + type.to_string()); };
  switch (type.series) {
    case S::E:
      if (i % 6 == 0 && i >= 6) return ValuationVector::make(3, 3 * (i / 6) + 1);
      if (i % 6 == 2 && i >= 8) return ValuationVector::make(3, 3 * ((i - 2) / 6) + 2);
      return bad();
    case S::W:
      if (i % 6 == 0 && i >= 12) return ValuationVector::make(4, 2 * (i / 6) + 1);
      return bad();
    case S::WSharp:
      if (i >= 1) return ValuationVector::make(4, 4 * i + 2);
      return bad();
    case S::N:
      if (i % 4 == 0 && i >= 8 && (i / 4 + 1) % 5 != 0) return ValuationVector::make(5, i / 4 + 1);
      return bad();
  }
  return bad();
}

const std::vector<TypeName>& criterion_types(std::uint32_t characteristic) {
  using S = TypeName::Series;
  static const std::vector<TypeName> odd{{S::E, 30}, {S::E, 32}, {S::W, 24}, {S::WSharp, 2},
                                         {S::W, 30}, {S::N, 20}, {S::N, 24}, {S::N, 28}};
  static const std::vector<TypeName> two{{S::E, 30}, {S::E, 32}, {S::W, 18}, {S::WSharp, 1}, {S::N, 20}, {S::N, 24}};
  return characteristic == 2 ? two : odd;
}

std::shared_ptr<const Ideal> witness_ideal(const OrderPtr& ring, std::uint32_t a, std::uint32_t b, std::uint32_t g) {
  const FieldSpec f = ring->field();
  const std::size_t n = ring->precision();
  Series<Fp> u = Series<Fp>::monomial(f, n, 1) + Series<Fp>::monomial(f, n, 3, Fp(a, f.p)) +
                 Series<Fp>::monomial(f, n, 4, Fp(b, f.p)) + Series<Fp>::monomial(f, n, 8, Fp(g, f.p));
  auto rad = radical(*ring);
  std::vector<Series<Fp>> gens = rad.basis();
  gens.push_back(Series<Fp>::one(f, n));
  gens.push_back(u);
  return std::make_shared<const Ideal>(make_ideal<Fp>(ring, gens, rad.tail()));
}

WitnessReport witness_pa_ge_3(std::uint32_t q, std::size_t precision) {
  const FieldSpec f{q};
  auto ring = std::make_shared<const Order<Fp>>(witness_ring<Fp>(f, precision));
  std::vector<std::shared_ptr<const Ideal>> ideals;
  std::vector<std::string> names;
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t g = 0; g < q; ++g) {
        ideals.push_back(witness_ideal(ring, a, b, g));
        names.push_back("I(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(g) + ")");
      }
  WitnessReport rep;
  rep.q = q;
  rep.ideals = ideals.size();
  std::vector<std::size_t> root(ideals.size());
  for (std::size_t i = 0; i < root.size(); ++i) root[i] = i;
  for (std::size_t i = 0; i < ideals.size(); ++i)
    for (std::size_t j = i + 1; j < ideals.size(); ++j) {
      ++rep.pairs_checked;
      if (is_isomorphic(*ideals[i], *ideals[j]).isomorphic) {
        rep.isomorphic_pairs.emplace_back(names[i], names[j]);
        if (root[j] == j) root[j] = root[i];
      }
    }
  for (std::size_t i = 0; i < root.size(); ++i) rep.classes += root[i] == i;
  return rep;
}

GrowthReport class_growth_report(const RingBuilder& ring, const std::vector<std::uint32_t>& qs,
                                 const TableLookup& tables, std::size_t jobs) {
  GrowthReport rep;
  rep.note = "finite-field class counts; evidence about family dimensions, not a computation of pa";
  for (auto q : qs) {
    CascadeOptions opt;
    opt.jobs = jobs;
    const CascadeResult res = cascade(ring(FieldSpec{q}), opt);
    GrowthRow row;
    row.q = q;
    const auto& last = res.levels.back();
    row.total = last.classes.size();
    for (const auto& layer : last.layers) {
      const std::string sig = value_signature(layer.quotient.layer_ideal->span());
      row.layers.push_back(sig);
      row.counts.push_back(layer.representatives.size());
      const std::vector<FamilyDef>* table = tables ? tables(sig) : nullptr;
      if (table) {
        row.predicted.push_back(table_cardinality(*table, q));
        if (*row.predicted.back() != row.counts.back()) rep.agrees = false;
      } else {
        row.predicted.push_back(std::nullopt);
      }
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace onebranch
