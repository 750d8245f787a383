#include "onebranch/report.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "onebranch/io.hpp"

namespace onebranch {

using nlohmann::json;

std::string to_string(Severity s) {
  switch (s) {
    case Severity::Info: return "info";
    case Severity::Warning: return "warning";
    case Severity::Error: return "error";
  }
  return "error";
}

bool SuiteReport::failed() const {
  for (const auto& c : checks)
    if (!c.ok) return true;
  for (const auto& d : discrepancies)
    if (d.severity == Severity::Error) return true;
  return false;
}

void SuiteReport::check(std::string name, std::string anchor, std::string expected, std::string computed, bool ok) {
  checks.push_back(Check{std::move(name), std::move(anchor), std::move(expected), std::move(computed), ok});
}

void SuiteReport::discrepancy(std::string location, std::string expected, std::string computed, Severity severity) {
  discrepancies.push_back(Discrepancy{std::move(location), std::move(expected), std::move(computed), severity});
}

json SuiteReport::to_json() const {
  json j;
  j["suite"] = suite;
  j["field"] = field;
  j["precision"] = precision;
  j["passed"] = !failed();
  j["seconds"] = seconds;
  j["checks"] = json::array();
  for (const auto& c : checks)
    j["checks"].push_back(
        {{"name", c.name}, {"anchor", c.anchor}, {"expected", c.expected}, {"computed", c.computed}, {"ok", c.ok}});
  j["discrepancies"] = json::array();
  for (const auto& d : discrepancies)
    j["discrepancies"].push_back({{"location", d.location},
                                  {"expected", d.expected},
                                  {"computed", d.computed},
                                  {"severity", onebranch::to_string(d.severity)}});
  j["details"] = details;
  return j;
}

std::string SuiteReport::summary() const {
  std::ostringstream os;
  std::size_t ok = 0;
  for (const auto& c : checks) ok += c.ok;
  os << "[" << (failed() ? "FAIL" : "PASS") << "] " << suite << " (" << field << ", N=" << precision << "): " << ok
     << "/" << checks.size() << " checks, " << discrepancies.size() << " discrepancies\n";
  for (const auto& c : checks)
    if (!c.ok) os << "  check failed: " << c.name << " [" << c.anchor << "] expected " << c.expected << ", got " << c.computed << "\n";
  for (const auto& d : discrepancies)
    os << "  " << onebranch::to_string(d.severity) << ": " << d.location << ": expected " << d.expected << ", computed "
       << d.computed << "\n";
  return os.str();
}

const std::vector<std::string>& SuiteConfig::suite_names() {
  static const std::vector<std::string> names{"end-chain", "s3-list", "s2-prop", "cascade",
                                              "witness",   "criterion-table", "cases", "all"};
  return names;
}

void SuiteConfig::validate() const {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw std::invalid_argument("unknown suite '" + suite + "'");
  if (field.is_rational()) throw std::invalid_argument("suites run over a prime field F_p, not Q");
  if (field.p > 251) throw std::invalid_argument("suites need a prime below 256");
  // conductor 28 of the N28 model, 9 for the witness ring
  const std::size_t need = suite == "witness" ? 2 * 9 + 8 : suite == "criterion-table" ? 0 : 2 * 28 + 8;
  if (precision < need)
    throw std::invalid_argument("precision " + std::to_string(precision) + " below the required " + std::to_string(need));
}

namespace {

using Clock = std::chrono::steady_clock;

std::string value_set(const TailSpan<Fp>& span) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto v : span.values()) {
    os << (first ? "" : ",") << v;
    first = false;
  }
  os << "}+[" << span.tail() << ",inf)";
  return os.str();
}

std::string describe(const std::vector<Series<Fp>>& gens) {
  std::string s = "<1";
  for (const auto& g : gens) s += ", " + pretty_series(g);
  return s + ">";
}

std::string members(const std::vector<FamilyMember>& ms) {
  std::string s;
  for (const auto& m : ms) s += (s.empty() ? "" : " ") + m.to_string();
  return s;
}

SuiteReport start(const std::string& name, const SuiteConfig& cfg) {
  SuiteReport r;
  r.suite = name;
  r.field = cfg.field.name();
  r.precision = cfg.precision;
  return r;
}

template <class F>
SuiteReport timed(F&& body) {
  const auto t0 = Clock::now();
  SuiteReport r = body();
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

const FamilyDef& find_family(const LayerTable& t, const std::string& label) {
  for (const auto& f : t.families)
    if (f.label == label) return f;
  throw std::out_of_range("no family " + label + " in layer " + t.name);
}

// Records family-match problems of one layer; returns true when the match is exact.
bool report_match(SuiteReport& r, const std::string& where, const LayerOutcome& layer, const MatchReport& m) {
  for (auto i : m.unmatched)
    r.discrepancy(where, "orbit covered by a listed family", "unlisted class " + describe(representative_generators(layer, i)),
                  Severity::Error);
  for (const auto& [i, ms] : m.doubly_matched)
    r.discrepancy(where + ", " + ms.front().label, "pairwise non-isomorphic members",
                  members(ms) + " are isomorphic (" + describe(representative_generators(layer, i)) + ")", Severity::Error);
  for (const auto& mem : m.invalid)
    r.discrepancy(where + ", " + mem.label, "generating subspace strictly inside W", mem.to_string() + " is not a valid class here",
                  Severity::Error);
  return m.complete();
}

}  // namespace

SuiteReport suite_end_chain(const SuiteConfig& cfg) {
  return timed([&] {
    SuiteReport r = start("end-chain", cfg);
    const auto model = N28Model::build(cfg.field, cfg.precision);
    json members = json::array();
    for (const auto& o : model.chain) members.push_back(value_set(o->span()));
    r.details["chain"] = members;
    r.check("S value set", "N28 generated by x=t^5, y=t^8, conductor 28", "{0,5,8,10,13,15,16,18,20,21,23,24,25,26}+[28,inf)",
            value_set(model.s->span()),
            value_set(model.s->span()) == "{0,5,8,10,13,15,16,18,20,21,23,24,25,26}+[28,inf)");
    for (const auto& name : displayed_chain_names()) {
      const auto shown = displayed_chain_span(name, cfg.field, cfg.precision);
      const auto& got = model.ring(name)->span();
      if (name == "S3") {
        const auto closure = order_from_generators<Fp>(
            {Series<Fp>::monomial(cfg.field, cfg.precision, 3), Series<Fp>::monomial(cfg.field, cfg.precision, 5)},
            cfg.field, cfg.precision);
        r.check("S3 value set", "S3 = End rad S2", value_set(closure.span()), value_set(got), got == closure.span());
        if (!(shown == got))
          r.discrepancy("chain display S3 = <1,z,x>+t^8R", value_set(shown), value_set(got) + " (z^2 of valuation 6 lies in End rad S2)",
                        Severity::Warning);
      } else {
        r.check(name + " value set", "chain display " + name, value_set(shown), value_set(got), shown == got);
      }
    }
    const bool extra = model.chain.size() == 7 && model.chain[5]->span().values() == std::vector<std::size_t>{0} &&
                       model.chain[5]->conductor() == 2;
    r.check("End rad S4", "S4 = <1,z>+t^5R", "{0}+[2,inf)", value_set(model.chain[5]->span()), extra);
    r.discrepancy("chain S0 < ... < S4 < R", "6 members ending in R", "7 members: End rad S4 = K+t^2R precedes R",
                  Severity::Warning);
    const auto wider = N28Model::build(cfg.field, cfg.precision + 8);
    bool stable = wider.chain.size() == model.chain.size();
    for (std::size_t i = 0; stable && i < model.chain.size(); ++i)
      stable = wider.chain[i]->span().same_subspace(model.chain[i]->span());
    r.check("precision stability", "chain at N and N+8", "identical", stable ? "identical" : "different", stable);
    return r;
  });
}

SuiteReport suite_s3_list(const SuiteConfig& cfg) {
  return timed([&] {
    SuiteReport r = start("s3-list", cfg);
    auto run = [&](std::size_t n) {
      const auto model = N28Model::build(cfg.field, n);
      CascadeOptions opt;
      opt.jobs = cfg.jobs;
      return std::make_pair(model, cascade(model.ring("S3"), opt));
    };
    const auto [model, res] = run(cfg.precision);
    const auto& classes = res.levels.back().classes;
    r.check("class count", "S3-ideals: S3, S4, S4*, R2, R3, R3*, R", "7", std::to_string(classes.size()), classes.size() == 7);
    std::set<std::size_t> used;
    json found = json::object();
    for (const auto& name : s3_ideal_names()) {
      const auto shown = s3_ideal(model, name);
      std::optional<std::size_t> hit;
      for (std::size_t i = 0; i < classes.size(); ++i)
        if (classes[i].ideal->span() == shown->span()) hit = i;
      r.check(name, "S3-ideal " + name, value_set(shown->span()), hit ? value_set(classes[*hit].ideal->span()) : "missing",
              hit && used.insert(*hit).second);
      found[name] = hit ? json(*hit) : json(nullptr);
    }
    r.details["classes"] = found;
    const auto [wmodel, wres] = run(cfg.precision + 8);
    bool stable = wres.levels.back().classes.size() == classes.size();
    for (std::size_t i = 0; stable && i < classes.size(); ++i)
      stable = wres.levels.back().classes[i].ideal->span().same_subspace(classes[i].ideal->span());
    r.check("precision stability", "S3 classes at N and N+8", "identical", stable ? "identical" : "different", stable);
    return r;
  });
}

namespace {

struct LayerRun {
  std::string name;
  LayerOutcome outcome;
  MatchReport match;
};

std::vector<LayerRun> run_s2_layers(const N28Model& model) {
  std::vector<LayerRun> out;
  for (const auto& t : s2_layer_tables()) {
    auto layer = enumerate_layer(model.ring("S2"), model.ring("S3"), s3_ideal(model, t.name));
    auto match = match_families(layer, t.families);
    out.push_back(LayerRun{t.name, std::move(layer), std::move(match)});
  }
  return out;
}

}  // namespace

SuiteReport suite_s2_prop(const SuiteConfig& cfg) {
  return timed([&] {
    SuiteReport r = start("s2-prop", cfg);
    const auto model = N28Model::build(cfg.field, cfg.precision);
    const auto runs = run_s2_layers(model);
    const bool golden = cfg.field.p != 2;
    std::vector<ClassRow> rows;
    json layers = json::object();
    for (const auto& run : runs) {
      const auto& table = s2_layer_table(run.name);
      const std::size_t expected = table_cardinality(table.families, cfg.field.p);
      const std::size_t got = run.outcome.representatives.size();
      const std::string where = "S2 list, layer I'=" + run.name;
      layers[run.name] = {{"orbits", got},
                          {"table", expected},
                          {"dimW", run.outcome.quotient.dim()},
                          {"dimWhat", run.outcome.quotient.hat_dim()},
                          {"generating", run.outcome.generating_count}};
      for (const auto& fam : table.families)
        if (displayed_params(fam).size() != fam.declared_arity)
          r.discrepancy(where + ", " + fam.label, std::to_string(fam.declared_arity) + " declared parameter(s)",
                        std::to_string(displayed_params(fam).size()) + " parameter(s) occur in " + fam.display,
                        Severity::Warning);
      if (!golden) continue;
      r.check("orbit count " + run.name, where, std::to_string(expected), std::to_string(got), expected == got);
      const bool exact = report_match(r, where, run.outcome, run.match);
      r.check("family match " + run.name, where, "every orbit matched once",
              std::to_string(run.match.unmatched.size()) + " unmatched, " + std::to_string(run.match.doubly_matched.size()) +
                  " doubly matched, " + std::to_string(run.match.invalid.size()) + " invalid members",
              exact);
      for (auto& row : layer_rows(run.name, run.outcome, run.match)) rows.push_back(std::move(row));
    }
    r.details["layers"] = layers;
    if (!golden) r.discrepancy("S2 list", "golden data for char != 2", "characteristic 2: counts only", Severity::Info);
    r.details["classes"] = json::parse(export_classes(rows, "json"));
    const auto wider = run_s2_layers(N28Model::build(cfg.field, cfg.precision + 8));
    bool stable = wider.size() == runs.size();
    for (std::size_t i = 0; stable && i < runs.size(); ++i) {
      const auto& a = runs[i].outcome;
      const auto& b = wider[i].outcome;
      stable = a.representatives.size() == b.representatives.size();
      for (std::size_t k = 0; stable && k < a.representatives.size(); ++k)
        stable = a.representatives[k].coords == b.representatives[k].coords;
    }
    r.check("precision stability", "S2 layers at N and N+8", "identical", stable ? "identical" : "different", stable);
    return r;
  });
}

SuiteReport suite_cascade(const SuiteConfig& cfg) {
  return timed([&] {
    SuiteReport r = start("cascade", cfg);
    const auto model = N28Model::build(cfg.field, cfg.precision);
    CascadeOptions opt;
    opt.jobs = cfg.jobs;
    const auto res = cascade(model.s, opt);
    json counts = json::array();
    for (const auto& lvl : res.levels) counts.push_back(lvl.classes.size());
    r.details["level_classes"] = counts;
    r.details["collisions"] = res.collisions;
    r.check("no cross-layer collisions", "classes sorted by the induced ideal", "0", std::to_string(res.collisions.size()),
            res.collisions.empty());
    const std::size_t m = multiplicity(*model.s);
    std::size_t worst = 0, violations = 0;
    for (const auto& lvl : res.levels)
      for (const auto& c : lvl.classes) {
        const std::size_t g = generator_count(*c.ideal);
        worst = std::max(worst, g);
        violations += g > m;
      }
    r.check("generator bound", "dim I/MI <= m for all ideals", "<= " + std::to_string(m),
            "max " + std::to_string(worst) + ", " + std::to_string(violations) + " violations", violations == 0);
    const std::size_t fresh = res.levels.back().classes.size() - res.levels[res.levels.size() - 2].classes.size();
    r.check("Gorenstein level", "every S-ideal is principal or an S0-ideal", "1 new class", std::to_string(fresh), fresh == 1);
    std::size_t mismatched = 0, layers = 0;
    for (const auto& lvl : res.levels)
      for (const auto& layer : lvl.layers) {
        ++layers;
        if (count_orbits_unrestricted(layer) != layer.representatives.size()) ++mismatched;
      }
    r.check("restriction to V containing 1", "subspaces containing the class of 1", "0 layers differ",
            std::to_string(mismatched) + " of " + std::to_string(layers), mismatched == 0);
    return r;
  });
}

SuiteReport suite_witness(const SuiteConfig& cfg) {
  return timed([&] {
    SuiteReport r = start("witness", cfg);
    const auto w = witness_pa_ge_3(cfg.field.p, cfg.precision);
    const std::size_t q3 = static_cast<std::size_t>(cfg.field.p) * cfg.field.p * cfg.field.p;
    r.check("pairwise non-isomorphic", "I(a,b,g) = <1, t+at^3+bt^4+gt^8> + M0", std::to_string(q3) + " classes",
            std::to_string(w.classes) + " classes of " + std::to_string(w.ideals), w.ideals == q3 && w.all_distinct());
    for (const auto& [a, b] : w.isomorphic_pairs)
      r.discrepancy("witness family", "non-isomorphic", a + " ~ " + b, Severity::Error);
    r.details["pairs_checked"] = w.pairs_checked;
    return r;
  });
}

SuiteReport suite_criterion_table(const SuiteConfig& cfg) {
  return timed([&] {
    SuiteReport r = start("criterion-table", cfg);
    const FieldSpec f = cfg.field;
    const std::size_t n = std::max<std::size_t>(cfg.precision, 80);
    json rows = json::array();
    auto verdict_row = [&](const std::string& ring, std::uint32_t ch, const CriterionVerdict& v) {
      rows.push_back({{"ring", ring},
                      {"char", ch},
                      {"pa_le_2", v.pa_le_2},
                      {"dominatedType", v.dominated_type ? json(v.dominated_type->to_string()) : json(nullptr)}});
    };
    for (std::uint32_t ch : {0u, 2u}) {
      for (const auto& t : criterion_types(ch)) {
        const auto vec = vector_of(t);
        const auto model = monomial_order<Fp>(vec, f, n);
        const auto v = criterion_pa_le_2(model, ch);
        verdict_row(t.to_string(), ch, v);
        r.check(t.to_string() + " (char " + std::to_string(ch) + ")", "criterion list", "true via " + t.to_string(),
                v.pa_le_2 ? "true via " + v.dominated_type->to_string() : "false",
                v.pa_le_2 && v.dominated_type == t && type_of(vec) == t);
      }
      const auto n59 = monomial_order<Fp>(ValuationVector::make(5, 9), f, n);
      const auto v59 = criterion_pa_le_2(n59, ch);
      verdict_row("<5,9>", ch, v59);
      r.check("<5,9> (char " + std::to_string(ch) + ")", "no element of valuation 6..8", "false", v59.pa_le_2 ? "true" : "false",
              !v59.pa_le_2);
      const auto w = witness_ring<Fp>(f, n);
      const auto vw = criterion_pa_le_2(w, ch);
      verdict_row("K+Kt^5+t^9R", ch, vw);
      r.check("K+Kt^5+t^9R (char " + std::to_string(ch) + ")", "pa >= 3 witness ring", "false", vw.pa_le_2 ? "true" : "false",
              !vw.pa_le_2);
    }
    r.details["verdicts"] = rows;
    return r;
  });
}

SuiteReport suite_cases(const SuiteConfig& cfg) {
  return timed([&] {
    SuiteReport r = start("cases", cfg);
    const std::uint32_t p = cfg.field.p;
    if (p == 2) {
      r.discrepancy("worked cases", "golden data for char != 2", "characteristic 2: skipped", Severity::Info);
      return r;
    }
    const auto model = N28Model::build(cfg.field, cfg.precision);
    const auto s0 = model.ring("S0"), s1 = model.ring("S1"), s2 = model.ring("S2");
    json out = json::array();
    for (const auto& c : case_tables()) {
      const auto& fam = find_family(s2_layer_table(c.layer), c.family);
      std::size_t instances = 0;
      bool all_ok = true;
      for (const auto& outer : family_members(fam, p)) {
        if (!constraint_holds(c.outer, outer, p)) continue;
        ++instances;
        const std::string where = c.id + ", I=" + FamilyMember{c.family, outer}.to_string();
        const auto ideal = s2_family_ideal(model, c.layer, fam, outer);
        const auto l1 = enumerate_layer(s1, s2, ideal);
        const auto m1 = match_families(l1, c.s1, outer);
        const std::size_t want1 = table_cardinality(c.s1, p, outer);
        bool ok = l1.representatives.size() == want1;
        if (!ok)
          r.discrepancy(where, std::to_string(want1) + " new S1-classes", std::to_string(l1.representatives.size()),
                        Severity::Error);
        ok = report_match(r, where + ", S1", l1, m1) && ok;
        // new S0-ideals over I itself and over each new S1-class
        std::size_t want0 = 0, got0 = 0;
        {
          const auto over_i = enumerate_layer(s0, s1, std::make_shared<const Ideal>(s1, ideal->span()));
          const auto it = c.s0.find("");
          const std::size_t w = it == c.s0.end() ? 0 : table_cardinality(it->second, p, outer);
          want0 += w;
          got0 += over_i.representatives.size();
          if (w != over_i.representatives.size()) {
            ok = false;
            r.discrepancy(where + ", S0 over I", std::to_string(w), std::to_string(over_i.representatives.size()),
                          Severity::Error);
          }
        }
        for (std::size_t i = 0; i < l1.lifted.size(); ++i) {
          const auto over = enumerate_layer(s0, s1, std::make_shared<const Ideal>(l1.lifted[i]));
          std::size_t w = 0;
          const auto& label = m1.label_of[i];
          const std::string name = label ? label->to_string() : describe(representative_generators(l1, i));
          if (label && c.s0.count(label->label)) {
            ParamValues bound = outer;
            for (auto [k, v] : label->params) bound[k] = v;
            const auto& table = c.s0.at(label->label);
            w = table_cardinality(table, p, bound);
            ok = report_match(r, where + ", S0 over " + name, over, match_families(over, table, bound)) && ok;
          }
          want0 += w;
          got0 += over.representatives.size();
          if (w != over.representatives.size()) {
            ok = false;
            r.discrepancy(where + ", S0 over " + name, std::to_string(w) + " new S0-classes",
                          std::to_string(over.representatives.size()), Severity::Error);
          }
        }
        out.push_back({{"case", c.id},
                       {"I", FamilyMember{c.family, outer}.to_string()},
                       {"newS1", l1.representatives.size()},
                       {"expectedS1", want1},
                       {"newS0", got0},
                       {"expectedS0", want0}});
        all_ok = all_ok && ok;
      }
      r.check(c.id, "worked case " + c.id + " (I=" + c.family + (c.outer.empty() ? "" : ", " + c.outer) + ")",
              "listed new S1- and S0-ideals", all_ok ? "as listed" : "differs", all_ok && instances > 0);
    }
    r.details["instances"] = out;
    return r;
  });
}

std::vector<SuiteReport> run_suite(const SuiteConfig& cfg) {
  cfg.validate();
  using Fn = SuiteReport (*)(const SuiteConfig&);
  const std::vector<std::pair<std::string, Fn>> all{{"end-chain", suite_end_chain},   {"s3-list", suite_s3_list},
                                                    {"s2-prop", suite_s2_prop},       {"cascade", suite_cascade},
                                                    {"witness", suite_witness},       {"criterion-table", suite_criterion_table},
                                                    {"cases", suite_cases}};
  std::vector<SuiteReport> out;
  for (const auto& [name, fn] : all)
    if (cfg.suite == "all" || cfg.suite == name) out.push_back(fn(cfg));
  return out;
}

int write_reports(const SuiteConfig& cfg, const std::vector<SuiteReport>& reports) {
  bool failed = false;
  json j = json::array();
  std::string text;
  for (const auto& r : reports) {
    failed = failed || r.failed();
    j.push_back(r.to_json());
    text += r.summary();
  }
  if (cfg.out) {
    std::ofstream(*cfg.out) << j.dump(2) << "\n";
    std::string txt = *cfg.out;
    const auto dot = txt.find_last_of('.');
    const auto slash = txt.find_last_of('/');
    if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) txt.resize(dot);
    std::ofstream(txt + ".txt") << text;
  }
  return failed ? 1 : 0;
}

std::vector<ClassRow> class_rows(const CascadeResult& result) {
  std::vector<ClassRow> rows;
  const auto& levels = result.levels;
  const auto& last = levels.back();
  for (const auto& c : last.classes) {
    ClassRow row{"top", std::nullopt, c.ideal->span(), std::nullopt, std::nullopt};
    if (c.parent && c.level > 0) {
      const auto& parent = levels[c.level - 1].classes.at(*c.parent).ideal->span();
      row.layer = value_signature(parent);
      row.induced = parent;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ClassRow> layer_rows(const std::string& layer, const LayerOutcome& outcome, const MatchReport& match) {
  std::vector<ClassRow> rows;
  for (std::size_t i = 0; i < outcome.lifted.size(); ++i) {
    ClassRow row{layer, outcome.quotient.layer_ideal->span(), outcome.lifted[i].span(), std::nullopt, std::nullopt};
    if (i < match.label_of.size() && match.label_of[i]) {
      row.family = match.label_of[i]->label;
      row.params = match.label_of[i]->params;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

json row_json(const ClassRow& r) {
  json j;
  j["layer"] = r.layer;
  j["inducedIdeal"] = r.induced ? span_to_json(*r.induced) : json(nullptr);
  j["representative"] = span_to_json(r.representative);
  if (r.family) j["familyLabel"] = *r.family;
  if (r.params) {
    json p = json::object();
    for (auto [k, v] : *r.params) p[std::string(1, k)] = v;
    j["params"] = p;
  }
  return j;
}

std::string csv_field(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  return out + "\"";
}

}  // namespace

std::string export_classes(std::vector<ClassRow> rows, const std::string& format) {
  std::vector<std::pair<std::string, json>> keyed;
  for (const auto& r : rows) {
    json j = row_json(r);
    keyed.emplace_back(r.layer + "\n" + j["representative"].dump(), std::move(j));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  if (format == "json") {
    json arr = json::array();
    for (auto& [k, j] : keyed) arr.push_back(std::move(j));
    return arr.dump(2);
  }
  if (format == "csv") {
    std::string out = "layer,inducedIdeal,representative,familyLabel,params\n";
    for (auto& [k, j] : keyed) {
      out += csv_field(j["layer"].get<std::string>()) + "," + csv_field(j["inducedIdeal"].dump()) + "," +
             csv_field(j["representative"].dump()) + "," +
             csv_field(j.contains("familyLabel") ? j["familyLabel"].get<std::string>() : "") + "," +
             csv_field(j.contains("params") ? j["params"].dump() : "") + "\n";
    }
    return out;
  }
  throw std::invalid_argument("unknown export format '" + format + "' (json or csv)");
}

std::vector<ClassRow> import_classes(const std::string& json_text) {
  const json arr = json::parse(json_text);
  std::vector<ClassRow> rows;
  for (const auto& j : arr) {
    const auto& rep = j.at("representative");
    const FieldSpec f = field_of_json(rep, FieldSpec{3});
    const std::size_t n = rep.at("precision").get<std::size_t>();
    ClassRow row{j.at("layer").get<std::string>(), std::nullopt, span_from_json<Fp>(rep, f, n), std::nullopt, std::nullopt};
    if (!j.at("inducedIdeal").is_null()) row.induced = span_from_json<Fp>(j["inducedIdeal"], f, n);
    if (j.contains("familyLabel")) row.family = j["familyLabel"].get<std::string>();
    if (j.contains("params")) {
      ParamValues p;
      for (auto& [k, v] : j["params"].items()) p[k.at(0)] = v.get<std::uint32_t>();
      row.params = p;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace onebranch
