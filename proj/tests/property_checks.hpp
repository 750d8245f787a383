#pragma once
// Randomized property checks shared by the property test binary and the acceptance gate.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "onebranch/n28.hpp"
#include "onebranch/report.hpp"

namespace props {

using namespace onebranch;

struct Result {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
};

inline Series<Fp> random_series(std::mt19937_64& rng, FieldSpec f, std::size_t n, std::size_t lo, std::size_t hi) {
  Series<Fp> s(f, n);
  for (std::size_t i = lo; i < hi && i < n; ++i)
    if (rng() % 2) s[i] = Fp(rng() % f.p, f.p);
  return s;
}

/// canonicalize is idempotent and independent of the order of the generators.
inline Result canonical_form(std::size_t cases, std::uint64_t seed) {
  Result r{"canonicalize idempotence and permutation invariance"};
  std::mt19937_64 rng(seed);
  const std::uint32_t primes[] = {2, 3, 5, 7};
  while (r.cases < cases) {
    const FieldSpec f{primes[rng() % 4]};
    const std::size_t n = 16 + rng() % 24;
    const std::size_t tail = rng() % (n + 1);
    std::vector<Series<Fp>> g;
    for (std::size_t k = 0, m = rng() % 7; k < m; ++k) g.push_back(random_series(rng, f, n, rng() % 6, n));
    // redundant combinations
    if (g.size() >= 2) g.push_back(g[0] * Fp(2, f.p) + g[1]);
    const auto a = TailSpan<Fp>::canonicalize(g, tail, f, n);
    const auto again = TailSpan<Fp>::canonicalize(a.basis(), a.tail(), f, n);
    std::shuffle(g.begin(), g.end(), rng);
    const auto b = TailSpan<Fp>::canonicalize(g, tail, f, n);
    bool ok = again == a && b == a;
    for (const auto& x : g) ok = ok && a.contains(x);
    for (std::size_t i = 0; ok && i < a.basis().size(); ++i) {
      const auto& row = a.basis()[i];
      ok = row[*row.valuation()].is_one();
      for (std::size_t j = 0; ok && j < a.basis().size(); ++j)
        if (j != i) ok = row[*a.basis()[j].valuation()].is_zero();
      for (std::size_t e = a.tail(); ok && e < n; ++e) ok = row[e].is_zero();
    }
    r.record(ok, "canonical form differs for " + std::to_string(g.size()) + " generators at tail " + std::to_string(tail));
  }
  return r;
}

/// Random unit u in R with u(0) != 0 and low-order terms.
inline Series<Fp> random_unit(std::mt19937_64& rng, FieldSpec f, std::size_t n, std::size_t depth) {
  auto u = random_series(rng, f, n, 1, depth);
  u[0] = Fp(1 + rng() % (f.p - 1), f.p);
  return u;
}

/// Reflexivity, symmetry and transitivity of is_isomorphic on the S3 classes and random unit
/// multiples of them.
inline Result equivalence_laws(const N28Model& model, std::size_t cases, std::uint64_t seed) {
  Result r{"is_isomorphic equivalence laws on the S3 classes"};
  std::mt19937_64 rng(seed);
  const auto s3 = model.ring("S3");
  const std::size_t n = model.precision;
  std::vector<Ideal> pool;
  std::vector<std::size_t> cls;
  for (std::size_t k = 0; k < s3_ideal_names().size(); ++k) {
    const auto base = s3_ideal(model, s3_ideal_names()[k]);
    pool.push_back(*base);
    cls.push_back(k);
    for (int copies = 0; copies < 4; ++copies) {
      const auto u = random_unit(rng, model.field, n, 10);
      std::vector<Series<Fp>> moved;
      for (const auto& b : base->span().basis()) moved.push_back(u * b);
      pool.push_back(normalize_ideal<Fp>(s3, TailSpan<Fp>::canonicalize(moved, base->span().tail(), model.field, n)));
      cls.push_back(k);
    }
  }
  for (std::size_t i = 0; i < pool.size(); ++i) r.record(is_isomorphic(pool[i], pool[i]).isomorphic, "not reflexive");
  std::vector<std::vector<char>> iso(pool.size(), std::vector<char>(pool.size()));
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = 0; j < pool.size(); ++j) {
      iso[i][j] = is_isomorphic(pool[i], pool[j]).isomorphic;
      r.record(static_cast<bool>(iso[i][j]) == (cls[i] == cls[j]), "class mismatch");
    }
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = 0; j < pool.size(); ++j) {
      r.record(iso[i][j] == iso[j][i], "not symmetric");
      if (!iso[i][j]) continue;
      r.record(pool[i].codim() == pool[j].codim() && generator_count(pool[i]) == generator_count(pool[j]),
               "invariants differ on isomorphic ideals");
    }
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = 0; j < pool.size(); ++j)
      for (std::size_t k = 0; k < pool.size(); ++k)
        if (iso[i][j] && iso[j][k]) r.record(iso[i][k], "not transitive");
  while (r.cases < cases) {
    const std::size_t i = rng() % pool.size(), j = rng() % pool.size();
    const auto res = is_isomorphic(pool[i], pool[j]);
    bool ok = res.isomorphic == (cls[i] == cls[j]);
    if (ok && res.isomorphic) {
      std::vector<Series<Fp>> image;
      for (const auto& b : pool[i].span().basis()) image.push_back(*res.witness * b);
      ok = TailSpan<Fp>::canonicalize(image, pool[i].span().tail(), model.field, n) == pool[j].span();
    }
    r.record(ok, "witness does not map I onto J");
  }
  return r;
}

/// aI is isomorphic to I for random units a and random ideals from the S2 layers.
inline Result unit_scaling(const N28Model& model, std::size_t cases, std::uint64_t seed) {
  Result r{"unit scaling aI ~ I"};
  std::mt19937_64 rng(seed);
  const auto s2 = model.ring("S2");
  std::vector<Ideal> pool;
  for (const auto& name : s3_ideal_names()) {
    const auto layer = enumerate_layer(s2, model.ring("S3"), s3_ideal(model, name));
    for (const auto& l : layer.lifted) pool.push_back(l);
  }
  const std::size_t n = model.precision;
  while (r.cases < cases) {
    const auto& i = pool[rng() % pool.size()];
    const auto u = random_unit(rng, model.field, n, 24);
    std::vector<Series<Fp>> moved;
    for (const auto& b : i.span().basis()) moved.push_back(u * b);
    const auto j = normalize_ideal<Fp>(s2, TailSpan<Fp>::canonicalize(moved, i.span().tail(), model.field, n));
    const bool ok = is_isomorphic(i, j).isomorphic && j.codim() == i.codim();
    r.record(ok, "unit multiple not isomorphic");
  }
  return r;
}

/// Criteria 1-3 outputs agree at precision N and N+8.
inline Result precision_stability(FieldSpec f) {
  Result r{"precision stability N vs N+8"};
  const auto a = N28Model::build(f, 64), b = N28Model::build(f, 72);
  for (std::size_t i = 0; i < a.chain.size(); ++i)
    r.record(a.chain[i]->span().same_subspace(b.chain[i]->span()), "chain member " + std::to_string(i));
  const auto ca = cascade(a.ring("S3")), cb = cascade(b.ring("S3"));
  r.record(ca.levels.back().classes.size() == cb.levels.back().classes.size(), "S3 class count");
  for (std::size_t k = 0; k < ca.levels.back().classes.size() && k < cb.levels.back().classes.size(); ++k)
    r.record(ca.levels.back().classes[k].ideal->span().same_subspace(cb.levels.back().classes[k].ideal->span()), "S3 class");
  for (const auto& name : s3_ideal_names()) {
    const auto la = enumerate_layer(a.ring("S2"), a.ring("S3"), s3_ideal(a, name));
    const auto lb = enumerate_layer(b.ring("S2"), b.ring("S3"), s3_ideal(b, name));
    r.record(la.representatives.size() == lb.representatives.size(), "layer " + name + " count");
    for (std::size_t k = 0; k < la.lifted.size() && k < lb.lifted.size(); ++k)
      r.record(la.lifted[k].span().same_subspace(lb.lifted[k].span()), "layer " + name + " representative");
  }
  return r;
}

inline std::vector<Result> run_all(std::size_t cases, std::uint64_t seed) {
  const auto m3 = N28Model::build(FieldSpec{3}, 64);
  const auto m5 = N28Model::build(FieldSpec{5}, 64);
  std::vector<Result> out;
  out.push_back(canonical_form(cases, seed));
  auto eq = equivalence_laws(m3, cases, seed + 1);
  const auto eq5 = equivalence_laws(m5, cases / 2, seed + 2);
  eq.cases += eq5.cases;
  eq.failures += eq5.failures;
  if (eq.first_failure.empty()) eq.first_failure = eq5.first_failure;
  out.push_back(eq);
  out.push_back(unit_scaling(m3, cases, seed + 3));
  auto st = precision_stability(FieldSpec{3});
  const auto st5 = precision_stability(FieldSpec{5});
  st.cases += st5.cases;
  st.failures += st5.failures;
  out.push_back(st);
  return out;
}

}  // namespace props
