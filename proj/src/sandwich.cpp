#include "onebranch/sandwich.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace onebranch {

namespace {

// Echelon insertion on the coefficients below `width`, pivots at lowest nonzero exponent.
void insert_reduced(std::vector<Series<Fp>>& rows, std::vector<std::size_t>& pivots, Series<Fp> r,
                    std::size_t width) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::size_t p = pivots[i];
    if (r[p].is_zero()) continue;
    const Fp c = r[p];
    for (std::size_t k = p; k < width; ++k)
      if (!rows[i][k].is_zero()) r[k] -= c * rows[i][k];
  }
  std::size_t p = 0;
  while (p < width && r[p].is_zero()) ++p;
  if (p == width) return;
  const Fp inv = r[p].inverse();
  for (std::size_t k = p; k < width; ++k) r[k] *= inv;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i][p].is_zero()) continue;
    const Fp c = rows[i][p];
    for (std::size_t k = p; k < width; ++k)
      if (!r[k].is_zero()) rows[i][k] -= c * r[k];
  }
  auto pos = std::lower_bound(pivots.begin(), pivots.end(), p) - pivots.begin();
  rows.insert(rows.begin() + pos, std::move(r));
  pivots.insert(pivots.begin() + pos, p);
}

bool first_row_is_e0(const FqMat& v) {
  if (v.rows == 0 || v(0, 0) != 1) return false;
  for (std::size_t j = 1; j < v.cols; ++j)
    if (v(0, j) != 0) return false;
  return true;
}

FqMat act(const Fq& fq, const FqMat& unit, const FqMat& v) {
  // rows of v are coordinate vectors; the unit acts on columns
  FqMat out(v.rows, v.cols);
  for (std::size_t r = 0; r < v.rows; ++r)
    for (std::size_t i = 0; i < v.cols; ++i) {
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < v.cols; ++j) acc += static_cast<std::uint64_t>(unit(i, j)) * v(r, j);
      out(r, i) = static_cast<std::uint32_t>(acc % fq.p());
    }
  fq.rref(out);
  return out;
}

bool is_generating(const Fq& fq, const QuotientModule& q, const FqMat& v) {
  FqMat img(v.rows, q.hat_dim());
  for (std::size_t r = 0; r < v.rows; ++r)
    for (std::size_t i = 0; i < q.hat_dim(); ++i) {
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < v.cols; ++j) acc += static_cast<std::uint64_t>(q.projection(i, j)) * v(r, j);
      img(r, i) = static_cast<std::uint32_t>(acc % fq.p());
    }
  return fq.rank(std::move(img)) == q.hat_dim();
}

}  // namespace

QuotientBasis::QuotientBasis(TailSpan<Fp> top, TailSpan<Fp> bottom) : top_(std::move(top)), bottom_(std::move(bottom)) {
  if (!top_.contains(bottom_)) throw Error("quotient: bottom is not contained in top");
  const std::size_t width = bottom_.tail();
  std::vector<Series<Fp>> candidates = top_.basis();
  for (std::size_t k = top_.tail(); k < width; ++k)
    candidates.push_back(Series<Fp>::monomial(top_.field(), top_.precision(), k));
  for (const auto& c : candidates) insert_reduced(labels_, pivots_, bottom_.reduce(c), width);
  if (labels_.size() != bottom_.codim() - top_.codim()) throw Error("quotient: dimension mismatch");
}

std::vector<std::size_t> QuotientBasis::label_valuations() const { return pivots_; }

std::optional<std::vector<std::uint32_t>> QuotientBasis::coords(const Series<Fp>& s) const {
  if (!top_.contains(s)) return std::nullopt;
  Series<Fp> r = bottom_.reduce(s);
  std::vector<std::uint32_t> out(labels_.size(), 0);
  for (std::size_t j = 0; j < labels_.size(); ++j) {
    out[j] = r[pivots_[j]].value();
    if (out[j] == 0) continue;
    const Fp c = r[pivots_[j]];
    for (std::size_t k = pivots_[j]; k < bottom_.tail(); ++k) r[k] -= c * labels_[j][k];
  }
  if (!r.is_zero()) throw Error("quotient: remainder outside the label span");
  return out;
}

Series<Fp> QuotientBasis::lift(const std::vector<std::uint32_t>& coords) const {
  Series<Fp> out(top_.field(), top_.precision());
  for (std::size_t j = 0; j < labels_.size(); ++j)
    if (coords[j] != 0) out += labels_[j] * Fp(coords[j], top_.field().p);
  return out;
}

QuotientModule build_quotient(const Order<Fp>& s, const Order<Fp>& s_prime, std::shared_ptr<const Ideal> layer_ideal) {
  const auto rad = radical(s);
  const auto rad_prime = radical(s_prime);
  if (!(product_span(rad, s_prime.span()) == rad)) throw Error("build_quotient: S' does not preserve rad S");
  const auto& top = layer_ideal->span();
  QuotientBasis w(top, product_span(rad, top));
  QuotientBasis w_hat(top, product_span(rad_prime, top));
  FqMat proj(w_hat.dim(), w.dim());
  for (std::size_t j = 0; j < w.dim(); ++j) {
    auto c = w_hat.coords(w.labels()[j]);
    for (std::size_t i = 0; i < w_hat.dim(); ++i) proj(i, j) = (*c)[i];
  }
  return QuotientModule{std::move(layer_ideal), std::move(w), std::move(w_hat), std::move(proj)};
}

bool shortcut_full(const Order<Fp>& s, const QuotientModule& q) { return q.hat_dim() == multiplicity(s); }

UnitActionGroup unit_action(const QuotientModule& q) {
  const auto& top = q.w.top();
  const auto& bottom = q.w.bottom();
  const Fq fq(top.field().p);
  UnitActionGroup g{hom_space(top, top), hom_space(top, bottom), {}, {}};
  std::vector<Series<Fp>> gens = g.endo->basis();
  for (std::size_t k = g.endo->tail(); k < bottom.tail(); ++k)
    gens.push_back(Series<Fp>::monomial(top.field(), top.precision(), k));
  const std::size_t d = q.dim();
  FqMat flat(gens.size(), d * d);
  for (std::size_t e = 0; e < gens.size(); ++e)
    for (std::size_t j = 0; j < d; ++j) {
      auto c = q.w.coords(gens[e] * q.w.labels()[j]);
      if (!c) throw Error("unit_action: endomorphism leaves I'");
      for (std::size_t i = 0; i < d; ++i) flat(e, i * d + j) = (*c)[i];
    }
  fq.rref(flat);
  if (flat.rows != g.endo_zero->codim() - g.endo->codim()) throw Error("unit_action: dim E^ != dim E/E_0");
  for (std::size_t b = 0; b < flat.rows; ++b) {
    FqMat m(d, d);
    std::copy(flat.a.begin() + b * d * d, flat.a.begin() + (b + 1) * d * d, m.a.begin());
    g.e_hat_basis.push_back(std::move(m));
  }
  std::vector<std::uint32_t> digits(g.e_hat_basis.size(), 0);
  while (true) {
    FqMat m(d, d);
    for (std::size_t b = 0; b < digits.size(); ++b)
      if (digits[b] != 0)
        for (std::size_t k = 0; k < m.a.size(); ++k) m.a[k] = fq.add(m.a[k], fq.mul(digits[b], g.e_hat_basis[b].a[k]));
    if (fq.invertible(m)) g.units.push_back(std::move(m));
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == fq.p()) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  return g;
}

std::optional<FqMat> subspace_of(const QuotientModule& q, const std::vector<Series<Fp>>& elements) {
  const Fq fq(q.w.top().field().p);
  FqMat v(elements.size() + 1, q.dim());
  auto one = q.w.coords(Series<Fp>::one(q.w.top().field(), q.w.top().precision()));
  if (!one) return std::nullopt;
  for (std::size_t j = 0; j < q.dim(); ++j) v(0, j) = (*one)[j];
  for (std::size_t r = 0; r < elements.size(); ++r) {
    auto c = q.w.coords(elements[r]);
    if (!c) return std::nullopt;
    for (std::size_t j = 0; j < q.dim(); ++j) v(r + 1, j) = (*c)[j];
  }
  fq.rref(v);
  return v;
}

Ideal lift_subspace(const OrderPtr& s, const QuotientModule& q, const FqMat& v) {
  std::vector<Series<Fp>> gens = q.bottom().basis();
  for (std::size_t r = 0; r < v.rows; ++r) {
    std::vector<std::uint32_t> row(v.a.begin() + r * v.cols, v.a.begin() + (r + 1) * v.cols);
    gens.push_back(q.w.lift(row));
  }
  auto span = TailSpan<Fp>::canonicalize(gens, q.bottom().tail(), q.bottom().field(), q.bottom().precision());
  return Ideal(s, std::move(span));
}

LayerOutcome enumerate_layer(OrderPtr s, OrderPtr s_prime, std::shared_ptr<const Ideal> layer_ideal) {
  QuotientModule quotient = build_quotient(*s, *s_prime, std::move(layer_ideal));
  LayerOutcome out{s, s_prime, std::move(quotient), {}, false, 0, {}, {}, {}, {}};
  const auto& q = out.quotient;
  out.shortcut = shortcut_full(*s, q);
  if (out.shortcut || q.hat_dim() == q.dim()) return out;

  const Fq fq(q.w.top().field().p);
  const std::size_t d = q.dim();
  auto one = q.w.coords(Series<Fp>::one(q.w.top().field(), q.w.top().precision()));
  if (!one || (*one)[0] != 1 || std::any_of(one->begin() + 1, one->end(), [](auto x) { return x != 0; }))
    throw Error("enumerate_layer: the class of 1 is not the first label");
  out.action = unit_action(q);

  // orbit id per key; representative key per orbit
  std::vector<std::string> rep_keys;
  std::vector<FqMat> rep_mats;
  std::unordered_map<std::string, std::size_t> orbit_of;
  for (std::size_t k = 0; k + 2 <= d; ++k) {
    fq.for_each_subspace(d - 1, k, [&](const FqMat& u) {
      FqMat v(k + 1, d);
      v(0, 0) = 1;
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t j = 0; j < d - 1; ++j) v(r + 1, j + 1) = u(r, j);
      if (!is_generating(fq, q, v)) return;
      ++out.generating_count;
      const std::string key = matrix_key(v);
      if (orbit_of.count(key)) return;
      const std::size_t id = rep_keys.size();
      std::string best = key;
      FqMat best_mat = v;
      std::size_t size = 0;
      for (const auto& unit : out.action.units) {
        FqMat w = act(fq, unit, v);
        if (!first_row_is_e0(w)) continue;
        std::string wk = matrix_key(w);
        auto [it, inserted] = orbit_of.emplace(wk, id);
        if (!inserted) {
          if (it->second != id) throw Error("enumerate_layer: orbits overlap");
          continue;
        }
        ++size;
        if (wk < best) {
          best = wk;
          best_mat = std::move(w);
        }
      }
      rep_keys.push_back(best);
      rep_mats.push_back(std::move(best_mat));
      out.orbit_sizes.push_back(size);
    });
  }
  std::size_t total = 0;
  for (auto sz : out.orbit_sizes) total += sz;
  if (total != out.generating_count) throw Error("enumerate_layer: orbits do not partition the subspaces");

  std::vector<std::size_t> order(rep_keys.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return rep_keys[a] < rep_keys[b]; });
  std::vector<std::size_t> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
  std::vector<std::size_t> sizes(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    out.representatives.push_back(GenSubspace{rep_mats[order[i]], true});
    sizes[i] = out.orbit_sizes[order[i]];
  }
  out.orbit_sizes = std::move(sizes);
  for (auto& [key, id] : orbit_of) id = rank[id];
  out.orbit_of = std::move(orbit_of);
  for (const auto& rep : out.representatives) out.lifted.push_back(lift_subspace(s, q, rep.coords));
  return out;
}

std::size_t count_orbits_unrestricted(const LayerOutcome& outcome) {
  const auto& q = outcome.quotient;
  if (outcome.shortcut || q.hat_dim() == q.dim()) return 0;
  const Fq fq(q.w.top().field().p);
  const std::size_t d = q.dim();
  std::set<std::string> seen;
  std::size_t orbits = 0;
  for (std::size_t k = 1; k < d; ++k) {
    fq.for_each_subspace(d, k, [&](const FqMat& v) {
      if (!is_generating(fq, q, v)) return;
      if (seen.count(matrix_key(v))) return;
      ++orbits;
      for (const auto& unit : outcome.action.units) seen.insert(matrix_key(act(fq, unit, v)));
    });
  }
  return orbits;
}

std::string value_signature(const TailSpan<Fp>& span) {
  std::ostringstream os;
  for (auto v : span.pivots()) os << v << ',';
  os << '|' << span.tail();
  return os.str();
}

const CascadeLevel& CascadeResult::level_of(const Order<Fp>& ring) const {
  for (const auto& level : levels)
    if (level.ring->span() == ring.span()) return level;
  throw Error("cascade has no level for the requested ring");
}

CascadeResult cascade(OrderPtr s, const CascadeOptions& options) {
  CascadeResult result;
  result.chain.push_back(s);
  for (auto& o : end_chain(*s)) result.chain.push_back(std::make_shared<const Order<Fp>>(std::move(o)));

  const auto& top = result.chain.back();
  CascadeLevel root{top, {}, {}};
  root.classes.push_back(ClassEntry{std::make_shared<const Ideal>(top, top->span()), 0, std::nullopt, std::nullopt});
  result.levels.push_back(std::move(root));

  for (std::size_t idx = result.chain.size() - 1; idx-- > options.stop_at_chain_index;) {
    const OrderPtr ring = result.chain[idx];
    const OrderPtr over = result.chain[idx + 1];
    const CascadeLevel& prev = result.levels.back();
    CascadeLevel level{ring, {}, {}};
    const std::size_t level_index = result.levels.size();

    std::map<std::string, std::vector<std::size_t>> buckets;
    for (const auto& c : prev.classes) {
      level.classes.push_back(ClassEntry{std::make_shared<const Ideal>(ring, c.ideal->span()), c.level, c.parent, c.orbit});
      buckets[value_signature(c.ideal->span())].push_back(level.classes.size() - 1);
    }

    std::vector<std::optional<LayerOutcome>> computed(prev.classes.size());
    const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, prev.classes.size()));
    auto work = [&](std::size_t worker) {
      for (std::size_t j = worker; j < prev.classes.size(); j += jobs)
        computed[j] = enumerate_layer(ring, over, prev.classes[j].ideal);
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < jobs; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    for (auto& c : computed) level.layers.push_back(std::move(*c));

    for (std::size_t j = 0; j < level.layers.size(); ++j) {
      const auto& layer = level.layers[j];
      for (std::size_t r = 0; r < layer.lifted.size(); ++r) {
        const Ideal& cand = layer.lifted[r];
        auto& bucket = buckets[value_signature(cand.span())];
        bool merged = false;
        for (auto other : bucket)
          if (is_isomorphic(cand, *level.classes[other].ideal).isomorphic) {
            std::ostringstream os;
            os << "level " << level_index << ": representative " << r << " over class " << j
               << " is isomorphic to class " << other;
            result.collisions.push_back(os.str());
            merged = true;
            break;
          }
        if (merged) continue;
        level.classes.push_back(ClassEntry{std::make_shared<const Ideal>(cand), level_index, j, r});
        bucket.push_back(level.classes.size() - 1);
      }
    }
    result.levels.push_back(std::move(level));
  }
  return result;
}

}  // namespace onebranch
