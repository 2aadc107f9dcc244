#include "stablerep/stablecat.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <thread>

namespace stablerep {

void StableHom::validate() const {
  if (entries.size() != source.count()) throw error("hom matrix row count mismatch");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].size() != target.count()) throw error("hom matrix column count mismatch");
    for (std::size_t j = 0; j < entries[i].size(); ++j)
      for (const auto& [tau, coeff] : entries[i][j]) {
        if (!(tau.shape == source.summands[i]) || !(tau.type == target.summands[j]))
          throw error("hom entry tabloid has wrong shape or type");
        tau.validate();
      }
  }
}

StableHom StableHom::zero(StableObject src, StableObject tgt) {
  StableHom h;
  h.source = std::move(src);
  h.target = std::move(tgt);
  h.entries.assign(h.source.count(), std::vector<HomEntry>(h.target.count()));
  return h;
}

StableHom StableHom::identity(const StableObject& obj) {
  StableHom h = zero(obj, obj);
  for (std::size_t i = 0; i < obj.count(); ++i)
    h.entries[i][i][StableTabloid::identity(obj.summands[i])] = IvPoly::constant(1);
  return h;
}

StableHom StableHom::generator(const StableTabloid& tau, IvPoly coeff) {
  StableHom h = zero(StableObject::single(tau.shape), StableObject::single(tau.type));
  if (!coeff.is_zero()) h.entries[0][0][tau] = std::move(coeff);
  return h;
}

int interpolation_base(const Partition& mu, const Partition& lambda, const Partition& nu) {
  return 2 * (mu.size() + lambda.size() + nu.size()) + 1;
}

StructureTable& structure_cache() {
  static StructureTable table;
  return table;
}

HomEntry compose_generic(const StableTabloid& alpha, const StableTabloid& beta) {
  return structure_cache().compose_generic(alpha, beta);
}

std::size_t StructureTable::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return cache_.size();
}

HomEntry StructureTable::compose_generic(const StableTabloid& alpha, const StableTabloid& beta) {
  if (!(alpha.type == beta.shape))
    throw error("compose_generic requires type(alpha) = shape(beta)");
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find({alpha, beta});
    if (it != cache_.end()) return it->second;
  }
  fill_triple(alpha.shape, alpha.type, beta.type);
  std::lock_guard<std::mutex> lock(mutex_);
  return cache_.at({alpha, beta});
}

void StructureTable::fill_triple(const Partition& mu, const Partition& lambda,
                                 const Partition& nu) {
  const int d = std::max({mu.size(), lambda.size(), nu.size()});
  const int n0 = interpolation_base(mu, lambda, nu);

  for (int base : {n0, 2 * n0}) {
    // sample d+1 consecutive levels, then check two held-out levels
    std::vector<TripleTable> samples;
    for (int n = base; n <= base + d + 2; ++n)
      samples.push_back(structure_table(mu, lambda, nu, n));
    const TripleTable& first = samples.front();
    const std::size_t A = first.alphas.size(), B = first.betas.size(), T = first.taus.size();

    bool valid = true;
    std::map<std::pair<StableTabloid, StableTabloid>, HomEntry> result;
    for (std::size_t a = 0; a < A && valid; ++a)
      for (std::size_t b = 0; b < B && valid; ++b) {
        HomEntry entry;
        for (std::size_t t = 0; t < T && valid; ++t) {
          std::vector<BigInt> values;
          for (int k = 0; k <= d; ++k)
            values.push_back(samples[static_cast<std::size_t>(k)].count(a, b, t));
          IvPoly poly = IvPoly::from_values(base, values);
          for (int k = d + 1; k <= d + 2 && valid; ++k)
            if (poly.evaluate(base + k) !=
                samples[static_cast<std::size_t>(k)].count(a, b, t))
              valid = false;
          if (valid && !poly.is_zero()) entry[first.taus[t]] = std::move(poly);
        }
        if (valid)
          result[{first.alphas[a], first.betas[b]}] = std::move(entry);
      }
    if (valid) {
      std::lock_guard<std::mutex> lock(mutex_);
      for (auto& [key, entry] : result) cache_[key] = std::move(entry);
      return;
    }
  }
  throw error("structure constants failed held-out validation for (" + mu.to_string() +
              " | " + lambda.to_string() + " | " + nu.to_string() + ")");
}

StableHom compose(const StableHom& f, const StableHom& g) {
  if (!(f.target == g.source)) throw error("compose requires target(f) = source(g)");
  StableHom out = StableHom::zero(f.source, g.target);
  for (std::size_t i = 0; i < f.source.count(); ++i)
    for (std::size_t k = 0; k < g.target.count(); ++k) {
      HomEntry& acc = out.entries[i][k];
      for (std::size_t j = 0; j < f.target.count(); ++j)
        for (const auto& [ta, ca] : f.entries[i][j])
          for (const auto& [tb, cb] : g.entries[j][k]) {
            IvPoly c = ca * cb;
            if (c.is_zero()) continue;
            for (const auto& [tau, poly] : compose_generic(ta, tb)) {
              IvPoly add = poly * c;
              auto it = acc.find(tau);
              if (it == acc.end())
                acc[tau] = std::move(add);
              else
                it->second = it->second + add;
            }
          }
      for (auto it = acc.begin(); it != acc.end();)
        it = it->second.is_zero() ? acc.erase(it) : std::next(it);
    }
  return out;
}

StableHom dualize(const StableHom& f) {
  StableHom out = StableHom::zero(f.target, f.source);
  for (std::size_t i = 0; i < f.source.count(); ++i)
    for (std::size_t j = 0; j < f.target.count(); ++j)
      for (const auto& [tau, coeff] : f.entries[i][j])
        out.entries[j][i][transpose_dual(tau)] = coeff;
  return out;
}

StableHom operator+(const StableHom& f, const StableHom& g) {
  if (!(f.source == g.source) || !(f.target == g.target))
    throw error("hom addition requires equal objects");
  StableHom out = f;
  for (std::size_t i = 0; i < f.source.count(); ++i)
    for (std::size_t j = 0; j < f.target.count(); ++j)
      for (const auto& [tau, coeff] : g.entries[i][j]) {
        auto it = out.entries[i][j].find(tau);
        if (it == out.entries[i][j].end())
          out.entries[i][j][tau] = coeff;
        else {
          it->second = it->second + coeff;
          if (it->second.is_zero()) out.entries[i][j].erase(it);
        }
      }
  return out;
}

StableHom scale(const StableHom& f, const IvPoly& c) {
  StableHom out = StableHom::zero(f.source, f.target);
  if (c.is_zero()) return out;
  for (std::size_t i = 0; i < f.source.count(); ++i)
    for (std::size_t j = 0; j < f.target.count(); ++j)
      for (const auto& [tau, coeff] : f.entries[i][j]) out.entries[i][j][tau] = coeff * c;
  return out;
}

bool hom_equal(const StableHom& f, const StableHom& g) {
  if (!(f.source == g.source) || !(f.target == g.target)) return false;
  for (std::size_t i = 0; i < f.source.count(); ++i)
    for (std::size_t j = 0; j < f.target.count(); ++j) {
      const HomEntry& a = f.entries[i][j];
      const HomEntry& b = g.entries[i][j];
      for (const auto& [tau, coeff] : a) {
        auto it = b.find(tau);
        if (it == b.end() ? !coeff.is_zero() : !coeff.equals(it->second)) return false;
      }
      for (const auto& [tau, coeff] : b)
        if (a.find(tau) == a.end() && !coeff.is_zero()) return false;
    }
  return true;
}

HomEntryModP evaluate_entry(const HomEntry& entry, const PAdicResidue& t) {
  int maxdeg = 0;
  for (const auto& [tau, coeff] : entry) maxdeg = std::max(maxdeg, coeff.degree());
  if (t.exp < digits_p(maxdeg, t.p))
    throw error("evaluate_entry: insufficient p-adic digits for degree " +
                std::to_string(maxdeg));
  HomEntryModP out;
  for (const auto& [tau, coeff] : entry) {
    std::int64_t v = eval_at_padic(coeff.rebase(0), t);
    if (v) out[tau] = v;
  }
  return out;
}

StableHomModP evaluate_category(const StableHom& f, const PAdicResidue& t) {
  StableHomModP out{f.source, f.target, t.p, {}};
  out.entries.assign(f.source.count(), std::vector<HomEntryModP>(f.target.count()));
  for (std::size_t i = 0; i < f.source.count(); ++i)
    for (std::size_t j = 0; j < f.target.count(); ++j)
      out.entries[i][j] = evaluate_entry(f.entries[i][j], t);
  return out;
}

namespace {

std::vector<Partition> partitions_up_to(int r) {
  std::vector<Partition> out;
  for (int s = 0; s <= r; ++s)
    for (Partition& p : partitions_of(s)) out.push_back(std::move(p));
  return out;
}

int ceil_log_p(int r, Prime p) {
  int e = 0;
  std::int64_t power = 1;
  while (power < r) {
    power *= p.value();
    ++e;
  }
  return e;
}

}  // namespace

EquivalenceReport check_perm_equivalence(int r, Prime p, int n, int m,
                                         std::size_t witness_cap, int jobs) {
  EquivalenceReport report;
  report.r = r;
  report.p = p.value();
  report.n = n;
  report.m = m;
  report.size_ok = n > 2 * r && m > 2 * r;
  report.divisibility_ok = (n - m) % pow_i64(p.value(), digits_p(r, p)) == 0;
  report.weak_divisibility_ok = (n - m) % pow_i64(p.value(), ceil_log_p(r, p)) == 0;
  report.agree = true;

  std::vector<Partition> parts = partitions_up_to(r);
  std::vector<std::array<const Partition*, 3>> triples;
  for (const Partition& mu : parts)
    for (const Partition& lambda : parts)
      for (const Partition& nu : parts) triples.push_back({&mu, &lambda, &nu});

  std::vector<std::vector<EquivalenceWitness>> found(triples.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t idx = next.fetch_add(1); idx < triples.size(); idx = next.fetch_add(1)) {
      const auto& [mu, lambda, nu] = triples[idx];
      TripleTable tn = structure_table(*mu, *lambda, *nu, n);
      TripleTable tm = structure_table(*mu, *lambda, *nu, m);
      for (std::size_t a = 0; a < tn.alphas.size(); ++a)
        for (std::size_t b = 0; b < tn.betas.size(); ++b)
          for (std::size_t t = 0; t < tn.taus.size(); ++t) {
            std::int64_t vn = tn.count(a, b, t) % p.value();
            std::int64_t vm = tm.count(a, b, t) % p.value();
            if (vn != vm)
              found[idx].push_back({*mu, *lambda, *nu, tn.alphas[a], tn.betas[b],
                                    tn.taus[t], vn, vm});
          }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& wlist : found)
    for (const EquivalenceWitness& w : wlist) {
      report.agree = false;
      if (report.witnesses.size() < witness_cap) report.witnesses.push_back(w);
    }
  return report;
}

Partition de_pad(const Partition& padded) {
  if (padded.empty()) return Partition();
  std::vector<int> rest(padded.parts().begin() + 1, padded.parts().end());
  Partition out(std::move(rest));
  if (!(pad(out, padded.size()) == padded)) throw error("partition does not de-pad");
  return out;
}

namespace {

template <typename T, typename F>
T stabilized(int n0, F&& compute) {
  T first = compute(n0);
  T second = compute(n0 + 1);
  if (!(first == second))
    throw error("stable functor failed to stabilize between levels " + std::to_string(n0) +
                " and " + std::to_string(n0 + 1));
  return first;
}

}  // namespace

std::vector<Partition> stable_tensor(const Partition& lambda, const Partition& mu) {
  int n0 = 2 * (lambda.size() + mu.size()) + std::max(lambda.part(1), mu.part(1)) + 1;
  return stabilized<std::vector<Partition>>(n0, [&](int n) {
    std::vector<Partition> out;
    for (const Partition& summand : tensor_decompose_concrete(pad(lambda, n), pad(mu, n)))
      out.push_back(de_pad(summand));
    std::sort(out.begin(), out.end());
    return out;
  });
}

std::vector<std::pair<Partition, Partition>> stable_restrict(const Partition& lambda, int ell) {
  int n0 = 2 * (lambda.size() + ell) + lambda.part(1) + 1;
  return stabilized<std::vector<std::pair<Partition, Partition>>>(n0, [&](int n) {
    std::vector<std::pair<Partition, Partition>> out;
    for (const auto& [mu, nupad] : restrict_decompose(lambda, ell, n))
      out.emplace_back(mu, de_pad(nupad));
    std::sort(out.begin(), out.end());
    return out;
  });
}

Partition stable_induce(const Partition& mu, const Partition& lambda) {
  int n0 = 2 * lambda.size() + mu.size() + lambda.part(1) + 1;
  return stabilized<Partition>(n0, [&](int n) { return de_pad(induce(mu, lambda, n)); });
}

}  // namespace stablerep
