#include "idealtop/search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <thread>

#include "idealtop/error.hpp"

namespace idealtop {

namespace {

void enumerate_tables(int n, int x, std::array<SubsetMask, kMaxPoints>& nb, std::vector<Topology>& out) {
  if (x == n) {
    out.push_back(Topology::from_min_nbhds(n, std::span(nb.data(), n)));
    return;
  }
  const std::uint32_t total = subset_count(n);
  for (std::uint32_t bits = 0; bits < total; ++bits) {
    const SubsetMask m(bits);
    if (!m.has(x)) continue;
    // Transitivity against every point already fixed.
    bool ok = true;
    for (int y = 0; y < x && ok; ++y) {
      if (m.has(y) && !nb[y].subset_of(m)) ok = false;
      if (nb[y].has(x) && !m.subset_of(nb[y])) ok = false;
    }
    if (!ok) continue;
    nb[x] = m;
    enumerate_tables(n, x + 1, nb, out);
  }
}

void require_search_size(int n) {
  if (n < 1 || n > kMaxSearchPoints)
    throw Error(ErrorCode::CapExceeded,
                "search sizes must lie in 1.." + std::to_string(kMaxSearchPoints) + ", got " + std::to_string(n));
}

// Every analyzed ideal space of one size, topology-major.
struct Universe {
  int n = 0;
  std::vector<SubsetMask> carriers;
  std::vector<AnalyzedSpace> spaces;
  size_t topology_count = 0;

  const AnalyzedSpace& at(size_t t, size_t c) const { return spaces[t * carriers.size() + c]; }
};

std::shared_ptr<const Universe> build_universe(int n, const std::optional<std::vector<SubsetMask>>& allowed) {
  auto u = std::make_shared<Universe>();
  u->n = n;
  for (const Ideal& i : enumerate_ideals(n)) {
    if (allowed && std::find(allowed->begin(), allowed->end(), i.carrier()) == allowed->end()) continue;
    u->carriers.push_back(i.carrier());
  }
  const auto tops = enumerate_topologies(n);
  u->topology_count = tops.size();
  u->spaces.reserve(tops.size() * u->carriers.size());
  for (const Topology& t : tops)
    for (SubsetMask c : u->carriers) u->spaces.emplace_back(IdealSpace(t, Ideal(n, c)));
  return u;
}

struct MapTable {
  std::vector<AnalyzedMap> maps;
};

// Indices of one instance within its size pair.
struct Coordinates {
  int n_dom = 0;
  int n_cod = 0;
  size_t tx = 0, ty = 0, cx = 0, cy = 0, fi = 0;
};

struct BlockResult {
  std::uint64_t instances = 0;
  std::uint64_t found = 0;
  std::optional<Coordinates> first;
};

class Engine {
 public:
  Engine(TheoremId id, std::uint32_t required, std::uint32_t target, const SearchBounds& bounds)
      : id_(id), required_(required), target_(target), bounds_(bounds) {
    require_search_size(bounds.min_n_dom);
    require_search_size(bounds.min_n_cod);
    require_search_size(bounds.max_n_dom);
    require_search_size(bounds.max_n_cod);
    if (bounds.min_n_dom > bounds.max_n_dom || bounds.min_n_cod > bounds.max_n_cod)
      throw Error(ErrorCode::CapExceeded, "minimum size exceeds maximum size");
    const bool shared = bounds.dom_carriers == bounds.cod_carriers;
    for (int n = 1; n <= kMaxSearchPoints; ++n) {
      const bool need_dom = n >= bounds.min_n_dom && n <= bounds.max_n_dom;
      const bool need_cod = n >= bounds.min_n_cod && n <= bounds.max_n_cod;
      if (need_dom) dom_[n] = build_universe(n, bounds.dom_carriers);
      if (need_cod) cod_[n] = (shared && need_dom) ? dom_[n] : build_universe(n, bounds.cod_carriers);
    }
    for (int a = bounds.min_n_dom; a <= bounds.max_n_dom; ++a)
      for (int b = bounds.min_n_cod; b <= bounds.max_n_cod; ++b) {
        MapTable table;
        for (FiniteMap& f : enumerate_maps(a, b)) table.maps.emplace_back(std::move(f));
        maps_[{a, b}] = std::move(table);
      }
  }

  bool hits(const Coordinates& c, BlockResult& r) const {
    const auto& x = dom_.at(c.n_dom)->at(c.tx, c.cx);
    const auto& y = cod_.at(c.n_cod)->at(c.ty, c.cy);
    const auto& f = maps_.at({c.n_dom, c.n_cod}).maps[c.fi];
    const Evaluation e = evaluate(id_, x, y, f);
    ++r.instances;
    const bool hit = (e.hypotheses & required_) == required_ && (e.conclusions & target_) != target_;
    if (hit) {
      if (r.found == 0) r.first = c;
      ++r.found;
    }
    return hit;
  }

  // One block per (size pair, domain topology, codomain topology).
  struct Block {
    int n_dom, n_cod;
    size_t tx, ty;
  };

  std::vector<Block> exhaustive_blocks() const {
    std::vector<Block> blocks;
    for (int a = bounds_.min_n_dom; a <= bounds_.max_n_dom; ++a)
      for (int b = bounds_.min_n_cod; b <= bounds_.max_n_cod; ++b)
        for (size_t tx = 0; tx < dom_.at(a)->topology_count; ++tx)
          for (size_t ty = 0; ty < cod_.at(b)->topology_count; ++ty) blocks.push_back({a, b, tx, ty});
    return blocks;
  }

  BlockResult run_block(const Block& blk) const {
    BlockResult r;
    const auto& ux = *dom_.at(blk.n_dom);
    const auto& uy = *cod_.at(blk.n_cod);
    const size_t maps = maps_.at({blk.n_dom, blk.n_cod}).maps.size();
    Coordinates c{blk.n_dom, blk.n_cod, blk.tx, blk.ty, 0, 0, 0};
    for (c.cx = 0; c.cx < ux.carriers.size(); ++c.cx)
      for (c.cy = 0; c.cy < uy.carriers.size(); ++c.cy)
        for (c.fi = 0; c.fi < maps; ++c.fi) hits(c, r);
    return r;
  }

  std::vector<Coordinates> draws(const Sampling& s) const {
    std::mt19937_64 rng(s.seed);
    auto pick = [&](size_t count) { return std::uniform_int_distribution<size_t>(0, count - 1)(rng); };
    std::vector<Coordinates> out;
    out.reserve(s.samples);
    for (std::uint64_t i = 0; i < s.samples; ++i) {
      Coordinates c;
      c.n_dom = bounds_.min_n_dom + static_cast<int>(pick(bounds_.max_n_dom - bounds_.min_n_dom + 1));
      c.n_cod = bounds_.min_n_cod + static_cast<int>(pick(bounds_.max_n_cod - bounds_.min_n_cod + 1));
      const auto& ux = *dom_.at(c.n_dom);
      const auto& uy = *cod_.at(c.n_cod);
      c.tx = pick(ux.topology_count);
      c.ty = pick(uy.topology_count);
      c.cx = ux.carriers.empty() ? 0 : pick(ux.carriers.size());
      c.cy = uy.carriers.empty() ? 0 : pick(uy.carriers.size());
      c.fi = pick(maps_.at({c.n_dom, c.n_cod}).maps.size());
      out.push_back(c);
    }
    return out;
  }

  bool carriers_available() const {
    for (const auto& [n, u] : dom_)
      if (u->carriers.empty()) return false;
    for (const auto& [n, u] : cod_)
      if (u->carriers.empty()) return false;
    return true;
  }

  Instance instance_at(const Coordinates& c) const {
    const auto& x = dom_.at(c.n_dom)->at(c.tx, c.cx);
    const auto& y = cod_.at(c.n_cod)->at(c.ty, c.cy);
    return Instance(x.space, y.space, maps_.at({c.n_dom, c.n_cod}).maps[c.fi].f);
  }

  Verdict verdict_at(const Coordinates& c) const {
    return check(id_, dom_.at(c.n_dom)->at(c.tx, c.cx), cod_.at(c.n_cod)->at(c.ty, c.cy),
                 maps_.at({c.n_dom, c.n_cod}).maps[c.fi]);
  }

 private:
  TheoremId id_;
  std::uint32_t required_;
  std::uint32_t target_;
  SearchBounds bounds_;
  std::map<int, std::shared_ptr<const Universe>> dom_;
  std::map<int, std::shared_ptr<const Universe>> cod_;
  std::map<std::pair<int, int>, MapTable> maps_;
};

// Runs count jobs over the worker pool; results land at their own index.
template <class Job>
std::vector<BlockResult> fan_out(size_t count, int workers, Job&& job, const std::function<void(size_t, const BlockResult&)>& done) {
  std::vector<BlockResult> results(count);
  std::atomic<size_t> next{0};
  std::mutex mu;
  auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
      results[i] = job(i);
      std::lock_guard lock(mu);
      done(i, results[i]);
    }
  };
  const int n = std::max(1, std::min<int>(workers, static_cast<int>(std::max<size_t>(count, 1))));
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

SearchReport run(TheoremId id, std::uint32_t required, std::uint32_t target, std::vector<std::string> dropped,
                 const SearchBounds& bounds, const SearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const Engine engine(id, required, target, bounds);
  SearchReport report;
  report.theorem = id;
  report.dropped_hypotheses = std::move(dropped);
  report.bounds = bounds;

  std::vector<BlockResult> results;
  std::uint64_t found_so_far = 0;
  if (!engine.carriers_available()) {
    // An empty carrier list leaves nothing to visit.
  } else if (bounds.sampling) {
    const auto draws = engine.draws(*bounds.sampling);
    constexpr size_t kChunk = 4096;
    const size_t chunks = (draws.size() + kChunk - 1) / kChunk;
    results = fan_out(
        chunks, options.workers,
        [&](size_t i) {
          BlockResult r;
          for (size_t k = i * kChunk; k < std::min(draws.size(), (i + 1) * kChunk); ++k) engine.hits(draws[k], r);
          return r;
        },
        [&](size_t i, const BlockResult& r) {
          found_so_far += r.found;
          if (options.progress) {
            const auto& d = draws[i * kChunk];
            options.progress({i, chunks, d.n_dom, d.n_cod, r.instances, found_so_far});
          }
        });
  } else {
    const auto blocks = engine.exhaustive_blocks();
    results = fan_out(
        blocks.size(), options.workers, [&](size_t i) { return engine.run_block(blocks[i]); },
        [&](size_t i, const BlockResult& r) {
          found_so_far += r.found;
          if (options.progress)
            options.progress({i, blocks.size(), blocks[i].n_dom, blocks[i].n_cod, r.instances, found_so_far});
        });
  }

  for (const BlockResult& r : results) {
    report.instances_checked += r.instances;
    report.counterexamples_found += r.found;
    if (!report.counterexample && r.first) {
      report.counterexample = engine.instance_at(*r.first);
      report.verdict = engine.verdict_at(*r.first);
    }
  }
  report.certified = !report.counterexample.has_value();
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

std::uint32_t all_bits(size_t count) { return count >= 32 ? ~0U : (1U << count) - 1; }

}  // namespace

std::vector<Topology> enumerate_topologies(int n) {
  if (n < 1) throw Error(ErrorCode::BadMask, "point count must be positive");
  if (n > kMaxEnumeratedPoints)
    throw Error(ErrorCode::CapExceeded, "topology enumeration is capped at " + std::to_string(kMaxEnumeratedPoints) +
                                            " points, got " + std::to_string(n));
  std::vector<Topology> out;
  std::array<SubsetMask, kMaxPoints> nb{};
  enumerate_tables(n, 0, nb, out);
  return out;
}

std::vector<Ideal> enumerate_ideals(int n) {
  require_point_count(n);
  std::vector<Ideal> out;
  out.reserve(subset_count(n));
  for_each_subset(n, [&](SubsetMask m) { out.emplace_back(n, m); });
  return out;
}

std::vector<FiniteMap> enumerate_maps(int n_dom, int n_cod) {
  require_point_count(n_dom);
  require_point_count(n_cod);
  double total = 1;
  for (int i = 0; i < n_dom; ++i) total *= n_cod;
  if (total > double(1 << 24)) throw Error(ErrorCode::CapExceeded, "too many maps to enumerate");
  std::vector<FiniteMap> out;
  out.reserve(static_cast<size_t>(total));
  std::vector<Point> values(n_dom, 0);
  while (true) {
    out.emplace_back(n_dom, n_cod, values);
    int i = n_dom - 1;
    while (i >= 0 && values[i] == n_cod - 1) values[i--] = 0;
    if (i < 0) break;
    ++values[i];
  }
  return out;
}

std::string SearchReport::mode() const {
  if (bounds.sampling) return "sampled";
  if (bounds.dom_carriers || bounds.cod_carriers) return "restricted";
  return "exhaustive";
}

SearchReport verify_exhaustive(TheoremId id, const SearchBounds& bounds, const SearchOptions& options) {
  const auto& info = theorem_info(id);
  return run(id, all_bits(info.hypotheses.size()), all_bits(info.conclusions.size()), {}, bounds, options);
}

SearchReport find_counterexample(TheoremId id, const std::vector<std::string>& dropped, const SearchBounds& bounds,
                                 const SearchOptions& options) {
  const auto& info = theorem_info(id);
  std::uint32_t required = all_bits(info.hypotheses.size());
  for (const auto& name : dropped) required &= ~(1U << hypothesis_index(id, name));
  return run(id, required, 1U << info.designated, dropped, bounds, options);
}

}  // namespace idealtop
