#include "szf/campaigns.hpp"

#include <omp.h>

#include <chrono>
#include <exception>
#include <functional>
#include <ostream>

#include "szf/families.hpp"
#include "szf/forcing.hpp"
#include "szf/structure.hpp"
#include "szf/throttling.hpp"

namespace szf {

namespace {

using Clock = std::chrono::steady_clock;

struct Instance {
  std::string spec;
  std::function<VerificationRow(const SearchOptions&)> evaluate;
};

bool holds(Relation rel, long long computed, long long predicted, int n) {
  switch (rel) {
    case Relation::eq: return computed == predicted;
    case Relation::le: return computed <= predicted;
    case Relation::ge: return computed >= predicted;
    case Relation::interior: return computed != 1 && computed != 2 && computed != n - 1 && computed != n;
  }
  return false;
}

VerificationRow row(std::string spec, int n, long long computed, long long predicted, Relation rel) {
  VerificationRow r{std::move(spec), n, computed, predicted, rel, false, 0.0};
  r.match = holds(rel, computed, predicted, n);
  return r;
}

std::pair<int, int> range_or(const CampaignRequest& req, int lo, int hi) { return req.n_range.value_or(std::pair{lo, hi}); }

std::pair<std::uint64_t, std::uint64_t> seeds_or(const CampaignRequest& req, std::uint64_t lo, std::uint64_t hi) {
  return req.seeds.value_or(std::pair{lo, hi});
}

/// Exact th by searching budgets upward from `start`; every failed budget
/// certifies th > budget.
int deepen(const Graph& g, int start, const SearchOptions& opts) {
  for (int budget = std::max(start, 0);; ++budget) {
    if (find_set_within(g, budget, opts)) return budget;
  }
}

std::vector<Instance> formula_instances(const CampaignRequest& req, Family family, int (*formula)(int)) {
  std::vector<Instance> out;
  const auto [lo, hi] = range_or(req, 3, 18);
  for (int n = lo; n <= hi; ++n) {
    const FamilySpec spec{family, {n}};
    out.push_back({to_string(spec), [spec, n, formula](const SearchOptions& opts) {
                     return row(to_string(spec), n, throttle(build(spec), opts).th, formula(n), Relation::eq);
                   }});
  }
  return out;
}

std::vector<Instance> spider_instances(const CampaignRequest& req) {
  std::vector<Instance> out;
  std::vector<std::pair<int, int>> pairs = default_spiders();
  if (req.n_range) {
    // Interpreted as a leg-length range; every admissible leg count with order <= 26.
    pairs.clear();
    for (int l = req.n_range->first; l <= req.n_range->second; ++l) {
      for (int p = 3; p * l + 1 <= 26; ++p) {
        if (l >= 2 && 2 * p > l + 2) pairs.emplace_back(p, l);
      }
    }
  }
  for (auto [p, l] : pairs) {
    const FamilySpec spec{Family::spider, {p, l}};
    out.push_back({to_string(spec), [spec, p, l](const SearchOptions& opts) {
                     const Graph g = build(spec);
                     const int predicted = th_spider_formula(p, l);
                     int computed = 0;
                     try {
                       computed = throttle_with_bound(g, predicted, opts).th;
                     } catch (const std::invalid_argument&) {
                       computed = throttle(g, opts).th;  // the formula undershoots; report the true value
                     }
                     return row(to_string(spec), g.order(), computed, predicted, Relation::eq);
                   }});
  }
  return out;
}

std::vector<Instance> hypercube_instances(const CampaignRequest& req) {
  std::vector<Instance> out;
  const auto [lo, hi] = range_or(req, 2, 4);
  for (int n = lo; n <= hi; ++n) {
    const FamilySpec spec{Family::hypercube, {n}};
    out.push_back({to_string(spec), [spec, n](const SearchOptions& opts) {
                     const Graph g = build(spec);
                     const auto predicted = th_hypercube_formula(n);
                     int computed = 0;
                     try {
                       computed = throttle_with_bound(g, static_cast<int>(predicted), opts).th;
                     } catch (const std::invalid_argument&) {
                       computed = throttle(g, opts).th;
                     }
                     return row(to_string(spec), g.order(), computed, predicted, Relation::eq);
                   }});
  }
  return out;
}

/// Base order for corona seed s: 2..8. Even seeds use trees.
int corona_base_order(std::uint64_t seed) { return 2 + static_cast<int>(seed % 7); }

std::vector<Instance> corona_instances(const CampaignRequest& req) {
  std::vector<Instance> out;
  const auto [lo, hi] = seeds_or(req, 1, 10);
  for (std::uint64_t seed = lo; seed <= hi; ++seed) {
    const int order = corona_base_order(seed);
    const int tree = seed % 2 == 0 ? 1 : 0;
    const FamilySpec k1{Family::corona, {order, static_cast<int>(seed), 1, tree}};
    const FamilySpec k2{Family::corona, {order, static_cast<int>(seed), 2, tree}};
    out.push_back({to_string(k1), [k1](const SearchOptions& opts) {
                     const Graph g = build(k1);
                     return row(to_string(k1), g.order(), throttle(g, opts).th, 2, Relation::eq);
                   }});
    out.push_back({to_string(k2), [k2, order, seed, tree](const SearchOptions& opts) {
                     const Graph g = build(k2);
                     const Graph base = random_connected(order, seed, tree != 0);
                     const long long bound = leaves(base).size() >= 3 ? order : order + 1;
                     return row(to_string(k2), g.order(), throttle(g, opts).th, bound, Relation::le);
                   }});
  }
  return out;
}

std::vector<Instance> extreme_instances(const CampaignRequest& req) {
  std::vector<Instance> out;
  const int n_max = req.n_max.value_or(6);
  for (int n = 1; n <= n_max; ++n) {
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    const std::uint64_t count = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if ((mask >> i) & 1U) edges.push_back(pairs[i]);
      }
      Graph g = Graph::from_edge_list(n, edges);
      std::string spec = "graph6:" + to_graph6(g);
      out.push_back({spec, [g = std::move(g), spec](const SearchOptions& opts) {
                       const auto c = classify_extremes(g);
                       const int th = throttle(g, opts).th;
                       if (!c.predicted) return row(spec, g.order(), th, -1, Relation::interior);
                       return row(spec, g.order(), th, *c.predicted, Relation::eq);
                     }});
    }
  }
  return out;
}

/// Cycle base 8..16 with up to one double-edge K2 per base vertex.
FamilySpec diameter_spec(std::uint64_t seed) {
  return {Family::gadget, {1, 8 + static_cast<int>(seed % 9), static_cast<int>(seed), 1, 0}};
}

std::vector<Instance> diameter_instances(const CampaignRequest& req) {
  std::vector<Instance> out;
  const auto [lo, hi] = seeds_or(req, 1, 20);
  for (std::uint64_t seed = lo; seed <= hi; ++seed) {
    const FamilySpec spec = diameter_spec(seed);
    out.push_back({to_string(spec), [spec](const SearchOptions& opts) {
                     const Graph g = build(spec);
                     const auto d = diameter(g).value();
                     const auto needed = min_throttling_for_diameter(d);
                     const int th = deepen(g, static_cast<int>(needed) - 1, opts);
                     return row(to_string(spec), g.order(), th, needed, Relation::ge);
                   }});
  }
  return out;
}

std::vector<Instance> gadget_instances(const CampaignRequest& req) {
  std::vector<Instance> out;
  const auto [lo, hi] = seeds_or(req, 1, 20);
  for (std::uint64_t seed = lo; seed <= hi; ++seed) {
    for (int base = 0; base <= 1; ++base) {
      const int length = 3 + static_cast<int>(seed * 7 % 38);  // 3..40
      const FamilySpec spec{Family::gadget, {base, length, static_cast<int>(seed), 2, 1}};
      out.push_back({to_string(spec), [spec, base, length](const SearchOptions&) {
                       const Graph g = build(spec);
                       const auto kind = base == 1 ? BaseKind::cycle : BaseKind::path;
                       const VertexSet s = paired_blue_witness(kind, length, paired_spacing(length));
                       const auto trace = propagate(g, s);
                       // A stalled witness is reported as an impossible value.
                       const long long value =
                           trace.completed() ? static_cast<long long>(s.size()) + *trace.pt() : g.order() + 1LL;
                       const auto bound = static_cast<long long>(isqrt(36ULL * static_cast<std::uint64_t>(length)));
                       return row(to_string(spec), g.order(), value, bound, Relation::le);
                     }});
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::eq: return "eq";
    case Relation::le: return "le";
    case Relation::ge: return "ge";
    case Relation::interior: return "interior";
  }
  return "";
}

const std::vector<std::string>& campaign_names() {
  static const std::vector<std::string> names{"paths",    "cycles",         "spiders",      "hypercubes",
                                              "coronas",  "extremes",       "diameter-bound", "gadget-family"};
  return names;
}

const std::vector<std::pair<int, int>>& default_spiders() {
  static const std::vector<std::pair<int, int>> pairs{{4, 2}, {5, 2}, {6, 2}, {4, 3}, {5, 3},
                                                      {6, 3}, {4, 4}, {5, 4}, {5, 5}};
  return pairs;
}

int paired_spacing(int base_length) {
  const int s = std::max(2, static_cast<int>(isqrt(2ULL * static_cast<std::uint64_t>(base_length))));
  return std::min(s, base_length);
}

std::vector<VerificationRow> run_campaign(const CampaignRequest& request) {
  std::vector<Instance> instances;
  const auto& name = request.campaign;
  if (name == "paths") {
    instances = formula_instances(request, Family::path, th_path_formula);
  } else if (name == "cycles") {
    instances = formula_instances(request, Family::cycle, th_cycle_formula);
  } else if (name == "spiders") {
    instances = spider_instances(request);
  } else if (name == "hypercubes") {
    instances = hypercube_instances(request);
  } else if (name == "coronas") {
    instances = corona_instances(request);
  } else if (name == "extremes") {
    instances = extreme_instances(request);
  } else if (name == "diameter-bound") {
    instances = diameter_instances(request);
  } else if (name == "gadget-family") {
    instances = gadget_instances(request);
  } else {
    throw std::invalid_argument("unknown campaign '" + name + "'");
  }

  std::vector<VerificationRow> rows(instances.size());
  std::vector<std::exception_ptr> errors(instances.size());
  const auto timeout = std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(request.timeout_s));
  const bool outer = request.jobs > 1;
  const long long count = static_cast<long long>(instances.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, request.jobs)) if (outer)
  for (long long i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      const auto start = Clock::now();
      SearchOptions opts;
      opts.execution = outer ? Execution::serial : Execution::parallel;
      opts.deadline = start + timeout;
      rows[idx] = instances[idx].evaluate(opts);
      rows[idx].runtime_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  }

  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (!errors[i]) continue;
    try {
      std::rethrow_exception(errors[i]);
    } catch (const SearchTimeout&) {
      throw CampaignTimeout("instance " + instances[i].spec + " exceeded " + std::to_string(request.timeout_s) + " s");
    }
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<VerificationRow>& rows) {
  out << "spec,n,computed,predicted,relation,match,runtime_ms\n";
  for (const auto& r : rows) {
    out << r.spec << ',' << r.n << ',' << r.computed << ',' << r.predicted << ',' << to_string(r.relation) << ','
        << (r.match ? "true" : "false") << ',' << r.runtime_ms << '\n';
  }
}

}  // namespace szf
