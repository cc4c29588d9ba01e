#include "bistellar/anneal.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "bistellar/error.hpp"
#include "bistellar/rng.hpp"

namespace bistellar {
namespace {

std::int64_t s_max_of(std::size_t n) { return static_cast<std::int64_t>(n) - 5; }

std::size_t longest_chain(const Triangulation& t, std::map<std::vector<Facet>, std::size_t>& memo) {
  if (auto it = memo.find(t.facets()); it != memo.end()) return it->second;
  std::size_t best = 0;
  for (Vertex v : t.vertices()) {
    if (legal_41(t, v)) best = std::max(best, 1 + longest_chain(apply(t, FlipMove::four_one(v)), memo));
  }
  memo.emplace(t.facets(), best);
  return best;
}

}  // namespace

void AnnealConfig::validate() const {
  if (!(cooling_factor > 0.0 && cooling_factor < 1.0)) throw std::invalid_argument("cooling_factor must lie in (0,1)");
  if (steps_per_temperature == 0) throw std::invalid_argument("steps_per_temperature must be positive");
  if (!std::isfinite(initial_temperature)) throw std::invalid_argument("initial_temperature must be finite");
}

std::vector<Vertex> greedy_removal_chain(const Triangulation& t) {
  // Works on vertex stars directly; rebuilding a Triangulation per step is far slower.
  const auto& verts = t.vertices();
  auto index = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  std::set<Facet> present(t.facets().begin(), t.facets().end());
  std::vector<std::vector<Facet>> star(verts.size());
  for (const auto& f : t.facets())
    for (Vertex v : f) star[index(v)].push_back(f);

  std::vector<Vertex> chain;
  std::vector<bool> gone(verts.size(), false);
  for (std::size_t i = 0; i < verts.size();) {
    if (gone[i] || star[i].size() != 4) {
      ++i;
      continue;
    }
    std::vector<Vertex> nb;
    for (const auto& f : star[i])
      for (Vertex x : f)
        if (x != verts[i]) nb.push_back(x);
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    if (nb.size() != 4 || present.contains({nb[0], nb[1], nb[2], nb[3]})) {
      ++i;
      continue;
    }
    for (const auto& f : star[i]) {
      present.erase(f);
      for (Vertex x : f) {
        if (x != verts[i]) std::erase(star[index(x)], f);
      }
    }
    star[i].clear();
    gone[i] = true;
    const Facet replacement{nb[0], nb[1], nb[2], nb[3]};
    present.insert(replacement);
    for (Vertex x : replacement) star[index(x)].push_back(replacement);
    chain.push_back(verts[i]);
    i = 0;
  }
  return chain;
}

std::size_t stacked_potential(const Triangulation& t) { return greedy_removal_chain(t).size(); }

std::size_t stacked_potential_max(const Triangulation& t) {
  std::map<std::vector<Facet>, std::size_t> memo;
  return longest_chain(t, memo);
}

std::int64_t stacked_cost(const Triangulation& t, std::size_t n, std::optional<std::int64_t> weight) {
  if (n < 5) throw std::invalid_argument("stacked cost needs n >= 5");
  const auto s_max = s_max_of(n);
  const auto w = weight.value_or(s_max + 1);
  if (w < s_max + 1) throw std::invalid_argument("weight must be at least s_max + 1");
  const auto s = static_cast<std::int64_t>(stacked_potential(t));
  return (s_max - s) * w + static_cast<std::int64_t>(t.facets().size());
}

Preparation prepare_unflippable(const Triangulation& t) {
  const Vertex v = t.max_label() + 1;
  const auto first = FlipMove::one_four(t.facets().front(), v);
  const std::size_t target = t.n();
  constexpr std::size_t kNodeBudget = 20000;

  // Depth-first over link-expanding 2-3 flips, lexicographically first triangle
  // first; backtracks only when a branch stalls short of the full link.
  std::set<std::vector<Facet>> dead;
  std::vector<FlipMove> path;
  std::size_t nodes = 0, best_link = 0;
  std::optional<Triangulation> done;
  std::function<bool(const Triangulation&)> grow = [&](const Triangulation& cur) {
    const auto link_size = cur.neighbors(v).size();
    best_link = std::max(best_link, link_size);
    if (link_size == target) {
      done = cur;
      return true;
    }
    if (++nodes > kNodeBudget || dead.contains(cur.facets())) return false;
    for (const auto& tri : cur.link_of_vertex(v).link) {
      if (!legal_23(cur, tri)) continue;
      path.push_back(FlipMove::two_three(tri));
      if (grow(apply(cur, path.back()))) return true;
      path.pop_back();
    }
    dead.insert(cur.facets());
    return false;
  };

  if (!grow(apply(t, first))) {
    throw Error(ErrorKind::PreparationStalled,
                "link of vertex " + std::to_string(v) + " reaches at most " + std::to_string(best_link) + " of " +
                    std::to_string(target) + " vertices" +
                    (nodes > kNodeBudget ? " (search budget exhausted)" : " (all orders tried)"));
  }
  Preparation prep{*done, v, {first}, path.size(), target};
  prep.moves.insert(prep.moves.end(), path.begin(), path.end());
  return prep;
}

AnnealResult run(const Triangulation& t, const Objective& objective, const AnnealConfig& config) {
  config.validate();
  const bool stacked = objective.kind == ObjectiveKind::StackedPotential;
  const std::size_t n0 = t.n();
  const std::int64_t s_max = s_max_of(n0);

  std::vector<FlipKind> kinds = config.allowed_kinds;
  if (kinds.empty()) {
    kinds = stacked ? std::vector<FlipKind>(kVertexPreserving.begin(), kVertexPreserving.end())
                    : std::vector<FlipKind>(kAllKinds.begin(), kAllKinds.end());
  }

  // Reduction: lexicographic (vertices, tetrahedra) folded into one integer.
  const std::int64_t vertex_weight =
      4 * static_cast<std::int64_t>(config.max_flips) + static_cast<std::int64_t>(t.facets().size());
  auto cost_of = [&](const Triangulation& x) -> std::int64_t {
    if (stacked) return stacked_cost(x, n0, objective.weight);
    return static_cast<std::int64_t>(x.n()) * vertex_weight + static_cast<std::int64_t>(x.facets().size());
  };
  auto succeeded = [&](const Triangulation& x) {
    if (stacked) return static_cast<std::int64_t>(stacked_potential(x)) == s_max;
    return x.n() == 5 && x.facets().size() == 5;
  };

  Rng rng(config.rng_seed);
  // Reduction costs move in steps of one tetrahedron, so its scale is 1.
  const double auto_temperature = stacked ? std::max<double>(1.0, 3.0 * static_cast<double>(s_max)) : 1.0;
  double temperature = config.initial_temperature > 0 ? config.initial_temperature : auto_temperature;

  Triangulation current = t;
  std::int64_t cost = cost_of(current);
  AnnealResult result{current, {}, cost, false, 0, 0};
  std::size_t best_len = 0;
  Triangulation best = current;
  std::vector<FlipMove> trace;

  if (succeeded(current)) {
    result.success = true;
    return result;
  }

  while (result.proposals < config.max_flips) {
    auto moves = enumerate_moves(current, kinds);
    if (moves.empty()) break;
    const FlipMove move = moves[uniform_index(rng, moves.size())];
    ++result.proposals;

    std::optional<Triangulation> next;
    std::int64_t delta = 0;
    if (stacked) {
      next = apply(current, move);
      delta = cost_of(*next) - cost;
    } else {
      const auto d = flip_delta(move.kind());
      delta = d.dv * vertex_weight + d.dt;
    }
    if (delta <= 0 || uniform_unit(rng) < std::exp(-static_cast<double>(delta) / temperature)) {
      current = next ? std::move(*next) : apply(current, move);
      cost += delta;
      trace.push_back(move);
      ++result.accepted;
      if (cost < result.best_cost) {
        result.best_cost = cost;
        best = current;
        best_len = trace.size();
      }
      if (succeeded(current)) {
        result.success = true;
        result.final = current;
        result.best_cost = cost;
        result.trace = std::move(trace);
        return result;
      }
    }
    if (result.proposals % config.steps_per_temperature == 0) temperature *= config.cooling_factor;
  }

  trace.erase(trace.begin() + static_cast<std::ptrdiff_t>(best_len), trace.end());
  result.final = best;
  result.trace = std::move(trace);
  return result;
}

AnnealResult reduce_to_simplex(const Triangulation& t, const AnnealConfig& config) {
  if (t.n() == 5) {
    return AnnealResult{t, {}, static_cast<std::int64_t>(t.facets().size()), t.facets().size() == 5, 0, 0};
  }
  std::vector<FlipMove> prefix;
  Triangulation start = t;
  if (enumerate_moves(t, kVertexPreserving).empty()) {
    try {
      auto prep = prepare_unflippable(t);
      start = prep.result;
      prefix = std::move(prep.moves);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PreparationStalled) throw;
    }
  }
  auto result = run(start, Objective::reduction(), config);
  prefix.insert(prefix.end(), result.trace.begin(), result.trace.end());
  result.trace = std::move(prefix);
  return result;
}

}  // namespace bistellar
