#include "bistellar/explorer.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "bistellar/anneal.hpp"
#include "bistellar/error.hpp"

namespace bistellar {
namespace {

using Goal = std::function<bool(const Triangulation&, const CanonicalForm&)>;

struct Discovery {
  CanonicalForm form;
  FlipMove move;
};

struct Expansion {
  std::vector<Discovery> children;
};

struct SearchOutcome {
  ComponentReport report;
  std::optional<std::size_t> goal;
};

using Store = std::unordered_map<CanonicalForm, std::size_t, CanonicalFormHash>;

// Children not yet in the store (read-only during expansion), first
// occurrence per class, in move order.
Expansion expand(const CanonicalForm& form, std::span<const FlipKind> kinds, const Store& store) {
  const Triangulation rep = to_triangulation(form);
  Expansion out;
  std::unordered_set<CanonicalForm, CanonicalFormHash> local;
  for (const auto& m : enumerate_moves(rep, kinds)) {
    auto cf = canonical_form(apply(rep, m));
    if (store.contains(cf) || !local.insert(cf).second) continue;
    out.children.push_back({std::move(cf), m});
  }
  return out;
}

std::vector<Expansion> expand_level(const std::vector<ClassRecord>& classes, const std::vector<std::size_t>& frontier,
                                    std::span<const FlipKind> kinds, const Store& store, std::size_t threads) {
  std::vector<Expansion> out(frontier.size());
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < frontier.size(); i += stride) out[i] = expand(classes[frontier[i]].form, kinds, store);
  };
  threads = std::max<std::size_t>(1, std::min(threads, frontier.size()));
  if (threads == 1) {
    work(0, 1);
    return out;
  }
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
  for (auto& th : pool) th.join();
  return out;
}

SearchOutcome search(const Triangulation& start, std::span<const FlipKind> kinds, SearchLimits limits,
                     std::size_t threads, const Goal& goal) {
  SearchOutcome out;
  auto& report = out.report;
  Store store;

  auto admit = [&](CanonicalForm form, std::size_t depth, std::optional<std::size_t> parent,
                   std::optional<FlipMove> via) {
    const std::size_t idx = report.classes.size();
    const Triangulation rep = to_triangulation(form);
    store.emplace(form, idx);
    report.classes.push_back({std::move(form), depth, parent, via, is_seed(rep)});
    if (goal && !out.goal && goal(rep, report.classes.back().form)) out.goal = idx;
    return idx;
  };

  admit(canonical_form(start), 0, std::nullopt, std::nullopt);
  std::vector<std::size_t> frontier{0};
  bool truncated = false;
  std::size_t depth = 0;
  while (!frontier.empty() && !out.goal) {
    auto level = expand_level(report.classes, frontier, kinds, store, threads);
    std::vector<std::size_t> next;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      for (auto& d : level[i].children) {
        if (store.contains(d.form)) continue;
        if (depth >= limits.max_depth || report.classes.size() >= limits.max_classes || out.goal) {
          truncated = true;
          continue;
        }
        next.push_back(admit(std::move(d.form), depth + 1, frontier[i], d.move));
      }
    }
    if (!next.empty()) ++depth;
    frontier = std::move(next);
  }

  report.class_count = report.classes.size();
  report.max_depth = depth;
  report.frontier_exhausted = !truncated && frontier.empty();
  for (const auto& rec : report.classes) {
    if (rec.seed) report.seed_classes.push_back(rec.form);
  }
  return out;
}

// Replays the BFS tree path to `target` on the concrete start triangulation,
// translating each move from canonical labels to the current labels.
FlipPath concretize(const Triangulation& start, const ComponentReport& report, std::size_t target) {
  std::vector<std::size_t> chain;
  for (std::optional<std::size_t> at = target; at; at = report.classes[*at].parent) chain.push_back(*at);
  std::reverse(chain.begin(), chain.end());

  FlipPath path{report.classes[chain.front()].form, report.classes[target].form, {}};
  Triangulation current = start;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const auto& rec = report.classes[chain[i]];
    const auto lab = canonical_labeling(current);
    auto move = relabel_move(*rec.via, [&](Vertex c) { return lab.to_original(c); });
    if (move.kind() == FlipKind::OneFour) move = FlipMove::one_four(move.facet_site(), current.max_label() + 1);
    current = apply(current, move);
    path.moves.push_back(move);
  }
  return path;
}

}  // namespace

ComponentReport bfs_component(const Triangulation& start, std::span<const FlipKind> kinds, SearchLimits limits,
                              std::size_t threads) {
  return search(start, kinds, limits, threads, nullptr).report;
}

bool is_seed(const Triangulation& t) {
  constexpr std::array kinds{FlipKind::ThreeTwo};
  return enumerate_moves(t, kinds).empty();
}

std::vector<CanonicalForm> find_seeds(const ComponentReport& report) {
  std::vector<CanonicalForm> seeds;
  for (const auto& rec : report.classes) {
    if (is_seed(to_triangulation(rec.form))) seeds.push_back(rec.form);
  }
  return seeds;
}

bool is_stacked(const Triangulation& t) { return t.n() >= 5 && stacked_potential(t) == t.n() - 5; }

std::optional<FlipPath> closure_certificate(const Triangulation& t, SearchLimits limits, std::size_t threads) {
  auto out = search(t, kVertexPreserving, limits, threads,
                    [](const Triangulation& rep, const CanonicalForm&) { return is_stacked(rep); });
  if (!out.goal) return std::nullopt;
  return concretize(t, out.report, *out.goal);
}

std::optional<FlipPath> shortest_path(const Triangulation& a, const Triangulation& b, std::span<const FlipKind> kinds,
                                      SearchLimits limits, std::size_t threads) {
  const auto target = canonical_form(b);
  auto out = search(a, kinds, limits, threads,
                    [&](const Triangulation&, const CanonicalForm& cf) { return cf == target; });
  if (!out.goal) return std::nullopt;
  return concretize(a, out.report, *out.goal);
}

}  // namespace bistellar
