#include <algorithm>
#include <limits>
#include <queue>
#include <tuple>
#include <unordered_map>

#include "thinpath/solvers.hpp"

namespace thinpath {
namespace {

using Word = kernels::Word;
constexpr std::uint32_t kNoParent = std::numeric_limits<std::uint32_t>::max();

// Flat arena of (relay, cover) search states.
class StateArena {
 public:
  struct State {
    VertexId relay;
    std::uint32_t parent;
    EdgeId via;
    std::uint32_t width;
    bool dead;
  };

  explicit StateArena(std::size_t universe) : stride_(VertexSet::words_for(universe)) {}

  std::uint32_t add(VertexId relay, std::uint32_t parent, EdgeId via, std::span<const Word> cover,
                    std::uint32_t width) {
    states_.push_back({relay, parent, via, width, false});
    words_.insert(words_.end(), cover.begin(), cover.end());
    return static_cast<std::uint32_t>(states_.size() - 1);
  }

  State& operator[](std::uint32_t i) { return states_[i]; }
  std::span<const Word> cover(std::uint32_t i) const {
    return {words_.data() + static_cast<std::size_t>(i) * stride_, stride_};
  }
  std::size_t size() const noexcept { return states_.size(); }

 private:
  std::size_t stride_;
  std::vector<State> states_;
  std::vector<Word> words_;
};

std::size_t hash_cover(VertexId relay, std::span<const Word> words) {
  std::size_t h = relay * 0x9e3779b97f4a7c15ULL;
  for (Word w : words) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
  return h;
}

}  // namespace

SolveResult exact(const Hypergraph& h, VertexId s, VertexId t, const ExactOptions& opts) {
  if (s == t) throw InputError("exact: source equals target");
  if (s >= h.vertex_count() || t >= h.vertex_count()) throw StructuralError("exact: vertex out of range");

  StateArena arena(h.vertex_count());
  std::vector<std::vector<std::uint32_t>> retained(h.vertex_count());
  std::unordered_multimap<std::size_t, std::uint32_t> seen;

  // (width, non-goal, insertion order): equal-width goals pop first.
  using Key = std::tuple<std::uint32_t, bool, std::uint32_t>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> open;

  SolveResult result;
  auto admit = [&](VertexId relay, std::uint32_t parent, EdgeId via, std::span<const Word> cover,
                   std::uint32_t width) {
    if (opts.dominance_pruning) {
      auto& list = retained[relay];
      for (std::uint32_t r : list) {
        if (kernels::is_subset(arena.cover(r), cover)) return;
      }
      std::erase_if(list, [&](std::uint32_t r) {
        if (!kernels::is_subset(cover, arena.cover(r))) return false;
        arena[r].dead = true;
        return true;
      });
    } else {
      const std::size_t key = hash_cover(relay, cover);
      auto [lo, hi] = seen.equal_range(key);
      for (auto it = lo; it != hi; ++it) {
        const auto other = arena.cover(it->second);
        if (arena[it->second].relay == relay && std::equal(other.begin(), other.end(), cover.begin()))
          return;
      }
    }
    if (arena.size() >= opts.budget) throw BudgetExceeded(opts.budget);
    const std::uint32_t id = arena.add(relay, parent, via, cover, width);
    if (opts.dominance_pruning) {
      retained[relay].push_back(id);
    } else {
      seen.emplace(hash_cover(relay, cover), id);
    }
    open.push({width, relay != t, id});
    ++result.diagnostics.relaxations;
  };

  VertexSet start = h.empty_set();
  start.insert(s);
  admit(s, kNoParent, 0, start.words(), 1);

  VertexSet scratch = h.empty_set();
  while (!open.empty()) {
    const auto [width, non_goal, id] = open.top();
    open.pop();
    if (arena[id].dead) continue;
    ++result.diagnostics.states_explored;
    if (!non_goal) {
      Hyperpath p{s, t, {}};
      for (std::uint32_t cur = id; arena[cur].parent != kNoParent; cur = arena[cur].parent)
        p.edges.push_back(arena[cur].via);
      std::reverse(p.edges.begin(), p.edges.end());
      result.path = std::move(p);
      result.cover = cover_of(h, *result.path);
      result.width = width;
      return result;
    }
    const VertexId relay = arena[id].relay;
    for (EdgeId eid : h.out_edges(relay)) {
      const Hyperedge& e = h.edge(eid);
      // The arena may reallocate inside admit, so copy the parent cover first.
      const auto parent_cover = arena.cover(id);
      std::copy(parent_cover.begin(), parent_cover.end(), scratch.words().begin());
      scratch |= e.destination_set;
      const auto next_width = static_cast<std::uint32_t>(scratch.count());
      for (VertexId u : e.destinations) admit(u, id, eid, scratch.words(), next_width);
    }
  }
  return result;
}

}  // namespace thinpath
