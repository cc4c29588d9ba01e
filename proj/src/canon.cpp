#include "bistellar/canon.hpp"

#include <algorithm>
#include <ostream>

#include "bistellar/error.hpp"
#include "bistellar/io.hpp"

namespace bistellar {
namespace {

using Key = std::uint64_t;

constexpr std::uint32_t kSlotBits = 16;

// A facet's partial key: the labels assigned so far occupy the leading slots
// (labels are handed out in increasing order, so the prefix is sorted).
struct PartialFacet {
  Key known = 0;
  std::uint32_t count = 0;
};

Key padded(const PartialFacet& f, std::uint32_t pad) noexcept {
  Key k = f.known;
  for (std::uint32_t i = f.count; i < 4; ++i) k |= Key{pad} << (kSlotBits * (3 - i));
  return k;
}

class LexMinSearch {
 public:
  explicit LexMinSearch(const Triangulation& t) : n_(static_cast<std::uint32_t>(t.n())) {
    const auto& verts = t.vertices();
    auto index = [&](Vertex v) {
      return static_cast<std::uint32_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };
    facets_.reserve(t.facets().size());
    star_.assign(n_, {});
    for (const auto& f : t.facets()) {
      const auto i = static_cast<std::uint32_t>(facets_.size());
      facets_.push_back({index(f[0]), index(f[1]), index(f[2]), index(f[3])});
      for (auto v : facets_.back()) star_[v].push_back(i);
    }
    label_.assign(n_, 0);
    valence_.assign(std::size_t{n_} * n_, 0);
    for (const auto& f : facets_)
      for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b)
          if (a != b) ++valence_[std::size_t{f[a]} * n_ + f[b]];
    min_valence_ = ~std::uint32_t{0};
    for (auto v : valence_)
      if (v) min_valence_ = std::min(min_valence_, v);
  }

  void run() {
    partial_.assign(facets_.size(), {});
    descend(0);
  }

  const std::vector<Key>& best() const noexcept { return best_; }
  const std::vector<std::uint32_t>& best_labels() const noexcept { return best_label_; }

 private:
  // Labels 1..assigned are placed. Any completion lists exact_ first, then an
  // element no smaller than the least open facet padded with next_label.
  // pending_ holds fully labeled facets not yet settled into exact_, sorted.
  void descend(std::uint32_t assigned) {
    const std::uint32_t next_label = assigned + 1;
    Key min_open = ~Key{0};
    for (const auto& f : partial_) {
      if (f.count < 4) min_open = std::min(min_open, padded(f, next_label));
    }
    const std::size_t exact_mark = exact_.size();
    std::size_t moved = 0;
    while (moved < pending_.size() && pending_[moved] < min_open) exact_.push_back(pending_[moved++]);
    pending_.erase(pending_.begin(), pending_.begin() + static_cast<std::ptrdiff_t>(moved));

    auto restore = [&] {
      pending_.insert(pending_.begin(), exact_.begin() + static_cast<std::ptrdiff_t>(exact_mark), exact_.end());
      exact_.resize(exact_mark);
    };

    if (!best_.empty()) {
      auto [mine, theirs] = std::mismatch(exact_.begin(), exact_.end(), best_.begin());
      const bool worse = mine != exact_.end() ? *mine > *theirs
                                              : (theirs != best_.end() ? *theirs < min_open : true);
      if (worse) return restore();
    }
    if (assigned == n_) {
      best_ = exact_;
      best_label_ = label_;
      return restore();
    }

    std::vector<std::uint32_t> candidates;
    for (std::size_t i = 0; i < facets_.size(); ++i) {
      const auto& f = partial_[i];
      if (f.count == 4 || padded(f, next_label) != min_open) continue;
      for (auto v : facets_[i]) {
        if (label_[v] == 0) candidates.push_back(v);
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    // The facets through the edge labeled {1,2} head the list in a pattern fixed
    // by that edge's valence, and a smaller valence gives a smaller list.
    if (assigned < 2) {
      std::erase_if(candidates, [&](std::uint32_t v) {
        if (assigned == 1) return valence_[std::size_t{first_} * n_ + v] != min_valence_;
        for (std::uint32_t u = 0; u < n_; ++u) {
          if (valence_[std::size_t{v} * n_ + u] == min_valence_) return false;
        }
        return true;
      });
    }

    for (auto v : candidates) {
      if (assigned == 0) first_ = v;
      label_[v] = next_label;
      for (auto i : star_[v]) {
        auto& f = partial_[i];
        f.known |= Key{next_label} << (kSlotBits * (3 - f.count));
        if (++f.count == 4) pending_.insert(std::upper_bound(pending_.begin(), pending_.end(), f.known), f.known);
      }
      descend(next_label);
      for (auto i : star_[v]) {
        auto& f = partial_[i];
        if (f.count == 4) pending_.erase(std::lower_bound(pending_.begin(), pending_.end(), f.known));
        --f.count;
        f.known &= ~(Key{0xffff} << (kSlotBits * (3 - f.count)));
      }
      label_[v] = 0;
    }
    restore();
  }

  std::vector<std::uint32_t> valence_;  // edge valence, n x n
  std::uint32_t min_valence_ = 0;
  std::uint32_t first_ = 0;  // vertex carrying label 1
  std::vector<PartialFacet> partial_;
  std::vector<Key> exact_;
  std::vector<Key> pending_;
  std::uint32_t n_;
  std::vector<std::array<std::uint32_t, 4>> facets_;
  std::vector<std::vector<std::uint32_t>> star_;
  std::vector<std::uint32_t> label_;
  std::vector<Key> best_;
  std::vector<std::uint32_t> best_label_;
};

}  // namespace

std::size_t CanonicalForm::n() const noexcept {
  Vertex m = 0;
  for (const auto& f : facets) m = std::max(m, f[3]);
  return m;
}

Vertex CanonicalLabeling::to_canonical(const Triangulation& t, Vertex v) const {
  const auto& verts = t.vertices();
  auto it = std::lower_bound(verts.begin(), verts.end(), v);
  if (it == verts.end() || *it != v) throw Error(ErrorKind::VertexNotPresent, "vertex " + std::to_string(v));
  return canonical[static_cast<std::size_t>(it - verts.begin())];
}

std::uint64_t facet_digest(std::span<const Facet> facets) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& f : facets) {
    for (Vertex v : f) {
      for (int b = 0; b < 4; ++b) {
        h ^= (v >> (8 * b)) & 0xffU;
        h *= 0x100000001b3ULL;
      }
    }
  }
  return h;
}

CanonicalLabeling canonical_labeling(const Triangulation& t) {
  if (t.n() >= 0xffff) throw Error(ErrorKind::LabelOutOfRange, "too many vertices to canonicalize");
  LexMinSearch search(t);
  search.run();

  CanonicalLabeling out;
  out.form.facets.reserve(search.best().size());
  for (Key k : search.best()) {
    out.form.facets.push_back({static_cast<Vertex>(k >> 48), static_cast<Vertex>((k >> 32) & 0xffff),
                               static_cast<Vertex>((k >> 16) & 0xffff), static_cast<Vertex>(k & 0xffff)});
  }
  out.form.hash = facet_digest(out.form.facets);
  const auto& labels = search.best_labels();
  out.canonical.assign(labels.begin(), labels.end());
  out.original.assign(t.n(), 0);
  for (std::size_t i = 0; i < labels.size(); ++i) out.original[labels[i] - 1] = t.vertices()[i];
  return out;
}

CanonicalForm canonical_form(const Triangulation& t) { return canonical_labeling(t).form; }

bool are_isomorphic(const Triangulation& a, const Triangulation& b) {
  if (a.f_vector() != b.f_vector()) return false;
  auto degrees = [](const Triangulation& t) {
    std::vector<std::size_t> d;
    for (Vertex v : t.vertices()) d.push_back(t.facet_indices_of(v).size());
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(a) != degrees(b)) return false;
  return canonical_form(a).facets == canonical_form(b).facets;
}

Triangulation to_triangulation(const CanonicalForm& form) { return Triangulation::from_facets(form.facets); }

void write_canonical(std::ostream& out, const Triangulation& t) {
  write_facets(out, to_triangulation(canonical_form(t)));
}

}  // namespace bistellar
