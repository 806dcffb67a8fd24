#include "switchlab/isomorphism.hpp"

#include <algorithm>
#include <bit>
#include <climits>

#include "switchlab/named_graphs.hpp"

namespace switchlab {

namespace {

using Colors = std::vector<int>;

// Refines the two colorings jointly until stable, keeping color ids
// comparable across the graphs. Returns false as soon as some color class
// has different sizes in g and h.
bool refine_to_stable(const LabeledGraph& g, const LabeledGraph& h,
                      Colors& cg, Colors& ch) {
  const int n = g.vertex_count();
  struct Entry {
    int old_color;
    std::vector<int> nb;
    int graph;
    int vertex;
  };
  int prev_colors = -1;
  for (;;) {
    std::vector<Entry> entries;
    entries.reserve(2 * n);
    for (int which = 0; which < 2; ++which) {
      const LabeledGraph& gr = which ? h : g;
      const Colors& c = which ? ch : cg;
      for (int v = 0; v < n; ++v) {
        std::vector<int> nb;
        nb.reserve(gr.degree(v));
        for (int w : gr.neighbors(v)) nb.push_back(c[w]);
        std::sort(nb.begin(), nb.end());
        entries.push_back({c[v], std::move(nb), which, v});
      }
    }
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) {
                if (a.old_color != b.old_color) return a.old_color < b.old_color;
                return a.nb < b.nb;
              });
    int color = 0;
    int in_g = 0, in_h = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (i > 0 && (entries[i].old_color != entries[i - 1].old_color ||
                    entries[i].nb != entries[i - 1].nb)) {
        if (in_g != in_h) return false;
        in_g = in_h = 0;
        ++color;
      }
      (entries[i].graph ? ch : cg)[entries[i].vertex] = color;
      ++(entries[i].graph ? in_h : in_g);
    }
    if (in_g != in_h) return false;
    const int colors = color + 1;
    if (colors == prev_colors) return true;  // partition stopped splitting
    prev_colors = colors;
  }
}

bool iso_search(const LabeledGraph& g, const LabeledGraph& h, Colors cg,
                Colors ch) {
  if (!refine_to_stable(g, h, cg, ch)) return false;
  const int n = g.vertex_count();

  std::vector<int> class_size(n + 2, 0);
  for (int v = 0; v < n; ++v) ++class_size[cg[v]];
  int target = -1, best = INT_MAX;
  for (int c = 0; c <= n; ++c)
    if (class_size[c] >= 2 && class_size[c] < best) {
      best = class_size[c];
      target = c;
    }

  if (target == -1) {
    // discrete coloring: read the bijection off the colors and verify it
    std::vector<int> to_h(n + 1, -1), f(n);
    for (int v = 0; v < n; ++v) to_h[ch[v]] = v;
    for (int u = 0; u < n; ++u) f[u] = to_h[cg[u]];
    for (auto [u, v] : g.edges())
      if (!h.has_edge(f[u], f[v])) return false;
    return true;  // equal edge counts make the reverse direction automatic
  }

  int u = -1;
  for (int v = 0; v < n; ++v)
    if (cg[v] == target) {
      u = v;
      break;
    }
  for (int v = 0; v < n; ++v) {
    if (ch[v] != target) continue;
    Colors cg2 = cg, ch2 = ch;
    cg2[u] = n + 1;  // fresh color for the individualized pair
    ch2[v] = n + 1;
    if (iso_search(g, h, std::move(cg2), std::move(ch2))) return true;
  }
  return false;
}

}  // namespace

bool is_isomorphic(const LabeledGraph& g, const LabeledGraph& h) {
  if (g.vertex_count() != h.vertex_count()) return false;
  if (g.edge_count() != h.edge_count()) return false;
  std::vector<int> dg = g.degrees(), dh = h.degrees();
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  if (g.vertex_count() == 0) return true;
  return iso_search(g, h, Colors(g.vertex_count(), 0),
                    Colors(h.vertex_count(), 0));
}

namespace {

// Placement order for the pattern: start from a max-degree vertex, then
// always place a vertex with as many placed neighbors as possible.
std::vector<int> pattern_order(const LabeledGraph& h) {
  const int n = h.vertex_count();
  std::vector<int> order;
  std::vector<char> placed(n, 0);
  for (int step = 0; step < n; ++step) {
    int pick = -1, pick_score = -1, pick_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (placed[v]) continue;
      int score = 0;
      for (int w : h.neighbors(v)) score += placed[w];
      if (score > pick_score ||
          (score == pick_score && h.degree(v) > pick_deg)) {
        pick = v;
        pick_score = score;
        pick_deg = h.degree(v);
      }
    }
    order.push_back(pick);
    placed[pick] = 1;
  }
  return order;
}

bool induced_search(const LabeledGraph& g, const LabeledGraph& h,
                    const std::vector<int>& order, std::size_t i,
                    std::vector<int>& image, std::vector<char>& used) {
  if (i == order.size()) return true;
  const int x = order[i];
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (used[v] || g.degree(v) < h.degree(x)) continue;
    bool ok = true;
    for (std::size_t j = 0; j < i && ok; ++j)
      ok = g.has_edge(v, image[order[j]]) == h.has_edge(x, order[j]);
    if (!ok) continue;
    image[x] = v;
    used[v] = 1;
    if (induced_search(g, h, order, i + 1, image, used)) return true;
    used[v] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_induced(const LabeledGraph& g,
                                             const LabeledGraph& h) {
  if (h.vertex_count() > g.vertex_count()) return std::nullopt;
  if (h.vertex_count() == 0) return std::vector<int>{};
  auto order = pattern_order(h);
  std::vector<int> image(h.vertex_count(), -1);
  std::vector<char> used(g.vertex_count(), 0);
  if (!induced_search(g, h, order, 0, image, used)) return std::nullopt;
  std::sort(image.begin(), image.end());
  return image;
}

bool contains_induced(const LabeledGraph& g, const LabeledGraph& h) {
  return find_induced(g, h).has_value();
}

bool is_hypercube(const LabeledGraph& g) {
  const int n = g.vertex_count();
  if (n <= 0) return false;
  if (n & (n - 1)) return false;
  const int m = std::countr_zero(static_cast<unsigned>(n));
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != m) return false;
  if (!is_connected(g)) return false;
  if (!is_bipartite(g)) return false;
  return is_isomorphic(g, hypercube(m));
}

}  // namespace switchlab
