#include "ccg/planarity.hpp"

#include <atomic>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <set>
#include <stdexcept>

namespace ccg {

namespace {

std::atomic<long long> g_test_count{0};

using BoostGraph = boost::adjacency_list<
    boost::vecS, boost::vecS, boost::undirectedS,
    boost::property<boost::vertex_index_t, int>,
    boost::property<boost::edge_index_t, int>>;

struct Converted {
  BoostGraph bg;
  std::map<int, int> to_b;          // our id -> boost index
  std::vector<int> from_b;          // boost index -> our id
  std::vector<int> edge_rep;        // boost edge index -> our edge index
};

// Boost BM wants a simple graph; parallel edges do not affect planarity.
Converted convert_simplified(const MultiGraph& g) {
  Converted c;
  c.bg = BoostGraph(g.num_vertices());
  int next = 0;
  for (int v : g.vertices()) {
    c.to_b[v] = next;
    c.from_b.push_back(v);
    ++next;
  }
  std::set<Edge> seen;
  int eidx = 0;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const auto& e = g.edges()[i];
    if (!seen.insert(e).second) continue;
    auto be = boost::add_edge(c.to_b[e.first], c.to_b[e.second], c.bg).first;
    boost::put(boost::edge_index, c.bg, be, eidx++);
    c.edge_rep.push_back((int)i);
  }
  return c;
}

// Too many edges for a simple planar graph: quick reject.
bool euler_reject(const MultiGraph& g) {
  std::set<Edge> seen(g.edges().begin(), g.edges().end());
  std::size_t m = seen.size(), n = g.num_vertices();
  return n >= 3 && m > 3 * n - 6;
}

}  // namespace

long long planarity_test_count() { return g_test_count.load(); }
void reset_planarity_test_count() { g_test_count.store(0); }

bool is_planar_fast(const MultiGraph& g) {
  ++g_test_count;
  if (g.num_vertices() < 5) return true;
  if (euler_reject(g)) return false;
  auto c = convert_simplified(g);
  return boost::boyer_myrvold_planarity_test(c.bg);
}

PlanarityResult is_planar(const MultiGraph& g, std::size_t cert_bound) {
  ++g_test_count;
  PlanarityResult res;
  auto c = convert_simplified(g);
  using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;

  std::vector<std::vector<EdgeDesc>> emb(boost::num_vertices(c.bg));
  std::vector<EdgeDesc> kura;

  bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = c.bg,
      boost::boyer_myrvold_params::embedding = emb.data(),
      boost::boyer_myrvold_params::kuratowski_subgraph =
          std::back_inserter(kura));
  res.planar = planar;
  if (g.num_vertices() > cert_bound) return res;

  auto eidx_map = boost::get(boost::edge_index, c.bg);
  if (planar) {
    PlanarEmbedding pe;
    // group parallel edges next to their simple representative
    std::map<int, std::vector<int>> parallels;  // our rep edge -> extra copies
    std::set<int> reps(c.edge_rep.begin(), c.edge_rep.end());
    std::map<Edge, int> rep_of;
    for (int r : reps) rep_of[g.edges()[r]] = r;
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
      int r = rep_of[g.edges()[i]];
      if ((int)i != r) parallels[r].push_back((int)i);
    }
    for (std::size_t bi = 0; bi < emb.size(); ++bi) {
      int v = c.from_b[bi];
      std::vector<int> rot;
      for (const auto& ed : emb[bi]) {
        int rep = c.edge_rep[boost::get(eidx_map, ed)];
        // parallel copies nest inside the representative: insert after it at
        // the low endpoint and before it, reversed, at the high endpoint
        auto it = parallels.find(rep);
        bool low_end = g.edges()[rep].first == v;
        if (it == parallels.end()) {
          rot.push_back(rep);
        } else if (low_end) {
          rot.push_back(rep);
          for (int copy : it->second) rot.push_back(copy);
        } else {
          for (auto rit = it->second.rbegin(); rit != it->second.rend(); ++rit)
            rot.push_back(*rit);
          rot.push_back(rep);
        }
      }
      pe.rotation[v] = rot;
    }
    if (!verify_embedding(g, pe))
      throw std::logic_error("planar embedding failed independent check");
    res.embedding = pe;
  } else {
    KuratowskiWitness kw;
    for (const auto& ed : kura)
      kw.edge_indices.push_back(c.edge_rep[boost::get(eidx_map, ed)]);
    if (!verify_kuratowski(g, kw))
      throw std::logic_error("kuratowski witness failed independent check");
    res.kuratowski = kw;
  }
  return res;
}

bool verify_embedding(const MultiGraph& g, const PlanarEmbedding& emb) {
  // darts are (edge index, direction); trace faces via the rotation system
  std::size_t m = g.num_edges();
  if (m == 0) return true;
  // position of each dart in its head vertex's rotation
  std::map<int, std::map<int, std::vector<int>>> pos;  // v -> edge -> slots
  for (const auto& [v, rot] : emb.rotation) {
    for (std::size_t i = 0; i < rot.size(); ++i)
      pos[v][rot[i]].push_back((int)i);
  }
  for (int v : g.vertices()) {
    auto it = emb.rotation.find(v);
    std::size_t want = g.incident_edges(v).size();
    if (it == emb.rotation.end()) {
      if (want != 0) return false;
      continue;
    }
    if (it->second.size() != want) return false;
  }
  // dart id: 2*edge + dir, dir 0 = first->second
  std::vector<bool> used(2 * m, false);
  int faces = 0;
  for (std::size_t d0 = 0; d0 < 2 * m; ++d0) {
    if (used[d0]) continue;
    ++faces;
    std::size_t d = d0;
    std::size_t guard = 0;
    do {
      if (used[d]) return false;
      used[d] = true;
      int e = (int)(d / 2);
      int dir = (int)(d % 2);
      int head = dir == 0 ? g.edges()[e].second : g.edges()[e].first;
      // find the reverse dart (head -> tail) slot in head's rotation, step to
      // the next entry; that edge leaving head is the next dart of the face
      const auto& rot = emb.rotation.at(head);
      // among slots of edge e at head, pick deterministically by how many
      // times we've traversed; simple graphs have one slot. For parallels we
      // choose the first unused-compatible slot.
      int slot = -1;
      for (int s : pos[head][e]) { slot = s; break; }
      if (slot < 0) return false;
      int next_e = rot[(slot + 1) % rot.size()];
      const auto& ne = g.edges()[next_e];
      int tail2 = head;
      int dir2 = ne.first == tail2 ? 0 : 1;
      if (ne.first != tail2 && ne.second != tail2) return false;
      d = 2 * (std::size_t)next_e + (std::size_t)dir2;
      if (++guard > 4 * m + 4) return false;
    } while (d != d0);
  }
  long long V = (long long)g.num_vertices();
  long long E = (long long)m;
  long long C = g.component_count();
  return V - E + faces == 1 + C;
}

bool verify_kuratowski(const MultiGraph& g, const KuratowskiWitness& k) {
  // collect the witness subgraph
  MultiGraph h;
  std::set<int> used(k.edge_indices.begin(), k.edge_indices.end());
  if (used.size() != k.edge_indices.size()) return false;
  for (int i : used) {
    if (i < 0 || (std::size_t)i >= g.num_edges()) return false;
    const auto& e = g.edges()[i];
    h.add_edge(e.first, e.second);
  }
  // suppress degree-2 subdivision vertices, then compare to K5 / K3,3
  MultiGraph core = suppress_degree2(h);
  // Boyer-Myrvold may emit a slightly larger certificate; accept any
  // non-planar core whose branch vertices match a Kuratowski pattern after
  // removing leftover low-degree vertices is too lax, so require exact match.
  auto degs = [&core]() {
    std::vector<int> d;
    for (int v : core.vertices()) d.push_back(core.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  }();
  MultiGraph simple = core.simplified();
  if (core.num_vertices() == 5 && degs == std::vector<int>(5, 4) &&
      simple.num_edges() == 10)
    return true;
  if (core.num_vertices() == 6 && degs == std::vector<int>(6, 3) &&
      simple.num_edges() == 9) {
    // bipartiteness check distinguishes K3,3 from the prism
    std::map<int, int> color;
    std::vector<int> stack{core.vertices()[0]};
    color[core.vertices()[0]] = 0;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : core.neighbors(x)) {
        if (!color.count(y)) {
          color[y] = 1 - color[x];
          stack.push_back(y);
        } else if (color[y] == color[x]) {
          return false;
        }
      }
    }
    return true;
  }
  return false;
}

}  // namespace ccg
