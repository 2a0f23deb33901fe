#include "spx/search.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "spx/bounds.hpp"
#include "spx/combinatorics.hpp"
#include "spx/constructions.hpp"
#include "spx/families.hpp"

namespace spx {

std::string quantity_name(Quantity q) {
  switch (q) {
    case Quantity::M: return "M";
    case Quantity::F: return "f";
    case Quantity::G: return "g";
    case Quantity::NCross: return "n";
    case Quantity::NSkew: return "n1";
    case Quantity::NWeakly: return "n2";
  }
  return "?";
}

std::optional<Quantity> quantity_from_name(const std::string& name) {
  if (name == "M") return Quantity::M;
  if (name == "f") return Quantity::F;
  if (name == "g") return Quantity::G;
  if (name == "n") return Quantity::NCross;
  if (name == "n1") return Quantity::NSkew;
  if (name == "n2") return Quantity::NWeakly;
  return std::nullopt;
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// ---------------------------------------------------------------------
/// M(n,k): Bron-Kerbosch over the intersection graph on k-subsets of [n].
// Vertices are 1-based colex ranks; adjacency is bit-indexed.
// ---------------------------------------------------------------------

struct IntersectionGraph {
  int vertex_count = 0;
  std::vector<ElementSet> vertices;  // the k-subsets, colex order
  std::vector<ElementSet> adj;       // adj[v-1] over vertex ids
};

IntersectionGraph build_intersection_graph(int n, int k) {
  IntersectionGraph g;
  g.vertices = ksubsets_colex(n, k);
  g.vertex_count = static_cast<int>(g.vertices.size());
  g.adj.resize(g.vertices.size());
  for (int i = 0; i < g.vertex_count; ++i)
    for (int j = i + 1; j < g.vertex_count; ++j)
      if (g.vertices[i].intersects(g.vertices[j])) {
        g.adj[i].add(j + 1);
        g.adj[j].add(i + 1);
      }
  return g;
}

int pick_pivot(const IntersectionGraph& g, const ElementSet& P, const ElementSet& X) {
  int pivot = 0;
  std::size_t best_deg = 0;
  for (int u : P.united(X).elements()) {
    const std::size_t d = P.intersected(g.adj[u - 1]).size();
    if (pivot == 0 || d > best_deg) {
      pivot = u;
      best_deg = d;
    }
  }
  return pivot;
}

void bron_kerbosch(const IntersectionGraph& g, ElementSet& R, ElementSet P,
                   ElementSet X, std::uint64_t& count,
                   const std::function<void(const ElementSet&)>* emit) {
  if (P.empty() && X.empty()) {
    ++count;
    if (emit) (*emit)(R);
    return;
  }
  const int pivot = pick_pivot(g, P, X);
  for (int v : P.minus(g.adj[pivot - 1]).elements()) {
    R.add(v);
    bron_kerbosch(g, R, P.intersected(g.adj[v - 1]), X.intersected(g.adj[v - 1]),
                  count, emit);
    R.remove(v);
    P.remove(v);
    X.add(v);
  }
}

std::uint64_t count_cliques_parallel(const IntersectionGraph& g, int workers) {
  ElementSet P, X;
  for (int v = 1; v <= g.vertex_count; ++v) P.add(v);
  if (g.vertex_count == 0) return 0;

  // root frontier: the pivot-filtered candidates, each an independent task
  struct Task {
    int v;
    ElementSet P, X;
  };
  std::vector<Task> tasks;
  {
    const int pivot = pick_pivot(g, P, X);
    for (int v : P.minus(g.adj[pivot - 1]).elements()) {
      tasks.push_back({v, P.intersected(g.adj[v - 1]), X.intersected(g.adj[v - 1])});
      P.remove(v);
      X.add(v);
    }
  }

  workers = std::max(1, workers);
  std::vector<std::uint64_t> partial(static_cast<std::size_t>(workers), 0);
  auto run = [&](int w) {
    for (std::size_t t = static_cast<std::size_t>(w); t < tasks.size();
         t += static_cast<std::size_t>(workers)) {
      ElementSet R;
      R.add(tasks[t].v);
      bron_kerbosch(g, R, tasks[t].P, tasks[t].X, partial[static_cast<std::size_t>(w)],
                    nullptr);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& th : pool) th.join();
  }
  std::uint64_t total = 0;
  for (auto c : partial) total += c;  // addition: order-independent
  return total;
}

// ---------------------------------------------------------------------
// Canonical branch-and-bound over pair systems in first-appearance form.
// ---------------------------------------------------------------------

// visits all a0-subsets of [u] in ascending lexicographic order
template <typename Fn>
void for_each_combination(int u, int a0, Fn&& fn) {
  if (a0 == 0) {
    fn(std::vector<int>{});
    return;
  }
  if (a0 > u) return;
  std::vector<int> idx(static_cast<std::size_t>(a0));
  for (int i = 0; i < a0; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    fn(idx);
    int j = a0 - 1;
    while (j >= 0 && idx[static_cast<std::size_t>(j)] == u - (a0 - 1 - j)) --j;
    if (j < 0) break;
    ++idx[static_cast<std::size_t>(j)];
    for (int i = j + 1; i < a0; ++i)
      idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
}

std::vector<int> encode_pair(const ElementSet& a, const ElementSet& b) {
  std::vector<int> enc = a.elements();
  enc.push_back(0);  // separator below any label
  for (int e : b.elements()) enc.push_back(e);
  return enc;
}

struct PairSearch {
  int k, l;
  PairFlavor flavor;
  bool a_intersecting = false;   // g(k): {A_i} must be intersecting
  bool objective_a_union = false;  // g(k): maximize |union A_i|
  int m_cap = 0;
  std::optional<long long> upper_cert;
  std::uint64_t max_nodes = 0;

  std::vector<SetPair> pairs;
  std::vector<std::vector<int>> encodings;
  int used = 0;          // labels in use; equals |vertex set|
  int a_union_size = 0;  // labels introduced through some A_i

  long long best = 0;
  std::vector<SetPair> best_witness;
  std::uint64_t nodes = 0;
  bool budget_hit = false;
  bool cert_hit = false;

  long long objective() const { return objective_a_union ? a_union_size : used; }

  void record() {
    if (objective() > best) {
      best = objective();
      best_witness = pairs;
    }
  }

  bool done() const {
    return budget_hit || (upper_cert && best >= *upper_cert);
  }

  void dfs() {
    record();
    if (done()) {
      if (upper_cert && best >= *upper_cert) cert_hit = true;
      return;
    }
    const int depth = static_cast<int>(pairs.size());
    if (depth >= m_cap) return;
    const long long gain = objective_a_union ? k : k + l;
    if (objective() + static_cast<long long>(m_cap - depth) * gain <= best) return;

    const bool orderly = flavor != PairFlavor::Skew;  // pair order is free
    const int u = used;
    for (int a0 = std::min(k, u); a0 >= 0; --a0) {
      for_each_combination(u, a0, [&](const std::vector<int>& a_old) {
        if (done()) return;
        ElementSet a;
        for (int e : a_old) a.add(e);
        const int fresh_a = k - a0;
        for (int f = 1; f <= fresh_a; ++f) a.add(u + f);

        // constraints that involve only A can reject the whole subtree
        for (const auto& p : pairs) {
          if (flavor == PairFlavor::Cross && !a.intersects(p.B)) return;
          if (a_intersecting && !a.intersects(p.A)) return;
        }

        const int max_b0 = std::min(l, u - a0);
        for (int b0 = max_b0; b0 >= 0; --b0) {
          for_each_combination(u, b0, [&](const std::vector<int>& b_old) {
            if (done()) return;
            ElementSet b;
            for (int e : b_old) {
              if (a.contains(e)) return;  // condition (1)
              b.add(e);
            }
            const int fresh_b = l - b0;
            for (int f = 1; f <= fresh_b; ++f) b.add(u + fresh_a + f);

            for (const auto& p : pairs) {
              switch (flavor) {
                case PairFlavor::Cross:
                case PairFlavor::Skew:
                  if (!p.A.intersects(b)) return;
                  break;
                case PairFlavor::Weakly:
                  if (!p.A.intersects(b) && !a.intersects(p.B)) return;
                  break;
              }
            }

            auto enc = encode_pair(a, b);
            if (orderly && !encodings.empty() && enc < encodings.back()) return;

            if (++nodes > max_nodes) {
              budget_hit = true;
              return;
            }
            const int new_labels = fresh_a + fresh_b;
            const int new_a_labels = fresh_a;
            pairs.push_back({a, b});
            encodings.push_back(std::move(enc));
            used += new_labels;
            a_union_size += new_a_labels;
            // labels already used can join the A-union late
            int promoted = 0;
            if (objective_a_union) {
              ElementSet prior_a;
              for (std::size_t q = 0; q + 1 < pairs.size(); ++q)
                prior_a.unite(pairs[q].A);
              ElementSet novel = a.minus(prior_a);
              promoted = static_cast<int>(novel.size()) - new_a_labels;
              a_union_size += promoted;
            }
            dfs();
            a_union_size -= new_a_labels + promoted;
            used -= new_labels;
            encodings.pop_back();
            pairs.pop_back();
          });
          if (done()) return;
        }
      });
      if (done()) return;
    }
  }
};

SetPairSystem witness_system(const PairSearch& s) {
  SetPairSystem sys;
  sys.k = s.k;
  sys.l = s.l;
  sys.flavor_claim = s.flavor;
  sys.pairs = s.best_witness;
  return sys;
}

// ---------------------------------------------------------------------
// f(k): canonical DFS over k-uniform intersecting families.
// ---------------------------------------------------------------------

struct FamilySearch {
  int k = 0;
  int cap = 0;  // universe cap
  std::uint64_t max_nodes = 0;

  std::vector<ElementSet> sets;
  std::vector<std::vector<int>> encodings;
  int used = 0;

  long long best = 0;
  std::vector<ElementSet> best_witness;
  std::uint64_t nodes = 0;
  bool budget_hit = false;
  bool saturated = false;

  void record() {
    if (sets.empty() || used <= best) return;
    SetFamily fam;
    fam.n = used;
    fam.k = k;
    fam.sets = sets;
    if (covering_number(fam).size == k) {
      best = used;
      best_witness = sets;
      if (best == cap) saturated = true;
    }
  }

  void dfs() {
    record();
    if (budget_hit || saturated) return;
    const int u = used;
    for (int s0 = std::min(k, u); s0 >= 0; --s0) {
      if (u + (k - s0) > cap) continue;
      for_each_combination(u, s0, [&](const std::vector<int>& old_part) {
        if (budget_hit || saturated) return;
        ElementSet s;
        for (int e : old_part) s.add(e);
        for (int f = 1; f <= k - s0; ++f) s.add(u + f);

        for (const auto& prev : sets) {
          if (!s.intersects(prev)) return;
          if (prev == s) return;
        }
        std::vector<int> enc = s.elements();
        if (!encodings.empty() && enc < encodings.back()) return;
        if (++nodes > max_nodes) {
          budget_hit = true;
          return;
        }
        sets.push_back(s);
        encodings.push_back(std::move(enc));
        used += k - s0;
        dfs();
        used -= k - s0;
        encodings.pop_back();
        sets.pop_back();
      });
      if (budget_hit || saturated) return;
    }
  }
};

}  // namespace

SearchResult count_maximal_intersecting(int n, int k, const SearchBudget& budget,
                                        int vertex_budget) {
  const auto start = Clock::now();
  const BigCount vertices = binomial(n, k);
  if (vertices > vertex_budget)
    throw std::invalid_argument("count_maximal_intersecting: C(n,k) = " +
                                vertices.str() + " exceeds the vertex budget of " +
                                std::to_string(vertex_budget));
  const auto g = build_intersection_graph(n, k);
  SearchResult r;
  r.quantity = Quantity::M;
  r.n = n;
  r.k = k;
  r.value = count_cliques_parallel(g, budget.workers);
  r.proven_optimal = true;  // exact enumeration
  r.nodes_explored = 0;
  r.wall_ms = elapsed_ms(start);
  return r;
}

BigCount naive_count_maximal(int n, int k) {
  const BigCount vertices = binomial(n, k);
  if (vertices > 20)
    throw std::invalid_argument("naive_count_maximal: C(n,k) must be <= 20");
  const auto verts = ksubsets_colex(n, k);
  const int nv = static_cast<int>(verts.size());
  BigCount count = 0;
  for (std::uint64_t mask = 1; mask < (1ull << nv); ++mask) {
    SetFamily fam;
    fam.n = n;
    fam.k = k;
    for (int v = 0; v < nv; ++v)
      if (mask & (1ull << v)) fam.sets.push_back(verts[static_cast<std::size_t>(v)]);
    if (is_maximal_intersecting(fam, n, k)) ++count;
  }
  return count;
}

namespace {

std::uint64_t fixpoint_count(const std::vector<ElementSet>& verts, int n, int k,
                             SetFamily& fam, std::vector<char>& in_family,
                             std::vector<char>& excluded) {
  const SetFamily closed = closure_I(fam, n, k);
  if (closed == fam) return 1;
  // colex-smallest addable, not yet excluded
  int candidate = -1;
  const ElementSet* candidate_set = nullptr;
  for (const auto& s : closed.sets) {
    const int idx = static_cast<int>(colex_rank(s).convert_to<long long>());
    if (in_family[static_cast<std::size_t>(idx)] ||
        excluded[static_cast<std::size_t>(idx)])
      continue;
    candidate = idx;
    candidate_set = &s;
    break;
  }
  if (candidate < 0) return 0;  // every extension is forbidden: dead branch

  std::uint64_t total = 0;
  fam.sets.push_back(*candidate_set);
  in_family[static_cast<std::size_t>(candidate)] = 1;
  total += fixpoint_count(verts, n, k, fam, in_family, excluded);
  in_family[static_cast<std::size_t>(candidate)] = 0;
  fam.sets.pop_back();

  excluded[static_cast<std::size_t>(candidate)] = 1;
  total += fixpoint_count(verts, n, k, fam, in_family, excluded);
  excluded[static_cast<std::size_t>(candidate)] = 0;
  return total;
}

}  // namespace

BigCount closure_fixpoint_count_maximal(int n, int k) {
  const auto verts = ksubsets_colex(n, k);
  SetFamily fam;
  fam.n = n;
  fam.k = k;
  std::vector<char> in_family(verts.size(), 0), excluded(verts.size(), 0);
  return fixpoint_count(verts, n, k, fam, in_family, excluded);
}

void catalog_maximal_families(int n, int k,
                              const std::function<void(const SetFamily&)>& emit,
                              int vertex_budget) {
  const BigCount vertices = binomial(n, k);
  if (vertices > vertex_budget)
    throw std::invalid_argument("catalog_maximal_families: C(n,k) exceeds the vertex budget");
  const auto g = build_intersection_graph(n, k);
  ElementSet R, P, X;
  for (int v = 1; v <= g.vertex_count; ++v) P.add(v);
  std::uint64_t count = 0;
  std::function<void(const ElementSet&)> on_clique = [&](const ElementSet& clique) {
    SetFamily fam;
    fam.n = n;
    fam.k = k;
    for (int v : clique.elements())
      fam.sets.push_back(g.vertices[static_cast<std::size_t>(v - 1)]);
    emit(fam);
  };
  bron_kerbosch(g, R, P, X, count, &on_clique);
}

SearchResult search_vertex_max(int k, int l, PairFlavor flavor,
                               const SearchBudget& budget) {
  if (k < 1 || l < 1)
    throw std::invalid_argument("search_vertex_max: k and l must be positive");
  if (k + l > 6)
    throw std::invalid_argument(
        "search_vertex_max: k + l > 6 is outside the supported exact range");
  const auto start = Clock::now();

  PairSearch s;
  s.k = k;
  s.l = l;
  s.flavor = flavor;
  s.max_nodes = budget.max_nodes;
  if (flavor == PairFlavor::Weakly) {
    s.m_cap = static_cast<int>(mmax_bounds(k, l).tuza.convert_to<long long>());
  } else {
    s.m_cap = static_cast<int>(bollobas_pair_bound(k, l).convert_to<long long>());
  }

  SearchResult r;
  r.k = k;
  r.l = l;
  std::optional<long long> cert;
  switch (flavor) {
    case PairFlavor::Cross: {
      r.quantity = Quantity::NCross;
      if (k >= 2 && l >= 2) {
        const int lo = std::min(k, l), hi = std::max(k, l);
        BigCount c = tuza_n_bounds(lo, hi).upper;
        c = std::min(c, lemma_g_bound(k, l));
        cert = c.convert_to<long long>();
      }
      break;
    }
    case PairFlavor::Skew:
      r.quantity = Quantity::NSkew;
      if (k >= 2 && k <= l) cert = n1_bounds(k, l).upper.convert_to<long long>();
      break;
    case PairFlavor::Weakly:
      r.quantity = Quantity::NWeakly;
      // the only known upper route depends on an open conjecture
      break;
  }
  s.upper_cert = cert;

  s.dfs();

  r.value = s.best;
  r.system_witness = witness_system(s);
  r.proven_optimal = s.cert_hit || !s.budget_hit;
  r.nodes_explored = s.nodes;
  if (s.cert_hit) r.notes.push_back("optimality certified by matching the proven upper bound");
  else if (!s.budget_hit) r.notes.push_back("canonical search space exhausted");
  else r.notes.push_back("node budget exhausted; best witness reported");
  if ((k == 1 || l == 1) && flavor != PairFlavor::Weakly)
    r.notes.push_back("k=1 regime: paper upper-bound formulas are not used as certificates");
  r.wall_ms = elapsed_ms(start);
  return r;
}

SearchResult search_f(int k, const SearchBudget& budget) {
  if (k != 2 && k != 3)
    throw std::invalid_argument("search_f: only k in {2,3} is supported");
  const auto start = Clock::now();

  FamilySearch s;
  s.k = k;
  const BigCount majumder = 3 * binomial(2 * k - 2, k - 1);  // twice the reference
  s.cap = static_cast<int>(((majumder + 1) / 2 + 2 * k).convert_to<long long>());
  s.max_nodes = budget.max_nodes;

  // warm start from the tau = k construction when it really has tau = k
  SetFamily seed = tuza_tau_k_family(k);
  if (covering_number(seed).size == k) {
    s.best = static_cast<long long>(seed.ground_union().size());
    s.best_witness = seed.sets;
  }

  s.dfs();

  SearchResult r;
  r.quantity = Quantity::F;
  r.k = k;
  r.value = s.best;
  SetFamily witness;
  witness.k = k;
  witness.sets = s.best_witness;
  witness.n = witness.ground_union().max_element();
  r.family_witness = std::move(witness);
  r.proven_optimal = !s.budget_hit && !s.saturated;
  r.nodes_explored = s.nodes;
  if (s.saturated)
    r.notes.push_back("search saturated the heuristic universe cap; value is a lower bound");
  else if (s.budget_hit)
    r.notes.push_back("node budget exhausted; best witness reported");
  else
    r.notes.push_back("canonical search space exhausted under the universe cap");
  r.wall_ms = elapsed_ms(start);
  return r;
}

SearchResult search_g(int k, const SearchBudget& budget) {
  if (k < 1 || k > 2)
    throw std::invalid_argument("search_g: only k in {1,2} is supported");
  const auto start = Clock::now();

  PairSearch s;
  s.k = k;
  s.l = k;
  s.flavor = PairFlavor::Cross;
  s.a_intersecting = true;
  s.objective_a_union = true;
  s.max_nodes = budget.max_nodes;
  s.m_cap = static_cast<int>(binomial(2 * k, k).convert_to<long long>());
  if (k >= 2) {
    // g(k) <= n(k,k)
    BigCount c = std::min(s_of_k(k).S, lemma_g_bound(k, k));
    s.upper_cert = c.convert_to<long long>();
  }

  s.dfs();

  SearchResult r;
  r.quantity = Quantity::G;
  r.k = k;
  r.l = k;
  r.value = s.best;
  r.system_witness = witness_system(s);
  r.proven_optimal = s.cert_hit || !s.budget_hit;
  r.nodes_explored = s.nodes;
  r.notes.push_back(s.budget_hit ? "node budget exhausted"
                                 : "canonical search space exhausted");
  r.wall_ms = elapsed_ms(start);
  return r;
}

}  // namespace spx
