#include <optional>
#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "arcomp/monocat.hpp"

namespace arcomp::mono {

namespace {

using MeshIdx = ComponentQuiver::MeshIdx;

struct Store {
  std::vector<Vertex> verts;
  std::map<std::string, int> index;
  std::map<int, int> tau; // vertex -> translate
  std::vector<MeshIdx> meshes;

  int add(Vertex v) {
    auto k = v.key();
    auto it = index.find(k);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(verts.size());
    verts.push_back(std::move(v));
    index.emplace(std::move(k), id);
    return id;
  }
  const Vertex& at(int i) const { return verts[static_cast<std::size_t>(i)]; }
};

void assemble(const Store& s, ComponentQuiver& c) {
  c.vertices = s.verts;
  c.meshes = s.meshes;
  c.translation = s.tau;
  c.arrows.clear();
  for (const auto& m : s.meshes) {
    for (int mid : m.middles) {
      c.arrows.emplace_back(mid, m.right);
      if (s.at(mid).is_proj_inj()) c.arrows.emplace_back(m.left, mid);
    }
  }
  std::sort(c.arrows.begin(), c.arrows.end());
}

// Extract the connected component of `seed` (arrows + translation links).
ComponentQuiver extract_component(const Store& s, int seed, ComponentQuiver::Kind kind,
                                  long mouth_period, int depth) {
  std::vector<std::vector<int>> adj(s.verts.size());
  auto link = [&](int a, int b) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  };
  for (const auto& m : s.meshes) {
    for (int mid : m.middles) {
      link(mid, m.right);
      link(m.left, mid);
    }
    link(m.left, m.right);
  }
  for (const auto& [a, b] : s.tau) link(a, b);
  std::vector<bool> in(s.verts.size(), false);
  std::vector<int> stack{seed};
  in[static_cast<std::size_t>(seed)] = true;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[static_cast<std::size_t>(x)])
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = true;
        stack.push_back(y);
      }
  }
  Store sub;
  std::map<int, int> remap;
  for (std::size_t i = 0; i < s.verts.size(); ++i)
    if (in[i]) remap[static_cast<int>(i)] = sub.add(s.verts[i]);
  for (const auto& [a, b] : s.tau)
    if (in[static_cast<std::size_t>(a)] && in[static_cast<std::size_t>(b)])
      sub.tau[remap.at(a)] = remap.at(b);
  for (const auto& m : s.meshes) {
    if (!in[static_cast<std::size_t>(m.right)]) continue;
    MeshIdx mm;
    mm.left = remap.at(m.left);
    mm.right = remap.at(m.right);
    for (int mid : m.middles) mm.middles.push_back(remap.at(mid));
    sub.meshes.push_back(std::move(mm));
  }
  ComponentQuiver c;
  c.kind = kind;
  c.mouth_period = mouth_period;
  c.depth = depth;
  assemble(sub, c);
  return c;
}

// ---- oriented cycle of a semisimple-type module ----

ComponentQuiver knit_cycle(const Description& d, const Id& g) {
  std::vector<Id> omega_orbit{g};
  Id cur = d.apply_syz(g, 1);
  while (cur != g) {
    omega_orbit.push_back(cur);
    cur = d.apply_syz(cur, 1);
    if (omega_orbit.size() > d.objects.size())
      throw MonoError("syzygy orbit did not close at " + g);
  }
  Store s;
  for (const auto& o : omega_orbit) {
    for (const Vertex& v : {boundary0(d, o), boundary_diag(d, o), boundary_syz(d, o)}) {
      int ri = s.add(v);
      Mesh m = almost_split_at(d, v);
      MeshIdx mi;
      mi.right = ri;
      mi.left = s.add(m.left);
      for (auto& mid : m.middle) mi.middles.push_back(s.add(mid));
      s.tau[ri] = mi.left;
      s.meshes.push_back(std::move(mi));
    }
  }
  int seed = s.index.at(boundary0(d, g).key());
  ComponentQuiver c = extract_component(s, seed, ComponentQuiver::Kind::OrientedCycle,
                                        static_cast<long>(3 * omega_orbit.size()), 0);
  return c;
}

// ---- tube truncation ----

ComponentQuiver knit_tube(const Description& d, const Id& g, int depth) {
  int levels = std::max(1, depth);
  Id rep = gprj::theta_orbit_rep(d, g);
  TauOrbit mo = tau_s_orbit(d, rep);
  long P = mo.period;

  Store s;
  std::vector<std::vector<int>> X; // X[l-1][j]
  X.emplace_back();
  for (long j = 0; j < P; ++j) X[0].push_back(s.add(mo.orbit[static_cast<std::size_t>(j)]));
  for (long j = 0; j < P; ++j) s.tau[X[0][static_cast<std::size_t>(j)]] = X[0][static_cast<std::size_t>((j + 1) % P)];

  // mouth meshes; their stable middles are the quasi-length-2 vertices
  std::vector<DimPair> D1(static_cast<std::size_t>(P)), D2(static_cast<std::size_t>(P));
  std::vector<std::vector<Vertex>> pis(static_cast<std::size_t>(P));
  std::vector<Vertex> lvl2(static_cast<std::size_t>(P));
  for (long j = 0; j < P; ++j) {
    Mesh m = almost_split_at(d, mo.orbit[static_cast<std::size_t>(j)]);
    D1[static_cast<std::size_t>(j)] = mo.orbit[static_cast<std::size_t>(j)].dims;
    bool found = false;
    for (auto& mid : m.middle) {
      if (mid.form == Form::Generic) {
        if (found) throw MonoError("tube mouth mesh with two interior middles");
        found = true;
        if (mid.power != j % P)
          throw MonoError("tube anchor slot mismatch during knitting");
        lvl2[static_cast<std::size_t>(j)] = mid;
        D2[static_cast<std::size_t>(j)] = mid.dims;
      } else if (mid.is_proj_inj()) {
        pis[static_cast<std::size_t>(j)].push_back(mid);
      } else {
        throw MonoError("unexpected boundary middle in an infinite component at " + g);
      }
    }
    if (!found) throw MonoError("tube mouth mesh lost its interior middle");
  }

  if (levels >= 2) {
    X.emplace_back();
    for (long j = 0; j < P; ++j) X[1].push_back(s.add(lvl2[static_cast<std::size_t>(j)]));
    for (long j = 0; j < P; ++j) s.tau[X[1][static_cast<std::size_t>(j)]] = X[1][static_cast<std::size_t>((j + 1) % P)];
    for (long j = 0; j < P; ++j) {
      MeshIdx mi;
      mi.right = X[0][static_cast<std::size_t>(j)];
      mi.left = X[0][static_cast<std::size_t>((j + 1) % P)];
      mi.middles.push_back(X[1][static_cast<std::size_t>(j)]);
      for (const auto& q : pis[static_cast<std::size_t>(j)]) mi.middles.push_back(s.add(q));
      s.meshes.push_back(std::move(mi));
    }
  }

  // interior levels by mesh additivity
  std::vector<std::vector<DimPair>> D{D1, D2};
  for (int l = 3; l <= levels; ++l) {
    std::vector<DimPair> Dl(static_cast<std::size_t>(P));
    X.emplace_back();
    for (long j = 0; j < P; ++j) {
      // mesh at X(l-1, j): left X(l-1, j+1), middles {X(l-2, j+1), X(l, j)}
      DimPair sum = dim_pair_add(D[static_cast<std::size_t>(l - 2)][static_cast<std::size_t>((j + 1) % P)],
                                 D[static_cast<std::size_t>(l - 2)][static_cast<std::size_t>(j)]);
      Dl[static_cast<std::size_t>(j)] =
          dim_pair_sub(sum, D[static_cast<std::size_t>(l - 3)][static_cast<std::size_t>((j + 1) % P)]);
      Vertex v;
      v.form = Form::Generic;
      v.base = rep;
      v.level = l;
      v.power = j;
      v.dims = Dl[static_cast<std::size_t>(j)];
      X.back().push_back(s.add(v));
    }
    for (long j = 0; j < P; ++j)
      s.tau[X.back()[static_cast<std::size_t>(j)]] = X.back()[static_cast<std::size_t>((j + 1) % P)];
    for (long j = 0; j < P; ++j) {
      MeshIdx mi;
      mi.right = X[static_cast<std::size_t>(l - 2)][static_cast<std::size_t>(j)];
      mi.left = X[static_cast<std::size_t>(l - 2)][static_cast<std::size_t>((j + 1) % P)];
      mi.middles.push_back(X[static_cast<std::size_t>(l - 3)][static_cast<std::size_t>((j + 1) % P)]);
      mi.middles.push_back(X.back()[static_cast<std::size_t>(j)]);
      s.meshes.push_back(std::move(mi));
    }
    D.push_back(std::move(Dl));
  }

  ComponentQuiver c;
  c.kind = ComponentQuiver::Kind::TubeTruncation;
  c.mouth_period = P;
  c.depth = levels;
  assemble(s, c);
  return c;
}

// ---- finite components: breadth-first mesh completion ----

// A pending interior vertex: produced as the stable middle of the mesh
// at some vertex whose left term is the incoming arrow.
struct Handle {
  DimPair dims;
  int spawner_left = -1;
};

struct HandleChain {
  Id family;
  int level = 2;
  std::vector<Handle> slots;
};

long min_dims_period(const std::vector<Handle>& v) {
  long n = static_cast<long>(v.size());
  for (long q = 1; q <= n; ++q) {
    if (n % q) continue;
    bool ok = true;
    for (long j = 0; j < n && ok; ++j)
      ok = v[static_cast<std::size_t>(j)].dims == v[static_cast<std::size_t>((j + q) % n)].dims;
    if (ok) return q;
  }
  return n;
}

// Mesh completion for finite components is a small search: meshes of an
// unmeshed translate orbit are closed once all incoming arrows are
// known, and a nonzero deficit is resolved by matching another pending
// orbit (strips of different boundary families merge), by a fresh orbit
// one level up, or by deferring the decision until more arrows arrive.
struct FiniteState {
  Store s;
  std::map<int, std::vector<int>> inarrows; // stable vertex -> sources
  std::vector<std::vector<int>> pool;       // unmeshed translate cycles
  std::map<int, int> defers;                // pool-front deferral counts
};

struct FiniteKnit {
  const Description& d;
  int policy; // 0 = full identification, 1 = within family, 2 = none
  long nodes = 0;
  static constexpr long kNodeBudget = 20000;
  Store result;

  FiniteKnit(const Description& desc, int pol) : d(desc), policy(pol) {}

  void run() {
    FiniteState st;
    std::vector<HandleChain> level2;
    std::vector<std::pair<std::size_t, std::size_t>> patch_slots; // (mesh, middle pos)
    auto orbits = gprj::theta_orbits(d);
    for (const auto& orb : orbits) {
      const Id& rep = orb.members.front();
      TauOrbit mo = tau_s_orbit(d, rep);
      long P = mo.period;
      std::vector<int> bidx;
      for (const auto& v : mo.orbit) bidx.push_back(st.s.add(v));
      for (long j = 0; j < P; ++j)
        st.s.tau[bidx[static_cast<std::size_t>(j)]] = bidx[static_cast<std::size_t>((j + 1) % P)];
      HandleChain chain;
      chain.family = rep;
      bool has_interior = false;
      for (long j = 0; j < P; ++j) {
        Mesh m = almost_split_at(d, mo.orbit[static_cast<std::size_t>(j)]);
        MeshIdx mi;
        mi.right = bidx[static_cast<std::size_t>(j)];
        mi.left = bidx[static_cast<std::size_t>((j + 1) % P)];
        if (st.s.at(mi.left).key() != m.left.key())
          throw MonoError("mesh left term disagrees with the translate orbit at " + m.right.key());
        Handle h;
        h.spawner_left = mi.left;
        bool interior = false;
        for (auto& mid : m.middle) {
          if (mid.form == Form::Generic) {
            interior = true;
            h.dims = mid.dims;
          } else {
            int mi2 = st.s.add(mid);
            mi.middles.push_back(mi2);
            if (!st.s.at(mi2).is_proj_inj()) st.inarrows[mi2].push_back(mi.left);
          }
        }
        if (interior) {
          has_interior = true;
          chain.slots.push_back(h);
          patch_slots.emplace_back(st.s.meshes.size(), mi.middles.size());
          mi.middles.push_back(-1);
        }
        st.s.meshes.push_back(std::move(mi));
      }
      if (has_interior) {
        if (chain.slots.size() != static_cast<std::size_t>(P))
          throw MonoError("mixed interior/boundary middles along one orbit at " + rep);
        level2.push_back(std::move(chain));
      }
    }
    // identify the level-2 handles and patch the boundary meshes
    std::vector<int> flat = instantiate(st, level2, 2);
    std::size_t k = 0;
    for (auto [mesh, pos] : patch_slots) st.s.meshes[mesh].middles[pos] = flat[k++];
    auto done = search(st);
    if (!done) throw MonoError("finite knit search exhausted");
    result = std::move(done->s);
    verify(result);
  }

  // Create vertices for handle chains after the policy identification;
  // returns one vertex index per (chain, slot) in order, records the
  // incoming arrows, the translate links, and appends the new cycles to
  // the pool.
  std::vector<int> instantiate(FiniteState& st, std::vector<HandleChain>& chains, int level) {
    long nchain = static_cast<long>(chains.size());
    std::vector<long> period(static_cast<std::size_t>(nchain));
    for (long c = 0; c < nchain; ++c) {
      const auto& ch = chains[static_cast<std::size_t>(c)];
      period[static_cast<std::size_t>(c)] =
          (policy <= 1) ? min_dims_period(ch.slots) : static_cast<long>(ch.slots.size());
    }
    std::vector<long> merge_to(static_cast<std::size_t>(nchain)), merge_off(static_cast<std::size_t>(nchain), 0);
    for (long c = 0; c < nchain; ++c) merge_to[static_cast<std::size_t>(c)] = c;
    if (policy == 0) {
      for (long c = 1; c < nchain; ++c)
        for (long c0 = 0; c0 < c; ++c0) {
          if (merge_to[static_cast<std::size_t>(c0)] != c0) continue;
          long q = period[static_cast<std::size_t>(c0)];
          if (period[static_cast<std::size_t>(c)] != q) continue;
          const auto& A = chains[static_cast<std::size_t>(c0)].slots;
          const auto& B = chains[static_cast<std::size_t>(c)].slots;
          bool merged = false;
          for (long off = 0; off < q && !merged; ++off) {
            bool ok = true;
            for (long j = 0; j < static_cast<long>(B.size()) && ok; ++j)
              ok = B[static_cast<std::size_t>(j)].dims ==
                   A[static_cast<std::size_t>((j + off) % static_cast<long>(A.size()))].dims;
            if (ok) {
              merge_to[static_cast<std::size_t>(c)] = c0;
              merge_off[static_cast<std::size_t>(c)] = off;
              merged = true;
            }
          }
          if (merged) break;
        }
    }
    std::map<std::pair<long, long>, int> canon;
    std::vector<int> flat;
    for (long c = 0; c < nchain; ++c) {
      auto& ch = chains[static_cast<std::size_t>(c)];
      long c0 = merge_to[static_cast<std::size_t>(c)];
      long q = period[static_cast<std::size_t>(c0)];
      for (long j = 0; j < static_cast<long>(ch.slots.size()); ++j) {
        long slot0 = (j + merge_off[static_cast<std::size_t>(c)]) % q;
        auto key = std::make_pair(c0, slot0);
        auto it = canon.find(key);
        int vid;
        if (it == canon.end()) {
          Vertex v;
          v.form = Form::Generic;
          v.base = chains[static_cast<std::size_t>(c0)].family;
          v.level = level;
          v.power = slot0;
          v.dims = ch.slots[static_cast<std::size_t>(j)].dims;
          vid = st.s.add(v);
          canon.emplace(key, vid);
        } else {
          vid = it->second;
          if (!(st.s.at(vid).dims == ch.slots[static_cast<std::size_t>(j)].dims))
            throw MonoError("inconsistent identification of interior vertices");
        }
        st.inarrows[vid].push_back(ch.slots[static_cast<std::size_t>(j)].spawner_left);
        flat.push_back(vid);
      }
    }
    std::map<long, std::vector<int>> cycles;
    for (const auto& [key, vid] : canon) {
      long q = period[static_cast<std::size_t>(key.first)];
      auto nxt = canon.find(std::make_pair(key.first, (key.second + 1) % q));
      if (nxt == canon.end()) throw MonoError("broken translate chain among interior vertices");
      st.s.tau[vid] = nxt->second;
      cycles[key.first].push_back(vid);
    }
    for (auto& [c0, verts] : cycles) st.pool.push_back(verts);
    return flat;
  }

  // per-slot deficits of an unmeshed orbit; nullopt when inconsistent
  std::optional<std::vector<Handle>> deficits(const FiniteState& st, const std::vector<int>& orbit) {
    std::vector<Handle> out;
    for (int x : orbit) {
      int left = st.s.tau.at(x);
      DimPair need = dim_pair_add(st.s.at(left).dims, st.s.at(x).dims);
      auto it = st.inarrows.find(x);
      if (it != st.inarrows.end())
        for (int src : it->second) {
          try {
            need = dim_pair_sub(need, st.s.at(src).dims);
          } catch (const MonoError&) {
            return std::nullopt;
          }
        }
      Handle h;
      h.dims = need;
      h.spawner_left = left;
      out.push_back(std::move(h));
    }
    return out;
  }

  void close_meshes(FiniteState& st, const std::vector<int>& orbit,
                    const std::vector<int>& extra_mid) {
    for (std::size_t j = 0; j < orbit.size(); ++j) {
      int x = orbit[j];
      MeshIdx mi;
      mi.right = x;
      mi.left = st.s.tau.at(x);
      auto it = st.inarrows.find(x);
      if (it != st.inarrows.end()) mi.middles = it->second;
      if (!extra_mid.empty()) {
        int w = extra_mid[j];
        mi.middles.push_back(w);
        st.inarrows[w].push_back(mi.left);
      }
      st.s.meshes.push_back(std::move(mi));
    }
  }

  std::optional<FiniteState> search(FiniteState st) {
    if (++nodes > kNodeBudget) return std::nullopt;
    // forced moves: close every orbit whose deficits all vanish
    bool progressed = true;
    while (progressed) {
      progressed = false;
      for (std::size_t i = 0; i < st.pool.size(); ++i) {
        auto def = deficits(st, st.pool[i]);
        if (!def) return std::nullopt;
        bool all_zero = true, any_zero = false;
        for (const auto& h : *def) {
          if (dim_pair_is_zero(h.dims)) any_zero = true;
          else all_zero = false;
        }
        if (all_zero) {
          close_meshes(st, st.pool[i], {});
          st.pool.erase(st.pool.begin() + static_cast<std::ptrdiff_t>(i));
          progressed = true;
          break;
        }
        if (any_zero) return std::nullopt; // mixed orbit: dead branch
      }
    }
    if (st.pool.empty()) {
      if (!check(st.s)) return std::nullopt;
      return st;
    }
    std::vector<int> orbit = st.pool.front();
    auto def = deficits(st, orbit);
    if (!def) return std::nullopt;
    long q = (policy <= 1) ? min_dims_period(*def) : static_cast<long>(def->size());
    // option 1: match another pending orbit of matching length/dims
    if (policy == 0) {
      for (std::size_t w = 1; w < st.pool.size(); ++w) {
        const auto& W = st.pool[w];
        if (static_cast<long>(W.size()) != q) continue;
        for (long r = 0; r < q; ++r) {
          bool ok = true;
          for (long j = 0; j < static_cast<long>(def->size()) && ok; ++j)
            ok = (*def)[static_cast<std::size_t>(j)].dims ==
                 st.s.at(W[static_cast<std::size_t>((j + r) % q)]).dims;
          if (!ok) continue;
          FiniteState next = st;
          std::vector<int> extra;
          for (long j = 0; j < static_cast<long>(orbit.size()); ++j)
            extra.push_back(W[static_cast<std::size_t>((j + r) % q)]);
          close_meshes(next, orbit, extra);
          next.pool.erase(next.pool.begin());
          if (auto res = search(std::move(next))) return res;
        }
      }
    }
    // option 2: a fresh orbit one level up
    {
      FiniteState next = st;
      int level = next.s.at(orbit.front()).level + 1;
      if (level <= 64 && next.s.verts.size() < 4096) {
        std::vector<int> fresh;
        for (long j = 0; j < q; ++j) {
          Vertex v;
          v.form = Form::Generic;
          v.base = next.s.at(orbit.front()).base;
          v.level = level;
          v.power = j;
          v.dims = (*def)[static_cast<std::size_t>(j)].dims;
          fresh.push_back(next.s.add(v));
        }
        for (long j = 0; j < q; ++j)
          next.s.tau[fresh[static_cast<std::size_t>(j)]] = fresh[static_cast<std::size_t>((j + 1) % q)];
        std::vector<int> extra;
        for (long j = 0; j < static_cast<long>(orbit.size()); ++j)
          extra.push_back(fresh[static_cast<std::size_t>(j % q)]);
        close_meshes(next, orbit, extra);
        next.pool.erase(next.pool.begin());
        next.pool.push_back(fresh);
        if (auto res = search(std::move(next))) return res;
      }
    }
    // option 3: defer the decision until more arrows have arrived
    if (st.pool.size() > 1) {
      int id = orbit.front();
      if (st.defers[id] < static_cast<int>(st.pool.size())) {
        FiniteState next = st;
        next.defers[id] += 1;
        next.pool.erase(next.pool.begin());
        next.pool.push_back(orbit);
        if (auto res = search(std::move(next))) return res;
      }
    }
    return std::nullopt;
  }

  // structural checks on a candidate closure
  static bool check(const Store& s) {
    std::map<int, int> endings;
    for (const auto& m : s.meshes) endings[m.right] += 1;
    for (std::size_t i = 0; i < s.verts.size(); ++i) {
      if (s.verts[i].is_proj_inj()) continue;
      auto it = endings.find(static_cast<int>(i));
      if (it == endings.end() || it->second != 1) return false;
    }
    std::map<int, const MeshIdx*> mesh_at;
    for (const auto& m : s.meshes) mesh_at[m.right] = &m;
    for (const auto& m : s.meshes) {
      for (int mid : m.middles) {
        if (s.at(mid).is_proj_inj()) continue;
        const MeshIdx* mm = mesh_at.at(mid);
        auto count = [](const std::vector<int>& v, int x) {
          return std::count(v.begin(), v.end(), x);
        };
        if (count(m.middles, mid) != count(mm->middles, m.left)) return false;
      }
      DimPair lhs = dim_pair_add(s.at(m.left).dims, s.at(m.right).dims);
      try {
        for (int mid : m.middles) lhs = dim_pair_sub(lhs, s.at(mid).dims);
      } catch (const MonoError&) {
        return false;
      }
      if (!dim_pair_is_zero(lhs)) return false;
    }
    return true;
  }

  void verify(const Store& s) const {
    if (!check(s)) throw MonoError("finite knit failed its structural verification");
  }
};

ComponentQuiver knit_finite(const Description& d, const Id& g) {
  std::string last_err;
  for (int policy = 0; policy < 3; ++policy) {
    try {
      FiniteKnit k(d, policy);
      k.run();
      int seed = k.result.index.at(boundary0(d, g).key());
      ComponentQuiver c = extract_component(k.result, seed, ComponentQuiver::Kind::DynkinQuotient,
                                            tau_s_orbit(d, gprj::theta_orbit_rep(d, g)).period, 0);
      bool all_boundary = true;
      for (const auto& v : c.vertices)
        if (!v.is_proj_inj() && !v.is_boundary()) all_boundary = false;
      if (all_boundary) c.kind = ComponentQuiver::Kind::OrientedCycle;
      return c;
    } catch (const MonoError& e) {
      last_err = e.what();
    }
  }
  throw MonoError("finite knitting failed to close: " + last_err);
}

ComponentQuiver knit_partial(const Description& d, const Id& g) {
  Id rep = gprj::theta_orbit_rep(d, g);
  TauOrbit mo = tau_s_orbit(d, rep);
  Store s;
  std::vector<int> bidx;
  for (const auto& v : mo.orbit) bidx.push_back(s.add(v));
  for (long j = 0; j < mo.period; ++j)
    s.tau[bidx[static_cast<std::size_t>(j)]] = bidx[static_cast<std::size_t>((j + 1) % mo.period)];
  for (long j = 0; j < mo.period; ++j) {
    Mesh m = almost_split_at(d, mo.orbit[static_cast<std::size_t>(j)]);
    MeshIdx mi;
    mi.right = bidx[static_cast<std::size_t>(j)];
    mi.left = bidx[static_cast<std::size_t>((j + 1) % mo.period)];
    for (auto& mid : m.middle) mi.middles.push_back(s.add(mid));
    s.meshes.push_back(std::move(mi));
  }
  ComponentQuiver c;
  c.kind = ComponentQuiver::Kind::Unclassified;
  c.mouth_period = mo.period;
  assemble(s, c);
  return c;
}

} // namespace

ComponentQuiver knit_component(const Description& d, const Id& g, int depth) {
  if (!d.has(g)) throw MonoError("knit_component: unknown id " + g);
  if (d.is_projective(g)) throw MonoError("knit_component: " + g + " is projective");
  if (g_semisimple(d, g)) return knit_cycle(d, g);
  switch (d.finite_type) {
    case gprj::FiniteType::Infinite: return knit_tube(d, g, depth);
    case gprj::FiniteType::Finite: return knit_finite(d, g);
    default: return knit_partial(d, g);
  }
}

std::string component_fingerprint(const Description& d, const Id& g, int depth) {
  std::vector<std::string> keys;
  if (g_semisimple(d, g)) {
    ComponentQuiver c = knit_component(d, g, depth);
    for (const auto& v : c.vertices)
      if (!v.is_proj_inj()) keys.push_back(v.key());
    std::sort(keys.begin(), keys.end());
    std::string out = "cycle{";
    for (const auto& k : keys) out += k + ";";
    return out + "}";
  }
  if (d.finite_type == gprj::FiniteType::Infinite) {
    TauOrbit mo = tau_s_orbit(d, gprj::theta_orbit_rep(d, g));
    for (const auto& v : mo.orbit) keys.push_back(v.key());
    std::sort(keys.begin(), keys.end());
    std::string out = "tube{";
    for (const auto& k : keys) out += k + ";";
    return out + "}";
  }
  if (d.finite_type == gprj::FiniteType::Finite) {
    ComponentQuiver c = knit_component(d, g, depth);
    for (const auto& v : c.vertices)
      if (!v.is_proj_inj()) keys.push_back(v.key());
    std::sort(keys.begin(), keys.end());
    std::string out = "comp{";
    for (const auto& k : keys) out += k + ";";
    return out + "}";
  }
  TauOrbit mo = tau_s_orbit(d, gprj::theta_orbit_rep(d, g));
  for (const auto& v : mo.orbit) keys.push_back(v.key());
  std::sort(keys.begin(), keys.end());
  std::string out = "orbit{";
  for (const auto& k : keys) out += k + ";";
  return out + "}?";
}

DeltaReport delta_map(const Description& d, int depth) {
  DeltaReport rep;
  auto orbits = gprj::theta_orbits(d);
  std::set<std::string> infinite_ids;
  for (const auto& orb : orbits) {
    DeltaReport::Row row;
    row.orbit = orb.members;
    const Id& r = orb.members.front();
    row.infinite = !g_semisimple(d, r) && d.finite_type == gprj::FiniteType::Infinite;
    row.component_id = component_fingerprint(d, r, depth);
    if (row.infinite) {
      if (!infinite_ids.insert(row.component_id).second) rep.injective_on_infinite = false;
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

} // namespace arcomp::mono
