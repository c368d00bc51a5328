#include <algorithm>
#include <map>

#include "arcomp/oracle.hpp"

namespace arcomp::oracle {

PathAlg::PathAlg(Fp field, int nvertices, std::vector<Arrow> arrows,
                 std::vector<Relation> relations, int degree_cap)
    : F_(field), nv_(nvertices), arrows_(std::move(arrows)), rels_(std::move(relations)) {
  for (const auto& a : arrows_)
    if (a.src < 0 || a.src >= nv_ || a.tgt < 0 || a.tgt >= nv_)
      throw OracleError("arrow endpoint out of range");
  for (const auto& r : rels_) {
    if (r.empty()) throw OracleError("empty relation");
    std::size_t len = r.front().path.size();
    if (len < 2) throw OracleError("relation not admissible (degree < 2)");
    for (const auto& t : r)
      if (t.path.size() != len) throw OracleError("relation not homogeneous in path length");
  }
  compute_basis(degree_cap);
}

namespace {
struct RawPath {
  int src, tgt;
  std::vector<int> word;
};
} // namespace

void PathAlg::compute_basis(int cap) {
  // paths per degree, with an index map
  std::vector<std::vector<RawPath>> paths(1);
  std::map<std::vector<int>, int> index_of_word; // within current degree
  for (int v = 0; v < nv_; ++v) paths[0].push_back({v, v, {}});

  // degree-0 basis: the idempotents
  from_.assign(static_cast<std::size_t>(nv_), {});
  for (int v = 0; v < nv_; ++v) {
    basis_.push_back({v, v, {}});
    from_[static_cast<std::size_t>(v)].push_back(static_cast<int>(basis_.size()) - 1);
  }
  // per-degree reduction data for right multiplication:
  // reduce[d] maps a degree-d path index to its normal form over basis
  // indices. Start by storing, for each degree, the path list and the
  // rref of the ideal's degree-d slice.
  struct DegreeData {
    std::vector<RawPath> paths;
    std::map<std::vector<int>, int> word_index;
    std::vector<std::vector<std::pair<int, u64>>> normal; // path -> basis combo
  };
  std::vector<DegreeData> deg(1);
  deg[0].paths = paths[0];
  for (int v = 0; v < nv_; ++v) {
    deg[0].word_index[{}] = -1; // unused for degree 0
    deg[0].normal.push_back({{static_cast<int>(v), 1}});
  }

  int d = 0;
  while (true) {
    ++d;
    if (d > cap) throw OracleError("algebra appears infinite dimensional (degree cap hit)");
    // build degree-d paths by extending degree-(d-1) paths
    DegreeData cur;
    for (const auto& p : deg[static_cast<std::size_t>(d - 1)].paths) {
      for (std::size_t ai = 0; ai < arrows_.size(); ++ai) {
        if (arrows_[ai].src != p.tgt) continue;
        RawPath q{p.src, arrows_[ai].tgt, p.word};
        q.word.push_back(static_cast<int>(ai));
        cur.word_index[q.word] = static_cast<int>(cur.paths.size());
        cur.paths.push_back(std::move(q));
      }
    }
    if (cur.paths.empty()) break;
    // ideal slice: u * rel * w with |u| + len + |w| = d
    std::vector<ffla::Vec> rows;
    for (const auto& rel : rels_) {
      int len = static_cast<int>(rel.front().path.size());
      if (len > d) continue;
      int rel_src = arrows_[static_cast<std::size_t>(rel.front().path.front())].src;
      int rel_tgt = arrows_[static_cast<std::size_t>(rel.front().path.back())].tgt;
      for (int du = 0; du + len <= d; ++du) {
        int dw = d - len - du;
        for (const auto& u : deg[static_cast<std::size_t>(du)].paths) {
          if (u.tgt != rel_src) continue;
          for (const auto& w : deg[static_cast<std::size_t>(dw)].paths) {
            if (w.src != rel_tgt) continue;
            ffla::Vec row(cur.paths.size(), 0);
            bool any = false;
            for (const auto& term : rel) {
              std::vector<int> word = u.word;
              word.insert(word.end(), term.path.begin(), term.path.end());
              word.insert(word.end(), w.word.begin(), w.word.end());
              auto it = cur.word_index.find(word);
              if (it == cur.word_index.end())
                throw OracleError("internal: relation path missing from path list");
              row[static_cast<std::size_t>(it->second)] =
                  F_.add(row[static_cast<std::size_t>(it->second)], F_.reduce(term.coeff));
              any = true;
            }
            if (any) rows.push_back(std::move(row));
          }
        }
      }
    }
    // rref of the slice; non-pivot paths survive into the basis
    ffla::Mat M(rows.size(), cur.paths.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cur.paths.size(); ++j) M.at(i, j) = rows[i][j];
    ffla::Rref R = ffla::rref(F_, std::move(M));
    std::vector<bool> pivot(cur.paths.size(), false);
    std::vector<int> pivot_row(cur.paths.size(), -1);
    for (std::size_t i = 0; i < R.pivots.size(); ++i) {
      pivot[R.pivots[i]] = true;
      pivot_row[R.pivots[i]] = static_cast<int>(i);
    }
    std::vector<int> to_basis(cur.paths.size(), -1);
    int survivors = 0;
    for (std::size_t j = 0; j < cur.paths.size(); ++j) {
      if (pivot[j]) continue;
      to_basis[j] = static_cast<int>(basis_.size());
      basis_.push_back({cur.paths[j].src, cur.paths[j].tgt, cur.paths[j].word});
      from_[static_cast<std::size_t>(cur.paths[j].src)].push_back(to_basis[j]);
      ++survivors;
    }
    // normal forms: pivot path = -(rest of its rref row) on free paths
    cur.normal.resize(cur.paths.size());
    for (std::size_t j = 0; j < cur.paths.size(); ++j) {
      if (!pivot[j]) {
        cur.normal[j] = {{to_basis[j], 1}};
        continue;
      }
      std::vector<std::pair<int, u64>> combo;
      int row = pivot_row[j];
      for (std::size_t c = 0; c < cur.paths.size(); ++c) {
        if (pivot[c] || R.m.at(static_cast<std::size_t>(row), c) == 0) continue;
        combo.emplace_back(to_basis[c], F_.neg(R.m.at(static_cast<std::size_t>(row), c)));
      }
      cur.normal[j] = std::move(combo);
    }
    deg.push_back(std::move(cur));
    if (survivors == 0) {
      // once a full degree dies, everything above it does too
      bool all_dead = true;
      for (const auto& nf : deg.back().normal)
        if (!nf.empty()) { all_dead = false; break; }
      if (all_dead) break;
    }
  }

  // right multiplication table
  rmul_.assign(basis_.size(), std::vector<std::vector<std::pair<int, u64>>>(arrows_.size()));
  // locate each basis path inside its degree data for extension lookups
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    const auto& bp = basis_[b];
    for (std::size_t ai = 0; ai < arrows_.size(); ++ai) {
      if (arrows_[ai].src != bp.tgt) continue;
      std::vector<int> word = bp.word;
      word.push_back(static_cast<int>(ai));
      std::size_t dd = word.size();
      if (dd >= deg.size()) continue; // zero in the algebra
      auto it = deg[dd].word_index.find(word);
      if (it == deg[dd].word_index.end()) continue;
      rmul_[b][ai] = deg[dd].normal[static_cast<std::size_t>(it->second)];
    }
  }
}

const std::vector<std::pair<int, u64>>& PathAlg::right_mult(int b, int a) const {
  return rmul_[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
}

PathAlg build_nakayama(int m, int l, u64 p) {
  if (m < 1 || l < 1) throw OracleError("bad Nakayama parameters");
  std::vector<Arrow> arrows;
  for (int v = 0; v < m; ++v) {
    // arrow v -> v-1 (mod m)
    arrows.push_back({v, (v - 1 + m) % m, "x" + std::to_string(v + 1)});
  }
  std::vector<Relation> rels;
  for (int v = 0; v < m; ++v) {
    // the unique path of length l starting at v
    RelTerm t;
    t.coeff = 1;
    int cur = v;
    for (int k = 0; k < l; ++k) {
      t.path.push_back(cur);
      cur = (cur - 1 + m) % m;
    }
    rels.push_back({t});
  }
  PathAlg A(Fp(p), m, std::move(arrows), std::move(rels));
  if (A.dim() != m * l) throw OracleError("Nakayama dimension check failed");
  return A;
}

// arrows of the Auslander-type ladder on vertices 0..n-1:
// a_i: i -> i+1 (index i), b_{i+1}: i+1 -> i (index n-1 + i)
static PathAlg build_ladder(int n, u64 p, bool drop_last_vertex) {
  int nv = drop_last_vertex ? n - 1 : n;
  if (nv < 1) throw OracleError("ladder too small");
  std::vector<Arrow> arrows;
  for (int i = 0; i + 1 < nv; ++i) arrows.push_back({i, i + 1, "a" + std::to_string(i + 1)});
  int nb = static_cast<int>(arrows.size());
  for (int i = 0; i + 1 < nv; ++i) arrows.push_back({i + 1, i, "b" + std::to_string(i + 2)});
  auto a_idx = [&](int i) { return i - 1; };          // a_i, 1-based
  auto b_idx = [&](int i) { return nb + i - 2; };     // b_i, 1-based
  std::vector<Relation> rels;
  if (nv >= 2) {
    // a_1 b_2 = 0
    rels.push_back({RelTerm{1, {a_idx(1), b_idx(2)}}});
    // a_i b_{i+1} = b_i a_{i-1} for middle vertices
    for (int i = 2; i <= nv - 1; ++i) {
      Relation r;
      r.push_back(RelTerm{1, {a_idx(i), b_idx(i + 1)}});
      r.push_back(RelTerm{-1, {b_idx(i), a_idx(i - 1)}});
      rels.push_back(std::move(r));
    }
    if (drop_last_vertex && nv >= 2) {
      // killing the last vertex of the Auslander presentation turns the
      // relation there into b_{nv} a_{nv-1} = 0
      rels.push_back({RelTerm{1, {b_idx(nv), a_idx(nv - 1)}}});
    }
  } else {
    // a single vertex, no arrows, no relations
  }
  return PathAlg(Fp(p), nv, std::move(arrows), std::move(rels));
}

PathAlg build_auslander(int n, u64 p) {
  if (n < 2) throw OracleError("Auslander algebra needs n >= 2");
  PathAlg A = build_ladder(n, p, false);
  long expect = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) expect += std::min(i, j);
  if (A.dim() != expect) throw OracleError("Auslander algebra dimension check failed");
  return A;
}

PathAlg build_preprojective(int n, u64 p) {
  if (n < 2) throw OracleError("preprojective algebra needs n >= 2");
  PathAlg A = build_ladder(n, p, true);
  long m = n - 1;
  long expect = m * (m + 1) * (m + 2) / 6;
  if (A.dim() != expect) throw OracleError("preprojective algebra dimension check failed");
  return A;
}

PathAlg build_t2(const PathAlg& base) {
  int nv = base.vertices();
  std::vector<Arrow> arrows;
  // level-1 copies, level-2 copies, then the connecting arrows
  for (const auto& a : base.arrows()) arrows.push_back({a.src, a.tgt, a.name + "'"});
  for (const auto& a : base.arrows()) arrows.push_back({nv + a.src, nv + a.tgt, a.name + "''"});
  for (int v = 0; v < nv; ++v) arrows.push_back({v, nv + v, "f" + std::to_string(v + 1)});
  int na = static_cast<int>(base.arrows().size());
  auto lvl1 = [&](int i) { return i; };
  auto lvl2 = [&](int i) { return na + i; };
  auto beta = [&](int v) { return 2 * na + v; };
  std::vector<Relation> rels;
  // base relations at both levels
  for (int lvl = 0; lvl < 2; ++lvl)
    for (const auto& r0 : base.relations()) {
      Relation r;
      for (const auto& t : r0) {
        RelTerm tt;
        tt.coeff = t.coeff;
        for (int ai : t.path) tt.path.push_back(lvl == 0 ? lvl1(ai) : lvl2(ai));
        r.push_back(std::move(tt));
      }
      rels.push_back(std::move(r));
    }
  // commutation: a' f_t = f_s a''
  for (int i = 0; i < na; ++i) {
    const auto& a = base.arrows()[static_cast<std::size_t>(i)];
    Relation r;
    r.push_back(RelTerm{1, {lvl1(i), beta(a.tgt)}});
    r.push_back(RelTerm{-1, {beta(a.src), lvl2(i)}});
    rels.push_back(std::move(r));
  }
  PathAlg T(base.field(), 2 * nv, std::move(arrows), std::move(rels));
  if (T.dim() != 3 * base.dim()) throw OracleError("triangular matrix algebra dimension check failed");
  return T;
}

PathAlg opposite(const PathAlg& a) {
  std::vector<Arrow> arrows;
  for (const auto& ar : a.arrows()) arrows.push_back({ar.tgt, ar.src, ar.name + "~"});
  std::vector<Relation> rels;
  for (const auto& r : a.relations()) {
    Relation rr;
    for (const auto& t : r) {
      RelTerm tt;
      tt.coeff = t.coeff;
      tt.path.assign(t.path.rbegin(), t.path.rend());
      rr.push_back(std::move(tt));
    }
    rels.push_back(std::move(rr));
  }
  return PathAlg(a.field(), a.vertices(), std::move(arrows), std::move(rels));
}

} // namespace arcomp::oracle
