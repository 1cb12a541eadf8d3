#pragma once

#include <algorithm>
#include <queue>
#include <vector>

namespace hapnet {

// Maximum-cardinality matching in a general (non-bipartite) graph via
// blossom shrinking, O(V^3). Deterministic: augmenting searches start from
// vertices in increasing id and adjacency lists are scanned in sorted order.
class BlossomMatching {
 public:
  explicit BlossomMatching(int n) : n_(n), adj_(n) {}

  void add_edge(int u, int v) {
    if (u == v) return;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }

  // Returns mate[v] per vertex, -1 if unmatched.
  std::vector<int> solve() {
    for (auto& a : adj_) {
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    mate_.assign(n_, -1);
    p_.assign(n_, -1);
    base_.resize(n_);
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] == -1) {
        const int u = find_augmenting_path(v);
        if (u != -1) augment(u);
      }
    }
    return mate_;
  }

 private:
  // Lowest common ancestor of a and b in the alternating forest, walking
  // over blossom bases.
  int lca(int a, int b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (mate_[a] == -1) break;
      a = p_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = p_[mate_[b]];
    }
  }

  void mark_path(std::vector<char>& in_blossom, int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom[base_[v]] = 1;
      in_blossom[base_[mate_[v]]] = 1;
      p_[v] = child;
      child = mate_[v];
      v = p_[mate_[v]];
    }
  }

  int find_augmenting_path(int root) {
    std::vector<char> used(n_, 0);
    p_.assign(n_, -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != -1 && p_[mate_[to]] != -1)) {
          // Odd cycle: contract the blossom around its base.
          const int curbase = lca(v, to);
          std::vector<char> in_blossom(n_, 0);
          mark_path(in_blossom, v, curbase, to);
          mark_path(in_blossom, to, curbase, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom[base_[i]]) {
              base_[i] = curbase;
              if (!used[i]) {
                used[i] = 1;
                q.push(i);
              }
            }
          }
        } else if (p_[to] == -1) {
          p_[to] = v;
          if (mate_[to] == -1) return to;  // augmenting path reaches a free vertex
          used[mate_[to]] = 1;
          q.push(mate_[to]);
        }
      }
    }
    return -1;
  }

  void augment(int v) {
    while (v != -1) {
      const int pv = p_[v];
      const int ppv = mate_[pv];
      mate_[v] = pv;
      mate_[pv] = v;
      v = ppv;
    }
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> mate_, p_, base_;
};

// Tie preference among maximum matchings: repeatedly rewires two matched
// pairs (a,b) and (c,d) into the alternative pairing when both replacement
// edges are eligible and the total pair distance strictly drops. Preserves
// cardinality; deterministic; terminates because total distance decreases.
inline void prefer_shorter_pairs(std::vector<int>& mate,
                                 const std::vector<std::vector<char>>& eligible,
                                 const std::vector<std::vector<double>>& dist) {
  const int n = static_cast<int>(mate.size());
  bool improved = true;
  while (improved) {
    improved = false;
    for (int a = 0; a < n && !improved; ++a) {
      const int b = mate[a];
      if (b <= a) continue;
      for (int c = a + 1; c < n && !improved; ++c) {
        const int d = mate[c];
        if (d <= c || c == b) continue;
        const double cur = dist[a][b] + dist[c][d];
        if (eligible[a][c] && eligible[b][d] &&
            dist[a][c] + dist[b][d] < cur - 1e-12) {
          mate[a] = c; mate[c] = a;
          mate[b] = d; mate[d] = b;
          improved = true;
        } else if (eligible[a][d] && eligible[b][c] &&
                   dist[a][d] + dist[b][c] < cur - 1e-12) {
          mate[a] = d; mate[d] = a;
          mate[b] = c; mate[c] = b;
          improved = true;
        }
      }
    }
  }
}

}  // namespace hapnet
