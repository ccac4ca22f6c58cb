/*
   Copyright 2026 The qtgenus Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "polytope/polytope.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "error.hpp"

namespace qtg {

SimplePolytope::SimplePolytope(int dimension, int facet_count, std::vector<Vertex> vertices)
    : n_(dimension), m_(facet_count), vertices_(std::move(vertices)) {
  require(n_ >= 1, ErrorKind::argument, "polytope dimension must be positive");
  require(m_ >= 1, ErrorKind::argument, "polytope needs at least one facet");
  require(!vertices_.empty(), ErrorKind::argument, "polytope needs at least one vertex");
  std::vector<bool> used(m_, false);
  for (auto& v : vertices_) {
    std::sort(v.begin(), v.end());
    require(static_cast<int>(v.size()) == n_, ErrorKind::argument,
            "vertex " + vertex_string(v) + " does not have " + std::to_string(n_) + " facets");
    require(std::adjacent_find(v.begin(), v.end()) == v.end(), ErrorKind::argument,
            "vertex " + vertex_string(v) + " repeats a facet");
    for (int f : v) {
      require(f >= 0 && f < m_, ErrorKind::argument, "vertex " + vertex_string(v) + " uses an unknown facet");
      used[f] = true;
    }
  }
  std::sort(vertices_.begin(), vertices_.end());
  require(std::adjacent_find(vertices_.begin(), vertices_.end()) == vertices_.end(), ErrorKind::argument,
          "duplicate vertex");
  for (int f = 0; f < m_; ++f)
    require(used[f], ErrorKind::argument, "facet " + std::to_string(f + 1) + " contains no vertex");

  // Every ridge (n-1 facets of a vertex) must be an edge: exactly two vertices.
  std::map<Vertex, int> ridge_count;
  for (const auto& v : vertices_)
    for (int drop = 0; drop < n_; ++drop) {
      Vertex ridge;
      for (int i = 0; i < n_; ++i)
        if (i != drop) ridge.push_back(v[i]);
      ++ridge_count[ridge];
    }
  for (const auto& [ridge, count] : ridge_count)
    require(count == 2, ErrorKind::argument,
            "facets " + vertex_string(ridge) + " meet in " + std::to_string(count) +
                " vertices; a simple polytope needs exactly 2");

  compute_orientation();
}

std::optional<size_t> SimplePolytope::find_vertex(const Vertex& v) const {
  Vertex key = v;
  std::sort(key.begin(), key.end());
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), key);
  if (it == vertices_.end() || *it != key) return std::nullopt;
  return static_cast<size_t>(it - vertices_.begin());
}

bool SimplePolytope::is_face(const std::vector<int>& facets) const {
  for (const auto& v : vertices_) {
    bool all = true;
    for (int f : facets)
      if (!std::binary_search(v.begin(), v.end(), f)) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

std::vector<size_t> SimplePolytope::neighbours(size_t vertex) const {
  std::vector<size_t> out;
  const Vertex& a = vertices_.at(vertex);
  for (size_t j = 0; j < vertices_.size(); ++j) {
    if (j == vertex) continue;
    Vertex common;
    std::set_intersection(a.begin(), a.end(), vertices_[j].begin(), vertices_[j].end(),
                          std::back_inserter(common));
    if (static_cast<int>(common.size()) == n_ - 1) out.push_back(j);
  }
  return out;
}

void SimplePolytope::compute_orientation() {
  // Adjacent simplices sigma = rho+a, tau = rho+b induce opposite orientations
  // on rho: eps(tau) = -(-1)^(pos(a in sigma) + pos(b in tau)) eps(sigma).
  const size_t count = vertices_.size();
  orientation_.assign(count, 0);
  orientation_[0] = 1;
  std::queue<size_t> todo;
  todo.push(0);
  size_t reached = 1;
  auto position_outside = [](const Vertex& s, const Vertex& other) {
    for (size_t i = 0; i < s.size(); ++i)
      if (!std::binary_search(other.begin(), other.end(), s[i])) return static_cast<int>(i);
    return -1;
  };
  while (!todo.empty()) {
    const size_t cur = todo.front();
    todo.pop();
    for (size_t nb : neighbours(cur)) {
      const int pa = position_outside(vertices_[cur], vertices_[nb]);
      const int pb = position_outside(vertices_[nb], vertices_[cur]);
      const int parity = ((pa + pb) % 2 == 0) ? 1 : -1;
      const int expected = -parity * orientation_[cur];
      if (orientation_[nb] == 0) {
        orientation_[nb] = expected;
        todo.push(nb);
        ++reached;
      } else {
        require(orientation_[nb] == expected, ErrorKind::argument,
                "vertex-facet incidence is not an orientable sphere");
      }
    }
  }
  require(reached == count, ErrorKind::argument, "vertex-edge graph is not connected");
}

SimplePolytope simplex(int n) {
  require(n >= 1, ErrorKind::argument, "simplex dimension must be >= 1");
  std::vector<Vertex> vertices;
  for (int skip = n; skip >= 0; --skip) {
    Vertex v;
    for (int f = 0; f <= n; ++f)
      if (f != skip) v.push_back(f);
    vertices.push_back(v);
  }
  return SimplePolytope(n, n + 1, std::move(vertices));
}

SimplePolytope cube(int n) {
  require(n >= 1, ErrorKind::argument, "cube dimension must be >= 1");
  require(n <= 20, ErrorKind::argument, "cube dimension too large");
  // Facets i and i+n are opposite.
  std::vector<Vertex> vertices;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    Vertex v;
    for (int i = 0; i < n; ++i) v.push_back(((mask >> i) & 1UL) ? i + n : i);
    vertices.push_back(v);
  }
  return SimplePolytope(n, 2 * n, std::move(vertices));
}

SimplePolytope polygon(int k) {
  require(k >= 3, ErrorKind::argument, "polygon needs at least 3 edges");
  std::vector<Vertex> vertices;
  for (int i = 0; i < k; ++i) vertices.push_back({i, (i + 1) % k});
  return SimplePolytope(2, k, std::move(vertices));
}

SimplePolytope product(const SimplePolytope& p, const SimplePolytope& q) {
  std::vector<Vertex> vertices;
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) {
      Vertex v = a;
      for (int f : b) v.push_back(f + p.facet_count());
      vertices.push_back(v);
    }
  return SimplePolytope(p.dimension() + q.dimension(), p.facet_count() + q.facet_count(), std::move(vertices));
}

SimplePolytope connected_sum(const SimplePolytope& p, const Vertex& v, const SimplePolytope& q,
                             const Vertex& w, const std::optional<Vertex>& pairing) {
  require(p.dimension() == q.dimension(), ErrorKind::argument, "connected sum needs equal dimensions");
  const auto vi = p.find_vertex(v);
  const auto wi = q.find_vertex(w);
  require(vi.has_value(), ErrorKind::argument, vertex_string(v) + " is not a vertex of the first polytope");
  require(wi.has_value(), ErrorKind::argument, vertex_string(w) + " is not a vertex of the second polytope");
  const Vertex& pv = p.vertices()[*vi];
  const Vertex& qw = q.vertices()[*wi];
  Vertex target = pairing.value_or(pv);
  {
    Vertex check = target;
    std::sort(check.begin(), check.end());
    require(check == pv, ErrorKind::argument, "facet pairing must be a permutation of the glued vertex");
  }
  const int n = p.dimension();
  std::vector<int> map_q(q.facet_count(), -1);
  for (int i = 0; i < n; ++i) map_q[qw[i]] = target[i];
  int next = p.facet_count();
  for (int f = 0; f < q.facet_count(); ++f)
    if (map_q[f] < 0) map_q[f] = next++;

  std::vector<Vertex> vertices;
  for (size_t i = 0; i < p.vertex_count(); ++i)
    if (i != *vi) vertices.push_back(p.vertices()[i]);
  for (size_t i = 0; i < q.vertex_count(); ++i) {
    if (i == *wi) continue;
    Vertex u;
    for (int f : q.vertices()[i]) u.push_back(map_q[f]);
    vertices.push_back(u);
  }
  return SimplePolytope(n, next, std::move(vertices));
}

SimplePolytope vertex_cut(const SimplePolytope& p, const Vertex& v) {
  const SimplePolytope s = simplex(p.dimension());
  return connected_sum(p, v, s, s.vertices().front());
}

SimplePolytope relabel(const SimplePolytope& p, const std::vector<int>& perm) {
  require(static_cast<int>(perm.size()) == p.facet_count(), ErrorKind::argument, "relabel: wrong permutation size");
  std::vector<Vertex> vertices;
  for (const auto& v : p.vertices()) {
    Vertex u;
    for (int f : v) u.push_back(perm.at(f));
    vertices.push_back(u);
  }
  return SimplePolytope(p.dimension(), p.facet_count(), std::move(vertices));
}

std::string vertex_string(const Vertex& v) {
  std::string out = "{";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i] + 1);
  }
  return out + "}";
}

}  // namespace qtg
