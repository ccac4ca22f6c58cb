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

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qtg {

/// A vertex of a simple polytope, named by the n facets meeting there.
/// Facets are 0-based internally and kept sorted.
using Vertex = std::vector<int>;

/// Purely combinatorial simple polytope: dimension n, facets 0..m-1 and the
/// vertex-facet incidence. Construction checks that every vertex has n
/// distinct facets, every facet occurs, every ridge lies in exactly two
/// vertices, and the vertex-edge graph is connected.
class SimplePolytope {
 public:
  SimplePolytope(int dimension, int facet_count, std::vector<Vertex> vertices);

  int dimension() const { return n_; }
  int facet_count() const { return m_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  size_t vertex_count() const { return vertices_.size(); }

  /// Index of a vertex in the sorted vertex list.
  std::optional<size_t> find_vertex(const Vertex& v) const;

  /// True when the facets have a common point, i.e. lie on a common vertex.
  bool is_face(const std::vector<int>& facets) const;

  /// Coherent orientation of the boundary sphere of the dual simplicial
  /// polytope: one sign per vertex, +1 on the lexicographically least vertex.
  const std::vector<int>& orientation() const { return orientation_; }

  /// Vertices sharing n-1 facets with the given one.
  std::vector<size_t> neighbours(size_t vertex) const;

  friend bool operator==(const SimplePolytope& a, const SimplePolytope& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.vertices_ == b.vertices_;
  }

 private:
  void compute_orientation();

  int n_;
  int m_;
  std::vector<Vertex> vertices_;
  std::vector<int> orientation_;
};

SimplePolytope simplex(int n);
SimplePolytope cube(int n);
SimplePolytope polygon(int k);

/// Facets of P come first, those of Q are shifted by m(P).
SimplePolytope product(const SimplePolytope& p, const SimplePolytope& q);

/// Glues P minus vertex v to Q minus vertex w. The facets at w are identified
/// with those at v: facet w[i] with pairing[i] (a permutation of v; default is
/// v itself, i.e. index order). Facets of P keep their labels, the remaining
/// facets of Q follow in increasing order.
SimplePolytope connected_sum(const SimplePolytope& p, const Vertex& v, const SimplePolytope& q,
                             const Vertex& w, const std::optional<Vertex>& pairing = std::nullopt);

/// Truncation at a vertex: connected sum with a simplex.
SimplePolytope vertex_cut(const SimplePolytope& p, const Vertex& v);

/// Renames facet i to perm[i].
SimplePolytope relabel(const SimplePolytope& p, const std::vector<int>& perm);

/// 1-based rendering, e.g. "{1,2}".
std::string vertex_string(const Vertex& v);

}  // namespace qtg
