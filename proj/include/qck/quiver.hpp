#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qck/qtorus.hpp"

namespace qck {

// Barycentric weights at the three corners of a triangle, summing to m.
using Bary = std::array<int, 3>;

// ---------------------------------------------------------------- triangulated surfaces

// Ideal triangulation with m-subdivision. Quiver vertices are edge points and triangle interior points.
struct Surface {
  struct Edge {
    int u = 0, v = 0;
    bool boundary = false;
    std::string name;
  };
  struct Tri {
    std::array<int, 3> corner{};  // marked points, clockwise
    std::array<int, 3> side{};    // edge ids of sides (c0 c1), (c1 c2), (c2 c0)
  };
  // {0, edge, t, 0}: point on edge at distance t from its u end; {1, tri, w0, w1}: interior point.
  using Key = std::array<int, 4>;

  int m = 0;
  std::vector<Edge> edges;
  std::vector<Tri> tris;
  std::map<Key, size_t> vertex;
  size_t nverts = 0;

  // Key of the point with stored-corner weights w in triangle t; throws on corners.
  Key key(int t, const Bary& w) const;
  size_t at(int t, const Bary& w) const { return vertex.at(key(t, w)); }
  int tri_with_edge(int e, int skip = -1) const;
};

struct TriangleQuiver {
  int m = 0;
  Seed seed;
  // Frozen vertices on sides AB, BC, CA, each ordered along the clockwise boundary.
  std::array<std::vector<size_t>, 3> boundary;
  // Weights (A, B, C) of each vertex; corners A, B, C are clockwise.
  std::vector<Bary> coords;
  Surface surface;
  size_t index(const Bary& w) const;
};

// Vertices numbered by descending A-weight, then descending B-weight.
TriangleQuiver build_triangle(int m);

struct AmalgamationMap {
  Seed left;
  Seed right;
  std::vector<std::pair<size_t, size_t>> glue;
  Seed result;
  // For each result vertex: (left index or -1, right index or -1).
  std::vector<std::pair<long, long>> embed;
  std::vector<long> left_to_result;
  std::vector<long> right_to_result;
};

// Result numbering: left vertices in order, then unglued right vertices in order.
AmalgamationMap amalgamate(const Seed& left, const Seed& right, const std::vector<std::pair<size_t, size_t>>& glue,
                           bool unfreeze);

// Quiver obtained by gluing the per-triangle quivers (dashed halves cancel on interior edges).
Seed surface_seed(const Surface& s);

struct MutationSchedule {
  // flips[f][step] lists vertex indices mutated in that rectangle-step, ascending.
  std::vector<std::vector<std::vector<size_t>>> flips;
  std::vector<size_t> steps() const;
  size_t length() const { return steps().size(); }
};

struct FlipResult {
  Surface after;
  std::vector<std::vector<size_t>> steps;
  // 4-gon position (p, r) of every vertex involved, for diagnostics.
  std::map<size_t, std::pair<int, int>> position;
};

FlipResult flip_edge(const Surface& s, int edge);

struct QuadGon {
  int m = 0;
  Surface surface;
  Seed seed;
  int diagonal = 0;
  std::vector<std::pair<int, int>> pos;  // (p, r) for each vertex
};

// Two triangles glued along one side, vertices numbered column by column.
QuadGon build_quad(int m);
MutationSchedule flip_schedule(const QuadGon& q);

// ---------------------------------------------------------------- D_n and Z_n

struct DnQuiver {
  int n = 0;
  int m = 0;
  Seed seed;
  std::map<std::pair<int, int>, size_t> V;
  std::map<std::pair<int, int>, size_t> L;
  // (triangle 0 = left / 1 = right, weights) of each vertex; glued vertices use the left triangle.
  std::vector<std::pair<int, Bary>> geom;
  size_t v(int i, int r) const { return V.at({i, r}); }
  size_t lam(int i, int r) const { return L.at({i, r}); }
};

DnQuiver build_dn(int n);
int theta(int n, int i);

struct ZnQuiver {
  int n = 0;
  int m = 0;
  Seed seed;
  DnQuiver d;
  AmalgamationMap amalg;
  // Z_n vertex of the left / right copy of each D_n vertex.
  std::vector<size_t> left, right;
  std::vector<size_t> sigma;
  Surface surface;
};

ZnQuiver build_zn(int n);
MutationSchedule half_dehn_schedule(const ZnQuiver& z);
// Surfaces after each of the four flips.
std::vector<Surface> half_dehn_surfaces(const ZnQuiver& z);
// sigma[v] is the image of vertex v; cycles as computed from the permutation-cycle rule.
std::vector<size_t> compute_sigma(const ZnQuiver& z);
std::vector<std::vector<size_t>> sigma_cycles(const std::vector<size_t>& sigma);
Seed apply_sigma(const ZnQuiver& z, const Seed& s);
// True when eps_t[p(u)][p(v)] = eps_s[u][v] for all u, v and frozen sets correspond.
bool is_isomorphism(const Seed& s, const Seed& t, const std::vector<size_t>& p);
// All isomorphisms s -> t that fix frozen vertices pointwise (stops after `limit`).
std::vector<std::vector<size_t>> frozen_fixing_isomorphisms(const Seed& s, const Seed& t, size_t limit = 16);

// Vertex orders reproducing the figure numberings: new vertex k is internal vertex order[k].
std::vector<size_t> figure_order_dn(const DnQuiver& d);
std::vector<size_t> figure_order_zn(const ZnQuiver& z);

// Paths used by the embedding and the coproduct.
std::vector<size_t> vv_path(const ZnQuiver& z, int i);
std::vector<size_t> lambda_lambda_path(const ZnQuiver& z, int i);
// Left Lambda_{theta(i), r} for r = theta(i) .. -theta(i), then right V_{i, r} for r = 1-i .. i.
std::vector<size_t> lambda_v_path(const ZnQuiver& z, int i);

std::string to_dot(const Seed& s, const std::string& name);

}  // namespace qck
