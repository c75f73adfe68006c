#pragma once

#include <optional>
#include <string>
#include <vector>

#include "triolab/group.hpp"
#include "triolab/incidence.hpp"

namespace triolab {

// Simple graph on at most 64 vertices; adjacency rows are masks.
struct Graph {
  std::string name;
  int n = 0;
  std::vector<Mask> adj;
  std::vector<std::pair<int, int>> edges;  // u < v, sorted
  int edge_index(int u, int v) const;      // -1 if absent
  int degree(int v) const { return popcount(adj[v]); }
};

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges, std::string name = "");
// Tetrahedron, Cube, Octahedron, K33, K4, K5, K6, Prism, Petersen, Dodecahedron,
// Icosahedron; also C<n> for cycles and L(<name>) for line graphs.
Graph named_graph(const std::string& name);
std::vector<std::string> named_graph_list();
Graph cycle_graph(int n);
Graph line_graph(const Graph& g);

bool is_connected(const Graph& g);
std::optional<int> regular_degree(const Graph& g);
int girth(const Graph& g);  // 0 when acyclic

using Perm = std::vector<int>;
std::vector<Perm> graph_automorphisms(const Graph& g);
std::optional<Perm> graph_isomorphism(const Graph& a, const Graph& b);

struct AutInfo {
  long order = 0;
  bool vertex_transitive = false, edge_transitive = false, arc_transitive = false;
  long vertex_stabilizer = 0, edge_stabilizer = 0;
};
AutInfo automorphism_info(const Graph& g, const std::vector<Perm>& aut);
FiniteGroup permutation_group(const std::vector<Perm>& perms, const std::string& label = "");

// Derived objects: vertices, edges, paths and cycles with m vertices, faces.
struct GraphObject {
  std::vector<int> seq;  // canonical vertex sequence
  Mask vmask = 0, emask = 0;
  auto operator<=>(const GraphObject&) const = default;
};
std::vector<GraphObject> vertex_objects(const Graph& g);
std::vector<GraphObject> edge_objects(const Graph& g);
std::vector<GraphObject> paths(const Graph& g, int m);
std::vector<GraphObject> cycles(const Graph& g, int m);
// Face sets for the six embeddable graphs (one for spherical maps, two for
// the projective ones); empty when the graph has no catalogued embedding.
std::vector<std::vector<GraphObject>> face_sets(const Graph& g);
std::vector<GraphObject> objects(const Graph& g, const std::string& op);  // V, E, P<m>, C<m>, F

// Edge cuts.
int cut_size(const Graph& g, Mask a);
enum class CutOutcome { Large, Singleton, Edge, PathInCycle, TwoPath, TriangleLC, ShortestCycle, None };
const char* cut_outcome_name(CutOutcome o);
bool in_lc(const Graph& g);  // line graph of a cubic graph with girth >= 4
// Requires g connected, vertex- and edge-transitive; a nonempty, |a| <= |V|/2.
CutOutcome cut_classify(const Graph& g, Mask a);
std::vector<CutOutcome> cut_outcomes_all(const Graph& g, Mask a);  // every outcome that matches
struct SmallCut {
  Mask set = 0;
  int cut = 0;
  CutOutcome outcome = CutOutcome::None;
};
std::vector<SmallCut> enumerate_small_cuts(const Graph& g, int workers = 1);

struct Equitable {
  bool regular = false;
  int degree = 0, girth = 0;
  int s = -1;  // -1 when not equitable
  std::pair<int, int> witness{-1, -1};  // two edges with different counts
};
Equitable is_equitable(const Graph& g);

// Incidence geometries on a graph.  `ops` name the ground sets; adjacent
// ground sets in a video A ~ B ~ C are related by containment, and A, C by the
// complement rule.  The action is the subgroup of Aut(g) preserving every
// object family used.
struct GraphGeometry {
  Chorus chorus;
  std::vector<std::vector<GraphObject>> points;
  std::vector<Perm> action;  // vertex permutations generating the action
};
GraphGeometry graph_duet(const Graph& g, const std::string& x, const std::string& y);
GraphGeometry graph_video(const Graph& g, const std::string& a, const std::string& b, const std::string& c);

enum class VideoKind { EVE, P3VE, P3EV, CubeOct_VEF, Dodec_FVE, DodecIcos_VEF, Icos_FVE, Petersen_C5EV, PetersenK6_FEV, K6_C3EV };
const char* video_kind_name(VideoKind k);
std::vector<VideoKind> all_video_kinds();
bool is_standard(VideoKind k);
// Throws on bound violations or when the graph does not fit the kind.
GraphGeometry build_video(VideoKind kind, const Graph& g);
// The exceptional kinds on their fixed graphs.
GraphGeometry build_exceptional_video(VideoKind kind);

}  // namespace triolab
