#pragma once

#include <string>
#include <vector>

#include "gencol/graph.hpp"
#include "gencol/order.hpp"
#include "gencol/rational.hpp"

namespace gencol {

struct Cluster {
  Vertex center = -1;
  std::vector<Vertex> members;  // sorted, non-empty, contains center
};

struct Cover {
  std::vector<Cluster> clusters;
  int r = 0;  // the neighbourhood radius parameter the cover is meant for
};

// Cover from a weak-reachability order: the cluster of w collects every
// vertex that weakly 2r-reaches w. Each vertex then lies in exactly
// |WReach_2r| clusters, so the cover degree is bounded by the weak
// colouring value of the order.
Cover build_cover(const Graph& g, const LinearOrder& order, int r);

struct CoverReport {
  bool is_cover = false;       // every N_r(v) inside some cluster
  bool clusters_connected = false;
  int max_radius = -1;         // max over clusters of the induced-subgraph radius
  int max_degree = 0;          // max number of clusters through one vertex
  std::string violation;       // first problem found, empty when clean
};

CoverReport validate_cover(const Graph& g, const Cover& cover, int r);

// Projection through an exact s-subdivision: keep only the original
// vertices of h in every cluster. Empty projections are dropped; centers are
// re-chosen as the id-smallest eccentricity minimiser of the projected
// cluster. g_sub must equal subdivide(h, s), where every host edge turns
// into a path of length s+1. A cover built for radius parameter r*(s+1) on
// g_sub therefore projects to an r-cover of h, exactly:
// N_r^h(v) = N_{r(s+1)}^{g_sub}(v) intersected with V(h).
Cover project_cover(const Graph& g_sub, const Graph& h, int s, const Cover& cover);

// Edge density of g, the degree floor for 1-neighbourhood covers of radius
// at most k on graphs of girth > k. Requires girth(g) >= k+1.
Rational girth_degree_floor(const Graph& g, int k);

}  // namespace gencol
