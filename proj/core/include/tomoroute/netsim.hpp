#ifndef TOMOROUTE_NETSIM_HPP_
#define TOMOROUTE_NETSIM_HPP_

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace tomoroute {

using NodeId = int;
using LinkId = int;

struct Link {
  NodeId src = 0;
  NodeId dst = 0;
  double capacity = 0.0;        // C, traffic units
  double service_weight = 0.0;  // w = 1/mu, seconds
  double propagation = 0.0;     // p, seconds
  double congestion_delay = 0.0;  // D, seconds
};

// Per-link traffic, indexed by LinkId.
using LinkLoadMap = std::vector<double>;

struct Demand {
  NodeId src = 0;
  NodeId dst = 0;
  double volume = 0.0;
};

struct PathSet {
  struct Path {
    std::vector<LinkId> links;
    double weight = 0.0;
  };
  NodeId src = 0;
  NodeId dst = 0;
  std::vector<Path> paths;
};

// Directed link graph with precomputed hop distances and shortest-path DAGs.
// Immutable after construction; failure mutation returns a fresh copy, so
// instances are safe to share across threads.
class Topology {
 public:
  // `directed == false` marks a topology built from an undirected link list
  // that was expanded to symmetric directed pairs; failure mutation then
  // removes both directions together.
  Topology(std::vector<Link> links, bool directed);

  // Line format: `src dst capacity [service_weight [propagation]]`,
  // `#` comments and blank lines ignored. Edges are undirected and expand to
  // two directed links. Omitted service_weight defaults to 0.001 s,
  // propagation to 0.001 s; congestion delay is fixed at `congestion_delay`.
  static Topology from_file(const std::string& path,
                            double congestion_delay = 1.0);

  const std::vector<NodeId>& nodes() const { return node_ids_; }
  const std::vector<Link>& links() const { return links_; }
  bool directed() const { return directed_; }
  int n_nodes() const { return static_cast<int>(node_ids_.size()); }
  int n_links() const { return static_cast<int>(links_.size()); }

  // Dense index of a node id (node ids may be sparse in input files).
  int node_index(NodeId id) const;
  NodeId node_id(int index) const { return node_ids_[index]; }

  // Hops from src to dst; -1 when unreachable.
  int hop_distance_by_index(int src_idx, int dst_idx) const {
    return dist_[dst_idx][src_idx];
  }
  int hop_distance(NodeId src, NodeId dst) const {
    return hop_distance_by_index(node_index(src), node_index(dst));
  }

  // Outgoing links of `u` that lie on some minimum-hop path toward `dst`.
  const std::vector<LinkId>& shortest_next_hops(int u_idx, int dst_idx) const {
    return next_hops_[dst_idx][u_idx];
  }

  int link_src_index(LinkId l) const { return link_src_idx_[l]; }
  int link_dst_index(LinkId l) const { return link_dst_idx_[l]; }

  // Strong connectivity (equals undirected connectivity for expanded
  // undirected inputs).
  bool connected() const;

 private:
  void build_indexes();

  std::vector<Link> links_;
  bool directed_ = false;
  std::vector<NodeId> node_ids_;  // sorted original ids
  std::unordered_map<NodeId, int> index_of_;
  std::vector<int> link_src_idx_, link_dst_idx_;
  std::vector<std::vector<LinkId>> out_links_;  // per node index
  // dist_[t][u] = hops u -> t; next_hops_[t][u] = DAG links at u toward t.
  std::vector<std::vector<int>> dist_;
  std::vector<std::vector<std::vector<LinkId>>> next_hops_;
};

// Queueing + propagation delay of one link under the given load:
// min(w / (1 - load/C), D) + p when load < C, otherwise D + p.
double link_delay(double load, const Link& link);

// Same shape below a knee at `knee_fraction * C`, then continues linearly
// with the slope at the knee instead of clamping at D. Used only by the
// full-information optimizer on congested instances where the clamped model
// is flat and carries no gradient.
double link_delay_smoothed(double load, const Link& link,
                           double knee_fraction = 0.99);

// All minimum-hop paths with recursive per-next-hop equal-split weights.
// Throws RoutingError when dst is unreachable from src.
PathSet ecmp_paths(const Topology& topo, NodeId src, NodeId dst);

// Weighted path delay: sum over paths of weight * sum of link delays.
double end_to_end_delay(const PathSet& pathset, const LinkLoadMap& loads,
                        const Topology& topo);

// Equivalent to end_to_end_delay(ecmp_paths(src,dst), ...) but computed on
// the shortest-path DAG in O(E); the hot path for evaluation.
double pair_delay(const Topology& topo, const LinkLoadMap& loads, int src_idx,
                  int dst_idx, bool smoothed = false);

// Adds `volume` routed from src to dst over the ECMP DAG into `loads`.
void accumulate_pair_load(const Topology& topo, int src_idx, int dst_idx,
                          double volume, LinkLoadMap& loads);

LinkLoadMap accumulate_loads(const std::vector<Demand>& demands,
                             const Topology& topo);

// Removes one uniformly chosen link (both directions for undirected input)
// whose removal keeps the graph connected. Throws MutationError when no such
// link exists.
Topology fail_random_link(const Topology& topo, std::uint64_t seed);

struct RandomTopologyParams {
  double capacity_low = 5.0;
  double capacity_high = 20.0;
  double service_weight = 0.001;
  double propagation_low = 0.0005;
  double propagation_high = 0.002;
  double congestion_delay = 1.0;
};

// Random connected undirected topology: spanning tree plus `extra_links`
// additional distinct edges, parameters drawn per edge.
Topology make_random_topology(int n_nodes, int extra_links, std::uint64_t seed,
                              const RandomTopologyParams& params = {});

// Writes the file format accepted by Topology::from_file (one line per
// undirected edge).
void save_topology(const Topology& topo, const std::string& path);

}  // namespace tomoroute

#endif  // TOMOROUTE_NETSIM_HPP_
