#pragma once

#include <cstdint>
#include <vector>

#include "amod/sim_time.hpp"

namespace amod {

/// Index of a grid intersection, assigned row-major.
using NodeId = std::int32_t;

/// Uniform Manhattan-style grid road network with static link travel times.
///
/// Every link has the same length and is traversed at the same cruising
/// speed, so the travel time between two nodes is the Manhattan hop count
/// times the per-link travel time. Queries are O(1); the explicit link
/// sequence for vehicle movement comes from shortest_path() / next_hop().
///
/// Immutable after construction; safe to share across concurrent runs.
class GridNetwork {
public:
    GridNetwork(int rows, int cols, double link_length_m, double cruise_speed_mps);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int node_count() const { return rows_ * cols_; }
    int link_count() const { return rows_ * (cols_ - 1) + cols_ * (rows_ - 1); }

    double link_length_m() const { return link_length_m_; }
    double cruise_speed_mps() const { return cruise_speed_mps_; }

    /// Time to traverse one link.
    SimTime link_travel_time() const { return link_travel_time_; }

    /// Area spanned by the lattice, used to convert per-km2 demand rates.
    double covered_area_km2() const;

    bool valid(NodeId n) const { return n >= 0 && n < node_count(); }
    NodeId node_at(int row, int col) const { return static_cast<NodeId>(row * cols_ + col); }
    int row_of(NodeId n) const { return static_cast<int>(n) / cols_; }
    int col_of(NodeId n) const { return static_cast<int>(n) % cols_; }

    /// Manhattan hop count between two nodes.
    int hop_distance(NodeId from, NodeId to) const;

    /// Shortest-path travel time between two nodes. Symmetric, zero on the
    /// diagonal, exact multiple of link_travel_time().
    SimTime travel_time(NodeId from, NodeId to) const;

    /// Next node on the shortest path from `from` toward `to`. Ties are broken
    /// deterministically: row moves are taken before column moves.
    /// Precondition: from != to.
    NodeId next_hop(NodeId from, NodeId to) const;

    /// Full node sequence of one shortest path (row moves first). The first
    /// element is `from`, the last is `to`, consecutive nodes are adjacent.
    std::vector<NodeId> shortest_path(NodeId from, NodeId to) const;

private:
    void check_node(NodeId n, const char* what) const;

    int rows_;
    int cols_;
    double link_length_m_;
    double cruise_speed_mps_;
    SimTime link_travel_time_;
};

/// Builds the synthetic grid. Rejects non-positive dimensions or speeds.
GridNetwork build_grid(int rows, int cols, double link_length_m, double cruise_speed_mps);

} // namespace amod
