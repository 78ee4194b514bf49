#include "amod/grid_network.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace amod {

GridNetwork::GridNetwork(int rows, int cols, double link_length_m, double cruise_speed_mps)
    : rows_(rows), cols_(cols), link_length_m_(link_length_m), cruise_speed_mps_(cruise_speed_mps) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("GridNetwork: rows and cols must be >= 1, got " +
                                    std::to_string(rows) + "x" + std::to_string(cols));
    if (!(link_length_m > 0.0))
        throw std::invalid_argument("GridNetwork: link_length_m must be > 0");
    if (!(cruise_speed_mps > 0.0))
        throw std::invalid_argument("GridNetwork: cruise_speed_mps must be > 0");
    link_travel_time_ = from_seconds(link_length_m / cruise_speed_mps);
}

double GridNetwork::covered_area_km2() const {
    const double side_km = link_length_m_ / 1000.0;
    return (rows_ - 1) * (cols_ - 1) * side_km * side_km;
}

void GridNetwork::check_node(NodeId n, const char* what) const {
    if (!valid(n))
        throw std::invalid_argument(std::string(what) + ": invalid node id " + std::to_string(n));
}

int GridNetwork::hop_distance(NodeId from, NodeId to) const {
    check_node(from, "hop_distance");
    check_node(to, "hop_distance");
    return std::abs(row_of(from) - row_of(to)) + std::abs(col_of(from) - col_of(to));
}

SimTime GridNetwork::travel_time(NodeId from, NodeId to) const {
    return static_cast<SimTime>(hop_distance(from, to)) * link_travel_time_;
}

NodeId GridNetwork::next_hop(NodeId from, NodeId to) const {
    check_node(from, "next_hop");
    check_node(to, "next_hop");
    if (from == to)
        throw std::invalid_argument("next_hop: from == to");
    const int r = row_of(from), c = col_of(from);
    const int tr = row_of(to), tc = col_of(to);
    if (r != tr)
        return node_at(r + (tr > r ? 1 : -1), c);
    return node_at(r, c + (tc > c ? 1 : -1));
}

std::vector<NodeId> GridNetwork::shortest_path(NodeId from, NodeId to) const {
    check_node(from, "shortest_path");
    check_node(to, "shortest_path");
    std::vector<NodeId> path;
    path.reserve(static_cast<size_t>(hop_distance(from, to)) + 1);
    path.push_back(from);
    NodeId cur = from;
    while (cur != to) {
        cur = next_hop(cur, to);
        path.push_back(cur);
    }
    return path;
}

GridNetwork build_grid(int rows, int cols, double link_length_m, double cruise_speed_mps) {
    return GridNetwork(rows, cols, link_length_m, cruise_speed_mps);
}

} // namespace amod
