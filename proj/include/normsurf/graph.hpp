#pragma once

#include <string>
#include <utility>
#include <vector>

#include "normsurf/lattice.hpp"

namespace normsurf {

struct Vertex {
    std::string id;
    int weight = 2; // w = -C^2, at least 2 on a minimal resolution
    int genus = 0;
};

/// Weighted dual graph of the exceptional curves of a minimal resolution.
/// Edges are stored as index pairs (i < j); a repeated pair raises the
/// intersection multiplicity. The graph must be connected (one singular
/// point) and every weight must be >= 2.
class DualGraph {
public:
    DualGraph(std::vector<Vertex> vertices, std::vector<std::pair<int, int>> edges);

    int size() const { return static_cast<int>(vertices_.size()); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const Vertex& vertex(int i) const { return vertices_[i]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    int index_of(const std::string& id) const; // throws if unknown
    int multiplicity(int i, int j) const;

    const IntersectionMatrix& intersection_matrix() const { return matrix_; }

    bool is_tree() const;
    bool has_multi_edge() const;
    bool has_positive_genus() const;

    friend bool operator==(const DualGraph& a, const DualGraph& b);

private:
    std::vector<Vertex> vertices_;
    std::vector<std::pair<int, int>> edges_; // sorted, i < j, repeats allowed
    IntersectionMatrix matrix_;
};

/// Chain graph C_1 - C_2 - ... - C_n with the given weights.
DualGraph make_an(const std::vector<int>& weights);

/// Chain C_1..C_k plus two leaves C_1', C_1'' attached to the last chain
/// vertex (the D_n shape when k = n - 2).
DualGraph make_dn(const std::vector<int>& chain_weights, int w_prime, int w_double_prime);

/// Star with a central vertex and three arms. Arm weight lists run from the
/// outer end of the arm inward; the last entry of each list is adjacent to
/// the center. Ids: center "C0", arms "C1..", "C1'..", "C1''..".
DualGraph make_star3(int center_weight, const std::vector<int>& arm_a,
                     const std::vector<int>& arm_b, const std::vector<int>& arm_c);

struct EnTypeDescriptor {
    int type_id = 1; // 1..15
    int mu = 3;      // central weight, >= 2
};

/// Arm weight lists (outer end first) of the fifteen E-type families.
/// The third arm is always a single weight-2 curve.
void en_arm_weights(int type_id, std::vector<int>& arm_a, std::vector<int>& arm_b);

/// Star realization of an E-type family member: center weight mu, arms from
/// en_arm_weights, third arm a single (-2)-curve.
DualGraph make_en(const EnTypeDescriptor& desc);

/// Parses the JSON graph document
///   {"vertices":[{"id":"C1","weight":2,"genus":0},...],"edges":[["C1","C2"],...]}
/// Distinct failures carry distinct error codes: Syntax, NotMinimal,
/// Disconnected.
DualGraph parse_graph(const std::string& text);

/// Canonical serialization: vertices sorted by id, edges sorted
/// lexicographically, multiplicity rendered as pair repetition.
std::string serialize_graph(const DualGraph& g);

} // namespace normsurf
