#include "normsurf/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include <json.hpp>

namespace normsurf {

namespace {

void check_weight(int w) {
    if (w < 2)
        throw Error(ErrorCode::NotMinimal,
                    "vertex weight " + std::to_string(w) + " < 2: not a minimal resolution");
}

std::vector<Vertex> chain_vertices(const std::vector<int>& weights, const std::string& stem) {
    std::vector<Vertex> vs;
    vs.reserve(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i)
        vs.push_back({stem + std::to_string(i + 1), weights[i], 0});
    return vs;
}

} // namespace

DualGraph::DualGraph(std::vector<Vertex> vertices, std::vector<std::pair<int, int>> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    const int n = size();
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "empty graph");
    std::set<std::string> seen;
    for (const auto& v : vertices_) {
        if (v.id.empty()) throw Error(ErrorCode::Syntax, "empty vertex id");
        if (!seen.insert(v.id).second)
            throw Error(ErrorCode::Syntax, "duplicate vertex id '" + v.id + "'");
        check_weight(v.weight);
        if (v.genus < 0) throw Error(ErrorCode::Syntax, "negative genus on '" + v.id + "'");
    }
    for (auto& e : edges_) {
        if (e.first > e.second) std::swap(e.first, e.second);
        if (e.first < 0 || e.second >= n)
            throw Error(ErrorCode::Syntax, "edge endpoint out of range");
        if (e.first == e.second)
            throw Error(ErrorCode::Syntax, "self-intersection listed as an edge");
    }
    std::sort(edges_.begin(), edges_.end());

    // connectivity
    std::vector<int> comp(n, -1);
    std::vector<int> stack{0};
    comp[0] = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& e : edges_) {
            int other = -1;
            if (e.first == v) other = e.second;
            else if (e.second == v) other = e.first;
            if (other >= 0 && comp[other] < 0) {
                comp[other] = 0;
                stack.push_back(other);
            }
        }
    }
    for (int i = 0; i < n; ++i)
        if (comp[i] < 0)
            throw Error(ErrorCode::Disconnected,
                        "graph is disconnected at '" + vertices_[i].id + "'");

    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i) rows[i][i] = Rational(-vertices_[i].weight);
    for (const auto& e : edges_) {
        rows[e.first][e.second] += 1;
        rows[e.second][e.first] += 1;
    }
    matrix_ = IntersectionMatrix(std::move(rows));
}

int DualGraph::index_of(const std::string& id) const {
    for (int i = 0; i < size(); ++i)
        if (vertices_[i].id == id) return i;
    throw Error(ErrorCode::InvalidArgument, "unknown curve id '" + id + "'");
}

int DualGraph::multiplicity(int i, int j) const {
    if (i > j) std::swap(i, j);
    return static_cast<int>(std::count(edges_.begin(), edges_.end(), std::make_pair(i, j)));
}

bool DualGraph::is_tree() const {
    // connected by construction
    return static_cast<int>(edges_.size()) == size() - 1;
}

bool DualGraph::has_multi_edge() const {
    for (std::size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i] == edges_[i - 1]) return true;
    return false;
}

bool DualGraph::has_positive_genus() const {
    for (const auto& v : vertices_)
        if (v.genus > 0) return true;
    return false;
}

bool operator==(const DualGraph& a, const DualGraph& b) {
    // label-preserving equality, insensitive to vertex storage order
    auto key = [](const DualGraph& g) {
        std::vector<std::tuple<std::string, int, int>> vs;
        for (const auto& v : g.vertices_) vs.emplace_back(v.id, v.weight, v.genus);
        std::sort(vs.begin(), vs.end());
        std::vector<std::pair<std::string, std::string>> es;
        for (const auto& e : g.edges_) {
            std::string p = g.vertices_[e.first].id;
            std::string q = g.vertices_[e.second].id;
            if (q < p) std::swap(p, q);
            es.emplace_back(p, q);
        }
        std::sort(es.begin(), es.end());
        return std::make_pair(vs, es);
    };
    return key(a) == key(b);
}

DualGraph make_an(const std::vector<int>& weights) {
    if (weights.empty()) throw Error(ErrorCode::InvalidArgument, "A_n chain needs a vertex");
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i)
        edges.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
    return DualGraph(chain_vertices(weights, "C"), std::move(edges));
}

DualGraph make_dn(const std::vector<int>& chain_weights, int w_prime, int w_double_prime) {
    if (chain_weights.empty()) throw Error(ErrorCode::InvalidArgument, "D_n chain needs a vertex");
    std::vector<Vertex> vs = chain_vertices(chain_weights, "C");
    const int fork = static_cast<int>(chain_weights.size()) - 1;
    vs.push_back({"C1'", w_prime, 0});
    vs.push_back({"C1''", w_double_prime, 0});
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 <= fork; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(fork, fork + 1);
    edges.emplace_back(fork, fork + 2);
    return DualGraph(std::move(vs), std::move(edges));
}

DualGraph make_star3(int center_weight, const std::vector<int>& arm_a,
                     const std::vector<int>& arm_b, const std::vector<int>& arm_c) {
    if (arm_a.empty() || arm_b.empty() || arm_c.empty())
        throw Error(ErrorCode::InvalidArgument, "star arm must be nonempty");
    std::vector<Vertex> vs;
    vs.push_back({"C0", center_weight, 0});
    std::vector<std::pair<int, int>> edges;
    auto add_arm = [&](const std::vector<int>& arm, const std::string& suffix) {
        // outer end first; the last vertex of the arm meets the center
        int first = static_cast<int>(vs.size());
        for (std::size_t i = 0; i < arm.size(); ++i)
            vs.push_back({"C" + std::to_string(i + 1) + suffix, arm[i], 0});
        for (std::size_t i = 0; i + 1 < arm.size(); ++i)
            edges.emplace_back(first + static_cast<int>(i), first + static_cast<int>(i) + 1);
        edges.emplace_back(first + static_cast<int>(arm.size()) - 1, 0);
    };
    add_arm(arm_a, "");
    add_arm(arm_b, "'");
    add_arm(arm_c, "''");
    return DualGraph(std::move(vs), std::move(edges));
}

void en_arm_weights(int type_id, std::vector<int>& arm_a, std::vector<int>& arm_b) {
    // Arm lists run from the outer end of the arm toward the center; this
    // orientation is pinned by the closed-form validation in the tables module.
    switch (type_id) {
    case 1: arm_a = {2, 2}; arm_b = {2, 2}; return;
    case 2: arm_a = {2, 2}; arm_b = {3}; return;
    case 3: arm_a = {3}; arm_b = {3}; return;
    case 4: arm_a = {2, 2, 2}; arm_b = {2, 2}; return;
    case 5: arm_a = {2, 2, 2}; arm_b = {3}; return;
    case 6: arm_a = {4}; arm_b = {2, 2}; return;
    case 7: arm_a = {4}; arm_b = {3}; return;
    case 8: arm_a = {2, 2, 2, 2}; arm_b = {2, 2}; return;
    case 9: arm_a = {2, 2, 2, 2}; arm_b = {3}; return;
    case 10: arm_a = {2, 3}; arm_b = {2, 2}; return;
    case 11: arm_a = {2, 3}; arm_b = {3}; return;
    case 12: arm_a = {3, 2}; arm_b = {2, 2}; return;
    case 13: arm_a = {3, 2}; arm_b = {3}; return;
    case 14: arm_a = {5}; arm_b = {2, 2}; return;
    case 15: arm_a = {5}; arm_b = {3}; return;
    default:
        throw Error(ErrorCode::InvalidArgument,
                    "E-type id " + std::to_string(type_id) + " out of range 1..15");
    }
}

DualGraph make_en(const EnTypeDescriptor& desc) {
    if (desc.mu < 2)
        throw Error(ErrorCode::InvalidArgument, "E-type central weight must be >= 2");
    std::vector<int> arm_a, arm_b;
    en_arm_weights(desc.type_id, arm_a, arm_b);
    return make_star3(desc.mu, arm_a, arm_b, {2});
}

DualGraph parse_graph(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Syntax, std::string("graph document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
        throw Error(ErrorCode::Syntax, "graph document needs a 'vertices' array");

    std::vector<Vertex> vs;
    std::map<std::string, int> index;
    for (const auto& jv : doc["vertices"]) {
        if (!jv.is_object() || !jv.contains("id") || !jv["id"].is_string() ||
            !jv.contains("weight") || !jv["weight"].is_number_integer())
            throw Error(ErrorCode::Syntax, "vertex needs a string 'id' and an integer 'weight'");
        Vertex v;
        v.id = jv["id"].get<std::string>();
        v.weight = jv["weight"].get<int>();
        if (jv.contains("genus")) {
            if (!jv["genus"].is_number_integer())
                throw Error(ErrorCode::Syntax, "vertex 'genus' must be an integer");
            v.genus = jv["genus"].get<int>();
        }
        if (index.count(v.id)) throw Error(ErrorCode::Syntax, "duplicate vertex id '" + v.id + "'");
        index[v.id] = static_cast<int>(vs.size());
        vs.push_back(v);
    }
    std::vector<std::pair<int, int>> edges;
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array())
            throw Error(ErrorCode::Syntax, "'edges' must be an array");
        for (const auto& je : doc["edges"]) {
            if (!je.is_array() || je.size() != 2 || !je[0].is_string() || !je[1].is_string())
                throw Error(ErrorCode::Syntax, "edge must be a pair of vertex ids");
            auto a = index.find(je[0].get<std::string>());
            auto b = index.find(je[1].get<std::string>());
            if (a == index.end() || b == index.end())
                throw Error(ErrorCode::Syntax, "edge references an unknown vertex");
            edges.emplace_back(a->second, b->second);
        }
    }
    return DualGraph(std::move(vs), std::move(edges));
}

std::string serialize_graph(const DualGraph& g) {
    std::vector<int> order(g.size());
    for (int i = 0; i < g.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return g.vertex(a).id < g.vertex(b).id;
    });

    nlohmann::json jv = nlohmann::json::array();
    for (int i : order) {
        const Vertex& v = g.vertex(i);
        jv.push_back({{"id", v.id}, {"weight", v.weight}, {"genus", v.genus}});
    }
    std::vector<std::pair<std::string, std::string>> named;
    for (const auto& e : g.edges()) {
        std::string a = g.vertex(e.first).id;
        std::string b = g.vertex(e.second).id;
        if (b < a) std::swap(a, b);
        named.emplace_back(a, b);
    }
    std::sort(named.begin(), named.end());
    nlohmann::json je = nlohmann::json::array();
    for (const auto& e : named) je.push_back({e.first, e.second});

    nlohmann::json doc;
    doc["vertices"] = jv;
    doc["edges"] = je;
    return doc.dump();
}

} // namespace normsurf
