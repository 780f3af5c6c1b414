#pragma once

#include <functional>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "normsurf/cycles.hpp"
#include "normsurf/smallsolve.hpp"

namespace normsurf {

enum class Shape { Chain, Fork, Star3 };

const char* shape_name(Shape s);

struct EnumerationSpec {
    int max_vertices = 8; // inclusive upper bound on vertex count
    int max_weight = 6;   // inclusive upper bound on weights
    std::set<Shape> shapes = {Shape::Chain, Shape::Fork, Shape::Star3};
};

/// One weighted graph of a given shape, in canonical orientation: chains are
/// lexicographically at most their reversal, fork leaves are sorted, star
/// arms are sorted by (length, weights). Arm/chain weight lists run from the
/// outer end inward.
struct GraphDescriptor {
    Shape shape = Shape::Chain;
    std::vector<int> chain;             // chain weights, or the fork chain part
    int leaf1 = 0, leaf2 = 0;           // fork leaves, leaf1 <= leaf2
    int center = 0;                     // star center weight
    std::vector<std::vector<int>> arms; // star arms, sorted

    int vertex_count() const;
    std::string weights_text() const; // "2,3" / "2,3;2,2" / "3;2,2;3;2"
    DualGraph realize() const;
    smallsolve::SmallGraph realize_small() const;
    bool all_weights_two() const;
};

/// Streams every graph of the requested shapes, deduplicated under the
/// shape's symmetry, in a deterministic order (shape, then size, then
/// lexicographic).
void enumerate(const EnumerationSpec& spec,
               const std::function<void(const GraphDescriptor&)>& fn);

std::vector<GraphDescriptor> enumerate_all(const EnumerationSpec& spec);

unsigned long long enumeration_count(const EnumerationSpec& spec);

struct CertReport {
    unsigned long long total = 0;
    unsigned long long excluded_not_negdef = 0;
    unsigned long long rational_double_points = 0;
    unsigned long long log_terminal = 0;
    unsigned long long not_log_terminal = 0;
    unsigned long long delta_two = 0; // equality cases of Proposition 1
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Certifies over the whole family: every negative definite graph that is a
/// rational double point or log terminal has delta_x <= 2, with equality
/// exactly on the all-weight-2 graphs. jobs > 1 partitions the enumeration
/// by strata; the merged report does not depend on jobs.
CertReport certify_prop1(const EnumerationSpec& spec, int jobs = 1);

/// CSV: shape,weights,class,delta_x,fundcycle — one row per enumerated graph
/// (non-contractible graphs keep their row with "-" placeholders).
void write_csv(const EnumerationSpec& spec, std::ostream& os);

} // namespace normsurf
