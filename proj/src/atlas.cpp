#include "normsurf/atlas.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <thread>

namespace normsurf {

const char* shape_name(Shape s) {
    switch (s) {
    case Shape::Chain: return "chain";
    case Shape::Fork: return "fork";
    case Shape::Star3: return "star3";
    }
    return "unknown";
}

namespace {

void join_weights(std::ostringstream& os, const std::vector<int>& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ',';
        os << w[i];
    }
}

// next weight tuple in lexicographic order, entries in [2, maxw]
bool next_tuple(std::vector<int>& t, int maxw) {
    for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
        if (t[i] < maxw) {
            ++t[i];
            std::fill(t.begin() + i + 1, t.end(), 2);
            return true;
        }
    }
    return false;
}

bool chain_canonical(const std::vector<int>& t) {
    return !std::lexicographical_compare(t.rbegin(), t.rend(), t.begin(), t.end());
}

std::vector<std::vector<int>> arms_of_length(int len, int maxw) {
    std::vector<std::vector<int>> out;
    std::vector<int> t(len, 2);
    do {
        out.push_back(t);
    } while (next_tuple(t, maxw));
    return out;
}

} // namespace

int GraphDescriptor::vertex_count() const {
    switch (shape) {
    case Shape::Chain: return static_cast<int>(chain.size());
    case Shape::Fork: return static_cast<int>(chain.size()) + 2;
    case Shape::Star3: {
        int n = 1;
        for (const auto& a : arms) n += static_cast<int>(a.size());
        return n;
    }
    }
    return 0;
}

std::string GraphDescriptor::weights_text() const {
    std::ostringstream os;
    switch (shape) {
    case Shape::Chain:
        join_weights(os, chain);
        break;
    case Shape::Fork:
        join_weights(os, chain);
        os << ';' << leaf1 << ',' << leaf2;
        break;
    case Shape::Star3:
        os << center;
        for (const auto& a : arms) {
            os << ';';
            join_weights(os, a);
        }
        break;
    }
    return os.str();
}

DualGraph GraphDescriptor::realize() const {
    switch (shape) {
    case Shape::Chain: return make_an(chain);
    case Shape::Fork: return make_dn(chain, leaf1, leaf2);
    case Shape::Star3: return make_star3(center, arms[0], arms[1], arms[2]);
    }
    throw Error(ErrorCode::Internal, "bad shape");
}

smallsolve::SmallGraph GraphDescriptor::realize_small() const {
    smallsolve::SmallGraph g;
    if (vertex_count() > smallsolve::kMaxVertices) return g; // inapplicable
    auto add_edge = [&](int a, int b) {
        g.edge[g.edge_count++] = {static_cast<std::int8_t>(a), static_cast<std::int8_t>(b)};
    };
    switch (shape) {
    case Shape::Chain:
        g.n = static_cast<int>(chain.size());
        for (int i = 0; i < g.n; ++i) g.weight[i] = chain[i];
        for (int i = 0; i + 1 < g.n; ++i) add_edge(i, i + 1);
        break;
    case Shape::Fork: {
        int k = static_cast<int>(chain.size());
        g.n = k + 2;
        for (int i = 0; i < k; ++i) g.weight[i] = chain[i];
        g.weight[k] = leaf1;
        g.weight[k + 1] = leaf2;
        for (int i = 0; i + 1 < k; ++i) add_edge(i, i + 1);
        add_edge(k - 1, k);
        add_edge(k - 1, k + 1);
        break;
    }
    case Shape::Star3: {
        g.n = vertex_count();
        g.weight[0] = center;
        int at = 1;
        for (const auto& arm : arms) {
            for (std::size_t i = 0; i < arm.size(); ++i) {
                g.weight[at + static_cast<int>(i)] = arm[i];
                if (i + 1 < arm.size())
                    add_edge(at + static_cast<int>(i), at + static_cast<int>(i) + 1);
            }
            add_edge(at + static_cast<int>(arm.size()) - 1, 0);
            at += static_cast<int>(arm.size());
        }
        break;
    }
    }
    return g;
}

bool GraphDescriptor::all_weights_two() const {
    auto two = [](const std::vector<int>& v) {
        return std::all_of(v.begin(), v.end(), [](int w) { return w == 2; });
    };
    switch (shape) {
    case Shape::Chain: return two(chain);
    case Shape::Fork: return two(chain) && leaf1 == 2 && leaf2 == 2;
    case Shape::Star3:
        if (center != 2) return false;
        for (const auto& a : arms)
            if (!two(a)) return false;
        return true;
    }
    return false;
}

namespace {

void enumerate_range(const EnumerationSpec& spec, int n_lo, int n_hi,
                     const std::function<void(const GraphDescriptor&)>& fn) {
    const int W = spec.max_weight;

    if (spec.shapes.count(Shape::Chain)) {
        for (int n = std::max(1, n_lo); n <= n_hi; ++n) {
            std::vector<int> t(n, 2);
            do {
                if (!chain_canonical(t)) continue;
                GraphDescriptor d;
                d.shape = Shape::Chain;
                d.chain = t;
                fn(d);
            } while (next_tuple(t, W));
        }
    }
    if (spec.shapes.count(Shape::Fork)) {
        for (int n = std::max(3, n_lo); n <= n_hi; ++n) {
            int k = n - 2;
            std::vector<int> t(k, 2);
            do {
                for (int l1 = 2; l1 <= W; ++l1) {
                    for (int l2 = l1; l2 <= W; ++l2) {
                        GraphDescriptor d;
                        d.shape = Shape::Fork;
                        d.chain = t;
                        d.leaf1 = l1;
                        d.leaf2 = l2;
                        fn(d);
                    }
                }
            } while (next_tuple(t, W));
        }
    }
    if (spec.shapes.count(Shape::Star3)) {
        // arms grouped by length, each group lexicographically ordered
        std::vector<std::vector<std::vector<int>>> arms_by_len(1);
        for (int len = 1; len <= n_hi - 3; ++len)
            arms_by_len.push_back(arms_of_length(len, W));
        for (int n = std::max(4, n_lo); n <= n_hi; ++n) {
            int total = n - 1;
            for (int l1 = 1; 3 * l1 <= total; ++l1) {
                for (int l2 = l1; l1 + 2 * l2 <= total; ++l2) {
                    int l3 = total - l1 - l2;
                    const auto& as = arms_by_len[l1];
                    const auto& bs = arms_by_len[l2];
                    const auto& cs = arms_by_len[l3];
                    for (std::size_t ia = 0; ia < as.size(); ++ia) {
                        std::size_t ib0 = (l1 == l2) ? ia : 0;
                        for (std::size_t ib = ib0; ib < bs.size(); ++ib) {
                            std::size_t ic0 = (l2 == l3) ? ib : 0;
                            for (std::size_t ic = ic0; ic < cs.size(); ++ic) {
                                for (int c = 2; c <= W; ++c) {
                                    GraphDescriptor d;
                                    d.shape = Shape::Star3;
                                    d.center = c;
                                    d.arms = {as[ia], bs[ib], cs[ic]};
                                    fn(d);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

} // namespace

void enumerate(const EnumerationSpec& spec,
               const std::function<void(const GraphDescriptor&)>& fn) {
    if (spec.max_vertices < 1 || spec.max_weight < 2)
        throw Error(ErrorCode::InvalidArgument, "enumeration bounds out of range");
    enumerate_range(spec, 1, spec.max_vertices, fn);
}

std::vector<GraphDescriptor> enumerate_all(const EnumerationSpec& spec) {
    std::vector<GraphDescriptor> out;
    enumerate(spec, [&](const GraphDescriptor& d) { out.push_back(d); });
    return out;
}

unsigned long long enumeration_count(const EnumerationSpec& spec) {
    unsigned long long n = 0;
    enumerate(spec, [&](const GraphDescriptor&) { ++n; });
    return n;
}

namespace {

struct ClassifiedRow {
    SingularityKind kind = SingularityKind::NotLogTerminal;
    bool contractible = false;
    std::string delta; // "p/q"
    std::string fundcycle;
};

ClassifiedRow classify_descriptor(const GraphDescriptor& d) {
    ClassifiedRow row;
    smallsolve::SmallGraph sg = d.realize_small();
    if (smallsolve::applicable(sg)) {
        smallsolve::SmallResult r = smallsolve::classify_small(sg);
        row.contractible = r.contractible;
        if (!r.contractible) return row;
        row.kind = r.kind;
        row.delta = std::to_string(r.delta_num);
        if (r.delta_den != 1) row.delta += "/" + std::to_string(r.delta_den);
        std::ostringstream os;
        for (int i = 0; i < sg.n; ++i) {
            if (i) os << ',';
            os << r.z[i];
        }
        row.fundcycle = os.str();
        return row;
    }
    DualGraph g = d.realize();
    if (!is_negative_definite(g.intersection_matrix())) return row;
    row.contractible = true;
    SingularityClass s = classify(g);
    row.kind = s.kind;
    row.delta = s.delta_x.str();
    std::ostringstream os;
    for (int i = 0; i < g.size(); ++i) {
        if (i) os << ',';
        os << s.fundamental_cycle.coeffs[i].str();
    }
    row.fundcycle = os.str();
    return row;
}

void certify_one(const GraphDescriptor& d, CertReport& report) {
    ++report.total;
    ClassifiedRow row = classify_descriptor(d);
    if (!row.contractible) {
        ++report.excluded_not_negdef;
        return;
    }
    const bool all_two = d.all_weights_two();
    switch (row.kind) {
    case SingularityKind::RationalDoublePoint: ++report.rational_double_points; break;
    case SingularityKind::LogTerminal: ++report.log_terminal; break;
    case SingularityKind::NotLogTerminal: ++report.not_log_terminal; break;
    case SingularityKind::Smooth: break;
    }
    if (row.kind == SingularityKind::NotLogTerminal) return;

    const bool delta_is_two = row.delta == "2";
    if (delta_is_two) ++report.delta_two;
    Rational delta = Rational::parse(row.delta);
    std::string tag = std::string(shape_name(d.shape)) + " " + d.weights_text();
    if (delta > Rational(2))
        report.violations.push_back(tag + ": delta_x = " + row.delta + " exceeds 2");
    if (delta_is_two != all_two)
        report.violations.push_back(tag + ": delta_x = " + row.delta +
                                    (all_two ? " on an all-weight-2 graph"
                                             : " reaches 2 off the all-weight-2 locus"));
}

} // namespace

CertReport certify_prop1(const EnumerationSpec& spec, int jobs) {
    if (jobs < 1) throw Error(ErrorCode::InvalidArgument, "jobs must be positive");

    if (spec.max_vertices < 1 || spec.max_weight < 2)
        throw Error(ErrorCode::InvalidArgument, "enumeration bounds out of range");

    // strata: (shape, exact vertex count), certified independently and merged in order
    struct Stratum {
        EnumerationSpec sub;
        int n;
    };
    std::vector<Stratum> strata;
    for (Shape sh : {Shape::Chain, Shape::Fork, Shape::Star3}) {
        if (!spec.shapes.count(sh)) continue;
        for (int n = 1; n <= spec.max_vertices; ++n) {
            EnumerationSpec sub = spec;
            sub.shapes = {sh};
            strata.push_back({sub, n});
        }
    }
    std::vector<CertReport> partial(strata.size());
    auto run_stratum = [&](std::size_t idx) {
        enumerate_range(strata[idx].sub, strata[idx].n, strata[idx].n,
                        [&](const GraphDescriptor& d) { certify_one(d, partial[idx]); });
    };

    if (jobs == 1) {
        for (std::size_t i = 0; i < strata.size(); ++i) run_stratum(i);
    } else {
        std::vector<std::thread> workers;
        for (int w = 0; w < jobs; ++w) {
            workers.emplace_back([&, w]() {
                for (std::size_t i = static_cast<std::size_t>(w); i < strata.size();
                     i += static_cast<std::size_t>(jobs))
                    run_stratum(i);
            });
        }
        for (auto& t : workers) t.join();
    }

    CertReport merged;
    for (const auto& r : partial) {
        merged.total += r.total;
        merged.excluded_not_negdef += r.excluded_not_negdef;
        merged.rational_double_points += r.rational_double_points;
        merged.log_terminal += r.log_terminal;
        merged.not_log_terminal += r.not_log_terminal;
        merged.delta_two += r.delta_two;
        merged.violations.insert(merged.violations.end(), r.violations.begin(),
                                 r.violations.end());
    }
    return merged;
}

void write_csv(const EnumerationSpec& spec, std::ostream& os) {
    os << "shape,weights,class,delta_x,fundcycle\n";
    enumerate(spec, [&](const GraphDescriptor& d) {
        ClassifiedRow row = classify_descriptor(d);
        os << shape_name(d.shape) << ",\"" << d.weights_text() << "\",";
        if (!row.contractible) {
            os << "NotNegativeDefinite,-,-\n";
            return;
        }
        os << kind_name(row.kind) << ',' << row.delta << ",\"" << row.fundcycle << "\"\n";
    });
}

} // namespace normsurf
