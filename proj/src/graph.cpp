#include "dsg/graph.hpp"

#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace dsg {

DirectSumGraph build_graph(const SpaceParams& p) {
    DirectSumGraph g;
    g.params = p;
    g.vertices = enumerate_vertices(p);
    g.order = static_cast<int>(g.vertices.size());

    g.skeletons.reserve(g.order);
    for (const auto& v : g.vertices) g.skeletons.push_back(skeleton_of(v));

    // group vertices by skeleton; all members of a class share one row pattern
    std::map<std::pair<std::uint32_t, std::uint32_t>, int> class_of_skel;
    std::vector<Bitset> members;          // class -> member bits
    std::vector<Skeleton> class_skel;
    std::vector<int> vertex_class(g.order);
    for (int v = 0; v < g.order; ++v) {
        auto key = std::make_pair(g.skeletons[v].u_mask, g.skeletons[v].w_mask);
        auto [it, inserted] = class_of_skel.try_emplace(key, static_cast<int>(members.size()));
        if (inserted) {
            members.emplace_back(g.order);
            class_skel.push_back(g.skeletons[v]);
        }
        members[it->second].set(v);
        vertex_class[v] = it->second;
    }

    int nclasses = static_cast<int>(members.size());
    std::vector<Bitset> class_row(nclasses, Bitset(g.order));
    for (int c = 0; c < nclasses; ++c) {
        for (int d = 0; d < nclasses; ++d) {
            if ((class_skel[c].u_mask & class_skel[d].u_mask) != 0 &&
                (class_skel[c].w_mask & class_skel[d].w_mask) != 0)
                class_row[c] |= members[d];
        }
    }

    g.adj.reserve(g.order);
    g.degrees.reserve(g.order);
    for (int v = 0; v < g.order; ++v) {
        Bitset row = class_row[vertex_class[v]];
        row.reset(v); // simple graph
        g.degrees.push_back(row.count());
        g.edge_count += g.degrees.back();
        g.adj.push_back(std::move(row));
    }
    g.edge_count /= 2;
    return g;
}

std::string vertex_label(const DSVector& x, LabelStyle style) {
    if (!x.is_vertex()) throw std::domain_error("labels are defined for vertices only");
    std::ostringstream os;
    if (style == LabelStyle::tuple) {
        os << "a:";
        for (int i = 0; i < x.params.dim_u; ++i) os << (i ? "," : "") << x.u_coeffs[i];
        os << "|b:";
        for (int i = 0; i < x.params.dim_w; ++i) os << (i ? "," : "") << x.w_coeffs[i];
        return os.str();
    }
    bool first = true;
    auto emit = [&](char base, int idx, std::uint32_t c) {
        if (c == 0) return;
        if (!first) os << '+';
        first = false;
        if (c != 1) os << c;
        os << base << (idx + 1);
    };
    for (int i = 0; i < x.params.dim_u; ++i) emit('a', i, x.u_coeffs[i]);
    for (int i = 0; i < x.params.dim_w; ++i) emit('b', i, x.w_coeffs[i]);
    return os.str();
}

namespace {

void export_dot(const DirectSumGraph& g, std::ostream& out) {
    out << "graph direct_sum {\n";
    for (int v = 0; v < g.order; ++v)
        out << "  \"" << vertex_label(g.vertices[v], LabelStyle::symbolic) << "\";\n";
    for (int i = 0; i < g.order; ++i) {
        for (int j = g.adj[i].next(i + 1); j != -1; j = g.adj[i].next(j + 1)) {
            out << "  \"" << vertex_label(g.vertices[i], LabelStyle::symbolic) << "\" -- \""
                << vertex_label(g.vertices[j], LabelStyle::symbolic) << "\";\n";
        }
    }
    out << "}\n";
}

void export_edgelist(const DirectSumGraph& g, std::ostream& out) {
    out << g.params.q << ' ' << g.params.dim_u << ' ' << g.params.dim_w << ' '
        << g.order << ' ' << g.edge_count << '\n';
    for (int i = 0; i < g.order; ++i)
        for (int j = g.adj[i].next(i + 1); j != -1; j = g.adj[i].next(j + 1))
            out << i << ' ' << j << '\n';
}

void export_json(const DirectSumGraph& g, std::ostream& out) {
    nlohmann::json j;
    j["params"] = {{"q", g.params.q}, {"r", g.params.dim_u}, {"s", g.params.dim_w}};
    j["order"] = g.order;
    j["size"] = g.edge_count;
    j["degrees"] = g.degrees;
    auto edges = nlohmann::json::array();
    for (int i = 0; i < g.order; ++i)
        for (int k = g.adj[i].next(i + 1); k != -1; k = g.adj[i].next(k + 1))
            edges.push_back({i, k});
    j["edges"] = std::move(edges);
    out << j.dump(2) << '\n';
}

} // namespace

void export_graph(const DirectSumGraph& g, ExportFormat fmt, std::ostream& out) {
    switch (fmt) {
        case ExportFormat::dot: export_dot(g, out); break;
        case ExportFormat::edgelist: export_edgelist(g, out); break;
        case ExportFormat::json: export_json(g, out); break;
    }
    if (!out) throw std::runtime_error("write failure while exporting graph");
}

std::string export_graph_string(const DirectSumGraph& g, ExportFormat fmt) {
    std::ostringstream os;
    export_graph(g, fmt, os);
    return os.str();
}

} // namespace dsg
