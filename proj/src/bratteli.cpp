#include "cyclo/bratteli.hpp"

#include <json.hpp>
#include <map>
#include <sstream>

namespace cyclo {

std::size_t BratteliGraph::index_of(int level, const MPartition& v) const {
    if (level < 0 || level > depth()) throw LookupError("level " + std::to_string(level) + " is not in the graph");
    const auto& lv = levels[static_cast<std::size_t>(level)];
    for (std::size_t i = 0; i < lv.size(); ++i)
        if (lv[i] == v) return i;
    throw LookupError("vertex " + v.to_string() + " is not in level " + std::to_string(level));
}

BratteliGraph young_graph_power(int m, int depth) {
    if (m < 1 || depth < 0) throw PreconditionError("young_graph_power needs m >= 1 and depth >= 0");
    BratteliGraph g;
    g.m = m;
    for (int a = 0; a <= depth; ++a) g.levels.push_back(enumerate_mpartitions(m, a));
    for (int a = 0; a < depth; ++a) {
        const auto& lower = g.levels[static_cast<std::size_t>(a + 1)];
        std::map<std::string, std::size_t> where;
        for (std::size_t j = 0; j < lower.size(); ++j) where[lower[j].to_string()] = j;
        std::vector<BratteliEdge> es;
        const auto& upper = g.levels[static_cast<std::size_t>(a)];
        for (std::size_t i = 0; i < upper.size(); ++i)
            for (const MNode& x : boundary_nodes(upper[i], BoundaryKind::Addable))
                es.push_back({i, where.at(upper[i].with_node(x).to_string()), x, content(x, m)});
        g.edges.push_back(std::move(es));
    }
    return g;
}

std::vector<std::vector<BigInt>> path_counts(const BratteliGraph& g) {
    std::vector<std::vector<BigInt>> d;
    for (const auto& lv : g.levels) d.emplace_back(lv.size(), BigInt(0));
    if (d.empty()) return d;
    for (auto& x : d[0]) x = 1;
    for (std::size_t a = 0; a < g.edges.size(); ++a)
        for (const auto& e : g.edges[a]) d[a + 1][e.lower] += d[a][e.upper];
    return d;
}

BigInt vertex_dimension(const BratteliGraph& g, const MPartition& v) {
    const int level = v.size();
    std::size_t i = g.index_of(level, v);
    return path_counts(g)[static_cast<std::size_t>(level)][i];
}

bool check_product_dimension(int m, int n) {
    BratteliGraph young = young_graph_power(1, n);
    auto young_dims = path_counts(young);
    auto young_dim = [&](const Partition& p) {
        MPartition one({p});
        return young_dims[static_cast<std::size_t>(p.size())][young.index_of(p.size(), one)];
    };
    BratteliGraph g = young_graph_power(m, n);
    auto dims = path_counts(g);
    for (int a = 0; a <= n; ++a) {
        const auto& lv = g.levels[static_cast<std::size_t>(a)];
        for (std::size_t i = 0; i < lv.size(); ++i) {
            // (x, y) with x the first component and y the remaining (m-1)-partition, peeled repeatedly.
            BigInt d = 1;
            int rest = lv[i].size();
            for (const auto& comp : lv[i].components) {
                d *= binomial(rest, comp.size()) * young_dim(comp);
                rest -= comp.size();
            }
            if (d != dims[static_cast<std::size_t>(a)][i]) return false;
        }
    }
    return true;
}

BigInt level_square_sum(const BratteliGraph& g, int a) {
    if (a < 0 || a > g.depth()) throw LookupError("level " + std::to_string(a) + " is not in the graph");
    BigInt s = 0;
    const auto counts = path_counts(g);
    for (const auto& x : counts[static_cast<std::size_t>(a)]) s += x * x;
    return s;
}

BigInt level_square_sum_recursive(int m, int c) {
    if (m == 1) return level_square_sum(young_graph_power(1, c), c);
    BigInt s = 0;
    BratteliGraph young = young_graph_power(1, c);
    for (int a = 0; a <= c; ++a) {
        BigInt b = binomial(c, a);
        s += b * b * level_square_sum(young, a) * level_square_sum_recursive(m - 1, c - a);
    }
    return s;
}

namespace {

std::string node_id(std::size_t level, std::size_t i) { return "L" + std::to_string(level) + "_" + std::to_string(i); }

}  // namespace

std::string export_dot(const BratteliGraph& g) {
    std::ostringstream os;
    os << "digraph bratteli {\n";
    os << "  rankdir=TB;\n";
    for (std::size_t a = 0; a < g.levels.size(); ++a) {
        os << "  { rank=same;";
        for (std::size_t i = 0; i < g.levels[a].size(); ++i) os << " " << node_id(a, i) << ";";
        os << " }\n";
        for (std::size_t i = 0; i < g.levels[a].size(); ++i)
            os << "  " << node_id(a, i) << " [label=\"" << g.levels[a][i].to_string() << "\"];\n";
    }
    for (std::size_t a = 0; a < g.edges.size(); ++a)
        for (const auto& e : g.edges[a])
            os << "  " << node_id(a, e.upper) << " -> " << node_id(a + 1, e.lower) << " [label=\"" << e.label.to_string()
               << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string export_json(const BratteliGraph& g) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    auto dims = path_counts(g);
    for (std::size_t a = 0; a < g.levels.size(); ++a)
        for (std::size_t i = 0; i < g.levels[a].size(); ++i) {
            nlohmann::ordered_json v;
            v["level"] = a;
            v["vertex"] = g.levels[a][i].to_string();
            v["dimension"] = dims[a][i].get_str();
            out.push_back(v);
        }
    return out.dump(2) + "\n";
}

}  // namespace cyclo
