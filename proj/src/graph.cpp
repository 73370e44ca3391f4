#include "qwm/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace qwm {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<ArcSpec> pattern_to_specs(const std::vector<std::pair<int, int>>& edges,
                                      const std::vector<int>& pattern) {
    if (!pattern.empty() && pattern.size() != edges.size())
        fail(Errc::BadParameters, "orientation pattern length does not match edge count");
    std::vector<ArcSpec> specs;
    specs.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        int digit = pattern.empty() ? 0 : pattern[i];
        auto [u, v] = edges[i];
        switch (digit) {
            case 0: specs.push_back({u, v, LinkClass::Undirected}); break;
            case 1: specs.push_back({u, v, LinkClass::Forward}); break;
            case 2: specs.push_back({v, u, LinkClass::Forward}); break;
            default: fail(Errc::BadParameters, "orientation digit must be 0, 1 or 2");
        }
    }
    return specs;
}

} // namespace

MixedGraph MixedGraph::build(int n, const std::vector<ArcSpec>& arcs) {
    if (n < 2) fail(Errc::TooFewVertices, "a mixed graph needs at least 2 vertices");
    MixedGraph g;
    g.n_ = n;
    g.degree_.assign(static_cast<std::size_t>(n), 0);

    std::map<std::pair<int, int>, Orient> pairs;
    for (const ArcSpec& a : arcs) {
        if (a.u < 0 || a.u >= n || a.v < 0 || a.v >= n)
            fail(Errc::VertexOutOfRange, "arc endpoint outside 0..n-1");
        if (a.u == a.v) fail(Errc::SelfLoop, "self-loops are not allowed");
        int lo = std::min(a.u, a.v), hi = std::max(a.u, a.v);
        Orient o = Orient::Both;
        if (a.cls == LinkClass::Forward) o = (a.u == lo) ? Orient::LowToHigh : Orient::HighToLow;
        auto [it, inserted] = pairs.emplace(std::make_pair(lo, hi), o);
        (void)it;
        if (!inserted) fail(Errc::DuplicatePair, "pair listed twice");
    }

    Dsu dsu(n);
    for (const auto& [key, orient] : pairs) {
        g.edges_.push_back({key.first, key.second, orient});
        g.degree_[static_cast<std::size_t>(key.first)]++;
        g.degree_[static_cast<std::size_t>(key.second)]++;
        dsu.unite(key.first, key.second);
    }
    for (int v = 1; v < n; ++v)
        if (dsu.find(v) != dsu.find(0)) fail(Errc::Disconnected, "underlying graph is not connected");
    return g;
}

int MixedGraph::degree(int x) const {
    if (x < 0 || x >= n_) fail(Errc::VertexOutOfRange, "vertex outside 0..n-1");
    return degree_[static_cast<std::size_t>(x)];
}

std::optional<int> MixedGraph::regular_degree() const {
    int k = degree_[0];
    for (int d : degree_)
        if (d != k) return std::nullopt;
    return k;
}

bool MixedGraph::undirected() const {
    for (const Edge& e : edges_)
        if (e.orient != Orient::Both) return false;
    return true;
}

std::optional<Orient> MixedGraph::pair_class(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) fail(Errc::VertexOutOfRange, "vertex outside 0..n-1");
    int lo = std::min(u, v), hi = std::max(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(lo, hi),
                               [](const Edge& e, const std::pair<int, int>& key) {
                                   return std::make_pair(e.u, e.v) < key;
                               });
    if (it == edges_.end() || it->u != lo || it->v != hi) return std::nullopt;
    return it->orient;
}

std::vector<int> MixedGraph::adjacency() const {
    std::vector<int> a(static_cast<std::size_t>(n_) * n_, 0);
    for (const Edge& e : edges_) {
        a[static_cast<std::size_t>(e.u) * n_ + e.v] = 1;
        a[static_cast<std::size_t>(e.v) * n_ + e.u] = 1;
    }
    return a;
}

long long MixedGraph::triangle_count() const {
    const std::vector<int> a = adjacency();
    const std::size_t n = static_cast<std::size_t>(n_);
    // tr(A^3) via A^2 rows; entries stay small at desk scale.
    long long trace3 = 0;
    std::vector<long long> row(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(row.begin(), row.end(), 0);
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i * n + k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) row[j] += a[k * n + j];
        }
        for (std::size_t j = 0; j < n; ++j) trace3 += row[j] * a[j * n + i];
    }
    return trace3 / 6;
}

MixedGraph MixedGraph::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(Errc::ParseError, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("arcs"))
        fail(Errc::ParseError, "graph JSON must be an object with \"n\" and \"arcs\"");
    int n = 0;
    std::vector<ArcSpec> specs;
    try {
        n = j.at("n").get<int>();
        for (const auto& a : j.at("arcs")) {
            ArcSpec s;
            s.u = a.at("u").get<int>();
            s.v = a.at("v").get<int>();
            std::string cls = a.at("class").get<std::string>();
            if (cls == "undirected")
                s.cls = LinkClass::Undirected;
            else if (cls == "forward")
                s.cls = LinkClass::Forward;
            else
                fail(Errc::ParseError, "arc class must be \"undirected\" or \"forward\", got \"" + cls + "\"");
            specs.push_back(s);
        }
    } catch (const nlohmann::json::exception& e) {
        fail(Errc::ParseError, std::string("bad graph JSON field: ") + e.what());
    }
    return build(n, specs);
}

std::string MixedGraph::to_json_text() const {
    nlohmann::json arcs = nlohmann::json::array();
    for (const Edge& e : edges_) {
        switch (e.orient) {
            case Orient::Both:
                arcs.push_back({{"u", e.u}, {"v", e.v}, {"class", "undirected"}});
                break;
            case Orient::LowToHigh:
                arcs.push_back({{"u", e.u}, {"v", e.v}, {"class", "forward"}});
                break;
            case Orient::HighToLow:
                arcs.push_back({{"u", e.v}, {"v", e.u}, {"class", "forward"}});
                break;
        }
    }
    nlohmann::json j{{"n", n_}, {"arcs", arcs}};
    return j.dump(2);
}

MixedGraph MixedGraph::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::ParseError, "cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str());
}

ArcOrdering::ArcOrdering(const MixedGraph& g) {
    arcs_.reserve(2 * g.edges().size());
    for (const Edge& e : g.edges()) {
        int sign_uv = 0;
        if (e.orient == Orient::LowToHigh) sign_uv = +1;
        if (e.orient == Orient::HighToLow) sign_uv = -1;
        arcs_.push_back({e.u, e.v, sign_uv});
        arcs_.push_back({e.v, e.u, -sign_uv});
    }
    for (std::size_t i = 0; i < arcs_.size(); ++i)
        index_[{arcs_[i].origin, arcs_[i].terminus}] = i;
}

std::size_t ArcOrdering::index_of(int origin, int terminus) const {
    auto it = index_.find({origin, terminus});
    if (it == index_.end()) fail(Errc::BadParameters, "no such arc");
    return it->second;
}

MixedGraph cycle_graph(int n, const std::vector<int>& pattern) {
    if (n < 3) fail(Errc::BadParameters, "cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return MixedGraph::build(n, pattern_to_specs(edges, pattern));
}

MixedGraph path_graph(int n, const std::vector<int>& pattern) {
    if (n < 2) fail(Errc::BadParameters, "path needs n >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return MixedGraph::build(n, pattern_to_specs(edges, pattern));
}

MixedGraph complete_graph(int n, const std::vector<int>& assignment) {
    if (n < 2) fail(Errc::BadParameters, "complete graph needs n >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return MixedGraph::build(n, pattern_to_specs(edges, assignment));
}

MixedGraph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) fail(Errc::BadParameters, "complete bipartite needs both parts nonempty");
    std::vector<ArcSpec> specs;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) specs.push_back({u, a + v, LinkClass::Undirected});
    return MixedGraph::build(a + b, specs);
}

MixedGraph complete_tripartite(int lambda) {
    if (lambda < 1) fail(Errc::BadParameters, "part size must be positive");
    int n = 3 * lambda;
    std::vector<ArcSpec> specs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (u / lambda != v / lambda) specs.push_back({u, v, LinkClass::Undirected});
    return MixedGraph::build(n, specs);
}

MixedGraph hamming_graph(int d, int q) {
    if (d < 1 || q < 2) fail(Errc::BadParameters, "hamming graph needs d >= 1, q >= 2");
    long long n = 1;
    for (int i = 0; i < d; ++i) {
        n *= q;
        if (n > 4096) fail(Errc::BadParameters, "hamming graph too large");
    }
    auto digit = [&](long long word, int pos) {
        for (int i = 0; i < pos; ++i) word /= q;
        return static_cast<int>(word % q);
    };
    std::vector<ArcSpec> specs;
    for (long long u = 0; u < n; ++u) {
        for (long long v = u + 1; v < n; ++v) {
            int dist = 0;
            for (int pos = 0; pos < d && dist <= 1; ++pos)
                if (digit(u, pos) != digit(v, pos)) ++dist;
            if (dist == 1) specs.push_back({static_cast<int>(u), static_cast<int>(v), LinkClass::Undirected});
        }
    }
    return MixedGraph::build(static_cast<int>(n), specs);
}

} // namespace qwm
