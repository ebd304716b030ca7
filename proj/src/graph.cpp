#include "relcut/graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "relcut/errors.hpp"

namespace relcut {

Graph::Graph(int vertex_count, std::vector<Edge> edges, int q, std::vector<int> targets)
    : n_(vertex_count), edges_(std::move(edges)), q_(q), targets_(std::move(targets)) {
    if (n_ < 1) {
        throw InputError("graph needs at least one vertex");
    }
    if (n_ > 62) {
        throw ResourceError("more than 62 vertices");
    }
    if (edges_.size() > 32) {
        throw ResourceError("more than 32 edges");
    }
    if (q_ < 0 || q_ >= n_) {
        throw InputError("q out of range");
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_) {
            throw InputError("edge " + std::to_string(e.id) + " has an endpoint out of range");
        }
        if (e.u == e.v) {
            throw InputError("edge " + std::to_string(e.id) + " is a loop");
        }
        if (i > 0 && edges_[i - 1].id >= e.id) {
            throw InputError("edge ids must be strictly increasing");
        }
    }
    std::sort(targets_.begin(), targets_.end());
    targets_.erase(std::unique(targets_.begin(), targets_.end()), targets_.end());
    for (int t : targets_) {
        if (t < 0 || t >= n_) {
            throw InputError("target out of range");
        }
        if (t == q_) {
            throw InputError("q cannot be a target");
        }
    }
    in_.assign(n_, 0);
    out_.assign(n_, 0);
    for (int s = 0; s < slot_count(); ++s) {
        if (legal(s)) {
            legal_ |= bit(s);
            in_[head(s)] |= bit(s);
            out_[tail(s)] |= bit(s);
        }
    }
    if (!induced_connected(all_vertices())) {
        throw InputError("graph is not connected");
    }
}

bool Graph::has_arcs() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.directed; });
}

int Graph::tail(int slot) const {
    const Edge& e = edges_[edge_of(slot)];
    return is_reverse(slot) ? e.v : e.u;
}

int Graph::head(int slot) const {
    const Edge& e = edges_[edge_of(slot)];
    return is_reverse(slot) ? e.u : e.v;
}

bool Graph::legal(int slot) const {
    return !is_reverse(slot) || !edges_[edge_of(slot)].directed;
}

std::string Graph::slot_name(int slot) const {
    return "y" + std::to_string(edges_[edge_of(slot)].id) + (is_reverse(slot) ? "b" : "");
}

std::string Graph::edge_name(int index) const {
    return "x" + std::to_string(edges_[index].id);
}

Graph Graph::with_q(int q) const {
    std::vector<int> t;
    for (int v : targets_) {
        if (v != q) {
            t.push_back(v);
        }
    }
    return Graph(n_, edges_, q, t);
}

Graph Graph::with_targets(std::vector<int> targets) const {
    return Graph(n_, edges_, q_, std::move(targets));
}

bool Graph::induced_connected(Mask vertices) const {
    if (vertices == 0) {
        return false;
    }
    Mask seen = bit(__builtin_ctzll(vertices));
    bool grew = true;
    while (grew) {
        grew = false;
        for (const Edge& e : edges_) {
            if (!has_bit(vertices, e.u) || !has_bit(vertices, e.v)) {
                continue;
            }
            if (has_bit(seen, e.u) != has_bit(seen, e.v)) {
                seen |= bit(e.u) | bit(e.v);
                grew = true;
            }
        }
    }
    return seen == vertices;
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    throw InputError("line " + std::to_string(line) + ": " + msg);
}

int parse_int(std::istringstream& in, int line, const char* what) {
    long long x;
    if (!(in >> x)) {
        parse_fail(line, std::string("expected ") + what);
    }
    if (x < 0 || x > 1000000) {
        parse_fail(line, std::string(what) + " out of range");
    }
    return static_cast<int>(x);
}

}

Graph parse_graph(const std::string& text) {
    std::istringstream lines(text);
    std::string raw;
    int line_no = 0;
    std::optional<int> n;
    std::optional<int> q;
    std::vector<int> targets;
    std::vector<Edge> edges;
    std::set<int> ids;
    while (std::getline(lines, raw)) {
        ++line_no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) {
            raw.erase(hash);
        }
        std::istringstream in(raw);
        std::string key;
        if (!(in >> key)) {
            continue;
        }
        if (key == "vertices") {
            if (n) {
                parse_fail(line_no, "vertices given twice");
            }
            n = parse_int(in, line_no, "vertex count");
        } else if (key == "q") {
            if (q) {
                parse_fail(line_no, "q given twice");
            }
            q = parse_int(in, line_no, "vertex id");
        } else if (key == "t") {
            targets.push_back(parse_int(in, line_no, "vertex id"));
        } else if (key == "edge" || key == "arc") {
            Edge e;
            e.id = parse_int(in, line_no, "edge id");
            e.u = parse_int(in, line_no, "vertex id");
            e.v = parse_int(in, line_no, "vertex id");
            e.directed = key == "arc";
            if (!ids.insert(e.id).second) {
                parse_fail(line_no, "duplicate edge id " + std::to_string(e.id));
            }
            if (e.u == e.v) {
                parse_fail(line_no, "loop at vertex " + std::to_string(e.u));
            }
            edges.push_back(e);
        } else {
            parse_fail(line_no, "unknown keyword '" + key + "'");
        }
        std::string extra;
        if (in >> extra) {
            parse_fail(line_no, "trailing token '" + extra + "'");
        }
    }
    if (!n) {
        throw InputError("missing 'vertices' line");
    }
    if (*n < 2) {
        throw InputError("graph needs at least two vertices");
    }
    if (!q) {
        throw InputError("missing 'q' line");
    }
    if (*q >= *n) {
        throw InputError("q out of range");
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].id != static_cast<int>(i) + 1) {
            throw InputError("edge ids must be 1..m in file order");
        }
    }
    for (int t : targets) {
        if (t == *q) {
            throw InputError("q cannot be a target");
        }
    }
    return Graph(*n, std::move(edges), *q, std::move(targets));
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << "vertices " << g.vertex_count() << "\n";
    out << "q " << g.q() << "\n";
    for (int t : g.targets()) {
        out << "t " << t << "\n";
    }
    for (const Edge& e : g.edges()) {
        out << (e.directed ? "arc " : "edge ") << e.id << " " << e.u << " " << e.v << "\n";
    }
    return out.str();
}

Mask cut_slots(const Graph& g, Mask side) {
    Mask out = 0;
    Mask legal = g.legal_slots();
    while (legal) {
        int s = __builtin_ctzll(legal);
        legal &= legal - 1;
        if (has_bit(side, g.head(s)) && !has_bit(side, g.tail(s))) {
            out |= bit(s);
        }
    }
    return out;
}

std::vector<Cut> connected_cuts(const Graph& g, std::optional<int> sink) {
    if (sink && *sink == g.q()) {
        throw InputError("sink equals q");
    }
    int n = g.vertex_count();
    std::vector<Cut> cuts;
    Mask everything = g.all_vertices();
    for (Mask a = 1; a <= everything; ++a) {
        if (has_bit(a, g.q()) || (sink && !has_bit(a, *sink))) {
            continue;
        }
        if (g.induced_connected(a) && g.induced_connected(everything & ~a)) {
            cuts.push_back({a, cut_slots(g, a)});
        }
    }
    auto as_list = [n](Mask m) {
        std::vector<int> v;
        for (int i = 0; i < n; ++i) {
            if (has_bit(m, i)) {
                v.push_back(i);
            }
        }
        return v;
    };
    std::sort(cuts.begin(), cuts.end(), [&](const Cut& x, const Cut& y) {
        int px = popcount(x.side);
        int py = popcount(y.side);
        if (px != py) {
            return px < py;
        }
        return as_list(x.side) < as_list(y.side);
    });
    return cuts;
}

Graph contract(const Graph& g, const std::vector<std::vector<int>>& blocks) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> sorted = blocks;
    for (auto& b : sorted) {
        std::sort(b.begin(), b.end());
        if (b.empty()) {
            throw InputError("empty block");
        }
    }
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> block_of(n, -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        Mask m = 0;
        for (int v : sorted[i]) {
            if (v < 0 || v >= n || block_of[v] != -1) {
                throw InputError("blocks do not partition the vertex set");
            }
            block_of[v] = static_cast<int>(i);
            m |= bit(v);
        }
        if (!g.induced_connected(m)) {
            throw InputError("block does not induce a connected subgraph");
        }
    }
    if (std::find(block_of.begin(), block_of.end(), -1) != block_of.end()) {
        throw InputError("blocks do not cover the vertex set");
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (block_of[e.u] != block_of[e.v]) {
            edges.push_back({e.id, block_of[e.u], block_of[e.v], e.directed});
        }
    }
    int qb = block_of[g.q()];
    std::vector<int> targets;
    for (int t : g.targets()) {
        if (block_of[t] != qb) {
            targets.push_back(block_of[t]);
        }
    }
    return Graph(static_cast<int>(sorted.size()), std::move(edges), qb, std::move(targets));
}

mpz_class spanning_tree_count(const Graph& g) {
    int n = g.vertex_count();
    if (n == 1) {
        return 1;
    }
    std::vector<int> keep;
    for (int v = 0; v < n; ++v) {
        if (v != g.q()) {
            keep.push_back(v);
        }
    }
    int r = static_cast<int>(keep.size());
    std::vector<int> pos(n, -1);
    for (int i = 0; i < r; ++i) {
        pos[keep[i]] = i;
    }
    std::vector<std::vector<mpz_class>> a(r, std::vector<mpz_class>(r, 0));
    for (int s = 0; s < g.slot_count(); ++s) {
        if (!g.legal(s)) {
            continue;
        }
        int h = pos[g.head(s)];
        int t = pos[g.tail(s)];
        if (h < 0) {
            continue;
        }
        a[h][h] += 1;
        if (t >= 0) {
            a[t][h] -= 1;
        }
    }
    // Bareiss elimination
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < r; ++k) {
        if (a[k][k] == 0) {
            int p = k + 1;
            while (p < r && a[p][k] == 0) {
                ++p;
            }
            if (p == r) {
                return 0;
            }
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < r; ++i) {
            for (int j = k + 1; j < r; ++j) {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    return sign * a[r - 1][r - 1];
}

bool is_acyclic_slots(const Graph& g, Mask slots) {
    int n = g.vertex_count();
    std::vector<int> indeg(n, 0);
    Mask rest = slots;
    while (rest) {
        int s = __builtin_ctzll(rest);
        rest &= rest - 1;
        ++indeg[g.head(s)];
    }
    std::vector<int> stack;
    for (int v = 0; v < n; ++v) {
        if (indeg[v] == 0) {
            stack.push_back(v);
        }
    }
    int removed = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++removed;
        Mask out = g.out_slots(v) & slots;
        while (out) {
            int s = __builtin_ctzll(out);
            out &= out - 1;
            if (--indeg[g.head(s)] == 0) {
                stack.push_back(g.head(s));
            }
        }
    }
    return removed == n;
}

}
