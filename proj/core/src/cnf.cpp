#include "odg/cnf.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace odg::chroma {

void CnfInstance::write_dimacs(std::ostream & os) const
{
    os << "p cnf " << var_count << " " << clauses.size() << "\n";
    for (const auto & clause : clauses) {
        for (int lit : clause)
            os << lit << " ";
        os << "0\n";
    }
}

std::string CnfInstance::dimacs() const
{
    std::ostringstream os;
    write_dimacs(os);
    return os.str();
}

std::vector<std::pair<int, int>> edge_pairs(const geom::OddGraph & g)
{
    std::vector<std::pair<int, int>> pairs;
    for (const geom::Edge & e : g.detect_edges())
        pairs.emplace_back(e.u, e.v);
    return pairs;
}

CnfInstance encode(int n_vertices, const std::vector<std::pair<int, int>> & edges, int k,
                   const EncodeOptions & opts)
{
    if (n_vertices < 1)
        throw std::invalid_argument("encode: need at least one vertex");
    if (k < 1)
        throw std::invalid_argument("encode: need at least one color");
    CnfInstance inst;
    inst.n_vertices = n_vertices;
    inst.k = k;
    inst.var_count = n_vertices * k;

    for (int v = 0; v < n_vertices; ++v) {
        std::vector<int> alo(static_cast<std::size_t>(k));
        for (int c = 0; c < k; ++c)
            alo[static_cast<std::size_t>(c)] = inst.var(v, c);
        inst.clauses.push_back(std::move(alo));
    }
    for (const auto & [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n_vertices || v >= n_vertices || u == v)
            throw std::invalid_argument("encode: bad edge");
        for (int c = 0; c < k; ++c)
            inst.clauses.push_back({-inst.var(u, c), -inst.var(v, c)});
    }
    if (opts.amo) {
        for (int v = 0; v < n_vertices; ++v)
            for (int c1 = 0; c1 < k; ++c1)
                for (int c2 = c1 + 1; c2 < k; ++c2)
                    inst.clauses.push_back({-inst.var(v, c1), -inst.var(v, c2)});
    }
    if (opts.clique_break) {
        std::vector<int> clique = greedy_clique(n_vertices, edges);
        int pin = std::min<int>(static_cast<int>(clique.size()), k);
        for (int i = 0; i < pin; ++i)
            inst.clauses.push_back({inst.var(clique[static_cast<std::size_t>(i)], i)});
    }
    return inst;
}

CnfInstance encode(const geom::OddGraph & g, int k, const EncodeOptions & opts)
{
    return encode(g.size(), edge_pairs(g), k, opts);
}

Coloring decode(const CnfInstance & inst, const std::vector<signed char> & model)
{
    if (static_cast<int>(model.size()) < inst.var_count + 1)
        throw std::invalid_argument("decode: model too short");
    Coloring coloring(static_cast<std::size_t>(inst.n_vertices), -1);
    for (int v = 0; v < inst.n_vertices; ++v) {
        for (int c = 0; c < inst.k; ++c) {
            if (model[static_cast<std::size_t>(inst.var(v, c))] != 0) {
                coloring[static_cast<std::size_t>(v)] = c;
                break;
            }
        }
        if (coloring[static_cast<std::size_t>(v)] < 0)
            throw std::invalid_argument("decode: vertex " + std::to_string(v) +
                                        " has no true color (malformed model)");
    }
    return coloring;
}

bool validate(int n_vertices, const std::vector<std::pair<int, int>> & edges,
              const Coloring & coloring, int k)
{
    if (static_cast<int>(coloring.size()) != n_vertices)
        return false;
    for (int c : coloring)
        if (c < 0 || c >= k)
            return false;
    for (const auto & [u, v] : edges)
        if (coloring[static_cast<std::size_t>(u)] == coloring[static_cast<std::size_t>(v)])
            return false;
    return true;
}

bool validate(const geom::OddGraph & g, const Coloring & coloring, int k)
{
    return validate(g.size(), edge_pairs(g), coloring, k);
}

std::vector<int> greedy_clique(int n_vertices, const std::vector<std::pair<int, int>> & edges)
{
    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n_vertices),
                                       std::vector<bool>(static_cast<std::size_t>(n_vertices)));
    std::vector<int> degree(static_cast<std::size_t>(n_vertices), 0);
    for (const auto & [u, v] : edges) {
        adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
        adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
        ++degree[static_cast<std::size_t>(u)];
        ++degree[static_cast<std::size_t>(v)];
    }
    std::vector<int> order(static_cast<std::size_t>(n_vertices));
    for (int i = 0; i < n_vertices; ++i)
        order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (degree[static_cast<std::size_t>(a)] != degree[static_cast<std::size_t>(b)])
            return degree[static_cast<std::size_t>(a)] > degree[static_cast<std::size_t>(b)];
        return a < b;
    });
    std::vector<int> clique;
    for (int v : order) {
        bool ok = true;
        for (int u : clique)
            if (!adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) {
                ok = false;
                break;
            }
        if (ok)
            clique.push_back(v);
    }
    std::sort(clique.begin(), clique.end());
    return clique;
}

DimacsFile parse_dimacs(std::istream & in)
{
    DimacsFile out;
    std::string line;
    long long expected_clauses = -1;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c')
            continue;
        std::istringstream ls(line);
        if (line[0] == 'p') {
            std::string p, cnf;
            long long vars = 0;
            if (!(ls >> p >> cnf >> vars >> expected_clauses) || cnf != "cnf")
                throw std::invalid_argument("parse_dimacs: bad problem line");
            out.var_count = static_cast<int>(vars);
            header_seen = true;
            continue;
        }
        std::vector<int> clause;
        int lit = 0;
        bool terminated = false;
        while (ls >> lit) {
            if (lit == 0) {
                terminated = true;
                break;
            }
            clause.push_back(lit);
            out.var_count = std::max(out.var_count, std::abs(lit));
        }
        if (!terminated && clause.empty()) {
            if (line.find_first_not_of(" \t\r") == std::string::npos)
                continue;
            throw std::invalid_argument("parse_dimacs: unreadable line '" + line + "'");
        }
        out.clauses.push_back(std::move(clause));
    }
    if (!header_seen && out.clauses.empty())
        throw std::invalid_argument("parse_dimacs: no header and no clauses");
    return out;
}

} // namespace odg::chroma
