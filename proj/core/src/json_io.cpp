#include "odg/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace odg::io {

using nlohmann::json;
using odg::FieldElement;
using odg::Rational;

namespace {

json coefficient_tuple(const FieldElement & x)
{
    return json::array({x.a().str(), x.b().str(), x.c().str(), x.e().str()});
}

FieldElement element_from(const json & coeffs, long long d)
{
    if (!coeffs.is_array() || coeffs.size() != 4)
        throw std::invalid_argument("graph json: coordinate needs 4 coefficients");
    auto rat = [&](std::size_t i) { return Rational::parse(coeffs[i].get<std::string>()); };
    return FieldElement(rat(0), rat(1), rat(2), rat(3), d);
}

std::string slurp(const std::string & path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const std::string & text, const std::string & path)
{
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out)
        throw std::runtime_error("cannot write " + path);
}

} // namespace

std::string graph_to_json(const geom::OddGraph & g, const std::vector<std::string> & names)
{
    json doc;
    doc["format_version"] = 1;
    doc["d"] = g.d();
    if (g.allowed_lengths())
        doc["allowed_lengths"] = *g.allowed_lengths();
    json verts = json::array();
    for (const geom::Point & p : g.vertices())
        verts.push_back(json::array({coefficient_tuple(p.x), coefficient_tuple(p.y)}));
    doc["vertices"] = std::move(verts);
    if (!names.empty()) {
        if (names.size() != static_cast<std::size_t>(g.size()))
            throw std::invalid_argument("graph json: one name per vertex expected");
        doc["names"] = names;
    }
    return doc.dump(1) + "\n";
}

GraphFile graph_from_json(const std::string & text)
{
    json doc = json::parse(text);
    if (doc.value("format_version", 0) != 1)
        throw std::invalid_argument("graph json: unsupported format_version");
    long long d = doc.at("d").get<long long>();
    if (d < 1)
        throw std::invalid_argument("graph json: d must be positive");
    auto [f, sf] = squarefree_decompose(d);
    if (f != 1)
        throw std::invalid_argument("graph json: d = " + std::to_string(d) +
                                    " is not squarefree");
    std::optional<std::set<long long>> allowed;
    if (doc.contains("allowed_lengths"))
        allowed = doc["allowed_lengths"].get<std::set<long long>>();

    std::vector<geom::Point> pts;
    for (const json & v : doc.at("vertices")) {
        if (!v.is_array() || v.size() != 2)
            throw std::invalid_argument("graph json: vertex needs two coordinates");
        pts.emplace_back(element_from(v[0], d), element_from(v[1], d));
    }
    GraphFile out{geom::OddGraph(std::move(pts), std::move(allowed)), {}};
    if (doc.contains("names"))
        out.names = doc["names"].get<std::vector<std::string>>();
    return out;
}

void write_graph(const geom::OddGraph & g, const std::string & path,
                 const std::vector<std::string> & names)
{
    spill(graph_to_json(g, names), path);
}

GraphFile read_graph(const std::string & path)
{
    return graph_from_json(slurp(path));
}

std::string coloring_to_json(const ColoringFile & c)
{
    json doc;
    doc["k"] = c.k;
    doc["colors"] = c.colors;
    return doc.dump() + "\n";
}

ColoringFile coloring_from_json(const std::string & text)
{
    json doc = json::parse(text);
    ColoringFile out;
    out.k = doc.at("k").get<int>();
    out.colors = doc.at("colors").get<chroma::Coloring>();
    return out;
}

void write_coloring(const ColoringFile & c, const std::string & path)
{
    spill(coloring_to_json(c), path);
}

ColoringFile read_coloring(const std::string & path)
{
    return coloring_from_json(slurp(path));
}

std::string manifest_to_json(const RunManifest & m)
{
    json doc;
    doc["command"] = m.command;
    doc["parameters"] = m.parameters;
    doc["inputs"] = m.inputs;
    doc["outputs"] = m.outputs;
    doc["solver"] = m.solver;
    doc["timeout_seconds"] = m.timeout_seconds;
    doc["outcome"] = m.outcome;
    doc["wall_seconds"] = m.wall_seconds;
    return doc.dump(1) + "\n";
}

void write_manifest(const RunManifest & m, const std::string & path)
{
    spill(manifest_to_json(m), path);
}

} // namespace odg::io
