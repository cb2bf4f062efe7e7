#include "hecs/io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

namespace hecs {

namespace {

using ojson = nlohmann::ordered_json;

std::vector<double> read_weights(const ojson& j, const char* key) {
    std::vector<double> w;
    for (const auto& v : j.at(key)) {
        if (!v.is_number()) fail(errc::invalid_argument, std::string(key) + ": weights must be numbers");
        w.push_back(v.get<double>());
    }
    return w;
}

}  // namespace

LoadedComplex load_complex(std::istream& in) {
    ojson j;
    try {
        j = ojson::parse(in);
    } catch (const nlohmann::json::exception& e) {
        fail(errc::invalid_argument, std::string("malformed complex document: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n_vertices") || !j.contains("edges") ||
        !j.contains("triangles"))
        fail(errc::invalid_argument,
             "complex document requires n_vertices, edges and triangles fields");

    int n = j.at("n_vertices").get<int>();
    std::vector<std::array<int, 2>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) fail(errc::invalid_argument, "edges must be [u,v] pairs");
        edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    std::vector<std::array<int, 3>> triangles;
    for (const auto& t : j.at("triangles")) {
        if (!t.is_array() || t.size() != 3)
            fail(errc::invalid_argument, "triangles must be [u,v,w] triples");
        triangles.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
    }

    ComplexWeights weights;
    if (j.contains("w0")) weights.w0 = read_weights(j, "w0");
    if (j.contains("w1")) weights.w1 = read_weights(j, "w1");
    if (j.contains("w2")) weights.w2 = read_weights(j, "w2");

    LoadedComplex out;
    out.complex = build_complex(n, std::move(edges), std::move(triangles), weights);
    if (j.contains("provenance")) out.provenance = j.at("provenance");
    return out;
}

LoadedComplex load_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::invalid_argument, "cannot open complex file: " + path);
    return load_complex(in);
}

void save_complex(const SimplicialComplex2& K, std::ostream& out, const ojson* provenance) {
    ojson j;
    j["n_vertices"] = K.n_vertices;
    auto edges = ojson::array();
    for (const auto& e : K.edges) edges.push_back({e[0], e[1]});
    j["edges"] = std::move(edges);
    auto tris = ojson::array();
    for (const auto& t : K.triangles) tris.push_back({t[0], t[1], t[2]});
    j["triangles"] = std::move(tris);
    j["w0"] = K.w0;
    j["w1"] = K.w1;
    j["w2"] = K.w2;
    if (provenance) j["provenance"] = *provenance;
    out << j.dump(2) << '\n';
}

void save_complex_file(const SimplicialComplex2& K, const std::string& path,
                       const ojson* provenance) {
    std::ofstream out(path);
    if (!out) fail(errc::invalid_argument, "cannot open output file: " + path);
    save_complex(K, out, provenance);
}

}  // namespace hecs
