#pragma once

// JSON and DOT serialization.
//
// Documented schemas (both directions):
//   algebra: { "p": 2, "vertices": ["1","2"],
//              "arrows": [{"name":"a","from":"1","to":"2"}],
//              "relations": [["a","b"]] }
//            relation words list arrow names in traversal order.
//   module:  { "dims": {"1":1,"2":1}, "mats": {"a": [[1]]} }
//            per-arrow matrices target x source, row-major integer entries,
//            reduced mod p on input; arrows omitted from "mats" are zero.
//
// Emit-only dumps:
//   lattice: { "classes": [[ids]], "cover_edges": [[lo,hi]], "labels": [ids] }
//   silting: { "summands": [ {"Pm1": [vertex names], "P0": [vertex names],
//              "d": {vertex: [[entries]]}, "g": [ints]} ] }
//   DOT:     digraph, rankdir=BT, one node per torsion class (label = sorted
//            ambient ids), one edge per cover labelled by the brick's
//            dimension vector.

#include "lattice.hpp"
#include "silting.hpp"

#include "json.hpp"

namespace torsmut {

using json = nlohmann::json;

// ---- matrices ----------------------------------------------------------------

inline json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows; ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(m.at(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline void mat_from_json(Mat& m, const json& j, const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != m.rows)
        throw std::runtime_error(where + ": expected " + std::to_string(m.rows) + " rows");
    for (int r = 0; r < m.rows; ++r) {
        const json& row = j[r];
        if (!row.is_array() || static_cast<int>(row.size()) != m.cols)
            throw std::runtime_error(where + ": expected " + std::to_string(m.cols) +
                                     " columns per row");
        for (int c = 0; c < m.cols; ++c) {
            if (!row[c].is_number_integer())
                throw std::runtime_error(where + ": integer entries required");
            long long v = row[c].get<long long>();
            long long p = static_cast<long long>(m.p);
            m.at(r, c) = static_cast<u32>(((v % p) + p) % p);
        }
    }
}

// ---- algebras ------------------------------------------------------------------

inline json algebra_to_json(const std::shared_ptr<const QuiverAlgebra>& alg) {
    json j;
    j["p"] = alg->p;
    j["vertices"] = alg->quiver.vertices;
    json arrows = json::array();
    for (const auto& a : alg->quiver.arrows)
        arrows.push_back({{"name", a.name},
                          {"from", alg->quiver.vertices[a.src]},
                          {"to", alg->quiver.vertices[a.tgt]}});
    j["arrows"] = std::move(arrows);
    json rels = json::array();
    for (const auto& rel : alg->relations) {
        json word = json::array();
        for (int a : rel) word.push_back(alg->quiver.arrows[a].name);
        rels.push_back(std::move(word));
    }
    j["relations"] = std::move(rels);
    return j;
}

inline std::shared_ptr<const QuiverAlgebra> algebra_from_json(const json& j) {
    if (!j.is_object()) throw std::runtime_error("algebra json: object expected");
    u32 p = 2;
    if (j.contains("p")) {
        if (!j["p"].is_number_integer() || j["p"].get<long long>() < 2)
            throw std::runtime_error("algebra json: modulus must be an integer >= 2");
        p = static_cast<u32>(j["p"].get<long long>());
    }
    if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].empty())
        throw std::runtime_error("algebra json: nonempty vertices array required");
    Quiver q;
    for (const json& v : j["vertices"]) {
        if (!v.is_string())
            throw std::runtime_error("algebra json: vertex names must be strings");
        q.vertices.push_back(v.get<std::string>());
    }
    for (size_t i = 0; i < q.vertices.size(); ++i)
        for (size_t k = i + 1; k < q.vertices.size(); ++k)
            if (q.vertices[i] == q.vertices[k])
                throw std::runtime_error("algebra json: duplicate vertex " + q.vertices[i]);
    if (j.contains("arrows")) {
        if (!j["arrows"].is_array())
            throw std::runtime_error("algebra json: arrows must be an array");
        for (const json& a : j["arrows"]) {
            if (!a.is_object() || !a.contains("name") || !a.contains("from") ||
                !a.contains("to") || !a["name"].is_string() || !a["from"].is_string() ||
                !a["to"].is_string())
                throw std::runtime_error(
                    "algebra json: each arrow needs string name/from/to");
            q.arrows.push_back({a["name"].get<std::string>(),
                                q.vertex_index(a["from"].get<std::string>()),
                                q.vertex_index(a["to"].get<std::string>())});
        }
        for (size_t i = 0; i < q.arrows.size(); ++i)
            for (size_t k = i + 1; k < q.arrows.size(); ++k)
                if (q.arrows[i].name == q.arrows[k].name)
                    throw std::runtime_error("algebra json: duplicate arrow " +
                                             q.arrows[i].name);
    }
    std::vector<std::vector<int>> rels;
    if (j.contains("relations")) {
        if (!j["relations"].is_array())
            throw std::runtime_error("algebra json: relations must be an array");
        for (const json& word : j["relations"]) {
            if (!word.is_array())
                throw std::runtime_error("algebra json: each relation is an array");
            std::vector<int> rel;
            for (const json& name : word) {
                if (!name.is_string())
                    throw std::runtime_error("algebra json: relation entries are arrow names");
                rel.push_back(q.arrow_index(name.get<std::string>()));
            }
            rels.push_back(std::move(rel));
        }
    }
    return build_algebra(std::move(q), std::move(rels), p);
}

// ---- modules -------------------------------------------------------------------

inline json module_to_json(const Rep& x) {
    json j;
    json dims = json::object();
    for (int v = 0; v < x.alg->num_vertices(); ++v)
        dims[x.alg->quiver.vertices[v]] = x.dims[v];
    j["dims"] = std::move(dims);
    json mats = json::object();
    for (int a = 0; a < x.alg->quiver.num_arrows(); ++a)
        mats[x.alg->quiver.arrows[a].name] = mat_to_json(x.mats[a]);
    j["mats"] = std::move(mats);
    return j;
}

inline Rep module_from_json(std::shared_ptr<const QuiverAlgebra> alg, const json& j) {
    if (!j.is_object() || !j.contains("dims") || !j["dims"].is_object())
        throw std::runtime_error("module json: dims object required");
    std::vector<int> dims(alg->num_vertices(), 0);
    for (auto it = j["dims"].begin(); it != j["dims"].end(); ++it) {
        int v = alg->quiver.vertex_index(it.key());
        if (!it.value().is_number_integer() || it.value().get<long long>() < 0)
            throw std::runtime_error("module json: dims must be nonnegative integers");
        dims[v] = static_cast<int>(it.value().get<long long>());
    }
    Rep x = make_rep(std::move(alg), std::move(dims));
    if (j.contains("mats")) {
        if (!j["mats"].is_object())
            throw std::runtime_error("module json: mats must be an object");
        for (auto it = j["mats"].begin(); it != j["mats"].end(); ++it) {
            int a = x.alg->quiver.arrow_index(it.key());
            mat_from_json(x.mats[a], it.value(), "module json: arrow " + it.key());
        }
    }
    auto bad = validate_rep(x);
    if (!bad.empty()) throw std::runtime_error("module json: " + bad.front());
    return x;
}

// ---- lists, lattices, silting objects -------------------------------------------

inline json ind_list_to_json(const IndList& l) {
    json arr = json::array();
    for (int i = 0; i < l.size(); ++i) {
        json j = module_to_json(l.items[i]);
        j["id"] = i;
        arr.push_back(std::move(j));
    }
    return arr;
}

inline json lattice_to_json(const TorsLattice& lat) {
    json j;
    j["classes"] = lat.classes;
    json edges = json::array();
    for (const auto& [lo, hi] : lat.cover_edges) edges.push_back({lo, hi});
    j["cover_edges"] = std::move(edges);
    j["labels"] = lat.labels;
    return j;
}

inline json silting_to_json(const SiltingObject& s) {
    json j;
    json summands = json::array();
    for (const auto& x : s.summands) {
        json part;
        json pm1 = json::array(), p0 = json::array();
        for (int v : x.m1) pm1.push_back(x.alg->quiver.vertices[v]);
        for (int v : x.m0) p0.push_back(x.alg->quiver.vertices[v]);
        part["Pm1"] = std::move(pm1);
        part["P0"] = std::move(p0);
        json d = json::object();
        for (int v = 0; v < x.alg->num_vertices(); ++v)
            d[x.alg->quiver.vertices[v]] = mat_to_json(x.d.comps[v]);
        part["d"] = std::move(d);
        part["g"] = g_vector(x);
        summands.push_back(std::move(part));
    }
    j["summands"] = std::move(summands);
    return j;
}

// ---- DOT -------------------------------------------------------------------------

inline std::string dim_vector_string(const std::vector<int>& dims) {
    std::string s = "(";
    for (size_t i = 0; i < dims.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(dims[i]);
    }
    s += ")";
    return s;
}

inline std::string lattice_to_dot(TorsionCalc& c, const TorsLattice& lat) {
    std::ostringstream os;
    os << "digraph torsion_classes {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=box];\n";
    for (size_t i = 0; i < lat.classes.size(); ++i) {
        os << "  t" << i << " [label=\"{";
        for (size_t k = 0; k < lat.classes[i].size(); ++k) {
            if (k) os << ",";
            os << lat.classes[i][k];
        }
        os << "}\"];\n";
    }
    for (size_t e = 0; e < lat.cover_edges.size(); ++e) {
        os << "  t" << lat.cover_edges[e].first << " -> t" << lat.cover_edges[e].second
           << " [label=\"" << dim_vector_string(c.item(lat.labels[e]).dims) << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace torsmut
