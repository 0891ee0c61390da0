#pragma once

// Finite-dimensional quiver algebras over F_p with monomial admissible
// relations.  The algebra is presented by a path basis built breadth-first:
// a path is kept iff it contains no relation as a contiguous subpath.
//
// Conventions, used consistently by every module downstream:
//   * a path is the sequence of arrows in traversal order (first arrow first);
//   * a representation assigns to each arrow a matrix source -> target
//     (rows indexed by the target, columns by the source), so a composite
//     path acts by the right-to-left matrix product of its traversal sequence.

#include "mat.hpp"

#include <map>
#include <memory>
#include <string>

namespace torsmut {

struct Arrow {
    std::string name;
    int src = 0;
    int tgt = 0;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int num_vertices() const { return static_cast<int>(vertices.size()); }
    int num_arrows() const { return static_cast<int>(arrows.size()); }

    int vertex_index(const std::string& name) const {
        for (int i = 0; i < num_vertices(); ++i)
            if (vertices[i] == name) return i;
        throw std::runtime_error("unknown vertex: " + name);
    }
    int arrow_index(const std::string& name) const {
        for (int i = 0; i < num_arrows(); ++i)
            if (arrows[i].name == name) return i;
        throw std::runtime_error("unknown arrow: " + name);
    }
};

// A path: start vertex plus arrow indices in traversal order.  Length 0 is
// the lazy path e_v at its start vertex.
struct Path {
    int start = 0;
    std::vector<int> arrows;

    int length() const { return static_cast<int>(arrows.size()); }
};

constexpr int kPathCap = 10000;

struct QuiverAlgebra {
    Quiver quiver;
    u32 p = 2;
    std::vector<std::vector<int>> relations;  // arrow index sequences, traversal order
    std::vector<Path> path_basis;             // BFS order: by length, then lex

    int num_vertices() const { return quiver.num_vertices(); }

    int path_end(const Path& q) const {
        return q.arrows.empty() ? q.start : quiver.arrows[q.arrows.back()].tgt;
    }

    int dim() const { return static_cast<int>(path_basis.size()); }
};

inline bool contains_relation(const std::vector<int>& arrows,
                              const std::vector<std::vector<int>>& relations) {
    for (const auto& rel : relations) {
        if (rel.size() > arrows.size()) continue;
        for (size_t s = 0; s + rel.size() <= arrows.size(); ++s) {
            bool hit = true;
            for (size_t t = 0; t < rel.size(); ++t)
                if (arrows[s + t] != rel[t]) { hit = false; break; }
            if (hit) return true;
        }
    }
    return false;
}

// Validate the presentation and build the path basis.  Throws
// "not finite-dimensional" when the basis would exceed the cap, and
// "malformed relation" for non-composable or too-short relation words.
inline std::shared_ptr<const QuiverAlgebra> build_algebra(Quiver q,
                                                          std::vector<std::vector<int>> relations,
                                                          u32 p,
                                                          int cap = kPathCap) {
    if (!is_prime(p)) throw std::runtime_error("modulus must be prime");
    for (const auto& ar : q.arrows) {
        if (ar.src < 0 || ar.src >= q.num_vertices() || ar.tgt < 0 || ar.tgt >= q.num_vertices())
            throw std::runtime_error("arrow endpoint out of range");
    }
    for (const auto& rel : relations) {
        if (rel.size() < 2) throw std::runtime_error("malformed relation");
        for (size_t i = 0; i < rel.size(); ++i) {
            if (rel[i] < 0 || rel[i] >= q.num_arrows())
                throw std::runtime_error("malformed relation");
            if (i > 0 && q.arrows[rel[i]].src != q.arrows[rel[i - 1]].tgt)
                throw std::runtime_error("malformed relation");
        }
    }
    auto alg = std::make_shared<QuiverAlgebra>();
    alg->quiver = std::move(q);
    alg->p = p;
    alg->relations = std::move(relations);

    std::vector<Path> frontier;
    for (int v = 0; v < alg->num_vertices(); ++v) {
        alg->path_basis.push_back({v, {}});
        frontier.push_back({v, {}});
    }
    while (!frontier.empty()) {
        std::vector<Path> next;
        for (const auto& q0 : frontier) {
            int end = alg->path_end(q0);
            for (int a = 0; a < alg->quiver.num_arrows(); ++a) {
                if (alg->quiver.arrows[a].src != end) continue;
                Path ext = q0;
                ext.arrows.push_back(a);
                if (contains_relation(ext.arrows, alg->relations)) continue;
                alg->path_basis.push_back(ext);
                if (alg->dim() > cap) throw std::runtime_error("not finite-dimensional");
                next.push_back(std::move(ext));
            }
        }
        frontier = std::move(next);
    }
    return alg;
}

// ---- builtin families ------------------------------------------------------

// Linear A_n: vertices 1..n, arrows a_i : i -> i+1, no relations.
inline std::shared_ptr<const QuiverAlgebra> linear_an(int n, u32 p = 2) {
    if (n < 1) throw std::runtime_error("linear_an: n must be positive");
    Quiver q;
    for (int i = 1; i <= n; ++i) q.vertices.push_back(std::to_string(i));
    for (int i = 1; i < n; ++i)
        q.arrows.push_back({"a" + std::to_string(i), i - 1, i});
    return build_algebra(std::move(q), {}, p);
}

// Cyclic Nakayama: vertices 1..n on an oriented cycle, all paths of length l
// set to zero.  Requires n >= 1 and l >= 2 (admissibility).
inline std::shared_ptr<const QuiverAlgebra> cyclic_nakayama(int n, int l, u32 p = 2) {
    if (n < 1 || l < 2) throw std::runtime_error("cyclic_nakayama: need n >= 1, l >= 2");
    Quiver q;
    for (int i = 1; i <= n; ++i) q.vertices.push_back(std::to_string(i));
    for (int i = 0; i < n; ++i)
        q.arrows.push_back({"a" + std::to_string(i + 1), i, (i + 1) % n});
    std::vector<std::vector<int>> rels;
    for (int v = 0; v < n; ++v) {
        std::vector<int> rel;
        for (int t = 0; t < l; ++t) rel.push_back((v + t) % n);
        rels.push_back(std::move(rel));
    }
    return build_algebra(std::move(q), std::move(rels), p);
}

// Kronecker: two vertices, two parallel arrows.
inline std::shared_ptr<const QuiverAlgebra> kronecker(u32 p = 2) {
    Quiver q;
    q.vertices = {"1", "2"};
    q.arrows.push_back({"a", 0, 1});
    q.arrows.push_back({"b", 0, 1});
    return build_algebra(std::move(q), {}, p);
}

inline std::shared_ptr<const QuiverAlgebra> builtin_algebra(const std::string& family, u32 p = 2) {
    if (family == "a2") return linear_an(2, p);
    if (family == "a3") return linear_an(3, p);
    if (family == "a4") return linear_an(4, p);
    if (family == "kronecker") return kronecker(p);
    if (family.rfind("an:", 0) == 0) return linear_an(std::stoi(family.substr(3)), p);
    if (family.rfind("nakayama:", 0) == 0) {
        auto body = family.substr(9);
        auto comma = body.find(',');
        if (comma == std::string::npos) throw std::runtime_error("nakayama family wants n,l");
        return cyclic_nakayama(std::stoi(body.substr(0, comma)), std::stoi(body.substr(comma + 1)), p);
    }
    throw std::runtime_error("unknown family: " + family);
}

} // namespace torsmut
