#pragma once

// The lattice of torsion classes: enumeration, Hasse diagram, brick labels
// on cover relations, and mutation of torsion pairs.
//
// Requires a complete ambient list (every indecomposable present), since a
// torsion class is a set of ambient ids.

#include "torsion.hpp"

namespace torsmut {

constexpr int kLatticeAmbientCap = 20;

// Every torsion class is the closure of a finite set of classes, so breadth
// first search from the zero class, extending by one generator at a time,
// reaches all of them.
inline std::vector<IndSet> enumerate_torsion_classes(TorsionCalc& c) {
    if (!c.ind().complete) throw std::runtime_error("ambient incomplete");
    if (c.size() > kLatticeAmbientCap) throw std::runtime_error("ambient too large");
    std::map<std::string, IndSet> seen;
    std::vector<IndSet> queue{gen_closure(c, {})};
    seen.emplace(set_key(queue.front()), queue.front());
    for (size_t i = 0; i < queue.size(); ++i) {
        IndSet t = queue[i];
        for (int z = 0; z < c.size(); ++z) {
            if (set_contains(t, z)) continue;
            IndSet t2 = gen_closure(c, set_union(t, {z}));
            if (seen.emplace(set_key(t2), t2).second) queue.push_back(t2);
        }
    }
    std::vector<IndSet> out;
    out.reserve(seen.size());
    for (auto& kv : seen) out.push_back(kv.second);
    std::sort(out.begin(), out.end(), [](const IndSet& a, const IndSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

// Cover relations of the inclusion order: (lower, upper) index pairs.
inline std::vector<std::pair<int, int>> cover_edges_of(const std::vector<IndSet>& classes) {
    std::vector<std::pair<int, int>> edges;
    int n = static_cast<int>(classes.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (classes[i].size() >= classes[j].size()) continue;
            if (!set_subset(classes[i], classes[j])) continue;
            bool cover = true;
            for (int k = 0; k < n && cover; ++k) {
                if (k == i || k == j) continue;
                if (classes[k].size() > classes[i].size() &&
                    classes[k].size() < classes[j].size() &&
                    set_subset(classes[i], classes[k]) && set_subset(classes[k], classes[j]))
                    cover = false;
            }
            if (cover) edges.emplace_back(i, j);
        }
    std::sort(edges.begin(), edges.end());
    return edges;
}

// The wide interval T `intersect` U-perp attached to a nested pair of classes.
inline IndSet wide_interval(TorsionCalc& c, const IndSet& lower, const IndSet& upper) {
    if (!set_subset(lower, upper)) throw std::runtime_error("not nested");
    return set_intersect(upper, perp_torsionfree(c, lower));
}

struct TorsLattice {
    std::vector<IndSet> classes;                   // sorted by (size, lex)
    std::vector<std::pair<int, int>> cover_edges;  // lex-sorted (lower, upper)
    std::vector<int> labels;                       // ambient brick id per edge
};

// The unique brick in the wide interval of a cover relation.
inline int brick_label(TorsionCalc& c, const TorsLattice& lat, int lower, int upper) {
    if (!std::binary_search(lat.cover_edges.begin(), lat.cover_edges.end(),
                            std::make_pair(lower, upper)))
        throw std::runtime_error("not a cover");
    IndSet w = wide_interval(c, lat.classes[lower], lat.classes[upper]);
    IndSet bricks;
    for (int z : w)
        if (c.hom_dim_ids(z, z) == 1) bricks.push_back(z);
    if (bricks.size() != 1) throw std::runtime_error("label not unique");
    return bricks.front();
}

inline TorsLattice build_lattice(TorsionCalc& c) {
    TorsLattice lat;
    lat.classes = enumerate_torsion_classes(c);
    lat.cover_edges = cover_edges_of(lat.classes);
    lat.labels.reserve(lat.cover_edges.size());
    for (const auto& [lo, hi] : lat.cover_edges)
        lat.labels.push_back(brick_label(c, lat, lo, hi));
    return lat;
}

// ---- mutation ---------------------------------------------------------------

struct MutationCheck {
    bool ok = false;
    IndSet mid;       // the wide interval, as ambient ids
    IndSet semibrick; // its relative simples (the mutating semibrick when ok)
    std::string reason;
};

// (U, T) nested is a mutation exactly when the wide interval is wide.
inline MutationCheck check_mutation(TorsionCalc& c, const TorsionPair& u, const TorsionPair& t) {
    if (!set_subset(u.t_class, t.t_class)) throw std::runtime_error("not nested");
    MutationCheck m;
    m.mid = set_intersect(t.t_class, u.f_class);
    WideCheck w = semibrick_wide_check(c, m.mid);
    m.ok = w.wide;
    m.semibrick = w.simples;
    m.reason = w.reason;
    return m;
}

// Largest torsion pair T with (U, T) a mutation: adjoin all torsion-free
// almost-torsion objects and close.
inline TorsionPair mutation_interval_top(TorsionCalc& c, const TorsionPair& u) {
    IndSet ats = almost_torsion_objects(c, u);
    return pair_from_torsion_class(c, gen_closure(c, set_union(u.t_class, ats)));
}

// Smallest torsion pair U with (U, T) a mutation, built on the torsion-free side.
inline TorsionPair mutation_interval_bottom(TorsionCalc& c, const TorsionPair& t) {
    IndSet atf = almost_torsionfree_objects(c, t);
    return pair_from_torsionfree_class(c, cogen_closure(c, set_union(t.f_class, atf)));
}

struct Mutation {
    IndSet semibrick;  // subset of the almost-torsion objects
    TorsionPair to;
};

// All mutations enlarging the torsion class: one for each subset of the
// torsion-free almost-torsion objects.
inline std::vector<Mutation> right_mutations_of(TorsionCalc& c, const TorsionPair& u) {
    IndSet ats = almost_torsion_objects(c, u);
    if (ats.size() > 20) throw std::runtime_error("too many almost-torsion objects");
    std::vector<Mutation> out;
    for (u64 mask = 0; mask < (u64(1) << ats.size()); ++mask) {
        Mutation m;
        for (size_t i = 0; i < ats.size(); ++i)
            if (mask >> i & 1) m.semibrick.push_back(ats[i]);
        m.to = pair_from_torsion_class(c, gen_closure(c, set_union(u.t_class, m.semibrick)));
        out.push_back(std::move(m));
    }
    return out;
}

} // namespace torsmut
