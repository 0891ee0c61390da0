#pragma once

// Enumeration of indecomposable modules up to isomorphism, bounded by total
// dimension.
//
// Knitting by socle: every nonzero finite-dimensional module has a simple
// submodule S, and if E is indecomposable with E/S = Q then E appears as the
// middle term of a class in Ext^1(Q, S).  Seeding with the simples and
// repeatedly extending direct sums Q of known classes by simples therefore
// finds every indecomposable of total dimension <= bound, provided the passes
// run over all bounded multisets until nothing new appears.
//
// The list is complete as a slice of ind(mod A) exactly when the fixpoint
// lands strictly below the bound; families with closed-form lists can be
// cross-checked against closed_form_indecomposables.

#include "decomp.hpp"

#include <set>

namespace torsmut {

constexpr int kIndItemCap = 64;

struct IndList {
    std::shared_ptr<const QuiverAlgebra> alg;
    std::vector<Rep> items;  // canonical order, pairwise non-isomorphic
    bool complete = false;
    int dim_bound = 0;

    int size() const { return static_cast<int>(items.size()); }
};

// canonical order: total dim, then dim vector lex, then matrix entries lex
inline bool canonical_less(const Rep& a, const Rep& b) {
    int ta = a.total_dim(), tb = b.total_dim();
    if (ta != tb) return ta < tb;
    if (a.dims != b.dims) return a.dims < b.dims;
    for (size_t m = 0; m < a.mats.size(); ++m)
        if (a.mats[m].a != b.mats[m].a) return a.mats[m].a < b.mats[m].a;
    return false;
}

inline void sort_canonical(std::vector<Rep>& items) {
    std::sort(items.begin(), items.end(), canonical_less);
}

// Index of the item isomorphic to x, or -1.
inline int find_in_list(const std::vector<Rep>& items, const Rep& x) {
    for (size_t i = 0; i < items.size(); ++i)
        if (items[i].dims == x.dims && is_isomorphic(items[i], x))
            return static_cast<int>(i);
    return -1;
}

inline IndList enumerate_indecomposables(std::shared_ptr<const QuiverAlgebra> alg,
                                         int dim_bound,
                                         int item_cap = kIndItemCap) {
    IndList list;
    list.alg = alg;
    list.dim_bound = dim_bound;
    int nv = alg->num_vertices();
    std::vector<Rep> found;
    for (int v = 0; v < nv; ++v)
        if (dim_bound >= 1) found.push_back(standard_module(alg, StdKind::Simple, v));

    std::set<std::pair<std::vector<int>, int>> processed;  // (sorted Q indices, simple vertex)
    bool grew = true;
    while (grew) {
        grew = false;
        // all nonempty multisets of found classes with total dim <= bound - 1,
        // as non-decreasing index sequences
        std::vector<std::vector<int>> multisets;
        std::vector<int> cur;
        std::function<void(int, int)> gen = [&](int lo, int dim_left) {
            for (int i = lo; i < static_cast<int>(found.size()); ++i) {
                int d = found[i].total_dim();
                if (d > dim_left) continue;
                cur.push_back(i);
                multisets.push_back(cur);
                gen(i, dim_left - d);
                cur.pop_back();
            }
        };
        gen(0, dim_bound - 1);

        for (const auto& ms : multisets) {
            int qdim = 0;
            std::vector<Rep> parts;
            for (int i : ms) {
                qdim += found[i].total_dim();
                parts.push_back(found[i]);
            }
            for (int v = 0; v < nv; ++v) {
                if (qdim + 1 > dim_bound) continue;
                if (!processed.emplace(ms, v).second) continue;
                Rep q = parts.size() == 1 ? parts[0] : direct_sum(parts, alg).sum;
                Rep s = standard_module(alg, StdKind::Simple, v);
                ExtSpace es = ext_basis(q, s);
                for (const auto& cls : enumerate_ext_classes(es)) {
                    if (cls.is_zero()) continue;
                    MiddleTerm mt = middle_term(es, cls);
                    for (const auto& f : decompose(mt.e)) {
                        if (find_in_list(found, f) >= 0) continue;
                        found.push_back(f);
                        grew = true;
                        if (static_cast<int>(found.size()) > item_cap)
                            throw std::runtime_error("cap exceeded");
                    }
                }
            }
        }
    }
    int max_dim = 0;
    for (const auto& f : found) max_dim = std::max(max_dim, f.total_dim());
    list.complete = max_dim < dim_bound;
    sort_canonical(found);
    list.items = std::move(found);
    return list;
}

// Closed forms for the representation-finite builtin families.

// Linear A_n: one interval module per pair i <= j.
inline IndList closed_form_linear_an(std::shared_ptr<const QuiverAlgebra> alg) {
    int n = alg->num_vertices();
    IndList list;
    list.alg = alg;
    list.dim_bound = n + 1;
    list.complete = true;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            std::vector<int> dims(n, 0);
            for (int v = i; v <= j; ++v) dims[v] = 1;
            Rep m = make_rep(alg, dims);
            for (int a = i; a < j; ++a) m.mats[a] = Mat::identity(1, alg->p);
            list.items.push_back(std::move(m));
        }
    sort_canonical(list.items);
    return list;
}

// Cyclic Nakayama(n, l): the uniserials P(v)/rad^m, v a vertex, 1 <= m <= l.
inline IndList closed_form_cyclic_nakayama(std::shared_ptr<const QuiverAlgebra> alg, int l) {
    int n = alg->num_vertices();
    IndList list;
    list.alg = alg;
    list.dim_bound = l + 1;
    list.complete = true;
    for (int v = 0; v < n; ++v)
        for (int m = 1; m <= l; ++m) {
            // basis element t = 0..m-1 lives at vertex (v+t) mod n
            std::vector<int> dims(n, 0), pos(m), slot(m);
            for (int t = 0; t < m; ++t) {
                pos[t] = (v + t) % n;
                slot[t] = dims[pos[t]]++;
            }
            Rep x = make_rep(alg, dims);
            for (int t = 0; t + 1 < m; ++t) {
                int a = pos[t];  // arrow a_{pos[t]} : pos[t] -> pos[t]+1
                x.mats[a].at(slot[t + 1], slot[t]) = 1 % alg->p;
            }
            list.items.push_back(std::move(x));
        }
    sort_canonical(list.items);
    return list;
}

inline IndList closed_form_indecomposables(const std::string& family, u32 p = 2) {
    if (family.rfind("nakayama:", 0) == 0) {
        auto alg = builtin_algebra(family, p);
        auto body = family.substr(9);
        int l = std::stoi(body.substr(body.find(',') + 1));
        return closed_form_cyclic_nakayama(alg, l);
    }
    auto alg = builtin_algebra(family, p);
    if (family == "kronecker")
        throw std::runtime_error("no closed form for kronecker");
    return closed_form_linear_an(alg);
}

// Same isomorphism classes in both lists.
inline bool same_classes(const IndList& a, const IndList& b) {
    if (a.size() != b.size()) return false;
    for (const auto& x : a.items)
        if (find_in_list(b.items, x) < 0) return false;
    return true;
}

} // namespace torsmut
