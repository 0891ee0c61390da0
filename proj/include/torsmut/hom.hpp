#pragma once

// Hom spaces, minimal projective presentations, and Ext^1 with explicit
// cocycles and middle terms.
//
// Ext^1(Z, M) is computed from the start of a minimal projective resolution:
// with K = ker(P0 ->> Z), the sequence Hom(P0, M) -> Hom(K, M) -> Ext^1 -> 0
// is exact, so classes are cocycles f : K -> M modulo restrictions of maps
// from P0.  Realizing a class is the pushout of 0 -> K -> P0 -> Z -> 0 along
// its cocycle.

#include "rep.hpp"

namespace torsmut {

// Basis of Hom(X, Y): solve the commuting-square system over the entries of
// the per-vertex matrices.  Deterministic (kernel_basis order).
inline std::vector<Mor> hom_basis(const Rep& x, const Rep& y) {
    if (x.alg.get() != y.alg.get() && x.alg->dim() != y.alg->dim())
        throw std::logic_error("hom_basis: algebra mismatch");
    int nv = x.alg->num_vertices();
    u32 p = x.alg->p;
    const auto& q = x.alg->quiver;
    // variable layout: per vertex v, row-major entries of f_v (y.dims[v] x x.dims[v])
    std::vector<int> off(nv + 1, 0);
    for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + y.dims[v] * x.dims[v];
    int nvars = off[nv];
    int neqs = 0;
    for (int a = 0; a < q.num_arrows(); ++a)
        neqs += y.dims[q.arrows[a].tgt] * x.dims[q.arrows[a].src];
    Mat sys(neqs, nvars, p);
    int row = 0;
    for (int a = 0; a < q.num_arrows(); ++a) {
        int sv = q.arrows[a].src, tv = q.arrows[a].tgt;
        const Mat& mx = x.mats[a];  // x.dims[tv] x x.dims[sv]
        const Mat& my = y.mats[a];  // y.dims[tv] x y.dims[sv]
        // equation (i, j): sum_k f_t(i,k) mx(k,j) - sum_k my(i,k) f_s(k,j) = 0
        for (int i = 0; i < y.dims[tv]; ++i)
            for (int j = 0; j < x.dims[sv]; ++j) {
                for (int k = 0; k < x.dims[tv]; ++k)
                    sys.at(row, off[tv] + i * x.dims[tv] + k) =
                        fp_add(sys.at(row, off[tv] + i * x.dims[tv] + k), mx.at(k, j), p);
                for (int k = 0; k < y.dims[sv]; ++k)
                    sys.at(row, off[sv] + k * x.dims[sv] + j) =
                        fp_sub(sys.at(row, off[sv] + k * x.dims[sv] + j), my.at(i, k), p);
                ++row;
            }
    }
    Mat kb = kernel_basis(sys);
    std::vector<Mor> basis;
    for (int c = 0; c < kb.cols; ++c) {
        Mor f = zero_mor(x, y);
        for (int v = 0; v < nv; ++v)
            for (int i = 0; i < y.dims[v]; ++i)
                for (int j = 0; j < x.dims[v]; ++j)
                    f.comps[v].at(i, j) = kb.at(off[v] + i * x.dims[v] + j, c);
        basis.push_back(std::move(f));
    }
    return basis;
}

inline int hom_dim(const Rep& x, const Rep& y) {
    return static_cast<int>(hom_basis(x, y).size());
}

// Flatten a morphism into the coordinate vector used by hom_basis solves.
inline Mat mor_flatten(const Mor& f) {
    int n = 0;
    for (const auto& m : f.comps) n += m.rows * m.cols;
    Mat v(n, 1, f.source.alg->p);
    int at = 0;
    for (const auto& m : f.comps)
        for (u32 e : m.a) v.at(at++, 0) = e;
    return v;
}

// Coordinates of f in the span of basis; throws if f is not in the span.
inline Mat coords_in_hom_basis(const std::vector<Mor>& basis, const Mor& f) {
    u32 p = f.source.alg->p;
    Mat vf = mor_flatten(f);
    Mat bm(vf.rows, static_cast<int>(basis.size()), p);
    for (size_t j = 0; j < basis.size(); ++j) {
        Mat vb = mor_flatten(basis[j]);
        for (int i = 0; i < vf.rows; ++i) bm.at(i, static_cast<int>(j)) = vb.at(i, 0);
    }
    auto x = solve(bm, vf);
    if (!x) throw std::logic_error("coords_in_hom_basis: not in span");
    return *x;
}

inline Mor mor_combine(const std::vector<Mor>& basis, const Mat& coords,
                       const Rep& x, const Rep& y) {
    Mor f = zero_mor(x, y);
    for (size_t j = 0; j < basis.size(); ++j) {
        u32 c = coords.at(static_cast<int>(j), 0);
        if (c) f = mor_add(f, mor_scale(basis[j], c));
    }
    return f;
}

// ---- minimal projective presentation ---------------------------------------

struct Presentation {
    Rep p1, p0;
    Mor d;    // p1 -> p0
    Mor aug;  // p0 ->> X, projective cover on top
    Rep k;    // ker aug
    Mor k_incl;  // k -> p0
    Mor k_epi;   // p1 ->> k, projective cover on top
    std::vector<int> p0_vertices, p1_vertices;  // projective multiset, sorted
};

namespace detail {

// Projective cover of X: P = direct sum of P(v) lifting a basis of top(X),
// with the covering map assembled from generator lifts.
struct Cover {
    Rep proj;
    Mor onto;  // proj -> X
    std::vector<int> vertices;
};

inline Cover projective_cover(const Rep& x) {
    auto alg = x.alg;
    int nv = alg->num_vertices();
    RadicalTop rt = radical_top(x);
    Cover cv;
    std::vector<Rep> parts;
    std::vector<Mat> gens;  // generator of each part inside x (column at its vertex)
    std::vector<int> gen_vertex;
    for (int v = 0; v < nv; ++v) {
        for (int t = 0; t < rt.top.dims[v]; ++t) {
            // lift the t-th top basis vector at v
            Mat e(rt.top.dims[v], 1, alg->p);
            e.at(t, 0) = 1 % alg->p;
            Mat g = solve(rt.top_proj.comps[v], e).value();
            parts.push_back(standard_module(alg, StdKind::Projective, v));
            gens.push_back(std::move(g));
            gen_vertex.push_back(v);
            cv.vertices.push_back(v);
        }
    }
    DirectSum ds = direct_sum(parts, alg);
    cv.proj = ds.sum;
    Mor onto = zero_mor(ds.sum, x);
    for (size_t i = 0; i < parts.size(); ++i) {
        // the map P(v) -> x sending the lazy path to the generator: the basis
        // path q (from v to w) goes to (action of q) * gen
        int v = gen_vertex[i];
        Mor piece = zero_mor(parts[i], x);
        std::vector<int> coord_at(nv, 0);
        for (int pi = 0; pi < alg->dim(); ++pi) {
            const Path& pt = alg->path_basis[pi];
            if (pt.start != v) continue;
            int w = alg->path_end(pt);
            int col = coord_at[w]++;
            Mat img = mat_mul(path_action(x, v, pt.arrows), gens[i]);
            for (int r = 0; r < x.dims[w]; ++r) piece.comps[w].at(r, col) = img.at(r, 0);
        }
        onto = mor_add(onto, mor_compose(piece, ds.projections[i]));
    }
    cv.onto = onto;
    return cv;
}

} // namespace detail

inline Presentation minimal_projective_presentation(const Rep& x) {
    Presentation pr;
    detail::Cover c0 = detail::projective_cover(x);
    pr.p0 = c0.proj;
    pr.aug = c0.onto;
    pr.p0_vertices = c0.vertices;
    std::sort(pr.p0_vertices.begin(), pr.p0_vertices.end());
    KernelResult kr = kernel_of(pr.aug);
    pr.k = kr.rep;
    pr.k_incl = kr.incl;
    detail::Cover c1 = detail::projective_cover(pr.k);
    pr.p1 = c1.proj;
    pr.k_epi = c1.onto;
    pr.p1_vertices = c1.vertices;
    std::sort(pr.p1_vertices.begin(), pr.p1_vertices.end());
    pr.d = mor_compose(pr.k_incl, pr.k_epi);
    return pr;
}

// ---- Ext^1 ------------------------------------------------------------------

constexpr u64 kExtClassCap = u64(1) << 12;

struct ExtSpace {
    Rep z, m;
    Presentation pres;           // of z
    std::vector<Mor> homKM;      // basis of Hom(K, M)
    Mat img_rref;                // rref of the image of Hom(P0,M) in homKM coords (rows)
    std::vector<int> img_pivots;
    std::vector<int> coset_idx;  // non-pivot coordinates: quotient coordinates
    int dim() const { return static_cast<int>(coset_idx.size()); }
};

inline ExtSpace ext_basis(const Rep& z, const Rep& m) {
    ExtSpace es;
    es.z = z;
    es.m = m;
    es.pres = minimal_projective_presentation(z);
    es.homKM = hom_basis(es.pres.k, m);
    u32 p = z.alg->p;
    std::vector<Mor> homP0M = hom_basis(es.pres.p0, m);
    Mat img(static_cast<int>(homP0M.size()), static_cast<int>(es.homKM.size()), p);
    for (size_t i = 0; i < homP0M.size(); ++i) {
        Mat c = coords_in_hom_basis(es.homKM, mor_compose(homP0M[i], es.pres.k_incl));
        for (int j = 0; j < c.rows; ++j) img.at(static_cast<int>(i), j) = c.at(j, 0);
    }
    RrefResult rr = rref(img);
    es.img_rref = rr.m;
    es.img_pivots = rr.pivots;
    std::vector<bool> piv(es.homKM.size(), false);
    for (int c : es.img_pivots) piv[c] = true;
    for (size_t j = 0; j < es.homKM.size(); ++j)
        if (!piv[j]) es.coset_idx.push_back(static_cast<int>(j));
    return es;
}

// Canonical quotient coordinates of a cocycle f : K -> M.
inline Mat ext_class_of(const ExtSpace& es, const Mor& f) {
    u32 p = es.z.alg->p;
    Mat c = coords_in_hom_basis(es.homKM, f);
    // reduce modulo the image span (its rref rows)
    for (size_t i = 0; i < es.img_pivots.size(); ++i) {
        u32 lead = c.at(es.img_pivots[i], 0);
        if (!lead) continue;
        for (int j = 0; j < c.rows; ++j)
            c.at(j, 0) = fp_sub(c.at(j, 0), fp_mul(lead, es.img_rref.at(static_cast<int>(i), j), p), p);
    }
    Mat out(es.dim(), 1, p);
    for (int j = 0; j < es.dim(); ++j) out.at(j, 0) = c.at(es.coset_idx[j], 0);
    return out;
}

// Cocycle representative of the class with the given quotient coordinates.
inline Mor ext_cocycle(const ExtSpace& es, const Mat& coords) {
    Mor f = zero_mor(es.pres.k, es.m);
    for (int j = 0; j < es.dim(); ++j) {
        u32 c = coords.at(j, 0);
        if (c) f = mor_add(f, mor_scale(es.homKM[es.coset_idx[j]], c));
    }
    return f;
}

// Every class as a coordinate vector, p^dim of them; capped.
inline std::vector<Mat> enumerate_ext_classes(const ExtSpace& es, u64 cap = kExtClassCap) {
    u32 p = es.z.alg->p;
    u64 total = 1;
    for (int i = 0; i < es.dim(); ++i) {
        total *= p;
        if (total > cap) throw std::runtime_error("cap exceeded");
    }
    std::vector<Mat> out;
    Mat c(es.dim(), 1, p);
    for (u64 n = 0; n < total; ++n) {
        out.push_back(c);
        int j = es.dim() - 1;
        while (j >= 0 && c.at(j, 0) == p - 1) c.at(j--, 0) = 0;
        if (j < 0) break;
        c.at(j, 0) = fp_add(c.at(j, 0), 1, p);
    }
    return out;
}

struct MiddleTerm {
    Rep e;
    Mor incl;  // M -> E
    Mor proj;  // E ->> Z
};

// Pushout of 0 -> K -> P0 -> Z -> 0 along the cocycle f : K -> M, giving
// 0 -> M -> E -> Z -> 0 in the class of f.
inline MiddleTerm middle_term(const ExtSpace& es, const Mat& coords) {
    Mor f = ext_cocycle(es, coords);
    const Rep& m = es.m;
    const Rep& p0 = es.pres.p0;
    const Rep& k = es.pres.k;
    DirectSum ds = direct_sum({m, p0}, m.alg);
    // graph map K -> M (+) P0 : x maps to (f(x), -incl(x))
    Mor graph = zero_mor(k, ds.sum);
    graph = mor_add(mor_compose(ds.inclusions[0], f),
                    mor_compose(ds.inclusions[1], mor_scale(es.pres.k_incl, fp_neg(1, m.alg->p))));
    CokernelResult ck = cokernel_of(graph);
    MiddleTerm mt;
    mt.e = ck.rep;
    mt.incl = mor_compose(ck.proj, ds.inclusions[0]);
    // proj: induced by aug on the P0 block, zero on M; well-defined since
    // aug(incl_K) = 0.  Solve through the epi ck.proj.
    Mor aug_on_sum = mor_compose(es.pres.aug, ds.projections[1]);
    Mor proj = zero_mor(mt.e, es.z);
    for (int v = 0; v < m.alg->num_vertices(); ++v) {
        // find q with q * ck.proj = aug_on_sum  (solve transposed)
        Mat qt = solve(mat_transpose(ck.proj.comps[v]), mat_transpose(aug_on_sum.comps[v])).value();
        proj.comps[v] = mat_transpose(qt);
    }
    mt.proj = proj;
    return mt;
}

// Recompute the connecting class of a sequence 0 -> M -> E -> Z -> 0 given by
// (incl, proj): lift aug through proj, pull the kernel part back through incl.
inline Mat connecting_class(const ExtSpace& es, const MiddleTerm& mt) {
    int nv = es.z.alg->num_vertices();
    // lambda : P0 -> E with proj(lambda) = aug, as a linear problem across the
    // hom space of candidate lifts
    std::vector<Mor> homP0E = hom_basis(es.pres.p0, mt.e);
    u32 p = es.z.alg->p;
    Mat target = mor_flatten(es.pres.aug);
    Mat sys(target.rows, static_cast<int>(homP0E.size()), p);
    for (size_t j = 0; j < homP0E.size(); ++j) {
        Mat col = mor_flatten(mor_compose(mt.proj, homP0E[j]));
        for (int i = 0; i < col.rows; ++i) sys.at(i, static_cast<int>(j)) = col.at(i, 0);
    }
    Mat sol = solve(sys, target).value();  // exists: P0 projective, proj epi
    Mor lambda = mor_combine(homP0E, sol, es.pres.p0, mt.e);
    // g : K -> M with incl(g) = lambda(k_incl)
    Mor lk = mor_compose(lambda, es.pres.k_incl);
    Mor g = zero_mor(es.pres.k, es.m);
    for (int v = 0; v < nv; ++v)
        g.comps[v] = solve(mt.incl.comps[v], lk.comps[v]).value();
    return ext_class_of(es, g);
}

// A sequence splits iff its middle admits a retraction onto M.
inline bool sequence_splits(const MiddleTerm& mt) {
    const Rep& m = mt.incl.source;
    std::vector<Mor> homEM = hom_basis(mt.e, m);
    u32 p = m.alg->p;
    Mat target = mor_flatten(identity_mor(m));
    Mat sys(target.rows, static_cast<int>(homEM.size()), p);
    for (size_t j = 0; j < homEM.size(); ++j) {
        Mat col = mor_flatten(mor_compose(homEM[j], mt.incl));
        for (int i = 0; i < col.rows; ++i) sys.at(i, static_cast<int>(j)) = col.at(i, 0);
    }
    return solve(sys, target).has_value();
}

} // namespace torsmut
