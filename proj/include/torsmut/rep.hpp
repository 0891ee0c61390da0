#pragma once

// Finite-dimensional representations of a quiver algebra and their morphisms.
// A Rep stores one dimension per vertex and one (target x source) matrix per
// arrow.  All constructions (kernel, cokernel, image, sub, quotient, radical)
// are exact and return explicit structure maps.

#include "quiver.hpp"

#include <functional>
#include <sstream>

namespace torsmut {

struct Rep {
    std::shared_ptr<const QuiverAlgebra> alg;
    std::vector<int> dims;
    std::vector<Mat> mats;  // per arrow, shape dims[tgt] x dims[src]

    int total_dim() const {
        int s = 0;
        for (int d : dims) s += d;
        return s;
    }
    bool is_zero() const { return total_dim() == 0; }
};

inline Rep make_rep(std::shared_ptr<const QuiverAlgebra> alg, std::vector<int> dims) {
    Rep r;
    r.alg = std::move(alg);
    r.dims = std::move(dims);
    for (const auto& ar : r.alg->quiver.arrows)
        r.mats.push_back(Mat(r.dims[ar.tgt], r.dims[ar.src], r.alg->p));
    return r;
}

inline Rep zero_rep(std::shared_ptr<const QuiverAlgebra> alg) {
    return make_rep(std::move(alg), std::vector<int>(alg ? alg->num_vertices() : 0, 0));
}

// Action of an arrow word (traversal order) as a matrix X_start -> X_end.
inline Mat path_action(const Rep& x, int start, const std::vector<int>& arrows) {
    const auto& q = x.alg->quiver;
    Mat m = Mat::identity(x.dims[start], x.alg->p);
    int at = start;
    for (int a : arrows) {
        if (q.arrows[a].src != at) throw std::logic_error("path_action: non-composable word");
        m = mat_mul(x.mats[a], m);
        at = q.arrows[a].tgt;
    }
    return m;
}

// Structural diagnostics; empty result means the rep is valid.
inline std::vector<std::string> validate_rep(const Rep& x) {
    std::vector<std::string> bad;
    const auto& q = x.alg->quiver;
    if (static_cast<int>(x.dims.size()) != q.num_vertices()) {
        bad.push_back("dimension vector length mismatch");
        return bad;
    }
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Mat& m = x.mats[a];
        if (m.rows != x.dims[q.arrows[a].tgt] || m.cols != x.dims[q.arrows[a].src] || m.p != x.alg->p)
            bad.push_back("matrix shape mismatch at arrow " + q.arrows[a].name);
    }
    if (!bad.empty()) return bad;
    for (const auto& rel : x.alg->relations) {
        int start = q.arrows[rel.front()].src;
        if (!path_action(x, start, rel).is_zero())
            bad.push_back("relation not satisfied");
    }
    return bad;
}

struct Mor {
    Rep source;
    Rep target;
    std::vector<Mat> comps;  // per vertex, target.dims[v] x source.dims[v]
};

inline Mor zero_mor(const Rep& x, const Rep& y) {
    Mor f;
    f.source = x;
    f.target = y;
    for (int v = 0; v < x.alg->num_vertices(); ++v)
        f.comps.push_back(Mat(y.dims[v], x.dims[v], x.alg->p));
    return f;
}

inline Mor identity_mor(const Rep& x) {
    Mor f = zero_mor(x, x);
    for (int v = 0; v < x.alg->num_vertices(); ++v)
        f.comps[v] = Mat::identity(x.dims[v], x.alg->p);
    return f;
}

inline bool is_morphism(const Mor& f) {
    const auto& q = f.source.alg->quiver;
    for (int a = 0; a < q.num_arrows(); ++a) {
        int s = q.arrows[a].src, t = q.arrows[a].tgt;
        if (mat_mul(f.comps[t], f.source.mats[a]) != mat_mul(f.target.mats[a], f.comps[s]))
            return false;
    }
    return true;
}

inline Mor mor_compose(const Mor& g, const Mor& f) {  // g after f
    Mor h;
    h.source = f.source;
    h.target = g.target;
    for (size_t v = 0; v < f.comps.size(); ++v)
        h.comps.push_back(mat_mul(g.comps[v], f.comps[v]));
    return h;
}

inline Mor mor_add(const Mor& f, const Mor& g) {
    Mor h = f;
    for (size_t v = 0; v < h.comps.size(); ++v) h.comps[v] = mat_add(h.comps[v], g.comps[v]);
    return h;
}

inline Mor mor_scale(const Mor& f, u32 c) {
    Mor h = f;
    for (auto& m : h.comps) m = mat_scale(m, c);
    return h;
}

inline bool mor_is_zero(const Mor& f) {
    for (const auto& m : f.comps)
        if (!m.is_zero()) return false;
    return true;
}

inline bool mor_is_iso(const Mor& f) {
    for (const auto& m : f.comps)
        if (!is_invertible(m)) return false;
    return true;
}

inline Mor mor_inverse(const Mor& f) {
    Mor g;
    g.source = f.target;
    g.target = f.source;
    for (const auto& m : f.comps) g.comps.push_back(mat_inverse(m));
    return g;
}

// ---- direct sums -----------------------------------------------------------

struct DirectSum {
    Rep sum;
    std::vector<Mor> inclusions;
    std::vector<Mor> projections;
};

inline DirectSum direct_sum(const std::vector<Rep>& parts,
                            std::shared_ptr<const QuiverAlgebra> alg_hint = nullptr) {
    auto alg = parts.empty() ? alg_hint : parts.front().alg;
    if (!alg) throw std::logic_error("direct_sum: no algebra");
    int nv = alg->num_vertices();
    std::vector<int> dims(nv, 0), off(parts.size() * nv, 0);
    for (size_t i = 0; i < parts.size(); ++i)
        for (int v = 0; v < nv; ++v) {
            off[i * nv + v] = dims[v];
            dims[v] += parts[i].dims[v];
        }
    Rep s = make_rep(alg, dims);
    const auto& q = alg->quiver;
    for (int a = 0; a < q.num_arrows(); ++a) {
        int sv = q.arrows[a].src, tv = q.arrows[a].tgt;
        for (size_t i = 0; i < parts.size(); ++i) {
            const Mat& m = parts[i].mats[a];
            for (int r = 0; r < m.rows; ++r)
                for (int c = 0; c < m.cols; ++c)
                    s.mats[a].at(off[i * nv + tv] + r, off[i * nv + sv] + c) = m.at(r, c);
        }
    }
    DirectSum ds;
    ds.sum = s;
    for (size_t i = 0; i < parts.size(); ++i) {
        Mor inc = zero_mor(parts[i], s);
        Mor prj = zero_mor(s, parts[i]);
        for (int v = 0; v < nv; ++v)
            for (int r = 0; r < parts[i].dims[v]; ++r) {
                inc.comps[v].at(off[i * nv + v] + r, r) = 1 % alg->p;
                prj.comps[v].at(r, off[i * nv + v] + r) = 1 % alg->p;
            }
        ds.inclusions.push_back(std::move(inc));
        ds.projections.push_back(std::move(prj));
    }
    return ds;
}

// ---- kernel / image / cokernel / sub / quotient ----------------------------

struct SubObject {
    Rep rep;
    Mor incl;  // rep -> ambient
};

// Subrepresentation spanned by per-vertex column bases; the bases must be
// arrow-invariant, otherwise this throws.
inline SubObject sub_rep(const Rep& x, const std::vector<Mat>& bases) {
    int nv = x.alg->num_vertices();
    std::vector<int> dims(nv);
    for (int v = 0; v < nv; ++v) {
        if (bases[v].rows != x.dims[v]) throw std::logic_error("sub_rep: basis shape");
        dims[v] = bases[v].cols;
    }
    Rep s = make_rep(x.alg, dims);
    const auto& q = x.alg->quiver;
    for (int a = 0; a < q.num_arrows(); ++a) {
        int sv = q.arrows[a].src, tv = q.arrows[a].tgt;
        auto z = solve(bases[tv], mat_mul(x.mats[a], bases[sv]));
        if (!z) throw std::logic_error("sub_rep: not arrow-invariant");
        s.mats[a] = *z;
    }
    SubObject so;
    so.rep = s;
    so.incl.source = s;
    so.incl.target = x;
    so.incl.comps = bases;
    return so;
}

struct KernelResult {
    Rep rep;
    Mor incl;  // rep -> source of f
};

inline KernelResult kernel_of(const Mor& f) {
    int nv = f.source.alg->num_vertices();
    std::vector<Mat> bases(nv);
    for (int v = 0; v < nv; ++v) bases[v] = kernel_basis(f.comps[v]);
    SubObject so = sub_rep(f.source, bases);
    return {so.rep, so.incl};
}

struct ImageResult {
    Rep rep;
    Mor mono;  // rep -> target of f
    Mor epi;   // source of f -> rep
};

inline ImageResult image_of(const Mor& f) {
    int nv = f.source.alg->num_vertices();
    std::vector<Mat> bases(nv);
    for (int v = 0; v < nv; ++v) bases[v] = colspace_basis(f.comps[v]);
    SubObject so = sub_rep(f.target, bases);
    ImageResult ir;
    ir.rep = so.rep;
    ir.mono = so.incl;
    ir.epi.source = f.source;
    ir.epi.target = so.rep;
    for (int v = 0; v < nv; ++v) {
        auto z = solve(bases[v], f.comps[v]);
        if (!z) throw std::logic_error("image_of: internal");
        ir.epi.comps.push_back(*z);
    }
    return ir;
}

struct CokernelResult {
    Rep rep;
    Mor proj;  // target of f -> rep
};

inline CokernelResult cokernel_of(const Mor& f) {
    const Rep& y = f.target;
    int nv = y.alg->num_vertices();
    u32 p = y.alg->p;
    std::vector<Mat> pis(nv), secs(nv);
    std::vector<int> dims(nv);
    for (int v = 0; v < nv; ++v) {
        Mat b = colspace_basis(f.comps[v]);
        // complement of im(f_v) spanned by standard vectors away from the
        // pivot rows of the image
        RrefResult rr = rref(mat_transpose(b));
        std::vector<bool> piv(y.dims[v], false);
        for (int c : rr.pivots) piv[c] = true;
        std::vector<int> comp;
        for (int i = 0; i < y.dims[v]; ++i)
            if (!piv[i]) comp.push_back(i);
        dims[v] = static_cast<int>(comp.size());
        Mat sec(y.dims[v], dims[v], p);
        for (int j = 0; j < dims[v]; ++j) sec.at(comp[j], j) = 1 % p;
        // pi = complement block of [b | sec]^{-1}
        Mat m = hstack(b, sec);
        Mat inv = solve(m, Mat::identity(y.dims[v], p)).value();
        Mat pi(dims[v], y.dims[v], p);
        for (int i = 0; i < dims[v]; ++i)
            for (int j = 0; j < y.dims[v]; ++j) pi.at(i, j) = inv.at(b.cols + i, j);
        pis[v] = std::move(pi);
        secs[v] = std::move(sec);
    }
    Rep c = make_rep(y.alg, dims);
    const auto& q = y.alg->quiver;
    for (int a = 0; a < q.num_arrows(); ++a) {
        int sv = q.arrows[a].src, tv = q.arrows[a].tgt;
        c.mats[a] = mat_mul(pis[tv], mat_mul(y.mats[a], secs[sv]));
    }
    CokernelResult cr;
    cr.rep = c;
    cr.proj.source = y;
    cr.proj.target = c;
    cr.proj.comps = pis;
    return cr;
}

inline CokernelResult quotient_by(const SubObject& sub) { return cokernel_of(sub.incl); }

// ---- radical and top -------------------------------------------------------

struct RadicalTop {
    SubObject rad;
    Rep top;
    Mor top_proj;  // ambient -> top
};

inline RadicalTop radical_top(const Rep& x) {
    int nv = x.alg->num_vertices();
    const auto& q = x.alg->quiver;
    std::vector<Mat> bases(nv);
    for (int v = 0; v < nv; ++v) {
        Mat acc(x.dims[v], 0, x.alg->p);
        for (int a = 0; a < q.num_arrows(); ++a)
            if (q.arrows[a].tgt == v) acc = hstack(acc, x.mats[a]);
        bases[v] = colspace_basis(acc);
    }
    RadicalTop rt;
    rt.rad = sub_rep(x, bases);
    CokernelResult ck = cokernel_of(rt.rad.incl);
    rt.top = ck.rep;
    rt.top_proj = ck.proj;
    return rt;
}

// ---- submodule enumeration --------------------------------------------------

// All subrepresentations, as arrow-invariant tuples of canonical subspaces.
// DFS over vertices with invariance checked as soon as both endpoints of an
// arrow are fixed.  Deterministic order.
inline std::vector<SubObject> enumerate_submodules(const Rep& x, u64 cap = kSubspaceCap) {
    int nv = x.alg->num_vertices();
    const auto& q = x.alg->quiver;
    std::vector<std::vector<Mat>> choices(nv);
    for (int v = 0; v < nv; ++v)
        for (int k = 0; k <= x.dims[v]; ++k)
            for (auto& s : enumerate_subspaces(x.dims[v], k, x.alg->p, cap))
                choices[v].push_back(std::move(s));

    std::vector<SubObject> out;
    std::vector<Mat> picked(nv);
    std::function<void(int)> dfs = [&](int v) {
        if (v == nv) {
            out.push_back(sub_rep(x, picked));
            return;
        }
        for (const auto& cand : choices[v]) {
            picked[v] = cand;
            bool ok = true;
            for (int a = 0; a < q.num_arrows() && ok; ++a) {
                int sv = q.arrows[a].src, tv = q.arrows[a].tgt;
                if (sv > v || tv > v) continue;  // endpoint not fixed yet
                if (sv == v || tv == v)
                    ok = colspace_contains(picked[tv], mat_mul(x.mats[a], picked[sv]));
            }
            if (ok) dfs(v + 1);
        }
    };
    dfs(0);
    return out;
}

// ---- standard modules -------------------------------------------------------

enum class StdKind { Projective, Injective, Simple };

inline Rep standard_module(std::shared_ptr<const QuiverAlgebra> alg, StdKind kind, int v) {
    int nv = alg->num_vertices();
    u32 p = alg->p;
    if (v < 0 || v >= nv) throw std::runtime_error("standard_module: vertex out of range");
    if (kind == StdKind::Simple) {
        std::vector<int> dims(nv, 0);
        dims[v] = 1;
        return make_rep(alg, dims);
    }
    const auto& q = alg->quiver;
    // Collect the relevant basis paths in path_basis order and index them.
    std::vector<int> paths;  // indices into alg->path_basis
    for (int i = 0; i < alg->dim(); ++i) {
        const Path& pt = alg->path_basis[i];
        bool keep = (kind == StdKind::Projective) ? pt.start == v : alg->path_end(pt) == v;
        if (keep) paths.push_back(i);
    }
    std::vector<int> dims(nv, 0);
    std::vector<int> coord(paths.size());  // position within its vertex block
    std::vector<int> at_vertex(paths.size());
    for (size_t i = 0; i < paths.size(); ++i) {
        const Path& pt = alg->path_basis[paths[i]];
        int w = (kind == StdKind::Projective) ? alg->path_end(pt) : pt.start;
        at_vertex[i] = w;
        coord[i] = dims[w]++;
    }
    auto find_path = [&](const Path& target) -> int {
        for (size_t i = 0; i < paths.size(); ++i) {
            const Path& pt = alg->path_basis[paths[i]];
            if (pt.start == target.start && pt.arrows == target.arrows)
                return static_cast<int>(i);
        }
        return -1;
    };
    Rep r = make_rep(alg, dims);
    for (int a = 0; a < q.num_arrows(); ++a) {
        int sv = q.arrows[a].src, tv = q.arrows[a].tgt;
        for (size_t i = 0; i < paths.size(); ++i) {
            if (at_vertex[i] != sv) continue;
            const Path& pt = alg->path_basis[paths[i]];
            if (kind == StdKind::Projective) {
                // extend the path by a; the result may die on a relation
                Path ext = pt;
                ext.arrows.push_back(a);
                if (contains_relation(ext.arrows, alg->relations)) continue;
                int j = find_path(ext);
                if (j < 0) continue;
                r.mats[a].at(coord[j], coord[i]) = 1 % p;
            } else {
                // dual action: delta_q maps to delta_{q'} whenever q = a then q'
                if (pt.arrows.empty() || pt.arrows.front() != a) continue;
                Path tail;
                tail.start = tv;
                tail.arrows.assign(pt.arrows.begin() + 1, pt.arrows.end());
                int j = find_path(tail);
                if (j < 0) continue;
                r.mats[a].at(coord[j], coord[i]) = 1 % p;
            }
        }
    }
    return r;
}

// ---- misc -------------------------------------------------------------------

inline std::string rep_key(const Rep& x) {
    std::ostringstream os;
    for (int d : x.dims) os << d << ',';
    os << '|';
    for (const auto& m : x.mats) {
        for (u32 e : m.a) os << e << ',';
        os << ';';
    }
    return os.str();
}

inline std::vector<int> dim_vector(const Rep& x) { return x.dims; }

} // namespace torsmut
