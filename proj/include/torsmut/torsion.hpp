#pragma once

// Torsion calculus over a fixed ambient list of indecomposables.
//
// An IndSet is a sorted list of ambient ids and stands for the additive
// closure of the selected classes.  TorsionCalc owns the ambient list and
// memoizes the expensive primitives (hom bases, submodule lattices with
// identified sub/quotient classes, Ext spaces, summand identification), so
// the closure operators above it are cheap id-set computations.
//
// Torsion pairs come in two flavours: id-backed (both classes listed, the
// ambient is a complete slice of ind(mod A)) and predicate-backed (membership
// of arbitrary modules decided by hom conditions; used for tame slices where
// the ambient is a bounded window).

#include "indec.hpp"

#include <map>

namespace torsmut {

using IndSet = std::vector<int>;  // sorted, unique

inline IndSet set_sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}
inline bool set_contains(const IndSet& s, int x) {
    return std::binary_search(s.begin(), s.end(), x);
}
inline bool set_subset(const IndSet& a, const IndSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}
inline IndSet set_union(const IndSet& a, const IndSet& b) {
    IndSet r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}
inline IndSet set_intersect(const IndSet& a, const IndSet& b) {
    IndSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}
inline std::string set_key(const IndSet& s) {
    std::string k;
    for (int x : s) {
        k += std::to_string(x);
        k += ',';
    }
    return k;
}

struct SubRecord {
    Rep sub;
    Mor incl;
    std::vector<int> sub_ids;   // summand classes of the submodule, sorted multiset
    std::vector<int> quot_ids;  // summand classes of the quotient, sorted multiset
};

class TorsionCalc {
  public:
    explicit TorsionCalc(IndList ind) : ind_(std::move(ind)) {}

    const IndList& ind() const { return ind_; }
    const Rep& item(int i) const { return ind_.items.at(i); }
    int size() const { return ind_.size(); }
    IndSet all_ids() const {
        IndSet s(ind_.size());
        for (int i = 0; i < ind_.size(); ++i) s[i] = i;
        return s;
    }

    const std::vector<Mor>& homs(int i, int j) {
        auto key = std::make_pair(i, j);
        auto it = hom_cache_.find(key);
        if (it != hom_cache_.end()) return it->second;
        return hom_cache_.emplace(key, hom_basis(item(i), item(j))).first->second;
    }
    int hom_dim_ids(int i, int j) { return static_cast<int>(homs(i, j).size()); }

    const ExtSpace& ext(int z, int m) {
        auto key = std::make_pair(z, m);
        auto it = ext_cache_.find(key);
        if (it != ext_cache_.end()) return it->second;
        return ext_cache_.emplace(key, ext_basis(item(z), item(m))).first->second;
    }

    // Summand classes of an arbitrary module; nullopt when some factor lies
    // outside the ambient list (possible only on incomplete slices).
    std::optional<std::vector<int>> summand_ids(const Rep& x) {
        std::string k = rep_key(x);
        auto it = summand_cache_.find(k);
        if (it != summand_cache_.end()) return it->second;
        std::vector<int> ids;
        bool ok = true;
        for (const auto& f : decompose(x)) {
            int id = find_in_list(ind_.items, f);
            if (id < 0) { ok = false; break; }
            ids.push_back(id);
        }
        std::sort(ids.begin(), ids.end());
        auto res = ok ? std::optional<std::vector<int>>(ids) : std::nullopt;
        summand_cache_.emplace(std::move(k), res);
        return res;
    }

    // Submodule lattice of an arbitrary module with identified factors.
    const std::vector<SubRecord>& submodules(const Rep& x) {
        std::string k = rep_key(x);
        auto it = submod_cache_.find(k);
        if (it != submod_cache_.end()) return it->second;
        std::vector<SubRecord> recs;
        for (auto& so : enumerate_submodules(x)) {
            SubRecord r;
            auto si = summand_ids(so.rep);
            auto qi = summand_ids(cokernel_of(so.incl).rep);
            if (!si || !qi)
                throw std::runtime_error("ambient incomplete");  // cannot happen on full slices
            r.sub_ids = *si;
            r.quot_ids = *qi;
            r.sub = std::move(so.rep);
            r.incl = std::move(so.incl);
            recs.push_back(std::move(r));
        }
        return submod_cache_.emplace(std::move(k), std::move(recs)).first->second;
    }
    const std::vector<SubRecord>& submodules(int i) { return submodules(item(i)); }

    // X lies in Filt(add of the B classes): recursive top-factor search.
    bool filt_membership(const Rep& x, const IndSet& b_in) {
        if (x.total_dim() == 0) return true;
        IndSet b = set_sorted(b_in);
        std::string key = rep_key(x) + "#" + set_key(b);
        auto it = filt_cache_.find(key);
        if (it != filt_cache_.end()) return it->second;
        filt_cache_.emplace(key, false);  // guard; overwritten below
        bool ok = false;
        for (const auto& rec : submodules(x)) {
            if (rec.quot_ids.size() != 1 || !set_contains(b, rec.quot_ids[0])) continue;
            if (rec.sub.total_dim() == x.total_dim()) continue;  // proper factor needed
            if (filt_membership(rec.sub, b)) { ok = true; break; }
        }
        filt_cache_[key] = ok;
        return ok;
    }
    bool filt_membership(int i, const IndSet& b) { return filt_membership(item(i), b); }

    // X lies in add(X-classes) * add(Y-classes): some submodule with summands
    // in X and quotient summands in Y.
    bool star_membership(const Rep& e, const IndSet& x_in, const IndSet& y_in) {
        IndSet x = set_sorted(x_in), y = set_sorted(y_in);
        for (const auto& rec : submodules(e))
            if (set_subset(set_sorted(rec.sub_ids), x) && set_subset(set_sorted(rec.quot_ids), y))
                return true;
        return false;
    }

  private:
    IndList ind_;
    std::map<std::pair<int, int>, std::vector<Mor>> hom_cache_;
    std::map<std::pair<int, int>, ExtSpace> ext_cache_;
    std::map<std::string, std::optional<std::vector<int>>> summand_cache_;
    std::map<std::string, std::vector<SubRecord>> submod_cache_;
    std::map<std::string, bool> filt_cache_;
};

// ---- torsion pairs -----------------------------------------------------------

struct TorsionPair {
    IndSet t_class;  // ambient ids
    IndSet f_class;
    // Predicate-backed membership for arbitrary modules; null on id-backed
    // pairs, where membership means "all summands listed".
    std::function<bool(TorsionCalc&, const Rep&)> t_pred;
    std::function<bool(TorsionCalc&, const Rep&)> f_pred;
};

inline bool in_torsion(TorsionCalc& c, const TorsionPair& u, const Rep& x) {
    if (x.total_dim() == 0) return true;
    if (u.t_pred) return u.t_pred(c, x);
    auto ids = c.summand_ids(x);
    if (!ids) throw std::runtime_error("ambient incomplete");
    return set_subset(set_sorted(*ids), u.t_class);
}

inline bool in_torsionfree(TorsionCalc& c, const TorsionPair& u, const Rep& x) {
    if (x.total_dim() == 0) return true;
    if (u.f_pred) return u.f_pred(c, x);
    auto ids = c.summand_ids(x);
    if (!ids) throw std::runtime_error("ambient incomplete");
    return set_subset(set_sorted(*ids), u.f_class);
}

// Right-orthogonal class {z : Hom(T, z) = 0}.
inline IndSet perp_torsionfree(TorsionCalc& c, const IndSet& t) {
    IndSet out;
    for (int z = 0; z < c.size(); ++z) {
        bool ok = true;
        for (int m : t)
            if (c.hom_dim_ids(m, z) > 0) { ok = false; break; }
        if (ok) out.push_back(z);
    }
    return out;
}

// Left-orthogonal class {z : Hom(z, F) = 0}.
inline IndSet perp_torsion(TorsionCalc& c, const IndSet& f) {
    IndSet out;
    for (int z = 0; z < c.size(); ++z) {
        bool ok = true;
        for (int m : f)
            if (c.hom_dim_ids(z, m) > 0) { ok = false; break; }
        if (ok) out.push_back(z);
    }
    return out;
}

// Indecomposables generated by the selected classes: full-trace condition.
inline IndSet gen_indecs(TorsionCalc& c, const IndSet& s) {
    IndSet out;
    for (int z = 0; z < c.size(); ++z) {
        const Rep& zr = c.item(z);
        bool full = true;
        for (int v = 0; v < zr.alg->num_vertices() && full; ++v) {
            Mat acc(zr.dims[v], 0, zr.alg->p);
            for (int m : s)
                for (const auto& f : c.homs(m, z)) acc = hstack(acc, f.comps[v]);
            full = rank(acc) == zr.dims[v];
        }
        if (full) out.push_back(z);
    }
    return out;
}

// Smallest torsion class containing the selected classes: every filtration by
// generated pieces, i.e. Filt(Gen S).
inline IndSet gen_closure(TorsionCalc& c, const IndSet& s) {
    IndSet g = gen_indecs(c, s);
    IndSet out;
    for (int z = 0; z < c.size(); ++z)
        if (c.filt_membership(z, g)) out.push_back(z);
    return out;
}

inline TorsionPair pair_from_torsion_class(TorsionCalc& c, const IndSet& t) {
    TorsionPair p;
    p.t_class = t;
    p.f_class = perp_torsionfree(c, t);
    return p;
}

inline TorsionPair pair_from_torsionfree_class(TorsionCalc& c, const IndSet& f) {
    TorsionPair p;
    p.f_class = f;
    p.t_class = perp_torsion(c, f);
    return p;
}

// Trace submodule of X with respect to the torsion class: the torsion part.
inline SubObject torsion_part(TorsionCalc& c, const TorsionPair& u, const Rep& x) {
    int nv = x.alg->num_vertices();
    std::vector<Mat> bases(nv);
    for (int v = 0; v < nv; ++v) {
        Mat acc(x.dims[v], 0, x.alg->p);
        for (int m : u.t_class)
            for (const auto& f : hom_basis(c.item(m), x)) acc = hstack(acc, f.comps[v]);
        bases[v] = colspace_basis(acc);
    }
    return sub_rep(x, bases);
}

// X embeds into a finite sum of the selected classes: no common kernel.
inline bool cogen_membership(TorsionCalc& c, const Rep& x, const IndSet& cls) {
    int nv = x.alg->num_vertices();
    for (int v = 0; v < nv; ++v) {
        if (x.dims[v] == 0) continue;
        Mat acc(0, x.dims[v], x.alg->p);
        for (int m : cls)
            for (const auto& f : hom_basis(x, c.item(m))) acc = vstack(acc, f.comps[v]);
        if (rank(acc) != x.dims[v]) return false;
    }
    return true;
}

// Indecomposables cogenerated by the selected classes.
inline IndSet cogen_indecs(TorsionCalc& c, const IndSet& s) {
    IndSet out;
    for (int z = 0; z < c.size(); ++z)
        if (cogen_membership(c, c.item(z), s)) out.push_back(z);
    return out;
}

// Smallest torsion-free class containing the selected classes: Filt(Cogen S).
inline IndSet cogen_closure(TorsionCalc& c, const IndSet& s) {
    IndSet g = cogen_indecs(c, s);
    IndSet out;
    for (int z = 0; z < c.size(); ++z)
        if (c.filt_membership(z, g)) out.push_back(z);
    return out;
}

// Torsion pair validity: orthogonality plus the canonical sequence of every
// ambient class.
inline bool validate_torsion_pair(TorsionCalc& c, const TorsionPair& u) {
    for (int t : u.t_class)
        for (int f : u.f_class)
            if (c.hom_dim_ids(t, f) > 0) return false;
    for (int z = 0; z < c.size(); ++z) {
        SubObject tz = torsion_part(c, u, c.item(z));
        if (!in_torsion(c, u, tz.rep)) return false;
        if (!in_torsionfree(c, u, cokernel_of(tz.incl).rep)) return false;
    }
    return true;
}

// ---- almost torsion / almost torsion-free ------------------------------------

// Torsion-free almost torsion: M in F, every proper quotient torsion, and no
// extension of a non-torsion-free Z by M has a torsion-free middle term.  Z
// ranges over ambient indecomposables: a pullback along any summand
// inclusion reduces the general condition to this one.
inline IndSet almost_torsion_objects(TorsionCalc& c, const TorsionPair& u) {
    IndSet out;
    for (int m = 0; m < c.size(); ++m) {
        if (!in_torsionfree(c, u, c.item(m))) continue;
        bool ok = true;
        for (const auto& rec : c.submodules(m)) {
            if (rec.sub.total_dim() == 0) continue;  // M itself is not a proper quotient
            bool qt = true;
            for (int q : rec.quot_ids)
                if (!in_torsion(c, u, c.item(q))) { qt = false; break; }
            if (!qt) { ok = false; break; }
        }
        if (!ok) continue;
        for (int z = 0; z < c.size() && ok; ++z) {
            if (in_torsionfree(c, u, c.item(z))) continue;
            const ExtSpace& es = c.ext(z, m);
            for (const auto& cls : enumerate_ext_classes(es)) {
                MiddleTerm mt = middle_term(es, cls);
                if (in_torsionfree(c, u, mt.e)) { ok = false; break; }
            }
        }
        if (ok) out.push_back(m);
    }
    return out;
}

// Dual notion inside the torsion class.
inline IndSet almost_torsionfree_objects(TorsionCalc& c, const TorsionPair& u) {
    IndSet out;
    for (int n = 0; n < c.size(); ++n) {
        if (!in_torsion(c, u, c.item(n))) continue;
        bool ok = true;
        for (const auto& rec : c.submodules(n)) {
            if (rec.sub.total_dim() == c.item(n).total_dim()) continue;  // proper only
            bool sf = true;
            for (int s : rec.sub_ids)
                if (!in_torsionfree(c, u, c.item(s))) { sf = false; break; }
            if (!sf) { ok = false; break; }
        }
        if (!ok) continue;
        for (int z = 0; z < c.size() && ok; ++z) {
            if (in_torsion(c, u, c.item(z))) continue;
            const ExtSpace& es = c.ext(n, z);
            for (const auto& cls : enumerate_ext_classes(es)) {
                MiddleTerm mt = middle_term(es, cls);
                if (in_torsion(c, u, mt.e)) { ok = false; break; }
            }
        }
        if (ok) out.push_back(n);
    }
    return out;
}

// ---- semibricks and wide subcategories ----------------------------------------

struct WideCheck {
    bool wide = false;
    IndSet simples;      // members with no proper nonzero submodule inside S
    std::string reason;  // diagnostic when not wide
};

// S must be extension-closed within the ambient list (checked).  S is wide
// iff its simples form a semibrick and every member is filtered by them.
inline WideCheck semibrick_wide_check(TorsionCalc& c, const IndSet& s) {
    for (int a : s)
        for (int b : s) {
            const ExtSpace& es = c.ext(a, b);
            for (const auto& cls : enumerate_ext_classes(es)) {
                MiddleTerm mt = middle_term(es, cls);
                auto ids = c.summand_ids(mt.e);
                if (!ids || !set_subset(set_sorted(*ids), s))
                    throw std::runtime_error("not extension-closed");
            }
        }
    WideCheck w;
    for (int m : s) {
        bool simple_in_s = true;
        for (const auto& rec : c.submodules(m)) {
            int d = rec.sub.total_dim();
            if (d == 0 || d == c.item(m).total_dim()) continue;
            if (set_subset(set_sorted(rec.sub_ids), s)) { simple_in_s = false; break; }
        }
        if (simple_in_s) w.simples.push_back(m);
    }
    for (int a : w.simples) {
        if (c.hom_dim_ids(a, a) != 1) {
            w.reason = "relative simple is not a brick";
            return w;
        }
        for (int b : w.simples)
            if (a != b && c.hom_dim_ids(a, b) != 0) {
                w.reason = "nonzero hom between distinct relative simples";
                return w;
            }
    }
    for (int m : s)
        if (!c.filt_membership(m, w.simples)) {
            w.reason = "member not filtered by the relative simples";
            return w;
        }
    w.wide = true;
    return w;
}

// ---- filtration triples --------------------------------------------------------

// For nested torsion classes u.t <= t.t the middle class of the triple.
inline IndSet triple_from_pairs(TorsionCalc& c, const TorsionPair& u, const TorsionPair& t) {
    if (!set_subset(u.t_class, t.t_class)) throw std::runtime_error("not nested");
    return set_intersect(t.t_class, u.f_class);
}

// Reconstruct both pairs from (U, S, F): T = U * S and V = S * F.
inline std::pair<TorsionPair, TorsionPair> pairs_from_triple(TorsionCalc& c,
                                                             const IndSet& u_t,
                                                             const IndSet& s,
                                                             const IndSet& t_f) {
    TorsionPair t, u;
    for (int z = 0; z < c.size(); ++z) {
        if (c.star_membership(c.item(z), u_t, s)) t.t_class.push_back(z);
        if (c.star_membership(c.item(z), s, t_f)) u.f_class.push_back(z);
    }
    t.f_class = t_f;
    u.t_class = u_t;
    return {t, u};
}

} // namespace torsmut
