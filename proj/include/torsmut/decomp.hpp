#pragma once

// Direct-sum decomposition (Fitting lemma) and exact isomorphism testing.
//
// For a finite-length module, X is indecomposable iff every endomorphism is
// nilpotent or invertible, and e^n with n = dim X splits X as ker (+) im
// whenever e is neither.  Splitting elements are searched among End basis
// elements first, then sums and products of pairs, then the whole (finite)
// span under a cap.

#include "hom.hpp"

namespace torsmut {

constexpr u64 kIsoCap = u64(1) << 16;

namespace detail {

inline Mor mor_power(const Mor& e, int n) {
    Mor acc = e;
    int k = 1;
    while (k < n) {  // square until the exponent clears n; stable beyond dim
        acc = mor_compose(acc, acc);
        k *= 2;
    }
    return acc;
}

// nullopt: e does not split X.  Otherwise the two proper pieces.
inline std::optional<std::pair<Rep, Rep>> try_split(const Rep& x, const Mor& e) {
    Mor en = mor_power(e, std::max(1, x.total_dim()));
    KernelResult kr = kernel_of(en);
    int kd = kr.rep.total_dim();
    if (kd == 0 || kd == x.total_dim()) return std::nullopt;
    ImageResult ir = image_of(en);
    return std::make_pair(kr.rep, ir.rep);
}

// Enumerate the span of basis (excluding 0) calling fn until it returns true.
inline bool scan_span(const std::vector<Mor>& basis, const Rep& src, const Rep& tgt,
                      u64 cap, const std::function<bool(const Mor&)>& fn) {
    u32 p = src.alg->p;
    u64 total = 1;
    for (size_t i = 0; i < basis.size(); ++i) {
        total *= p;
        if (total > cap) throw std::runtime_error("cap exceeded");
    }
    std::vector<u32> c(basis.size(), 0);
    for (u64 n = 1; n < total; ++n) {
        int j = static_cast<int>(c.size()) - 1;
        while (j >= 0 && c[j] == p - 1) c[j--] = 0;
        c[j] += 1;
        Mor e = zero_mor(src, tgt);
        for (size_t i = 0; i < basis.size(); ++i)
            if (c[i]) e = mor_add(e, mor_scale(basis[i], c[i]));
        if (fn(e)) return true;
    }
    return false;
}

inline bool scan_span(const std::vector<Mor>& basis, const Rep& x, u64 cap,
                      const std::function<bool(const Mor&)>& fn) {
    return scan_span(basis, x, x, cap, fn);
}

} // namespace detail

inline std::vector<Rep> decompose(const Rep& x) {
    if (x.total_dim() == 0) return {};
    std::vector<Mor> endo = hom_basis(x, x);
    if (endo.size() == 1) return {x};  // End = k
    std::optional<std::pair<Rep, Rep>> split;
    auto attempt = [&](const Mor& e) {
        split = detail::try_split(x, e);
        return split.has_value();
    };
    bool found = false;
    for (const auto& e : endo)
        if (attempt(e)) { found = true; break; }
    if (!found)
        for (size_t i = 0; i < endo.size() && !found; ++i)
            for (size_t j = i + 1; j < endo.size() && !found; ++j) {
                if (attempt(mor_add(endo[i], endo[j]))) { found = true; break; }
                if (attempt(mor_compose(endo[i], endo[j]))) { found = true; break; }
            }
    if (!found)
        found = detail::scan_span(endo, x, kIsoCap, attempt);
    if (!found) return {x};  // every endomorphism nilpotent or invertible
    std::vector<Rep> out = decompose(split->first);
    for (auto& r : decompose(split->second)) out.push_back(std::move(r));
    return out;
}

// Certificate helper: End(X) contains no idempotent besides 0 and 1.
// Only callable when the span fits under the cap.
inline bool is_indecomposable(const Rep& x) {
    if (x.total_dim() == 0) return false;
    return decompose(x).size() == 1;
}

namespace detail {

inline bool iso_by_hom_search(const Rep& x, const Rep& y, u64 cap) {
    std::vector<Mor> h = hom_basis(x, y);
    if (h.empty()) return x.total_dim() == 0;
    bool found = scan_span(h, x, y, cap, [&](const Mor& f) { return mor_is_iso(f); });
    return found;
}

} // namespace detail

// Exact isomorphism test: exhaustive search of the hom space, falling back to
// comparing Fitting decompositions factor by factor when the span is too big.
inline bool is_isomorphic(const Rep& x, const Rep& y, u64 cap = kIsoCap) {
    if (x.dims != y.dims) return false;
    if (x.total_dim() == 0) return true;
    u64 span = 1;
    bool small = true;
    for (size_t i = 0, hd = hom_basis(x, y).size(); i < hd; ++i) {
        span *= x.alg->p;
        if (span > cap) { small = false; break; }
    }
    if (small) return detail::iso_by_hom_search(x, y, cap);
    std::vector<Rep> fx = decompose(x), fy = decompose(y);
    if (fx.size() != fy.size()) return false;
    std::vector<bool> used(fy.size(), false);
    for (const auto& a : fx) {
        bool matched = false;
        for (size_t j = 0; j < fy.size(); ++j) {
            if (used[j] || fy[j].dims != a.dims) continue;
            if (is_isomorphic(a, fy[j], cap)) {
                used[j] = true;
                matched = true;
                break;
            }
        }
        if (!matched) return false;
    }
    return true;
}

// Exhaustive search for an explicit isomorphism x -> y.  nullopt when the
// modules are not isomorphic; throws "cap exceeded" when the hom span is too
// large to scan (callers here only use it on small hom spaces).
inline std::optional<Mor> find_isomorphism(const Rep& x, const Rep& y,
                                           u64 cap = kIsoCap) {
    if (x.dims != y.dims) return std::nullopt;
    if (x.total_dim() == 0) return zero_mor(x, y);
    std::vector<Mor> h = hom_basis(x, y);
    if (h.empty()) return std::nullopt;
    std::optional<Mor> out;
    detail::scan_span(h, x, y, cap, [&](const Mor& f) {
        if (mor_is_iso(f)) {
            out = f;
            return true;
        }
        return false;
    });
    return out;
}

} // namespace torsmut
