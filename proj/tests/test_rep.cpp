// Module calculus: sums, kernels, cokernels, images, submodule enumeration,
// radical/top, Fitting decomposition, isomorphism.  The submodule counts are
// checked against an independent brute-force oracle (full cartesian product
// of vertexwise subspaces, filtered by arrow invariance, no pruning).

#include <catch2/catch_amalgamated.hpp>

#include <torsmut/decomp.hpp>

using namespace torsmut;

namespace {

// Oracle: count submodules by filtering every tuple of subspaces.
int submodule_count_oracle(const Rep& x) {
    int nv = x.alg->num_vertices();
    std::vector<std::vector<Mat>> all(nv);
    for (int v = 0; v < nv; ++v)
        for (int k = 0; k <= x.dims[v]; ++k)
            for (auto& s : enumerate_subspaces(x.dims[v], k, x.alg->p))
                all[v].push_back(std::move(s));
    std::vector<int> idx(nv, 0);
    int count = 0;
    while (true) {
        bool ok = true;
        for (int a = 0; a < x.alg->quiver.num_arrows() && ok; ++a) {
            int sv = x.alg->quiver.arrows[a].src, tv = x.alg->quiver.arrows[a].tgt;
            ok = colspace_contains(all[tv][idx[tv]], mat_mul(x.mats[a], all[sv][idx[sv]]));
        }
        if (ok) ++count;
        int v = nv - 1;
        while (v >= 0 && idx[v] + 1 == static_cast<int>(all[v].size())) idx[v--] = 0;
        if (v < 0) break;
        ++idx[v];
    }
    return count;
}

Rep simple(std::shared_ptr<const QuiverAlgebra> alg, int v) {
    return standard_module(std::move(alg), StdKind::Simple, v);
}
Rep proj(std::shared_ptr<const QuiverAlgebra> alg, int v) {
    return standard_module(std::move(alg), StdKind::Projective, v);
}

} // namespace

TEST_CASE("direct sum glues dimensions and block maps") {
    auto alg = linear_an(2);
    DirectSum ds = direct_sum({proj(alg, 0), simple(alg, 0)});
    CHECK(ds.sum.dims == std::vector<int>{2, 1});
    CHECK(validate_rep(ds.sum).empty());
    // proj_i . incl_i = id, proj_i . incl_j = 0
    CHECK(mor_is_iso(mor_compose(ds.projections[0], ds.inclusions[0])));
    CHECK(mor_is_zero(mor_compose(ds.projections[1], ds.inclusions[0])));
}

TEST_CASE("kernel, image, cokernel of the socle inclusion S2 -> P1 over A_2") {
    auto alg = linear_an(2);
    Rep p1 = proj(alg, 0), s2 = simple(alg, 1);
    // the inclusion: nonzero only at vertex 2
    Mor f = zero_mor(s2, p1);
    f.comps[1].at(0, 0) = 1;
    REQUIRE(is_morphism(f));
    CHECK(kernel_of(f).rep.total_dim() == 0);
    ImageResult im = image_of(f);
    CHECK(im.rep.dims == std::vector<int>{0, 1});
    CHECK(is_morphism(im.mono));
    CHECK(is_morphism(im.epi));
    CokernelResult ck = cokernel_of(f);
    CHECK(ck.rep.dims == std::vector<int>{1, 0});  // S1
    CHECK(is_morphism(ck.proj));
    CHECK(mor_is_zero(mor_compose(ck.proj, f)));
}

TEST_CASE("kernel and image of the projection P1 -> S1 over A_2") {
    auto alg = linear_an(2);
    Rep p1 = proj(alg, 0), s1 = simple(alg, 0);
    Mor g = zero_mor(p1, s1);
    g.comps[0].at(0, 0) = 1;
    REQUIRE(is_morphism(g));
    KernelResult k = kernel_of(g);
    CHECK(k.rep.dims == std::vector<int>{0, 1});  // S2
    CHECK(is_morphism(k.incl));
    CHECK(mor_is_zero(mor_compose(g, k.incl)));
    CHECK(cokernel_of(g).rep.total_dim() == 0);
}

TEST_CASE("sub_rep rejects non-invariant tuples") {
    auto alg = linear_an(2);
    Rep p1 = proj(alg, 0);
    // span(e1) at vertex 1, zero at vertex 2: image of a escapes
    std::vector<Mat> bases = {Mat::identity(1, 2), Mat(1, 0, 2)};
    CHECK_THROWS(sub_rep(p1, bases));
}

TEST_CASE("submodule enumeration matches the cartesian oracle") {
    auto a2 = linear_an(2);
    auto a3 = linear_an(3);
    auto kr = kronecker();
    auto nk = cyclic_nakayama(3, 2);
    std::vector<Rep> fixtures = {
        proj(a2, 0),                                    // expect 3: 0, S2, P1
        direct_sum({simple(a2, 0), simple(a2, 1)}).sum, // expect 4
        proj(kr, 0),                                    // expect 6
        direct_sum({proj(a2, 0), simple(a2, 0)}).sum,
        proj(a3, 0),
        direct_sum({proj(a3, 0), simple(a3, 2)}).sum,
        proj(nk, 0),
        direct_sum({proj(nk, 0), proj(nk, 1)}).sum,
    };
    for (const auto& x : fixtures) {
        auto subs = enumerate_submodules(x);
        CHECK(static_cast<int>(subs.size()) == submodule_count_oracle(x));
        for (const auto& s : subs) {
            CHECK(is_morphism(s.incl));
            CHECK(validate_rep(s.rep).empty());
        }
    }
    CHECK(enumerate_submodules(proj(a2, 0)).size() == 3);
    CHECK(enumerate_submodules(proj(kr, 0)).size() == 6);
}

TEST_CASE("radical and top of projectives") {
    auto alg = linear_an(2);
    RadicalTop rt = radical_top(proj(alg, 0));
    CHECK(rt.rad.rep.dims == std::vector<int>{0, 1});  // rad P1 = S2
    CHECK(rt.top.dims == std::vector<int>{1, 0});      // top P1 = S1
    auto nk = cyclic_nakayama(3, 2);
    RadicalTop rn = radical_top(proj(nk, 0));
    CHECK(rn.rad.rep.dims == std::vector<int>{0, 1, 0});
    CHECK(rn.top.dims == std::vector<int>{1, 0, 0});
    // semisimple module: radical zero
    CHECK(radical_top(simple(alg, 0)).rad.rep.total_dim() == 0);
}

TEST_CASE("decompose splits sums and certifies indecomposables") {
    auto alg = linear_an(2);
    Rep p1 = proj(alg, 0);
    CHECK(decompose(p1).size() == 1);
    CHECK(is_indecomposable(p1));
    auto two = decompose(direct_sum({simple(alg, 0), simple(alg, 1)}).sum);
    REQUIRE(two.size() == 2);
    auto twin = decompose(direct_sum({p1, p1}).sum);
    REQUIRE(twin.size() == 2);
    for (const auto& f : twin) CHECK(is_isomorphic(f, p1));
    auto iso = decompose(direct_sum({simple(alg, 0), simple(alg, 0)}).sum);
    CHECK(iso.size() == 2);
    CHECK(decompose(zero_rep(alg)).empty());
    // mixed three-factor sum
    auto three = decompose(direct_sum({p1, simple(alg, 0), simple(alg, 1)}).sum);
    CHECK(three.size() == 3);
}

TEST_CASE("isomorphism is exact and basis-independent") {
    auto alg = linear_an(2, 3);  // over F_3 so a genuine basis twist exists
    Rep a = proj(alg, 0);        // M_a = [1]
    Rep b = a;
    b.mats[0] = Mat::from_rows({{2}}, 3);
    CHECK(is_isomorphic(a, b));
    auto alg2 = linear_an(2);
    CHECK_FALSE(is_isomorphic(simple(alg2, 0), simple(alg2, 1)));
    CHECK_FALSE(is_isomorphic(proj(alg2, 0),
                              direct_sum({simple(alg2, 0), simple(alg2, 1)}).sum));
    // kronecker regulars at different points
    auto kr = kronecker();
    Rep r0 = make_rep(kr, {1, 1});
    r0.mats[0] = Mat::from_rows({{1}}, 2);
    Rep r1 = r0;
    r1.mats[1] = Mat::from_rows({{1}}, 2);
    CHECK_FALSE(is_isomorphic(r0, r1));
    CHECK(is_isomorphic(r0, r0));
}

TEST_CASE("is_isomorphic is an equivalence on a fixture set") {
    auto alg = linear_an(3);
    std::vector<Rep> fx = {simple(alg, 0), simple(alg, 1), proj(alg, 0), proj(alg, 1),
                           direct_sum({simple(alg, 0), simple(alg, 1)}).sum};
    for (size_t i = 0; i < fx.size(); ++i) {
        CHECK(is_isomorphic(fx[i], fx[i]));  // reflexive
        for (size_t j = 0; j < fx.size(); ++j) {
            bool ij = is_isomorphic(fx[i], fx[j]);
            CHECK(ij == is_isomorphic(fx[j], fx[i]));  // symmetric
            for (size_t k = 0; k < fx.size(); ++k)
                if (ij && is_isomorphic(fx[j], fx[k]))
                    CHECK(is_isomorphic(fx[i], fx[k]));  // transitive
        }
    }
}
