#include <doctest.h>

#include "cdgalab/formality.hpp"
#include "cdgalab/geomcheck.hpp"
#include "test_util.hpp"

using namespace cdgalab;

namespace {

Cohomology coh(const char* model) {
    return Cohomology(CochainComplex::full(catalog(model).cdga));
}

}  // namespace

TEST_CASE("minimality of the catalog models") {
    CHECK(minimality_check(catalog("kt").cdga).minimal);
    CHECK(minimality_check(catalog("torus4").cdga).minimal);
    CHECK(minimality_check(catalog("torus8").cdga).minimal);
    CHECK(minimality_check(catalog("heisenberg_c").cdga).minimal);
}

TEST_CASE("a linear differential part defeats minimality") {
    auto alg = std::make_shared<Algebra>(std::vector<Generator>{{"a", 2}, {"b", 1}}, 1, 6);
    auto a = GcaElement::generator(alg, 0);
    auto c = Cdga::create(alg, {GcaElement::zero(alg), a});  // d b = a, a linear part
    auto rep = minimality_check(c);
    CHECK_FALSE(rep.minimal);
    CHECK_FALSE(rep.reason.empty());
    CHECK_THROWS(cn_split(c));
}

TEST_CASE("canonical closed/non-closed generator split") {
    auto split = cn_split(catalog("kt").cdga);
    REQUIRE(split.C.size() == 3);
    REQUIRE(split.N.size() == 1);
    const auto& alg = catalog("kt").cdga->algebra();
    CHECK(split.C[0] == GcaElement::generator(alg, 0));
    CHECK(split.C[1] == GcaElement::generator(alg, 1));
    CHECK(split.C[2] == GcaElement::generator(alg, 3));
    CHECK(split.N[0] == GcaElement::generator(alg, 2));  // x3, with d x3 = x1 x2

    auto torus = cn_split(catalog("torus4").cdga);
    CHECK(torus.C.size() == 4);
    CHECK(torus.N.empty());

    auto heis = cn_split(catalog("heisenberg_c").cdga);
    CHECK(heis.C.size() == 6);
    CHECK(heis.N.size() == 2);  // theta and thetab
    for (const auto& n : heis.N) CHECK_FALSE(catalog("heisenberg_c").cdga->d(n).is_zero());
}

TEST_CASE("ideal and subalgebra slices") {
    const auto& c = catalog("kt").cdga;
    auto split = cn_split(c);
    // degree-2 slice of I(N): x3 times the degree-1 generators
    auto i2 = ideal_slice(c, split.N, 2);
    CHECK(i2.size() == 3);  // x1 x3, x2 x3, x3 x4
    auto basis2 = monomial_basis(*c->algebra(), 2);
    RowSpace ideal_span;
    for (const auto& v : i2) ideal_span.insert(coords_in_basis(v, basis2));
    CHECK(ideal_span.contains(coords_in_basis(c->parse_element("x1^x3"), basis2)));
    CHECK_FALSE(ideal_span.contains(coords_in_basis(c->parse_element("x1^x2"), basis2)));

    // Lambda(C) in degree 2: products of the three closed generators
    auto l2 = lambda_c_slice(c, split.C, 2);
    CHECK(l2.size() == 3);  // x1 x2, x1 x4, x2 x4
    RowSpace lc_span;
    for (const auto& v : l2) lc_span.insert(coords_in_basis(v, basis2));
    CHECK(lc_span.contains(coords_in_basis(c->parse_element("x1^x2"), basis2)));
    CHECK_FALSE(lc_span.contains(coords_in_basis(c->parse_element("x1^x3"), basis2)));
    // together they exhaust degree 2
    CHECK(ideal_span.dim() + lc_span.dim() == basis2.size());
}

TEST_CASE("nonformality witness of the nilmanifold model") {
    auto h = coh("kt");
    auto split = cn_split(h.complex().cdga());
    auto w = nonformality_witness(h, split, h.complex().top_degree());
    REQUIRE(w.has_value());
    const auto& c = h.complex().cdga();
    // the witness is closed, non-exact, and lies in the ideal of N
    CHECK(c->d(*w).is_zero());
    CHECK_FALSE(h.class_of(*w).is_zero());
    CHECK(*w == c->parse_element("x1^x3"));
}

TEST_CASE("tori yield no witness") {
    auto h = coh("torus4");
    auto split = cn_split(h.complex().cdga());
    CHECK_FALSE(nonformality_witness(h, split, h.complex().top_degree()).has_value());
}

TEST_CASE("complex Heisenberg model is non-formal too") {
    auto h = coh("heisenberg_c");
    auto split = cn_split(h.complex().cdga());
    auto w = nonformality_witness(h, split, h.complex().top_degree());
    REQUIRE(w.has_value());
    CHECK(h.complex().cdga()->d(*w).is_zero());
    CHECK_FALSE(h.class_of(*w).is_zero());
}

TEST_CASE("formality report verdicts") {
    auto rep_kt = formality_report(coh("kt"));
    CHECK(rep_kt.minimality.minimal);
    CHECK(rep_kt.verdict == "non-formal");
    REQUIRE(rep_kt.witness.has_value());

    auto rep_t = formality_report(coh("torus4"));
    CHECK(rep_t.verdict == "criterion satisfied for canonical split");
    CHECK_FALSE(rep_t.witness.has_value());
}

TEST_CASE("witness presence matches a by-hand ideal scan") {
    // independent oracle: search I(N) slices for closed non-exact vectors by
    // brute force over the basis elements produced by ideal_slice
    for (const char* name : {"kt", "torus4", "heisenberg_c"}) {
        auto h = coh(name);
        const auto& c = h.complex().cdga();
        auto split = cn_split(c);
        bool found = false;
        for (int k = 1; k <= h.complex().top_degree() && !found; ++k) {
            auto slice = ideal_slice(c, split.N, k);
            if (slice.empty()) continue;
            // closed subspace of the slice
            Matrix m(monomial_basis(*c->algebra(), k + 1).size(), slice.size());
            auto basis_next = monomial_basis(*c->algebra(), k + 1);
            for (size_t j = 0; j < slice.size(); ++j) {
                GcaElement dv = c->d(slice[j]);
                Vec col = dv.is_zero() ? Vec(basis_next.size()) : coords_in_basis(dv, basis_next);
                for (size_t i = 0; i < col.size(); ++i) m.at(i, j) = col[i];
            }
            for (const auto& kv : kernel_basis(m)) {
                GcaElement cand(c->algebra());
                for (size_t j = 0; j < slice.size(); ++j)
                    cand += kv[j] * slice[j];
                if (!cand.is_zero() && !h.class_of(cand).is_zero()) {
                    found = true;
                    break;
                }
            }
        }
        auto w = nonformality_witness(h, split, h.complex().top_degree());
        CHECK(w.has_value() == found);
    }
}
