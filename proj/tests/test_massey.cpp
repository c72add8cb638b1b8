#include <doctest.h>

#include "cdgalab/geomcheck.hpp"
#include "cdgalab/massey.hpp"
#include "test_util.hpp"

using namespace cdgalab;

namespace {

Cohomology coh(const char* model) {
    return Cohomology(CochainComplex::full(catalog(model).cdga));
}

}  // namespace

TEST_CASE("the nilmanifold triple product is nontrivial") {
    auto h = coh("kt");
    const auto& c = h.complex().cdga();
    auto a = h.class_of(c->parse_element("x1"));
    auto b = h.class_of(c->parse_element("x2"));

    auto r = triple_massey(h, a, a, b);
    REQUIRE(r.defined);
    validate_defining_system(h, r.system, r.inputs);
    CHECK(r.value.degree == 2);
    CHECK_FALSE(r.value.is_zero());
    CHECK(r.nontrivial);
    // the value is [x1 x3] and the indeterminacy [x1] H^1 + H^1 [x2] misses it
    CHECK(r.value.coords == h.class_of(c->parse_element("x1^x3")).coords);
    CHECK(r.indeterminacy.size() == 2);
    CHECK_FALSE(h.in_span(r.value, r.indeterminacy));
}

TEST_CASE("triple products on a torus are trivial") {
    auto h = coh("torus4");
    const auto& c = h.complex().cdga();
    auto a = h.class_of(c->parse_element("x1"));
    // on the torus nothing is exact in positive degree, so a defined product
    // needs the cup products to vanish on the nose; <a,a,a> qualifies
    auto r = triple_massey(h, a, a, a);
    REQUIRE(r.defined);
    validate_defining_system(h, r.system, r.inputs);
    CHECK(r.value.is_zero());
    CHECK_FALSE(r.nontrivial);
}

TEST_CASE("undefined products are rejected") {
    auto h = coh("kt");
    const auto& c = h.complex().cdga();
    auto a1 = h.class_of(c->parse_element("x1"));
    auto a2 = h.class_of(c->parse_element("x2"));
    auto a4 = h.class_of(c->parse_element("x4"));
    // [x2][x4] is a nonzero cup product, so <x1,x2,x4> is not defined
    CHECK_THROWS_AS(triple_massey(h, a1, a2, a4), std::invalid_argument);
}

TEST_CASE("higher product agrees with the triple construction on arity 3") {
    auto h = coh("kt");
    const auto& c = h.complex().cdga();
    auto a = h.class_of(c->parse_element("x1"));
    auto b = h.class_of(c->parse_element("x2"));
    auto t = triple_massey(h, a, a, b);
    auto g = higher_massey(h, {a, a, b});
    REQUIRE(g.defined);
    validate_defining_system(h, g.system, g.inputs);
    CHECK(g.value.degree == t.value.degree);
    CHECK_FALSE(g.value.is_zero());
    CHECK_FALSE(h.in_span(g.value, t.indeterminacy));
    // the two conventions agree up to overall sign modulo the indeterminacy
    CohClass diff = t.value;
    CohClass sum = t.value;
    for (size_t i = 0; i < diff.coords.size(); ++i) {
        diff.coords[i] = diff.coords[i] - g.value.coords[i];
        sum.coords[i] = sum.coords[i] + g.value.coords[i];
    }
    CHECK((h.in_span(diff, t.indeterminacy) || h.in_span(sum, t.indeterminacy)));
}

TEST_CASE("quadruple product in the invariant subalgebra is certified nonzero") {
    const auto& bundle = catalog("invariant_A");
    Cohomology h(CochainComplex::sub(*bundle.invariant));
    const auto& c = bundle.cdga;
    auto a1 = h.class_of(c->parse_element("nu^etab"));
    auto a2 = h.class_of(c->parse_element("mu^mub"));
    auto a4 = h.class_of(c->parse_element("eta^nub"));

    auto r = higher_massey(h, {a1, a2, a2, a4});
    REQUIRE(r.defined);
    validate_defining_system(h, r.system, r.inputs);
    CHECK(r.value.degree == 6);  // 4 * 2 - 2

    auto w = h.class_of(c->parse_element("nu^nub"));
    auto cert = witness_certify(h, r, w, 5);
    CHECK(cert.verdict == "certified nonzero");
    CHECK(cert.samples.size() == 5);
    CHECK_FALSE(cert.pairing.is_zero());
    // every re-seeded pairing is the same top-degree class
    for (const auto& s : cert.samples) CHECK(s.coords == cert.pairing.coords);

    // pairing against a class that kills the value stays uncertified
    auto bad = witness_certify(h, r, a2, 5);
    CHECK(bad.verdict == "not certified");
}

TEST_CASE("the full complex reproduces the invariant quadruple value") {
    auto h = coh("heisenberg_c");
    const auto& c = h.complex().cdga();
    auto a1 = h.class_of(c->parse_element("nu^etab"));
    auto a2 = h.class_of(c->parse_element("mu^mub"));
    auto a4 = h.class_of(c->parse_element("eta^nub"));
    auto r = higher_massey(h, {a1, a2, a2, a4});
    REQUIRE(r.defined);
    validate_defining_system(h, r.system, r.inputs);
    CHECK_FALSE(r.value.is_zero());
    CHECK(r.value.coords ==
          h.class_of(Scalar(-1) * c->parse_element("mu^theta^eta^mub^thetab^etab")).coords);
}

TEST_CASE("torus quadruple products are never certified") {
    auto h = coh("torus8");
    const auto& c = h.complex().cdga();
    auto a = h.class_of(c->parse_element("x1^x2"));
    auto b = h.class_of(c->parse_element("x1^x3"));
    auto r = higher_massey(h, {a, b, a, b});
    REQUIRE(r.defined);
    CHECK(r.value.is_zero());
    auto w = h.class_of(c->parse_element("x5^x6"));
    CHECK(witness_certify(h, r, w, 5).verdict == "not certified");
}

TEST_CASE("seeds move the defining system but keep it valid") {
    const auto& bundle = catalog("invariant_A");
    Cohomology h(CochainComplex::sub(*bundle.invariant));
    const auto& c = bundle.cdga;
    auto a1 = h.class_of(c->parse_element("nu^etab"));
    auto a2 = h.class_of(c->parse_element("mu^mub"));
    auto a4 = h.class_of(c->parse_element("eta^nub"));
    for (int seed : {1, 2, 7}) {
        auto r = higher_massey(h, {a1, a2, a2, a4}, seed);
        REQUIRE(r.defined);
        CHECK(r.seed == seed);
        validate_defining_system(h, r.system, r.inputs);
    }
}

TEST_CASE("formal trivialization produces an exact value where one exists") {
    // torus: every product is trivial and the canonical split has N = 0
    auto h = coh("torus4");
    const auto& c = h.complex().cdga();
    auto split = cn_split(c);
    CHECK(split.N.empty());
    auto a = h.class_of(c->parse_element("x1"));
    auto r = formal_trivialization(h, split, {a, a, a});
    REQUIRE(r.defined);
    validate_defining_system(h, r.system, r.inputs);
    CHECK(r.value.is_zero());

    // nilmanifold: the nontrivial triple product cannot be trivialized
    auto hk = coh("kt");
    auto split_k = cn_split(hk.complex().cdga());
    auto ak = hk.class_of(hk.complex().cdga()->parse_element("x1"));
    auto bk = hk.class_of(hk.complex().cdga()->parse_element("x2"));
    CHECK_THROWS_AS(formal_trivialization(hk, split_k, {ak, ak, bk}), std::logic_error);
}
