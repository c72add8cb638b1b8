#include <doctest.h>

#include <string>

#include "cdgalab/cdga.hpp"
#include "cdgalab/geomcheck.hpp"
#include "test_util.hpp"

using namespace cdgalab;

TEST_CASE("nilmanifold model differential") {
    const auto& kt = catalog("kt").cdga;
    auto x = [&](int i) { return GcaElement::generator(kt->algebra(), i); };

    CHECK(kt->d(x(0)).is_zero());
    CHECK(kt->d(x(1)).is_zero());
    CHECK(kt->d(x(3)).is_zero());
    CHECK(kt->d(x(2)) == wedge(x(0), x(1)));  // d x3 = x1 x2
    // Leibniz: d(x3 x4) = (d x3) x4 - x3 d x4 = x1 x2 x4
    CHECK(kt->d(wedge(x(2), x(3))) == wedge(wedge(x(0), x(1)), x(3)));
    CHECK(kt->d(GcaElement::unit(kt->algebra())).is_zero());
}

TEST_CASE("d squares to zero on random elements") {
    testutil::Rng rng(31);
    for (const char* name : {"kt", "heisenberg_c", "torus8"}) {
        const auto& c = catalog(name).cdga;
        int top = c->algebra()->top_degree();
        for (int trial = 0; trial < 40; ++trial) {
            GcaElement a = testutil::random_element(rng, c->algebra(), rng.range(0, top));
            CHECK(c->d(c->d(a)).is_zero());
        }
    }
}

TEST_CASE("structure constants failing Jacobi are rejected with a witness") {
    LieAlgebraPresentation lie;
    lie.dimension = 3;
    lie.structure.assign(3, Matrix(3, 3));
    // [X1,X2] = X3, [X2,X3] = X1, [X3,X1] = X1: Jacobi fails
    lie.structure[2].at(0, 1) = Scalar(1);
    lie.structure[2].at(1, 0) = Scalar(-1);
    lie.structure[0].at(1, 2) = Scalar(1);
    lie.structure[0].at(2, 1) = Scalar(-1);
    lie.structure[0].at(2, 0) = Scalar(1);
    lie.structure[0].at(0, 2) = Scalar(-1);
    lie.validate_antisymmetry();
    CHECK_FALSE(lie.jacobi_holds());
    CHECK_THROWS_AS(lie.validate_jacobi(), std::exception);
    try {
        chevalley_eilenberg(lie);
        FAIL("expected a Jacobi rejection");
    } catch (const std::exception& e) {
        CHECK(std::string(e.what()).find("Jacobi") != std::string::npos);
    }
}

TEST_CASE("Chevalley-Eilenberg of an abelian algebra has zero differential") {
    LieAlgebraPresentation lie;
    lie.dimension = 4;
    lie.structure.assign(4, Matrix(4, 4));
    auto c = chevalley_eilenberg(lie);
    for (int i = 0; i < 4; ++i) CHECK(c->d_generator(i).is_zero());
}

TEST_CASE("morphism extension validates the chain-map identity") {
    const auto& kt = catalog("kt").cdga;
    auto x = [&](int i) { return GcaElement::generator(kt->algebra(), i); };
    Morphism id = extend_morphism(kt, kt, {x(0), x(1), x(2), x(3)});
    GcaElement probe = wedge(x(0), x(2)) + Scalar(3) * x(3);
    CHECK(id.apply(probe) == probe);

    // x1 -> x2, x2 -> x1, x3 -> -x3 respects d x3 = x1 x2? d(-x3) = -x1x2
    // but phi(x1 x2) = x2 x1 = -x1 x2, so this one is a valid chain map.
    Morphism swap = extend_morphism(kt, kt, {x(1), x(0), -x(2), x(3)});
    CHECK(swap.apply(kt->d(x(2))) == kt->d(swap.apply(x(2))));

    // x3 -> x4 breaks d phi(x3) = phi(x1 x2): the error names the generator
    try {
        extend_morphism(kt, kt, {x(0), x(1), x(3), x(2)});
        FAIL("expected a chain-map rejection");
    } catch (const std::exception& e) {
        CHECK(std::string(e.what()).find("x3") != std::string::npos);
    }
}

TEST_CASE("group action validates its order") {
    const auto& bundle = catalog("z3_action");
    REQUIRE(bundle.action != nullptr);
    CHECK(bundle.action->order() == 3);
    const auto& c = bundle.cdga;
    auto mu = GcaElement::generator(c->algebra(), 0);
    GcaElement once = bundle.action->apply(mu);
    CHECK(once != mu);
    CHECK(bundle.action->apply(bundle.action->apply(once)) == mu);  // rho^3 = id
    // claiming order 2 for the same morphism must fail
    CHECK_THROWS_AS(GroupAction(2, bundle.action->morphism()), std::exception);
}

TEST_CASE("invariant subalgebra dimensions and explicit bases") {
    const auto& bundle = catalog("invariant_A");
    REQUIRE(bundle.invariant.has_value());
    const auto& inv = *bundle.invariant;
    const auto& c = bundle.cdga;

    const int expected_dims[] = {1, 0, 16, 8, 36, 8, 16, 0, 1};
    for (int k = 0; k <= 8; ++k) {
        CHECK(inv.dim(k) == expected_dims[k]);
        CHECK(invariant_dimension_by_trace(c, *catalog("z3_action").action, k) ==
              expected_dims[k]);
    }

    // independent description of the degree-2 slice:
    // {mu,nu,eta} ^ {mub,nub,etab} together with the theta products
    std::vector<std::string> deg2;
    for (const char* a : {"mu", "nu", "eta"})
        for (const char* b : {"mub", "nub", "etab"}) deg2.push_back(std::string(a) + "^" + b);
    for (const char* w : {"mu^theta", "nu^theta", "eta^theta", "mub^thetab", "nub^thetab",
                          "etab^thetab", "theta^thetab"})
        deg2.push_back(w);
    REQUIRE(deg2.size() == 16);

    auto span_matches = [&](int k, const std::vector<std::string>& exprs) {
        auto basis = monomial_basis(*c->algebra(), k);
        RowSpace computed;
        for (const auto& v : inv.degree_bases.at(k)) computed.insert(coords_in_basis(v, basis));
        RowSpace described;
        for (const auto& e : exprs) {
            Vec coords = coords_in_basis(c->parse_element(e), basis);
            CHECK(computed.contains(coords));  // described element is invariant
            described.insert(coords);
        }
        CHECK(described.dim() == exprs.size());  // described set independent
        CHECK(described.dim() == computed.dim());
    };
    span_matches(2, deg2);

    // degree 3: Lambda^3 of (mu,nu,eta,thetab) plus Lambda^3 of (mub,nub,etab,theta)
    std::vector<std::string> deg3;
    auto triples = [&](const std::vector<std::string>& g) {
        for (size_t i = 0; i < g.size(); ++i)
            for (size_t j = i + 1; j < g.size(); ++j)
                for (size_t k = j + 1; k < g.size(); ++k)
                    deg3.push_back(g[i] + "^" + g[j] + "^" + g[k]);
    };
    triples({"mu", "nu", "eta", "thetab"});
    triples({"mub", "nub", "etab", "theta"});
    REQUIRE(deg3.size() == 8);
    span_matches(3, deg3);
}

TEST_CASE("invariant subalgebra elements stay fixed and closed under d") {
    const auto& bundle = catalog("invariant_A");
    const auto& action = catalog("z3_action").action;
    const auto& inv = *bundle.invariant;
    for (const auto& [k, vecs] : inv.degree_bases) {
        auto basis_next = monomial_basis(*bundle.cdga->algebra(), k + 1);
        RowSpace next;
        if (inv.degree_bases.count(k + 1))
            for (const auto& v : inv.degree_bases.at(k + 1))
                next.insert(coords_in_basis(v, basis_next));
        for (const auto& v : vecs) {
            CHECK(action->apply(v) == v);
            GcaElement dv = bundle.cdga->d(v);
            if (!dv.is_zero()) CHECK(next.contains(coords_in_basis(dv, basis_next)));
        }
    }
}

TEST_CASE("reality with respect to the configured conjugation") {
    const auto& m = catalog("omega_m");
    const auto& c = m.cdga;
    REQUIRE(m.omega_element.has_value());
    CHECK(c->reality_check(*m.omega_element));
    CHECK_FALSE(c->reality_check(c->parse_element("mu^nu")));
    // i mu mub is real: conj flips i and swaps the odd pair, two signs cancel
    CHECK(c->reality_check(c->parse_element("i*mu^mub")));
    GcaElement a = c->parse_element("mu^nub");
    CHECK(c->conj_element(c->conj_element(a)) == a);
}

TEST_CASE("expression parsing round trips") {
    const auto& kt = catalog("kt").cdga;
    auto x = [&](int i) { return GcaElement::generator(kt->algebra(), i); };
    CHECK(kt->parse_element("x1^x2 + 2*x3^x4") ==
          wedge(x(0), x(1)) + Scalar(2) * wedge(x(2), x(3)));
    CHECK(kt->parse_element("-1/2*x1") == Scalar(Rational::parse("-1/2")) * x(0));
    CHECK(kt->parse_element("x2^x1") == -wedge(x(0), x(1)));
    CHECK_THROWS(kt->parse_element("x9"));
    CHECK_THROWS(kt->parse_element("x1 +"));
}
