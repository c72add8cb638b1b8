// Randomized property suites, each with at least 200 cases.
#include <doctest.h>

#include "cdgalab/geomcheck.hpp"
#include "cdgalab/massey.hpp"
#include "test_util.hpp"

using namespace cdgalab;

TEST_CASE("property: wedge sign law") {
    testutil::Rng rng(101);
    const auto& alg = catalog("torus8").cdga->algebra();
    int cases = 0;
    while (cases < 200) {
        int p = rng.range(0, 4);
        int q = rng.range(0, 4);
        GcaElement a = testutil::random_element(rng, alg, p);
        GcaElement b = testutil::random_element(rng, alg, q);
        GcaElement lhs = wedge(a, b);
        GcaElement rhs = wedge(b, a);
        if ((p * q) % 2 != 0) rhs = -rhs;
        CHECK(lhs == rhs);
        ++cases;
    }
}

TEST_CASE("property: the differential squares to zero") {
    testutil::Rng rng(102);
    const char* models[] = {"kt", "heisenberg_c", "torus8"};
    int cases = 0;
    while (cases < 201) {
        const auto& c = catalog(models[cases % 3]).cdga;
        int top = c->algebra()->top_degree();
        GcaElement a = testutil::random_element(rng, c->algebra(), rng.range(0, top), 4);
        CHECK(c->d(c->d(a)).is_zero());
        ++cases;
    }
}

TEST_CASE("property: Jacobi identity iff the construction accepts") {
    testutil::Rng rng(103);
    int cases = 0;
    int accepted = 0;
    while (cases < 200) {
        int n = rng.range(3, 4);
        LieAlgebraPresentation lie;
        lie.dimension = n;
        lie.structure.assign(static_cast<size_t>(n), Matrix(static_cast<size_t>(n),
                                                            static_cast<size_t>(n)));
        // random sparse antisymmetric structure constants
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (rng.range(0, 4) == 0) {
                        Scalar v(rng.range(-2, 2));
                        lie.structure[static_cast<size_t>(k)].at(static_cast<size_t>(i),
                                                                 static_cast<size_t>(j)) = v;
                        lie.structure[static_cast<size_t>(k)].at(static_cast<size_t>(j),
                                                                 static_cast<size_t>(i)) = -v;
                    }
        bool jacobi = lie.jacobi_holds();
        bool constructed = true;
        try {
            auto c = chevalley_eilenberg(lie);  // validates d^2 = 0
            for (int g = 0; g < n; ++g)
                if (!c->d(c->d(GcaElement::generator(c->algebra(), g))).is_zero())
                    constructed = false;
        } catch (const std::exception&) {
            constructed = false;
        }
        CHECK(jacobi == constructed);
        if (constructed) ++accepted;
        ++cases;
    }
    CHECK(accepted > 0);  // the sample hits both sides of the equivalence
}

TEST_CASE("property: cup products ignore the choice of representative") {
    testutil::Rng rng(104);
    auto cdga = catalog("kt").cdga;
    Cohomology h(CochainComplex::full(cdga));
    int cases = 0;
    while (cases < 200) {
        int p = rng.range(1, 2);
        int q = rng.range(1, 2);
        GcaElement a = testutil::random_element(rng, cdga->algebra(), p);
        GcaElement b = testutil::random_element(rng, cdga->algebra(), q);
        if (a.is_zero() || b.is_zero()) continue;
        if (!cdga->d(a).is_zero() || !cdga->d(b).is_zero()) continue;
        GcaElement a2 = a + cdga->d(testutil::random_element(rng, cdga->algebra(), p - 1));
        GcaElement b2 = b + cdga->d(testutil::random_element(rng, cdga->algebra(), q - 1));
        if (a2.is_zero() || b2.is_zero()) continue;
        auto lhs = h.cup(h.class_of(a), h.class_of(b));
        auto rhs = h.cup(h.class_of(a2), h.class_of(b2));
        CHECK(lhs.coords == rhs.coords);
        ++cases;
    }
}

TEST_CASE("property: product value degrees") {
    testutil::Rng rng(105);
    auto cdga = catalog("torus8").cdga;
    Cohomology h(CochainComplex::full(cdga));
    const auto& alg = cdga->algebra();
    // monomial classes all containing the first generator: every pairwise
    // product vanishes on the nose, so products of any arity are defined
    auto random_class = [&](int degree) {
        auto basis = monomial_basis(*alg, degree);
        for (;;) {
            const auto& m =
                basis[static_cast<size_t>(rng.range(0, static_cast<int>(basis.size()) - 1))];
            if (!m.factors.empty() && m.factors.front().first == 0)
                return h.class_of(GcaElement::monomial(alg, m));
        }
    };
    int cases = 0;
    while (cases < 200) {
        int t = (cases % 2 == 0) ? 3 : 4;
        std::vector<CohClass> classes;
        int total = 0;
        for (int i = 0; i < t; ++i) {
            int deg = rng.range(1, 2);
            total += deg;
            classes.push_back(random_class(deg));
        }
        auto r = higher_massey(h, classes);
        REQUIRE(r.defined);
        CHECK(r.value.degree == total - (t - 2));
        ++cases;
    }
}

TEST_CASE("property: the averaging projector is idempotent and chain-level") {
    testutil::Rng rng(106);
    const auto& bundle = catalog("z3_action");
    const auto& c = bundle.cdga;
    const auto& action = *bundle.action;
    Scalar third = Scalar(1).promoted(c->algebra()->field_order()) /
                   Scalar(3).promoted(c->algebra()->field_order());
    auto project = [&](const GcaElement& a) {
        GcaElement sum = a + action.apply(a, 1) + action.apply(a, 2);
        return third * sum;
    };
    int cases = 0;
    while (cases < 200) {
        GcaElement a = testutil::random_element(rng, c->algebra(), rng.range(0, 8), 4);
        GcaElement pa = project(a);
        CHECK(project(pa) == pa);              // idempotent
        CHECK(action.apply(pa) == pa);         // lands in the invariants
        CHECK(project(c->d(a)) == c->d(pa));   // commutes with the differential
        ++cases;
    }
}
