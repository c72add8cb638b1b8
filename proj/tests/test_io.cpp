#include <doctest.h>

#include "cdgalab/geomcheck.hpp"
#include "cdgalab/homology.hpp"
#include "cdgalab/io.hpp"
#include "test_util.hpp"

using namespace cdgalab;
using cdgalab::io::json;

TEST_CASE("scalar serialization round trips") {
    Scalar r(Rational::parse("-3/7"));
    json jr = io::scalar_to_json(r);
    CHECK(jr == json("-3/7"));
    CHECK(io::scalar_from_json(jr) == r);

    Scalar z = Scalar::zeta(12, 4) + Scalar(2).promoted(12);
    json jz = io::scalar_to_json(z);
    CHECK(jz["order"] == 12);
    CHECK(io::scalar_from_json(jz) == z);

    testutil::Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        Scalar s = testutil::random_scalar(rng, 12);
        CHECK(io::scalar_from_json(io::scalar_to_json(s)) == s);
    }
}

TEST_CASE("element serialization round trips") {
    const auto& c = catalog("kt").cdga;
    GcaElement e = c->parse_element("x1^x2 - 1/3*x3^x4 + 2*x1^x4");
    json je = io::element_to_json(e);
    CHECK(io::element_from_json(c->algebra(), je) == e);
    CHECK(io::element_from_json(c->algebra(), io::element_to_json(GcaElement::zero(c->algebra())))
              .is_zero());

    // unsorted words deserialize through normalization with the Koszul sign
    json unsorted = json::array({{{"coeff", "1"}, {"monomial", json::array({"x2", "x1"})}}});
    CHECK(io::element_from_json(c->algebra(), unsorted) == c->parse_element("-1*x1^x2"));
}

TEST_CASE("matrix serialization round trips") {
    Matrix m(2, 3);
    m.at(0, 1) = Scalar(Rational::parse("5/2"));
    m.at(1, 2) = Scalar(-4);
    json jm = io::matrix_to_json(m);
    Matrix back = io::matrix_from_json(jm);
    CHECK(back.row_count() == 2);
    CHECK(back.col_count() == 3);
    CHECK(back.rows == m.rows);
}

TEST_CASE("a CDGA file reproduces the built-in model") {
    json j = {
        {"generators", json::array({{{"name", "x1"}, {"degree", 1}},
                                    {{"name", "x2"}, {"degree", 1}},
                                    {{"name", "x3"}, {"degree", 1}},
                                    {{"name", "x4"}, {"degree", 1}}})},
        {"differential", {{"x3", "x1^x2"}}},
    };
    CdgaPtr c = io::cdga_from_json(j);
    CHECK(c->d(c->parse_element("x3")) == c->parse_element("x1^x2"));
    Cohomology h(CochainComplex::full(c));
    CHECK(h.betti() == std::vector<int>{1, 3, 4, 3, 1});

    // serialize the catalog model and re-parse; differentials must agree
    const auto& kt = catalog("kt").cdga;
    CdgaPtr back = io::cdga_from_json(io::cdga_to_json(kt));
    for (int i = 0; i < 4; ++i)
        CHECK(back->d_generator(i).to_string() == kt->d_generator(i).to_string());
    // canonical dump: re-serialization is byte-identical
    CHECK(io::cdga_to_json(back).dump() == io::cdga_to_json(kt).dump());
}

TEST_CASE("a CDGA file with conjugation and a cyclotomic field") {
    json j = {
        {"field", 12},
        {"generators", json::array({{{"name", "u"}, {"degree", 1}},
                                    {{"name", "ub"}, {"degree", 1}}})},
        {"differential", json::object()},
        {"conjugation", {{"u", "ub"}}},
    };
    CdgaPtr c = io::cdga_from_json(j);
    CHECK(c->has_conjugation());
    CHECK(c->reality_check(c->parse_element("i*u^ub")));
}

TEST_CASE("invalid CDGA files are rejected") {
    json bad = {
        {"generators", json::array({{{"name", "a"}, {"degree", 1}},
                                    {{"name", "b"}, {"degree", 1}}})},
        {"differential", {{"b", "a^b"}}},  // d^2 (would be) fine but degree is off? no:
    };
    // d b = a b has degree 2 = |b| + 1, but then d(db) = -a d b = -a a b = 0.
    // That one is legal; an actually broken one: d a = b with |b| = 1.
    CHECK_NOTHROW(io::cdga_from_json(bad));
    json degree_off = {
        {"generators", json::array({{{"name", "a"}, {"degree", 1}},
                                    {{"name", "b"}, {"degree", 1}}})},
        {"differential", {{"a", "b"}}},
    };
    CHECK_THROWS(io::cdga_from_json(degree_off));
}

TEST_CASE("Lie algebra files build the expected model") {
    json j = {
        {"dimension", 4},
        {"brackets", json::array({{{"i", 1}, {"j", 2}, {"coeffs", {{"3", "-1"}}}}})},
    };
    LieAlgebraPresentation lie = io::lie_from_json(j);
    CHECK(lie.dimension == 4);
    CHECK(lie.c(2, 0, 1) == Scalar(-1));
    CHECK(lie.c(2, 1, 0) == Scalar(1));  // antisymmetry filled in
    auto c = chevalley_eilenberg(lie);
    CHECK(c->d(GcaElement::generator(c->algebra(), 2)) ==
          c->parse_element("x1^x2"));
}

TEST_CASE("action files validate against the CDGA") {
    const auto& c = catalog("heisenberg_c").cdga;
    json j = {
        {"order", 3},
        // z is the primitive 12th root here, so the cube root of unity is z^4
        {"images",
         {{"mu", "z^4*mu"},
          {"nu", "z^4*nu"},
          {"theta", "z^8*theta"},
          {"eta", "z^4*eta"},
          {"mub", "z^8*mub"},
          {"nub", "z^8*nub"},
          {"thetab", "z^4*thetab"},
          {"etab", "z^8*etab"}}},
    };
    GroupAction action = io::action_from_json(c, j);
    CHECK(action.order() == 3);
    auto mu = GcaElement::generator(c->algebra(), 0);
    CHECK(action.apply(mu, 3) == mu);

    json wrong_order = j;
    wrong_order["order"] = 2;
    CHECK_THROWS(io::action_from_json(c, wrong_order));
}

TEST_CASE("lattice files accept both twist spellings") {
    json j = {
        {"coords", json::array({{{"exponent", 1}},
                                {{"exponent", 1}},
                                {{"exponent", 2}, {"twist", {{"translate_of", 1}, {"times", 0}}}},
                                {{"exponent", 1}}})},
    };
    LatticeModel m = io::lattice_from_json(j);
    REQUIRE(m.coords.size() == 4);
    CHECK(m.coords[2].twist == std::make_pair(1, 0));
    CHECK(count_fixed_points(m) == 81);

    json shorthand = {
        {"coords", json::array({{{"exponent", 2}, {"twist", {{"by", 1}}}}})},
        {"window", 3},
    };
    LatticeModel s = io::lattice_from_json(shorthand);
    CHECK(s.coords[0].twist == std::make_pair(1, 1));
    CHECK(s.window == 3);
}
