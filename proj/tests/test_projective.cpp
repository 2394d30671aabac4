#include <doctest.h>

#include <set>

#include "expmat/modrep.hpp"
#include "expmat/projective.hpp"
#include "oracles.hpp"

using namespace expmat;

namespace {

const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);
const Field F5 = Field::prime(5);

ExpMat upper(Field f) { return ExpMat::make(make_poly(f, {{{1}, {0, 1}}, {{}, {1}}})); }

ProjPoint pt(Field f, std::vector<std::int64_t> c) {
    std::vector<Elem> e;
    for (auto x : c) e.push_back(f.from_code(static_cast<std::uint64_t>(x)));
    return ProjPoint::make(e);
}

std::vector<ExpMat> small_catalog() {
    std::vector<ExpMat> out;
    for (std::size_t r = 0; r <= 2; ++r)
        for (const NilTuple& t : oracle::catalog(F2, 2, r)) out.push_back(build_from_tuple(t));
    for (const NilTuple& t : oracle::catalog(F3, 2, 1)) out.push_back(build_from_tuple(t));
    return out;
}

}  // namespace

TEST_CASE("points normalize and order colexicographically") {
    CHECK(pt(F3, {0, 2, 1}).coords() == pt(F3, {0, 1, 2}).coords());
    CHECK(pt(F3, {2, 2}) == pt(F3, {1, 1}));
    CHECK_THROWS_AS(pt(F3, {0, 0}), Error);
    const ProjectiveSpace s(F2, 2);
    REQUIRE(s.count() == 3);
    CHECK(s[0] == pt(F2, {1, 0}));
    CHECK(s[1] == pt(F2, {0, 1}));
    CHECK(s[2] == pt(F2, {1, 1}));
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        const Field f = Field::galois(static_cast<std::uint64_t>(q == 4 || q == 8 ? 2 : q == 9 ? 3 : q),
                                      q == 4 ? 2 : q == 8 ? 3 : q == 9 ? 2 : 1);
        for (std::size_t n = 1; n <= 3; ++n) {
            const ProjectiveSpace sp(f, n);
            std::uint64_t expect = 0, qq = 1;
            for (std::size_t i = 0; i < n; ++i, qq *= q) expect += qq;  // (q^n - 1)/(q - 1)
            CHECK(sp.count() == expect);
            for (std::size_t i = 0; i < sp.count(); ++i) CHECK(sp.locate(sp[i]) == i);
        }
    }
}

TEST_CASE("project") {
    const Field q = Field::rationals();
    CHECK(project(upper(q)).rep() == upper(q).matrix());
    CHECK(project(ExpMat::identity(q, 3)).rep() == MatPoly::identity(q, 3));
    const ExpMat b = ExpMat::make(make_poly(F2, {{{1}, {0, 1, 1}}, {{}, {1}}}));
    CHECK(project(b).rep() == b.matrix());
}

TEST_CASE("lift") {
    CHECK(lift(project(upper(F2))) == upper(F2));
    CHECK(lift(make_poly(F5, {{{2}, {0, 2}}, {{}, {2}}})) == upper(F5));
    // content: a common polynomial factor is removed
    CHECK(lift(make_poly(F5, {{{0, 3}, {0, 0, 3}}, {{}, {0, 3}}})) == upper(F5));
    try {
        (void)lift(make_poly(F2, {{{1}, {0, 1}}, {{0, 1}, {1}}}));
        FAIL("expected NotExponential");
    } catch (const NotExponential& e) {
        const ExpCertificate& c = e.certificate();
        CHECK(c.row == 0);
        CHECK(c.col == 0);
        // product entry 1 + T T'
        CHECK(c.product == Poly2::one(F2) + Poly2::tensor(Poly1::variable(F2), Poly1::variable(F2)));
    }
    CHECK_THROWS_AS(lift(make_poly(F5, {{{1}, {0, 1}}, {{}, {2}}})), NotScalarAtZero);
    CHECK_THROWS_AS(PGLClass::normalize(MatPoly(F5, 2)), NotScalarAtZero);
}

TEST_CASE("lift and project are inverse on the catalog, including scalar perturbations") {
    for (const ExpMat& a : small_catalog()) {
        CHECK(lift(project(a)) == a);
        const PGLClass c = project(a);
        CHECK(project(lift(c)) == c);
    }
    for (std::size_t r = 0; r <= 2; ++r)
        for (const NilTuple& t : oracle::catalog(F5, 2, r)) {
            const ExpMat a = build_from_tuple(t);
            CHECK(lift(a.matrix().scaled(F5.from_int(2))) == a);
            CHECK(lift(a.matrix().scaled(Poly1(F5, {F5.from_int(1), F5.from_int(3)}))) == a);
        }
}

TEST_CASE("act") {
    const GaAction mu(upper(F2));
    CHECK(act(mu, F2.one(), pt(F2, {0, 1})) == pt(F2, {1, 1}));
    CHECK(act(mu, F2.one(), pt(F2, {1, 0})) == pt(F2, {1, 0}));
    const ProjectiveSpace line(F2, 2);
    for (const ProjPoint& x : line.points()) CHECK(act(mu, F2.zero(), x) == x);
    // the action may be evaluated over an extension field
    const Field f4 = action_field(mu, 4);
    CHECK(f4 == Field::galois(2, 2));
    CHECK(act(mu, f4.from_code(2), pt(f4, {0, 1})) == pt(f4, {2, 1}));
    CHECK_THROWS_AS(action_field(mu, 6), BadField);
    CHECK_THROWS_AS(action_field(mu, 3), BadField);
}

TEST_CASE("verify_action examples") {
    CHECK(verify_action(GaAction(upper(F2)), 2));
    CHECK(verify_action(GaAction(ExpMat::identity(F3, 3)), 9));
    CHECK(verify_action(GaAction(ExpMat::make(make_poly(F2, {{{1}, {0, 1, 1}}, {{}, {1}}}))), 4));
    CHECK(verify_action_serial(GaAction(upper(F2)), 8));
}

TEST_CASE("orbits examples") {
    const auto o = orbits(GaAction(upper(F2)), 2);
    REQUIRE(o.size() == 2);
    CHECK(o[0] == std::vector<ProjPoint>{pt(F2, {1, 0})});
    CHECK(o[1] == std::vector<ProjPoint>{pt(F2, {0, 1}), pt(F2, {1, 1})});
    CHECK(orbits(GaAction(ExpMat::identity(F2, 2)), 2).size() == 3);
    const auto o3 = orbits(GaAction(upper(F3)), 3);
    REQUIRE(o3.size() == 2);
    CHECK(o3[0] == std::vector<ProjPoint>{pt(F3, {1, 0})});
    CHECK(o3[1] == std::vector<ProjPoint>{pt(F3, {0, 1}), pt(F3, {1, 1}), pt(F3, {1, 2})});
}

TEST_CASE("fixed_points examples") {
    CHECK(fixed_points(GaAction(upper(F2)), 2) == std::vector<ProjPoint>{pt(F2, {1, 0})});
    CHECK(fixed_points(GaAction(ExpMat::identity(F2, 2)), 2) == ProjectiveSpace(F2, 2).points());
    const GaAction b(ExpMat::make(make_poly(F2, {{{1}, {0, 1, 1}}, {{}, {1}}})));
    CHECK(fixed_points(b, 2).size() == 3);
    CHECK(fixed_points(b, 4).size() == 1);
}

TEST_CASE("orbit structure on the catalog for q up to 9") {
    for (const ExpMat& a : small_catalog()) {
        const GaAction mu(a);
        const std::uint64_t p = a.field().characteristic();
        for (std::uint64_t q = p; q <= 9; q *= p) {
            CHECK(verify_action(mu, q));
            const auto orbs = orbits(mu, q);
            std::uint64_t total = 0;
            std::set<std::uint64_t> seen;
            std::vector<ProjPoint> singles;
            for (const auto& o : orbs) {
                std::uint64_t s = o.size();
                while (s % p == 0) s /= p;
                CHECK(s == 1);
                CHECK(q % o.size() == 0);
                CHECK(std::is_sorted(o.begin(), o.end()));
                for (const ProjPoint& x : o) seen.insert(x.code());
                total += o.size();
                if (o.size() == 1) singles.push_back(o[0]);
            }
            CHECK(total == q + 1);
            CHECK(seen.size() == q + 1);
            std::sort(singles.begin(), singles.end());
            CHECK(fixed_points(mu, q) == singles);
            CHECK_FALSE(singles.empty());
            for (std::size_t i = 1; i < orbs.size(); ++i) CHECK(orbs[i - 1].front() < orbs[i].front());
        }
    }
}

TEST_CASE("orbits are closed under the whole group (brute force)") {
    const Field f4 = Field::galois(2, 2);
    const GaAction mu(build_from_tuple(NilTuple::make(F2, 3, {make_const(F2, {{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}),
                                                              make_const(F2, {{0, 0, 1}, {0, 0, 0}, {0, 0, 0}})})));
    const ProjectiveSpace space(f4, 3);
    for (const auto& o : orbits(mu, 4)) {
        std::set<std::uint64_t> members;
        for (const ProjPoint& x : o) members.insert(x.code());
        for (const ProjPoint& x : o)
            for (std::uint64_t t = 0; t < 4; ++t) CHECK(members.count(act(mu, f4.from_code(t), x).code()) == 1);
    }
    CHECK(verify_action(mu, 4) == verify_action_serial(mu, 4));
}
