#include <doctest.h>

#include <random>

#include "expmat/hopf.hpp"
#include "oracles.hpp"

using namespace expmat;

namespace {
const Field F2 = Field::prime(2);
const Field Q = Field::rationals();
}  // namespace

TEST_CASE("to_hopf transcribes values") {
    const MatPoly a = make_poly(Q, {{{1}, {0, 1}}, {{}, {1}}});
    const HopfHom h = to_hopf(a);
    CHECK(h(0, 0) == Poly1::one(Q));
    CHECK(h(0, 1) == Poly1::variable(Q));
    CHECK(h(1, 0).is_zero());
    CHECK(from_hopf(h) == a);
    CHECK(to_hopf(from_hopf(h)) == h);
    CHECK(to_hopf(MatPoly::identity(Q, 3)).values() == MatPoly::identity(Q, 3));
    CHECK_THROWS_AS(to_hopf(make_poly(Q, {{{1}, {0, 1}}, {{0, 1}, {1}}})), DetNotUnit);
    CHECK_THROWS_AS(to_hopf(make_poly(Q, {{{1}, {}}, {{}, {}}})), DetNotUnit);
    // det = -1 is a unit
    CHECK_NOTHROW(to_hopf(make_poly(Q, {{{0, 1}, {1}}, {{1}, {}}})));
}

TEST_CASE("comultiplication") {
    CHECK(check_comultiplication(to_hopf(make_poly(Q, {{{1}, {0, 1}}, {{}, {1}}}))));
    CHECK_FALSE(check_comultiplication(to_hopf(make_poly(Q, {{{1}, {0, 0, 1}}, {{}, {1}}}))));
    CHECK(check_comultiplication(to_hopf(make_poly(F2, {{{1}, {0, 0, 1}}, {{}, {1}}}))));
    CHECK(check_comultiplication(to_hopf(MatPoly::identity(F2, 2))));
}

TEST_CASE("counit") {
    CHECK(check_counit(to_hopf(make_poly(Q, {{{1}, {0, 1}}, {{}, {1}}}))));
    CHECK_FALSE(check_counit(to_hopf(make_poly(Q, {{{}, {1}}, {{1}, {}}}))));
    CHECK(check_counit(to_hopf(MatPoly::identity(Q, 2))));
}

TEST_CASE("antipode") {
    CHECK(check_antipode(to_hopf(make_poly(Q, {{{1}, {0, 1}}, {{}, {1}}}))));
    CHECK(check_antipode(to_hopf(make_poly(F2, {{{1}, {0, 1, 1}}, {{}, {1}}}))));
    const MatPoly d = MatPoly(Q, 2, {Poly1::constant(Q.from_int(2)), Poly1::zero(Q), Poly1::zero(Q),
                                     Poly1::constant(Q.parse_elem("1/2"))});
    CHECK_FALSE(check_antipode(to_hopf(d)));
}

TEST_CASE("is_hopf_hom") {
    CHECK(is_hopf_hom(to_hopf(make_poly(Q, {{{1}, {0, 1}}, {{}, {1}}}))));
    CHECK_FALSE(is_hopf_hom(to_hopf(make_poly(Q, {{{1}, {0, 0, 1}}, {{}, {1}}}))));
    CHECK(is_hopf_hom(to_hopf(make_poly(F2, {{{1, 1}, {0, 1}}, {{0, 1}, {1, 1}}}))));
}

TEST_CASE("characterization over all degree <= 1 2x2 matrices over F_2 with unit det") {
    // 2^8 candidates: every entry c0 + c1 T
    int unit = 0, agree = 0, oracle_true = 0;
    for (int bits = 0; bits < 256; ++bits) {
        oracle::IPolyMat m(4);
        for (int e = 0; e < 4; ++e) m[e] = {(bits >> (2 * e)) & 1, (bits >> (2 * e + 1)) & 1};
        const MatPoly a = oracle::to_lib(F2, m, 2);
        const Poly1 d = det(a);
        if (d.degree() != 0) continue;
        ++unit;
        const HopfHom h = to_hopf(a);
        const bool exp_ok = verify_exponential(a).exponential;
        CHECK(exp_ok == is_hopf_hom(h));
        CHECK(exp_ok == oracle::exponential(m, 2, 2));
        if (is_hopf_hom(h)) CHECK(check_antipode(h));
        agree += exp_ok == is_hopf_hom(h);
        oracle_true += oracle::exponential(m, 2, 2);
    }
    CHECK(agree == unit);
    CHECK(oracle_true == 4);
}

TEST_CASE("characterization on random higher-degree samples") {
    std::mt19937_64 rng(37);
    for (Field f : {Field::prime(2), Field::prime(3), Field::galois(2, 2), Q}) {
        int seen = 0;
        for (int it = 0; it < 400; ++it) {
            // I + sum of random layers, sometimes perturbed
            MatPoly a = MatPoly::identity(f, 2);
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j)
                    if (rng() % 2) a(i, j) = a(i, j) + Poly1::monomial(oracle::random_elem(f, rng), 1 + rng() % 4);
            Poly1 d;
            try {
                d = det(a);
            } catch (...) {
                continue;
            }
            if (d.degree() != 0) continue;
            ++seen;
            const HopfHom h = to_hopf(a);
            CHECK(verify_exponential(a).exponential == is_hopf_hom(h));
            if (is_hopf_hom(h)) CHECK(check_antipode(h));
        }
        CHECK(seen > 0);
    }
}
