#include <doctest.h>

#include <random>

#include "expmat/equiv.hpp"
#include "oracles.hpp"

using namespace expmat;

namespace {

const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);

ExpMat upper(Field f) { return ExpMat::make(make_poly(f, {{{1}, {0, 1}}, {{}, {1}}})); }
ExpMat lower(Field f) { return ExpMat::make(make_poly(f, {{{1}, {}}, {{0, 1}, {1}}})); }
Witness swap(Field f) { return Witness::make(make_const(f, {{0, 1}, {1, 0}})); }

constexpr Level kAll[] = {Level::Exponential, Level::Hopf,       Level::GroupHom,
                          Level::Projective,  Level::Automorphism, Level::Action};

ExpMat random_exp(Field f, std::size_t n, std::mt19937_64& rng) {
    const auto cat = oracle::catalog(f, n, 1 + rng() % 2);
    return build_from_tuple(cat[rng() % cat.size()]);
}

}  // namespace

TEST_CASE("witness construction") {
    CHECK_THROWS_AS(Witness::make(make_const(F2, {{1, 1}, {1, 1}})), SingularWitness);
    const Witness w = Witness::make(make_const(F3, {{1, 2}, {0, 1}}));
    CHECK(w.matrix() * w.inverse() == MatConst::identity(F3, 2));
}

TEST_CASE("conjugate examples") {
    CHECK(conjugate(upper(F2), Witness::make(MatConst::identity(F2, 2))) == upper(F2));
    CHECK(conjugate(upper(F2), swap(F2)) == lower(F2));
    CHECK(conjugate(ExpMat::identity(F3, 2), Witness::make(make_const(F3, {{1, 2}, {1, 1}}))) == ExpMat::identity(F3, 2));
    CHECK_THROWS_AS(conjugate(upper(F2), Witness::make(MatConst::identity(F2, 3))), SizeMismatch);
}

TEST_CASE("check_equiv examples") {
    CHECK(check_equiv(upper(F2), upper(F2), Witness::make(MatConst::identity(F2, 2))));
    CHECK(check_equiv(upper(F2), lower(F2), swap(F2)));
    for (std::uint64_t i = 0; i < 16; ++i) {
        const MatConst p = oracle::to_lib(F2, oracle::from_index(i, 2, 2), 2);
        if (det(p).is_zero()) continue;
        CHECK_FALSE(check_equiv(upper(F2), ExpMat::identity(F2, 2), Witness::make(p)));
    }
}

TEST_CASE("conjugation laws on random inputs") {
    std::mt19937_64 rng(41);
    for (Field f : {F2, F3}) {
        for (int it = 0; it < 40; ++it) {
            const ExpMat a = random_exp(f, 2, rng);
            const Witness p = Witness::make(oracle::random_invertible(f, 2, rng));
            const Witness q = Witness::make(oracle::random_invertible(f, 2, rng));
            CHECK(conjugate(conjugate(a, p), Witness::make(p.inverse())) == a);
            CHECK(conjugate(conjugate(a, p), q) == conjugate(a, Witness::make(q.matrix() * p.matrix())));
        }
    }
}

TEST_CASE("gl_order") {
    CHECK(gl_order(F2, 2) == 6);
    CHECK(gl_order(F3, 2) == 48);
    CHECK(gl_order(Field::galois(2, 2), 2) == 180);
    CHECK(gl_order(F2, 3) == 168);
    CHECK(gl_order(Field::prime(101), 20) == UINT64_MAX);
}

TEST_CASE("search_equiv examples") {
    const auto w = search_equiv(upper(F2), lower(F2));
    REQUIRE(w);
    CHECK(w->matrix() == make_const(F2, {{0, 1}, {1, 0}}));
    const auto same = search_equiv(upper(F3), upper(F3));
    REQUIRE(same);
    CHECK(same->matrix() == make_const(F3, {{1, 0}, {0, 1}}));
    CHECK_FALSE(search_equiv(upper(F2), ExpMat::identity(F2, 2)).has_value());
    SearchOptions tiny;
    tiny.budget = 3;
    CHECK_THROWS_AS(search_equiv(upper(F2), ExpMat::identity(F2, 2), tiny), BudgetExceeded);
    CHECK_THROWS_AS(search_equiv(upper(Field::rationals()), upper(Field::rationals())), NeedsFiniteField);
}

TEST_CASE("exhaustive search returns the least witness, serial and parallel alike") {
    std::mt19937_64 rng(43);
    for (Field f : {F2, F3}) {
        for (int it = 0; it < 10; ++it) {
            const ExpMat a = random_exp(f, 2, rng);
            const Witness p = Witness::make(oracle::random_invertible(f, 2, rng));
            const ExpMat b = conjugate(a, p);
            const auto w = search_equiv(a, b);
            const auto ws = search_equiv_serial(a, b);
            REQUIRE(w);
            REQUIRE(ws);
            CHECK(w->matrix() == ws->matrix());
            CHECK(check_equiv(a, b, *w));
            // no smaller index works
            const std::uint64_t q = *f.order();
            for (std::uint64_t i = 0; i < oracle::space(2, static_cast<oracle::i64>(q)); ++i) {
                const MatConst m = oracle::to_lib(f, oracle::from_index(i, 2, static_cast<oracle::i64>(q)), 2);
                if (m == w->matrix()) break;
                if (!det(m).is_zero()) CHECK_FALSE(check_equiv(a, b, Witness::make(m)));
            }
        }
    }
}

TEST_CASE("sampled search finds witnesses when the group is too large to scan") {
    std::mt19937_64 rng(47);
    const Field f = Field::prime(5);
    const ExpMat a = build_from_tuple(NilTuple::make(f, 3, {make_const(f, {{0, 1, 0}, {0, 0, 0}, {0, 0, 0}})}));
    const ExpMat b = conjugate(a, Witness::make(oracle::random_invertible(f, 3, rng)));
    SearchOptions opts;
    opts.budget = 200'000;  // < |GL(3, F_5)| = 1488000
    const auto w = search_equiv(a, b, opts);
    REQUIRE(w);
    CHECK(check_equiv(a, b, *w));
    CHECK(search_equiv_serial(a, b, opts)->matrix() == w->matrix());
}

TEST_CASE("search over an extension field") {
    SearchOptions opts;
    opts.extension = 2;
    const auto w = search_equiv(upper(F2), lower(F2), opts);
    REQUIRE(w);
    CHECK(w->field() == Field::galois(2, 2));
    CHECK(check_equiv(upper(F2), lower(F2), *w));
}

TEST_CASE("level letters") {
    for (Level l : kAll) CHECK(parse_level(std::string(1, level_letter(l))) == l);
    CHECK(level_letter(Level::Action) == 'f');
    CHECK_THROWS_AS(parse_level("g"), Error);
}

TEST_CASE("transport examples") {
    for (Level l : kAll) {
        CHECK(transport_equiv(l, upper(F2), lower(F2), swap(F2)));
        CHECK_FALSE(transport_equiv(l, upper(F2), ExpMat::identity(F2, 2), swap(F2)));
        CHECK_FALSE(transport_equiv(l, upper(F2), upper(F2), swap(F2)));
    }
}

TEST_CASE("every level agrees with check_equiv on random pairs") {
    std::mt19937_64 rng(53);
    for (Field f : {F2, F3, Field::galois(2, 2)}) {
        for (std::size_t n : {2u, 3u}) {
            for (int it = 0; it < 25; ++it) {
                const ExpMat a1 = random_exp(f, n, rng);
                const Witness p = Witness::make(oracle::random_invertible(f, n, rng));
                // half the time a true pair, half the time an arbitrary second matrix
                const ExpMat a2 = rng() % 2 ? conjugate(a1, p) : random_exp(f, n, rng);
                const bool truth = check_equiv(a1, a2, p);
                for (Level l : kAll) CHECK(transport_equiv(l, a1, a2, p) == truth);
            }
        }
    }
}

TEST_CASE("level agreement in characteristic 0") {
    const Field q = Field::rationals();
    const ExpMat a = build_from_tuple(NilTuple::make(q, 3, {make_const(q, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}})}));
    const Witness p = Witness::make(make_const(q, {{1, 2, 0}, {0, 1, 3}, {1, 0, 1}}));
    const ExpMat b = conjugate(a, p);
    for (Level l : kAll) {
        CHECK(transport_equiv(l, a, b, p));
        CHECK_FALSE(transport_equiv(l, a, a, p));
    }
}
