#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "expmat/matrix.hpp"
#include "oracles.hpp"

using namespace expmat;

namespace {

Poly1 P(Field f, std::vector<std::int64_t> c) {
    std::vector<Elem> e;
    for (auto x : c) e.push_back(f.from_int(x));
    return Poly1(f, std::move(e));
}

// Leibniz expansion, used as the determinant reference.
template <class R>
R leibniz(const Matrix<R>& a) {
    const std::size_t n = a.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    R total = RingTraits<R>::zero(a.field());
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        R term = RingTraits<R>::one(a.field());
        for (std::size_t i = 0; i < n; ++i) term = term * a(i, perm[i]);
        total = inversions % 2 ? total - term : total + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace

TEST_SUITE("field") {
    TEST_CASE("construction and validation") {
        CHECK(Field::prime(7).order() == 7u);
        CHECK(Field::galois(3, 2).order() == 9u);
        CHECK_FALSE(Field::rationals().is_finite());
        CHECK(Field::prime(5) == Field::galois(5, 1));
        CHECK(Field::parse("2,3") == Field::galois(2, 3));
        CHECK(Field::parse("0") == Field::rationals());
        CHECK_THROWS_AS(Field::prime(4), BadField);
        CHECK_THROWS_AS(Field::prime(1), BadField);
        CHECK_THROWS_AS(Field::parse("0,2"), BadField);
        CHECK_THROWS_AS(Field::parse("x"), BadField);
        CHECK_THROWS_AS(Field::galois(2, 0), BadField);
    }

    TEST_CASE("least monic irreducible modulus") {
        CHECK(Field::galois(2, 2).modulus() == std::vector<std::uint64_t>{1, 1, 1});
        CHECK(Field::galois(2, 3).modulus() == std::vector<std::uint64_t>{1, 1, 0, 1});
        CHECK(Field::galois(3, 2).modulus() == std::vector<std::uint64_t>{1, 0, 1});
        CHECK(Field::galois(2, 4).modulus() == std::vector<std::uint64_t>{1, 1, 0, 0, 1});
        CHECK(Field::galois(5, 2).modulus() == std::vector<std::uint64_t>{2, 0, 1});
    }

    TEST_CASE("codes and canonical forms") {
        const Field f = Field::galois(3, 2);
        for (std::uint64_t c = 0; c < 9; ++c) CHECK(f.from_code(c).code() == c);
        CHECK_THROWS_AS(f.from_code(9), BadField);
        CHECK(Field::prime(5).from_int(-3).code() == 2);
        const Field q = Field::rationals();
        CHECK(q.parse_elem("2/4").to_string() == "1/2");
        CHECK(q.parse_elem("-6/3") == q.from_int(-2));
        CHECK_THROWS_AS(q.parse_elem("1/0"), DivisionByZero);
        CHECK_THROWS_AS(f.zero().inv(), DivisionByZero);
        CHECK_THROWS_AS(Field::prime(2).one() + Field::prime(3).one(), FieldMismatch);
    }

    TEST_CASE("field axioms on random triples") {
        std::mt19937_64 rng(7);
        for (Field f : {Field::prime(7), Field::galois(2, 3), Field::galois(3, 2), Field::galois(2, 8), Field::rationals()}) {
            for (int it = 0; it < 300; ++it) {
                const Elem a = oracle::random_elem(f, rng), b = oracle::random_elem(f, rng), c = oracle::random_elem(f, rng);
                CHECK((a + b) + c == a + (b + c));
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * (b + c) == a * b + a * c);
                CHECK(a + b == b + a);
                CHECK(a * b == b * a);
                CHECK(a - a == f.zero());
                if (!a.is_zero()) CHECK(a * a.inv() == f.one());
            }
        }
    }

    TEST_CASE("Frobenius on GF(2^3) permutes the field and x^(q-1) = 1") {
        const Field f = Field::galois(2, 3);
        std::vector<std::uint64_t> image;
        for (std::uint64_t c = 0; c < 8; ++c) image.push_back(f.from_code(c).pow(2).code());
        std::sort(image.begin(), image.end());
        CHECK(image == std::vector<std::uint64_t>{0, 1, 2, 3, 4, 5, 6, 7});
        for (std::uint64_t c = 1; c < 8; ++c) CHECK(f.from_code(c).pow(7) == f.one());
    }

    TEST_CASE("embedding GF(4) into GF(16) is a ring map") {
        const Field small = Field::galois(2, 2), big = Field::galois(2, 4);
        const FieldEmbedding emb(small, big);
        CHECK(emb(small.one()) == big.one());
        for (std::uint64_t a = 0; a < 4; ++a)
            for (std::uint64_t b = 0; b < 4; ++b) {
                const Elem x = small.from_code(a), y = small.from_code(b);
                CHECK(emb(x + y) == emb(x) + emb(y));
                CHECK(emb(x * y) == emb(x) * emb(y));
            }
        CHECK_THROWS_AS(FieldEmbedding(Field::galois(2, 3), big), BadField);
    }
}

TEST_SUITE("poly") {
    TEST_CASE("no trailing zeros") {
        const Field f = Field::prime(3);
        CHECK(P(f, {1, 0, 3}).degree() == 0);
        CHECK(P(f, {0, 0}).is_zero());
        CHECK(P(f, {}).degree() == -1);
    }

    TEST_CASE("sum substitution") {
        const Field f2 = Field::prime(2), q = Field::rationals();
        const Poly2 s2 = shift_sum(P(f2, {0, 0, 1}));
        CHECK(s2 == Poly2::left(P(f2, {0, 0, 1})) + Poly2::right(P(f2, {0, 0, 1})));
        CHECK(s2.coeff(1, 1).is_zero());
        const Poly2 sq = shift_sum(P(q, {0, 0, 1}));
        CHECK(sq.coeff(2, 0) == q.one());
        CHECK(sq.coeff(1, 1) == q.from_int(2));
        CHECK(sq.coeff(0, 2) == q.one());
    }

    TEST_CASE("negate, zero and power substitutions") {
        const Field f5 = Field::prime(5);
        CHECK(reflect(P(f5, {1, 3})) == P(f5, {1, 2}));
        CHECK(at_zero(P(f5, {4, 3})) == f5.from_int(4));
        CHECK(at_zero(P(f5, {})) == f5.zero());
        CHECK(power_subst(P(f5, {1, 2, 3}), 3) == P(f5, {1, 0, 0, 2, 0, 0, 3}));
    }

    TEST_CASE("substitution properties on random polynomials") {
        std::mt19937_64 rng(11);
        for (Field f : {Field::prime(2), Field::prime(3), Field::galois(2, 2), Field::rationals()}) {
            for (int it = 0; it < 100; ++it) {
                const Poly1 a = oracle::random_poly(f, 7, rng);
                CHECK(shift_sum(a).at_second_zero() == a);
                CHECK(reflect(reflect(a)) == a);
                CHECK(shift_sum(a) == shift_sum(a));  // deterministic
            }
        }
    }

    TEST_CASE("Frobenius identity (a + b)^p = a^p + b^p") {
        std::mt19937_64 rng(13);
        for (Field f : {Field::prime(2), Field::prime(3), Field::prime(5), Field::galois(3, 2)}) {
            const std::uint64_t p = f.characteristic();
            auto pw = [&](const Poly1& x) {
                Poly1 r = Poly1::one(f);
                for (std::uint64_t i = 0; i < p; ++i) r = r * x;
                return r;
            };
            for (int it = 0; it < 50; ++it) {
                const Poly1 a = oracle::random_poly(f, 5, rng), b = oracle::random_poly(f, 5, rng);
                CHECK(pw(a + b) == pw(a) + pw(b));
            }
        }
        // fails in characteristic 0
        const Field q = Field::rationals();
        const Poly1 t = Poly1::variable(q), one = Poly1::one(q);
        CHECK((t + one) * (t + one) != t * t + one);
    }

    TEST_CASE("division and gcd") {
        const Field f = Field::prime(7);
        const Poly1 a = P(f, {1, 1}) * P(f, {2, 0, 1});
        const auto [quo, rem] = a.divmod(P(f, {1, 1}));
        CHECK(quo == P(f, {2, 0, 1}));
        CHECK(rem.is_zero());
        CHECK(gcd(a, P(f, {1, 1}) * P(f, {3, 1})) == P(f, {1, 1}));
        CHECK(gcd(P(f, {}), P(f, {})).is_zero());
        CHECK(gcd(P(f, {0, 2}), P(f, {})) == P(f, {0, 1}));
        CHECK_THROWS_AS(P(f, {1, 0, 1}).exact_div(P(f, {1, 1})), Error);
        CHECK_THROWS_AS(a.divmod(P(f, {})), DivisionByZero);
    }

    TEST_CASE("evaluation") {
        const Field f = Field::prime(5);
        CHECK(P(f, {1, 2, 3})(f.from_int(2)) == f.from_int(1 + 4 + 12));
        CHECK(Poly1::zero(f)(f.one()).is_zero());
    }
}

TEST_SUITE("matrix") {
    TEST_CASE("products") {
        const Field f2 = Field::prime(2);
        const MatPoly a = make_poly(f2, {{{1}, {0, 1}}, {{}, {1}}});
        CHECK(MatPoly::identity(f2, 2) * a == a);
        CHECK(a * a == MatPoly::identity(f2, 2));
        const Field q = Field::rationals();
        CHECK(make_const(q, {{0, 1}, {0, 0}}) * make_const(q, {{0, 0}, {1, 0}}) == make_const(q, {{1, 0}, {0, 0}}));
        CHECK_THROWS_AS(MatConst::identity(q, 2) * MatConst::identity(q, 3), SizeMismatch);
    }

    TEST_CASE("determinants") {
        const Field f2 = Field::prime(2), q = Field::rationals();
        CHECK(det(make_poly(q, {{{1}, {0, 1}}, {{}, {1}}})) == Poly1::one(q));
        CHECK(det(make_poly(f2, {{{1, 1}, {0, 1}}, {{0, 1}, {1, 1}}})) == Poly1::one(f2));
        CHECK(det(make_poly(q, {{{0, 1}, {}}, {{}, {0, 1}}})) == P(q, {0, 0, 1}));
        CHECK(det(MatConst(q, 0)) == q.one());
    }

    TEST_CASE("cofactor and fraction-free elimination agree with Leibniz") {
        std::mt19937_64 rng(17);
        for (Field f : {Field::prime(3), Field::galois(2, 2), Field::rationals()}) {
            for (std::size_t n = 1; n <= 6; ++n) {
                for (int it = 0; it < 4; ++it) {
                    std::vector<Poly1> e;
                    for (std::size_t i = 0; i < n * n; ++i) e.push_back(oracle::random_poly(f, 3, rng));
                    const MatPoly a(f, n, e);
                    CHECK(det(a) == leibniz(a));
                    const MatConst c = oracle::random_const(f, n, rng);
                    CHECK(det(c) == leibniz(c));
                }
            }
        }
    }

    TEST_CASE("det is multiplicative") {
        std::mt19937_64 rng(19);
        for (Field f : {Field::prime(5), Field::galois(3, 2), Field::rationals()}) {
            for (std::size_t n : {2u, 3u, 5u}) {
                std::vector<Poly1> x, y;
                for (std::size_t i = 0; i < n * n; ++i) {
                    x.push_back(oracle::random_poly(f, 3, rng));
                    y.push_back(oracle::random_poly(f, 3, rng));
                }
                const MatPoly a(f, n, x), b(f, n, y);
                CHECK(det(a * b) == det(a) * det(b));
            }
        }
    }

    TEST_CASE("unimodular inverse") {
        const Field q = Field::rationals(), f2 = Field::prime(2);
        CHECK(inverse_unimodular(make_poly(q, {{{1}, {0, 1}}, {{}, {1}}})) == make_poly(q, {{{1}, {0, -1}}, {{}, {1}}}));
        const MatPoly b = make_poly(f2, {{{1}, {0, 1, 1}}, {{}, {1}}});
        CHECK(inverse_unimodular(b) == b);
        CHECK_THROWS_AS(inverse_unimodular(make_poly(q, {{{0, 1}, {}}, {{}, {1}}})), NotUnimodular);
        CHECK_THROWS_AS(inverse_unimodular(make_poly(q, {{{0}, {}}, {{}, {1}}})), NotUnimodular);
    }

    TEST_CASE("unimodular round trip on products of elementary matrices") {
        std::mt19937_64 rng(23);
        for (Field f : {Field::prime(2), Field::prime(3), Field::rationals()}) {
            for (std::size_t n : {2u, 3u, 4u, 5u}) {
                MatPoly a = MatPoly::identity(f, n);
                for (int k = 0; k < 6; ++k) {
                    MatPoly e = MatPoly::identity(f, n);
                    const std::size_t i = rng() % n;
                    std::size_t j = rng() % n;
                    if (i == j) j = (j + 1) % n;
                    e(i, j) = oracle::random_poly(f, 3, rng);
                    a = a * e;
                }
                const Elem s = f.from_int(1 + static_cast<std::int64_t>(rng() % (f.is_finite() ? f.characteristic() - 1 : 5)));
                a(0, 0) = a(0, 0) * s;  // scale row 0 by a unit
                for (std::size_t j = 1; j < n; ++j) a(0, j) = a(0, j) * s;
                const MatPoly inv = inverse_unimodular(a);
                CHECK(a * inv == MatPoly::identity(f, n));
                CHECK(inv * a == MatPoly::identity(f, n));
            }
        }
    }

    TEST_CASE("constant inverse") {
        std::mt19937_64 rng(29);
        for (Field f : {Field::prime(3), Field::galois(2, 2), Field::rationals()}) {
            for (int it = 0; it < 20; ++it) {
                const MatConst a = oracle::random_invertible(f, 3, rng);
                CHECK(a * inverse(a) == MatConst::identity(f, 3));
            }
        }
        CHECK_THROWS_AS(inverse(make_const(Field::prime(2), {{1, 1}, {1, 1}})), SingularWitness);
    }

    TEST_CASE("nilpotency") {
        const Field f2 = Field::prime(2);
        CHECK(is_nilpotent_p(make_const(f2, {{0, 1}, {0, 0}})));
        CHECK(is_nilpotent_p(make_const(f2, {{1, 1}, {1, 1}})));
        CHECK_FALSE(is_nilpotent_p(MatConst::identity(f2, 2)));
        // N^2 = O needs p >= 2, but over F_2 a 3x3 Jordan block has N^2 != O
        CHECK_FALSE(is_nilpotent_p(make_const(f2, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}})));
        CHECK(is_nilpotent(make_const(f2, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}})));
        CHECK(is_nilpotent_p(make_const(Field::prime(3), {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}})));
    }

    TEST_CASE("nilpotent count matches brute force") {
        for (std::int64_t p : {2, 3}) {
            const Field f = Field::prime(static_cast<std::uint64_t>(p));
            std::size_t count = 0;
            for (std::uint64_t i = 0; i < oracle::space(2, p); ++i)
                if (is_nilpotent_p(oracle::to_lib(f, oracle::from_index(i, 2, p), 2))) ++count;
            CHECK(count == oracle::nilpotents(2, p).size());
        }
        CHECK(oracle::nilpotents(2, 2).size() == 4);
    }

    TEST_CASE("commutation") {
        const Field f = Field::prime(2);
        const MatConst n = make_const(f, {{0, 1}, {0, 0}}), m = make_const(f, {{0, 0}, {1, 0}});
        const std::vector<MatConst> same{n, n}, diff{n, m}, none{};
        CHECK(all_commute(same));
        CHECK_FALSE(all_commute(diff));
        CHECK(all_commute(none));
        const std::vector<MatConst> bad{n, MatConst::identity(f, 3)};
        CHECK_THROWS_AS(all_commute(bad), SizeMismatch);
    }

    TEST_CASE("coefficient extraction and evaluation") {
        const Field f = Field::prime(3);
        const MatPoly a = make_poly(f, {{{1}, {0, 1, 2}}, {{}, {1}}});
        CHECK(max_degree(a) == 2);
        CHECK(coefficient(a, 2) == make_const(f, {{0, 2}, {0, 0}}));
        CHECK(constant_term(a) == MatConst::identity(f, 2));
        CHECK(evaluate(a, f.from_int(1)) == make_const(f, {{1, 0}, {0, 1}}));
        CHECK(lift_const(MatConst::identity(f, 2)) == MatPoly::identity(f, 2));
    }
}
