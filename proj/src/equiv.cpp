#include "expmat/equiv.hpp"

#include <limits>
#include <random>

#include "expmat/hopf.hpp"
#include "expmat/kernels.hpp"

namespace expmat {

Witness Witness::make(MatConst p) {
    MatConst inv = expmat::inverse(p);
    return Witness(std::move(p), std::move(inv));
}

namespace {

/// A's matrix carried into the witness field when that field is an extension.
MatPoly over_witness_field(const ExpMat& a, const Witness& p) {
    if (a.size() != p.size()) throw SizeMismatch("witness and matrix sizes differ");
    if (a.field() == p.field()) return a.matrix();
    return embed_matrix(a.matrix(), FieldEmbedding(a.field(), p.field()));
}

MatPoly conjugate_raw(const MatPoly& a, const Witness& p) {
    return lift_const(p.matrix()) * a * lift_const(p.inverse());
}

}  // namespace

ExpMat conjugate(const ExpMat& a, const Witness& p) { return ExpMat::make(conjugate_raw(over_witness_field(a, p), p)); }

bool check_equiv(const ExpMat& a1, const ExpMat& a2, const Witness& p) {
    return conjugate_raw(over_witness_field(a1, p), p) == over_witness_field(a2, p);
}

std::uint64_t gl_order(Field f, std::size_t n) {
    if (!f.is_finite()) throw NeedsFiniteField("GL(n, Q) is infinite");
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    const unsigned __int128 q = *f.order();
    unsigned __int128 qn = 1;
    for (std::size_t i = 0; i < n; ++i) {
        qn *= q;
        if (qn > kMax) return kMax;
    }
    unsigned __int128 order = 1, qi = 1;
    for (std::size_t i = 0; i < n; ++i) {
        order *= qn - qi;
        if (order > kMax) return kMax;
        qi *= q;
    }
    return static_cast<std::uint64_t>(order);
}

namespace {

template <class Scan>
std::optional<Witness> search_impl(const ExpMat& a1, const ExpMat& a2, const SearchOptions& opts, Scan scan) {
    if (a1.field() != a2.field()) throw FieldMismatch();
    if (a1.size() != a2.size()) throw SizeMismatch("matrices differ in size");
    const Field base = a1.field();
    if (!base.is_finite()) throw NeedsFiniteField("witness search needs a finite field");
    const Field big = base.extension(opts.extension);
    const FieldEmbedding emb(base, big);
    const MatPoly m1 = embed_matrix(a1.matrix(), emb);
    const MatPoly m2 = embed_matrix(a2.matrix(), emb);
    const std::size_t n = a1.size();

    if (gl_order(big, n) <= opts.budget) {
        const auto idx = scan(m1, m2, std::uint64_t{0}, kernels::matrix_space_size(big, n));
        if (!idx) return std::nullopt;
        return Witness::make(kernels::matrix_from_index(big, n, *idx));
    }

    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::uint64_t> entry(0, *big.order() - 1);
    for (std::uint64_t draw = 0; draw < opts.budget; ++draw) {
        std::vector<Elem> e;
        e.reserve(n * n);
        for (std::size_t k = 0; k < n * n; ++k) e.push_back(big.from_code(entry(rng)));
        MatConst p(big, n, std::move(e));
        if (det(p).is_zero()) continue;
        if (lift_const(p) * m1 == m2 * lift_const(p)) return Witness::make(std::move(p));
    }
    throw BudgetExceeded("no witness among " + std::to_string(opts.budget) + " random samples; |GL| = " +
                         std::to_string(gl_order(big, n)));
}

}  // namespace

std::optional<Witness> search_equiv(const ExpMat& a1, const ExpMat& a2, const SearchOptions& opts) {
    return search_impl(a1, a2, opts, kernels::omp::first_conjugator);
}

std::optional<Witness> search_equiv_serial(const ExpMat& a1, const ExpMat& a2, const SearchOptions& opts) {
    return search_impl(a1, a2, opts, kernels::serial::first_conjugator);
}

// ---------------------------------------------------------------- transport

Level parse_level(std::string_view s) {
    if (s.size() == 1 && s[0] >= 'a' && s[0] <= 'f') return static_cast<Level>(s[0] - 'a');
    throw Error("unknown equivalence level '" + std::string(s) + "'");
}

char level_letter(Level l) { return static_cast<char>('a' + static_cast<int>(l)); }

namespace {

constexpr std::size_t kAllPointsLimit = 4096;

/*
 * Enough parameters t to pin a polynomial identity of degree `degree`, and
 * enough points to pin a projective transformation. Over F_q the parameters
 * are all of GF(q^k) with q^k > degree; over Q they are 0, ..., degree.
 */
struct SampleDomain {
    Field field;
    std::vector<Elem> params;
    std::vector<ProjPoint> points;
};

std::vector<ProjPoint> standard_frame(Field f, std::size_t n) {
    std::vector<ProjPoint> frame;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Elem> e(n, f.zero());
        e[i] = f.one();
        frame.push_back(ProjPoint::make(std::move(e)));
    }
    if (n > 1) frame.push_back(ProjPoint::make(std::vector<Elem>(n, f.one())));
    return frame;
}

SampleDomain sample_domain(Field base, std::size_t n, long degree) {
    if (!base.is_finite()) {
        SampleDomain d{base, {}, standard_frame(base, n)};
        for (long t = 0; t <= std::max(degree, 0L); ++t) d.params.push_back(base.from_int(t));
        return d;
    }
    const std::uint64_t q = *base.order();
    unsigned k = 1;
    for (std::uint64_t big = q; big <= static_cast<std::uint64_t>(std::max(degree, 0L)); big *= q) ++k;
    const Field big = base.extension(k);
    SampleDomain d{big, {}, {}};
    for (std::uint64_t c = 0; c < *big.order(); ++c) d.params.push_back(big.from_code(c));
    std::uint64_t count = 0, qn = 1;
    for (std::size_t i = 0; i < n && count <= kAllPointsLimit; ++i) {
        qn *= *big.order();
        count = (qn - 1) / (*big.order() - 1);
    }
    if (count <= kAllPointsLimit)
        d.points = ProjectiveSpace(big, n).points();
    else
        d.points = standard_frame(big, n);
    return d;
}

bool proportional(const MatConst& x, const MatConst& y) {
    const auto& xe = x.entries();
    const auto& ye = y.entries();
    for (std::size_t k = 0; k < xe.size(); ++k) {
        if (xe[k].is_zero()) continue;
        const Elem c = ye[k] / xe[k];
        return !c.is_zero() && x.scaled(c) == y;
    }
    return y.is_zero();
}

bool hopf_level(const MatPoly& a1, const MatPoly& a2, const Witness& p) {
    // h1(inn(x_ij)) = sum_{l,m} p_il h1(x_lm) phat_mj must equal h2(x_ij)
    const HopfHom h1 = to_hopf(a1);
    const HopfHom h2 = to_hopf(a2);
    const std::size_t n = h1.size();
    const Field f = h1.field();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Poly1 v = Poly1::zero(f);
            for (std::size_t l = 0; l < n; ++l)
                for (std::size_t m = 0; m < n; ++m)
                    v += h1(l, m) * (p.matrix()(i, l) * p.inverse()(m, j));
            if (v != h2(i, j)) return false;
        }
    return true;
}

}  // namespace

bool transport_equiv(Level level, const ExpMat& a1, const ExpMat& a2, const Witness& p) {
    if (a1.field() != a2.field()) throw FieldMismatch();
    const MatPoly m1 = over_witness_field(a1, p);
    const MatPoly m2 = over_witness_field(a2, p);

    switch (level) {
        case Level::Exponential:
            return check_equiv(a1, a2, p);
        case Level::Hopf:
            return hopf_level(m1, m2, p);
        case Level::Projective: {
            const PGLClass theta1 = PGLClass::normalize(m1);
            const PGLClass theta2 = PGLClass::normalize(m2);
            return PGLClass::normalize(conjugate_raw(theta1.rep(), p)) == theta2;
        }
        case Level::GroupHom:
        case Level::Automorphism:
        case Level::Action:
            break;
    }

    const long degree = std::max(max_degree(m1), max_degree(m2));
    const SampleDomain dom = sample_domain(p.field(), p.size(), degree);
    const FieldEmbedding emb(p.field(), dom.field);
    const MatPoly b1 = embed_matrix(m1, emb);
    const MatPoly b2 = embed_matrix(m2, emb);
    const MatConst pm = embed_matrix(p.matrix(), emb);
    const MatConst pinv = embed_matrix(p.inverse(), emb);

    for (const Elem& t : dom.params) {
        const MatConst q1 = evaluate(b1, t);
        const MatConst q2 = evaluate(b2, t);
        switch (level) {
            case Level::GroupHom:
                if (pm * q1 * pinv != q2) return false;
                break;
            case Level::Automorphism:
                if (!proportional(pm * q1 * pinv, q2)) return false;
                break;
            default:
                // sigma = j(pi(P)) : x -> x P^T; check mu2(t, sigma x) = sigma(mu1(t, x))
                for (const ProjPoint& x : dom.points)
                    if (apply(q2, apply(pm, x)) != apply(pm, apply(q1, x))) return false;
                break;
        }
    }
    return true;
}

}  // namespace expmat
