#include "expmat/expcore.hpp"

#include <algorithm>
#include <limits>

namespace expmat {

namespace {

MatPoly2 embed_left(const MatPoly& a) {
    return a.map([](const Poly1& p) { return Poly2::left(p); });
}

MatPoly2 embed_right(const MatPoly& a) {
    return a.map([](const Poly1& p) { return Poly2::right(p); });
}

}  // namespace

ExpCheck verify_exponential(const MatPoly& a) {
    const Field f = a.field();
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Elem c0 = at_zero(a(i, j));
            const Elem want = i == j ? f.one() : f.zero();
            if (c0 == want) continue;
            ExpCertificate cert;
            cert.reason = ExpCertificate::Reason::NotIdentityAtZero;
            cert.row = i;
            cert.col = j;
            cert.product = Poly2::left(Poly1::constant(c0));
            cert.expected = Poly2::left(Poly1::constant(want));
            cert.difference = cert.expected - cert.product;
            return {false, std::move(cert)};
        }

    const MatPoly2 product = embed_left(a) * embed_right(a);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Poly2 expected = shift_sum(a(i, j));
            if (expected == product(i, j)) continue;
            ExpCertificate cert;
            cert.reason = ExpCertificate::Reason::FunctionalEquation;
            cert.row = i;
            cert.col = j;
            cert.product = product(i, j);
            cert.difference = expected - product(i, j);
            cert.expected = std::move(expected);
            return {false, std::move(cert)};
        }
    return {true, std::nullopt};
}

NotExponential::NotExponential(ExpCertificate cert)
    : Error("matrix is not exponential: entry (" + std::to_string(cert.row + 1) + "," + std::to_string(cert.col + 1) +
            ") differs by " + cert.difference.to_string()),
      cert_(std::move(cert)) {}

ExpMat ExpMat::make(MatPoly a) {
    ExpCheck check = verify_exponential(a);
    if (!check) throw NotExponential(std::move(*check.certificate));
    if (det(a) != Poly1::one(a.field())) throw Error("exponential matrix with determinant != 1");
    return ExpMat(std::move(a));
}

ExpMat ExpMat::identity(Field f, std::size_t n) { return ExpMat(MatPoly::identity(f, n)); }

// ---------------------------------------------------------------- NilTuple

NilTuple NilTuple::make(Field f, std::size_t n, std::vector<MatConst> mats) {
    NilTuple t = unchecked(f, n, std::move(mats));
    const bool char0 = f.characteristic() == 0;
    if (char0 && t.length() > 1) throw Error("characteristic 0 tuples have at most one entry");
    for (const MatConst& m : t.mats_)
        if (!(char0 ? is_nilpotent(m) : is_nilpotent_p(m)))
            throw NotNilpotent("tuple entry is not nilpotent: " + to_string(m));
    if (!all_commute(t.mats_)) throw NotCommuting("tuple entries do not commute");
    return t;
}

NilTuple NilTuple::unchecked(Field f, std::size_t n, std::vector<MatConst> mats) {
    for (const MatConst& m : mats) {
        if (m.size() != n) throw SizeMismatch("tuple entry has the wrong size");
        if (m.field() != f) throw FieldMismatch();
    }
    return NilTuple(f, n, std::move(mats));
}

bool NilTuple::valid() const {
    const bool char0 = field_.characteristic() == 0;
    if (char0 && length() > 1) return false;
    for (const MatConst& m : mats_)
        if (!(char0 ? is_nilpotent(m) : is_nilpotent_p(m))) return false;
    return all_commute(mats_);
}

NilTuple NilTuple::trimmed() const {
    std::vector<MatConst> m = mats_;
    while (!m.empty() && m.back().is_zero()) m.pop_back();
    return NilTuple(field_, n_, std::move(m));
}

NilTuple NilTuple::padded(std::size_t count) const {
    std::vector<MatConst> m = mats_;
    m.insert(m.end(), count, MatConst(field_, n_));
    return NilTuple(field_, n_, std::move(m));
}

// ---------------------------------------------------------------- exponentials

std::uint64_t layer_degree(Field f, std::size_t i) {
    const std::uint64_t p = f.characteristic();
    if (p == 0) {
        if (i != 0) throw Error("characteristic 0 has a single layer");
        return 1;
    }
    std::uint64_t d = 1;
    for (std::size_t k = 0; k < i; ++k) {
        if (d > std::numeric_limits<std::uint32_t>::max() / p) throw Error("layer degree overflow");
        d *= p;
    }
    return d;
}

MatPoly trunc_exp(const MatConst& n, std::uint64_t e) {
    if (e == 0) throw Error("truncated exponential needs e >= 1");
    const Field f = n.field();
    const std::uint64_t p = f.characteristic();
    if (!(p == 0 ? is_nilpotent(n) : is_nilpotent_p(n)))
        throw NotNilpotent("cannot exponentiate a non-nilpotent matrix: " + to_string(n));
    // N^j = O for j >= size, so min(p, size) terms suffice
    const std::uint64_t bound = p == 0 ? n.size() : std::min<std::uint64_t>(p, n.size());
    const std::size_t sz = n.size();
    MatPoly result = MatPoly::identity(f, sz);
    MatConst power = MatConst::identity(f, sz);
    Elem factorial = f.one();
    for (std::uint64_t j = 1; j < bound; ++j) {
        power = power * n;
        if (power.is_zero()) break;
        factorial *= f.from_int(static_cast<std::int64_t>(j));
        const Elem scale = factorial.inv();
        for (std::size_t r = 0; r < sz; ++r)
            for (std::size_t c = 0; c < sz; ++c)
                if (!power(r, c).is_zero()) result(r, c) += Poly1::monomial(power(r, c) * scale, j * e);
    }
    return result;
}

ExpMat build_from_tuple(const NilTuple& tuple) {
    MatPoly acc = MatPoly::identity(tuple.field(), tuple.size());
    for (std::size_t i = 0; i < tuple.length(); ++i) {
        if (tuple[i].is_zero()) continue;
        acc = acc * trunc_exp(tuple[i], layer_degree(tuple.field(), i));
    }
    return ExpMat::make(std::move(acc));
}

NilTuple factor_matrix(const MatPoly& a) {
    const Field f = a.field();
    const std::size_t n = a.size();
    const std::uint64_t p = f.characteristic();
    if (!constant_term(a).is_identity()) throw FactorResidue("A(0) is not the identity");

    std::vector<MatConst> mats;
    if (p == 0) {
        const MatConst nil = coefficient(a, 1);
        if (!nil.is_zero()) {
            if (!is_nilpotent(nil)) throw FactorResidue("coefficient of T is not nilpotent");
            mats.push_back(nil);
        }
    } else {
        MatPoly residue = a;
        for (std::size_t i = 0; !residue.is_identity(); ++i) {
            const long top = max_degree(residue);
            const std::uint64_t d = layer_degree(f, i);
            if (d > static_cast<std::uint64_t>(top))
                throw FactorResidue("residue of degree " + std::to_string(top) + " left after layer " + std::to_string(i));
            for (std::uint64_t k = 1; k < d; ++k)
                if (!coefficient(residue, k).is_zero())
                    throw FactorResidue("nonzero coefficient of T^" + std::to_string(k) + " below layer degree " +
                                        std::to_string(d));
            const MatConst nil = coefficient(residue, d);
            if (!is_nilpotent_p(nil)) throw FactorResidue("layer " + std::to_string(i + 1) + " is not nilpotent");
            mats.push_back(nil);
            if (!nil.is_zero()) residue = trunc_exp(-nil, d) * residue;
        }
    }
    if (!all_commute(mats)) throw FactorResidue("layers do not commute");
    NilTuple tuple = NilTuple::unchecked(f, n, std::move(mats)).trimmed();

    MatPoly rebuilt = MatPoly::identity(f, n);
    for (std::size_t i = 0; i < tuple.length(); ++i)
        if (!tuple[i].is_zero()) rebuilt = rebuilt * trunc_exp(tuple[i], layer_degree(f, i));
    if (rebuilt != a) throw FactorResidue("layers do not reproduce the input");
    return tuple;
}

NilTuple factor(const ExpMat& a) { return factor_matrix(a.matrix()); }

bool negate_inverse_check(const ExpMat& a) {
    return inverse_unimodular(a.matrix()) == a.matrix().map([](const Poly1& p) { return reflect(p); });
}

}  // namespace expmat
