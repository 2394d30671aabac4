#include "expmat/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace expmat {

MatConst make_const(Field f, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    const std::size_t n = rows.size();
    std::vector<Elem> e;
    e.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n) throw SizeMismatch("matrix literal is not square");
        for (std::int64_t v : row) e.push_back(f.from_int(v));
    }
    return MatConst(f, n, std::move(e));
}

MatPoly make_poly(Field f, std::initializer_list<std::initializer_list<std::vector<std::int64_t>>> rows) {
    const std::size_t n = rows.size();
    std::vector<Poly1> e;
    e.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n) throw SizeMismatch("matrix literal is not square");
        for (const auto& coeffs : row) {
            std::vector<Elem> c;
            for (std::int64_t v : coeffs) c.push_back(f.from_int(v));
            e.emplace_back(f, std::move(c));
        }
    }
    return MatPoly(f, n, std::move(e));
}

MatPoly inverse_unimodular(const MatPoly& a) {
    const Poly1 d = det(a);
    if (d.is_zero() || !d.is_constant()) throw NotUnimodular();
    const Elem d_inv = d.coeff(0).inv();
    return adjugate(a).scaled(d_inv);
}

MatConst inverse(const MatConst& a) {
    const std::size_t n = a.size();
    const Field f = a.field();
    MatConst m = a;
    MatConst inv = MatConst::identity(f, n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw SingularWitness();
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(pivot, j), m(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        const Elem s = m(col, col).inv();
        for (std::size_t j = 0; j < n; ++j) {
            m(col, j) *= s;
            inv(col, j) *= s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m(i, col).is_zero()) continue;
            const Elem c = m(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) -= c * m(col, j);
                inv(i, j) -= c * inv(col, j);
            }
        }
    }
    return inv;
}

MatConst matrix_pow(const MatConst& a, std::uint64_t e) {
    MatConst r = MatConst::identity(a.field(), a.size());
    MatConst b = a;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

bool is_nilpotent_p(const MatConst& n) {
    const std::uint64_t p = n.field().characteristic();
    if (p == 0) throw NeedsFiniteField("N^p = O needs positive characteristic");
    // a nilpotent n x n matrix already satisfies N^n = O
    return matrix_pow(n, std::min<std::uint64_t>(p, n.size())).is_zero();
}

bool is_nilpotent(const MatConst& n) { return matrix_pow(n, n.size()).is_zero(); }

bool all_commute(std::span<const MatConst> mats) {
    for (std::size_t i = 0; i < mats.size(); ++i)
        for (std::size_t j = i + 1; j < mats.size(); ++j) {
            if (mats[i].size() != mats[j].size()) throw SizeMismatch("tuple matrices differ in size");
            if (mats[i] * mats[j] != mats[j] * mats[i]) return false;
        }
    return true;
}

MatConst evaluate(const MatPoly& a, const Elem& t) {
    return a.map([&](const Poly1& p) { return p(t); });
}

MatConst constant_term(const MatPoly& a) {
    return a.map([](const Poly1& p) { return at_zero(p); });
}

MatConst coefficient(const MatPoly& a, std::size_t d) {
    return a.map([d](const Poly1& p) { return p.coeff(d); });
}

long max_degree(const MatPoly& a) {
    long d = -1;
    for (const Poly1& e : a.entries()) d = std::max(d, e.degree());
    return d;
}

MatPoly lift_const(const MatConst& c) {
    return c.map([](const Elem& e) { return Poly1::constant(e); });
}

namespace {

template <class R>
std::string render(const Matrix<R>& a) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < a.size(); ++j) os << (j ? ", " : "") << a(i, j).to_string();
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace

std::string to_string(const MatConst& a) { return render(a); }
std::string to_string(const MatPoly& a) { return render(a); }

}  // namespace expmat
