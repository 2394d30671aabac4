#ifndef EXPMAT_MATRIX_HPP
#define EXPMAT_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "expmat/field.hpp"
#include "expmat/poly.hpp"

namespace expmat {

template <class R>
struct RingTraits;

template <>
struct RingTraits<Elem> {
    static Elem zero(Field f) { return f.zero(); }
    static Elem one(Field f) { return f.one(); }
    static Elem exact_div(const Elem& a, const Elem& b) { return a / b; }
};

template <>
struct RingTraits<Poly1> {
    static Poly1 zero(Field f) { return Poly1::zero(f); }
    static Poly1 one(Field f) { return Poly1::one(f); }
    static Poly1 exact_div(const Poly1& a, const Poly1& b) { return a.exact_div(b); }
};

template <>
struct RingTraits<Poly2> {
    static Poly2 zero(Field f) { return Poly2::zero(f); }
    static Poly2 one(Field f) { return Poly2::one(f); }
};

/// Square n x n matrix over a commutative ring R (Elem, Poly1 or Poly2), row-major.
template <class R>
class Matrix {
   public:
    Matrix() = default;
    Matrix(Field f, std::size_t n) : field_(f), n_(n), entries_(n * n, RingTraits<R>::zero(f)) {}
    Matrix(Field f, std::size_t n, std::vector<R> entries) : field_(f), n_(n), entries_(std::move(entries)) {
        if (entries_.size() != n * n) throw SizeMismatch("matrix needs n*n entries");
        for (const R& e : entries_)
            if (e.field() != field_) throw FieldMismatch();
    }

    static Matrix identity(Field f, std::size_t n) {
        Matrix m(f, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = RingTraits<R>::one(f);
        return m;
    }

    Field field() const { return field_; }
    std::size_t size() const { return n_; }
    R& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    const std::vector<R>& entries() const { return entries_; }

    bool is_zero() const {
        for (const R& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }
    bool is_identity() const { return *this == identity(field_, n_); }

    Matrix operator-() const {
        Matrix r = *this;
        for (R& e : r.entries_) e = -e;
        return r;
    }
    Matrix& operator+=(const Matrix& rhs) {
        check(rhs);
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& rhs) {
        check(rhs);
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        a.check(b);
        Matrix r(a.field_, a.n_);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t l = 0; l < a.n_; ++l) {
                const R& x = a(i, l);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < a.n_; ++j) r(i, j) += x * b(l, j);
            }
        return r;
    }

    template <class S>
    Matrix scaled(const S& s) const {
        Matrix r = *this;
        for (R& e : r.entries_) e = e * s;
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.field_ == b.field_ && a.n_ == b.n_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    /// Entrywise image under f, returning a matrix over the ring of f's result.
    template <class Fn>
    auto map(Fn&& fn, Field target) const {
        using S = std::decay_t<decltype(fn(std::declval<const R&>()))>;
        std::vector<S> out;
        out.reserve(entries_.size());
        for (const R& e : entries_) out.push_back(fn(e));
        return Matrix<S>(target, n_, std::move(out));
    }
    template <class Fn>
    auto map(Fn&& fn) const {
        return map(std::forward<Fn>(fn), field_);
    }

    /// Submatrix with row `row` and column `col` deleted.
    Matrix minor(std::size_t row, std::size_t col) const {
        Matrix r(field_, n_ - 1);
        for (std::size_t i = 0, ri = 0; i < n_; ++i) {
            if (i == row) continue;
            for (std::size_t j = 0, rj = 0; j < n_; ++j) {
                if (j == col) continue;
                r(ri, rj++) = (*this)(i, j);
            }
            ++ri;
        }
        return r;
    }

   private:
    void check(const Matrix& rhs) const {
        if (n_ != rhs.n_) throw SizeMismatch("matrix sizes differ");
        if (field_ != rhs.field_) throw FieldMismatch();
    }

    Field field_;
    std::size_t n_ = 0;
    std::vector<R> entries_;
};

using MatConst = Matrix<Elem>;
using MatPoly = Matrix<Poly1>;
using MatPoly2 = Matrix<Poly2>;

/// Builds a constant matrix from small integers (reduced into f).
MatConst make_const(Field f, std::initializer_list<std::initializer_list<std::int64_t>> rows);
/// Builds a polynomial matrix; each entry is an ascending list of integer coefficients.
MatPoly make_poly(Field f, std::initializer_list<std::initializer_list<std::vector<std::int64_t>>> rows);

namespace detail {

template <class R>
R cofactor_det(const Matrix<R>& a) {
    const std::size_t n = a.size();
    if (n == 0) return RingTraits<R>::one(a.field());
    if (n == 1) return a(0, 0);
    if (n == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    R acc = RingTraits<R>::zero(a.field());
    for (std::size_t j = 0; j < n; ++j) {
        if (a(0, j).is_zero()) continue;
        R term = a(0, j) * cofactor_det(a.minor(0, j));
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

// Fraction-free elimination; every division is exact over an integral domain.
template <class R>
R bareiss_det(Matrix<R> a) {
    const std::size_t n = a.size();
    const Field f = a.field();
    R prev = RingTraits<R>::one(f);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && a(pivot, k).is_zero()) ++pivot;
            if (pivot == n) return RingTraits<R>::zero(f);
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = RingTraits<R>::exact_div(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
        }
        prev = a(k, k);
    }
    R d = a(n - 1, n - 1);
    return negate ? -d : d;
}

}  // namespace detail

/// Determinant: cofactor expansion for n <= 4, Bareiss elimination above.
template <class R>
R det(const Matrix<R>& a) {
    if (a.size() <= 4) return detail::cofactor_det(a);
    return detail::bareiss_det(a);
}

/// Transpose of the cofactor matrix.
template <class R>
Matrix<R> adjugate(const Matrix<R>& a) {
    const std::size_t n = a.size();
    Matrix<R> adj(a.field(), n);
    if (n == 1) {
        adj(0, 0) = RingTraits<R>::one(a.field());
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            R c = det(a.minor(j, i));
            adj(i, j) = (i + j) % 2 == 0 ? c : -c;
        }
    return adj;
}

/// Inverse over k[T]; throws NotUnimodular unless det(A) is a nonzero constant.
MatPoly inverse_unimodular(const MatPoly& a);
/// Inverse over k by Gauss-Jordan; throws SingularWitness for singular input.
MatConst inverse(const MatConst& a);

MatConst matrix_pow(const MatConst& a, std::uint64_t e);
/// True iff N^p = O, p the characteristic (> 0).
bool is_nilpotent_p(const MatConst& n);
/// True iff N^n = O (any characteristic).
bool is_nilpotent(const MatConst& n);
/// Pairwise commutation; vacuously true for fewer than two matrices.
bool all_commute(std::span<const MatConst> mats);

MatConst evaluate(const MatPoly& a, const Elem& t);
MatConst constant_term(const MatPoly& a);
/// Coefficient matrix of T^d.
MatConst coefficient(const MatPoly& a, std::size_t d);
/// Maximum entry degree (-1 for the zero matrix).
long max_degree(const MatPoly& a);
MatPoly lift_const(const MatConst& c);

std::string to_string(const MatConst& a);
std::string to_string(const MatPoly& a);

}  // namespace expmat

#endif  // EXPMAT_MATRIX_HPP
