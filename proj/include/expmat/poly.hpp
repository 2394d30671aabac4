#ifndef EXPMAT_POLY_HPP
#define EXPMAT_POLY_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "expmat/field.hpp"

namespace expmat {

class Poly2;

/// Dense univariate polynomial in T, ascending coefficients, no trailing zeros.
class Poly1 {
   public:
    Poly1() = default;
    explicit Poly1(Field f) : field_(f) {}
    Poly1(Field f, std::vector<Elem> coeffs);

    static Poly1 zero(Field f) { return Poly1(f); }
    static Poly1 one(Field f) { return constant(f.one()); }
    static Poly1 constant(const Elem& c);
    static Poly1 monomial(const Elem& c, std::size_t degree);
    /// The variable T itself.
    static Poly1 variable(Field f) { return monomial(f.one(), 1); }

    Field field() const { return field_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    /// Number of stored coefficients (degree + 1).
    std::size_t size() const { return coeffs_.size(); }
    /// Coefficient of T^i; zero past the degree.
    Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_.zero(); }
    const std::vector<Elem>& coeffs() const { return coeffs_; }
    /// Lowest-degree nonzero coefficient (throws on zero).
    const Elem& lowest_nonzero() const;
    const Elem& leading() const;

    Elem operator()(const Elem& t) const;

    Poly1 operator-() const;
    Poly1& operator+=(const Poly1& rhs);
    Poly1& operator-=(const Poly1& rhs);
    Poly1& operator*=(const Poly1& rhs);
    Poly1& operator*=(const Elem& s);
    friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
    friend Poly1 operator-(Poly1 a, const Poly1& b) { return a -= b; }
    friend Poly1 operator*(const Poly1& a, const Poly1& b);
    friend Poly1 operator*(Poly1 a, const Elem& s) { return a *= s; }
    friend Poly1 operator*(const Elem& s, Poly1 a) { return a *= s; }

    friend bool operator==(const Poly1& a, const Poly1& b) { return a.field_ == b.field_ && a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly1& a, const Poly1& b) { return !(a == b); }

    /// Quotient and remainder; the divisor must be nonzero.
    std::pair<Poly1, Poly1> divmod(const Poly1& divisor) const;
    /// Exact division; throws Error when the remainder is nonzero.
    Poly1 exact_div(const Poly1& divisor) const;
    Poly1 monic() const;

    /// Human-readable form such as "1 + 2*T + T^3".
    std::string to_string() const;

   private:
    void trim();

    Field field_;
    std::vector<Elem> coeffs_;
};

/// Monic gcd (zero when both inputs are zero).
Poly1 gcd(Poly1 a, Poly1 b);

/// a(T + T') as a bivariate polynomial.
Poly2 shift_sum(const Poly1& a);
/// a(-T).
Poly1 reflect(const Poly1& a);
/// a(0).
Elem at_zero(const Poly1& a);
/// a(T^e), e >= 1.
Poly1 power_subst(const Poly1& a, std::uint64_t e);

/*
 * Dense bivariate polynomial in (T, T'). Coefficient (i, j) multiplies
 * T^i T'^j. Also serves as k[T] (x) k[T] under T (x) 1 -> T, 1 (x) T -> T'.
 * Trailing zero rows and columns are trimmed.
 */
class Poly2 {
   public:
    Poly2() = default;
    explicit Poly2(Field f) : field_(f) {}

    static Poly2 zero(Field f) { return Poly2(f); }
    static Poly2 one(Field f) { return tensor(Poly1::one(f), Poly1::one(f)); }
    /// a(T) * b(T').
    static Poly2 tensor(const Poly1& a, const Poly1& b);
    /// a(T) (x) 1.
    static Poly2 left(const Poly1& a) { return tensor(a, Poly1::one(a.field())); }
    /// 1 (x) b(T').
    static Poly2 right(const Poly1& b) { return tensor(Poly1::one(b.field()), b); }

    Field field() const { return field_; }
    bool is_zero() const { return rows_ == 0; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Elem coeff(std::size_t i, std::size_t j) const;

    /// Specialize T' = 0.
    Poly1 at_second_zero() const;

    Poly2 operator-() const;
    Poly2& operator+=(const Poly2& rhs);
    Poly2& operator-=(const Poly2& rhs);
    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
    friend Poly2 operator*(const Poly2& a, const Poly2& b);

    friend bool operator==(const Poly2& a, const Poly2& b);
    friend bool operator!=(const Poly2& a, const Poly2& b) { return !(a == b); }

    /// Row-major nested coefficients, rows indexed by the degree in T.
    std::vector<std::vector<Elem>> grid() const;
    std::string to_string() const;

   private:
    friend Poly2 shift_sum(const Poly1& a);
    Poly2(Field f, std::size_t rows, std::size_t cols);
    Elem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Elem& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    void trim();

    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

}  // namespace expmat

#endif  // EXPMAT_POLY_HPP
