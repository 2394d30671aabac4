#ifndef EXPMAT_FIELD_HPP
#define EXPMAT_FIELD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "expmat/errors.hpp"

namespace expmat {

namespace detail {
struct FieldCtx;
}

class Elem;

/*
 * Handle to an interned field description. Three kinds are supported:
 *   F_p       characteristic p, extension degree 1
 *   GF(p^m)   the least monic irreducible of degree m over F_p (ordered by
 *             the integer code sum c_i p^i of its lower coefficients)
 *   Q         characteristic 0
 * Handles compare equal iff they describe the same field. Contexts are
 * interned for the life of the process, so handles are trivially copyable.
 */
class Field {
   public:
    Field() = default;

    static Field prime(std::uint64_t p);
    static Field galois(std::uint64_t p, unsigned m);
    static Field rationals();
    /// Parses "p" or "p,m" (and "0" for Q).
    static Field parse(std::string_view text);

    std::uint64_t characteristic() const;
    unsigned extension_degree() const;
    bool is_finite() const;
    /// Number of elements; empty for Q.
    std::optional<std::uint64_t> order() const;
    /// Ascending coefficients of the monic modulus (length m + 1); {0, 1} for prime fields.
    const std::vector<std::uint64_t>& modulus() const;

    Elem zero() const;
    Elem one() const;
    Elem from_int(std::int64_t v) const;
    /// Finite fields only: element with integer code c (digits base p = coordinates in 1, x, x^2, ...).
    Elem from_code(std::uint64_t c) const;
    /// Q only.
    Elem from_rational(const mpq_class& q) const;
    /// Accepts an integer, or "num/den" for Q.
    Elem parse_elem(std::string_view text) const;

    /// Degree m' extension GF(p^(m k)) of a finite field.
    Field extension(unsigned k) const;

    std::string to_string() const;
    bool valid() const { return ctx_ != nullptr; }

    friend bool operator==(Field a, Field b) { return a.ctx_ == b.ctx_; }
    friend bool operator!=(Field a, Field b) { return a.ctx_ != b.ctx_; }

   private:
    friend class Elem;
    explicit Field(const detail::FieldCtx* ctx) : ctx_(ctx) {}
    const detail::FieldCtx* ctx_ = nullptr;
};

/// Element of a Field, always in canonical form.
class Elem {
   public:
    Elem() = default;

    Field field() const { return Field(ctx_); }
    bool is_zero() const;
    bool is_one() const;

    /// Finite fields: the integer code. Throws NeedsFiniteField over Q.
    std::uint64_t code() const;
    /// Q only.
    const mpq_class& rational() const;

    Elem operator-() const;
    Elem& operator+=(const Elem& rhs);
    Elem& operator-=(const Elem& rhs);
    Elem& operator*=(const Elem& rhs);
    Elem& operator/=(const Elem& rhs);
    friend Elem operator+(Elem a, const Elem& b) { return a += b; }
    friend Elem operator-(Elem a, const Elem& b) { return a -= b; }
    friend Elem operator*(Elem a, const Elem& b) { return a *= b; }
    friend Elem operator/(Elem a, const Elem& b) { return a /= b; }

    Elem inv() const;
    Elem pow(std::uint64_t e) const;

    friend bool operator==(const Elem& a, const Elem& b);
    friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }
    /// Total order: by code over finite fields, by value over Q.
    friend bool operator<(const Elem& a, const Elem& b);

    std::string to_string() const;

   private:
    friend class Field;
    Elem(const detail::FieldCtx* ctx, std::uint64_t v) : ctx_(ctx), val_(v) {}
    Elem(const detail::FieldCtx* ctx, mpq_class q) : ctx_(ctx), val_(std::move(q)) {}
    void check_same(const Elem& rhs) const;

    const detail::FieldCtx* ctx_ = nullptr;
    std::variant<std::uint64_t, mpq_class> val_{std::uint64_t{0}};
};

/*
 * Inclusion of one finite field into another of the same characteristic.
 * The generator of the source goes to the smallest root (by code) of the
 * source modulus inside the target.
 */
class FieldEmbedding {
   public:
    FieldEmbedding(Field source, Field target);

    Field source() const { return source_; }
    Field target() const { return target_; }
    Elem operator()(const Elem& a) const;

   private:
    Field source_;
    Field target_;
    std::vector<Elem> basis_images_;  // images of 1, x, ..., x^(m-1)
};

bool is_prime(std::uint64_t n);

}  // namespace expmat

#endif  // EXPMAT_FIELD_HPP
