#ifndef EXPMAT_EXPCORE_HPP
#define EXPMAT_EXPCORE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "expmat/matrix.hpp"

namespace expmat {

/// Why verify_exponential rejected a matrix.
struct ExpCertificate {
    enum class Reason { NotIdentityAtZero, FunctionalEquation };
    Reason reason = Reason::FunctionalEquation;
    std::size_t row = 0;  // 0-based
    std::size_t col = 0;
    Poly2 product;     // (A(T) A(T'))_{row,col}; a(0) for NotIdentityAtZero
    Poly2 expected;    // a_{row,col}(T + T'); delta_{row,col} for NotIdentityAtZero
    Poly2 difference;  // expected - product
};

struct ExpCheck {
    bool exponential = false;
    std::optional<ExpCertificate> certificate;
    explicit operator bool() const { return exponential; }
};

/// Checks A(0) = I and A(T) A(T') = A(T + T') by full bivariate expansion.
ExpCheck verify_exponential(const MatPoly& a);

class NotExponential : public Error {
   public:
    explicit NotExponential(ExpCertificate cert);
    const ExpCertificate& certificate() const { return cert_; }

   private:
    ExpCertificate cert_;
};

/// A verified exponential matrix over k[T].
class ExpMat {
   public:
    /// Throws NotExponential with the failing certificate.
    static ExpMat make(MatPoly a);
    static ExpMat identity(Field f, std::size_t n);

    const MatPoly& matrix() const { return a_; }
    std::size_t size() const { return a_.size(); }
    Field field() const { return a_.field(); }
    MatConst at(const Elem& t) const { return evaluate(a_, t); }

    friend bool operator==(const ExpMat& x, const ExpMat& y) { return x.a_ == y.a_; }
    friend bool operator!=(const ExpMat& x, const ExpMat& y) { return !(x == y); }

   private:
    explicit ExpMat(MatPoly a) : a_(std::move(a)) {}
    MatPoly a_;
};

/*
 * Ordered tuple (N_1, ..., N_r) of pairwise commuting matrices with
 * N_i^p = O. In characteristic 0 the tuple has at most one entry and the
 * nilpotency condition is N^n = O.
 */
class NilTuple {
   public:
    /// Validates nilpotency and commutation.
    static NilTuple make(Field f, std::size_t n, std::vector<MatConst> mats);
    /// Skips validation; for oracles that must see invariant-violating input.
    static NilTuple unchecked(Field f, std::size_t n, std::vector<MatConst> mats);

    Field field() const { return field_; }
    std::size_t size() const { return n_; }
    std::size_t length() const { return mats_.size(); }
    const std::vector<MatConst>& mats() const { return mats_; }
    const MatConst& operator[](std::size_t i) const { return mats_[i]; }

    /// Satisfies the nilpotent/commuting invariants.
    bool valid() const;
    /// Drops trailing zero matrices.
    NilTuple trimmed() const;
    /// Appends `count` zero matrices.
    NilTuple padded(std::size_t count) const;

    friend bool operator==(const NilTuple& a, const NilTuple& b) {
        return a.field_ == b.field_ && a.n_ == b.n_ && a.mats_ == b.mats_;
    }
    friend bool operator!=(const NilTuple& a, const NilTuple& b) { return !(a == b); }

   private:
    NilTuple(Field f, std::size_t n, std::vector<MatConst> mats) : field_(f), n_(n), mats_(std::move(mats)) {}
    Field field_;
    std::size_t n_ = 0;
    std::vector<MatConst> mats_;
};

/// Degree of layer i (0-based): p^i, or 1 in characteristic 0 for i = 0.
std::uint64_t layer_degree(Field f, std::size_t i);

/*
 * Truncated exponential sum_{j < bound} (T^e N)^j / j!, with bound = p in
 * characteristic p and bound = n in characteristic 0. Throws NotNilpotent
 * unless N^p = O (resp. N^n = O).
 */
MatPoly trunc_exp(const MatConst& n, std::uint64_t e);

/// prod_i trunc_exp(N_i, p^(i-1)); identity for the empty tuple.
ExpMat build_from_tuple(const NilTuple& tuple);

/// Inverse of build_from_tuple on trimmed tuples.
NilTuple factor(const ExpMat& a);
/// Layer peeling on an unverified matrix; throws FactorResidue on inconsistency.
NilTuple factor_matrix(const MatPoly& a);

/// A^{-1} equals A(-T) entrywise.
bool negate_inverse_check(const ExpMat& a);

}  // namespace expmat

#endif  // EXPMAT_EXPCORE_HPP
