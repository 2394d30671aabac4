#ifndef EXPMAT_PROJECTIVE_HPP
#define EXPMAT_PROJECTIVE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "expmat/expcore.hpp"

namespace expmat {

/// Point of P^(n-1) over a finite field, scaled so its first nonzero coordinate is 1.
class ProjPoint {
   public:
    ProjPoint() = default;
    /// Normalizes; throws Error for the zero vector.
    static ProjPoint make(std::vector<Elem> coords);

    const std::vector<Elem>& coords() const { return coords_; }
    std::size_t size() const { return coords_.size(); }
    Field field() const { return coords_.front().field(); }
    /// sum_i code(x_i) q^i. Orders points colexicographically (last coordinate most significant).
    std::uint64_t code() const;

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords_ == b.coords_; }
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
    friend bool operator<(const ProjPoint& a, const ProjPoint& b) { return a.code() < b.code(); }

    std::string to_string() const;

   private:
    explicit ProjPoint(std::vector<Elem> c) : coords_(std::move(c)) {}
    std::vector<Elem> coords_;
};

/// All points of P^(n-1)(F_q), listed in increasing code order.
class ProjectiveSpace {
   public:
    ProjectiveSpace(Field fq, std::size_t n);

    Field field() const { return field_; }
    std::size_t dimension() const { return n_; }
    std::size_t count() const { return points_.size(); }
    const std::vector<ProjPoint>& points() const { return points_; }
    const ProjPoint& operator[](std::size_t i) const { return points_[i]; }
    /// Index of a normalized point.
    std::size_t locate(const ProjPoint& x) const;

   private:
    Field field_;
    std::size_t n_;
    std::vector<ProjPoint> points_;
    std::vector<std::uint64_t> codes_;
};

/*
 * A homomorphism G_a -> PGL(n), stored as a content-free polynomial matrix
 * whose first nonzero coefficient (row-major entries, ascending degree) is 1.
 */
class PGLClass {
   public:
    /// Removes the content and fixes the scalar; throws NotScalarAtZero when
    /// the result is not a nonzero scalar matrix at T = 0.
    static PGLClass normalize(const MatPoly& raw);

    const MatPoly& rep() const { return rep_; }
    std::size_t size() const { return rep_.size(); }
    Field field() const { return rep_.field(); }

    friend bool operator==(const PGLClass& a, const PGLClass& b) { return a.rep_ == b.rep_; }
    friend bool operator!=(const PGLClass& a, const PGLClass& b) { return !(a == b); }

   private:
    explicit PGLClass(MatPoly rep) : rep_(std::move(rep)) {}
    MatPoly rep_;
};

/// Content-free, scalar-normalized representative of raw (no scalar-at-zero check).
MatPoly projective_normal_form(const MatPoly& raw);

/// pi o phi.
PGLClass project(const ExpMat& a);
/// The unique exponential lift; throws NotExponential when the class is not a homomorphism.
ExpMat lift(const PGLClass& theta);
/// Normalizes then lifts.
ExpMat lift(const MatPoly& raw);

/// G_a-action on P^(n-1), represented by its exponential lift.
class GaAction {
   public:
    explicit GaAction(ExpMat source) : source_(std::move(source)) {}
    const ExpMat& source() const { return source_; }
    std::size_t dimension() const { return source_.size(); }
    Field field() const { return source_.field(); }
    /// The automorphism x -> x * A(t)^T as a constant matrix over t's field.
    MatConst automorphism(const Elem& t) const;

   private:
    ExpMat source_;
};

/// Coefficients of A carried into a larger field.
MatPoly embed_matrix(const MatPoly& a, const FieldEmbedding& emb);
MatConst embed_matrix(const MatConst& a, const FieldEmbedding& emb);

/// (x_0 : ... : x_{n-1}) * A(t)^T, renormalized.
ProjPoint act(const GaAction& mu, const Elem& t, const ProjPoint& x);
/// Applies a constant matrix to a point by the same convention.
ProjPoint apply(const MatConst& q, const ProjPoint& x);

/// The field GF(q) containing the action's field; throws BadField if q is not a power of p.
Field action_field(const GaAction& mu, std::uint64_t q);

/// Identity and composition axioms over every t, s in F_q and x in P^(n-1)(F_q).
bool verify_action(const GaAction& mu, std::uint64_t q);
bool verify_action_serial(const GaAction& mu, std::uint64_t q);

/// Orbit partition of P^(n-1)(F_q); members and orbits in increasing point order.
std::vector<std::vector<ProjPoint>> orbits(const GaAction& mu, std::uint64_t q);
std::vector<ProjPoint> fixed_points(const GaAction& mu, std::uint64_t q);

}  // namespace expmat

#endif  // EXPMAT_PROJECTIVE_HPP
