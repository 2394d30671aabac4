#ifndef EXPMAT_HOPF_HPP
#define EXPMAT_HOPF_HPP

#include "expmat/expcore.hpp"

namespace expmat {

/*
 * An algebra map h : k[GL(n)] -> k[T], stored by its values h(x_ij) on the
 * coordinate functions. The determinant of the value matrix is a unit of
 * k[T], so h extends to 1/det.
 */
class HopfHom {
   public:
    const MatPoly& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    Field field() const { return values_.field(); }
    /// h(x_ij), 0-based.
    const Poly1& operator()(std::size_t i, std::size_t j) const { return values_(i, j); }

    friend bool operator==(const HopfHom& a, const HopfHom& b) { return a.values_ == b.values_; }

   private:
    friend HopfHom to_hopf(MatPoly a);
    explicit HopfHom(MatPoly v) : values_(std::move(v)) {}
    MatPoly values_;
};

/// Throws DetNotUnit unless det(A) is a nonzero constant.
HopfHom to_hopf(MatPoly a);
MatPoly from_hopf(const HopfHom& h);

/// h(x_ij)(T (x) 1 + 1 (x) T) = sum_l h(x_il) (x) h(x_lj) for all i, j.
bool check_comultiplication(const HopfHom& h);
/// h(x_ij)(0) = delta_ij.
bool check_counit(const HopfHom& h);
/// h(S(x_ij)) = h(x_ij)(-T): the inverse of the value matrix equals its reflection.
bool check_antipode(const HopfHom& h);
/// Comultiplication and counit compatibility.
bool is_hopf_hom(const HopfHom& h);

}  // namespace expmat

#endif  // EXPMAT_HOPF_HPP
