#ifndef EXPMAT_EQUIV_HPP
#define EXPMAT_EQUIV_HPP

#include <cstdint>
#include <optional>
#include <string_view>

#include "expmat/projective.hpp"

namespace expmat {

/// An invertible constant matrix P, kept together with its inverse.
class Witness {
   public:
    /// Throws SingularWitness when det(P) = 0.
    static Witness make(MatConst p);

    const MatConst& matrix() const { return p_; }
    const MatConst& inverse() const { return p_inv_; }
    Field field() const { return p_.field(); }
    std::size_t size() const { return p_.size(); }

   private:
    Witness(MatConst p, MatConst p_inv) : p_(std::move(p)), p_inv_(std::move(p_inv)) {}
    MatConst p_;
    MatConst p_inv_;
};

/// P A(T) P^-1.
ExpMat conjugate(const ExpMat& a, const Witness& p);
/// A2 = P A1 P^-1.
bool check_equiv(const ExpMat& a1, const ExpMat& a2, const Witness& p);

/// |GL(n, F_q)|, saturated at UINT64_MAX.
std::uint64_t gl_order(Field f, std::size_t n);

struct SearchOptions {
    std::uint64_t budget = 1'000'000;
    /// Search over GF(q^extension) instead of the matrices' own field.
    unsigned extension = 1;
    std::uint64_t seed = 0x5eed'0f'e9'41;
};

/*
 * Looks for P with A2 = P A1 P^-1. When |GL(n, F_q)| <= budget the whole
 * group is scanned in row-major lexicographic order and the least witness is
 * returned; an empty result is then a definitive negative. Otherwise
 * `budget` random matrices are tried, and BudgetExceeded is thrown when none
 * of them works.
 */
std::optional<Witness> search_equiv(const ExpMat& a1, const ExpMat& a2, const SearchOptions& opts = {});
std::optional<Witness> search_equiv_serial(const ExpMat& a1, const ExpMat& a2, const SearchOptions& opts = {});

/// The levels of the correspondence at which equivalence can be tested.
enum class Level {
    Exponential,   // (a) conjugating the matrix
    Hopf,          // (b) precomposing with the coordinate-ring automorphism
    GroupHom,      // (c) pointwise conjugation of G_a -> GL(n)
    Projective,    // (d) conjugating the PGL class
    Automorphism,  // (e) pointwise conjugation in Aut(P^(n-1))
    Action,        // (f) commuting square of the two actions under x -> P x
};

/// Parses "a" .. "f".
Level parse_level(std::string_view s);
char level_letter(Level l);

/// Equivalence evaluated through the representation at `level`; agrees with check_equiv.
bool transport_equiv(Level level, const ExpMat& a1, const ExpMat& a2, const Witness& p);

}  // namespace expmat

#endif  // EXPMAT_EQUIV_HPP
