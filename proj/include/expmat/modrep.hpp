#ifndef EXPMAT_MODREP_HPP
#define EXPMAT_MODREP_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "expmat/expcore.hpp"

namespace expmat {

/*
 * A homomorphism (Z/pZ)^r -> GL(n, k), a |-> prod_i (I + N_i)^(a_i),
 * stored by its tuple (N_1, ..., N_r). r = 0 is the trivial group.
 */
class Rep {
   public:
    explicit Rep(NilTuple tuple) : tuple_(std::move(tuple)) {}
    /// The trivial representation of (Z/pZ)^0 on k^n.
    static Rep trivial(Field f, std::size_t n) { return Rep(NilTuple::make(f, n, {})); }

    std::size_t rank() const { return tuple_.length(); }
    const NilTuple& tuple() const { return tuple_; }
    std::size_t size() const { return tuple_.size(); }
    Field field() const { return tuple_.field(); }

    friend bool operator==(const Rep& a, const Rep& b) { return a.tuple_ == b.tuple_; }
    friend bool operator!=(const Rep& a, const Rep& b) { return !(a == b); }

   private:
    NilTuple tuple_;
};

/// rho(a) for a in (Z/pZ)^r given by residues 0 <= a_i < p.
MatConst rho_eval(const Rep& rep, std::span<const std::uint64_t> a);

/// rho(a) rho(b) = rho(a + b) for all p^(2r) pairs; throws BudgetExceeded past p^r = 10^4.
bool verify_hom(const Rep& rep);
bool verify_hom_serial(const Rep& rep);

/// A_rho(T); the identity when r = 0.
ExpMat pi_map(const Rep& rep);
/// Index of the last nonzero N_i (0 when all vanish).
std::size_t l_of(const Rep& rep);
/// Truncation to the first l_of(rep) generators.
Rep rho_min(const Rep& rep);
bool is_minimal(const Rep& rep);

struct RepPair {
    ExpMat matrix;
    std::size_t padding;
};

/// (pi(rho_min), r - l).
RepPair to_pair(const Rep& rep);
/// factor(A) followed by `padding` zero generators.
Rep from_pair(const ExpMat& a, std::size_t padding);

/// All of N_r(n, F_q) in lexicographic order (entries row-major, last index fastest).
std::vector<NilTuple> enumerate_tuples(Field f, std::size_t n, std::size_t r);
std::vector<NilTuple> enumerate_tuples_serial(Field f, std::size_t n, std::size_t r);

}  // namespace expmat

#endif  // EXPMAT_MODREP_HPP
