#ifndef EXPMAT_KERNELS_HPP
#define EXPMAT_KERNELS_HPP

/*
 * Exhaustive scans behind the enumeration, witness search and law checks.
 * Every kernel exists twice with identical results: `serial` is the plain
 * reference loop, `omp` splits the outer loop across OpenMP threads and
 * merges in a fixed order, so output never depends on scheduling.
 */

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "expmat/projective.hpp"

namespace expmat::kernels {

/// q^(n*n); throws BudgetExceeded past 2^40.
std::uint64_t matrix_space_size(Field f, std::size_t n);
/// Matrix number `index` in row-major lexicographic order of entry codes.
MatConst matrix_from_index(Field f, std::size_t n, std::uint64_t index);

/// Maps a pair of group indices to the index of their sum.
using IndexLaw = std::function<std::size_t(std::size_t, std::size_t)>;

namespace serial {

/// All N with N^p = O, in index order.
std::vector<MatConst> nilpotent_matrices(Field f, std::size_t n);
/// Index tuples (i_1, ..., i_r) into pool whose matrices commute pairwise, lexicographic.
std::vector<std::vector<std::size_t>> commuting_tuples(std::span<const MatConst> pool, std::size_t r);
/// Least index in [begin, end) of an invertible P with P A1 = A2 P.
std::optional<std::uint64_t> first_conjugator(const MatPoly& a1, const MatPoly& a2, std::uint64_t begin,
                                              std::uint64_t end);
/// values[a] * values[b] == values[law(a, b)] for every pair.
bool group_law_holds(std::span<const MatConst> values, const IndexLaw& law);
/// images[g][x] = index of mats[g] applied to point x.
std::vector<std::vector<std::size_t>> point_images(std::span<const MatConst> mats, const ProjectiveSpace& space);
/// images[s][images[t][x]] == images[law(s, t)][x] for every s, t, x.
bool action_law_holds(const std::vector<std::vector<std::size_t>>& images, const IndexLaw& law);

}  // namespace serial

namespace omp {

std::vector<MatConst> nilpotent_matrices(Field f, std::size_t n);
std::vector<std::vector<std::size_t>> commuting_tuples(std::span<const MatConst> pool, std::size_t r);
std::optional<std::uint64_t> first_conjugator(const MatPoly& a1, const MatPoly& a2, std::uint64_t begin,
                                              std::uint64_t end);
bool group_law_holds(std::span<const MatConst> values, const IndexLaw& law);
std::vector<std::vector<std::size_t>> point_images(std::span<const MatConst> mats, const ProjectiveSpace& space);
bool action_law_holds(const std::vector<std::vector<std::size_t>>& images, const IndexLaw& law);

}  // namespace omp

/// Threads OpenMP will use (1 when built without OpenMP).
int thread_count();

}  // namespace expmat::kernels

#endif  // EXPMAT_KERNELS_HPP
