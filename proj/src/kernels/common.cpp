#include "expmat/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace expmat::kernels {

std::uint64_t matrix_space_size(Field f, std::size_t n) {
    if (!f.is_finite()) throw NeedsFiniteField("matrix spaces are enumerated over finite fields only");
    const std::uint64_t q = *f.order();
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < n * n; ++k) {
        if (total > (std::uint64_t{1} << 40) / q) throw BudgetExceeded("matrix space too large to enumerate");
        total *= q;
    }
    return total;
}

MatConst matrix_from_index(Field f, std::size_t n, std::uint64_t index) {
    const std::uint64_t q = *f.order();
    std::vector<Elem> e(n * n);
    for (std::size_t k = n * n; k-- > 0;) {
        e[k] = f.from_code(index % q);
        index /= q;
    }
    return MatConst(f, n, std::move(e));
}

int thread_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace expmat::kernels
