#include <cstdint>

#include "coefficients.hpp"
#include "expmat/kernels.hpp"

namespace expmat::kernels::omp {

std::vector<MatConst> nilpotent_matrices(Field f, std::size_t n) {
    const auto total = static_cast<std::int64_t>(matrix_space_size(f, n));
    std::vector<char> keep(static_cast<std::size_t>(total), 0);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < total; ++i)
        keep[static_cast<std::size_t>(i)] = is_nilpotent_p(matrix_from_index(f, n, static_cast<std::uint64_t>(i)));
    std::vector<MatConst> out;
    for (std::int64_t i = 0; i < total; ++i)
        if (keep[static_cast<std::size_t>(i)]) out.push_back(matrix_from_index(f, n, static_cast<std::uint64_t>(i)));
    return out;
}

namespace {

using CommuteTable = std::vector<std::vector<char>>;

void extend(const CommuteTable& commute, std::size_t r, std::vector<std::size_t>& prefix,
            std::vector<std::vector<std::size_t>>& out) {
    if (prefix.size() == r) {
        out.push_back(prefix);
        return;
    }
    for (std::size_t j = 0; j < commute.size(); ++j) {
        bool ok = true;
        for (std::size_t i : prefix)
            if (!commute[i][j]) {
                ok = false;
                break;
            }
        if (!ok) continue;
        prefix.push_back(j);
        extend(commute, r, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<std::vector<std::size_t>> commuting_tuples(std::span<const MatConst> pool, std::size_t r) {
    if (r == 0) return {{}};
    const auto m = static_cast<std::int64_t>(pool.size());
    CommuteTable commute(pool.size(), std::vector<char>(pool.size(), 0));
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < m; ++i)
        for (std::int64_t j = 0; j < m; ++j) {
            const auto& a = pool[static_cast<std::size_t>(i)];
            const auto& b = pool[static_cast<std::size_t>(j)];
            commute[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a * b == b * a;
        }

    // one bucket per leading index, concatenated in order afterwards
    std::vector<std::vector<std::vector<std::size_t>>> buckets(pool.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < m; ++i) {
        std::vector<std::size_t> prefix{static_cast<std::size_t>(i)};
        extend(commute, r, prefix, buckets[static_cast<std::size_t>(i)]);
    }
    std::vector<std::vector<std::size_t>> out;
    for (auto& b : buckets)
        for (auto& t : b) out.push_back(std::move(t));
    return out;
}

std::optional<std::uint64_t> first_conjugator(const MatPoly& a1, const MatPoly& a2, std::uint64_t begin,
                                              std::uint64_t end) {
    const detail::CoefficientPairs coeffs(a1, a2);
    const Field f = a1.field();
    const std::size_t n = a1.size();
    std::uint64_t best = end;
#pragma omp parallel for schedule(dynamic, 64) reduction(min : best)
    for (std::int64_t k = static_cast<std::int64_t>(begin); k < static_cast<std::int64_t>(end); ++k) {
        const auto i = static_cast<std::uint64_t>(k);
        if (i >= best) continue;  // this thread already has a smaller witness
        const MatConst p = matrix_from_index(f, n, i);
        if (det(p).is_zero()) continue;
        if (coeffs.intertwines(p)) best = i;
    }
    if (best >= end) return std::nullopt;
    return best;
}

bool group_law_holds(std::span<const MatConst> values, const IndexLaw& law) {
    const auto m = static_cast<std::int64_t>(values.size());
    bool ok = true;
#pragma omp parallel for schedule(dynamic) reduction(&& : ok)
    for (std::int64_t a = 0; a < m; ++a) {
        if (!ok) continue;
        for (std::size_t b = 0; b < values.size(); ++b) {
            const auto ua = static_cast<std::size_t>(a);
            if (values[ua] * values[b] != values[law(ua, b)]) {
                ok = false;
                break;
            }
        }
    }
    return ok;
}

std::vector<std::vector<std::size_t>> point_images(std::span<const MatConst> mats, const ProjectiveSpace& space) {
    std::vector<std::vector<std::size_t>> images(mats.size(), std::vector<std::size_t>(space.count()));
    const auto total = static_cast<std::int64_t>(mats.size() * space.count());
    const std::size_t count = space.count();
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < total; ++k) {
        const auto g = static_cast<std::size_t>(k) / count;
        const auto x = static_cast<std::size_t>(k) % count;
        images[g][x] = space.locate(apply(mats[g], space[x]));
    }
    return images;
}

bool action_law_holds(const std::vector<std::vector<std::size_t>>& images, const IndexLaw& law) {
    const std::size_t m = images.size();
    const auto pairs = static_cast<std::int64_t>(m * m);
    bool ok = true;
#pragma omp parallel for schedule(static) reduction(&& : ok)
    for (std::int64_t k = 0; k < pairs; ++k) {
        if (!ok) continue;
        const auto s = static_cast<std::size_t>(k) / m;
        const auto t = static_cast<std::size_t>(k) % m;
        const auto& st = images[law(s, t)];
        for (std::size_t x = 0; x < st.size(); ++x)
            if (images[s][images[t][x]] != st[x]) {
                ok = false;
                break;
            }
    }
    return ok;
}

}  // namespace expmat::kernels::omp
