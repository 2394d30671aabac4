#include "coefficients.hpp"
#include "expmat/kernels.hpp"

namespace expmat::kernels::serial {

std::vector<MatConst> nilpotent_matrices(Field f, std::size_t n) {
    const std::uint64_t total = matrix_space_size(f, n);
    std::vector<MatConst> out;
    for (std::uint64_t i = 0; i < total; ++i) {
        MatConst m = matrix_from_index(f, n, i);
        if (is_nilpotent_p(m)) out.push_back(std::move(m));
    }
    return out;
}

namespace {

void extend(std::span<const MatConst> pool, std::size_t r, std::vector<std::size_t>& prefix,
            std::vector<std::vector<std::size_t>>& out) {
    if (prefix.size() == r) {
        out.push_back(prefix);
        return;
    }
    for (std::size_t j = 0; j < pool.size(); ++j) {
        bool ok = true;
        for (std::size_t i : prefix)
            if (pool[i] * pool[j] != pool[j] * pool[i]) {
                ok = false;
                break;
            }
        if (!ok) continue;
        prefix.push_back(j);
        extend(pool, r, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<std::vector<std::size_t>> commuting_tuples(std::span<const MatConst> pool, std::size_t r) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> prefix;
    extend(pool, r, prefix, out);
    return out;
}

std::optional<std::uint64_t> first_conjugator(const MatPoly& a1, const MatPoly& a2, std::uint64_t begin,
                                              std::uint64_t end) {
    const detail::CoefficientPairs coeffs(a1, a2);
    for (std::uint64_t i = begin; i < end; ++i) {
        const MatConst p = matrix_from_index(a1.field(), a1.size(), i);
        if (det(p).is_zero()) continue;
        if (coeffs.intertwines(p)) return i;
    }
    return std::nullopt;
}

bool group_law_holds(std::span<const MatConst> values, const IndexLaw& law) {
    for (std::size_t a = 0; a < values.size(); ++a)
        for (std::size_t b = 0; b < values.size(); ++b)
            if (values[a] * values[b] != values[law(a, b)]) return false;
    return true;
}

std::vector<std::vector<std::size_t>> point_images(std::span<const MatConst> mats, const ProjectiveSpace& space) {
    std::vector<std::vector<std::size_t>> images(mats.size(), std::vector<std::size_t>(space.count()));
    for (std::size_t g = 0; g < mats.size(); ++g)
        for (std::size_t x = 0; x < space.count(); ++x) images[g][x] = space.locate(apply(mats[g], space[x]));
    return images;
}

bool action_law_holds(const std::vector<std::vector<std::size_t>>& images, const IndexLaw& law) {
    for (std::size_t s = 0; s < images.size(); ++s)
        for (std::size_t t = 0; t < images.size(); ++t) {
            const auto& st = images[law(s, t)];
            for (std::size_t x = 0; x < st.size(); ++x)
                if (images[s][images[t][x]] != st[x]) return false;
        }
    return true;
}

}  // namespace expmat::kernels::serial
