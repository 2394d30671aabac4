#include "expmat/modrep.hpp"

#include "expmat/kernels.hpp"

namespace expmat {

MatConst rho_eval(const Rep& rep, std::span<const std::uint64_t> a) {
    if (a.size() != rep.rank())
        throw LengthMismatch("expected " + std::to_string(rep.rank()) + " residues, got " + std::to_string(a.size()));
    const Field f = rep.field();
    const std::uint64_t p = f.characteristic();
    if (p == 0) throw NeedsFiniteField("(Z/pZ)^r needs positive characteristic");
    const MatConst id = MatConst::identity(f, rep.size());
    MatConst acc = id;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] >= p) throw Error("residue " + std::to_string(a[i]) + " is not reduced mod " + std::to_string(p));
        acc = acc * matrix_pow(id + rep.tuple()[i], a[i]);
    }
    return acc;
}

namespace {

constexpr std::uint64_t kMaxGroupOrder = 10'000;

struct GroupTable {
    std::vector<MatConst> values;
    kernels::IndexLaw law;
};

// Elements a of (Z/pZ)^r are indexed by sum_i a_i p^i.
GroupTable group_table(const Rep& rep) {
    const std::uint64_t p = rep.field().characteristic();
    if (p == 0) throw NeedsFiniteField("(Z/pZ)^r needs positive characteristic");
    const std::size_t r = rep.rank();
    std::uint64_t order = 1;
    for (std::size_t i = 0; i < r; ++i) {
        order *= p;
        if (order > kMaxGroupOrder) throw BudgetExceeded("p^r exceeds 10^4");
    }
    GroupTable t;
    t.values.reserve(order);
    std::vector<std::uint64_t> a(r);
    for (std::uint64_t idx = 0; idx < order; ++idx) {
        std::uint64_t rest = idx;
        for (std::size_t i = 0; i < r; ++i) {
            a[i] = rest % p;
            rest /= p;
        }
        t.values.push_back(rho_eval(rep, a));
    }
    t.law = [p, r](std::size_t x, std::size_t y) {
        std::size_t sum = 0, scale = 1;
        for (std::size_t i = 0; i < r; ++i) {
            sum += ((x % p + y % p) % p) * scale;
            x /= p;
            y /= p;
            scale *= p;
        }
        return sum;
    };
    return t;
}

}  // namespace

bool verify_hom(const Rep& rep) {
    const GroupTable t = group_table(rep);
    return kernels::omp::group_law_holds(t.values, t.law);
}

bool verify_hom_serial(const Rep& rep) {
    const GroupTable t = group_table(rep);
    return kernels::serial::group_law_holds(t.values, t.law);
}

ExpMat pi_map(const Rep& rep) { return build_from_tuple(rep.tuple()); }

std::size_t l_of(const Rep& rep) { return rep.tuple().trimmed().length(); }

Rep rho_min(const Rep& rep) { return Rep(rep.tuple().trimmed()); }

bool is_minimal(const Rep& rep) { return l_of(rep) == rep.rank(); }

RepPair to_pair(const Rep& rep) { return {pi_map(rho_min(rep)), rep.rank() - l_of(rep)}; }

Rep from_pair(const ExpMat& a, std::size_t padding) { return Rep(factor(a).padded(padding)); }

namespace {

template <class Pool, class Tuples>
std::vector<NilTuple> enumerate_with(Field f, std::size_t n, std::size_t r, Pool pool_fn, Tuples tuples_fn) {
    if (!f.is_finite()) throw NeedsFiniteField("tuple enumeration needs a finite field");
    const std::vector<MatConst> pool = pool_fn(f, n);
    std::vector<NilTuple> out;
    for (const auto& idx : tuples_fn(pool, r)) {
        std::vector<MatConst> mats;
        mats.reserve(idx.size());
        for (std::size_t i : idx) mats.push_back(pool[i]);
        out.push_back(NilTuple::unchecked(f, n, std::move(mats)));
    }
    return out;
}

}  // namespace

std::vector<NilTuple> enumerate_tuples(Field f, std::size_t n, std::size_t r) {
    return enumerate_with(f, n, r, kernels::omp::nilpotent_matrices, kernels::omp::commuting_tuples);
}

std::vector<NilTuple> enumerate_tuples_serial(Field f, std::size_t n, std::size_t r) {
    return enumerate_with(f, n, r, kernels::serial::nilpotent_matrices, kernels::serial::commuting_tuples);
}

}  // namespace expmat
