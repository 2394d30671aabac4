#include "expmat/hopf.hpp"

namespace expmat {

HopfHom to_hopf(MatPoly a) {
    const Poly1 d = det(a);
    if (d.is_zero() || !d.is_constant()) throw DetNotUnit();
    return HopfHom(std::move(a));
}

MatPoly from_hopf(const HopfHom& h) { return h.values(); }

bool check_comultiplication(const HopfHom& h) {
    const std::size_t n = h.size();
    const Field f = h.field();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Poly2 rhs(f);
            for (std::size_t l = 0; l < n; ++l) rhs += Poly2::tensor(h(i, l), h(l, j));
            if (shift_sum(h(i, j)) != rhs) return false;
        }
    return true;
}

bool check_counit(const HopfHom& h) {
    const std::size_t n = h.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Elem v = at_zero(h(i, j));
            if (i == j ? !v.is_one() : !v.is_zero()) return false;
        }
    return true;
}

bool check_antipode(const HopfHom& h) {
    // S(x_ij) = (-1)^(i+j) d^-1 det(minor(j, i)), i.e. the (i, j) entry of the inverse
    const MatPoly inv = inverse_unimodular(h.values());
    return inv == h.values().map([](const Poly1& p) { return reflect(p); });
}

bool is_hopf_hom(const HopfHom& h) { return check_counit(h) && check_comultiplication(h); }

}  // namespace expmat
