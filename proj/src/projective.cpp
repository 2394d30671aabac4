#include "expmat/projective.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "expmat/kernels.hpp"

namespace expmat {

// ---------------------------------------------------------------- points

ProjPoint ProjPoint::make(std::vector<Elem> coords) {
    auto lead = std::find_if(coords.begin(), coords.end(), [](const Elem& e) { return !e.is_zero(); });
    if (lead == coords.end()) throw Error("the zero vector is not a projective point");
    const Elem s = lead->inv();
    for (Elem& c : coords) c *= s;
    return ProjPoint(std::move(coords));
}

std::uint64_t ProjPoint::code() const {
    const std::uint64_t q = *field().order();
    std::uint64_t c = 0;
    for (std::size_t i = coords_.size(); i-- > 0;) c = c * q + coords_[i].code();
    return c;
}

std::string ProjPoint::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? ":" : "") << coords_[i].to_string();
    os << ")";
    return os.str();
}

ProjectiveSpace::ProjectiveSpace(Field fq, std::size_t n) : field_(fq), n_(n) {
    if (!fq.is_finite()) throw NeedsFiniteField("projective point enumeration needs a finite field");
    if (n == 0) throw SizeMismatch("P^(n-1) needs n >= 1");
    const std::uint64_t q = *fq.order();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > (std::uint64_t{1} << 24) / q) throw BudgetExceeded("projective space too large to enumerate");
        total *= q;
    }
    // keep the vectors whose first nonzero coordinate is 1
    for (std::uint64_t c = 1; c < total; ++c) {
        std::vector<Elem> coords;
        coords.reserve(n);
        std::uint64_t rest = c;
        for (std::size_t i = 0; i < n; ++i) {
            coords.push_back(fq.from_code(rest % q));
            rest /= q;
        }
        auto lead = std::find_if(coords.begin(), coords.end(), [](const Elem& e) { return !e.is_zero(); });
        if (!lead->is_one()) continue;
        points_.push_back(ProjPoint::make(std::move(coords)));
        codes_.push_back(c);
    }
}

std::size_t ProjectiveSpace::locate(const ProjPoint& x) const {
    if (x.field() != field_ || x.size() != n_) throw FieldMismatch();
    auto it = std::lower_bound(codes_.begin(), codes_.end(), x.code());
    if (it == codes_.end() || *it != x.code()) throw Error("point is not normalized");
    return static_cast<std::size_t>(it - codes_.begin());
}

// ---------------------------------------------------------------- PGL classes

MatPoly projective_normal_form(const MatPoly& raw) {
    const Field f = raw.field();
    Poly1 content = Poly1::zero(f);
    for (const Poly1& e : raw.entries()) content = gcd(content, e);
    if (content.is_zero()) return raw;
    MatPoly rep = raw.map([&](const Poly1& e) { return e.exact_div(content); });
    for (const Poly1& e : rep.entries())
        if (!e.is_zero()) return rep.scaled(e.lowest_nonzero().inv());
    return rep;
}

PGLClass PGLClass::normalize(const MatPoly& raw) {
    MatPoly rep = projective_normal_form(raw);
    const MatConst at0 = constant_term(rep);
    const Elem c = at0(0, 0);
    if (c.is_zero() || at0 != MatConst::identity(rep.field(), rep.size()).scaled(c)) throw NotScalarAtZero();
    return PGLClass(std::move(rep));
}

PGLClass project(const ExpMat& a) { return PGLClass::normalize(a.matrix()); }

ExpMat lift(const PGLClass& theta) {
    const Elem c = at_zero(theta.rep()(0, 0));
    return ExpMat::make(theta.rep().scaled(c.inv()));
}

ExpMat lift(const MatPoly& raw) { return lift(PGLClass::normalize(raw)); }

// ---------------------------------------------------------------- actions

MatPoly embed_matrix(const MatPoly& a, const FieldEmbedding& emb) {
    return a.map(
        [&](const Poly1& p) {
            std::vector<Elem> c;
            c.reserve(p.size());
            for (const Elem& e : p.coeffs()) c.push_back(emb(e));
            return Poly1(emb.target(), std::move(c));
        },
        emb.target());
}

MatConst embed_matrix(const MatConst& a, const FieldEmbedding& emb) {
    return a.map([&](const Elem& e) { return emb(e); }, emb.target());
}

MatConst GaAction::automorphism(const Elem& t) const {
    const FieldEmbedding emb(field(), t.field());
    return evaluate(embed_matrix(source_.matrix(), emb), t);
}

ProjPoint apply(const MatConst& q, const ProjPoint& x) {
    if (q.size() != x.size()) throw SizeMismatch("point and matrix sizes differ");
    const std::size_t n = q.size();
    std::vector<Elem> y(n, x.field().zero());
    // row vector times transpose == matrix times column vector
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) y[i] += q(i, j) * x.coords()[j];
    return ProjPoint::make(std::move(y));
}

ProjPoint act(const GaAction& mu, const Elem& t, const ProjPoint& x) {
    if (t.field() != x.field()) throw FieldMismatch();
    return apply(mu.automorphism(t), x);
}

Field action_field(const GaAction& mu, std::uint64_t q) {
    const Field base = mu.field();
    if (!base.is_finite()) throw NeedsFiniteField("actions are enumerated over finite fields only");
    const std::uint64_t p = base.characteristic();
    unsigned m = 0;
    std::uint64_t v = q;
    while (v > 1 && v % p == 0) {
        v /= p;
        ++m;
    }
    if (v != 1 || m == 0) throw BadField(std::to_string(q) + " is not a power of " + std::to_string(p));
    if (m % base.extension_degree() != 0)
        throw BadField(base.to_string() + " does not embed into GF(" + std::to_string(q) + ")");
    return Field::galois(p, m);
}

namespace {

struct ActionSetup {
    Field fq;
    ProjectiveSpace space;
    std::vector<MatConst> group;  // A(t) for t of code 0, 1, ..., q - 1
};

ActionSetup setup(const GaAction& mu, std::uint64_t q) {
    const Field fq = action_field(mu, q);
    ProjectiveSpace space(fq, mu.dimension());
    const MatPoly a = embed_matrix(mu.source().matrix(), FieldEmbedding(mu.field(), fq));
    std::vector<MatConst> group;
    group.reserve(q);
    for (std::uint64_t c = 0; c < q; ++c) group.push_back(evaluate(a, fq.from_code(c)));
    return {fq, std::move(space), std::move(group)};
}

kernels::IndexLaw additive_law(Field fq) {
    return [fq](std::size_t s, std::size_t t) {
        return static_cast<std::size_t>((fq.from_code(s) + fq.from_code(t)).code());
    };
}

template <class Images, class Law>
bool identity_and_law(const ActionSetup& s, const Images& images, const Law& law_check) {
    // code 0 is t = 0
    for (std::size_t x = 0; x < s.space.count(); ++x)
        if (images[0][x] != x) return false;
    return law_check(images);
}

}  // namespace

bool verify_action(const GaAction& mu, std::uint64_t q) {
    const ActionSetup s = setup(mu, q);
    const auto images = kernels::omp::point_images(s.group, s.space);
    const auto law = additive_law(s.fq);
    return identity_and_law(s, images, [&](const auto& im) { return kernels::omp::action_law_holds(im, law); });
}

bool verify_action_serial(const GaAction& mu, std::uint64_t q) {
    const ActionSetup s = setup(mu, q);
    const auto images = kernels::serial::point_images(s.group, s.space);
    const auto law = additive_law(s.fq);
    return identity_and_law(s, images, [&](const auto& im) { return kernels::serial::action_law_holds(im, law); });
}

std::vector<std::vector<ProjPoint>> orbits(const GaAction& mu, std::uint64_t q) {
    const Field fq = action_field(mu, q);
    const ProjectiveSpace space(fq, mu.dimension());
    const MatPoly a = embed_matrix(mu.source().matrix(), FieldEmbedding(mu.field(), fq));

    // additive F_p-basis of F_q: the elements 1, x, ..., x^(m-1), with codes p^i
    std::vector<MatConst> gens;
    std::uint64_t code = 1;
    for (unsigned i = 0; i < fq.extension_degree(); ++i, code *= fq.characteristic())
        gens.push_back(evaluate(a, fq.from_code(code)));
    const auto images = kernels::omp::point_images(gens, space);

    std::vector<std::size_t> parent(space.count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& img : images)
        for (std::size_t x = 0; x < space.count(); ++x) {
            std::size_t rx = find(x), ry = find(img[x]);
            if (rx == ry) continue;
            if (ry < rx) std::swap(rx, ry);
            parent[ry] = rx;
        }

    // points are in increasing order, so the root (smallest index) leads each orbit
    std::map<std::size_t, std::vector<ProjPoint>> by_root;
    for (std::size_t x = 0; x < space.count(); ++x) by_root[find(x)].push_back(space[x]);
    std::vector<std::vector<ProjPoint>> out;
    out.reserve(by_root.size());
    for (auto& [root, members] : by_root) out.push_back(std::move(members));
    return out;
}

std::vector<ProjPoint> fixed_points(const GaAction& mu, std::uint64_t q) {
    std::vector<ProjPoint> fixed;
    for (auto& orbit : orbits(mu, q))
        if (orbit.size() == 1) fixed.push_back(orbit.front());
    return fixed;
}

}  // namespace expmat
