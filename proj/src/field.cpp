#include "expmat/field.hpp"

#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace expmat {

namespace detail {

struct FieldCtx {
    std::uint64_t p = 0;  // 0 for Q
    unsigned m = 1;
    std::uint64_t q = 0;  // p^m, 0 for Q
    std::vector<std::uint64_t> modulus;  // monic, ascending, length m + 1
    // log/antilog tables for small extension fields
    std::vector<std::uint32_t> log;
    std::vector<std::uint64_t> exp;
};

}  // namespace detail

namespace {

using detail::FieldCtx;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    // extended Euclid on signed 128-bit to avoid overflow
    __int128 t = 0, new_t = 1;
    __int128 r = p, new_r = a;
    while (new_r != 0) {
        __int128 quot = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - quot * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - quot * new_r);
    }
    if (r != 1) throw DivisionByZero();
    if (t < 0) t += p;
    return static_cast<std::uint64_t>(t);
}

// ---- dense polynomials over F_p on raw residues, used only to build GF(p^m) ----

using RawPoly = std::vector<std::uint64_t>;

void trim(RawPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

RawPoly raw_mod(RawPoly a, const RawPoly& f, std::uint64_t p) {
    trim(a);
    const std::uint64_t lead_inv = invmod(f.back(), p);
    while (a.size() >= f.size()) {
        const std::uint64_t c = mulmod(a.back(), lead_inv, p);
        const std::size_t shift = a.size() - f.size();
        for (std::size_t i = 0; i < f.size(); ++i)
            a[shift + i] = (a[shift + i] + p - mulmod(c, f[i], p)) % p;
        trim(a);
    }
    return a;
}

RawPoly raw_mulmod(const RawPoly& a, const RawPoly& b, const RawPoly& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    RawPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    return raw_mod(std::move(r), f, p);
}

RawPoly raw_powmod(RawPoly base, std::uint64_t e, const RawPoly& f, std::uint64_t p) {
    RawPoly r{1};
    base = raw_mod(std::move(base), f, p);
    while (e) {
        if (e & 1) r = raw_mulmod(r, base, f, p);
        base = raw_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

RawPoly raw_gcd(RawPoly a, RawPoly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        RawPoly r = raw_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Ben-Or: f of degree m is irreducible iff gcd(x^(p^i) - x, f) = 1 for 1 <= i <= m/2.
bool raw_irreducible(const RawPoly& f, std::uint64_t p) {
    const std::size_t m = f.size() - 1;
    RawPoly xp{0, 1};
    for (std::size_t i = 1; i <= m / 2; ++i) {
        xp = raw_powmod(xp, p, f, p);
        RawPoly d = xp;
        d.resize(std::max<std::size_t>(d.size(), 2), 0);
        d[1] = (d[1] + p - 1) % p;
        trim(d);
        RawPoly g = raw_gcd(f, d, p);
        if (g.size() != 1) return false;
    }
    return true;
}

RawPoly least_irreducible(std::uint64_t p, unsigned m, std::uint64_t q) {
    for (std::uint64_t c = 0; c < q; ++c) {
        RawPoly f(m + 1, 0);
        std::uint64_t rest = c;
        for (unsigned i = 0; i < m; ++i) {
            f[i] = rest % p;
            rest /= p;
        }
        f[m] = 1;
        if (raw_irreducible(f, p)) return f;
    }
    throw BadField("no irreducible polynomial found");
}

// ---- GF(p^m) arithmetic on integer codes ----

RawPoly digits(const FieldCtx& f, std::uint64_t c) {
    RawPoly d(f.m, 0);
    for (unsigned i = 0; i < f.m; ++i) {
        d[i] = c % f.p;
        c /= f.p;
    }
    return d;
}

std::uint64_t undigits(const FieldCtx& f, const RawPoly& d) {
    std::uint64_t c = 0;
    for (std::size_t i = d.size(); i-- > 0;) c = c * f.p + d[i];
    return c;
}

std::uint64_t gf_add(const FieldCtx& f, std::uint64_t a, std::uint64_t b) {
    if (f.m == 1) {
        std::uint64_t s = a + b;
        return s >= f.p ? s - f.p : s;
    }
    if (f.p == 2) return a ^ b;
    std::uint64_t r = 0, scale = 1;
    for (unsigned i = 0; i < f.m; ++i) {
        r += ((a % f.p + b % f.p) % f.p) * scale;
        a /= f.p;
        b /= f.p;
        scale *= f.p;
    }
    return r;
}

std::uint64_t gf_neg(const FieldCtx& f, std::uint64_t a) {
    if (f.m == 1) return a == 0 ? 0 : f.p - a;
    if (f.p == 2) return a;
    std::uint64_t r = 0, scale = 1;
    for (unsigned i = 0; i < f.m; ++i) {
        r += ((f.p - a % f.p) % f.p) * scale;
        a /= f.p;
        scale *= f.p;
    }
    return r;
}

std::uint64_t gf_mul_slow(const FieldCtx& f, std::uint64_t a, std::uint64_t b) {
    return undigits(f, raw_mulmod(digits(f, a), digits(f, b), f.modulus, f.p));
}

std::uint64_t gf_mul(const FieldCtx& f, std::uint64_t a, std::uint64_t b) {
    if (f.m == 1) return mulmod(a, b, f.p);
    if (a == 0 || b == 0) return 0;
    if (!f.log.empty()) return f.exp[(f.log[a] + f.log[b]) % (f.q - 1)];
    return gf_mul_slow(f, a, b);
}

std::uint64_t gf_pow(const FieldCtx& f, std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = gf_mul(f, r, a);
        a = gf_mul(f, a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t gf_inv(const FieldCtx& f, std::uint64_t a) {
    if (a == 0) throw DivisionByZero();
    if (f.m == 1) return invmod(a, f.p);
    if (!f.log.empty()) return f.exp[(f.q - 1 - f.log[a]) % (f.q - 1)];
    return gf_pow(f, a, f.q - 2);
}

constexpr std::uint64_t kTableLimit = 1u << 16;

void build_tables(FieldCtx& f) {
    if (f.m == 1 || f.q > kTableLimit) return;
    for (std::uint64_t g = 2; g < f.q; ++g) {
        std::vector<std::uint64_t> exp;
        exp.reserve(f.q - 1);
        std::uint64_t x = 1;
        do {
            exp.push_back(x);
            x = gf_mul_slow(f, x, g);
        } while (x != 1 && exp.size() < f.q);
        if (exp.size() != f.q - 1) continue;
        f.log.assign(f.q, 0);
        for (std::uint32_t i = 0; i < exp.size(); ++i) f.log[exp[i]] = i;
        f.exp = std::move(exp);
        return;
    }
}

std::mutex registry_mutex;
std::map<std::pair<std::uint64_t, unsigned>, std::unique_ptr<FieldCtx>>& registry() {
    static std::map<std::pair<std::uint64_t, unsigned>, std::unique_ptr<FieldCtx>> r;
    return r;
}

const FieldCtx* intern(std::uint64_t p, unsigned m) {
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto& reg = registry();
    auto it = reg.find({p, m});
    if (it != reg.end()) return it->second.get();
    auto ctx = std::make_unique<FieldCtx>();
    ctx->p = p;
    ctx->m = m;
    if (p == 0) {
        ctx->q = 0;
    } else {
        std::uint64_t q = 1;
        for (unsigned i = 0; i < m; ++i) {
            if (q > (std::uint64_t{1} << 62) / p) throw BadField("field order exceeds 2^62");
            q *= p;
        }
        ctx->q = q;
        ctx->modulus = m == 1 ? RawPoly{0, 1} : least_irreducible(p, m, q);
        build_tables(*ctx);
    }
    const FieldCtx* raw = ctx.get();
    reg.emplace(std::make_pair(p, m), std::move(ctx));
    return raw;
}

const FieldCtx& need(const FieldCtx* ctx) {
    if (!ctx) throw Error("use of an element or field that was never initialized");
    return *ctx;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % small == 0) return n == small;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic witness set for 64-bit inputs
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint64_t p) {
    if (!is_prime(p)) throw BadField("characteristic " + std::to_string(p) + " is not prime");
    if (p >= (std::uint64_t{1} << 62)) throw BadField("characteristic exceeds 2^62");
    return Field(intern(p, 1));
}

Field Field::galois(std::uint64_t p, unsigned m) {
    if (m == 0) throw BadField("extension degree must be positive");
    if (!is_prime(p)) throw BadField("characteristic " + std::to_string(p) + " is not prime");
    return Field(intern(p, m));
}

Field Field::rationals() { return Field(intern(0, 1)); }

Field Field::parse(std::string_view text) {
    auto to_u64 = [&](std::string_view s) {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
            throw BadField("malformed field descriptor '" + std::string(text) + "'");
        return v;
    };
    const auto comma = text.find(',');
    const std::uint64_t p = to_u64(text.substr(0, comma));
    const std::uint64_t m = comma == std::string_view::npos ? 1 : to_u64(text.substr(comma + 1));
    if (p == 0) {
        if (m != 1) throw BadField("characteristic 0 requires extension degree 1");
        return rationals();
    }
    if (m > 64) throw BadField("extension degree too large");
    return galois(p, static_cast<unsigned>(m));
}

std::uint64_t Field::characteristic() const { return need(ctx_).p; }
unsigned Field::extension_degree() const { return need(ctx_).m; }
bool Field::is_finite() const { return need(ctx_).p != 0; }

std::optional<std::uint64_t> Field::order() const {
    if (!is_finite()) return std::nullopt;
    return ctx_->q;
}

const std::vector<std::uint64_t>& Field::modulus() const { return need(ctx_).modulus; }

Elem Field::zero() const {
    if (need(ctx_).p == 0) return Elem(ctx_, mpq_class(0));
    return Elem(ctx_, std::uint64_t{0});
}

Elem Field::one() const {
    if (need(ctx_).p == 0) return Elem(ctx_, mpq_class(1));
    return Elem(ctx_, std::uint64_t{1});
}

Elem Field::from_int(std::int64_t v) const {
    const FieldCtx& f = need(ctx_);
    if (f.p == 0) return Elem(ctx_, mpq_class(static_cast<long>(v)));
    const auto p = static_cast<__int128>(f.p);
    __int128 r = static_cast<__int128>(v) % p;
    if (r < 0) r += p;
    return Elem(ctx_, static_cast<std::uint64_t>(r));
}

Elem Field::from_code(std::uint64_t c) const {
    const FieldCtx& f = need(ctx_);
    if (f.p == 0) throw NeedsFiniteField("integer codes are defined for finite fields only");
    if (c >= f.q) throw BadField("code " + std::to_string(c) + " out of range for field of order " + std::to_string(f.q));
    return Elem(ctx_, c);
}

Elem Field::from_rational(const mpq_class& q) const {
    if (need(ctx_).p != 0) throw BadField("rational constants require characteristic 0");
    mpq_class c = q;
    c.canonicalize();
    return Elem(ctx_, std::move(c));
}

Elem Field::parse_elem(std::string_view text) const {
    const FieldCtx& f = need(ctx_);
    if (f.p == 0) {
        mpq_class q;
        if (q.set_str(std::string(text), 10) != 0) throw BadField("malformed rational '" + std::string(text) + "'");
        if (q.get_den() == 0) throw DivisionByZero();
        q.canonicalize();
        return Elem(ctx_, std::move(q));
    }
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        throw BadField("malformed field element '" + std::string(text) + "'");
    return from_code(v);
}

Field Field::extension(unsigned k) const {
    const FieldCtx& f = need(ctx_);
    if (f.p == 0) throw NeedsFiniteField("Q has no finite extensions here");
    if (k == 1) return *this;
    return galois(f.p, f.m * k);
}

std::string Field::to_string() const {
    const FieldCtx& f = need(ctx_);
    if (f.p == 0) return "Q";
    if (f.m == 1) return "F_" + std::to_string(f.p);
    return "GF(" + std::to_string(f.p) + "^" + std::to_string(f.m) + ")";
}

// ---------------------------------------------------------------- Elem

void Elem::check_same(const Elem& rhs) const {
    need(ctx_);
    if (ctx_ != rhs.ctx_) throw FieldMismatch();
}

bool Elem::is_zero() const {
    if (auto* v = std::get_if<std::uint64_t>(&val_)) return *v == 0;
    return sgn(std::get<mpq_class>(val_)) == 0;
}

bool Elem::is_one() const {
    if (auto* v = std::get_if<std::uint64_t>(&val_)) return *v == 1;
    return std::get<mpq_class>(val_) == 1;
}

std::uint64_t Elem::code() const {
    if (auto* v = std::get_if<std::uint64_t>(&val_)) return *v;
    throw NeedsFiniteField("rational elements have no integer code");
}

const mpq_class& Elem::rational() const {
    if (auto* v = std::get_if<mpq_class>(&val_)) return *v;
    throw BadField("element is not rational");
}

Elem Elem::operator-() const {
    const FieldCtx& f = need(ctx_);
    if (f.p == 0) return Elem(ctx_, mpq_class(-std::get<mpq_class>(val_)));
    return Elem(ctx_, gf_neg(f, std::get<std::uint64_t>(val_)));
}

Elem& Elem::operator+=(const Elem& rhs) {
    check_same(rhs);
    if (ctx_->p == 0) {
        std::get<mpq_class>(val_) += std::get<mpq_class>(rhs.val_);
    } else {
        auto& v = std::get<std::uint64_t>(val_);
        v = gf_add(*ctx_, v, std::get<std::uint64_t>(rhs.val_));
    }
    return *this;
}

Elem& Elem::operator-=(const Elem& rhs) {
    check_same(rhs);
    if (ctx_->p == 0) {
        std::get<mpq_class>(val_) -= std::get<mpq_class>(rhs.val_);
    } else {
        auto& v = std::get<std::uint64_t>(val_);
        v = gf_add(*ctx_, v, gf_neg(*ctx_, std::get<std::uint64_t>(rhs.val_)));
    }
    return *this;
}

Elem& Elem::operator*=(const Elem& rhs) {
    check_same(rhs);
    if (ctx_->p == 0) {
        std::get<mpq_class>(val_) *= std::get<mpq_class>(rhs.val_);
    } else {
        auto& v = std::get<std::uint64_t>(val_);
        v = gf_mul(*ctx_, v, std::get<std::uint64_t>(rhs.val_));
    }
    return *this;
}

Elem& Elem::operator/=(const Elem& rhs) {
    check_same(rhs);
    return *this *= rhs.inv();
}

Elem Elem::inv() const {
    const FieldCtx& f = need(ctx_);
    if (is_zero()) throw DivisionByZero();
    if (f.p == 0) return Elem(ctx_, mpq_class(1 / std::get<mpq_class>(val_)));
    return Elem(ctx_, gf_inv(f, std::get<std::uint64_t>(val_)));
}

Elem Elem::pow(std::uint64_t e) const {
    Elem r = field().one();
    Elem b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

bool operator==(const Elem& a, const Elem& b) { return a.ctx_ == b.ctx_ && a.val_ == b.val_; }

bool operator<(const Elem& a, const Elem& b) {
    a.check_same(b);
    if (a.ctx_->p == 0) return std::get<mpq_class>(a.val_) < std::get<mpq_class>(b.val_);
    return std::get<std::uint64_t>(a.val_) < std::get<std::uint64_t>(b.val_);
}

std::string Elem::to_string() const {
    if (auto* v = std::get_if<std::uint64_t>(&val_)) return std::to_string(*v);
    return std::get<mpq_class>(val_).get_str();
}

// ---------------------------------------------------------------- FieldEmbedding

FieldEmbedding::FieldEmbedding(Field source, Field target) : source_(source), target_(target) {
    if (source == target) return;
    if (!source.is_finite() || !target.is_finite() || source.characteristic() != target.characteristic())
        throw BadField("no embedding from " + source.to_string() + " into " + target.to_string());
    const unsigned m = source.extension_degree();
    if (target.extension_degree() % m != 0)
        throw BadField("no embedding from " + source.to_string() + " into " + target.to_string());
    if (m == 1) {
        basis_images_ = {target.one()};
        return;
    }
    const auto& mod = source.modulus();
    const std::uint64_t q = *target.order();
    for (std::uint64_t c = 0; c < q; ++c) {
        const Elem x = target.from_code(c);
        Elem acc = target.zero();
        for (std::size_t i = mod.size(); i-- > 0;) acc = acc * x + target.from_int(static_cast<std::int64_t>(mod[i]));
        if (!acc.is_zero()) continue;
        Elem power = target.one();
        for (unsigned i = 0; i < m; ++i) {
            basis_images_.push_back(power);
            power *= x;
        }
        return;
    }
    throw BadField("source modulus has no root in target field");
}

Elem FieldEmbedding::operator()(const Elem& a) const {
    if (a.field() != source_) throw FieldMismatch();
    if (source_ == target_) return a;
    const std::uint64_t p = source_.characteristic();
    std::uint64_t c = a.code();
    Elem r = target_.zero();
    for (const Elem& b : basis_images_) {
        r += target_.from_int(static_cast<std::int64_t>(c % p)) * b;
        c /= p;
    }
    return r;
}

}  // namespace expmat
