#include "expmat/poly.hpp"

#include <algorithm>
#include <sstream>

namespace expmat {

// ---------------------------------------------------------------- Poly1

Poly1::Poly1(Field f, std::vector<Elem> coeffs) : field_(f), coeffs_(std::move(coeffs)) {
    for (const Elem& c : coeffs_)
        if (c.field() != field_) throw FieldMismatch();
    trim();
}

Poly1 Poly1::constant(const Elem& c) { return Poly1(c.field(), {c}); }

Poly1 Poly1::monomial(const Elem& c, std::size_t degree) {
    std::vector<Elem> v(degree + 1, c.field().zero());
    v[degree] = c;
    return Poly1(c.field(), std::move(v));
}

void Poly1::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Elem& Poly1::lowest_nonzero() const {
    for (const Elem& c : coeffs_)
        if (!c.is_zero()) return c;
    throw Error("zero polynomial has no nonzero coefficient");
}

const Elem& Poly1::leading() const {
    if (coeffs_.empty()) throw Error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Elem Poly1::operator()(const Elem& t) const {
    Elem acc = field_.zero();
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
    return acc;
}

Poly1 Poly1::operator-() const {
    Poly1 r = *this;
    for (Elem& c : r.coeffs_) c = -c;
    return r;
}

Poly1& Poly1::operator+=(const Poly1& rhs) {
    if (field_ != rhs.field_) throw FieldMismatch();
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), field_.zero());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Poly1& Poly1::operator-=(const Poly1& rhs) {
    if (field_ != rhs.field_) throw FieldMismatch();
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), field_.zero());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Poly1 operator*(const Poly1& a, const Poly1& b) {
    if (a.field_ != b.field_) throw FieldMismatch();
    Poly1 r(a.field_);
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.trim();
    return r;
}

Poly1& Poly1::operator*=(const Poly1& rhs) { return *this = *this * rhs; }

Poly1& Poly1::operator*=(const Elem& s) {
    if (s.field() != field_) throw FieldMismatch();
    for (Elem& c : coeffs_) c *= s;
    trim();
    return *this;
}

std::pair<Poly1, Poly1> Poly1::divmod(const Poly1& divisor) const {
    if (field_ != divisor.field_) throw FieldMismatch();
    if (divisor.is_zero()) throw DivisionByZero();
    Poly1 rem = *this;
    Poly1 quot(field_);
    if (rem.coeffs_.size() < divisor.coeffs_.size()) return {quot, rem};
    quot.coeffs_.assign(rem.coeffs_.size() - divisor.coeffs_.size() + 1, field_.zero());
    const Elem lead_inv = divisor.leading().inv();
    while (rem.coeffs_.size() >= divisor.coeffs_.size()) {
        const std::size_t shift = rem.coeffs_.size() - divisor.coeffs_.size();
        const Elem c = rem.coeffs_.back() * lead_inv;
        quot.coeffs_[shift] = c;
        for (std::size_t i = 0; i < divisor.coeffs_.size(); ++i) rem.coeffs_[shift + i] -= c * divisor.coeffs_[i];
        rem.trim();
    }
    quot.trim();
    return {quot, rem};
}

Poly1 Poly1::exact_div(const Poly1& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw Error("polynomial division is not exact");
    return q;
}

Poly1 Poly1::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inv();
}

std::string Poly1::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const bool unit = coeffs_[i].is_one();
        if (i == 0) {
            os << coeffs_[i].to_string();
        } else {
            if (!unit) os << coeffs_[i].to_string() << "*";
            os << "T";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Poly1 gcd(Poly1 a, Poly1 b) {
    while (!b.is_zero()) {
        Poly1 r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly1 reflect(const Poly1& a) {
    std::vector<Elem> c = a.coeffs();
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return Poly1(a.field(), std::move(c));
}

Elem at_zero(const Poly1& a) { return a.coeff(0); }

Poly1 power_subst(const Poly1& a, std::uint64_t e) {
    if (e == 0) throw Error("power substitution needs an exponent >= 1");
    if (a.is_zero()) return a;
    const auto deg = static_cast<std::uint64_t>(a.degree());
    if (deg > 0 && e > (std::uint64_t{1} << 28) / deg) throw Error("power substitution degree too large");
    std::vector<Elem> c(deg * e + 1, a.field().zero());
    for (std::uint64_t i = 0; i <= deg; ++i) c[i * e] = a.coeffs()[i];
    return Poly1(a.field(), std::move(c));
}

Poly2 shift_sum(const Poly1& a) {
    const Field f = a.field();
    if (a.is_zero()) return Poly2(f);
    const std::size_t n = a.size();
    Poly2 r(f, n, n);
    // Pascal row k gives binom(k, i) in the field
    std::vector<Elem> row{f.one()};
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0) {
            std::vector<Elem> next(k + 1, f.one());
            for (std::size_t i = 1; i < k; ++i) next[i] = row[i - 1] + row[i];
            row = std::move(next);
        }
        const Elem& ak = a.coeffs()[k];
        if (ak.is_zero()) continue;
        for (std::size_t i = 0; i <= k; ++i) r.at(i, k - i) += ak * row[i];
    }
    r.trim();
    return r;
}

// ---------------------------------------------------------------- Poly2

Poly2::Poly2(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

Poly2 Poly2::tensor(const Poly1& a, const Poly1& b) {
    if (a.field() != b.field()) throw FieldMismatch();
    if (a.is_zero() || b.is_zero()) return Poly2(a.field());
    Poly2 r(a.field(), a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r.at(i, j) = a.coeffs()[i] * b.coeffs()[j];
    r.trim();
    return r;
}

Elem Poly2::coeff(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) return field_.zero();
    return at(i, j);
}

Poly1 Poly2::at_second_zero() const {
    std::vector<Elem> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back(at(i, 0));
    return Poly1(field_, std::move(c));
}

void Poly2::trim() {
    auto row_zero = [&](std::size_t i) {
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) return false;
        return true;
    };
    auto col_zero = [&](std::size_t j, std::size_t rows) {
        for (std::size_t i = 0; i < rows; ++i)
            if (!at(i, j).is_zero()) return false;
        return true;
    };
    std::size_t rows = rows_;
    while (rows > 0 && row_zero(rows - 1)) --rows;
    std::size_t cols = cols_;
    while (cols > 0 && col_zero(cols - 1, rows)) --cols;
    if (rows == 0 || cols == 0) {
        rows_ = cols_ = 0;
        data_.clear();
        return;
    }
    if (rows == rows_ && cols == cols_) return;
    std::vector<Elem> d;
    d.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) d.push_back(at(i, j));
    rows_ = rows;
    cols_ = cols;
    data_ = std::move(d);
}

Poly2 Poly2::operator-() const {
    Poly2 r = *this;
    for (Elem& c : r.data_) c = -c;
    return r;
}

Poly2& Poly2::operator+=(const Poly2& rhs) {
    if (field_ != rhs.field_) throw FieldMismatch();
    Poly2 r(field_, std::max(rows_, rhs.rows_), std::max(cols_, rhs.cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < rhs.rows_; ++i)
        for (std::size_t j = 0; j < rhs.cols_; ++j) r.at(i, j) += rhs.at(i, j);
    r.trim();
    return *this = std::move(r);
}

Poly2& Poly2::operator-=(const Poly2& rhs) { return *this += -rhs; }

Poly2 operator*(const Poly2& a, const Poly2& b) {
    if (a.field_ != b.field_) throw FieldMismatch();
    if (a.is_zero() || b.is_zero()) return Poly2(a.field_);
    Poly2 r(a.field_, a.rows_ + b.rows_ - 1, a.cols_ + b.cols_ - 1);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) {
            const Elem& x = a.at(i, j);
            if (x.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows_; ++k)
                for (std::size_t l = 0; l < b.cols_; ++l) r.at(i + k, j + l) += x * b.at(k, l);
        }
    r.trim();
    return r;
}

bool operator==(const Poly2& a, const Poly2& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<std::vector<Elem>> Poly2::grid() const {
    std::vector<std::vector<Elem>> g(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) g[i].push_back(at(i, j));
    return g;
}

std::string Poly2::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t total = 0; total < rows_ + cols_; ++total)
        for (std::size_t i = 0; i <= total; ++i) {
            const std::size_t j = total - i;
            if (i >= rows_ || j >= cols_ || at(i, j).is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            const bool unit = at(i, j).is_one();
            if (!unit || total == 0) os << at(i, j).to_string();
            if (!unit && total > 0) os << "*";
            if (i > 0) os << "T" << (i > 1 ? "^" + std::to_string(i) : "");
            if (i > 0 && j > 0) os << "*";
            if (j > 0) os << "T'" << (j > 1 ? "^" + std::to_string(j) : "");
        }
    return os.str();
}

}  // namespace expmat
