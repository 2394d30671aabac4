#include "expmat/cli/json_io.hpp"

namespace expmat::cli {

const Json& member(const Json& j, const char* key) {
    if (!j.is_object()) throw MalformedInput("expected a JSON object holding '" + std::string(key) + "'");
    auto it = j.find(key);
    if (it == j.end()) throw MalformedInput(std::string("missing member '") + key + "'");
    return *it;
}

bool is_non_negative_int(const Json& j) {
    return j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0);
}

// ---------------------------------------------------------------- encode

Json to_json(Field f) { return Json{{"p", f.characteristic()}, {"ext", f.extension_degree()}}; }

Json to_json(const Elem& e) {
    if (e.field().is_finite()) return e.code();
    return e.to_string();
}

Json to_json(const Poly1& p) {
    Json a = Json::array();
    for (const Elem& c : p.coeffs()) a.push_back(to_json(c));
    return a;
}

Json to_json(const Poly2& p) {
    Json rows = Json::array();
    for (const auto& row : p.grid()) {
        Json r = Json::array();
        for (const Elem& c : row) r.push_back(to_json(c));
        rows.push_back(std::move(r));
    }
    return rows;
}

namespace {

template <class R>
Json matrix_json(const Matrix<R>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        Json r = Json::array();
        for (std::size_t j = 0; j < m.size(); ++j) r.push_back(to_json(m(i, j)));
        rows.push_back(std::move(r));
    }
    return Json{{"n", m.size()}, {"entries", std::move(rows)}};
}

}  // namespace

Json to_json(const MatConst& m) { return matrix_json(m); }
Json to_json(const MatPoly& m) { return matrix_json(m); }

Json to_json(const NilTuple& t) {
    Json mats = Json::array();
    for (const MatConst& m : t.mats()) mats.push_back(to_json(m));
    Json out{{"r", t.length()}, {"mats", std::move(mats)}};
    if (t.length() == 0) out["n"] = t.size();
    return out;
}

Json to_json(const ProjPoint& x) {
    Json a = Json::array();
    for (const Elem& c : x.coords()) a.push_back(to_json(c));
    return a;
}

// ---------------------------------------------------------------- decode

Field field_from_json(const Json& j) {
    const Json& p = member(j, "p");
    if (!is_non_negative_int(p)) throw MalformedInput("field 'p' must be a non-negative integer");
    unsigned ext = 1;
    if (auto it = j.find("ext"); it != j.end()) {
        if (!is_non_negative_int(*it) || it->get<std::uint64_t>() == 0 || it->get<std::uint64_t>() > 64)
            throw MalformedInput("field 'ext' must be an integer in 1..64");
        ext = it->get<unsigned>();
    }
    const auto pv = p.get<std::uint64_t>();
    try {
        if (pv == 0) {
            if (ext != 1) throw MalformedInput("characteristic 0 requires ext = 1");
            return Field::rationals();
        }
        return Field::galois(pv, ext);
    } catch (const BadField& e) {
        throw MalformedInput(e.what());
    }
}

Elem elem_from_json(Field f, const Json& j) {
    try {
        if (j.is_number_integer()) {
            if (f.is_finite()) {
                if (!is_non_negative_int(j)) throw MalformedInput("finite field elements are codes >= 0");
                return f.from_code(j.get<std::uint64_t>());
            }
            return f.from_int(j.get<std::int64_t>());
        }
        if (j.is_string()) {
            if (f.is_finite()) throw MalformedInput("finite field elements are integer codes");
            return f.parse_elem(j.get<std::string>());
        }
    } catch (const BadField& e) {
        throw MalformedInput(e.what());
    } catch (const DivisionByZero&) {
        throw MalformedInput("zero denominator");
    }
    throw MalformedInput("malformed field element: " + j.dump());
}

Poly1 poly_from_json(Field f, const Json& j) {
    if (!j.is_array()) throw MalformedInput("polynomial must be an ascending coefficient array");
    std::vector<Elem> c;
    c.reserve(j.size());
    for (const Json& e : j) c.push_back(elem_from_json(f, e));
    return Poly1(f, std::move(c));
}

namespace {

const Json& matrix_rows(const Json& j, std::size_t& n) {
    const Json* rows = &j;
    if (j.is_object()) {
        rows = &member(j, "entries");
        const Json& nj = member(j, "n");
        if (!is_non_negative_int(nj)) throw MalformedInput("matrix 'n' must be a non-negative integer");
        n = nj.get<std::size_t>();
        if (rows->size() != n) throw MalformedInput("matrix has " + std::to_string(rows->size()) + " rows, n = " + std::to_string(n));
    } else {
        if (!j.is_array()) throw MalformedInput("matrix must be an object or an array of rows");
        n = j.size();
    }
    for (const Json& r : *rows)
        if (!r.is_array() || r.size() != n) throw MalformedInput("matrix is not square");
    return *rows;
}

}  // namespace

MatConst const_matrix_from_json(Field f, const Json& j) {
    std::size_t n = 0;
    const Json& rows = matrix_rows(j, n);
    std::vector<Elem> e;
    e.reserve(n * n);
    for (const Json& r : rows)
        for (const Json& x : r) e.push_back(elem_from_json(f, x));
    return MatConst(f, n, std::move(e));
}

MatPoly poly_matrix_from_json(Field f, const Json& j) {
    std::size_t n = 0;
    const Json& rows = matrix_rows(j, n);
    if (n == 0) throw MalformedInput("matrix must be at least 1x1");
    std::vector<Poly1> e;
    e.reserve(n * n);
    for (const Json& r : rows)
        for (const Json& x : r) e.push_back(poly_from_json(f, x));
    return MatPoly(f, n, std::move(e));
}

NilTuple tuple_from_json(Field f, const Json& j) {
    const Json& mats = member(j, "mats");
    if (!mats.is_array()) throw MalformedInput("'mats' must be an array");
    std::vector<MatConst> m;
    for (const Json& x : mats) m.push_back(const_matrix_from_json(f, x));
    std::size_t n = 0;
    if (auto it = j.find("n"); it != j.end()) {
        if (!is_non_negative_int(*it)) throw MalformedInput("tuple 'n' must be a non-negative integer");
        n = it->get<std::size_t>();
    } else if (!m.empty()) {
        n = m.front().size();
    } else {
        throw MalformedInput("an empty tuple needs 'n'");
    }
    if (n == 0) throw MalformedInput("tuple matrices must be at least 1x1");
    if (auto it = j.find("r"); it != j.end()) {
        if (!is_non_negative_int(*it) || it->get<std::size_t>() != m.size())
            throw MalformedInput("tuple 'r' does not match the number of matrices");
    }
    for (const MatConst& x : m)
        if (x.size() != n) throw MalformedInput("tuple matrices must all be n x n");
    return NilTuple::unchecked(f, n, std::move(m));
}

ProjPoint point_from_json(Field f, const Json& j) {
    if (!j.is_array() || j.empty()) throw MalformedInput("point must be a nonempty coordinate array");
    std::vector<Elem> c;
    for (const Json& x : j) c.push_back(elem_from_json(f, x));
    try {
        return ProjPoint::make(std::move(c));
    } catch (const Error& e) {
        throw MalformedInput(e.what());
    }
}

}  // namespace expmat::cli
