#ifndef EXPMAT_CLI_JSON_IO_HPP
#define EXPMAT_CLI_JSON_IO_HPP

/*
 * JSON encoding of the library types.
 *
 *   field       {"p": <0|prime>, "ext": <m >= 1>}
 *   element     integer code 0 .. p^m - 1 (digits base p are the coordinates
 *               in 1, x, x^2, ...); over Q a "num/den" string (integers are
 *               also accepted on input)
 *   Poly1       ascending coefficient array
 *   Poly2       array of rows, row i holding the coefficients of T^i T'^j
 *   MatPoly     {"n": N, "entries": [[poly, ...], ...]} row-major
 *   MatConst    {"n": N, "entries": [[elem, ...], ...]} row-major
 *   NilTuple    {"r": R, "mats": [MatConst, ...]}, plus "n": N when R = 0
 *   ProjPoint   coordinate array
 *
 * Matrices are also accepted as bare arrays of rows.
 */

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "expmat/expcore.hpp"
#include "expmat/projective.hpp"

namespace expmat::cli {

using Json = nlohmann::ordered_json;

/// Input that does not match the schema.
class MalformedInput : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

Json to_json(Field f);
Json to_json(const Elem& e);
Json to_json(const Poly1& p);
Json to_json(const Poly2& p);
Json to_json(const MatConst& m);
Json to_json(const MatPoly& m);
Json to_json(const NilTuple& t);
Json to_json(const ProjPoint& x);

Field field_from_json(const Json& j);
Elem elem_from_json(Field f, const Json& j);
Poly1 poly_from_json(Field f, const Json& j);
MatConst const_matrix_from_json(Field f, const Json& j);
MatPoly poly_matrix_from_json(Field f, const Json& j);
/// Does not validate the nilpotent/commuting invariants.
NilTuple tuple_from_json(Field f, const Json& j);
ProjPoint point_from_json(Field f, const Json& j);

/// Integer >= 0, whether stored signed or unsigned.
bool is_non_negative_int(const Json& j);

/// Member `key` of object `j`; MalformedInput when absent.
const Json& member(const Json& j, const char* key);

}  // namespace expmat::cli

#endif  // EXPMAT_CLI_JSON_IO_HPP
