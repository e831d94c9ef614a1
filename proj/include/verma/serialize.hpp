#ifndef VERMA_SERIALIZE_HPP
#define VERMA_SERIALIZE_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "verma/pbw.hpp"
#include "verma/polyseries.hpp"
#include "verma/scalar.hpp"

namespace verma
{

// Malformed serialized input.
class ParseError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Canonical JSON forms. Rationals are strings "p" or "p/q".
//
//   LambdaPoly      [[[[s, e], ...], "c"], ...]        sparse powers of lambda_s
//   AffineExponent  {"constant": "c", "linear": [[s, "c"], ...]}
//   SeriesElement   {"n": n, "precision": null | P,
//                    "terms": [{"off": [[i, j, e], ...],
//                               "sub": [[i+1, i, affine], ...],
//                               "coeff": poly}, ...]}
//   PBWVector       {"n": n, "terms": [{"index": [[i, j, a_ij], ...], "coeff": poly}, ...]}
//
// Terms are emitted in the containers' canonical order (PBW terms by degree,
// then lexicographically on the index).
nlohmann::json to_json(const LambdaPoly &p);
nlohmann::json to_json(const AffineExponent &e);
nlohmann::json to_json(const SeriesElement &f, unsigned n);
nlohmann::json to_json(const PBWVector &v, unsigned n);

LambdaPoly lambda_poly_from_json(const nlohmann::json &j);
AffineExponent affine_from_json(const nlohmann::json &j);
SeriesElement series_from_json(const nlohmann::json &j);

struct ParsedPBWVector {
    unsigned n;
    PBWVector vector;
};
ParsedPBWVector pbw_from_json(const nlohmann::json &j);
// Parses text; malformed JSON becomes ParseError too.
ParsedPBWVector pbw_from_json_text(const std::string &text);

// "E_{2,1}E_{3,2}v_\lambda+\lambda_1E_{3,1}v_\lambda", highest degree first.
std::string to_latex(const PBWVector &v);
// "E21 E32 v + l1 E31 v".
std::string to_text(const PBWVector &v);

std::string to_latex(const SeriesElement &f);
std::string to_text(const SeriesElement &f);

} // namespace verma

#endif
