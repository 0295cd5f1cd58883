#pragma once

#include <string>

#include "json.hpp"

#include "gamma/chain.hpp"
#include "gamma/hypersurface.hpp"
#include "gamma/parse.hpp"
#include "gamma/torsion.hpp"

namespace gq {

using Json = nlohmann::json;  // std::map-backed: keys serialize sorted

/// Read and parse a JSON file; IO_ERROR when unreadable, PARSE_ERROR on
/// malformed JSON.
Json load_json_file(const std::string& path);

PolyMatrix poly_matrix_from_json(const Json& j);
RatFnMatrix ratfn_matrix_from_json(const Json& j);
Json to_json(const PolyMatrix& m);

/// { "lengths": [..], "boundaries": [ [[poly,..],..], .. ] } for degrees 1..top.
BasedChainComplex complex_from_json(const Json& j);
Json to_json(const BasedChainComplex& c);

/// Per-degree homology basis lifts, an array of matrices (ratfn strings);
/// empty arrays mark degrees without free homology.
HomologyBasisChoice homology_basis_from_json(const Json& j);

/// { "n": .., "d": .., "singularities": [ {"delta_p":..,"mu_p":..} |
///   {"brieskorn":[..]} ], "delta_n"?: poly, "det_phi"?: ratfn }
HypersurfaceData dataset_from_json(const Json& j);
Json to_json(const HypersurfaceData& d);

Json to_json(const HomologyProfile& p);
Json to_json(const SmithForm& s);
Json to_json(const CyclotomicFactorization& f);
Json to_json(const IdentityReport& r);

}  // namespace gq
