#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kronkit/instance.hpp"
#include "kronkit/marginals.hpp"
#include "kronkit/ressayre.hpp"
#include "kronkit/search.hpp"

namespace kronkit::io {

// All parsers throw Error(Errc::ParseError) on malformed text and the usual
// domain errors (e.g. BoxCountMismatch) on well-formed but invalid content.
// Integers may be JSON numbers or decimal strings; rationals are "p/q" or "p".

/// {"lambda_A": [2], "lambda_B": [2], "lambda_C": [1,1], "k": 2, "m": 2}
/// "k" defaults to the box count of lambda_A; "m" is optional.
KronInstance parse_instance(std::string_view json);
std::string to_json(const KronInstance& inst);

/// {"H": [[...],[...],[...]], "z": int, "p": [int, ...]}
RessayreCertificate parse_ressayre(std::string_view json);
std::string to_json(const RessayreCertificate& cert);

/// {"m": int, "entries": [{"idx": [a,b,c], "re": "p/q", "im": "p/q"}, ...]}
MembershipCertificate parse_membership(std::string_view json);
std::string to_json(const MembershipCertificate& cert);

/// {"m": int, "nontrivial": [{"H":..,"z":..,"p":..}, ...], "chamber": [{"H":..,"z":..}, ...]}
FacetSystem parse_facets(std::string_view json);
std::string to_json(const FacetSystem& fs);

/// One row per triple: 3m comma-separated floats (A block, B block, C block).
std::string to_csv(const std::vector<SpectrumTriple>& spectra);

/// Reads a whole file. Throws ParseError if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace kronkit::io
