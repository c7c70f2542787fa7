#pragma once

// File format: one JSON object per file with a "kind" discriminator.
// Rationals are strings ("p" or "p/q"), indices are 1-based, multilinear maps
// are sparse lists of {at, value} sorted by index tuple, and polynomial
// coefficients use the textual syntax of Poly::parse. serialize() emits a
// canonical rendering (two-space indent, sorted keys, sorted sparse entries)
// that survives a parse/serialize round trip byte for byte.

#include <string>
#include <variant>

#include "l2v/courant.hpp"
#include "l2v/crossed_module.hpp"
#include "l2v/dirac.hpp"
#include "l2v/omni.hpp"
#include "l2v/report.hpp"
#include "l2v/sh_leibniz.hpp"

namespace l2v {

/// Chain-endomorphism automorphism data together with the complex whose
/// endomorphism algebra it acts on (the file stores both).
struct EndAutoFile {
    TwoTermComplex complex;
    DglaAutomorphism f;
};

using Structure = std::variant<ShLeibniz2, CrossedModule, SkeletalQuadruple, EndAutoFile,
                               ExactTca, TwistedPoisson, VerifyReport>;

/// The "kind" field value for each alternative, in variant order:
/// sh-leibniz, crossed-module, skeletal-quadruple, end-automorphism,
/// exact-tca, twisted-poisson, report.
std::string structure_kind(const Structure& s);

/// Parse a structure from JSON text; `where` names the source (file name)
/// for error messages. Throws ParseError on malformed input.
Structure parse_structure(const std::string& text, const std::string& where);

/// Read and parse a file. Throws ParseError (also for unreadable files).
Structure load_structure(const std::string& path);

/// Canonical JSON rendering (ends with a newline).
std::string serialize(const Structure& s);

void save_structure(const Structure& s, const std::string& path);

} // namespace l2v
