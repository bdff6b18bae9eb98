#pragma once

#include <string>

#include "dtower/complex.hpp"

namespace dtower {

/// Parses a complex document:
///   {"name": ..., "generators": [{"id","i","j"}...],
///    "differential": [{"from","to":[...]}...]}
/// Throws DtError(kParse), naming the offending generator, on malformed
/// input, duplicate ids, or dangling arrow endpoints.
KnotComplex parse_complex(const std::string& json_text);

KnotComplex load_complex_file(const std::string& path);

/// Canonical writer: generators sorted by (i, j, id), differential entries
/// sorted by source id with sorted target lists.  The output round-trips
/// bit-exactly through parse_complex.
std::string write_canonical(const KnotComplex& c);

void save_complex_file(const KnotComplex& c, const std::string& path);

}  // namespace dtower
