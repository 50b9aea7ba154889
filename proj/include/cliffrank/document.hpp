#pragma once

#include <string>

#include "cliffrank/multivector.hpp"
#include "cliffrank/signature.hpp"

namespace cliffrank {

// User-supplied multivector: a JSON document
//   { "signature": {"p": 1, "q": 0},
//     "terms": [ {"indices": [1], "re": 1, "im": 0}, ... ] }
// Indices strictly ascending in [1, n]; no duplicate blades across terms;
// exact integer coefficients only.
struct MultivectorDocument {
    Signature signature;
    Multivector value;
};

// Throws document_error with a location/description on malformed input.
MultivectorDocument parse_document(const std::string& text);

} // namespace cliffrank
