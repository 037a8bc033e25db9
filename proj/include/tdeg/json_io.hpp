#pragma once

#include <json.hpp>

#include "tdeg/canon.hpp"
#include "tdeg/certificate.hpp"
#include "tdeg/classify.hpp"
#include "tdeg/fst.hpp"
#include "tdeg/lattice.hpp"
#include "tdeg/poly.hpp"
#include "tdeg/reduce.hpp"
#include "tdeg/stream.hpp"
#include "tdeg/weight.hpp"

namespace tdeg {

using Json = nlohmann::ordered_json;

// Encoders produce the documented schemas; decoders validate and throw
// Error(Schema) (or Error(Parse) for malformed scalars).

Json encode(const Rat& r);
Json encode(const Poly& p);
Json encode(const Weight& w);
Json encode(const WeightTuple& t);
Json encode(const Fst& f);
Json encode(const StreamSpec& s);
Json encode(const TransductionClaim& c);
Json encode(const TransductionCertificate& c);
Json encode(const Reduce2Certificate& c);
Json encode(const CanonCertificate& c);
Json encode(const Classification& c);
Json encode(const Lattice& l);

Rat decode_rat(const Json& j);
Poly decode_poly(const Json& j);
Weight decode_weight(const Json& j);
WeightTuple decode_tuple(const Json& j);
Fst decode_fst(const Json& j);
StreamSpec decode_stream(const Json& j);
TransductionClaim decode_claim(const Json& j);

/// Parses text as JSON, mapping syntax errors to Error(Parse).
Json parse_json(std::string_view text);

}  // namespace tdeg
