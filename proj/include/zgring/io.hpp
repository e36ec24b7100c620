#pragma once

// JSON forms of library values. Big integers are decimal strings and
// rationals are "p/q" strings, so nothing loses precision.

#include <iosfwd>

#include <json.hpp>

#include "zgring/combinatorics.hpp"
#include "zgring/interval.hpp"
#include "zgring/sequences.hpp"

namespace zgring {

using Json = nlohmann::ordered_json;

Json to_json(const ZGamma& a);    // {"m": "..", "n": ".."}
Json to_json(const Quad& q);      // {"i":, "a":, "b":, "c":}
Json to_json(const RationalInterval& x);  // {"lo": "p/q", "hi": "p/q"}
Json to_json(const SymTriple& t);         // ["x0", "x1", "x2"]
Json to_json(const TransitionMatrix& m);  // [[a11, a12], [a21, a22]]

/// seed, window and (when present) the xi / theta enclosures.
Json dump_system(const ExtremalSystem& sys);

/// Inverse of dump_system; performs no consistency checks (see verify_conditions).
/// Throws std::invalid_argument on malformed input.
ExtremalSystem load_system(const Json& j);

Rational parse_rational(const std::string& s);

}  // namespace zgring
