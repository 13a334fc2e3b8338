#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ovalsets/derived.hpp"
#include "ovalsets/general_curve.hpp"
#include "ovalsets/oval.hpp"
#include "ovalsets/roots.hpp"
#include "ovalsets/stability.hpp"
#include "ovalsets/trigpoly.hpp"

namespace ovalsets {

using Json = nlohmann::ordered_json;

/// Malformed curve-spec or TrigPoly JSON.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// {"a0": number, "terms": [[n, a_n, b_n], ...]} with terms sorted by n.
Json to_json(const TrigPoly& f);
TrigPoly trigpoly_from_json(const Json& j);

/// Contents of a curve-spec file before validation.
struct CurveSpec {
    enum class Kind { Support, Parametric };
    Kind kind = Kind::Support;
    TrigPoly support;  ///< Support
    TrigPoly x;        ///< Parametric
    TrigPoly y;
    int orientation = 1;
};

CurveSpec curve_spec_from_json(const Json& j);
Json to_json(const CurveSpec& spec);
/// Reads and parses a file; throws InputError when it cannot be opened, ParseError when malformed.
CurveSpec load_curve_spec(const std::string& path);

/// Thrown by load_curve_spec when the file cannot be opened.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json to_json(const RootList& r);
Json to_json(const Vec2& v);
Json to_json(const OvalSummary& s);
Json to_json(const DerivedSetReport& r);
Json to_json(const IdentityReport& r);
Json to_json(const StabilityReport& r);
Json to_json(const SmsParametricReport& r);

}  // namespace ovalsets
