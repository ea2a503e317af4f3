#pragma once

#include "ptri/surface.hpp"

#include <string>
#include <string_view>

namespace ptri {

/// Syntax error in a .ptri file, carrying the 1-based line number.
class ParseError : public InputError {
public:
    ParseError(int line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Line-oriented text format, '#' starts a comment:
///   surface genus=<g> boundaries=<b>
///   point <id> interior|boundary=<c>:<pos> [m=<int>] [lambda=<scalar>]
///   arc <id> <h>@<point> <h>@<point>
///   rotation <point>: <h> <h> ...
///   face <id> genus=<g> encloses=[..] isolated=[..] side=<h>.<L|R>[,<h>.<L|R>...]
/// Checks syntax and map well-formedness, not the validation rules.
PartialTriangulation parse_ptri(std::string_view text, RingSpec ring = RingSpec::rationals());
PartialTriangulation load_ptri(const std::string& path, RingSpec ring = RingSpec::rationals());

std::string serialize_ptri(const PartialTriangulation& t);

/// Same triangulation with coefficients mapped into another field.
PartialTriangulation change_ring(const PartialTriangulation& t, RingSpec ring);

}  // namespace ptri
