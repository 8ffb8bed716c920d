#pragma once

#include <string>
#include <string_view>

#include "goodstein/errors.hpp"
#include "goodstein/form.hpp"
#include "goodstein/shape.hpp"

namespace goodstein {

// Canonical text for forms and shapes:
//
//   form    := "0@" base | term (" + " term)*
//   term    := coeff "*" base "^" "(" expform ")"
//            | coeff "*" base "^" "[" expform ".." expform ")"
//   expform := "0" | term (" + " term)*
//
// Terms print in descending order, every term repeats the base literal, and
// shapes use the literal "X" in place of the base. Rendering is
// deterministic; parse(render(v)) reproduces v and render(parse(s))
// reproduces canonical s byte for byte.
std::string render(const HForm& f);
std::string render(const Shape& s);

// Whitespace between tokens is ignored. Syntax violations throw parse_error
// with a byte offset; grammatical input denoting a non-canonical value
// throws validation_error.
HForm parse_form(std::string_view text);
Shape parse_shape(std::string_view text);

}  // namespace goodstein
