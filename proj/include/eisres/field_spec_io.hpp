#ifndef EISRES_FIELD_SPEC_IO_HPP
#define EISRES_FIELD_SPEC_IO_HPP

// Text format:
//
//   field-spec v1
//   label: q_sqrt5
//   poly: -1 -1 1
//   integral_basis:
//     1 0
//     0 1
//   fundamental_units:
//     0 1
//
// poly lists coefficients by ascending degree; matrix rows follow their key on
// indented lines; entries are integers or "p/q". '#' starts a comment.

#include "eisres/field.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace eisres {

Rational parse_rational(const std::string& text);
/// Splits on `sep` (and surrounding whitespace).
QVector parse_rational_list(const std::string& text, char sep = ',');

FieldSpec parse_field_spec(std::istream& in);
FieldSpec parse_field_spec(const std::string& text);
std::string format_field_spec(const FieldSpec& spec);

/// "q" and "q_sqrt5".
std::optional<FieldSpec> builtin_field_spec(const std::string& name);
/// A builtin name, or else a path to a field-spec file.
FieldSpec read_field_spec(const std::string& name_or_path);

}  // namespace eisres

#endif
