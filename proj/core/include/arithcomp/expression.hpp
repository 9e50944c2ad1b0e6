#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "arithcomp/ratio_spec.hpp"

namespace arithcomp {

/// Parses the composition/ratio grammar (ASCII, whitespace-insensitive):
///
///   ratio   := product ( '/' ( '(' product ')' | factor ) )?
///   product := factor ( '*' factor )*
///   factor  := comp | ('log' | 'loglog') '(' comp ')' ( '^' '-'? int )?
///   comp    := 'n' | name ( '_' int )? '(' comp ')'     (name 'n' = identity stage)
///
/// A product holds exactly one composition in the numerator and at most one
/// in the denominator. Every log factor must take the same argument: n, the
/// numerator composition, or the denominator composition. Text that reduces
/// to a single composition yields a Composition; anything else a RatioSpec.
/// Errors are ParseError with the byte offset of the offending token.
std::variant<Composition, RatioSpec> parse_expression(std::string_view text);

/// Throws ParseError unless the text is a bare composition.
Composition parse_composition(std::string_view text);

/// A bare composition c becomes the ratio c / 1.
RatioSpec parse_ratio(std::string_view text);

std::string to_string(const Composition& composition);
std::string to_string(const RatioSpec& spec);

}  // namespace arithcomp
