#pragma once

#include <string>

#include "uaw/algebras.hpp"

namespace uaw {

/// Line-oriented algebra-spec format:
///   alphabet: g1 g2 ...
///   LHS_WORD -> ncpoly-expression ; kind=K
/// with words written as '*'-joined display names.
std::string export_spec(const AlgebraSpec& spec);

/// Parses the format back into an AlgebraSpec (name fields taken from the
/// argument template, used to pick the negative-power conventions).
AlgebraSpec import_spec(const std::string& text, AlgebraName name,
                        const std::string& display_name);

}  // namespace uaw
