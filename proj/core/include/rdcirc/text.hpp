#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "rdcirc/term.hpp"

namespace rdcirc {

/// Circuit text grammar (whitespace-insensitive):
///   term := atom | term ";" term | term "|" term
///   atom := "discard" | "copy" | "zero" | "add" | "one" | "and" | "swap"
///         | "id" NAT | "(" term ")"
/// ";" is sequential composition and binds looser than "|"; both operators
/// are left-associative.
///
/// Throws SyntaxError with the byte offset of the offending token, or
/// TypeMismatch when a ";" composes incompatible arities.
Term parse(std::string_view text);

/// Canonical textual form; parse(print(t)) == t structurally.
std::string print(const Term& t);

std::ostream& operator<<(std::ostream& os, const Term& t);

}  // namespace rdcirc
