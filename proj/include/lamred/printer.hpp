#ifndef LAMRED_PRINTER_HPP
#define LAMRED_PRINTER_HPP

#include <string>

#include "lamred/term.hpp"

namespace lamred {

// Compact: backslash abstractions with minimal parentheses, e.g. "\ \ #2".
// Unicode: lambda glyphs, fully parenthesized, e.g. "(λ (λ #2))".
// Suspensions print as [t, ol, nl, e] in both styles, with @l for dummies and
// (t,l) for bindings; indirections are transparent.
enum class TermStyle : std::uint8_t { Compact, Unicode };

std::string format_term(const TermNode* t, TermStyle style = TermStyle::Compact);

std::string format_env(Env e, TermStyle style = TermStyle::Compact);

}  // namespace lamred

#endif
