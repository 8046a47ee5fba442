#pragma once

#include <string>

#include "diagram.hpp"
#include "presentation.hpp"
#include "signs.hpp"

namespace hg {

char sign_char(Sign s);                 // '0', '+', '-' or '*'
Sign sign_from_char(char c);            // throws ParseError on anything else

// Sign matrix text: one line per row, entries as the single characters
// 0 + - * separated by exactly one space, no trailing whitespace, all rows
// the same length.  A final newline is allowed.
SignMatrix parse_sign_matrix(const std::string& text);
std::string format_sign_matrix(const SignMatrix& m);

// Presentation text: first line "gens m", then one relator per line as
// whitespace-separated tokens gK or gK^-1 with K a 1-based generator index.
// A blank line is the empty relator.
Presentation parse_presentation(const std::string& text);
std::string format_presentation(const Presentation& p);

// Diagram file: a JSON object with fields "genus" (integer) and "beta"
// (list of genus lists of [alpha_index, sign] pairs, alpha_index 1-based,
// sign in {1, -1}).
HeegaardDiagram parse_diagram_json(const std::string& text);
std::string format_diagram_json(const HeegaardDiagram& h);

}  // namespace hg
