#pragma once

#include <string>

#include "shtop/complex.hpp"
#include "shtop/poset.hpp"
#include "shtop/trace.hpp"

namespace shtop {

// Text formats. Tokens are [A-Za-z0-9_]+; '#' starts a comment.
//   complexes: facet <tok> <tok> ...
//   posets:    point <tok>      rel <lower> <upper>
//   traces:    SD v by w | CC s.. | t.. | NE v level k | BR x up|down | WR x

SimplicialComplex parse_complex(const std::string& text);
FinitePoset parse_poset(const std::string& text);
MoveTrace parse_trace(const std::string& text);

std::string render_complex(const SimplicialComplex& K);
std::string render_poset(const FinitePoset& X);
std::string render_trace(const MoveTrace& t);

SimplicialComplex load_complex(const std::string& path);
FinitePoset load_poset(const std::string& path);
MoveTrace load_trace(const std::string& path);

void save_complex(const SimplicialComplex& K, const std::string& path);
void save_poset(const FinitePoset& X, const std::string& path);
void save_trace(const MoveTrace& t, const std::string& path);

}  // namespace shtop
