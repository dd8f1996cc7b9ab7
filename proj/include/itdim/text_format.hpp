#pragma once

// Plain-text algebra files and module expressions.
//
//   vertices 2
//   arrow a: 1 -> 2
//   relations: J^2            # or: relations: a.b, b.c
//   module X = simple(1) + rad(proj(1))
//   module Y = module { dims = [1, 1]; arrow a = [[1]] }
//
// Statements end at a newline or ';'. Newlines inside () and [] are ignored.
// `simple(*)`, `proj(*)` and `inj(*)` sum over all vertices; `rad(...)` and
// `syz(...)` take the radical and the first syzygy.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "itdim/repmod.hpp"

namespace itdim {

using NamedModules = std::vector<std::pair<std::string, Rep>>;

struct AlgebraFile {
    MonomialPresentation presentation;
    AlgebraPtr algebra;
    NamedModules modules;
};

/// Parses and validates a whole file; module literals are built over F_p.
/// Throws ParseError (with line and column) or the validation error.
AlgebraFile parse_algebra_file(std::string_view text, Residue p);

/// Presentation part only.
MonomialPresentation parse_algebra(std::string_view text);

/// A module expression over an existing algebra; `named` resolves bare names.
Rep parse_module_expr(std::string_view text, const AlgebraPtr& alg, Residue p, const NamedModules& named = {});

}  // namespace itdim
