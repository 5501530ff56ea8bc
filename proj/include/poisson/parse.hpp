#pragma once

#include <map>
#include <string>

#include "poisson/bracket.hpp"
#include "poisson/derivation.hpp"
#include "poisson/skew_matrix.hpp"

namespace poisson {

struct ParseError : Error {
    ParseError(const std::string& msg, size_t line, size_t col)
        : Error(msg + " at " + std::to_string(line) + ":" + std::to_string(col)),
          line(line),
          col(col) {}
    size_t line, col;
};

// Expression grammar:
//   poly     := ('+'|'-')? term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' nat)?
//   base     := rational | ident | '(' poly ')'
//   rational := '-'? nat ('/' nat)?
// Implicit multiplication is rejected. Errors carry line:column.
Polynomial parse_polynomial(const std::string& src, const Ring& ring);

// Algebra file: `ring Q[x,y,t]`, `bracket {a,b} = <poly>` lines (unlisted
// pairs are zero), optional `relation <poly>` lines, optional
// `potential <poly>` (exclusive with bracket lines), optional
// `derivation name: x -> <poly>, y -> <poly>` lines. '#' starts a comment.
// The Jacobi check runs at load time unless skip_jacobi is set.
struct AlgebraFile {
    PoissonStructure structure;
    std::map<std::string, Derivation> derivations;
};

AlgebraFile parse_algebra(const std::string& text, bool skip_jacobi = false);

// Matrix file: first token n, then the strict upper triangle row by row.
SkewMatrix parse_skew_matrix(const std::string& text);

}  // namespace poisson
