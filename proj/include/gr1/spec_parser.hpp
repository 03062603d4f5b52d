#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gr1/expr.hpp"

namespace gr1 {

/**
 * A parsed specification: variable declarations plus the formula lines of
 * each section. Lines in init/safety sections are conjoined when the game is
 * built; each liveness line is a separate goal.
 */
struct Specification {
    std::vector<VarDecl> vars; // env vars first, then sys vars
    size_t num_env_vars = 0;

    std::vector<Expr> env_init, sys_init;
    std::vector<Expr> env_safety, sys_safety;
    std::vector<Expr> env_liveness, sys_liveness;

    bool structurally_equal(const Specification& o) const;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int col, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                             ": " + msg),
          line(line), col(col) {}
    int line;
    int col;
};

/**
 * Line-oriented text format. Sections are headed by [INPUT], [OUTPUT],
 * [ENV_INIT], [SYS_INIT], [ENV_SAFETY], [SYS_SAFETY], [ENV_LIVENESS],
 * [SYS_LIVENESS]; # starts a comment. Declarations are `name : lo..hi` or
 * `name : bool`; a trailing apostrophe primes a variable reference.
 */
Specification parse_spec(const std::string& text);

// Canonical text form; parse_spec(print_spec(s)) is structurally equal to s.
std::string print_spec(const Specification& spec);

} // namespace gr1
