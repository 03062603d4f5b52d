#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gr1/expr.hpp"
#include "gr1/spec_parser.hpp"
#include "gr1/state_set.hpp"

namespace gr1 {

using InputIndex = uint32_t;
using OutputIndex = uint32_t;

class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

class ContractError : public std::logic_error {
public:
    explicit ContractError(const std::string& msg) : std::logic_error(msg) {}
};

struct BuildOptions {
    uint64_t state_cap = uint64_t{1} << 24;
};

/**
 * Explicit two-player game arena.
 *
 * A state is a full valuation of all variables, indexed in mixed radix with
 * the first declared variable most significant and env variables ahead of
 * sys variables, so  state = input * num_outputs + output.  A transition is
 * chosen in two halves: the environment picks a valid input x (an env-part
 * valuation with (s, x') |= rho_env), then the system picks a valid output y
 * ((s, x', y') |= rho_sys); the successor state is the valuation (x, y).
 *
 * Valid inputs and outputs are precomputed into CSR tables once per game;
 * the fixpoint engines only ever walk these tables. States with no valid
 * input are environment deadlocks (vacuously controllable); an input slot
 * with no valid output is a system deadlock for that input.
 */
struct GameStructure {
    std::vector<VarDecl> vars;
    size_t num_env_vars = 0;

    Expr theta_env, theta_sys; // folded conjunctions (may be trivial `true`)
    Expr rho_env, rho_sys;
    std::vector<Expr> env_liveness_exprs, sys_liveness_exprs; // may be empty for table-built games

    uint64_t num_states = 0;
    uint64_t num_inputs = 0;
    uint64_t num_outputs = 0;

    // CSR: per state, the range of input slots; per slot, the global input
    // index and the range of outgoing edges; per edge, output index and
    // successor state.
    std::vector<uint32_t> input_off; // size num_states + 1
    std::vector<uint32_t> input_x;   // size = total slots
    std::vector<uint32_t> out_off;   // size = total slots + 1
    std::vector<uint32_t> out_y;     // size = total edges
    std::vector<uint32_t> out_next;  // size = total edges

    // Reverse adjacency: for each state u, the (state, slot) pairs that have
    // an edge into u. Drives the counter-based fixpoint kernels.
    std::vector<uint32_t> rev_off;
    std::vector<uint64_t> rev_edge; // packed (state << 32 | slot)

    StateSet env_deadlocked;      // no valid input at all
    StateSet sys_deadlock_states; // some valid input has no valid output

    // [[psi]] for each liveness formula, precomputed.
    std::vector<StateSet> env_live_sets;
    std::vector<StateSet> sys_live_sets;

    StateSet initial_states; // [[theta_env & theta_sys]]

    size_t num_vars() const { return vars.size(); }
    size_t num_sys_vars() const { return vars.size() - num_env_vars; }

    InputIndex input_part(StateIndex s) const { return static_cast<InputIndex>(s / num_outputs); }
    OutputIndex output_part(StateIndex s) const { return static_cast<OutputIndex>(s % num_outputs); }
    StateIndex compose_state(InputIndex x, OutputIndex y) const {
        return static_cast<StateIndex>(static_cast<uint64_t>(x) * num_outputs + y);
    }

    // valuation <-> index conversions (values are actual domain values)
    void decode_state(StateIndex s, std::vector<int32_t>& values) const;
    StateIndex encode_state(const std::vector<int32_t>& values) const;
    InputIndex encode_input(const std::vector<int32_t>& env_values) const;
    void decode_input(InputIndex x, std::vector<int32_t>& env_values) const;

    uint32_t slots_begin(StateIndex s) const { return input_off[s]; }
    uint32_t slots_end(StateIndex s) const { return input_off[s + 1]; }
    uint32_t num_valid_inputs(StateIndex s) const { return input_off[s + 1] - input_off[s]; }

    // Slot for input x at state s, or UINT32_MAX when x is invalid there.
    uint32_t find_slot(StateIndex s, InputIndex x) const;

    std::string state_to_string(StateIndex s) const;
    std::string input_to_string(InputIndex x) const;
};

/** Builds the arena from a parsed specification. */
GameStructure build_game(const Specification& spec, const BuildOptions& opts = {});

/**
 * Builds the arena from explicit relations instead of formulas; the liveness
 * conditions are given directly as state sets. Used by random-game test
 * suites and available to any caller with a non-textual model.
 */
GameStructure build_game_from_relations(
    std::vector<VarDecl> vars, size_t num_env_vars,
    const std::function<bool(StateIndex, InputIndex)>& rho_env,
    const std::function<bool(StateIndex, InputIndex, OutputIndex)>& rho_sys,
    StateSet initial, std::vector<StateSet> env_live, std::vector<StateSet> sys_live,
    const BuildOptions& opts = {});

/** [[e]] — the states whose valuation satisfies the (unprimed) formula. */
StateSet states_satisfying(const GameStructure& g, const Expr& e);

/**
 * Controllable predecessor: states from which, for every valid input, some
 * valid output lands in `target`. Environment-deadlocked states qualify
 * vacuously.
 */
StateSet cpre(const GameStructure& g, const StateSet& target);

} // namespace gr1
