#include "gr1/game.hpp"

#include <algorithm>
#include <sstream>

namespace gr1 {

namespace {

// Shared table construction once the validity predicates are fixed.
void build_tables(GameStructure& g,
                  const std::function<bool(StateIndex, InputIndex)>& env_valid,
                  const std::function<bool(StateIndex, InputIndex, OutputIndex)>& sys_valid) {
    const uint64_t S = g.num_states, X = g.num_inputs, Y = g.num_outputs;

    g.input_off.assign(S + 1, 0);
    g.input_x.clear();
    g.out_off.clear();
    g.out_off.push_back(0);
    g.out_y.clear();
    g.out_next.clear();
    g.env_deadlocked = StateSet(S);
    g.sys_deadlock_states = StateSet(S);

    for (StateIndex s = 0; s < S; ++s) {
        uint32_t inputs_here = 0;
        for (InputIndex x = 0; x < X; ++x) {
            if (!env_valid(s, x)) continue;
            ++inputs_here;
            g.input_x.push_back(x);
            uint32_t edges = 0;
            for (OutputIndex y = 0; y < Y; ++y) {
                if (!sys_valid(s, x, y)) continue;
                ++edges;
                g.out_y.push_back(y);
                g.out_next.push_back(g.compose_state(x, y));
            }
            g.out_off.push_back(static_cast<uint32_t>(g.out_y.size()));
            if (edges == 0) g.sys_deadlock_states.set(s);
        }
        g.input_off[s + 1] = static_cast<uint32_t>(g.input_x.size());
        if (inputs_here == 0) g.env_deadlocked.set(s);
    }

    // reverse adjacency, counting-sort by successor
    const size_t E = g.out_next.size();
    g.rev_off.assign(S + 1, 0);
    for (size_t e = 0; e < E; ++e) g.rev_off[g.out_next[e] + 1]++;
    for (StateIndex s = 0; s < S; ++s) g.rev_off[s + 1] += g.rev_off[s];
    g.rev_edge.assign(E, 0);
    std::vector<uint32_t> cursor(g.rev_off.begin(), g.rev_off.end() - 1);
    for (StateIndex s = 0; s < S; ++s) {
        for (uint32_t slot = g.input_off[s]; slot < g.input_off[s + 1]; ++slot) {
            for (uint32_t e = g.out_off[slot]; e < g.out_off[slot + 1]; ++e) {
                uint32_t u = g.out_next[e];
                g.rev_edge[cursor[u]++] = (static_cast<uint64_t>(s) << 32) | slot;
            }
        }
    }
}

uint64_t domain_product(const std::vector<VarDecl>& vars, size_t from, size_t to) {
    uint64_t p = 1;
    for (size_t i = from; i < to; ++i) {
        p *= static_cast<uint64_t>(vars[i].domain_size());
    }
    return p;
}

} // namespace

void GameStructure::decode_state(StateIndex s, std::vector<int32_t>& values) const {
    values.resize(vars.size());
    uint64_t rem = s;
    for (size_t i = vars.size(); i-- > 0;) {
        uint64_t d = static_cast<uint64_t>(vars[i].domain_size());
        values[i] = vars[i].lo + static_cast<int32_t>(rem % d);
        rem /= d;
    }
}

StateIndex GameStructure::encode_state(const std::vector<int32_t>& values) const {
    uint64_t idx = 0;
    for (size_t i = 0; i < vars.size(); ++i) {
        idx = idx * static_cast<uint64_t>(vars[i].domain_size()) +
              static_cast<uint64_t>(values[i] - vars[i].lo);
    }
    return static_cast<StateIndex>(idx);
}

InputIndex GameStructure::encode_input(const std::vector<int32_t>& env_values) const {
    uint64_t idx = 0;
    for (size_t i = 0; i < num_env_vars; ++i) {
        idx = idx * static_cast<uint64_t>(vars[i].domain_size()) +
              static_cast<uint64_t>(env_values[i] - vars[i].lo);
    }
    return static_cast<InputIndex>(idx);
}

void GameStructure::decode_input(InputIndex x, std::vector<int32_t>& env_values) const {
    env_values.resize(num_env_vars);
    uint64_t rem = x;
    for (size_t i = num_env_vars; i-- > 0;) {
        uint64_t d = static_cast<uint64_t>(vars[i].domain_size());
        env_values[i] = vars[i].lo + static_cast<int32_t>(rem % d);
        rem /= d;
    }
}

uint32_t GameStructure::find_slot(StateIndex s, InputIndex x) const {
    for (uint32_t slot = input_off[s]; slot < input_off[s + 1]; ++slot)
        if (input_x[slot] == x) return slot;
    return UINT32_MAX;
}

std::string GameStructure::state_to_string(StateIndex s) const {
    std::vector<int32_t> v;
    decode_state(s, v);
    std::ostringstream out;
    out << "{";
    for (size_t i = 0; i < vars.size(); ++i) {
        if (i) out << ", ";
        out << vars[i].name << "=" << v[i];
    }
    out << "}";
    return out.str();
}

std::string GameStructure::input_to_string(InputIndex x) const {
    std::vector<int32_t> v;
    decode_input(x, v);
    std::ostringstream out;
    out << "{";
    for (size_t i = 0; i < num_env_vars; ++i) {
        if (i) out << ", ";
        out << vars[i].name << "'=" << v[i];
    }
    out << "}";
    return out.str();
}

GameStructure build_game(const Specification& spec, const BuildOptions& opts) {
    GameStructure g;
    g.vars = spec.vars;
    g.num_env_vars = spec.num_env_vars;

    g.num_inputs = domain_product(g.vars, 0, g.num_env_vars);
    g.num_outputs = domain_product(g.vars, g.num_env_vars, g.vars.size());
    g.num_states = g.num_inputs * g.num_outputs;
    if (g.num_states > opts.state_cap)
        throw CapacityError("state space of " + std::to_string(g.num_states) +
                            " exceeds the cap of " + std::to_string(opts.state_cap));

    g.theta_env = Expr::conjunction(spec.env_init);
    g.theta_sys = Expr::conjunction(spec.sys_init);
    g.rho_env = Expr::conjunction(spec.env_safety);
    g.rho_sys = Expr::conjunction(spec.sys_safety);
    g.env_liveness_exprs = spec.env_liveness;
    g.sys_liveness_exprs = spec.sys_liveness;

    const size_t nv = g.vars.size();
    const size_t ne = g.num_env_vars;

    // Scratch valuations reused across the enumeration. The primed env part
    // is decoded once per input; the primed sys part once per output.
    std::vector<int32_t> cur(nv), next(nv);
    std::vector<std::vector<int32_t>> input_vals(g.num_inputs);
    for (InputIndex x = 0; x < g.num_inputs; ++x) g.decode_input(x, input_vals[x]);
    std::vector<std::vector<int32_t>> output_vals(g.num_outputs, std::vector<int32_t>(nv - ne));
    for (OutputIndex y = 0; y < g.num_outputs; ++y) {
        uint64_t rem = y;
        for (size_t i = nv; i-- > ne;) {
            uint64_t d = static_cast<uint64_t>(g.vars[i].domain_size());
            output_vals[y][i - ne] = g.vars[i].lo + static_cast<int32_t>(rem % d);
            rem /= d;
        }
    }

    StateIndex cached_state = UINT32_MAX;
    auto load_state = [&](StateIndex s) {
        if (s != cached_state) {
            g.decode_state(s, cur);
            cached_state = s;
        }
    };

    auto env_valid = [&](StateIndex s, InputIndex x) {
        load_state(s);
        EvalContext ctx{cur.data(), nv, input_vals[x].data(), ne};
        return eval(g.rho_env, ctx);
    };
    auto sys_valid = [&](StateIndex s, InputIndex x, OutputIndex y) {
        load_state(s);
        for (size_t i = 0; i < ne; ++i) next[i] = input_vals[x][i];
        for (size_t i = ne; i < nv; ++i) next[i] = output_vals[y][i - ne];
        EvalContext ctx{cur.data(), nv, next.data(), nv};
        return eval(g.rho_sys, ctx);
    };
    build_tables(g, env_valid, sys_valid);

    for (const Expr& e : spec.env_liveness) g.env_live_sets.push_back(states_satisfying(g, e));
    for (const Expr& e : spec.sys_liveness) g.sys_live_sets.push_back(states_satisfying(g, e));
    g.initial_states = states_satisfying(g, Expr::land(g.theta_env, g.theta_sys));
    return g;
}

GameStructure build_game_from_relations(
    std::vector<VarDecl> vars, size_t num_env_vars,
    const std::function<bool(StateIndex, InputIndex)>& rho_env,
    const std::function<bool(StateIndex, InputIndex, OutputIndex)>& rho_sys,
    StateSet initial, std::vector<StateSet> env_live, std::vector<StateSet> sys_live,
    const BuildOptions& opts) {
    GameStructure g;
    g.vars = std::move(vars);
    g.num_env_vars = num_env_vars;
    g.num_inputs = domain_product(g.vars, 0, num_env_vars);
    g.num_outputs = domain_product(g.vars, num_env_vars, g.vars.size());
    g.num_states = g.num_inputs * g.num_outputs;
    if (g.num_states > opts.state_cap)
        throw CapacityError("state space exceeds cap");
    g.theta_env = Expr::literal(true);
    g.theta_sys = Expr::literal(true);
    g.rho_env = Expr::literal(true);
    g.rho_sys = Expr::literal(true);
    build_tables(g, rho_env, rho_sys);
    g.initial_states = std::move(initial);
    g.env_live_sets = std::move(env_live);
    g.sys_live_sets = std::move(sys_live);
    return g;
}

StateSet states_satisfying(const GameStructure& g, const Expr& e) {
    if (e.contains_primed())
        throw ContractError("states_satisfying requires an unprimed formula");
    StateSet r(g.num_states);
    std::vector<int32_t> v(g.vars.size());
    for (StateIndex s = 0; s < g.num_states; ++s) {
        g.decode_state(s, v);
        EvalContext ctx{v.data(), v.size(), nullptr, 0};
        if (eval(e, ctx)) r.set(s);
    }
    return r;
}

StateSet cpre(const GameStructure& g, const StateSet& target) {
    StateSet r(g.num_states);
    for (StateIndex s = 0; s < g.num_states; ++s) {
        bool all_inputs_ok = true;
        for (uint32_t slot = g.input_off[s]; slot < g.input_off[s + 1]; ++slot) {
            bool found = false;
            for (uint32_t e = g.out_off[slot]; e < g.out_off[slot + 1]; ++e) {
                if (target.test(g.out_next[e])) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                all_inputs_ok = false;
                break;
            }
        }
        if (all_inputs_ok) r.set(s); // vacuous when there are no valid inputs
    }
    return r;
}

} // namespace gr1
