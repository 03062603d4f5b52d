#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace gr1 {

enum class VarOwner { Env, Sys };

struct VarDecl {
    std::string name;
    int32_t lo = 0;
    int32_t hi = 0; // inclusive; booleans are stored as [0,1]
    VarOwner owner = VarOwner::Env;
    bool is_bool = false;

    int32_t domain_size() const { return hi - lo + 1; }
};

enum class CmpOp { Eq, Ne, Lt, Le, Gt, Ge };

enum class ExprKind {
    True,
    False,
    Cmp,
    Not,
    And,
    Or,
    Implies,
    Iff,
};

enum class TermKind { Const, Var, Add, Sub };

/**
 * Integer-valued term: constants, (possibly primed) variable references and
 * +/- arithmetic, e.g. the y + 1 in  y' = y + 1.
 */
struct Term {
    struct Node {
        TermKind kind;
        int64_t value = 0;   // Const
        uint32_t var = 0;    // Var: index into the declaration list
        bool primed = false; // Var
        std::shared_ptr<const Node> lhs, rhs; // Add/Sub
    };

    std::shared_ptr<const Node> node;

    static Term constant(int64_t v);
    static Term var(uint32_t idx, bool primed);
    static Term add(Term a, Term b);
    static Term sub(Term a, Term b);

    bool structurally_equal(const Term& o) const;
};

/**
 * Propositional formula over current and primed variables. Immutable after
 * construction; shared_ptr nodes make copies cheap and thread-safe to read.
 */
struct Expr {
    struct Node {
        ExprKind kind;
        CmpOp cmp = CmpOp::Eq;
        Term lhs, rhs;                        // Cmp
        std::shared_ptr<const Node> a, b;     // unary/binary connectives
    };

    std::shared_ptr<const Node> node;

    bool valid() const { return node != nullptr; }

    static Expr literal(bool v);
    static Expr cmp(CmpOp op, Term l, Term r);
    static Expr lnot(Expr e);
    static Expr land(Expr a, Expr b);
    static Expr lor(Expr a, Expr b);
    static Expr implies(Expr a, Expr b);
    static Expr iff(Expr a, Expr b);

    // n-ary folds; empty input yields the neutral element (true resp. false)
    static Expr conjunction(const std::vector<Expr>& es);
    static Expr disjunction(const std::vector<Expr>& es);

    // var = value as an Expr, the workhorse of programmatic encodings
    static Expr var_equals(uint32_t idx, bool primed, int64_t value);

    bool structurally_equal(const Expr& o) const;

    bool contains_primed() const;
    // Collects referenced variable indices into out (deduplicated by caller).
    void collect_vars(std::vector<std::pair<uint32_t, bool>>& out) const;
};

class EvalError : public std::runtime_error {
public:
    explicit EvalError(const std::string& msg) : std::runtime_error(msg) {}
};

/**
 * Valuation context for eval. Values are indexed by declaration order.
 * next_values may be null (formula must be unprimed) or cover only a prefix
 * of the variables (next_count), which permits evaluating an environment
 * transition rule with just the primed input part.
 */
struct EvalContext {
    const int32_t* values = nullptr;
    size_t count = 0;
    const int32_t* next_values = nullptr;
    size_t next_count = 0;
};

bool eval(const Expr& e, const EvalContext& ctx);
int64_t eval_term(const Term& t, const EvalContext& ctx);

std::string to_string(const Expr& e, const std::vector<VarDecl>& vars);
std::string to_string(const Term& t, const std::vector<VarDecl>& vars);

} // namespace gr1
