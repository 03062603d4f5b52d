#include "gr1/expr.hpp"

namespace gr1 {

Term Term::constant(int64_t v) {
    auto n = std::make_shared<Node>();
    n->kind = TermKind::Const;
    n->value = v;
    return Term{std::move(n)};
}

Term Term::var(uint32_t idx, bool primed) {
    auto n = std::make_shared<Node>();
    n->kind = TermKind::Var;
    n->var = idx;
    n->primed = primed;
    return Term{std::move(n)};
}

Term Term::add(Term a, Term b) {
    auto n = std::make_shared<Node>();
    n->kind = TermKind::Add;
    n->lhs = std::move(a.node);
    n->rhs = std::move(b.node);
    return Term{std::move(n)};
}

Term Term::sub(Term a, Term b) {
    auto n = std::make_shared<Node>();
    n->kind = TermKind::Sub;
    n->lhs = std::move(a.node);
    n->rhs = std::move(b.node);
    return Term{std::move(n)};
}

static bool term_eq(const Term::Node* a, const Term::Node* b) {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind) return false;
    switch (a->kind) {
        case TermKind::Const: return a->value == b->value;
        case TermKind::Var: return a->var == b->var && a->primed == b->primed;
        case TermKind::Add:
        case TermKind::Sub:
            return term_eq(a->lhs.get(), b->lhs.get()) && term_eq(a->rhs.get(), b->rhs.get());
    }
    return false;
}

bool Term::structurally_equal(const Term& o) const { return term_eq(node.get(), o.node.get()); }

Expr Expr::literal(bool v) {
    auto n = std::make_shared<Node>();
    n->kind = v ? ExprKind::True : ExprKind::False;
    return Expr{std::move(n)};
}

Expr Expr::cmp(CmpOp op, Term l, Term r) {
    auto n = std::make_shared<Node>();
    n->kind = ExprKind::Cmp;
    n->cmp = op;
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    return Expr{std::move(n)};
}

static Expr mk2(ExprKind k, Expr a, Expr b) {
    auto n = std::make_shared<Expr::Node>();
    n->kind = k;
    n->a = std::move(a.node);
    n->b = std::move(b.node);
    return Expr{std::move(n)};
}

Expr Expr::lnot(Expr e) {
    auto n = std::make_shared<Node>();
    n->kind = ExprKind::Not;
    n->a = std::move(e.node);
    return Expr{std::move(n)};
}

Expr Expr::land(Expr a, Expr b) { return mk2(ExprKind::And, std::move(a), std::move(b)); }
Expr Expr::lor(Expr a, Expr b) { return mk2(ExprKind::Or, std::move(a), std::move(b)); }
Expr Expr::implies(Expr a, Expr b) { return mk2(ExprKind::Implies, std::move(a), std::move(b)); }
Expr Expr::iff(Expr a, Expr b) { return mk2(ExprKind::Iff, std::move(a), std::move(b)); }

Expr Expr::conjunction(const std::vector<Expr>& es) {
    if (es.empty()) return literal(true);
    Expr r = es[0];
    for (size_t i = 1; i < es.size(); ++i) r = land(r, es[i]);
    return r;
}

Expr Expr::disjunction(const std::vector<Expr>& es) {
    if (es.empty()) return literal(false);
    Expr r = es[0];
    for (size_t i = 1; i < es.size(); ++i) r = lor(r, es[i]);
    return r;
}

Expr Expr::var_equals(uint32_t idx, bool primed, int64_t value) {
    return cmp(CmpOp::Eq, Term::var(idx, primed), Term::constant(value));
}

static bool expr_eq(const Expr::Node* a, const Expr::Node* b) {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind) return false;
    switch (a->kind) {
        case ExprKind::True:
        case ExprKind::False:
            return true;
        case ExprKind::Cmp:
            return a->cmp == b->cmp && a->lhs.structurally_equal(b->lhs) &&
                   a->rhs.structurally_equal(b->rhs);
        case ExprKind::Not:
            return expr_eq(a->a.get(), b->a.get());
        default:
            return expr_eq(a->a.get(), b->a.get()) && expr_eq(a->b.get(), b->b.get());
    }
}

bool Expr::structurally_equal(const Expr& o) const { return expr_eq(node.get(), o.node.get()); }

static bool term_has_primed(const Term::Node* t) {
    if (!t) return false;
    switch (t->kind) {
        case TermKind::Const: return false;
        case TermKind::Var: return t->primed;
        default: return term_has_primed(t->lhs.get()) || term_has_primed(t->rhs.get());
    }
}

static bool node_has_primed(const Expr::Node* n) {
    if (!n) return false;
    switch (n->kind) {
        case ExprKind::True:
        case ExprKind::False:
            return false;
        case ExprKind::Cmp:
            return term_has_primed(n->lhs.node.get()) || term_has_primed(n->rhs.node.get());
        case ExprKind::Not:
            return node_has_primed(n->a.get());
        default:
            return node_has_primed(n->a.get()) || node_has_primed(n->b.get());
    }
}

bool Expr::contains_primed() const { return node_has_primed(node.get()); }

static void term_vars(const Term::Node* t, std::vector<std::pair<uint32_t, bool>>& out) {
    if (!t) return;
    switch (t->kind) {
        case TermKind::Const: return;
        case TermKind::Var: out.emplace_back(t->var, t->primed); return;
        default:
            term_vars(t->lhs.get(), out);
            term_vars(t->rhs.get(), out);
    }
}

static void node_vars(const Expr::Node* n, std::vector<std::pair<uint32_t, bool>>& out) {
    if (!n) return;
    switch (n->kind) {
        case ExprKind::True:
        case ExprKind::False:
            return;
        case ExprKind::Cmp:
            term_vars(n->lhs.node.get(), out);
            term_vars(n->rhs.node.get(), out);
            return;
        case ExprKind::Not:
            node_vars(n->a.get(), out);
            return;
        default:
            node_vars(n->a.get(), out);
            node_vars(n->b.get(), out);
    }
}

void Expr::collect_vars(std::vector<std::pair<uint32_t, bool>>& out) const {
    node_vars(node.get(), out);
}

int64_t eval_term(const Term& t, const EvalContext& ctx) {
    const Term::Node* n = t.node.get();
    switch (n->kind) {
        case TermKind::Const:
            return n->value;
        case TermKind::Var:
            if (n->primed) {
                if (!ctx.next_values || n->var >= ctx.next_count)
                    throw EvalError("primed reference without a next-step value for variable index " +
                                    std::to_string(n->var));
                return ctx.next_values[n->var];
            }
            if (n->var >= ctx.count) throw EvalError("variable index out of range");
            return ctx.values[n->var];
        case TermKind::Add:
            return eval_term(Term{n->lhs}, ctx) + eval_term(Term{n->rhs}, ctx);
        case TermKind::Sub:
            return eval_term(Term{n->lhs}, ctx) - eval_term(Term{n->rhs}, ctx);
    }
    throw EvalError("corrupt term");
}

bool eval(const Expr& e, const EvalContext& ctx) {
    const Expr::Node* n = e.node.get();
    switch (n->kind) {
        case ExprKind::True: return true;
        case ExprKind::False: return false;
        case ExprKind::Cmp: {
            int64_t l = eval_term(n->lhs, ctx);
            int64_t r = eval_term(n->rhs, ctx);
            switch (n->cmp) {
                case CmpOp::Eq: return l == r;
                case CmpOp::Ne: return l != r;
                case CmpOp::Lt: return l < r;
                case CmpOp::Le: return l <= r;
                case CmpOp::Gt: return l > r;
                case CmpOp::Ge: return l >= r;
            }
            throw EvalError("corrupt comparison");
        }
        case ExprKind::Not: return !eval(Expr{n->a}, ctx);
        case ExprKind::And: return eval(Expr{n->a}, ctx) && eval(Expr{n->b}, ctx);
        case ExprKind::Or: return eval(Expr{n->a}, ctx) || eval(Expr{n->b}, ctx);
        case ExprKind::Implies: return !eval(Expr{n->a}, ctx) || eval(Expr{n->b}, ctx);
        case ExprKind::Iff: return eval(Expr{n->a}, ctx) == eval(Expr{n->b}, ctx);
    }
    throw EvalError("corrupt expression");
}

std::string to_string(const Term& t, const std::vector<VarDecl>& vars) {
    const Term::Node* n = t.node.get();
    switch (n->kind) {
        case TermKind::Const: return std::to_string(n->value);
        case TermKind::Var: {
            std::string s = n->var < vars.size() ? vars[n->var].name : "?v" + std::to_string(n->var);
            if (n->primed) s += "'";
            return s;
        }
        case TermKind::Add:
            return to_string(Term{n->lhs}, vars) + " + " + to_string(Term{n->rhs}, vars);
        case TermKind::Sub:
            return to_string(Term{n->lhs}, vars) + " - " + to_string(Term{n->rhs}, vars);
    }
    return "?";
}

static const char* cmp_str(CmpOp op) {
    switch (op) {
        case CmpOp::Eq: return "=";
        case CmpOp::Ne: return "!=";
        case CmpOp::Lt: return "<";
        case CmpOp::Le: return "<=";
        case CmpOp::Gt: return ">";
        case CmpOp::Ge: return ">=";
    }
    return "?";
}

// Fully parenthesized except for atoms; the parser accepts this form back.
std::string to_string(const Expr& e, const std::vector<VarDecl>& vars) {
    const Expr::Node* n = e.node.get();
    switch (n->kind) {
        case ExprKind::True: return "true";
        case ExprKind::False: return "false";
        case ExprKind::Cmp:
            return to_string(n->lhs, vars) + " " + cmp_str(n->cmp) + " " + to_string(n->rhs, vars);
        case ExprKind::Not:
            return "!(" + to_string(Expr{n->a}, vars) + ")";
        case ExprKind::And:
            return "(" + to_string(Expr{n->a}, vars) + " & " + to_string(Expr{n->b}, vars) + ")";
        case ExprKind::Or:
            return "(" + to_string(Expr{n->a}, vars) + " | " + to_string(Expr{n->b}, vars) + ")";
        case ExprKind::Implies:
            return "(" + to_string(Expr{n->a}, vars) + " -> " + to_string(Expr{n->b}, vars) + ")";
        case ExprKind::Iff:
            return "(" + to_string(Expr{n->a}, vars) + " <-> " + to_string(Expr{n->b}, vars) + ")";
    }
    return "?";
}

} // namespace gr1
