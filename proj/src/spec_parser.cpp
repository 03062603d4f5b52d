#include "gr1/spec_parser.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>

namespace gr1 {

namespace {

enum class Section {
    None,
    Input,
    Output,
    EnvInit,
    SysInit,
    EnvSafety,
    SysSafety,
    EnvLiveness,
    SysLiveness,
};

std::optional<Section> section_for(const std::string& name) {
    static const std::map<std::string, Section> table = {
        {"INPUT", Section::Input},
        {"OUTPUT", Section::Output},
        {"ENV_INIT", Section::EnvInit},
        {"SYS_INIT", Section::SysInit},
        {"ENV_SAFETY", Section::EnvSafety},
        {"SYS_SAFETY", Section::SysSafety},
        {"ENV_LIVENESS", Section::EnvLiveness},
        {"SYS_LIVENESS", Section::SysLiveness},
    };
    auto it = table.find(name);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

struct Token {
    enum Kind {
        Ident, Int, True, False,
        Not, And, Or, Implies, Iff,
        Eq, Ne, Lt, Le, Gt, Ge,
        Plus, Minus, LParen, RParen, Prime,
        End,
    } kind;
    std::string text;
    int64_t value = 0;
    int col = 0;
};

class Lexer {
public:
    Lexer(const std::string& s, int line) : s_(s), line_(line) {}

    Token next() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
        int col = static_cast<int>(pos_) + 1;
        if (pos_ >= s_.size()) return {Token::End, "", 0, col};
        char c = s_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string word = s_.substr(start, pos_ - start);
            if (word == "true") return {Token::True, word, 0, col};
            if (word == "false") return {Token::False, word, 0, col};
            return {Token::Ident, word, 0, col};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return {Token::Int, s_.substr(start, pos_ - start),
                    std::stoll(s_.substr(start, pos_ - start)), col};
        }
        ++pos_;
        switch (c) {
            case '!':
                if (pos_ < s_.size() && s_[pos_] == '=') { ++pos_; return {Token::Ne, "!=", 0, col}; }
                return {Token::Not, "!", 0, col};
            case '&': return {Token::And, "&", 0, col};
            case '|': return {Token::Or, "|", 0, col};
            case '=': return {Token::Eq, "=", 0, col};
            case '<':
                if (pos_ < s_.size() && s_[pos_] == '=') { ++pos_; return {Token::Le, "<=", 0, col}; }
                if (pos_ + 1 < s_.size() && s_[pos_] == '-' && s_[pos_ + 1] == '>') {
                    pos_ += 2;
                    return {Token::Iff, "<->", 0, col};
                }
                return {Token::Lt, "<", 0, col};
            case '>':
                if (pos_ < s_.size() && s_[pos_] == '=') { ++pos_; return {Token::Ge, ">=", 0, col}; }
                return {Token::Gt, ">", 0, col};
            case '-':
                if (pos_ < s_.size() && s_[pos_] == '>') { ++pos_; return {Token::Implies, "->", 0, col}; }
                return {Token::Minus, "-", 0, col};
            case '+': return {Token::Plus, "+", 0, col};
            case '(': return {Token::LParen, "(", 0, col};
            case ')': return {Token::RParen, ")", 0, col};
            case '\'': return {Token::Prime, "'", 0, col};
        }
        throw ParseError(line_, col, std::string("unexpected character '") + c + "'");
    }

private:
    const std::string& s_;
    int line_;
    size_t pos_ = 0;
};

/**
 * Recursive-descent formula parser. Precedence, loosest first:
 *   <->  ->  |  &  !  atom
 * -> is right-associative, & and | left-associative. Atoms are comparisons
 * between +/- terms, true/false, or parenthesized formulas.
 */
class FormulaParser {
public:
    FormulaParser(const std::string& line, int lineno,
                  const std::map<std::string, uint32_t>& var_index)
        : lex_(line, lineno), lineno_(lineno), var_index_(var_index) {
        advance();
    }

    Expr parse() {
        Expr e = parse_iff();
        expect(Token::End, "end of line");
        return e;
    }

private:
    void advance() { tok_ = lex_.next(); }

    void expect(Token::Kind k, const char* what) {
        if (tok_.kind != k)
            throw ParseError(lineno_, tok_.col, std::string("expected ") + what);
    }

    Expr parse_iff() {
        Expr e = parse_implies();
        while (tok_.kind == Token::Iff) {
            advance();
            e = Expr::iff(e, parse_implies());
        }
        return e;
    }

    Expr parse_implies() {
        Expr e = parse_or();
        if (tok_.kind == Token::Implies) {
            advance();
            return Expr::implies(e, parse_implies());
        }
        return e;
    }

    Expr parse_or() {
        Expr e = parse_and();
        while (tok_.kind == Token::Or) {
            advance();
            e = Expr::lor(e, parse_and());
        }
        return e;
    }

    Expr parse_and() {
        Expr e = parse_unary();
        while (tok_.kind == Token::And) {
            advance();
            e = Expr::land(e, parse_unary());
        }
        return e;
    }

    Expr parse_unary() {
        if (tok_.kind == Token::Not) {
            advance();
            return Expr::lnot(parse_unary());
        }
        return parse_atom();
    }

    Expr parse_atom() {
        if (tok_.kind == Token::True) { advance(); return Expr::literal(true); }
        if (tok_.kind == Token::False) { advance(); return Expr::literal(false); }
        if (tok_.kind == Token::LParen) {
            advance();
            Expr e = parse_iff();
            expect(Token::RParen, "')'");
            advance();
            return e;
        }
        // comparison between two terms
        Term l = parse_term();
        CmpOp op;
        switch (tok_.kind) {
            case Token::Eq: op = CmpOp::Eq; break;
            case Token::Ne: op = CmpOp::Ne; break;
            case Token::Lt: op = CmpOp::Lt; break;
            case Token::Le: op = CmpOp::Le; break;
            case Token::Gt: op = CmpOp::Gt; break;
            case Token::Ge: op = CmpOp::Ge; break;
            default:
                throw ParseError(lineno_, tok_.col, "expected a comparison operator");
        }
        advance();
        Term r = parse_term();
        return Expr::cmp(op, l, r);
    }

    Term parse_term() {
        Term t = parse_primary();
        while (tok_.kind == Token::Plus || tok_.kind == Token::Minus) {
            bool plus = tok_.kind == Token::Plus;
            advance();
            Term r = parse_primary();
            t = plus ? Term::add(t, r) : Term::sub(t, r);
        }
        return t;
    }

    Term parse_primary() {
        if (tok_.kind == Token::Int) {
            int64_t v = tok_.value;
            advance();
            return Term::constant(v);
        }
        if (tok_.kind == Token::Minus) { // negative literal
            advance();
            expect(Token::Int, "an integer");
            int64_t v = -tok_.value;
            advance();
            return Term::constant(v);
        }
        if (tok_.kind == Token::Ident) {
            auto it = var_index_.find(tok_.text);
            if (it == var_index_.end())
                throw ParseError(lineno_, tok_.col, "undeclared variable '" + tok_.text + "'");
            advance();
            bool primed = false;
            if (tok_.kind == Token::Prime) {
                primed = true;
                advance();
            }
            return Term::var(it->second, primed);
        }
        throw ParseError(lineno_, tok_.col, "expected a term");
    }

    Lexer lex_;
    int lineno_;
    const std::map<std::string, uint32_t>& var_index_;
    Token tok_;
};

VarDecl parse_decl(const std::string& line, int lineno, VarOwner owner) {
    auto colon = line.find(':');
    if (colon == std::string::npos)
        throw ParseError(lineno, 1, "expected `name : domain` declaration");
    auto trim = [](std::string s) {
        size_t b = s.find_first_not_of(" \t");
        size_t e = s.find_last_not_of(" \t");
        if (b == std::string::npos) return std::string();
        return s.substr(b, e - b + 1);
    };
    VarDecl d;
    d.name = trim(line.substr(0, colon));
    d.owner = owner;
    if (d.name.empty())
        throw ParseError(lineno, 1, "empty variable name");
    for (char c : d.name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            throw ParseError(lineno, 1, "bad variable name '" + d.name + "'");

    std::string dom = trim(line.substr(colon + 1));
    if (dom == "bool") {
        d.lo = 0;
        d.hi = 1;
        d.is_bool = true;
        return d;
    }
    auto dots = dom.find("..");
    if (dots == std::string::npos)
        throw ParseError(lineno, static_cast<int>(colon) + 2, "expected `bool` or `lo..hi`");
    try {
        d.lo = std::stoi(trim(dom.substr(0, dots)));
        d.hi = std::stoi(trim(dom.substr(dots + 2)));
    } catch (const std::exception&) {
        throw ParseError(lineno, static_cast<int>(colon) + 2, "bad domain bounds");
    }
    if (d.lo > d.hi)
        throw ParseError(lineno, static_cast<int>(colon) + 2, "domain lower bound exceeds upper bound");
    return d;
}

// Primed-occurrence rules per section; `primed_env_ok`/`primed_sys_ok` say
// which owners may appear primed, `owner_only` restricts unprimed references.
void check_positions(const Expr& e, const std::vector<VarDecl>& vars, int lineno,
                     bool primed_env_ok, bool primed_sys_ok,
                     std::optional<VarOwner> owner_only, const char* section) {
    std::vector<std::pair<uint32_t, bool>> refs;
    e.collect_vars(refs);
    for (auto [idx, primed] : refs) {
        const VarDecl& d = vars[idx];
        if (primed) {
            bool ok = d.owner == VarOwner::Env ? primed_env_ok : primed_sys_ok;
            if (!ok)
                throw ParseError(lineno, 1, "primed reference to '" + d.name + "' is not allowed in " +
                                                section);
        } else if (owner_only && d.owner != *owner_only) {
            throw ParseError(lineno, 1, "variable '" + d.name + "' is not allowed in " + section);
        }
    }
}

} // namespace

Specification parse_spec(const std::string& text) {
    Specification spec;
    std::vector<VarDecl> env_vars, sys_vars;

    // First pass: declarations (section order in the file is irrelevant).
    struct FormulaLine {
        Section section;
        std::string text;
        int lineno;
    };
    std::vector<FormulaLine> formulas;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    Section current = Section::None;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        size_t b = raw.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        size_t e = raw.find_last_not_of(" \t\r");
        std::string line = raw.substr(b, e - b + 1);

        if (line.front() == '[') {
            auto close = line.find(']');
            if (close == std::string::npos)
                throw ParseError(lineno, 1, "unterminated section header");
            std::string name = line.substr(1, close - 1);
            auto sec = section_for(name);
            if (!sec)
                throw ParseError(lineno, 1, "unknown section [" + name + "]");
            current = *sec;
            std::string rest = line.substr(close + 1);
            size_t rb = rest.find_first_not_of(" \t");
            if (rb == std::string::npos) continue;
            line = rest.substr(rb);
            // fall through: content on the same line as the header
        }

        switch (current) {
            case Section::None:
                throw ParseError(lineno, 1, "content before any section header");
            case Section::Input:
                env_vars.push_back(parse_decl(line, lineno, VarOwner::Env));
                break;
            case Section::Output:
                sys_vars.push_back(parse_decl(line, lineno, VarOwner::Sys));
                break;
            default:
                formulas.push_back({current, line, lineno});
        }
    }

    spec.vars = env_vars;
    spec.vars.insert(spec.vars.end(), sys_vars.begin(), sys_vars.end());
    spec.num_env_vars = env_vars.size();

    std::map<std::string, uint32_t> var_index;
    for (uint32_t i = 0; i < spec.vars.size(); ++i) {
        if (!var_index.emplace(spec.vars[i].name, i).second)
            throw ParseError(0, 0, "duplicate variable name '" + spec.vars[i].name + "'");
    }

    for (const auto& f : formulas) {
        FormulaParser p(f.text, f.lineno, var_index);
        Expr e = p.parse();
        switch (f.section) {
            case Section::EnvInit:
                check_positions(e, spec.vars, f.lineno, false, false, VarOwner::Env, "[ENV_INIT]");
                spec.env_init.push_back(e);
                break;
            case Section::SysInit:
                check_positions(e, spec.vars, f.lineno, false, false, VarOwner::Sys, "[SYS_INIT]");
                spec.sys_init.push_back(e);
                break;
            case Section::EnvSafety:
                // current-state vars of both owners, primed env vars only
                check_positions(e, spec.vars, f.lineno, true, false, std::nullopt, "[ENV_SAFETY]");
                spec.env_safety.push_back(e);
                break;
            case Section::SysSafety:
                check_positions(e, spec.vars, f.lineno, true, true, std::nullopt, "[SYS_SAFETY]");
                spec.sys_safety.push_back(e);
                break;
            case Section::EnvLiveness:
                check_positions(e, spec.vars, f.lineno, false, false, std::nullopt, "[ENV_LIVENESS]");
                spec.env_liveness.push_back(e);
                break;
            case Section::SysLiveness:
                check_positions(e, spec.vars, f.lineno, false, false, std::nullopt, "[SYS_LIVENESS]");
                spec.sys_liveness.push_back(e);
                break;
            default:
                break;
        }
    }
    return spec;
}

std::string print_spec(const Specification& spec) {
    std::ostringstream out;
    auto decl = [&](const VarDecl& d) {
        out << d.name << " : ";
        if (d.is_bool)
            out << "bool";
        else
            out << d.lo << ".." << d.hi;
        out << "\n";
    };
    out << "[INPUT]\n";
    for (size_t i = 0; i < spec.num_env_vars; ++i) decl(spec.vars[i]);
    out << "[OUTPUT]\n";
    for (size_t i = spec.num_env_vars; i < spec.vars.size(); ++i) decl(spec.vars[i]);

    auto section = [&](const char* name, const std::vector<Expr>& lines) {
        if (lines.empty()) return;
        out << "[" << name << "]\n";
        for (const auto& e : lines) out << to_string(e, spec.vars) << "\n";
    };
    section("ENV_INIT", spec.env_init);
    section("SYS_INIT", spec.sys_init);
    section("ENV_SAFETY", spec.env_safety);
    section("SYS_SAFETY", spec.sys_safety);
    section("ENV_LIVENESS", spec.env_liveness);
    section("SYS_LIVENESS", spec.sys_liveness);
    return out.str();
}

bool Specification::structurally_equal(const Specification& o) const {
    if (vars.size() != o.vars.size() || num_env_vars != o.num_env_vars) return false;
    for (size_t i = 0; i < vars.size(); ++i) {
        if (vars[i].name != o.vars[i].name || vars[i].lo != o.vars[i].lo ||
            vars[i].hi != o.vars[i].hi || vars[i].owner != o.vars[i].owner)
            return false;
    }
    auto eq_list = [](const std::vector<Expr>& a, const std::vector<Expr>& b) {
        if (a.size() != b.size()) return false;
        for (size_t i = 0; i < a.size(); ++i)
            if (!a[i].structurally_equal(b[i])) return false;
        return true;
    };
    return eq_list(env_init, o.env_init) && eq_list(sys_init, o.sys_init) &&
           eq_list(env_safety, o.env_safety) && eq_list(sys_safety, o.sys_safety) &&
           eq_list(env_liveness, o.env_liveness) && eq_list(sys_liveness, o.sys_liveness);
}

} // namespace gr1
