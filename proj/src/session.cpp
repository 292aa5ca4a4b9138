#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "germcalc/cli.hpp"

namespace germcalc {

namespace {

// ---------------------------------------------------------------------------
// Lexing. Statements are newline-separated at bracket depth 0; '#' comments
// run to end of line. Every character keeps its original position so that
// diagnostics can point at the source.

struct PosChar {
    char c;
    size_t line, col;
};

[[noreturn]] void fail(size_t line, size_t col, const std::string& msg) {
    std::ostringstream os;
    os << "parse error at line " << line << ", column " << col << ": " << msg;
    throw error(os.str());
}

std::vector<std::vector<PosChar>> logical_lines(const std::string& text) {
    std::vector<std::vector<PosChar>> out;
    std::vector<PosChar> cur;
    size_t line = 1, col = 1;
    int depth = 0;
    bool comment = false;
    for (char c : text) {
        if (c == '\n') {
            if (depth == 0) {
                if (!cur.empty()) out.push_back(std::move(cur));
                cur.clear();
            } else {
                cur.push_back({' ', line, col});
            }
            ++line;
            col = 1;
            comment = false;
            continue;
        }
        if (!comment) {
            if (c == '#') {
                comment = true;
            } else {
                if (c == '(' || c == '[' || c == '{') ++depth;
                if (c == ')' || c == ']' || c == '}') --depth;
                cur.push_back({c, line, col});
            }
        }
        ++col;
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

struct Token {
    enum Kind { Ident, Num, Sym, End } kind;
    std::string text;
    size_t line, col;
};

std::vector<Token> tokenize(const std::vector<PosChar>& lc) {
    std::vector<Token> out;
    size_t i = 0;
    auto isid0 = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
    auto isid = [&](char c) { return isid0(c) || std::isdigit(static_cast<unsigned char>(c)); };
    while (i < lc.size()) {
        char c = lc[i].c;
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        size_t line = lc[i].line, col = lc[i].col;
        if (isid0(c)) {
            std::string s;
            while (i < lc.size() && isid(lc[i].c)) s.push_back(lc[i++].c);
            out.push_back({Token::Ident, s, line, col});
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string s;
            while (i < lc.size() && std::isdigit(static_cast<unsigned char>(lc[i].c)))
                s.push_back(lc[i++].c);
            out.push_back({Token::Num, s, line, col});
        } else if (std::string("+-*/^()[]{}=,").find(c) != std::string::npos) {
            out.push_back({Token::Sym, std::string(1, c), line, col});
            ++i;
        } else {
            fail(line, col, std::string("unexpected character '") + c + "'");
        }
    }
    size_t el = lc.empty() ? 1 : lc.back().line;
    size_t ec = lc.empty() ? 1 : lc.back().col + 1;
    out.push_back({Token::End, "", el, ec});
    return out;
}

class Cursor {
public:
    explicit Cursor(std::vector<Token> t) : toks_(std::move(t)) {}
    const Token& peek() const { return toks_[at_]; }
    const Token& get() { return toks_[std::min(at_++, toks_.size() - 1)]; }
    bool accept_sym(const std::string& s) {
        if (peek().kind == Token::Sym && peek().text == s) {
            ++at_;
            return true;
        }
        return false;
    }
    void expect_sym(const std::string& s, const std::string& what) {
        if (!accept_sym(s))
            fail(peek().line, peek().col,
                 "expected '" + s + "' " + what + ", found '" + peek().text + "'");
    }
    std::string expect_ident(const std::string& what) {
        if (peek().kind != Token::Ident)
            fail(peek().line, peek().col, "expected " + what + ", found '" + peek().text + "'");
        return get().text;
    }
    bool at_end() const { return peek().kind == Token::End; }

private:
    std::vector<Token> toks_;
    size_t at_ = 0;
};

// ---------------------------------------------------------------------------
// Expression parsing over a fixed context. `slots` maps declared ids to
// holomorphic variable indices; conj/Re/Im are available only when the
// context is paired (manifold bodies).

struct Env {
    const VarContext* ctx;
    const std::map<std::string, size_t>* slots;
    bool allow_conj;
};

Poly parse_expr(Cursor& cur, const Env& env);

Poly parse_atom(Cursor& cur, const Env& env) {
    const Token& t = cur.peek();
    if (t.kind == Token::Num) {
        std::string digits = cur.get().text;
        return Poly::constant(*env.ctx, Scalar(mpq_class(digits)));
    }
    if (t.kind == Token::Ident) {
        std::string id = cur.get().text;
        if (id == "i") return Poly::constant(*env.ctx, Scalar::i());
        if (id == "conj" || id == "Re" || id == "Im") {
            if (!env.allow_conj)
                fail(t.line, t.col, id + " is only allowed inside manifold definitions");
            cur.expect_sym("(", "after " + id);
            Poly p = parse_expr(cur, env);
            cur.expect_sym(")", "closing " + id);
            if (id == "conj") return p.bar_involution();
            Poly pb = p.bar_involution();
            if (id == "Re") return (p + pb).scaled(Scalar(mpq_class(1, 2)));
            return (p - pb).scaled(Scalar(mpq_class(0), mpq_class(-1, 2)));  // exact 1/(2i)
        }
        auto it = env.slots->find(id);
        if (it == env.slots->end()) fail(t.line, t.col, "unknown identifier '" + id + "'");
        return Poly::variable(*env.ctx, it->second);
    }
    if (t.kind == Token::Sym && t.text == "(") {
        cur.get();
        Poly p = parse_expr(cur, env);
        cur.expect_sym(")", "closing parenthesis");
        return p;
    }
    fail(t.line, t.col, "expected a number, identifier, or parenthesized expression");
}

Poly parse_factor(Cursor& cur, const Env& env) {
    if (cur.peek().kind == Token::Sym && cur.peek().text == "-") {
        const Token t = cur.get();
        (void)t;
        return parse_factor(cur, env).scaled(Scalar(-1));
    }
    Poly base = parse_atom(cur, env);
    while (cur.peek().kind == Token::Sym && cur.peek().text == "^") {
        const Token op = cur.get();
        if (cur.peek().kind != Token::Num)
            fail(op.line, op.col, "exponent must be a nonnegative integer literal");
        unsigned long e = std::stoul(cur.get().text);
        Poly out = Poly::constant(*env.ctx, Scalar(1));
        for (unsigned long k = 0; k < e; ++k) out = out * base;
        base = out;
    }
    return base;
}

Poly parse_term(Cursor& cur, const Env& env) {
    Poly p = parse_factor(cur, env);
    for (;;) {
        if (cur.accept_sym("*")) {
            p = p * parse_factor(cur, env);
        } else if (cur.peek().kind == Token::Sym && cur.peek().text == "/") {
            const Token op = cur.get();
            Poly rhs = parse_factor(cur, env);
            if (!rhs.is_constant() || rhs.constant_term().is_zero())
                fail(op.line, op.col, "division is only by nonzero constants");
            p = p.scaled(rhs.constant_term().inverse());
        } else {
            return p;
        }
    }
}

Poly parse_expr(Cursor& cur, const Env& env) {
    Poly p = parse_term(cur, env);
    for (;;) {
        if (cur.accept_sym("+"))
            p = p + parse_term(cur, env);
        else if (cur.accept_sym("-"))
            p = p - parse_term(cur, env);
        else
            return p;
    }
}

std::vector<Poly> parse_expr_list(Cursor& cur, const Env& env, const std::string& close) {
    std::vector<Poly> out;
    out.push_back(parse_expr(cur, env));
    while (cur.accept_sym(",")) out.push_back(parse_expr(cur, env));
    cur.expect_sym(close, "closing the expression list");
    return out;
}

const std::set<std::string>& reserved_ids() {
    static const std::set<std::string> r = {"i",        "conj", "Re",      "Im",    "vars",
                                           "map",      "manifold", "variety", "check"};
    return r;
}

// Directive table: object-argument kinds ('m' map, 'M' manifold, 'v'
// variety) followed by optional ('#') or required ('n') numeric arguments.
const std::map<std::string, std::string>& directive_args() {
    static const std::map<std::string, std::string> t = {
        {"multiplicity", "m"},   {"image", "mv"},        {"preimage-eq", "mv"},
        {"normal-form", "mv"},   {"curve", "mv"},        {"cr-profile", "M"},
        {"finite-type", "M#"},   {"fnd", "M#"},          {"transversal", "mM"},
        {"condition-ii", "mM"},  {"thm11", "mM"},        {"explore-question", "nn"},
    };
    return t;
}

bool is_number(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
    });
}

// ---------------------------------------------------------------------------
// Canonical rendering

std::string render_mpq(const mpq_class& q) { return q.get_str(); }

bool scalar_neg(const Scalar& s) {
    if (sgn(s.re()) != 0) return sgn(s.re()) < 0;
    return sgn(s.im()) < 0;
}

// Rendering of a scalar whose leading component is positive.
std::string render_scalar_mag(const Scalar& s) {
    if (s.im() == 0) return render_mpq(s.re());
    if (s.re() == 0) {
        if (s.im() == 1) return "i";
        return render_mpq(s.im()) + " * i";
    }
    std::string imabs = render_mpq(abs(s.im()));
    std::string ip = (imabs == "1") ? "i" : imabs + " * i";
    return "(" + render_mpq(s.re()) + (sgn(s.im()) < 0 ? " - " : " + ") + ip + ")";
}

std::string render_monomial(const VarContext& ctx, const Monomial& m) {
    std::string out;
    size_t N = ctx.base_size();
    for (size_t v = 0; v < ctx.size(); ++v) {
        unsigned e = static_cast<unsigned>(m[v]);
        if (e == 0) continue;
        std::string nm = (ctx.is_paired() && v >= N) ? "conj(" + ctx.name(ctx.partner(v)) + ")"
                                                     : ctx.name(v);
        if (!out.empty()) out += " * ";
        out += nm;
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

}  // namespace

std::string render_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    MonomialOrder ord = MonomialOrder::degrevlex();
    std::vector<std::pair<Monomial, Scalar>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(),
              [&](const auto& a, const auto& b) { return ord.less(b.first, a.first); });
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms) {
        bool neg = scalar_neg(c);
        Scalar mag = neg ? -c : c;
        std::string mono = render_monomial(p.ctx(), m);
        std::string body;
        if (mono.empty()) {
            body = render_scalar_mag(mag);
        } else if (mag == Scalar(1)) {
            body = mono;
        } else {
            body = render_scalar_mag(mag) + " * " + mono;
        }
        if (first) {
            out += (neg ? "-" : "") + body;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + body;
        }
    }
    return out;
}

std::vector<std::string> Session::var_ids() const {
    std::vector<std::string> ids;
    for (const auto& [name, list] : var_groups) ids.insert(ids.end(), list.begin(), list.end());
    return ids;
}

VarContext Session::plain_ctx() const {
    std::vector<std::string> ids = var_ids();
    if (ids.empty()) throw error("session declares no variables");
    return VarContext::plain(ids);
}

VarContext Session::paired_ctx() const {
    std::vector<std::string> ids = var_ids();
    if (ids.empty()) throw error("session declares no variables");
    return VarContext::paired(ids);
}

const MapGerm* Session::find_map(const std::string& name) const {
    for (const auto& [n, m] : maps)
        if (n == name) return &m;
    return nullptr;
}
const RealSubmanifold* Session::find_manifold(const std::string& name) const {
    for (const auto& [n, m] : manifolds)
        if (n == name) return &m;
    return nullptr;
}
const IdealHandle* Session::find_variety(const std::string& name) const {
    for (const auto& [n, v] : varieties)
        if (n == name) return &v;
    return nullptr;
}

Session parse_session(const std::string& text) {
    Session s;
    std::set<std::string> used_names;  // maps + manifolds + varieties + groups
    bool defs_started = false;

    for (const auto& lc : logical_lines(text)) {
        Cursor cur(tokenize(lc));
        if (cur.at_end()) continue;
        const Token head = cur.peek();
        std::string kw = cur.expect_ident("a statement keyword");

        if (kw == "vars") {
            if (defs_started)
                fail(head.line, head.col, "vars declarations must precede definitions");
            std::string gname = cur.expect_ident("a variable-group name");
            if (used_names.count(gname))
                fail(head.line, head.col, "name '" + gname + "' already in use");
            cur.expect_sym("=", "after the group name");
            std::vector<std::string> ids;
            std::set<std::string> seen(s.var_ids().begin(), s.var_ids().end());
            do {
                const Token t = cur.peek();
                std::string id = cur.expect_ident("a variable name");
                if (reserved_ids().count(id))
                    fail(t.line, t.col, "'" + id + "' is reserved and cannot name a variable");
                if (!seen.insert(id).second)
                    fail(t.line, t.col, "variable '" + id + "' declared twice");
                ids.push_back(id);
            } while (cur.accept_sym(","));
            if (!cur.at_end())
                fail(cur.peek().line, cur.peek().col, "unexpected trailing input");
            used_names.insert(gname);
            s.var_groups.emplace_back(gname, std::move(ids));
            continue;
        }

        if (kw == "map" || kw == "manifold" || kw == "variety") {
            defs_started = true;
            std::vector<std::string> ids = s.var_ids();
            if (ids.empty()) fail(head.line, head.col, "no variables declared before '" + kw + "'");
            const Token nt = cur.peek();
            std::string name = cur.expect_ident("a definition name");
            if (used_names.count(name)) fail(nt.line, nt.col, "name '" + name + "' already in use");
            cur.expect_sym("=", "after the definition name");

            std::map<std::string, size_t> slots;
            for (size_t k = 0; k < ids.size(); ++k) slots[ids[k]] = k;

            if (kw == "map") {
                cur.expect_sym("[", "starting the component list");
                VarContext src = VarContext::plain(ids);
                Env env{&src, &slots, false};
                std::vector<Poly> comps = parse_expr_list(cur, env, "]");
                if (!cur.at_end())
                    fail(cur.peek().line, cur.peek().col, "unexpected trailing input");
                if (comps.size() != ids.size())
                    fail(head.line, head.col,
                         "map must have exactly " + std::to_string(ids.size()) + " components");
                for (size_t k = 0; k < comps.size(); ++k)
                    if (!comps[k].vanishes_at_zero())
                        fail(head.line, head.col,
                             "map component " + std::to_string(k + 1) +
                                 " has a nonzero constant term");
                std::vector<std::string> tnames;
                for (const auto& id : ids) tnames.push_back(id + "_t");
                VarContext tgt = VarContext::plain(tnames);
                try {
                    s.maps.emplace_back(name, MapGerm(src, tgt, std::move(comps)));
                } catch (const error& e) {
                    fail(head.line, head.col, e.what());
                }
            } else if (kw == "manifold") {
                cur.expect_sym("{", "starting the defining functions");
                VarContext pc = VarContext::paired(ids);
                Env env{&pc, &slots, true};
                std::vector<Poly> rho = parse_expr_list(cur, env, "}");
                if (!cur.at_end())
                    fail(cur.peek().line, cur.peek().col, "unexpected trailing input");
                try {
                    s.manifolds.emplace_back(name, RealSubmanifold(pc, std::move(rho)));
                } catch (const error& e) {
                    fail(head.line, head.col, e.what());
                }
            } else {
                cur.expect_sym("{", "starting the generator list");
                VarContext pc = VarContext::plain(ids);
                Env env{&pc, &slots, false};
                std::vector<Poly> gens = parse_expr_list(cur, env, "}");
                if (!cur.at_end())
                    fail(cur.peek().line, cur.peek().col, "unexpected trailing input");
                for (size_t k = 0; k < gens.size(); ++k)
                    if (!gens[k].vanishes_at_zero())
                        fail(head.line, head.col,
                             "variety generator " + std::to_string(k + 1) +
                                 " does not vanish at the origin");
                s.varieties.emplace_back(name, IdealHandle(pc, std::move(gens)));
            }
            used_names.insert(name);
            continue;
        }

        if (kw == "check") {
            defs_started = true;
            std::string kind = cur.expect_ident("a directive name");
            while (cur.peek().kind == Token::Sym && cur.peek().text == "-") {
                cur.get();
                kind += "-" + cur.expect_ident("the rest of the directive name");
            }
            auto it = directive_args().find(kind);
            if (it == directive_args().end())
                fail(head.line, head.col, "unknown directive '" + kind + "'");
            CheckDirective d;
            d.kind = kind;
            while (!cur.at_end()) {
                const Token& t = cur.peek();
                if (t.kind != Token::Ident && t.kind != Token::Num)
                    fail(t.line, t.col, "directive arguments are names or numbers");
                d.args.push_back(cur.get().text);
            }
            // Shape check against the table; '#' marks an optional number.
            const std::string& shape = it->second;
            size_t required = 0;
            for (char c : shape)
                if (c != '#') ++required;
            if (d.args.size() < required || d.args.size() > shape.size())
                fail(head.line, head.col,
                     "directive '" + kind + "' takes " + std::to_string(required) +
                         (shape.size() > required ? " (+optional)" : "") + " arguments");
            for (size_t k = 0; k < d.args.size(); ++k) {
                char want = shape[k];
                bool num = is_number(d.args[k]);
                if ((want == 'n' || want == '#') && !num)
                    fail(head.line, head.col,
                         "argument " + std::to_string(k + 1) + " of '" + kind +
                             "' must be a number");
                if ((want == 'm' || want == 'M' || want == 'v') && num)
                    fail(head.line, head.col,
                         "argument " + std::to_string(k + 1) + " of '" + kind +
                             "' must be a name");
            }
            s.checks.push_back(std::move(d));
            continue;
        }

        fail(head.line, head.col, "unknown statement '" + kw + "'");
    }

    // All object names in directives must resolve to the right kind.
    for (const auto& d : s.checks) {
        const std::string& shape = directive_args().at(d.kind);
        for (size_t k = 0; k < d.args.size(); ++k) {
            char want = shape[k];
            const std::string& a = d.args[k];
            if (want == 'm' && !s.find_map(a)) throw error("check " + d.kind + ": unknown map '" + a + "'");
            if (want == 'M' && !s.find_manifold(a))
                throw error("check " + d.kind + ": unknown manifold '" + a + "'");
            if (want == 'v' && !s.find_variety(a))
                throw error("check " + d.kind + ": unknown variety '" + a + "'");
        }
    }
    return s;
}

std::string render_session(const Session& s) {
    std::ostringstream os;
    for (const auto& [gname, ids] : s.var_groups) {
        os << "vars " << gname << " =";
        for (size_t k = 0; k < ids.size(); ++k) os << (k ? ", " : " ") << ids[k];
        os << "\n";
    }
    for (const auto& [name, m] : s.maps) {
        os << "map " << name << " = [";
        for (size_t k = 0; k < m.components.size(); ++k)
            os << (k ? ", " : "") << render_poly(m.components[k]);
        os << "]\n";
    }
    for (const auto& [name, M] : s.manifolds) {
        os << "manifold " << name << " = { ";
        for (size_t k = 0; k < M.rho.size(); ++k) os << (k ? ", " : "") << render_poly(M.rho[k]);
        os << " }\n";
    }
    for (const auto& [name, X] : s.varieties) {
        os << "variety " << name << " = { ";
        const std::vector<Poly>& gens = X.generators();
        for (size_t k = 0; k < gens.size(); ++k) os << (k ? ", " : "") << render_poly(gens[k]);
        os << " }\n";
    }
    for (const auto& d : s.checks) {
        os << "check " << d.kind;
        for (const auto& a : d.args) os << " " << a;
        os << "\n";
    }
    return os.str();
}

bool session_equal(const Session& a, const Session& b) {
    if (a.var_groups != b.var_groups) return false;
    if (a.maps.size() != b.maps.size() || a.manifolds.size() != b.manifolds.size() ||
        a.varieties.size() != b.varieties.size() || a.checks.size() != b.checks.size())
        return false;
    for (size_t k = 0; k < a.maps.size(); ++k) {
        if (a.maps[k].first != b.maps[k].first) return false;
        const MapGerm& x = a.maps[k].second;
        const MapGerm& y = b.maps[k].second;
        if (!(x.source == y.source) || !(x.target == y.target) ||
            x.components != y.components)
            return false;
    }
    for (size_t k = 0; k < a.manifolds.size(); ++k) {
        if (a.manifolds[k].first != b.manifolds[k].first) return false;
        const RealSubmanifold& x = a.manifolds[k].second;
        const RealSubmanifold& y = b.manifolds[k].second;
        if (!(x.ctx == y.ctx) || x.rho != y.rho) return false;
    }
    for (size_t k = 0; k < a.varieties.size(); ++k) {
        if (a.varieties[k].first != b.varieties[k].first) return false;
        const IdealHandle& x = a.varieties[k].second;
        const IdealHandle& y = b.varieties[k].second;
        if (!(x.ctx() == y.ctx()) || x.generators() != y.generators()) return false;
    }
    for (size_t k = 0; k < a.checks.size(); ++k)
        if (a.checks[k].kind != b.checks[k].kind || a.checks[k].args != b.checks[k].args)
            return false;
    return true;
}

}  // namespace germcalc
