#include "qcusp/textfmt.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace qcusp::textfmt {

namespace {

using exact::Scalar;
using hopf::TensorP2;
using rewrite::Alphabet;
using rewrite::NCPoly;
using rewrite::Word;

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_terms(const std::string& s) {
    // terms are joined by " + "; scalars may carry their own leading minus
    std::vector<std::string> out;
    size_t pos = 0;
    while (true) {
        size_t next = s.find(" + ", pos);
        if (next == std::string::npos) {
            out.push_back(trim(s.substr(pos)));
            return out;
        }
        out.push_back(trim(s.substr(pos, next - pos)));
        pos = next + 3;
    }
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

bool is_word_token(const std::string& tok, const Alphabet& alph) {
    if (tok == "1") return true;
    for (char c : tok)
        if (alph.index(std::string(1, c)) < 0) return false;
    return !tok.empty();
}

}  // namespace

std::string scalar_text(const Scalar& s) {
    if (s.is_real()) return s.re().get_str();
    return s.re().get_str() + "," + s.im().get_str();
}

Scalar parse_scalar(const std::string& s) {
    try {
        return Scalar::parse(s);
    } catch (const std::exception& e) {
        bad("unreadable scalar '" + s + "': " + e.what());
    }
}

std::string poly_text(const NCPoly& p, const Alphabet& alph) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [w, c] : p.terms()) {
        if (!out.empty()) out += " + ";
        if (c.is_one() && !w.empty())
            out += alph.print(w);
        else if (w.empty())
            out += scalar_text(c);
        else
            out += scalar_text(c) + "*" + alph.print(w);
    }
    return out;
}

NCPoly parse_poly(const std::string& s, const Alphabet& alph) {
    std::string body = trim(s);
    if (body == "0") return NCPoly();
    NCPoly p;
    for (const auto& term : split_terms(body)) {
        if (term.empty()) bad("empty term in '" + s + "'");
        size_t star = term.find('*');
        if (star != std::string::npos) {
            Scalar c = parse_scalar(term.substr(0, star));
            p.add_term(alph.parse_word(term.substr(star + 1)), c);
        } else if (is_word_token(term, alph)) {
            p.add_term(alph.parse_word(term), Scalar(1));
        } else {
            p.add_term(Word(), parse_scalar(term));
        }
    }
    return p;
}

std::string tensor_text(const TensorP2& t, const Alphabet& alph) {
    if (t.is_zero()) return "0";
    std::string out;
    for (const auto& [k, c] : t.terms()) {
        if (!out.empty()) out += " + ";
        std::string pair = "(" + alph.print(k.first) + " x " + alph.print(k.second) + ")";
        if (c.is_one())
            out += pair;
        else
            out += scalar_text(c) + "*" + pair;
    }
    return out;
}

TensorP2 parse_tensor(const std::string& s, const Alphabet& alph) {
    std::string body = trim(s);
    TensorP2 t;
    if (body == "0") return t;
    for (const auto& term : split_terms(body)) {
        Scalar c(1);
        std::string rest = term;
        size_t open = term.find('(');
        if (open == std::string::npos) bad("tensor term without legs in '" + s + "'");
        if (open > 0) {
            if (term[open - 1] != '*') bad("tensor term '" + term + "'");
            c = parse_scalar(term.substr(0, open - 1));
        }
        rest = term.substr(open);
        if (rest.front() != '(' || rest.back() != ')') bad("tensor term '" + term + "'");
        rest = rest.substr(1, rest.size() - 2);
        size_t mid = rest.find(" x ");
        if (mid == std::string::npos) bad("tensor term '" + term + "' lacks ' x '");
        Word u = alph.parse_word(trim(rest.substr(0, mid)));
        Word v = alph.parse_word(trim(rest.substr(mid + 3)));
        t.add_term(u, v, c);
    }
    return t;
}

std::string presentation_text(const hopf::HopfPresentation& p) {
    const Alphabet& alph = p.sys.alphabet();
    for (const auto& name : alph.names)
        if (name.size() != 1) bad("text format wants single-character symbol names");
    std::ostringstream os;
    os << "symbols";
    for (const auto& name : alph.names) os << " " << name;
    os << "\n";
    for (const auto& row : p.sys.order().weight_rows) {
        os << "weights";
        for (long w : row) os << " " << w;
        os << "\n";
    }
    {
        // symbols ascending in lex rank
        std::vector<int> by_rank(static_cast<size_t>(alph.size()));
        for (int i = 0; i < alph.size(); ++i)
            by_rank[static_cast<size_t>(p.sys.order().lex_rank[static_cast<size_t>(i)])] = i;
        os << "lex";
        for (int i : by_rank) os << " " << alph.name(i);
        os << "\n";
    }
    for (const auto& r : p.sys.rules())
        os << alph.print(r.lhs) << " -> " << poly_text(r.rhs, alph) << "\n";
    if (!p.delta.empty()) {
        for (int g = 0; g < alph.size(); ++g) {
            os << "Delta " << alph.name(g) << " = "
               << tensor_text(p.delta[static_cast<size_t>(g)], alph) << "\n";
            os << "eps " << alph.name(g) << " = "
               << scalar_text(p.eps[static_cast<size_t>(g)]) << "\n";
            os << "S " << alph.name(g) << " = "
               << poly_text(p.antipode[static_cast<size_t>(g)], alph) << "\n";
        }
    }
    if (p.star) {
        for (int g = 0; g < alph.size(); ++g)
            os << "star " << alph.name(g) << " = "
               << poly_text((*p.star)[static_cast<size_t>(g)], alph) << "\n";
    }
    return os.str();
}

hopf::HopfPresentation parse_presentation(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    Alphabet alph;
    rewrite::MonomialOrder ord;
    std::vector<rewrite::Rule> rules;
    std::vector<std::pair<int, TensorP2>> deltas;
    std::vector<std::pair<int, Scalar>> epses;
    std::vector<std::pair<int, NCPoly>> antipodes;
    std::vector<std::pair<int, NCPoly>> stars;
    bool have_symbols = false;

    auto generator_of = [&](const std::string& name, const std::string& where) {
        int g = alph.index(name);
        if (g < 0) bad("unknown generator '" + name + "' in " + where);
        return g;
    };

    while (std::getline(is, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        std::string rest = trim(line.substr(head.size()));
        if (head == "symbols") {
            std::vector<std::string> names = split_ws(rest);
            if (names.empty()) bad("symbols line without symbols");
            for (const auto& n : names)
                if (n.size() != 1) bad("symbol '" + n + "' is not a single character");
            alph = Alphabet(names);
            have_symbols = true;
        } else if (head == "weights") {
            if (!have_symbols) bad("weights before symbols");
            std::vector<long> row;
            long w;
            while (ls >> w) row.push_back(w);
            if (static_cast<int>(row.size()) != alph.size())
                bad("weights row length mismatch: " + line);
            ord.weight_rows.push_back(std::move(row));
        } else if (head == "lex") {
            if (!have_symbols) bad("lex before symbols");
            std::vector<std::string> names = split_ws(rest);
            if (static_cast<int>(names.size()) != alph.size()) bad("lex line length mismatch");
            ord.lex_rank.assign(static_cast<size_t>(alph.size()), 0);
            for (int rank = 0; rank < alph.size(); ++rank)
                ord.lex_rank[static_cast<size_t>(generator_of(names[static_cast<size_t>(rank)],
                                                              "lex line"))] = rank;
        } else if (head == "Delta" || head == "eps" || head == "S" || head == "star") {
            if (!have_symbols) bad("Hopf data before symbols");
            size_t eq = rest.find('=');
            if (eq == std::string::npos) bad("missing '=' in: " + line);
            int g = generator_of(trim(rest.substr(0, eq)), "line '" + line + "'");
            std::string body = trim(rest.substr(eq + 1));
            if (head == "Delta")
                deltas.emplace_back(g, parse_tensor(body, alph));
            else if (head == "eps")
                epses.emplace_back(g, parse_scalar(body));
            else if (head == "S")
                antipodes.emplace_back(g, parse_poly(body, alph));
            else
                stars.emplace_back(g, parse_poly(body, alph));
        } else if (line.find(" -> ") != std::string::npos) {
            if (!have_symbols) bad("rule before symbols");
            size_t arrow = line.find(" -> ");
            Word lhs = alph.parse_word(trim(line.substr(0, arrow)));
            rules.push_back({lhs, parse_poly(line.substr(arrow + 4), alph)});
        } else {
            bad("unreadable line: " + line);
        }
    }
    if (!have_symbols) bad("no symbols line");
    if (ord.weight_rows.empty())
        ord.weight_rows.push_back(std::vector<long>(static_cast<size_t>(alph.size()), 1));
    if (ord.lex_rank.empty()) {
        ord.lex_rank.resize(static_cast<size_t>(alph.size()));
        for (int i = 0; i < alph.size(); ++i) ord.lex_rank[static_cast<size_t>(i)] = i;
    }
    hopf::HopfPresentation p{rewrite::ReductionSystem(alph, ord, rules), {}, {}, {}, {}};
    auto fill = [&](auto& pairs, auto& target, const char* what) {
        if (pairs.empty()) return;
        if (static_cast<int>(pairs.size()) != alph.size())
            bad(std::string(what) + " given for some generators but not all");
        target.resize(static_cast<size_t>(alph.size()));
        std::vector<bool> seen(static_cast<size_t>(alph.size()), false);
        for (auto& [g, v] : pairs) {
            if (seen[static_cast<size_t>(g)]) bad(std::string(what) + " repeated for a generator");
            seen[static_cast<size_t>(g)] = true;
            target[static_cast<size_t>(g)] = v;
        }
    };
    fill(deltas, p.delta, "Delta");
    fill(epses, p.eps, "eps");
    fill(antipodes, p.antipode, "S");
    if (!stars.empty()) {
        std::vector<NCPoly> st;
        fill(stars, st, "star");
        p.star = std::move(st);
    }
    if (p.delta.empty() != p.eps.empty() || p.delta.empty() != p.antipode.empty())
        bad("Delta, eps and S must be given together");
    return p;
}

}  // namespace qcusp::textfmt
