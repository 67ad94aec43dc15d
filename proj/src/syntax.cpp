#include "kripke/syntax.hpp"

#include <cctype>
#include <set>
#include <vector>

#include "kripke/errors.hpp"

namespace kripke {

namespace {

enum class Tok { End, False, True, Var, Not, And, Or, Imp, Iff, LParen, RParen, DiaOpen, BoxOpen, Error };

struct Token {
    Tok kind;
    std::size_t offset;
    std::string text;
    int value = 0;  // variable index, or modality token char for modal prefixes
};

struct Alias {
    std::string_view spelling;
    Tok kind;
};

// Multi-byte spellings, longest first where prefixes overlap.
constexpr Alias kAliases[] = {
    {"<->", Tok::Iff},   {"->", Tok::Imp},    {"\xE2\x86\x94", Tok::Iff}, {"\xE2\x86\x92", Tok::Imp},
    {"\xC2\xAC", Tok::Not}, {"\xE2\x88\xA7", Tok::And}, {"\xE2\x88\xA8", Tok::Or},
    {"\xE2\x8A\xA5", Tok::False}, {"\xE2\x8A\xA4", Tok::True},
    {"~", Tok::Not},     {"&", Tok::And},     {"|", Tok::Or},
    {"(", Tok::LParen},  {")", Tok::RParen},
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::size_t start = pos_;
        if (pos_ >= text_.size()) return {Tok::End, start, "end of input"};
        std::string_view rest = text_.substr(pos_);

        // <m> and [m] prefixes come before the aliases so that "<->" is not
        // mistaken for a diamond and vice versa.
        if ((rest[0] == '<' || rest[0] == '[') && rest.size() >= 3) {
            char close = rest[0] == '<' ? '>' : ']';
            char m = rest[1];
            if ((m == '1' || m == '2' || m == 'v' || m == '*' || m == 'r') && rest[2] == close) {
                pos_ += 3;
                return {rest[0] == '<' ? Tok::DiaOpen : Tok::BoxOpen, start, std::string(rest.substr(0, 3)), m};
            }
        }
        for (const auto& a : kAliases) {
            if (rest.substr(0, a.spelling.size()) == a.spelling) {
                pos_ += a.spelling.size();
                return {a.kind, start, std::string(a.spelling)};
            }
        }
        if (std::isalpha(static_cast<unsigned char>(rest[0]))) {
            std::size_t len = 0;
            while (len < rest.size() && std::isalnum(static_cast<unsigned char>(rest[len]))) ++len;
            std::string word(rest.substr(0, len));
            pos_ += len;
            if (word == "false") return {Tok::False, start, word};
            if (word == "true") return {Tok::True, start, word};
            if (word.size() >= 2 && word[0] == 'p' && word.size() <= 8) {
                bool digits = true;
                for (std::size_t i = 1; i < word.size(); ++i)
                    digits = digits && std::isdigit(static_cast<unsigned char>(word[i]));
                if (digits) return {Tok::Var, start, word, std::stoi(word.substr(1))};
            }
            return {Tok::Error, start, word};
        }
        pos_ += 1;
        return {Tok::Error, start, std::string(rest.substr(0, 1))};
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) { advance(); }

    Formula parse_all() {
        Formula f = parse_iff();
        expect_end();
        return f;
    }

private:
    void advance() {
        cur_ = lexer_.next();
        expected_.clear();
    }

    bool accept(Tok kind, const char* name) {
        if (cur_.kind == kind) {
            advance();
            return true;
        }
        expected_.insert(name);
        return false;
    }

    [[noreturn]] void fail() {
        throw SyntaxError(cur_.offset, std::vector<std::string>(expected_.begin(), expected_.end()), cur_.text);
    }

    void expect_end() {
        if (cur_.kind != Tok::End) {
            expected_.insert("end of input");
            fail();
        }
    }

    Formula parse_iff() {
        Formula lhs = parse_imp();
        while (accept(Tok::Iff, "<->")) lhs = Formula::iff(lhs, parse_imp());
        return lhs;
    }

    Formula parse_imp() {
        Formula lhs = parse_or();
        if (accept(Tok::Imp, "->")) return Formula::imp(lhs, parse_imp());
        return lhs;
    }

    Formula parse_or() {
        Formula lhs = parse_and();
        while (accept(Tok::Or, "|")) lhs = Formula::disj(lhs, parse_and());
        return lhs;
    }

    Formula parse_and() {
        Formula lhs = parse_unary();
        while (accept(Tok::And, "&")) lhs = Formula::conj(lhs, parse_unary());
        return lhs;
    }

    Formula parse_unary() {
        if (accept(Tok::Not, "~")) return Formula::negation(parse_unary());
        if (cur_.kind == Tok::DiaOpen || cur_.kind == Tok::BoxOpen) {
            bool diamond = cur_.kind == Tok::DiaOpen;
            char m = static_cast<char>(cur_.value);
            advance();
            Formula body = parse_unary();
            if (m == 'r') return diamond ? Formula::dia(Modality::Reach, body) : Formula::box(Modality::Reach, body);
            ModalToken t = m == '1'   ? ModalToken::One
                           : m == '2' ? ModalToken::Two
                           : m == 'v' ? ModalToken::Vee
                                      : ModalToken::Star;
            return diamond ? Formula::dia(t, body) : Formula::box(t, body);
        }
        expected_.insert("<m>");
        expected_.insert("[m]");
        return parse_atom();
    }

    Formula parse_atom() {
        if (accept(Tok::False, "false")) return Formula::bot();
        if (accept(Tok::True, "true")) return Formula::top();
        if (cur_.kind == Tok::Var) {
            int index = cur_.value;
            advance();
            return Formula::var(index);
        }
        expected_.insert("variable");
        if (accept(Tok::LParen, "(")) {
            Formula f = parse_iff();
            if (!accept(Tok::RParen, ")")) fail();
            return f;
        }
        fail();
    }

    Lexer lexer_;
    Token cur_;
    std::set<std::string> expected_;
};

void print_rec(const Formula& f, std::string& out) {
    switch (f.kind()) {
    case NodeKind::Var: out += 'p'; out += std::to_string(f.var_index()); return;
    case NodeKind::Bot: out += "false"; return;
    case NodeKind::Top: out += "true"; return;
    case NodeKind::Not: out += '~'; print_rec(f.lhs(), out); return;
    case NodeKind::Dia:
    case NodeKind::Box: {
        bool dia = f.kind() == NodeKind::Dia;
        out += dia ? '<' : '[';
        out += f.modality() == Modality::Reach ? 'r' : f.modality() == Modality::One ? '1' : '2';
        out += dia ? '>' : ']';
        print_rec(f.lhs(), out);
        return;
    }
    default: break;
    }
    const char* op = f.kind() == NodeKind::And   ? " & "
                     : f.kind() == NodeKind::Or  ? " | "
                     : f.kind() == NodeKind::Imp ? " -> "
                                                 : " <-> ";
    out += '(';
    print_rec(f.lhs(), out);
    out += op;
    print_rec(f.rhs(), out);
    out += ')';
}

}  // namespace

Formula parse(std::string_view text) { return Parser(text).parse_all(); }

std::string print(const Formula& f) {
    std::string out;
    print_rec(f, out);
    return out;
}

}  // namespace kripke
