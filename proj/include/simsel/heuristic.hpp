#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "simsel/saturation.hpp"
#include "simsel/weights.hpp"

namespace simsel {

class HeuristicError : public std::invalid_argument {
public:
    HeuristicError(const std::string& what, std::size_t position)
        : std::invalid_argument("heuristic, column " + std::to_string(position + 1) + ": " + what),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Decodes a three-digit cost code such as "155": (c_ins, c_del, c_ch) for
/// the edit distances, (c_miss, c_inst, c_gen) for the structural distance.
/// Each digit must lie in 1..9.
inline KernelCosts decode_cost_code(std::string_view code, WeightKind kind) {
    if (code.size() != 3) throw std::invalid_argument("cost code must have three digits: '" + std::string(code) + "'");
    Rational d[3];
    for (int i = 0; i < 3; ++i) {
        char c = code[i];
        if (c < '1' || c > '9') throw std::invalid_argument("cost code digits must be 1-9: '" + std::string(code) + "'");
        d[i] = Rational(c - '0');
    }
    switch (kind) {
        case WeightKind::Lev:
        case WeightKind::Ted: return EditCosts{d[0], d[1], d[2]};
        case WeightKind::Struc: return StructCosts{d[0], d[1], d[2]};
        default: throw std::invalid_argument("cost codes apply to Lev, Ted and Struc only");
    }
}

namespace detail {

class HeuristicParser {
public:
    explicit HeuristicParser(std::string_view text) : text_(text) {}

    Heuristic parse() {
        Heuristic h;
        expect('(');
        h.items.push_back(item());
        while (skip(), peek() == ',') {
            ++pos_;
            h.items.push_back(item());
        }
        expect(')');
        skip();
        if (pos_ != text_.size()) fail("trailing characters");
        return h;
    }

private:
    struct Token {
        std::string text;
        std::size_t pos;
    };

    HeuristicItem item() {
        skip();
        std::size_t at = pos_;
        std::string count = token().text;
        std::uint32_t n = 0;
        auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), n);
        if (ec != std::errc{} || ptr != count.data() + count.size()) fail("expected a count, found '" + count + "'", at);
        if (n < 1) fail("CEF count must be at least 1", at);
        expect('*');
        skip();
        Token name = token();
        expect('(');
        std::vector<Token> args;
        skip();
        if (peek() != ')') {
            args.push_back(token());
            while (skip(), peek() == ',') {
                ++pos_;
                args.push_back(token());
            }
        }
        std::size_t close = pos_;
        expect(')');
        return {n, cef(name, args, close)};
    }

    Cef cef(const Token& name, const std::vector<Token>& args, std::size_t close) {
        WeightFnSpec w;
        const std::string& n = name.text;
        if (n == "Ref") w.kind = WeightKind::Ref;
        else if (n == "ConjectureTermWeight") w.kind = WeightKind::Term;
        else if (n == "ConjectureTfIdfWeight") w.kind = WeightKind::Tfidf;
        else if (n == "ConjecturePrefixWeight") w.kind = WeightKind::Pref;
        else if (n == "ConjectureLevWeight") w.kind = WeightKind::Lev;
        else if (n == "ConjectureTedWeight") w.kind = WeightKind::Ted;
        else if (n == "ConjectureStrucWeight") w.kind = WeightKind::Struc;
        else if (n == "FIFOWeight") w.kind = WeightKind::FIFO;
        else fail("unknown weight function '" + n + "'", name.pos);

        if (args.empty()) fail("missing priority function", close);
        Cef c;
        if (args[0].text == "ConstPrio") c.priority = PriorityFn::ConstPrio;
        else if (args[0].text == "PreferGoals") c.priority = PriorityFn::PreferGoals;
        else fail("unknown priority function '" + args[0].text + "'", args[0].pos);

        std::size_t next = 1;
        bool common = w.kind != WeightKind::FIFO && w.kind != WeightKind::Ref;
        if (common) {
            if (args.size() < 4) fail(n + " expects the arguments v, r, e after the priority", close);
            w.norm = norm(args[1]);
            w.related = related(args[2]);
            w.ext = extension(args[3]);
            next = 4;
        }
        const std::size_t rest = args.size() - next;
        auto arity_error = [&](const std::string& expected) {
            fail(n + " expects " + expected + " after " + (common ? "v, r, e" : "the priority") + ", got " +
                     std::to_string(rest) + " argument(s)",
                 close);
        };
        switch (w.kind) {
            case WeightKind::FIFO:
                if (rest != 0) arity_error("no arguments");
                break;
            case WeightKind::Ref:
            case WeightKind::Term:
                if (rest != 5) arity_error("5 numbers (c_conj, c_f, c_c, c_p, c_v)");
                w.params = SymbolWeights{number(args[next]), number(args[next + 1]), number(args[next + 2]),
                                         number(args[next + 3]), number(args[next + 4])};
                break;
            case WeightKind::Tfidf:
                if (rest != 1) arity_error("the document set (ax or pro)");
                if (args[next].text == "ax") w.params = DocMode::ax;
                else if (args[next].text == "pro") w.params = DocMode::pro;
                else fail("document set must be ax or pro, got '" + args[next].text + "'", args[next].pos);
                break;
            case WeightKind::Pref:
                if (rest != 2) arity_error("2 numbers (c_match, c_miss)");
                w.params = PrefCosts{number(args[next]), number(args[next + 1])};
                break;
            case WeightKind::Lev:
            case WeightKind::Ted:
            case WeightKind::Struc:
                if (rest == 1) {
                    try {
                        KernelCosts k = decode_cost_code(args[next].text, w.kind);
                        if (w.kind == WeightKind::Struc) w.params = std::get<StructCosts>(k);
                        else w.params = std::get<EditCosts>(k);
                    } catch (const std::invalid_argument& e) {
                        fail(e.what(), args[next].pos);
                    }
                } else if (rest == 3) {
                    Rational a = number(args[next]), b = number(args[next + 1]), d = number(args[next + 2]);
                    if (w.kind == WeightKind::Struc) w.params = StructCosts{a, b, d};
                    else w.params = EditCosts{a, b, d};
                } else {
                    arity_error(w.kind == WeightKind::Struc ? "3 costs (c_miss, c_inst, c_gen) or a cost code"
                                                            : "3 costs (c_ins, c_del, c_ch) or a cost code");
                }
                break;
        }
        c.weight = w;
        return c;
    }

    VarNorm norm(const Token& t) {
        if (t.text == "Alf") return VarNorm::Alf;
        if (t.text == "Uni") return VarNorm::Uni;
        fail("variable normalization must be Alf or Uni, got '" + t.text + "'", t.pos);
    }

    RelatedMode related(const Token& t) {
        if (t.text == "Ter") return RelatedMode::Ter;
        if (t.text == "Sub") return RelatedMode::Sub;
        if (t.text == "Top") return RelatedMode::Top;
        if (t.text == "Gen") return RelatedMode::Gen;
        fail("related set must be Ter, Sub, Top or Gen, got '" + t.text + "'", t.pos);
    }

    Extension extension(const Token& t) {
        if (t.text == "Sim") return Extension::Sim;
        if (t.text == "Sum") return Extension::Sum;
        if (t.text == "Max") return Extension::Max;
        fail("extension must be Sim, Sum or Max, got '" + t.text + "'", t.pos);
    }

    Rational number(const Token& t) {
        Rational q;
        try {
            q = Rational::parse(t.text);
        } catch (const std::exception&) {
            fail("expected a number, got '" + t.text + "'", t.pos);
        }
        if (q < Rational(0)) fail("costs must be non-negative", t.pos);
        return q;
    }

    Token token() {
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '/' || c == '-') ++pos_;
            else break;
        }
        if (pos_ == start) {
            if (pos_ >= text_.size()) fail("unexpected end of heuristic");
            fail(std::string("unexpected character '") + text_[pos_] + "'");
        }
        return {std::string(text_.substr(start, pos_ - start)), start};
    }

    void expect(char c) {
        skip();
        if (peek() != c) {
            if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' before end of heuristic");
            fail(std::string("expected '") + c + "', found '" + text_[pos_] + "'");
        }
        ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const { throw HeuristicError(what, pos_); }
    [[noreturn]] static void fail(const std::string& what, std::size_t at) { throw HeuristicError(what, at); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `(n1*Name(Prio, ...), ..., nk*Name(Prio, ...))`.
inline Heuristic parse_heuristic(std::string_view spec) {
    Heuristic h = detail::HeuristicParser(spec).parse();
    h.validate();
    return h;
}

inline std::string print_cef(const Cef& c) {
    const WeightFnSpec& w = c.weight;
    std::string out(kind_name(w.kind));
    out += '(';
    out += priority_name(c.priority);
    if (w.kind != WeightKind::FIFO && w.kind != WeightKind::Ref) {
        out += ',';
        out += norm_name(w.norm);
        out += ',';
        out += mode_name(w.related);
        out += ',';
        out += extension_name(w.ext);
    }
    auto num = [&](const Rational& q) {
        out += ',';
        out += q.decimal_str();
    };
    std::visit(
        [&](const auto& p) {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, SymbolWeights>) {
                num(p.conj), num(p.function), num(p.constant), num(p.predicate), num(p.variable);
            } else if constexpr (std::is_same_v<P, DocMode>) {
                out += p == DocMode::ax ? ",ax" : ",pro";
            } else if constexpr (std::is_same_v<P, PrefCosts>) {
                num(p.match), num(p.miss);
            } else if constexpr (std::is_same_v<P, EditCosts>) {
                num(p.insert), num(p.remove), num(p.change);
            } else if constexpr (std::is_same_v<P, StructCosts>) {
                num(p.miss), num(p.inst), num(p.gen);
            }
        },
        w.params);
    out += ')';
    return out;
}

inline std::string print_heuristic(const Heuristic& h) {
    std::string out = "(";
    for (std::size_t i = 0; i < h.items.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(h.items[i].count);
        out += '*';
        out += print_cef(h.items[i].cef);
    }
    out += ')';
    return out;
}

}  // namespace simsel
