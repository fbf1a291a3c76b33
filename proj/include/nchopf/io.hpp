#pragma once

// Canonical text and JSON forms for polynomials and tensors, plus a small text parser.

#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "core_algebra.hpp"
#include "word.hpp"

namespace nchopf {

using json = nlohmann::ordered_json;

struct FormatOptions {
    /// Generator symbol, e.g. 'a' for H^dif and 'b' for H^inv.
    char symbol = 'a';
    /// Print free-product tags as a1{2}.
    bool show_tags = false;
};

inline const char* tensor_separator = " ⊗ ";

inline std::string format_word(const Word& w, const FormatOptions& opt = {})
{
    if (w.empty())
        return "1";
    std::string out;
    const auto& ls = w.letters();
    for (std::size_t i = 0; i < ls.size();) {
        std::size_t j = i;
        while (j < ls.size() && ls[j] == ls[i])
            ++j;
        if (!out.empty())
            out += ' ';
        out += opt.symbol;
        out += std::to_string(ls[i].index);
        if (opt.show_tags)
            out += "{" + std::to_string(ls[i].tag) + "}";
        if (j - i > 1)
            out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

inline std::string format_monomial(const CommutativeMonomial& m, const FormatOptions& opt = {})
{
    if (m.exponents().empty())
        return "1";
    std::string out;
    for (const auto& [i, e] : m.exponents()) {
        if (!out.empty())
            out += ' ';
        out += opt.symbol + std::to_string(i);
        if (e > 1)
            out += "^" + std::to_string(e);
    }
    return out;
}

namespace detail {

/// Joins "coefficient body" terms with signs: first term keeps a leading '-', the rest use " + "/" - ".
inline void append_term(std::string& out, const Rational& c, const std::string& body, bool body_is_unit)
{
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty())
        out += negative ? "-" : "";
    else
        out += negative ? " - " : " + ";
    if (body_is_unit)
        out += to_string(mag);
    else if (mag == 1)
        out += body;
    else
        out += to_string(mag) + " " + body;
}

} // namespace detail

/// With unit_as_scalar the unit basis element prints as its coefficient alone.
template <MonoidBasis B, class Fmt>
std::string format_poly(const Poly<B>& p, Fmt&& fmt, bool unit_as_scalar = true)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (const auto& [b, c] : p.terms())
        detail::append_term(out, c, fmt(b), unit_as_scalar && b == basis_traits<B>::unit());
    return out;
}

inline std::string format(const NCPoly& p, const FormatOptions& opt = {})
{
    return format_poly(p, [&](const Word& w) { return format_word(w, opt); });
}

inline std::string format(const CommPoly& p, const FormatOptions& opt = {})
{
    return format_poly(p, [&](const CommutativeMonomial& m) { return format_monomial(m, opt); });
}

/// Tensor terms print as `c x ⊗ y ⊗ ...`; `slot_fmt(slot, basis)` renders one factor.
template <MonoidBasis B, class Fmt>
std::string format_tensor(const Tensor<B>& t, Fmt&& slot_fmt)
{
    if (t.is_zero())
        return "0";
    std::string out;
    for (const auto& [key, c] : t.terms()) {
        std::string body;
        bool all_unit = true;
        for (std::size_t s = 0; s < key.size(); ++s) {
            if (s > 0)
                body += tensor_separator;
            body += slot_fmt(s, key[s]);
            all_unit = all_unit && key[s] == basis_traits<B>::unit();
        }
        // A coefficient in front of a tensor of units still needs the factors shown.
        detail::append_term(out, c, body, all_unit && key.empty());
    }
    return out;
}

inline std::string format(const TensorElement& t, const FormatOptions& opt = {})
{
    return format_tensor(t, [&](std::size_t, const Word& w) { return format_word(w, opt); });
}

/// Per-slot symbols, e.g. {'a','b'} for H^dif ⊗ H^inv.
inline std::string format_slots(const TensorElement& t, const std::vector<char>& symbols, bool show_tags = false)
{
    return format_tensor(t, [&](std::size_t s, const Word& w) {
        return format_word(w, FormatOptions{symbols.at(s), show_tags});
    });
}

inline std::string format(const CommTensor& t, const FormatOptions& opt = {})
{
    return format_tensor(t, [&](std::size_t, const CommutativeMonomial& m) { return format_monomial(m, opt); });
}

// ---------------------------------------------------------------------------------------------
// JSON

inline json word_to_json(const Word& w)
{
    json arr = json::array();
    for (const Letter& l : w.letters())
        arr.push_back({l.index, l.tag});
    return arr;
}

inline json to_json(const NCPoly& p)
{
    json terms = json::array();
    for (const auto& [w, c] : p.terms())
        terms.push_back({{"word", word_to_json(w)}, {"coeff", to_string(c)}});
    return {{"rank", 1}, {"terms", terms}};
}

/// Rank-r tensors list one word per slot under "words". Optional per-slot alphabet labels.
inline json to_json(const TensorElement& t, const std::vector<std::string>& alphabets = {})
{
    json terms = json::array();
    for (const auto& [key, c] : t.terms()) {
        json words = json::array();
        for (const Word& w : key)
            words.push_back(word_to_json(w));
        terms.push_back({{"words", words}, {"coeff", to_string(c)}});
    }
    json out = {{"rank", t.rank()}, {"terms", terms}};
    if (!alphabets.empty())
        out["alphabets"] = alphabets;
    return out;
}

inline json to_json(const CommTensor& t)
{
    json terms = json::array();
    for (const auto& [key, c] : t.terms()) {
        json slots = json::array();
        for (const auto& m : key) {
            json e = json::array();
            for (const auto& [i, x] : m.exponents())
                e.push_back({i, x});
            slots.push_back(e);
        }
        terms.push_back({{"monomials", slots}, {"coeff", to_string(c)}});
    }
    return {{"rank", t.rank()}, {"commutative", true}, {"terms", terms}};
}

inline Word word_from_json(const json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("word: expected an array of [index,tag] pairs");
    std::vector<Letter> ls;
    for (const auto& l : j) {
        if (!l.is_array() || l.size() != 2 || !l[0].is_number_integer() || !l[1].is_number_integer())
            throw std::invalid_argument("word: letters must be [index,tag] integer pairs");
        if (l[0].get<int>() < 0 || l[1].get<int>() < 1)
            throw std::invalid_argument("word: letter index must be >= 0 and tag >= 1");
        ls.push_back({l[0].get<int>(), l[1].get<int>()});
    }
    return Word(std::move(ls));
}

inline Rational coeff_from_json(const json& j)
{
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    if (!j.is_string())
        throw std::invalid_argument("coeff: expected a rational string");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("coeff: ") + e.what());
    }
}

inline NCPoly poly_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("terms"))
        throw std::invalid_argument("terms: missing");
    NCPoly p;
    for (const auto& term : j.at("terms")) {
        if (!term.contains("word"))
            throw std::invalid_argument("word: missing in term");
        if (!term.contains("coeff"))
            throw std::invalid_argument("coeff: missing in term");
        p.add_term(word_from_json(term.at("word")), coeff_from_json(term.at("coeff")));
    }
    return p;
}

inline TensorElement tensor_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("rank") || !j.at("rank").is_number_integer())
        throw std::invalid_argument("rank: missing or not an integer");
    const auto rank = j.at("rank").get<std::size_t>();
    if (rank == 1 && !j.at("terms").empty() && j.at("terms")[0].contains("word"))
        return TensorElement::from_poly(poly_from_json(j));
    TensorElement t(rank);
    for (const auto& term : j.at("terms")) {
        if (!term.contains("words") || !term.at("words").is_array() || term.at("words").size() != rank)
            throw std::invalid_argument("words: expected one word per slot");
        TensorElement::key_type key;
        for (const auto& w : term.at("words"))
            key.push_back(word_from_json(w));
        t.add_term(std::move(key), coeff_from_json(term.at("coeff")));
    }
    return t;
}

// ---------------------------------------------------------------------------------------------
// Text parser for the canonical form. Accepts any single-character generator symbol,
// optional tags `{t}`, powers `^k`, rational coefficients and `⊗` between slots.

namespace detail {

class TextParser {
public:
    explicit TextParser(std::string_view s) : s_(s) {}

    TensorElement parse_tensor()
    {
        TensorElement out(0);
        bool first = true;
        skip_ws();
        if (s_.substr(pos_) == "0")
            return TensorElement(1);
        while (!at_end()) {
            Rational sign = 1;
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            auto [c, key] = parse_term();
            if (first)
                out = TensorElement(key.size());
            first = false;
            out.add_term(std::move(key), sign * c);
            skip_ws();
        }
        if (first)
            fail("empty expression");
        return out;
    }

private:
    std::pair<Rational, TensorElement::key_type> parse_term()
    {
        skip_ws();
        Rational c = 1;
        TensorElement::key_type key;
        key.push_back(parse_slot(c));
        while (true) {
            skip_ws();
            if (!consume("⊗"))
                break;
            Rational extra = 1;
            key.push_back(parse_slot(extra));
            c *= extra;
        }
        return {c, key};
    }

    /// A slot is a product of letters, possibly preceded by a numeric factor.
    Word parse_slot(Rational& coeff)
    {
        std::vector<Letter> ls;
        bool any = false;
        while (true) {
            skip_ws();
            if (at_end())
                break;
            char ch = peek();
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                std::size_t start = pos_;
                while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/'))
                    ++pos_;
                coeff *= parse_rational(s_.substr(start, pos_ - start));
                any = true;
                continue;
            }
            if (!std::isalpha(static_cast<unsigned char>(ch)))
                break;
            ++pos_;
            Letter l{read_int(), 1};
            if (!at_end() && peek() == '{') {
                ++pos_;
                l.tag = read_int();
                expect('}');
            }
            int times = 1;
            if (!at_end() && peek() == '^') {
                ++pos_;
                times = read_int();
            }
            for (int i = 0; i < times; ++i)
                ls.push_back(l);
            any = true;
        }
        if (!any)
            fail("expected a factor");
        return Word(std::move(ls));
    }

    int read_int()
    {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (start == pos_)
            fail("expected an integer");
        return std::stoi(std::string(s_.substr(start, pos_ - start)));
    }

    bool consume(std::string_view tok)
    {
        if (s_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    void expect(char ch)
    {
        if (at_end() || peek() != ch)
            fail(std::string("expected '") + ch + "'");
        ++pos_;
    }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    char peek() const { return s_[pos_]; }
    bool at_end() const { return pos_ >= s_.size(); }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument("parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses e.g. "a2 ⊗ 1 + 1 ⊗ a2 + 2 a1 ⊗ a1". A bare "1" is the empty word.
inline TensorElement parse_tensor(std::string_view s)
{
    return detail::TextParser(s).parse_tensor();
}

/// Parses e.g. "-a3 + 2 a1 a2 + 3 a2 a1 - 5 a1^3".
inline NCPoly parse_poly(std::string_view s)
{
    TensorElement t = parse_tensor(s);
    if (t.rank() != 1)
        throw std::invalid_argument("parse_poly: expression has " + std::to_string(t.rank()) + " slots");
    return t.to_poly();
}

} // namespace nchopf
