#pragma once

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "sla/superalgebra.hpp"

namespace sla {

// A parsed algebra file: the algebra plus any golden `expect` lines it
// declares (key/value, both trimmed strings).
struct AlgebraFile {
    std::string path;
    SuperAlgebra parsed;
    std::vector<std::pair<std::string, std::string>> declared_expectations;
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok)
        out.push_back(tok);
    return out;
}

// Parses the right-hand side of a bracket line: a signed sum of terms
// `coef*label` where the coefficient is a rational `p/q` (or `p`), `1*` may
// be omitted, and a bare `0` denotes the zero bracket.
inline Vec parse_terms(const std::string& rhs, const std::map<std::string, std::size_t>& index,
                       std::size_t dim, const std::string& where) {
    Vec out(dim, Rat(0));
    std::string text = trim(rhs);
    if (text == "0")
        return out;
    // Normalize: ensure a leading sign, then split on +/- while keeping them.
    std::size_t pos = 0;
    bool first = true;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos >= text.size())
            break;
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            throw ParseError(where + ": expected '+' or '-' between terms");
        }
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
        std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
               text[pos] != '+' && text[pos] != '-')
            ++pos;
        std::string term = text.substr(start, pos - start);
        if (term.empty())
            throw ParseError(where + ": empty term");
        Rat coef(1);
        std::string label = term;
        const auto star = term.find('*');
        if (star != std::string::npos) {
            coef = parse_rat(term.substr(0, star));
            label = term.substr(star + 1);
        }
        auto it = index.find(label);
        if (it == index.end())
            throw UnknownLabel(where + ": unknown label '" + label + "'");
        out[it->second] += Rat(sign) * coef;
        first = false;
    }
    return out;
}

} // namespace detail

// Line-oriented text format:
//   algebra NAME
//   even x1 x2 ...
//   odd y1 y2 ...
//   [a,b] = c1*g1 + c2*g2
//   expect KEY = VALUE
//   # comment
// Exactly one orientation of each bracket may be given; the mirror follows
// from the sign rule. Errors carry the line number.
inline AlgebraFile parse_algebra_text(std::istream& in, const std::string& path) {
    AlgebraFile file;
    file.path = path;
    std::string name;
    std::vector<std::string> even_labels, odd_labels;
    bool seen_even = false, seen_odd = false;
    std::map<std::string, std::size_t> index;
    std::vector<BracketEntry> entries;
    std::map<std::pair<std::size_t, std::size_t>, bool> given;
    std::vector<std::string> pending_brackets;
    std::vector<std::size_t> pending_lines;

    std::string line;
    std::size_t lineno = 0;
    auto where = [&](std::size_t ln) { return path + ":" + std::to_string(ln); };
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = detail::trim(line);
        if (s.empty() || s[0] == '#')
            continue;
        if (s.rfind("algebra", 0) == 0 && (s.size() == 7 || std::isspace((unsigned char)s[7]))) {
            auto toks = detail::split_ws(s);
            if (toks.size() != 2)
                throw ParseError(where(lineno) + ": 'algebra' expects exactly one name");
            name = toks[1];
            continue;
        }
        if (s.rfind("even", 0) == 0 && (s.size() == 4 || std::isspace((unsigned char)s[4]))) {
            if (seen_even)
                throw ParseError(where(lineno) + ": duplicate 'even' line");
            seen_even = true;
            auto toks = detail::split_ws(s);
            even_labels.assign(toks.begin() + 1, toks.end());
            continue;
        }
        if (s.rfind("odd", 0) == 0 && (s.size() == 3 || std::isspace((unsigned char)s[3]))) {
            if (seen_odd)
                throw ParseError(where(lineno) + ": duplicate 'odd' line");
            seen_odd = true;
            auto toks = detail::split_ws(s);
            odd_labels.assign(toks.begin() + 1, toks.end());
            continue;
        }
        if (s.rfind("expect", 0) == 0) {
            const auto eq = s.find('=');
            if (eq == std::string::npos)
                throw ParseError(where(lineno) + ": 'expect' needs KEY = VALUE");
            std::string key = detail::trim(s.substr(6, eq - 6));
            std::string value = detail::trim(s.substr(eq + 1));
            if (key.empty())
                throw ParseError(where(lineno) + ": empty expect key");
            file.declared_expectations.emplace_back(key, value);
            continue;
        }
        if (s[0] == '[') {
            pending_brackets.push_back(s);
            pending_lines.push_back(lineno);
            continue;
        }
        throw ParseError(where(lineno) + ": unrecognized line '" + s + "'");
    }

    const std::size_t n = even_labels.size(), m = odd_labels.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (index.count(even_labels[i]))
            throw ParseError(path + ": duplicate label '" + even_labels[i] + "'");
        index[even_labels[i]] = i;
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (index.count(odd_labels[i]))
            throw ParseError(path + ": duplicate label '" + odd_labels[i] + "'");
        index[odd_labels[i]] = n + i;
    }

    for (std::size_t b = 0; b < pending_brackets.size(); ++b) {
        const std::string& s = pending_brackets[b];
        const std::string loc = where(pending_lines[b]);
        const auto close = s.find(']');
        const auto comma = s.find(',');
        if (close == std::string::npos || comma == std::string::npos || comma > close)
            throw ParseError(loc + ": malformed bracket line");
        std::string la = detail::trim(s.substr(1, comma - 1));
        std::string lb = detail::trim(s.substr(comma + 1, close - comma - 1));
        const auto eq = s.find('=', close);
        if (eq == std::string::npos)
            throw ParseError(loc + ": bracket line missing '='");
        auto ita = index.find(la);
        if (ita == index.end())
            throw UnknownLabel(loc + ": unknown label '" + la + "'");
        auto itb = index.find(lb);
        if (itb == index.end())
            throw UnknownLabel(loc + ": unknown label '" + lb + "'");
        const std::size_t ia = ita->second, ib = itb->second;
        if (given.count({ia, ib}) || given.count({ib, ia}))
            throw DuplicateBracket(loc + ": bracket [" + la + "," + lb +
                                   "] (or its mirror) given twice");
        given[{ia, ib}] = true;
        Vec value = detail::parse_terms(s.substr(eq + 1), index, n + m, loc);
        // Parity of the target must match the parity of the pair.
        const int want = ((ia < n ? 0 : 1) + (ib < n ? 0 : 1)) % 2;
        for (std::size_t t = 0; t < n + m; ++t)
            if (value[t] != 0 && (t < n ? 0 : 1) != want)
                throw ParityMismatch(loc + ": target parity inconsistent in [" + la + "," + lb + "]");
        if (ia == ib && ia < n && !vec_is_zero(value))
            throw ParityMismatch(loc + ": [" + la + "," + la + "] must vanish for an even element");
        entries.push_back({ia, ib, std::move(value)});
    }

    std::vector<std::string> labels = even_labels;
    labels.insert(labels.end(), odd_labels.begin(), odd_labels.end());
    file.parsed = make_superalgebra(n, m, entries, labels, name);
    return file;
}

inline AlgebraFile parse_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError(path + ": cannot open file");
    return parse_algebra_text(in, path);
}

// Serializes one orientation of every nonzero bracket: even pairs i < j,
// then even-odd, then odd pairs i <= j, in basis order. Round-trips exactly.
inline std::string serialize_algebra(const SuperAlgebra& a,
                                     const std::vector<std::pair<std::string, std::string>>&
                                         expectations = {}) {
    std::ostringstream out;
    out << "algebra " << (a.name.empty() ? std::string("unnamed") : a.name) << "\n";
    out << "even";
    for (std::size_t i = 0; i < a.n; ++i)
        out << " " << a.labels[i];
    out << "\n";
    out << "odd";
    for (std::size_t i = 0; i < a.m; ++i)
        out << " " << a.labels[a.n + i];
    out << "\n";
    auto write_value = [&](const Vec& v) {
        bool first = true;
        for (std::size_t t = 0; t < a.dim(); ++t) {
            if (v[t] == 0)
                continue;
            Rat c = v[t];
            if (first) {
                if (c < 0) {
                    out << "-";
                    c = -c;
                }
            } else {
                out << (c < 0 ? " - " : " + ");
                if (c < 0)
                    c = -c;
            }
            if (c != 1)
                out << rat_str(c) << "*";
            out << a.labels[t];
            first = false;
        }
        if (first)
            out << "0";
    };
    auto write_pair = [&](std::size_t i, std::size_t j) {
        const Vec& v = a.table[i][j];
        if (vec_is_zero(v))
            return;
        out << "[" << a.labels[i] << "," << a.labels[j] << "] = ";
        write_value(v);
        out << "\n";
    };
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t j = i + 1; j < a.n; ++j)
            write_pair(i, j);
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t j = a.n; j < a.dim(); ++j)
            write_pair(i, j);
    for (std::size_t i = a.n; i < a.dim(); ++i)
        for (std::size_t j = i; j < a.dim(); ++j)
            write_pair(i, j);
    for (const auto& [k, v] : expectations)
        out << "expect " << k << " = " << v << "\n";
    return out.str();
}

} // namespace sla
