#include "detlink/variable.hpp"

#include <cctype>

namespace detlink {

namespace {

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Parses "[i]" or "[i,j]" starting at pos; returns false on malformed input.
bool parse_indices(std::string_view s, std::size_t pos, int& i, int& j) {
    if (pos >= s.size() || s[pos] != '[')
        return false;
    ++pos;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        ++pos;
    if (pos == start)
        return false;
    i = std::stoi(std::string(s.substr(start, pos - start)));
    j = -1;
    if (pos < s.size() && s[pos] == ',') {
        ++pos;
        start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos == start)
            return false;
        j = std::stoi(std::string(s.substr(start, pos - start)));
    }
    return pos + 1 == s.size() && s[pos] == ']';
}

} // namespace

std::string VariableId::text() const {
    switch (role) {
    case VarRole::MatrixEntry:
        return "x[" + std::to_string(i) + "," + std::to_string(j) + "]";
    case VarRole::LinkEntry:
        return "u[" + std::to_string(i) + "," + std::to_string(j) + "]";
    case VarRole::ResidualEntry:
        return "w[" + std::to_string(i) + "," + std::to_string(j) + "]";
    case VarRole::Aux:
        return "@t[" + std::to_string(i) + "]";
    case VarRole::Plain:
        if (i >= 0)
            return base + "[" + std::to_string(i) + "]";
        return base;
    }
    return base;
}

std::optional<VariableId> VariableId::parse(std::string_view token) {
    if (token.empty())
        return std::nullopt;

    if (token.rfind("@t[", 0) == 0) {
        int i = -1, j = -1;
        if (!parse_indices(token, 2, i, j) || j != -1)
            return std::nullopt;
        return aux(i);
    }

    if (!is_ident_start(token[0]))
        return std::nullopt;
    std::size_t pos = 0;
    while (pos < token.size() && is_ident_char(token[pos]))
        ++pos;
    std::string name(token.substr(0, pos));

    if (pos == token.size())
        return named(std::move(name));

    int i = -1, j = -1;
    if (!parse_indices(token, pos, i, j))
        return std::nullopt;

    if (j >= 0) {
        if (name == "x")
            return matrix_entry(i, j);
        if (name == "u")
            return link_entry(i, j);
        if (name == "w")
            return residual_entry(i, j);
        return std::nullopt; // only x/u/w carry double indices
    }
    return plain(i, std::move(name));
}

} // namespace detlink
