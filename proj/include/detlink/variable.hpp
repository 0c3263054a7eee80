#ifndef DETLINK_VARIABLE_HPP
#define DETLINK_VARIABLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace detlink {

/// Role of a variable inside a ring. Matrix entries are the x[i,j] of a
/// generic matrix, link entries the u[i,j] adjoined for links and residual
/// intersections, residual entries the w[i,j] of transposed constructions.
/// Aux variables are internal (elimination, radical membership) and print
/// with a reserved '@' prefix so they can never collide with user input.
enum class VarRole : std::uint8_t {
    MatrixEntry,
    LinkEntry,
    ResidualEntry,
    Plain,
    Aux,
};

struct VariableId {
    VarRole role = VarRole::Plain;
    std::string base;  // only for Plain; "x"/"u"/"w" are implied by the role
    int i = -1;        // first index (1-based), -1 when absent
    int j = -1;        // second index (1-based), -1 when absent

    static VariableId matrix_entry(int i, int j) { return {VarRole::MatrixEntry, "", i, j}; }
    static VariableId link_entry(int i, int j) { return {VarRole::LinkEntry, "", i, j}; }
    static VariableId residual_entry(int i, int j) { return {VarRole::ResidualEntry, "", i, j}; }
    static VariableId plain(int k, std::string base = "x") { return {VarRole::Plain, std::move(base), k, -1}; }
    static VariableId named(std::string name) { return {VarRole::Plain, std::move(name), -1, -1}; }
    static VariableId aux(int k) { return {VarRole::Aux, "", k, -1}; }

    /// Textual form, e.g. "x[1,2]", "u[2,1]", "x[3]", "y", "@t[1]".
    std::string text() const;

    /// Parse one variable token; nullopt if the token is not a variable.
    static std::optional<VariableId> parse(std::string_view token);

    bool operator==(const VariableId& other) const = default;
};

} // namespace detlink

#endif
