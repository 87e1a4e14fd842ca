#pragma once

#include <stdexcept>
#include <string>

namespace tmatch {

/// Bad arguments to a generator or counting function (domain violation).
class invalid_parameters : public std::invalid_argument {
public:
    explicit invalid_parameters(const std::string& what)
        : std::invalid_argument(what) {}
};

/// A constructed or parsed object breaks a structural invariant
/// (wrong cardinality, duplicate set, element out of range).
class invariant_violation : public std::runtime_error {
public:
    explicit invariant_violation(const std::string& what)
        : std::runtime_error(what) {}
};

/// Malformed input text. Carries a location when one is known.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, int line = 0, std::string field = {})
        : std::runtime_error(format(what, line, field)),
          line_(line),
          field_(std::move(field)) {}

    int line() const noexcept { return line_; }
    const std::string& field() const noexcept { return field_; }

private:
    static std::string format(const std::string& what, int line, const std::string& field) {
        std::string msg = what;
        if (line > 0) msg += " (line " + std::to_string(line) + ")";
        if (!field.empty()) msg += " (field '" + field + "')";
        return msg;
    }

    int line_;
    std::string field_;
};

/// Precondition "family is t-intersecting" failed.
class not_t_intersecting : public std::runtime_error {
public:
    explicit not_t_intersecting(const std::string& what)
        : std::runtime_error(what) {}
};

/// A requested extremal construction cannot exist at these parameters.
class construction_infeasible : public std::runtime_error {
public:
    explicit construction_infeasible(const std::string& what)
        : std::runtime_error(what) {}
};

} // namespace tmatch
