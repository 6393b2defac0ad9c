#pragma once

#include <stdexcept>
#include <string>

namespace tensorwalk {

/// Two routes that must agree did not, or an identity that must hold exactly
/// failed. Always indicates a bug.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class invalid_input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Requested n exceeds the practical bound for character-table work.
class size_limit_error : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Monte Carlo over a field we cannot do arithmetic in (q not prime).
class unsupported_field_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// GL(1,2): the walk has a single state and the separation formulas do not apply.
class excluded_case_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace tensorwalk
