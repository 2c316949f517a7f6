#pragma once

#include <stdexcept>
#include <string>

namespace qv {

// Base of every error raised by the engine.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class not_invertible : public error {
public:
    using error::error;
};

class fractional_sign_substitution : public error {
public:
    using error::error;
};

class order_beyond_truncation : public error {
public:
    using error::error;
};

class divergent_product : public error {
public:
    using error::error;
};

class divergent_sum : public error {
public:
    using error::error;
};

class non_generic_parameters : public error {
public:
    using error::error;
};

class formal_pole : public error {
public:
    using error::error;
};

class unknown_pair : public error {
public:
    using error::error;
};

class unknown_entry : public error {
public:
    using error::error;
};

class undeclared_symbol : public error {
public:
    using error::error;
};

class unknown_function : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    parse_error(const std::string &what, std::size_t pos)
        : error(what + " at position " + std::to_string(pos)), pos_(pos)
    {
    }

    std::size_t position() const noexcept
    {
        return pos_;
    }

private:
    std::size_t pos_;
};

} // namespace qv
