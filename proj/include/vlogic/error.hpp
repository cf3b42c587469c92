#ifndef VLOGIC_ERROR_HPP
#define VLOGIC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace vlogic {

/// Base of every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class dimension_mismatch : public error {
public:
    using error::error;
};

class not_unit_norm : public error {
public:
    using error::error;
};

class nearly_dependent : public error {
public:
    using error::error;
};

class unknown_name : public error {
public:
    using error::error;
};

class bad_epsilon : public error {
public:
    using error::error;
};

class q_too_small : public error {
public:
    using error::error;
};

class non_square : public error {
public:
    using error::error;
};

class no_convergence : public error {
public:
    using error::error;
};

class non_orthogonal_basis : public error {
public:
    using error::error;
};

class non_commuting : public error {
public:
    using error::error;
};

class series_not_converged : public error {
public:
    using error::error;
};

} // namespace vlogic

#endif // VLOGIC_ERROR_HPP
