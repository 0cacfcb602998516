#ifndef FZETA_ERROR_HPP
#define FZETA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fzeta
{

// Base class for every error raised by the library.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Raised on a violated precondition (division by zero, non-monic input, ...).
class domain_error : public error
{
public:
    using error::error;
};

// Raised when a truncated computation cannot certify the requested number of terms.
class precision_error : public error
{
public:
    precision_error(const std::string &what, long achieved, long required)
        : error(what + " (achieved " + std::to_string(achieved) + ", required " + std::to_string(required) + ")"),
          achieved_(achieved), required_(required)
    {
    }
    long achieved() const noexcept
    {
        return achieved_;
    }
    long required() const noexcept
    {
        return required_;
    }

private:
    long achieved_;
    long required_;
};

} // namespace fzeta

#endif
