#ifndef X3P_ERROR_HPP
#define X3P_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace x3p {

enum class errc {
    ok = 0,
    invalid_argument,
    non_prime,
    order_too_large,
    mixed_fields,
    bad_subfield_order,
    divisibility,
    not_subgroup,
    not_unit,
    not_sidon,
    difference_overlap,
    precondition,
    parse,
    io,
    budget_exceeded,
    internal,
};

class Error : public std::runtime_error {
public:
    Error(errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace x3p

#endif
