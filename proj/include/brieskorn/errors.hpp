#pragma once

#include <stdexcept>
#include <string>

namespace brieskorn {

// Failure categories. The first group are precondition violations on user
// input; the second group ("violation"/"failure" suffixes) signal that an
// internal identity did not hold and indicate a bug upstream.
enum class Errc {
    not_pairwise_coprime,
    exponent_too_small,
    too_few_exponents,
    not_prime,
    prime_does_not_divide,
    degenerate_base,
    prime_divides_exponent,
    prime_divides_product,
    not_in_semigroup,
    out_of_range,
    unsupported_case,
    unsupported_scenario,
    action_free_on_summand,
    empty_reduced,
    profile_too_large,

    integrality_violation,
    parity_violation,
    negative_difference,
    negative_bound,
    cross_check_failure,
    property_violation,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace brieskorn
