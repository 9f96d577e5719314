#pragma once

#include <stdexcept>
#include <string>

namespace popov {

enum class Errc {
    invalid_argument,
    invalid_pair,
    smooth_case_unsupported,
    bound_failure,
    not_in_lattice,
    empty_fiber,
    precondition_failure,
    out_of_range,
    budget_exceeded,
    consistency_failure,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what);
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace popov
