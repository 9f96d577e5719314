#include "popov/error.hpp"

namespace popov {

const char* errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::invalid_pair: return "invalid-pair";
    case Errc::smooth_case_unsupported: return "smooth-case-unsupported";
    case Errc::bound_failure: return "bound-failure";
    case Errc::not_in_lattice: return "not-in-lattice";
    case Errc::empty_fiber: return "empty-fiber";
    case Errc::precondition_failure: return "precondition-failure";
    case Errc::out_of_range: return "out-of-range";
    case Errc::budget_exceeded: return "budget-exceeded";
    case Errc::consistency_failure: return "consistency-failure";
    }
    return "unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace popov
