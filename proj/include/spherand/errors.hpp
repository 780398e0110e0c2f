#ifndef SPHERAND_ERRORS_HPP
#define SPHERAND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spherand {

// Malformed user input (bad chord word, bad file, bad config). CLI exit code 1.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A rule or constructive operation was asked to run where its precondition
// fails. The reduction engine treats this as a rule miss, not a failure.
struct not_applicable : std::runtime_error {
    explicit not_applicable(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal invariant was violated. CLI exit code 2.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace spherand

#endif
