#pragma once

#include <stdexcept>
#include <string>

namespace sketcheval {

// Error taxonomy shared by the library and the CLI.
// exit_code 1: bad inputs (files, formats, arguments); 2: numerical failure.
class eval_error : public std::runtime_error {
public:
    eval_error(std::string msg, int exit_code)
        : std::runtime_error(std::move(msg)), exit_code_(exit_code) {}
    int exit_code() const { return exit_code_; }

private:
    int exit_code_;
};

class input_error : public eval_error {
public:
    explicit input_error(std::string msg) : eval_error(std::move(msg), 1) {}
};

class format_error : public eval_error {
public:
    explicit format_error(std::string msg) : eval_error(std::move(msg), 1) {}
};

class argument_error : public eval_error {
public:
    explicit argument_error(std::string msg) : eval_error(std::move(msg), 1) {}
};

class numerical_error : public eval_error {
public:
    explicit numerical_error(std::string msg) : eval_error(std::move(msg), 2) {}
};

}  // namespace sketcheval
