#pragma once

/**
 * @file errors.hpp
 * @brief Exception types shared by every module.
 *
 * Input and precondition problems derive from input_error; a violated
 * mathematical identity (which indicates an implementation bug, never a
 * property of honest data) derives from verification_failure. The CLI maps
 * the former to exit code 2 and the latter to exit code 1.
 */

#include <stdexcept>
#include <string>

namespace artin {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class input_error : public error {
public:
    using error::error;
};

class invalid_input : public input_error {
public:
    using input_error::input_error;
};

class precondition_violation : public input_error {
public:
    using input_error::input_error;
};

class enumeration_overflow : public input_error {
public:
    using input_error::input_error;
};

class absent_data : public input_error {
public:
    using input_error::input_error;
};

class refinement_failure : public error {
public:
    using error::error;
};

class bad_reduction : public input_error {
public:
    using input_error::input_error;
};

class invalid_place : public input_error {
public:
    using input_error::input_error;
};

class unsupported : public input_error {
public:
    using input_error::input_error;
};

class search_failure : public input_error {
public:
    using input_error::input_error;
};

class not_irreducible : public input_error {
public:
    using input_error::input_error;
};

class singular_parameter : public input_error {
public:
    using input_error::input_error;
};

class invalid_automorphism : public input_error {
public:
    using input_error::input_error;
};

class exhausted_search : public input_error {
public:
    using input_error::input_error;
};

class unmatched_prime : public input_error {
public:
    using input_error::input_error;
};

class inconsistent_tables : public input_error {
public:
    using input_error::input_error;
};

class invalid_conjugation_datum : public input_error {
public:
    using input_error::input_error;
};

class verification_failure : public error {
public:
    using error::error;
};

}  // namespace artin
