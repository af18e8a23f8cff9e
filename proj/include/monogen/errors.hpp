#ifndef MONOGEN_ERRORS_HPP
#define MONOGEN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace monogen {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// caller violated a documented precondition
struct precondition_failed : error {
    explicit precondition_failed(const std::string& what) : error(what) {}
};

// invariant-order table came out non-integral; indicates a bug, not bad input
struct non_integral_table : error {
    explicit non_integral_table(const std::string& what) : error(what) {}
};

struct degenerate_discriminant : error {
    explicit degenerate_discriminant(const std::string& what) : error(what) {}
};

// a count exceeded a proven upper bound; the computation itself is broken
struct sanity_violation : error {
    explicit sanity_violation(const std::string& what) : error(what) {}
};

struct no_feasible_r : error {
    explicit no_feasible_r(const std::string& what) : error(what) {}
};

struct usage_error : error {
    explicit usage_error(const std::string& what) : error(what) {}
};

}

#endif
