#pragma once

#include <stdexcept>

namespace lextab {

/// Thrown when a request exceeds the configured degree cap.
class size_limit_error : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Degree cap for composition/matrix indexing (default 12, or the value of
/// the LEXTAB_MAX_DEGREE environment variable when set).
int degree_cap();
void set_degree_cap(int cap);

/// Throws size_limit_error if n exceeds the cap.
void check_degree_cap(int n, const char* what);

/// Worker count for library-level parallel enumeration. 1 = sequential,
/// 0 = hardware concurrency. Results are independent of this setting.
int parallelism();
void set_parallelism(int threads);

} // namespace lextab
