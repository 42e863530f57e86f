#pragma once

#include <stdexcept>
#include <string>

namespace pea {

// Errors caused by problem data (files, matrix contents, sizes) rather than
// by caller mistakes. The CLI maps these to exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pea
