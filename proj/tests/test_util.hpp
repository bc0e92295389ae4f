#ifndef MODPI_TEST_UTIL_HPP
#define MODPI_TEST_UTIL_HPP

#include <cstdlib>
#include <string>

namespace modpi_test {

inline std::string data_dir() {
    if (const char* env = std::getenv("MODPI_DATA")) return env;
    return "data";
}

} // namespace modpi_test

#endif
