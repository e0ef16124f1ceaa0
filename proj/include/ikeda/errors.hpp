#pragma once

#include <stdexcept>
#include <string>

namespace ikeda {

/** Sign decision fell inside the rounding envelope; retry with more bits. */
struct PrecisionExhausted : std::runtime_error {
    explicit PrecisionExhausted(const std::string& what) : std::runtime_error(what) {}
};

/** Two formal roots collided under specialization. */
struct DegenerateSatake : std::domain_error {
    explicit DegenerateSatake(const std::string& what) : std::domain_error(what) {}
};

/** Operation needs numerator coefficient data that was not supplied. */
struct NumeratorDataRequired : std::runtime_error {
    explicit NumeratorDataRequired(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ikeda
