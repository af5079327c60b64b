#pragma once

#include <stdexcept>
#include <string>

namespace har {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dimension/shape mismatch; the message names the offending axis.
struct ShapeError : Error {
    using Error::Error;
};

// Invalid experiment configuration or model build precondition.
struct ConfigError : Error {
    using Error::Error;
};

// API misuse, e.g. backward on an empty graph.
struct StateError : Error {
    using Error::Error;
};

// Bad numeric input: off-simplex targets, non-finite activations.
struct ValueError : Error {
    using Error::Error;
};

// File and format problems; the message carries file/line context.
struct IoError : Error {
    using Error::Error;
};

// Training aborted (non-finite loss); the message carries step diagnostics.
struct TrainingError : Error {
    using Error::Error;
};

}  // namespace har
