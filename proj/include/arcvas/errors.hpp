#pragma once

#include <stdexcept>
#include <string>

namespace arcvas {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };
struct SplitError : Error { using Error::Error; };
struct SizeError : Error { using Error::Error; };
struct MetadataError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct ShapeError : Error { using Error::Error; };
struct TrainingError : Error { using Error::Error; };
struct SolverError : Error { using Error::Error; };
struct RankError : Error { using Error::Error; };
struct ConvergenceError : Error { using Error::Error; };
struct LookupError : Error { using Error::Error; };

} // namespace arcvas
