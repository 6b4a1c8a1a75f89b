#ifndef TENVAL_ERRORS_HPP
#define TENVAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tenval {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct BadParameter : Error {
    explicit BadParameter(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& what) : Error(what) {}
};

struct NotFullDimensional : Error {
    explicit NotFullDimensional(const std::string& what) : Error(what) {}
};

struct OriginNotInterior : Error {
    explicit OriginNotInterior(const std::string& what) : Error(what) {}
};

struct InvalidDoublePyramid : Error {
    explicit InvalidDoublePyramid(const std::string& what) : Error(what) {}
};

struct UnsupportedDimension : Error {
    explicit UnsupportedDimension(const std::string& what) : Error(what) {}
};

struct RankDeficient : Error {
    explicit RankDeficient(const std::string& what) : Error(what) {}
};

struct InsufficientSamples : Error {
    explicit InsufficientSamples(const std::string& what) : Error(what) {}
};

} // namespace tenval

#endif
