#pragma once

#include <stdexcept>
#include <string>

namespace lstc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed presentation document. Carries a 1-based line/column position.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& msg, int line, int column)
        : Error("syntax error at " + std::to_string(line) + ":" + std::to_string(column) +
                ": " + msg),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

class DuplicateGeneratorError : public Error {
public:
    explicit DuplicateGeneratorError(const std::string& name)
        : Error("duplicate generator '" + name + "'"), name_(name) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

/// Generator degree is not a positive even integer.
class OddDegreeError : public Error {
public:
    OddDegreeError(const std::string& name, int degree)
        : Error("generator '" + name + "' has degree " + std::to_string(degree) +
                "; degrees must be positive even integers") {}
};

/// A relation mixes terms of different total degree.
class InhomogeneousRelationError : public Error {
public:
    InhomogeneousRelationError(const std::string& relation, int degree_a, int degree_b)
        : Error("inhomogeneous relation " + relation + ": term degrees " +
                std::to_string(degree_a) + " and " + std::to_string(degree_b) + " differ"),
          degree_a_(degree_a),
          degree_b_(degree_b) {}

    int degree_a() const { return degree_a_; }
    int degree_b() const { return degree_b_; }

private:
    int degree_a_;
    int degree_b_;
};

class UnknownGeneratorError : public Error {
public:
    explicit UnknownGeneratorError(const std::string& name)
        : Error("unknown generator '" + name + "'"), name_(name) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

class InvalidParameterError : public Error {
public:
    explicit InvalidParameterError(const std::string& msg) : Error(msg) {}
};

/// No max_degree was given and some generator could not be proven nilpotent.
class UnboundedAlgebraError : public Error {
public:
    explicit UnboundedAlgebraError(const std::string& msg) : Error(msg) {}
};

/// A computation left the materialized degree range of a user-capped algebra;
/// the result would be unreliable.
class TruncatedError : public Error {
public:
    explicit TruncatedError(const std::string& msg) : Error(msg) {}
};

}  // namespace lstc
