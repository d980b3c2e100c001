#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace origami {

/// Base of every error raised by the library. `code()` is a short
/// machine-readable identifier (used verbatim by the CLI).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// Structurally malformed input: wrong array length, out-of-range entry.
class MalformedInput : public Error {
public:
    explicit MalformedInput(const std::string& msg) : Error("malformed_input", msg) {}
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& msg) : Error("invalid_argument", msg) {}
};

class InvalidDessin : public Error {
public:
    explicit InvalidDessin(const std::string& msg) : Error("invalid_dessin", msg) {}
};

class FaceDegreeMismatch : public Error {
public:
    explicit FaceDegreeMismatch(const std::string& msg) : Error("face_degree_mismatch", msg) {}
};

class NotSquareTiling : public Error {
public:
    explicit NotSquareTiling(const std::string& msg) : Error("not_square_tiling", msg) {}
};

/// The corner graph has an odd cycle. `witness()` is a closed walk of odd
/// length through vertex ids (first == last).
class NonBipartite : public Error {
public:
    NonBipartite(const std::string& msg, std::vector<std::size_t> witness)
        : Error("non_bipartite", msg), witness_(std::move(witness)) {}

    const std::vector<std::size_t>& witness() const noexcept { return witness_; }

private:
    std::vector<std::size_t> witness_;
};

class InconsistentLabels : public Error {
public:
    explicit InconsistentLabels(const std::string& msg) : Error("inconsistent_labels", msg) {}
};

class InvalidTricoloring : public Error {
public:
    explicit InvalidTricoloring(const std::string& msg) : Error("invalid_tricoloring", msg) {}
};

class InconsistentPassport : public Error {
public:
    explicit InconsistentPassport(const std::string& msg) : Error("inconsistent_passport", msg) {}
};

class InvalidWord : public Error {
public:
    explicit InvalidWord(const std::string& msg) : Error("invalid_word", msg) {}
};

class CutCrossing : public Error {
public:
    explicit CutCrossing(const std::string& msg) : Error("cut_crossing", msg) {}
};

class SingularPoint : public Error {
public:
    explicit SingularPoint(const std::string& msg) : Error("singular_point", msg) {}
};

class NonConvergence : public Error {
public:
    explicit NonConvergence(const std::string& msg) : Error("non_convergence", msg) {}
};

class OutsideImage : public Error {
public:
    explicit OutsideImage(const std::string& msg) : Error("outside_image", msg) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error("parse_error", msg) {}
};

}  // namespace origami
