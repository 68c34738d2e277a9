/*
   Copyright 2026 qpend developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QPEND_ERRORS_HPP
#define QPEND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qpend {

/// Error categories. Values match the status codes of the C API and the
/// process exit codes of the command line tool.
enum class errc {
    ok = 0,
    invalid_argument = 1,
    precision = 2,
    solver = 3,
    cache = 4,
    io = 5,
    buffer = 6,
    internal = 7,
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& what) : Error(errc::invalid_argument, what) {}
};

/// Requested tolerance or digit count is unreachable at the current working
/// precision; the caller must raise working_digits.
struct PrecisionError : Error {
    explicit PrecisionError(const std::string& what) : Error(errc::precision, what) {}
};

struct SolverError : Error {
    explicit SolverError(const std::string& what) : Error(errc::solver, what) {}
};

struct CacheError : Error {
    explicit CacheError(const std::string& what) : Error(errc::cache, what) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error(errc::io, what) {}
};

struct InternalError : Error {
    explicit InternalError(const std::string& what) : Error(errc::internal, what) {}
};

}  // namespace qpend

#endif
