// Copyright 2026 The zxcut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZXCUT_ERROR_HPP
#define ZXCUT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace zxcut {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// The diagram violates a structural invariant (boundary degree, loops, ...).
class MalformedDiagram : public Error {
   public:
    using Error::Error;
};

/// A rewrite or cut was requested on a vertex that does not satisfy its precondition.
class PreconditionViolation : public Error {
   public:
    PreconditionViolation(const std::string& what, int vertex)
        : Error(what + " (vertex " + std::to_string(vertex) + ")"), vertex_(vertex) {}
    explicit PreconditionViolation(const std::string& what) : Error(what) {}

    int vertex() const noexcept { return vertex_; }

   private:
    int vertex_ = -1;
};

class SizeExceeded : public Error {
   public:
    using Error::Error;
};

class OpenDiagram : public Error {
   public:
    using Error::Error;
};

class NonConvergence : public Error {
   public:
    using Error::Error;
};

class PlanMismatch : public Error {
   public:
    using Error::Error;
};

class ParseError : public Error {
   public:
    using Error::Error;
};

}  // namespace zxcut

#endif  // ZXCUT_ERROR_HPP
