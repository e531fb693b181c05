/*
   Copyright 2026 The cusp authors

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

#ifndef CUSP_ERRORS_HPP
#define CUSP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cusp {

/// Base class for every error the library throws on a violated
/// precondition or an unrepresentable request.
class Error : public std::runtime_error {
   public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

   private:
    std::string code_;
};

#define CUSP_DEFINE_ERROR(NAME)                                        \
    class NAME : public Error {                                        \
       public:                                                         \
        explicit NAME(const std::string& what) : Error(#NAME, what) {} \
    }

CUSP_DEFINE_ERROR(SingularMatrix);
CUSP_DEFINE_ERROR(DoesNotDescend);
CUSP_DEFINE_ERROR(UnsupportedType);
CUSP_DEFINE_ERROR(LatticeNotStable);
CUSP_DEFINE_ERROR(TooLarge);
CUSP_DEFINE_ERROR(NotCyclotomic);
CUSP_DEFINE_ERROR(NonElliptic);
CUSP_DEFINE_ERROR(CapExceeded);
CUSP_DEFINE_ERROR(ShapeMismatch);
CUSP_DEFINE_ERROR(ConstructionFailed);
CUSP_DEFINE_ERROR(FieldTooSmall);
CUSP_DEFINE_ERROR(UnknownKernel);
CUSP_DEFINE_ERROR(SpecError);
CUSP_DEFINE_ERROR(OracleInfeasible);
CUSP_DEFINE_ERROR(InternalError);

#undef CUSP_DEFINE_ERROR

}  // namespace cusp

#endif
