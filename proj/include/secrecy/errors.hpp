// SPDX-License-Identifier: Apache-2.0
//
// secrecy-lab: average secrecy capacity of V2V links under interference
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef SECRECY_ERRORS_HPP
#define SECRECY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace secrecy
{

// Invalid configuration or parameter record (CLI exit code 2).
class ParameterError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// A series or quadrature did not reach its tolerance (CLI exit code 3).
class ConvergenceError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace secrecy

#endif
