/* Copyright (C) 2026 the circulant authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <stdexcept>

namespace circulant {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZeroPoly : Error { using Error::Error; };
struct NotDivisible : Error { using Error::Error; };
struct NotMonic : Error { using Error::Error; };
struct AllZero : Error { using Error::Error; };
struct NotProperDivisor : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct OracleBoundExceeded : Error { using Error::Error; };
struct NotDivisibleByPhiN : Error { using Error::Error; };
struct DegreeTooLarge : Error { using Error::Error; };
struct NotTwoPrimeOrder : Error { using Error::Error; };
struct CoefficientsOutOfRange : Error { using Error::Error; };
struct NotSameF : Error { using Error::Error; };
struct NoDeltaExists : Error { using Error::Error; };
struct NoSingularGuarantee : Error { using Error::Error; };
struct EnumerationTooLarge : Error { using Error::Error; };

}  // namespace circulant
