/*
 *   Copyright 2026 The weilcat Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef WEILCAT_NATURAL_HPP
#define WEILCAT_NATURAL_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace weilcat {

/// Arbitrary-precision coefficient type. Only non-negative values are ever
/// stored; subtraction is not part of the semiring.
using Natural = boost::multiprecision::cpp_int;

inline std::string to_string(const Natural &value) { return value.str(); }

inline Natural parse_natural(const std::string &digits) {
	if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
		throw InputError("not a natural number: '" + digits + "'");
	return Natural(digits);
}

/// Narrowing used when a multiplicity has to be enumerated summand by summand.
inline std::size_t to_size(const Natural &value) {
	if (value < 0 || value > Natural(std::numeric_limits<std::size_t>::max()))
		throw InputError("multiplicity too large to enumerate: " + value.str());
	return value.convert_to<std::size_t>();
}

} // namespace weilcat

#endif
