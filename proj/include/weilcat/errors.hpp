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

/**
 * @file
 *
 * Exception types shared by the whole library.
 *
 * Three failure classes are distinguished. An InputError is raised when the
 * caller hands in data that violates a precondition (mismatched ambients,
 * non-composable morphisms, a cone that does not commute). A ParseError is an
 * InputError carrying a column. An AlgorithmError signals a broken internal
 * invariant and should never escape a correct build.
 */

#ifndef WEILCAT_ERRORS_HPP
#define WEILCAT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weilcat {

class InputError : public std::invalid_argument {
  public:
	using std::invalid_argument::invalid_argument;
};

class AlgorithmError : public std::logic_error {
  public:
	using std::logic_error::logic_error;
};

/// Raised when the summand decomposition of a composite contradicts the
/// algebra (a complement summand without an annihilating pair).
class StructuralViolation : public AlgorithmError {
  public:
	using AlgorithmError::AlgorithmError;
};

enum class ParseErrorKind {
	syntax,
	duplicate_assignment,
	missing_generator,
	index_out_of_range,
	not_a_homomorphism,
	arity_mismatch,
};

inline const char *to_string(ParseErrorKind kind) noexcept {
	switch (kind) {
	case ParseErrorKind::syntax: return "syntax error";
	case ParseErrorKind::duplicate_assignment: return "duplicate assignment";
	case ParseErrorKind::missing_generator: return "missing generator";
	case ParseErrorKind::index_out_of_range: return "index out of range";
	case ParseErrorKind::not_a_homomorphism: return "not a homomorphism";
	case ParseErrorKind::arity_mismatch: return "arity mismatch";
	}
	return "error";
}

class ParseError : public InputError {
  public:
	ParseError(ParseErrorKind kind, std::size_t column, const std::string &detail)
	    : InputError(std::string(to_string(kind)) + " at column " + std::to_string(column + 1) + ": " + detail),
	      kind_(kind), column_(column) {}

	ParseErrorKind kind() const noexcept { return kind_; }
	/// Zero-based offset into the parsed text.
	std::size_t column() const noexcept { return column_; }
	bool is_semantic() const noexcept { return kind_ != ParseErrorKind::syntax; }

  private:
	ParseErrorKind kind_;
	std::size_t column_;
};

} // namespace weilcat

#endif
