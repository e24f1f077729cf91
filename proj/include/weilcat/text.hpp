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
 * Canonical text rendering of Weil data. The output is accepted back by the
 * parsers in dsl.hpp:
 *
 *   algebra   N | W | W^2@W
 *   element   0 | 2*x1 + x2 + x1*x2
 *   morphism  [W^2 -> W@W]{ x1 -> x1*x2 ; x2 -> x2 }
 */

#ifndef WEILCAT_TEXT_HPP
#define WEILCAT_TEXT_HPP

#include <string>

#include "weil.hpp"

namespace weilcat {

inline std::string to_text(const WeilAlgebra &a) {
	if (a.is_unit())
		return "N";
	std::string out;
	for (std::size_t b = 0; b < a.block_count(); ++b) {
		if (b)
			out += '@';
		out += 'W';
		if (a.widths()[b] != 1)
			out += '^' + std::to_string(a.widths()[b]);
	}
	return out;
}

inline std::string to_text(const Monomial &m) {
	if (m.is_one())
		return "1";
	std::string out;
	for (std::size_t k = 0; k < m.degree(); ++k)
		out += (k ? "*x" : "x") + std::to_string(m.indices()[k] + 1);
	return out;
}

inline std::string to_text(const Element &e) {
	if (e.is_zero())
		return "0";
	std::string out;
	for (const auto &[m, c] : e.terms()) {
		if (!out.empty())
			out += " + ";
		if (c != 1)
			out += c.str() + '*';
		out += to_text(m);
	}
	return out;
}

inline std::string to_text(const WeilMorphism &phi) {
	std::string out = "[" + to_text(phi.source()) + " -> " + to_text(phi.target()) + "]{";
	for (std::size_t g = 0; g < phi.images().size(); ++g)
		out += (g ? " ; x" : " x") + std::to_string(g + 1) + " -> " + to_text(phi.images()[g]);
	out += phi.images().empty() ? "}" : " }";
	return out;
}

} // namespace weilcat

#endif
