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

#ifndef WEILCAT_DSL_HPP
#define WEILCAT_DSL_HPP

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "natural.hpp"
#include "space.hpp"
#include "text.hpp"
#include "weil.hpp"

namespace weilcat {

// ---------------------------------------------------------------------------
// Printing of space functors: `*`, `X1^X2 v X2`, tuples as `(a, b)`.

inline std::string to_text(const SmashWord &w) {
	std::string out;
	for (auto v : w.letters())
		out += (out.empty() ? "X" : "^X") + std::to_string(v + 1);
	return out;
}

inline std::string to_text(const WedgeSum &s) {
	if (s.is_point())
		return "*";
	std::string out;
	for (const auto &[w, c] : s.counts())
		for (Natural k = 0; k < c; ++k)
			out += (out.empty() ? "" : " v ") + to_text(w);
	return out;
}

inline std::string to_text(const SpaceFunctor &f) {
	if (f.out_arity() == 1)
		return to_text(f.component(0));
	std::string out = "(";
	for (std::size_t i = 0; i < f.out_arity(); ++i)
		out += (i ? ", " : "") + to_text(f.component(i));
	return out + ")";
}

// ---------------------------------------------------------------------------
// Parsing. Whitespace between tokens is ignored; `x12` and `X3` are single tokens.

namespace detail {

class Cursor {
  public:
	explicit Cursor(std::string_view text) : text_(text) {}

	std::size_t pos() {
		skip();
		return pos_;
	}
	bool done() { return pos() == text_.size(); }
	bool peek(char c) { return !done() && text_[pos_] == c; }
	bool peek(std::string_view s) { return text_.substr(pos(), s.size()) == s; }

	bool accept(std::string_view s) {
		if (!peek(s))
			return false;
		pos_ += s.size();
		return true;
	}
	void expect(std::string_view s) {
		if (!accept(s))
			fail("expected '" + std::string(s) + "'" + found());
	}

	bool peek_digit() { return !done() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

	/// Digits starting exactly at the current position.
	std::pair<Natural, std::size_t> nat() {
		const auto start = pos();
		auto end = start;
		while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end])))
			++end;
		if (end == start)
			fail("expected a natural number" + found());
		pos_ = end;
		return {Natural(std::string(text_.substr(start, end - start))), start};
	}

	/// `<letter><digits>` with no space in between; returns the 1-based index.
	std::pair<Natural, std::size_t> indexed(char letter) {
		const auto start = pos();
		if (!peek(letter))
			fail(std::string("expected ") + letter + "<n>" + found());
		++pos_;
		if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
			fail(std::string("expected digits after '") + letter + "'");
		auto [n, at] = nat();
		(void)at;
		return {n, start};
	}

	void finish() {
		if (!done())
			fail("unexpected trailing input" + found());
	}

	[[noreturn]] void fail(const std::string &what) { throw ParseError(ParseErrorKind::syntax, pos(), what); }

	std::string found() {
		if (done())
			return ", found end of input";
		return ", found '" + std::string(1, text_[pos_]) + "'";
	}

  private:
	void skip() {
		while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
			++pos_;
	}

	std::string_view text_;
	std::size_t pos_ = 0;
};

inline WeilAlgebra parse_algebra(Cursor &c) {
	if (c.accept("N"))
		return WeilAlgebra();
	std::vector<std::size_t> widths;
	do {
		c.expect("W");
		std::size_t width = 1;
		if (c.accept("^")) {
			auto [n, at] = c.nat();
			if (n == 0 || n > 64)
				throw ParseError(ParseErrorKind::syntax, at, "block width must be between 1 and 64");
			width = to_size(n);
		}
		widths.push_back(width);
	} while (c.accept("@"));
	return WeilAlgebra(std::move(widths));
}

/// A generator `x<n>` of `a`, returned 0-based.
inline Generator parse_generator(Cursor &c, const WeilAlgebra &a, const char *role) {
	auto [n, at] = c.indexed('x');
	if (n == 0 || n > a.generator_count())
		throw ParseError(ParseErrorKind::index_out_of_range, at,
		                 "x" + n.str() + " is not a generator of the " + role + " " + to_text(a) + " (it has " +
		                     std::to_string(a.generator_count()) + ")");
	return to_size(n) - 1;
}

inline Element parse_element(Cursor &c, const WeilAlgebra &a, const char *role = "algebra") {
	Element out(a);
	if (c.peek_digit()) {
		// "0" on its own is the zero element.
		Cursor probe = c;
		auto [n, at] = probe.nat();
		if (n == 0 && !probe.peek('*')) {
			c = probe;
			return out;
		}
	}
	do {
		Natural coef = 1;
		if (c.peek_digit()) {
			coef = c.nat().first;
			c.expect("*");
		}
		std::vector<Generator> raw{parse_generator(c, a, role)};
		while (c.peek("*")) {
			c.accept("*");
			raw.push_back(parse_generator(c, a, role));
		}
		if (auto m = normalize_monomial(a, raw); m && coef != 0)
			out += Element::monomial(a, *m, coef);
	} while (c.accept("+"));
	return out;
}

struct MorphismOptions {
	/// Reject candidates that fail check_hom; off for check-hom itself.
	bool require_hom = true;
};

inline WeilMorphism parse_morphism(Cursor &c, MorphismOptions opts = {}) {
	const auto start = c.pos();
	c.expect("[");
	auto src = parse_algebra(c);
	c.expect("->");
	auto tgt = parse_algebra(c);
	c.expect("]");
	c.expect("{");
	std::vector<std::optional<Element>> images(src.generator_count());
	if (!c.peek("}")) {
		do {
			const auto at = c.pos();
			const auto g = parse_generator(c, src, "source");
			if (images[g])
				throw ParseError(ParseErrorKind::duplicate_assignment, at, "x" + std::to_string(g + 1) + " is assigned twice");
			c.expect("->");
			images[g] = parse_element(c, tgt, "target");
		} while (c.accept(";"));
	}
	const auto close = c.pos();
	c.expect("}");
	std::vector<Element> out;
	for (std::size_t g = 0; g < images.size(); ++g) {
		if (!images[g])
			throw ParseError(ParseErrorKind::missing_generator, close, "no image given for x" + std::to_string(g + 1));
		out.push_back(std::move(*images[g]));
	}
	auto phi = WeilMorphism::unchecked(src, tgt, std::move(out));
	if (opts.require_hom)
		if (auto h = check_hom(phi); !h.ok)
			throw ParseError(ParseErrorKind::not_a_homomorphism, start,
			                 "x" + std::to_string(h.witness->first + 1) + " * x" + std::to_string(h.witness->second + 1) +
			                     " = 0 in the source but the images multiply to " +
			                     to_text(phi.image(h.witness->first) * phi.image(h.witness->second)));
	return phi;
}

inline WedgeSum parse_wedge(Cursor &c, const WeilAlgebra &vars) {
	WedgeSum out;
	if (c.accept("*"))
		return out;
	do {
		std::vector<Variable> letters;
		do {
			auto [n, at] = c.indexed('X');
			if (n == 0 || n > vars.generator_count())
				throw ParseError(ParseErrorKind::index_out_of_range, at,
				                 "X" + n.str() + " is not one of the " + std::to_string(vars.generator_count()) +
				                     " variables");
			letters.push_back(to_size(n) - 1);
		} while (c.accept("^"));
		out.add(SmashWord(std::move(letters)));
	} while (c.accept("v"));
	return out;
}

inline SpaceFunctor parse_space(Cursor &c, const WeilAlgebra &vars) {
	std::vector<WedgeSum> components;
	if (c.accept("(")) {
		if (!c.peek(")"))
			do
				components.push_back(parse_wedge(c, vars));
			while (c.accept(","));
		c.expect(")");
	} else {
		components.push_back(parse_wedge(c, vars));
	}
	return SpaceFunctor(vars, std::move(components));
}

template <class F>
auto parse_whole(std::string_view text, F &&f) {
	Cursor c(text);
	auto out = f(c);
	c.finish();
	return out;
}

} // namespace detail

inline WeilAlgebra parse_algebra(std::string_view text) {
	return detail::parse_whole(text, [](detail::Cursor &c) { return detail::parse_algebra(c); });
}

inline Element parse_element(std::string_view text, const WeilAlgebra &ambient) {
	return detail::parse_whole(text, [&](detail::Cursor &c) { return detail::parse_element(c, ambient); });
}

inline WeilMorphism parse_morphism(std::string_view text, detail::MorphismOptions opts = {}) {
	return detail::parse_whole(text, [&](detail::Cursor &c) { return detail::parse_morphism(c, opts); });
}

/// `vars` supplies the variables X1..Xn and the blocks that relate them.
inline SpaceFunctor parse_space(std::string_view text, const WeilAlgebra &vars) {
	return detail::parse_whole(text, [&](detail::Cursor &c) { return detail::parse_space(c, vars); });
}

using ParsedTerm = std::variant<WeilAlgebra, Element, WeilMorphism, SpaceFunctor>;

/// Classifies by leading token: `[` a morphism, `N`/`W` an algebra, `X`, `*`
/// or `(` a space functor over `context`, anything else an element of `context`.
inline ParsedTerm parse_term(std::string_view text, const WeilAlgebra &context = WeilAlgebra()) {
	detail::Cursor c(text);
	if (c.peek("["))
		return parse_morphism(text);
	if (c.peek("N") || c.peek("W"))
		return parse_algebra(text);
	if (c.peek("X") || c.peek("*") || c.peek("("))
		return parse_space(text, context);
	return parse_element(text, context);
}

inline std::string to_text(const ParsedTerm &t) {
	return std::visit([](const auto &v) { return to_text(v); }, t);
}

} // namespace weilcat

#endif
