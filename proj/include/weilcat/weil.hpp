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
 * Objects, elements and morphisms of the category of Weil N-algebras.
 *
 * A Weil algebra is N[x_1..x_n]/(x_i x_j | i ~ j) where ~ is the equivalence
 * relation of a block partition of {1..n}. Such an algebra is stored only as
 * its ordered list of block widths; two algebras are equal exactly when the
 * lists are. Generators are addressed by zero-based position; the text
 * syntax in dsl.hpp shifts to the familiar x1, x2, ...
 *
 * Because every relation is a quadratic monomial, the nonzero monomials form
 * an N-basis and an element is simply a finite map from nonzero monomials to
 * positive coefficients. Zero monomials are never stored, so structural
 * equality of the maps is equality in the algebra.
 */

#ifndef WEILCAT_WEIL_HPP
#define WEILCAT_WEIL_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "natural.hpp"

namespace weilcat {

using Generator = std::size_t;

class WeilAlgebra {
  public:
	/// The unit object N.
	WeilAlgebra() = default;

	explicit WeilAlgebra(std::vector<std::size_t> widths) : widths_(std::move(widths)) {
		for (std::size_t b = 0; b < widths_.size(); ++b) {
			if (widths_[b] == 0)
				throw InputError("Weil algebra block widths must be positive");
			block_start_.push_back(block_of_.size());
			block_of_.insert(block_of_.end(), widths_[b], b);
		}
	}

	static WeilAlgebra naturals() { return WeilAlgebra(); }
	/// W^n, a single indiscrete block; power(1) is W = N[x]/(x^2).
	static WeilAlgebra power(std::size_t n = 1) { return WeilAlgebra({n}); }

	const std::vector<std::size_t> &widths() const noexcept { return widths_; }
	std::size_t generator_count() const noexcept { return block_of_.size(); }
	std::size_t block_count() const noexcept { return widths_.size(); }
	bool is_unit() const noexcept { return widths_.empty(); }

	std::size_t block_of(Generator g) const {
		check(g);
		return block_of_[g];
	}
	std::size_t block_start(std::size_t block) const { return block_start_.at(block); }

	/// i ~ j, which includes i == j.
	bool related(Generator i, Generator j) const { return block_of(i) == block_of(j); }

	void check(Generator g) const {
		if (g >= block_of_.size())
			throw InputError("generator index " + std::to_string(g + 1) + " out of range (algebra has " +
			                 std::to_string(block_of_.size()) + " generators)");
	}

	friend bool operator==(const WeilAlgebra &a, const WeilAlgebra &b) noexcept { return a.widths_ == b.widths_; }
	friend auto operator<=>(const WeilAlgebra &a, const WeilAlgebra &b) noexcept { return a.widths_ <=> b.widths_; }

  private:
	std::vector<std::size_t> widths_;
	std::vector<std::size_t> block_of_;
	std::vector<std::size_t> block_start_;
};

/// Coproduct by concatenation of generator lists; strictly associative with unit N.
inline WeilAlgebra tensor(const WeilAlgebra &a, const WeilAlgebra &b) {
	auto widths = a.widths();
	widths.insert(widths.end(), b.widths().begin(), b.widths().end());
	return WeilAlgebra(std::move(widths));
}

/// A product of distinct, pairwise unrelated generators, kept sorted. The
/// empty monomial is the constant 1; it appears in bases but never in the
/// support of an Element.
class Monomial {
  public:
	Monomial() = default;

	const std::vector<Generator> &indices() const noexcept { return indices_; }
	std::size_t degree() const noexcept { return indices_.size(); }
	bool is_one() const noexcept { return indices_.empty(); }

	friend bool operator==(const Monomial &, const Monomial &) = default;
	/// Degree first, then lexicographic on the sorted indices.
	friend std::strong_ordering operator<=>(const Monomial &a, const Monomial &b) {
		if (auto c = a.degree() <=> b.degree(); c != 0)
			return c;
		return a.indices_ <=> b.indices_;
	}

  private:
	explicit Monomial(std::vector<Generator> sorted) : indices_(std::move(sorted)) {}
	std::vector<Generator> indices_;

	friend std::optional<Monomial> normalize_monomial(const WeilAlgebra &, std::span<const Generator>);
	friend std::optional<Monomial> multiply(const WeilAlgebra &, const Monomial &, const Monomial &);
};

/// Returns nullopt when the product vanishes: a repeated index or two indices
/// from one block. Blocks are consecutive, so after sorting it suffices to
/// compare neighbours.
inline std::optional<Monomial> normalize_monomial(const WeilAlgebra &ambient, std::span<const Generator> raw) {
	std::vector<Generator> sorted(raw.begin(), raw.end());
	for (auto g : sorted)
		ambient.check(g);
	std::sort(sorted.begin(), sorted.end());
	for (std::size_t k = 1; k < sorted.size(); ++k)
		if (ambient.block_of(sorted[k - 1]) == ambient.block_of(sorted[k]))
			return std::nullopt;
	return Monomial(std::move(sorted));
}

inline std::optional<Monomial> multiply(const WeilAlgebra &ambient, const Monomial &a, const Monomial &b) {
	std::vector<Generator> merged;
	merged.reserve(a.degree() + b.degree());
	std::merge(a.indices_.begin(), a.indices_.end(), b.indices_.begin(), b.indices_.end(), std::back_inserter(merged));
	for (std::size_t k = 1; k < merged.size(); ++k)
		if (ambient.block_of(merged[k - 1]) == ambient.block_of(merged[k]))
			return std::nullopt;
	return Monomial(std::move(merged));
}

inline Monomial generator_monomial(const WeilAlgebra &ambient, Generator g) {
	const Generator raw[] = {g};
	return *normalize_monomial(ambient, raw);
}

/// Nonzero monomials of an algebra, constant first. The order is colexicographic
/// in the blocks: each monomial picks at most one generator per block, and the
/// last block is the most significant digit. With this order the basis of
/// A (x) A' is (basis of A') x (basis of A) with A' major.
inline std::vector<Monomial> monomial_basis(const WeilAlgebra &ambient) {
	const auto &widths = ambient.widths();
	std::vector<std::size_t> digit(widths.size(), 0);
	std::vector<Monomial> basis;
	while (true) {
		std::vector<Generator> raw;
		for (std::size_t b = 0; b < widths.size(); ++b)
			if (digit[b] != 0)
				raw.push_back(ambient.block_start(b) + digit[b] - 1);
		basis.push_back(*normalize_monomial(ambient, raw));
		std::size_t b = 0;
		while (b < widths.size() && digit[b] == widths[b])
			digit[b++] = 0;
		if (b == widths.size())
			break;
		++digit[b];
	}
	return basis;
}

/// Augmentation-zero element: a finite N-combination of nonconstant monomials.
class Element {
  public:
	using Terms = std::map<Monomial, Natural>;

	explicit Element(WeilAlgebra ambient) : ambient_(std::move(ambient)) {}

	static Element monomial(const WeilAlgebra &ambient, const Monomial &m, const Natural &coef = 1) {
		Element e(ambient);
		e.add_term(m, coef);
		return e;
	}
	static Element generator(const WeilAlgebra &ambient, Generator g, const Natural &coef = 1) {
		return monomial(ambient, generator_monomial(ambient, g), coef);
	}

	const WeilAlgebra &ambient() const noexcept { return ambient_; }
	const Terms &terms() const noexcept { return terms_; }
	bool is_zero() const noexcept { return terms_.empty(); }

	Natural coefficient(const Monomial &m) const {
		auto it = terms_.find(m);
		return it == terms_.end() ? Natural(0) : it->second;
	}

	void add_term(const Monomial &m, const Natural &coef) {
		if (m.is_one())
			throw InputError("constant terms are not allowed in augmentation-zero elements");
		if (coef < 0)
			throw InputError("negative coefficient");
		if (coef == 0)
			return;
		for (auto g : m.indices())
			ambient_.check(g);
		terms_[m] += coef;
	}

	Element scaled(const Natural &k) const {
		Element out(ambient_);
		if (k == 0)
			return out;
		for (const auto &[m, c] : terms_)
			out.terms_.emplace(m, c * k);
		return out;
	}

	Element &operator+=(const Element &other) {
		require_same_ambient(other);
		for (const auto &[m, c] : other.terms_)
			terms_[m] += c;
		return *this;
	}

	friend Element operator+(Element a, const Element &b) { return a += b; }

	friend Element operator*(const Element &a, const Element &b) {
		a.require_same_ambient(b);
		Element out(a.ambient_);
		for (const auto &[ma, ca] : a.terms_)
			for (const auto &[mb, cb] : b.terms_)
				if (auto m = multiply(a.ambient_, ma, mb))
					out.terms_[*m] += ca * cb;
		return out;
	}

	friend bool operator==(const Element &, const Element &) = default;

  private:
	void require_same_ambient(const Element &other) const {
		if (!(ambient_ == other.ambient_))
			throw InputError("elements live in different Weil algebras");
	}

	WeilAlgebra ambient_;
	Terms terms_;
};

/// Re-expresses an element of B inside a larger algebra whose generators
/// offset..offset+n(B)-1 are a copy of B's.
inline Element embed(const Element &e, const WeilAlgebra &into, std::size_t offset) {
	Element out(into);
	for (const auto &[m, c] : e.terms()) {
		std::vector<Generator> shifted;
		for (auto g : m.indices())
			shifted.push_back(g + offset);
		auto moved = normalize_monomial(into, shifted);
		if (!moved)
			throw AlgorithmError("embedding collapsed a nonzero monomial");
		out.add_term(*moved, c);
	}
	return out;
}

class WeilMorphism;
struct HomCheck;
HomCheck check_hom(const WeilMorphism &phi);

/// An augmented algebra map, recorded by the images of the source generators.
class WeilMorphism {
  public:
	/// Validates shape and the homomorphism condition.
	static WeilMorphism make(WeilAlgebra source, WeilAlgebra target, std::vector<Element> images);

	/// Validates shape only; used for candidates that check_hom is to judge.
	static WeilMorphism unchecked(WeilAlgebra source, WeilAlgebra target, std::vector<Element> images) {
		if (images.size() != source.generator_count())
			throw InputError("morphism needs " + std::to_string(source.generator_count()) + " generator images, got " +
			                 std::to_string(images.size()));
		for (const auto &img : images)
			if (!(img.ambient() == target))
				throw InputError("generator image does not live in the target algebra");
		return WeilMorphism(std::move(source), std::move(target), std::move(images));
	}

	const WeilAlgebra &source() const noexcept { return source_; }
	const WeilAlgebra &target() const noexcept { return target_; }
	const std::vector<Element> &images() const noexcept { return images_; }
	const Element &image(Generator g) const {
		source_.check(g);
		return images_[g];
	}

	friend bool operator==(const WeilMorphism &, const WeilMorphism &) = default;

  private:
	WeilMorphism(WeilAlgebra s, WeilAlgebra t, std::vector<Element> images)
	    : source_(std::move(s)), target_(std::move(t)), images_(std::move(images)) {}

	WeilAlgebra source_;
	WeilAlgebra target_;
	std::vector<Element> images_;
};

struct HomCheck {
	bool ok = true;
	/// First related pair (i, j), i <= j, whose images multiply to nonzero.
	std::optional<std::pair<Generator, Generator>> witness;
	explicit operator bool() const noexcept { return ok; }
};

/// phi respects the relations iff phi(x_i) phi(x_j) = 0 for every i ~ j,
/// including i = j.
inline HomCheck check_hom(const WeilMorphism &phi) {
	const auto &src = phi.source();
	for (std::size_t b = 0; b < src.block_count(); ++b) {
		const auto start = src.block_start(b);
		const auto end = start + src.widths()[b];
		for (Generator i = start; i < end; ++i)
			for (Generator j = i; j < end; ++j)
				if (!(phi.image(i) * phi.image(j)).is_zero())
					return {false, std::pair{i, j}};
	}
	return {};
}

inline WeilMorphism WeilMorphism::make(WeilAlgebra source, WeilAlgebra target, std::vector<Element> images) {
	auto phi = unchecked(std::move(source), std::move(target), std::move(images));
	if (auto hom = check_hom(phi); !hom) {
		throw InputError("generator images violate the relation x" + std::to_string(hom.witness->first + 1) + "*x" +
		                 std::to_string(hom.witness->second + 1) + " = 0");
	}
	return phi;
}

/// Image of a single monomial, including the constant 1 (mapped to 1). The
/// result is a raw term map because it may contain the constant.
inline Element::Terms eval_monomial(const WeilMorphism &phi, const Monomial &m) {
	Element::Terms out;
	if (m.is_one()) {
		out.emplace(Monomial(), 1);
		return out;
	}
	Element acc = phi.image(m.indices().front());
	for (std::size_t k = 1; k < m.degree() && !acc.is_zero(); ++k)
		acc = acc * phi.image(m.indices()[k]);
	return acc.terms();
}

/// Substitutes phi's generator images into e.
inline Element eval(const WeilMorphism &phi, const Element &e) {
	if (!(e.ambient() == phi.source()))
		throw InputError("element does not live in the source of the morphism");
	Element out(phi.target());
	for (const auto &[m, c] : e.terms())
		for (const auto &[image_m, image_c] : eval_monomial(phi, m))
			out.add_term(image_m, c * image_c);
	return out;
}

inline WeilMorphism identity(const WeilAlgebra &a) {
	std::vector<Element> images;
	for (Generator g = 0; g < a.generator_count(); ++g)
		images.push_back(Element::generator(a, g));
	return WeilMorphism::unchecked(a, a, std::move(images));
}

/// psi o phi.
inline WeilMorphism compose(const WeilMorphism &psi, const WeilMorphism &phi) {
	if (!(phi.target() == psi.source()))
		throw InputError("cannot compose: target of the first morphism differs from source of the second");
	std::vector<Element> images;
	images.reserve(phi.images().size());
	for (const auto &img : phi.images())
		images.push_back(eval(psi, img));
	return WeilMorphism::unchecked(phi.source(), psi.target(), std::move(images));
}

/// phi1 (x) phi2, acting blockwise on the concatenated generator lists.
inline WeilMorphism tensor(const WeilMorphism &phi1, const WeilMorphism &phi2) {
	const auto source = tensor(phi1.source(), phi2.source());
	const auto target = tensor(phi1.target(), phi2.target());
	std::vector<Element> images;
	for (const auto &img : phi1.images())
		images.push_back(embed(img, target, 0));
	for (const auto &img : phi2.images())
		images.push_back(embed(img, target, phi1.target().generator_count()));
	return WeilMorphism::unchecked(source, target, std::move(images));
}

/// The unique map A -> N.
inline WeilMorphism augmentation(const WeilAlgebra &a) {
	return WeilMorphism::unchecked(a, WeilAlgebra(), std::vector<Element>(a.generator_count(), Element(WeilAlgebra())));
}

/// The unique map N -> A.
inline WeilMorphism unit(const WeilAlgebra &a) { return WeilMorphism::unchecked(WeilAlgebra(), a, {}); }

namespace generators {

inline WeilAlgebra w() { return WeilAlgebra::power(1); }
inline WeilAlgebra w2() { return WeilAlgebra::power(2); }
inline WeilAlgebra ww() { return WeilAlgebra({1, 1}); }

/// epsilon: W -> N, x -> 0. Induces the projection p.
inline WeilMorphism epsilon() { return augmentation(w()); }

/// eta: N -> W. Induces the zero section.
inline WeilMorphism eta() { return unit(w()); }

/// W^2 -> W, x -> z, y -> z. Induces the addition.
inline WeilMorphism plus() {
	return WeilMorphism::unchecked(w2(), w(), {Element::generator(w(), 0), Element::generator(w(), 0)});
}

/// W(x)W -> W(x)W, x <-> y. Induces the flip.
inline WeilMorphism sigma() {
	return WeilMorphism::unchecked(ww(), ww(), {Element::generator(ww(), 1), Element::generator(ww(), 0)});
}

/// W -> W(x)W, z -> xy. Induces the vertical lift.
inline WeilMorphism delta() {
	const Generator both[] = {0, 1};
	return WeilMorphism::unchecked(w(), ww(), {Element::monomial(ww(), *normalize_monomial(ww(), both))});
}

/// W^2 -> W(x)W, x -> ab, y -> b; the top edge of the vertical-lift pullback.
inline WeilMorphism mu() {
	const Generator both[] = {0, 1};
	return WeilMorphism::unchecked(w2(), ww(),
	                               {Element::monomial(ww(), *normalize_monomial(ww(), both)), Element::generator(ww(), 1)});
}

} // namespace generators

struct NamedMorphism {
	std::string name;
	WeilMorphism morphism;
};

/// The five structural morphisms together with mu.
inline std::vector<NamedMorphism> named_generators() {
	return {
	    {"epsilon", generators::epsilon()}, {"eta", generators::eta()},     {"plus", generators::plus()},
	    {"sigma", generators::sigma()},     {"delta", generators::delta()}, {"mu", generators::mu()},
	};
}

} // namespace weilcat

#endif
