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
 * The tangent pullback squares of the Weil category and constructive lifting
 * of cones over them.
 *
 * Squares are drawn as
 *
 *     P ---top---> R
 *     |            |
 *    left        right
 *     v            v
 *     Q --bottom-> D
 *
 * A cone is a pair of legs C -> R and C -> Q agreeing over D. Existence of a
 * lift is shown by constructing it; uniqueness is certified once per square
 * by checking that (top, left), viewed as an N-linear map on the monomial
 * basis of P, has a left inverse read off from unit rows. Since lifts are
 * determined by where they send generators and the pair (top, left) is
 * injective on elements, two lifts with the same composites coincide.
 */

#ifndef WEILCAT_LIMITS_HPP
#define WEILCAT_LIMITS_HPP

#include <optional>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "random.hpp"
#include "text.hpp"
#include "weil.hpp"

namespace weilcat {

enum class SquareKind {
	foundational, ///< A (x) W^{m+n} over A
	vertical,     ///< B (x) (W^2 -> W(x)W over N -> W)
	custom,       ///< arbitrary, no lifting algorithm
};

struct Square {
	SquareKind kind = SquareKind::custom;
	/// A for foundational squares, the prefix factor B for vertical ones.
	WeilAlgebra ambient;
	std::size_t m = 0;
	std::size_t n = 0;
	WeilMorphism top;
	WeilMorphism left;
	WeilMorphism right;
	WeilMorphism bottom;

	const WeilAlgebra &corner() const noexcept { return top.source(); }

	bool commutes() const { return compose(right, top) == compose(bottom, left); }

	std::string name() const {
		switch (kind) {
		case SquareKind::foundational:
			return "foundational(" + to_text(ambient) + ", " + std::to_string(m) + ", " + std::to_string(n) + ")";
		case SquareKind::vertical:
			return ambient.is_unit() ? "vertical" : "vertical(" + to_text(ambient) + ")";
		case SquareKind::custom: break;
		}
		return "custom";
	}
};

namespace detail {

/// W^{m+n} -> W^k sending the generators [from, from+k) onto W^k in order and
/// the rest to zero.
inline WeilMorphism block_projection(std::size_t total, std::size_t from, std::size_t k) {
	const auto source = WeilAlgebra::power(total);
	const auto target = k == 0 ? WeilAlgebra() : WeilAlgebra::power(k);
	std::vector<Element> images;
	for (Generator g = 0; g < total; ++g)
		images.push_back(g >= from && g < from + k ? Element::generator(target, g - from) : Element(target));
	return WeilMorphism::make(source, target, std::move(images));
}

inline WeilMorphism whisker(const WeilAlgebra &prefix, const WeilMorphism &phi) { return tensor(identity(prefix), phi); }

} // namespace detail

/// The foundational square with corners A(x)W^{m+n}, A(x)W^m, A(x)W^n, A.
/// The first m generators of W^{m+n} survive along the top edge, the last n
/// along the left edge.
inline Square foundational_square(const WeilAlgebra &a, std::size_t m, std::size_t n) {
	if (m == 0 || n == 0)
		throw InputError("foundational square needs m, n >= 1");
	const auto wm = WeilAlgebra::power(m);
	const auto wn = WeilAlgebra::power(n);
	return Square{
	    SquareKind::foundational,
	    a,
	    m,
	    n,
	    detail::whisker(a, detail::block_projection(m + n, 0, m)),
	    detail::whisker(a, detail::block_projection(m + n, m, n)),
	    detail::whisker(a, augmentation(wm)),
	    detail::whisker(a, augmentation(wn)),
	};
}

/// B (x) the vertical-lift square; vertical_square() is the plain one with
/// top mu, left epsilon, right 1_W (x) epsilon and bottom eta.
inline Square vertical_square(const WeilAlgebra &prefix = WeilAlgebra()) {
	using namespace generators;
	return Square{
	    SquareKind::vertical,
	    prefix,
	    0,
	    0,
	    detail::whisker(prefix, mu()),
	    detail::whisker(prefix, augmentation(w2())),
	    detail::whisker(prefix, tensor(identity(w()), epsilon())),
	    detail::whisker(prefix, eta()),
	};
}

/// B (x) square. Foundational and vertical squares stay in their family.
inline Square tensor_square(const WeilAlgebra &prefix, const Square &sq) {
	Square out{
	    sq.kind,
	    sq.kind == SquareKind::custom ? WeilAlgebra() : tensor(prefix, sq.ambient),
	    sq.m,
	    sq.n,
	    detail::whisker(prefix, sq.top),
	    detail::whisker(prefix, sq.left),
	    detail::whisker(prefix, sq.right),
	    detail::whisker(prefix, sq.bottom),
	};
	return out;
}

struct Cone {
	WeilMorphism leg_right;  ///< apex -> R
	WeilMorphism leg_bottom; ///< apex -> Q
	/// The map into the corner the cone was built from, if any; the lift has to equal it.
	std::optional<WeilMorphism> witness = std::nullopt;

	const WeilAlgebra &apex() const noexcept { return leg_right.source(); }
};

/// Shape and commutativity of a cone over the cospan of `sq`.
inline bool is_cone(const Square &sq, const Cone &cone) {
	if (!(cone.leg_right.source() == cone.leg_bottom.source()))
		return false;
	if (!(cone.leg_right.target() == sq.right.source()) || !(cone.leg_bottom.target() == sq.bottom.source()))
		return false;
	return compose(sq.right, cone.leg_right) == compose(sq.bottom, cone.leg_bottom);
}

namespace detail {

inline Element shifted(const Element &e, const WeilAlgebra &into, Generator from, std::ptrdiff_t shift) {
	Element out(into);
	for (const auto &[mono, c] : e.terms()) {
		std::vector<Generator> raw;
		for (auto g : mono.indices())
			raw.push_back(g >= from ? static_cast<Generator>(static_cast<std::ptrdiff_t>(g) + shift) : g);
		auto moved = normalize_monomial(into, raw);
		if (!moved)
			throw AlgorithmError("reindexing collapsed a monomial");
		out.add_term(*moved, c);
	}
	return out;
}

/// Splits e into the part whose monomials avoid generators >= first and the rest.
inline std::pair<Element, Element> split_at(const Element &e, Generator first) {
	Element low(e.ambient()), high(e.ambient());
	for (const auto &[mono, c] : e.terms()) {
		const bool touches = !mono.indices().empty() && mono.indices().back() >= first;
		(touches ? high : low).add_term(mono, c);
	}
	return {low, high};
}

/// Moves an element of a prefix algebra into a larger one sharing its first generators.
inline Element widen(const Element &e, const WeilAlgebra &into) { return embed(e, into, 0); }

inline WeilMorphism lift_foundational(const Square &sq, const Cone &cone) {
	const auto base = sq.ambient.generator_count();
	const auto &corner = sq.corner();
	std::vector<Element> images;
	for (Generator z = 0; z < cone.apex().generator_count(); ++z) {
		auto [g_base, g_new] = split_at(cone.leg_right.image(z), base);
		auto [h_base, h_new] = split_at(cone.leg_bottom.image(z), base);
		// Both legs project to the same element of A.
		if (!(widen(g_base, sq.ambient) == widen(h_base, sq.ambient)))
			throw AlgorithmError("foundational lift: base parts of the legs disagree");
		Element image = shifted(g_base, corner, base, 0);
		image += shifted(g_new, corner, base, 0);
		image += shifted(h_new, corner, base, static_cast<std::ptrdiff_t>(sq.m));
		images.push_back(std::move(image));
	}
	return WeilMorphism::unchecked(cone.apex(), corner, std::move(images));
}

inline WeilMorphism lift_vertical(const Square &sq, const Cone &cone) {
	const auto base = sq.ambient.generator_count();
	const Generator a = base, b = base + 1; // generators of W(x)W
	const Generator x = base, y = base + 1; // generators of W^2
	const auto &corner = sq.corner();
	std::vector<Element> images;
	for (Generator z = 0; z < cone.apex().generator_count(); ++z) {
		Element image = shifted(cone.leg_bottom.image(z), corner, base, 0);
		Element pure(cone.leg_right.target());
		for (const auto &[mono, c] : cone.leg_right.image(z).terms()) {
			const auto &idx = mono.indices();
			const bool has_a = std::find(idx.begin(), idx.end(), a) != idx.end();
			const bool has_b = std::find(idx.begin(), idx.end(), b) != idx.end();
			if (!has_a && !has_b) {
				pure.add_term(mono, c);
				continue;
			}
			if (has_a && !has_b)
				throw AlgorithmError("vertical lift: leg contains a monomial with a but not b");
			std::vector<Generator> raw;
			for (auto g : idx)
				if (g < base)
					raw.push_back(g);
			raw.push_back(has_a ? x : y);
			auto lifted = normalize_monomial(corner, raw);
			if (!lifted)
				throw AlgorithmError("vertical lift: substituted monomial vanished");
			image.add_term(*lifted, c);
		}
		if (!(pure == shifted(cone.leg_bottom.image(z), cone.leg_right.target(), base, 0)))
			throw AlgorithmError("vertical lift: constant-in-W(x)W part differs from the other leg");
		images.push_back(std::move(image));
	}
	return WeilMorphism::unchecked(cone.apex(), corner, std::move(images));
}

} // namespace detail

/// The unique morphism apex -> P through which the cone factors.
inline WeilMorphism lift_cone(const Square &sq, const Cone &cone) {
	if (!is_cone(sq, cone))
		throw InputError("the legs do not form a cone over " + sq.name());
	switch (sq.kind) {
	case SquareKind::foundational: return detail::lift_foundational(sq, cone);
	case SquareKind::vertical: return detail::lift_vertical(sq, cone);
	case SquareKind::custom: break;
	}
	throw InputError("no lifting algorithm for custom squares");
}

struct UniquenessCertificate {
	bool commutes = false;
	bool jointly_injective = false;
	/// A basis monomial of P not recovered by any unit row, when injectivity fails.
	std::optional<Monomial> uncovered;

	bool holds() const noexcept { return commutes && jointly_injective; }
};

inline UniquenessCertificate certify(const Square &sq) {
	UniquenessCertificate cert;
	cert.commutes = sq.commutes();
	const auto stacked = stack(linear_matrix(sq.top), linear_matrix(sq.left));
	if (unit_row_witness(stacked)) {
		cert.jointly_injective = true;
	} else {
		const auto basis = monomial_basis(sq.corner());
		for (std::size_t j = 0; j < basis.size() && !cert.uncovered; ++j) {
			// Column j is covered iff some row has its only nonzero entry, 1, at j.
			bool covered = false;
			for (std::size_t i = 0; i < stacked.rows() && !covered; ++i) {
				if (stacked(i, j) != 1)
					continue;
				bool alone = true;
				for (std::size_t k = 0; k < stacked.cols() && alone; ++k)
					alone = k == j || stacked(i, k) == 0;
				covered = alone;
			}
			if (!covered)
				cert.uncovered = basis[j];
		}
	}
	return cert;
}

/// A cone sampled by drawing a random morphism into the corner and composing.
inline Cone sample_cone(const Square &sq, Sampler &sampler) {
	const auto psi = sampler.morphism(sampler.algebra(), sq.corner());
	return Cone{compose(sq.top, psi), compose(sq.left, psi), psi};
}

struct ConeFailure {
	std::size_t index = 0;
	std::string cone;
	std::string reason;
};

struct PullbackReport {
	std::string square;
	UniquenessCertificate certificate;
	std::size_t cones_checked = 0;
	std::vector<ConeFailure> failures;

	bool passed() const noexcept { return certificate.holds() && failures.empty(); }
};

inline std::optional<std::string> check_lift(const Square &sq, const Cone &cone) {
	if (!is_cone(sq, cone))
		return "legs do not form a cone";
	try {
		const auto psi = lift_cone(sq, cone);
		if (!check_hom(psi))
			return "lift is not a homomorphism: " + to_text(psi);
		if (!(compose(sq.top, psi) == cone.leg_right))
			return "top o lift != right leg for lift " + to_text(psi);
		if (!(compose(sq.left, psi) == cone.leg_bottom))
			return "left o lift != bottom leg for lift " + to_text(psi);
		if (cone.witness && !(*cone.witness == psi))
			return "second lift " + to_text(*cone.witness) + " besides " + to_text(psi);
	} catch (const std::exception &ex) {
		return ex.what();
	}
	return std::nullopt;
}

template <class Cones>
PullbackReport verify_pullback(const Square &sq, const Cones &cones) {
	PullbackReport report{sq.name(), certify(sq), 0, {}};
	for (const Cone &cone : cones) {
		if (auto failure = check_lift(sq, cone))
			report.failures.push_back(
			    {report.cones_checked, to_text(cone.leg_right) + " | " + to_text(cone.leg_bottom), *failure});
		++report.cones_checked;
	}
	return report;
}

inline PullbackReport verify_pullback(const Square &sq, Sampler &sampler, std::size_t budget) {
	std::vector<Cone> cones;
	cones.reserve(budget);
	for (std::size_t k = 0; k < budget; ++k)
		cones.push_back(sample_cone(sq, sampler));
	return verify_pullback(sq, cones);
}

} // namespace weilcat

#endif
