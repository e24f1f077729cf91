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
 * Symbolic wedge-of-smash expressions in pointed-space variables.
 *
 * A Weil morphism phi: A -> A' determines a functor from n'-tuples to
 * n-tuples of pointed spaces: component i is the wedge, over the monomials of
 * phi(x_i) counted with multiplicity, of the smash product of the variables in
 * that monomial. Composing such patterns substitutes without annihilation, so
 * the expansion of phi1~ phi2~ contains every term of (phi2 phi1)~ plus
 * extra terms that vanish in the algebra. alpha() exhibits the inclusion
 * and the complement.
 *
 * Smash words are sorted multisets of variables and wedge sums are multisets
 * of smash words. Summands of a wedge sum are addressed by position in the
 * expansion sorted by word; copies of one word are contiguous.
 */

#ifndef WEILCAT_SPACE_HPP
#define WEILCAT_SPACE_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "natural.hpp"
#include "random.hpp"
#include "weil.hpp"

namespace weilcat {

using Variable = std::size_t;

class SmashWord {
  public:
	SmashWord() = default;
	explicit SmashWord(std::vector<Variable> letters) : letters_(std::move(letters)) {
		std::sort(letters_.begin(), letters_.end());
	}

	const std::vector<Variable> &letters() const noexcept { return letters_; }
	std::size_t size() const noexcept { return letters_.size(); }

	/// A repeated variable or two variables from one block of `vars`; such a
	/// word corresponds to a monomial that is zero in the algebra.
	bool has_related_pair(const WeilAlgebra &vars) const {
		for (std::size_t k = 1; k < letters_.size(); ++k)
			if (vars.block_of(letters_[k - 1]) == vars.block_of(letters_[k]))
				return true;
		return false;
	}

	friend SmashWord smash(const SmashWord &a, const SmashWord &b) {
		SmashWord out;
		out.letters_.reserve(a.size() + b.size());
		std::merge(a.letters_.begin(), a.letters_.end(), b.letters_.begin(), b.letters_.end(),
		           std::back_inserter(out.letters_));
		return out;
	}

	friend bool operator==(const SmashWord &, const SmashWord &) = default;
	friend std::strong_ordering operator<=>(const SmashWord &a, const SmashWord &b) {
		if (auto c = a.size() <=> b.size(); c != 0)
			return c;
		return a.letters_ <=> b.letters_;
	}

  private:
	std::vector<Variable> letters_;
};

class WedgeSum {
  public:
	using Counts = std::map<SmashWord, Natural>;

	WedgeSum() = default; // the point *

	const Counts &counts() const noexcept { return counts_; }
	bool is_point() const noexcept { return counts_.empty(); }

	void add(const SmashWord &w, const Natural &copies = 1) {
		if (w.size() == 0)
			throw InputError("empty smash word; use the point instead");
		if (copies > 0)
			counts_[w] += copies;
	}

	Natural count(const SmashWord &w) const {
		auto it = counts_.find(w);
		return it == counts_.end() ? Natural(0) : it->second;
	}

	Natural summand_count() const {
		Natural total = 0;
		for (const auto &[w, c] : counts_)
			total += c;
		return total;
	}

	/// Summands in position order.
	std::vector<SmashWord> summands() const {
		std::vector<SmashWord> out;
		for (const auto &[w, c] : counts_)
			out.insert(out.end(), to_size(c), w);
		return out;
	}

	/// Multiset union.
	friend WedgeSum operator+(WedgeSum a, const WedgeSum &b) {
		for (const auto &[w, c] : b.counts_)
			a.counts_[w] += c;
		return a;
	}

	/// Smash distributes over wedge; X ^ * = *.
	friend WedgeSum smash(const WedgeSum &a, const WedgeSum &b) {
		WedgeSum out;
		for (const auto &[wa, ca] : a.counts_)
			for (const auto &[wb, cb] : b.counts_)
				out.counts_[smash(wa, wb)] += ca * cb;
		return out;
	}

	friend bool operator==(const WedgeSum &, const WedgeSum &) = default;

  private:
	Counts counts_;
};

/// A tuple of wedge sums in the variables of `variables()`; one component per
/// generator of the source algebra of the underlying Weil morphism.
class SpaceFunctor {
  public:
	SpaceFunctor(WeilAlgebra variables, std::vector<WedgeSum> components)
	    : variables_(std::move(variables)), components_(std::move(components)) {
		for (const auto &c : components_)
			for (const auto &[w, n] : c.counts())
				for (auto v : w.letters())
					variables_.check(v);
	}

	const WeilAlgebra &variables() const noexcept { return variables_; }
	std::size_t in_arity() const noexcept { return variables_.generator_count(); }
	std::size_t out_arity() const noexcept { return components_.size(); }
	const std::vector<WedgeSum> &components() const noexcept { return components_; }
	const WedgeSum &component(std::size_t i) const { return components_.at(i); }

	friend bool operator==(const SpaceFunctor &, const SpaceFunctor &) = default;

  private:
	WeilAlgebra variables_;
	std::vector<WedgeSum> components_;
};

inline WedgeSum wedge_of(const Element &e) {
	WedgeSum out;
	for (const auto &[m, c] : e.terms())
		out.add(SmashWord(m.indices()), c);
	return out;
}

inline SpaceFunctor phitilde(const WeilMorphism &phi) {
	std::vector<WedgeSum> components;
	for (const auto &img : phi.images())
		components.push_back(wedge_of(img));
	return SpaceFunctor(phi.target(), std::move(components));
}

inline SpaceFunctor identity_space(const WeilAlgebra &vars) { return phitilde(identity(vars)); }

/// f~ o g~: substitutes the components of g for the variables of f, without
/// discarding words that would vanish in any algebra.
inline SpaceFunctor compose_space(const SpaceFunctor &f, const SpaceFunctor &g) {
	if (f.in_arity() != g.out_arity())
		throw InputError("cannot compose space functors: " + std::to_string(f.in_arity()) + " variables vs " +
		                 std::to_string(g.out_arity()) + " components");
	std::vector<WedgeSum> components;
	for (const auto &fi : f.components()) {
		WedgeSum acc;
		for (const auto &[word, copies] : fi.counts()) {
			WedgeSum term;
			bool first = true;
			for (auto v : word.letters()) {
				term = first ? g.component(v) : smash(term, g.component(v));
				first = false;
			}
			for (const auto &[w, c] : term.counts())
				acc.add(w, c * copies);
		}
		components.push_back(std::move(acc));
	}
	return SpaceFunctor(g.variables(), std::move(components));
}

/// Per component, an injective map from summand positions of a source functor
/// to summand positions of a target functor, matching identical words.
struct SummandInclusion {
	std::vector<std::vector<std::size_t>> components;

	friend bool operator==(const SummandInclusion &, const SummandInclusion &) = default;
};

inline bool is_valid_inclusion(const SummandInclusion &inc, const SpaceFunctor &source, const SpaceFunctor &target) {
	if (inc.components.size() != source.out_arity() || source.out_arity() != target.out_arity())
		return false;
	for (std::size_t i = 0; i < inc.components.size(); ++i) {
		const auto src = source.component(i).summands();
		const auto tgt = target.component(i).summands();
		const auto &map = inc.components[i];
		if (map.size() != src.size())
			return false;
		std::vector<bool> hit(tgt.size(), false);
		for (std::size_t p = 0; p < map.size(); ++p) {
			if (map[p] >= tgt.size() || hit[map[p]] || !(tgt[map[p]] == src[p]))
				return false;
			hit[map[p]] = true;
		}
	}
	return true;
}

inline SummandInclusion compose(const SummandInclusion &outer, const SummandInclusion &inner) {
	if (outer.components.size() != inner.components.size())
		throw InputError("summand inclusions have different arities");
	SummandInclusion out;
	for (std::size_t i = 0; i < inner.components.size(); ++i) {
		std::vector<std::size_t> map;
		for (auto p : inner.components[i])
			map.push_back(outer.components[i].at(p));
		out.components.push_back(std::move(map));
	}
	return out;
}

struct AlphaResult {
	SpaceFunctor composite; ///< (phi2 phi1)~
	SpaceFunctor expanded;  ///< phi1~ phi2~
	SummandInclusion inclusion;
	/// Complement of the inclusion, per component.
	std::vector<WedgeSum> zeta;
	/// Every zeta summand contains a related pair. alpha() throws otherwise,
	/// so a returned result always carries true.
	bool pure_annihilation = true;
};

/// The inclusion (phi2 phi1)~ -> phi1~ phi2~ for phi1: A0 -> A1, phi2: A1 -> A2.
/// Copy k of a word goes to the k-th occurrence of that word in the expansion.
inline AlphaResult alpha(const WeilMorphism &phi1, const WeilMorphism &phi2) {
	if (!(phi1.target() == phi2.source()))
		throw InputError("alpha needs composable morphisms");
	AlphaResult out{phitilde(compose(phi2, phi1)), compose_space(phitilde(phi1), phitilde(phi2)), {}, {}, true};
	const auto &vars = phi2.target();
	for (std::size_t i = 0; i < out.composite.out_arity(); ++i) {
		const auto &small = out.composite.component(i);
		const auto &big = out.expanded.component(i);
		std::vector<std::size_t> map;
		WedgeSum rest;
		std::size_t offset = 0;
		for (const auto &[word, total] : big.counts()) {
			const auto kept = small.count(word);
			if (kept > total)
				throw StructuralViolation("composite has more copies of a word than the expansion");
			for (std::size_t k = 0; k < to_size(kept); ++k)
				map.push_back(offset + k);
			if (total > kept) {
				if (!word.has_related_pair(vars))
					throw StructuralViolation("complement summand without a related pair");
				rest.add(word, total - kept);
			}
			offset += to_size(total);
		}
		if (map.size() != to_size(small.summand_count()))
			throw StructuralViolation("composite contains a word absent from the expansion");
		out.inclusion.components.push_back(std::move(map));
		out.zeta.push_back(std::move(rest));
	}
	return out;
}

/// phi1~ phi2~ == (phi2 phi1)~ v zeta componentwise, every zeta summand
/// containing a related pair of A2-variables.
inline bool decomposition_holds(const WeilMorphism &phi1, const WeilMorphism &phi2) {
	const auto composite = phitilde(compose(phi2, phi1));
	const auto expanded = compose_space(phitilde(phi1), phitilde(phi2));
	AlphaResult result = [&] {
		try {
			return alpha(phi1, phi2);
		} catch (const StructuralViolation &) {
			return AlphaResult{composite, expanded, {}, {}, false};
		}
	}();
	if (!result.pure_annihilation)
		return false;
	for (std::size_t i = 0; i < composite.out_arity(); ++i) {
		if (!(composite.component(i) + result.zeta[i] == expanded.component(i)))
			return false;
		for (const auto &[w, c] : result.zeta[i].counts())
			if (!w.has_related_pair(phi2.target()))
				return false;
	}
	return true;
}

// ---------------------------------------------------------------------------
// Traced composition. A summand of an iterated composite f1~ f2~ ... fk~ is a
// tree: the root is a summand of f1; its children, one per letter of the
// root's word in sorted order, are summands of f2 for that letter; and so on.
// The tree does not depend on how the composite was bracketed, which is what
// lets inclusions into ((f1 f2) f3) and (f1 (f2 f3)) be compared.

struct SummandTree {
	std::size_t position = 0;
	/// Number of letters of this summand's word; for inner nodes it equals
	/// children.size(), leaves have no children yet.
	std::size_t width = 0;
	std::vector<SummandTree> children;

	friend bool operator==(const SummandTree &, const SummandTree &) = default;
	friend bool operator<(const SummandTree &a, const SummandTree &b) {
		if (a.position != b.position)
			return a.position < b.position;
		if (a.width != b.width)
			return a.width < b.width;
		return std::lexicographical_compare(a.children.begin(), a.children.end(), b.children.begin(), b.children.end());
	}
};

struct TracedSummand {
	SmashWord word;
	/// Letters at the leaves of the tree, in pre-order.
	std::vector<Variable> frontier;
	SummandTree tree;
	/// Position in the outer factor and, per sorted letter of that summand's
	/// word, the position chosen in the inner factor.
	std::size_t outer = 0;
	std::vector<std::size_t> inner;
};

struct TracedFunctor {
	WeilAlgebra variables;
	std::vector<std::vector<TracedSummand>> components;

	std::size_t position_of(std::size_t component, std::size_t outer, const std::vector<std::size_t> &inner) const {
		const auto &summands = components.at(component);
		for (std::size_t p = 0; p < summands.size(); ++p)
			if (summands[p].outer == outer && summands[p].inner == inner)
				return p;
		throw AlgorithmError("no summand with the requested decomposition");
	}
};

inline TracedFunctor trace(const SpaceFunctor &f) {
	TracedFunctor out{f.variables(), {}};
	for (const auto &component : f.components()) {
		std::vector<TracedSummand> summands;
		const auto words = component.summands();
		for (std::size_t p = 0; p < words.size(); ++p)
			summands.push_back({words[p], words[p].letters(), {p, words[p].size(), {}}, p, {}});
		out.components.push_back(std::move(summands));
	}
	return out;
}

inline SpaceFunctor untrace(const TracedFunctor &t) {
	std::vector<WedgeSum> components;
	for (const auto &summands : t.components) {
		WedgeSum w;
		for (const auto &s : summands)
			w.add(s.word);
		components.push_back(std::move(w));
	}
	return SpaceFunctor(t.variables, std::move(components));
}

namespace detail {

inline void graft(SummandTree &node, const std::vector<const SummandTree *> &slots, std::size_t &next) {
	if (node.children.empty()) {
		for (std::size_t k = 0; k < node.width; ++k)
			node.children.push_back(*slots.at(next++));
		return;
	}
	for (auto &child : node.children)
		graft(child, slots, next);
}

} // namespace detail

inline TracedFunctor traced_compose(const TracedFunctor &f, const TracedFunctor &g) {
	if (f.variables.generator_count() != g.components.size())
		throw InputError("cannot compose traced functors: arity mismatch");
	TracedFunctor out{g.variables, {}};
	for (const auto &fi : f.components) {
		std::vector<TracedSummand> result;
		for (std::size_t p = 0; p < fi.size(); ++p) {
			const auto &s = fi[p];
			const auto letters = s.word.letters();
			// Sorted occurrence k sits at frontier slot order[k].
			std::vector<std::size_t> order(s.frontier.size());
			std::iota(order.begin(), order.end(), 0);
			std::stable_sort(order.begin(), order.end(),
			                 [&](std::size_t a, std::size_t b) { return s.frontier[a] < s.frontier[b]; });
			std::vector<std::size_t> choice(letters.size(), 0);
			bool empty = false;
			for (auto v : letters)
				empty = empty || g.components.at(v).empty();
			if (empty)
				continue;
			while (true) {
				std::vector<const TracedSummand *> at_slot(letters.size());
				for (std::size_t k = 0; k < letters.size(); ++k)
					at_slot[order[k]] = &g.components[letters[k]][choice[k]];
				TracedSummand t;
				std::vector<const SummandTree *> slots;
				for (const auto *piece : at_slot) {
					t.frontier.insert(t.frontier.end(), piece->frontier.begin(), piece->frontier.end());
					slots.push_back(&piece->tree);
				}
				t.word = SmashWord(t.frontier);
				t.tree = s.tree;
				std::size_t next = 0;
				detail::graft(t.tree, slots, next);
				t.outer = p;
				t.inner = choice;
				result.push_back(std::move(t));

				std::size_t k = 0;
				while (k < letters.size() && ++choice[k] == g.components[letters[k]].size())
					choice[k++] = 0;
				if (k == letters.size())
					break;
			}
		}
		std::stable_sort(result.begin(), result.end(), [](const TracedSummand &a, const TracedSummand &b) {
			if (a.word != b.word)
				return a.word < b.word;
			return a.tree < b.tree;
		});
		out.components.push_back(std::move(result));
	}
	return out;
}

/// iota ▹ g~: maps compose(F, G) into compose(F', G) for iota: F -> F'.
inline SummandInclusion whisker_right(const SummandInclusion &iota, const TracedFunctor &fg,
                                      const TracedFunctor &fprime_g) {
	SummandInclusion out;
	for (std::size_t i = 0; i < fg.components.size(); ++i) {
		std::vector<std::size_t> map;
		for (const auto &s : fg.components[i])
			map.push_back(fprime_g.position_of(i, iota.components.at(i).at(s.outer), s.inner));
		out.components.push_back(std::move(map));
	}
	return out;
}

/// f~ ◃ kappa: maps compose(F, G) into compose(F, G') for kappa: G -> G'.
inline SummandInclusion whisker_left(const TracedFunctor &f, const SummandInclusion &kappa, const TracedFunctor &fg,
                                     const TracedFunctor &f_gprime) {
	SummandInclusion out;
	for (std::size_t i = 0; i < fg.components.size(); ++i) {
		std::vector<std::size_t> map;
		for (const auto &s : fg.components[i]) {
			const auto &letters = f.components[i].at(s.outer).word.letters();
			std::vector<std::size_t> moved;
			for (std::size_t k = 0; k < letters.size(); ++k)
				moved.push_back(kappa.components.at(letters[k]).at(s.inner[k]));
			map.push_back(f_gprime.position_of(i, s.outer, moved));
		}
		out.components.push_back(std::move(map));
	}
	return out;
}

struct CoherenceReport {
	/// ((f1 f2) f3) and (f1 (f2 f3)) list the same summand trees in the same order.
	bool associative = false;
	/// The two composite inclusions send each word's copies onto the same summands.
	bool same_image = false;
	/// The two composite inclusions agree position by position. Copies of one
	/// word in the composite are interchangeable, so this can fail while
	/// same_image holds; it is reported, not required.
	bool same_map = false;
	SummandInclusion via_left;  ///< alpha_{1,2} ▹ f3 after alpha_{12,3}
	SummandInclusion via_right; ///< f1 ◃ alpha_{2,3} after alpha_{1,23}

	bool holds() const noexcept { return associative && same_image; }
};

/// Both ways around the square
///
///     (p3 p2 p1)~ ----> (p2 p1)~ p3~
///         |                  |
///     p1~ (p3 p2)~ ----> p1~ p2~ p3~
///
/// computed as maps of summand positions.
inline CoherenceReport alpha_coherence(const WeilMorphism &phi1, const WeilMorphism &phi2, const WeilMorphism &phi3) {
	if (!(phi1.target() == phi2.source()) || !(phi2.target() == phi3.source()))
		throw InputError("coherence needs a composable triple");
	const auto p21 = compose(phi2, phi1);
	const auto p32 = compose(phi3, phi2);
	const auto t1 = trace(phitilde(phi1)), t2 = trace(phitilde(phi2)), t3 = trace(phitilde(phi3));

	const auto a12 = alpha(phi1, phi2).inclusion;
	const auto a23 = alpha(phi2, phi3).inclusion;
	const auto a12_3 = alpha(p21, phi3).inclusion;
	const auto a1_23 = alpha(phi1, p32).inclusion;

	const auto t12 = traced_compose(t1, t2);
	const auto t23 = traced_compose(t2, t3);
	const auto left_assoc = traced_compose(t12, t3);
	const auto right_assoc = traced_compose(t1, t23);

	CoherenceReport report;
	report.associative = left_assoc.components.size() == right_assoc.components.size();
	for (std::size_t i = 0; report.associative && i < left_assoc.components.size(); ++i) {
		const auto &l = left_assoc.components[i];
		const auto &r = right_assoc.components[i];
		report.associative = l.size() == r.size();
		for (std::size_t p = 0; report.associative && p < l.size(); ++p)
			report.associative = l[p].word == r[p].word && l[p].tree == r[p].tree;
	}

	const auto mid_left = traced_compose(trace(phitilde(p21)), t3);
	const auto mid_right = traced_compose(t1, trace(phitilde(p32)));
	report.via_left = compose(whisker_right(a12, mid_left, left_assoc), a12_3);
	report.via_right = compose(whisker_left(t1, a23, mid_right, right_assoc), a1_23);
	report.same_map = report.via_left == report.via_right;

	const auto words = phitilde(compose(phi3, p21));
	report.same_image = report.via_left.components.size() == report.via_right.components.size();
	for (std::size_t i = 0; report.same_image && i < words.out_arity(); ++i) {
		const auto summands = words.component(i).summands();
		std::map<SmashWord, std::vector<std::size_t>> left_hits, right_hits;
		for (std::size_t p = 0; p < summands.size(); ++p) {
			left_hits[summands[p]].push_back(report.via_left.components[i][p]);
			right_hits[summands[p]].push_back(report.via_right.components[i][p]);
		}
		for (auto &[w, v] : left_hits)
			std::sort(v.begin(), v.end());
		for (auto &[w, v] : right_hits)
			std::sort(v.begin(), v.end());
		report.same_image = left_hits == right_hits;
	}
	return report;
}

inline bool check_alpha_coherence(const WeilMorphism &phi1, const WeilMorphism &phi2, const WeilMorphism &phi3) {
	return alpha_coherence(phi1, phi2, phi3).holds();
}

/// Total number of summands in compose_space(f, g), without building it.
inline Natural composite_size(const SpaceFunctor &f, const SpaceFunctor &g) {
	Natural total = 0;
	for (const auto &fi : f.components())
		for (const auto &[word, copies] : fi.counts()) {
			Natural term = copies;
			for (auto v : word.letters())
				term *= g.component(v).summand_count();
			total += term;
		}
	return total;
}

/// Bounds for sampling inputs to the space calculus; composites of unbounded
/// samples can run to billions of summands.
inline SampleBounds space_sample_bounds() { return SampleBounds{2, 2, 3, 2}; }

inline constexpr std::size_t default_expansion_cap = 4096;

/// A composable pair whose expansion has at most `cap` summands.
inline std::array<WeilMorphism, 2> sample_bounded_pair(Sampler &s, std::size_t cap = default_expansion_cap) {
	while (true) {
		auto a0 = s.algebra(), a1 = s.algebra(), a2 = s.algebra();
		auto p1 = s.morphism(a0, a1), p2 = s.morphism(a1, a2);
		if (composite_size(phitilde(p1), phitilde(p2)) <= cap)
			return {p1, p2};
	}
}

/// A composable triple whose full expansion, and each partial one, has at most `cap` summands.
inline std::array<WeilMorphism, 3> sample_bounded_triple(Sampler &s, std::size_t cap = default_expansion_cap) {
	while (true) {
		auto a0 = s.algebra(), a1 = s.algebra(), a2 = s.algebra(), a3 = s.algebra();
		auto p1 = s.morphism(a0, a1), p2 = s.morphism(a1, a2), p3 = s.morphism(a2, a3);
		const auto f1 = phitilde(p1), f2 = phitilde(p2), f3 = phitilde(p3);
		if (composite_size(f1, f2) > cap || composite_size(f2, f3) > cap)
			continue;
		if (composite_size(compose_space(f1, f2), f3) <= cap)
			return {p1, p2, p3};
	}
}

} // namespace weilcat

#endif
