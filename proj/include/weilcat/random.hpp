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
 * Seeded generators for bounded random Weil algebras and morphisms.
 *
 * Morphisms are valid by construction. For each source block a pool of
 * pairwise annihilating target monomials is drawn (the product of any two is
 * zero in the target); every generator in that block is then sent to an
 * N-combination of pool members, so all products of images within the block
 * vanish.
 */

#ifndef WEILCAT_RANDOM_HPP
#define WEILCAT_RANDOM_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "weil.hpp"

namespace weilcat {

struct SampleBounds {
	std::size_t max_blocks = 3;
	std::size_t max_width = 3;
	std::size_t max_monomials = 4;
	unsigned max_coefficient = 3;
};

class Sampler {
  public:
	explicit Sampler(std::uint64_t seed, SampleBounds bounds = {}) : rng_(seed), bounds_(bounds) {}

	std::mt19937_64 &engine() noexcept { return rng_; }
	const SampleBounds &bounds() const noexcept { return bounds_; }

	std::size_t uniform(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_); }
	bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

	WeilAlgebra algebra(std::size_t min_blocks = 0) {
		const auto blocks = uniform(std::min(min_blocks, bounds_.max_blocks), bounds_.max_blocks);
		std::vector<std::size_t> widths;
		for (std::size_t b = 0; b < blocks; ++b)
			widths.push_back(uniform(1, bounds_.max_width));
		return WeilAlgebra(std::move(widths));
	}

	/// A nonconstant nonzero monomial; the algebra must have generators.
	Monomial monomial(const WeilAlgebra &a) {
		std::vector<Generator> raw;
		for (std::size_t b = 0; b < a.block_count(); ++b)
			if (coin())
				raw.push_back(a.block_start(b) + uniform(0, a.widths()[b] - 1));
		if (raw.empty()) {
			const auto b = uniform(0, a.block_count() - 1);
			raw.push_back(a.block_start(b) + uniform(0, a.widths()[b] - 1));
		}
		return *normalize_monomial(a, raw);
	}

	Element element_from(const WeilAlgebra &a, const std::vector<Monomial> &pool) {
		Element e(a);
		if (pool.empty())
			return e;
		const auto terms = uniform(0, std::min(bounds_.max_monomials, pool.size()));
		std::vector<std::size_t> order(pool.size());
		for (std::size_t k = 0; k < order.size(); ++k)
			order[k] = k;
		std::shuffle(order.begin(), order.end(), rng_);
		for (std::size_t k = 0; k < terms; ++k)
			e.add_term(pool[order[k]], uniform(1, bounds_.max_coefficient));
		return e;
	}

	/// Arbitrary element, not constrained by any relation.
	Element element(const WeilAlgebra &a) {
		std::vector<Monomial> pool;
		if (a.generator_count() > 0)
			for (std::size_t k = 0; k < bounds_.max_monomials; ++k)
				pool.push_back(monomial(a));
		std::sort(pool.begin(), pool.end());
		pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
		return element_from(a, pool);
	}

	WeilMorphism morphism(const WeilAlgebra &source, const WeilAlgebra &target) {
		std::vector<Element> images;
		for (std::size_t b = 0; b < source.block_count(); ++b) {
			auto pool = annihilating_pool(target);
			for (std::size_t k = 0; k < source.widths()[b]; ++k)
				images.push_back(element_from(target, pool));
		}
		return WeilMorphism::make(source, target, std::move(images));
	}

	WeilMorphism morphism_from(const WeilAlgebra &source) { return morphism(source, algebra()); }
	WeilMorphism morphism_to(const WeilAlgebra &target) { return morphism(algebra(), target); }
	WeilMorphism morphism() {
		auto source = algebra();
		return morphism(source, algebra());
	}

  private:
	std::vector<Monomial> annihilating_pool(const WeilAlgebra &target) {
		std::vector<Monomial> pool;
		if (target.generator_count() == 0)
			return pool;
		for (std::size_t attempt = 0; attempt < 2 * bounds_.max_monomials && pool.size() < bounds_.max_monomials;
		     ++attempt) {
			auto m = monomial(target);
			const bool ok = std::all_of(pool.begin(), pool.end(),
			                            [&](const Monomial &p) { return p != m && !multiply(target, p, m).has_value(); });
			if (ok)
				pool.push_back(std::move(m));
		}
		return pool;
	}

	std::mt19937_64 rng_;
	SampleBounds bounds_;
};

} // namespace weilcat

#endif
