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

#ifndef WEILCAT_TANGENT_HPP
#define WEILCAT_TANGENT_HPP

#include <algorithm>
#include <array>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "limits.hpp"
#include "random.hpp"
#include "text.hpp"
#include "weil.hpp"

namespace weilcat {

/// A square of Weil algebras pushed through an action at one object.
template <class Obj, class Mor>
struct ImageSquare {
	Square base;
	Obj object;
	Mor top, left, right, bottom;
};

/// Legs out of a common apex into the right and bottom corners. When the cone
/// was built from a map into the corner, `witness` holds that map.
template <class Mor>
struct InstanceCone {
	Mor leg_right;
	Mor leg_bottom;
	std::optional<Mor> witness;
};

/// A computable category with a strict action of the Weil category on it.
/// `compose(g, f)` is g after f. `act_obj(A, X)` is T^A X, `act_mor(phi, X)` the
/// component of T^phi at X, `act_fun(A, f)` is T^A f. Strictness means
/// T^{A (x) A'} = T^{A'} T^A.
template <class I>
concept TangentInstance =
    requires(const I &c, const typename I::Object &x, const typename I::Morphism &f, const WeilAlgebra &a,
             const WeilMorphism &phi, Sampler &s, const ImageSquare<typename I::Object, typename I::Morphism> &sq,
             const InstanceCone<typename I::Morphism> &cone) {
	    { c.name() } -> std::convertible_to<std::string>;
	    { c.identity(x) } -> std::same_as<typename I::Morphism>;
	    { c.compose(f, f) } -> std::same_as<typename I::Morphism>;
	    { c.source(f) } -> std::same_as<typename I::Object>;
	    { c.target(f) } -> std::same_as<typename I::Object>;
	    { c.act_obj(a, x) } -> std::same_as<typename I::Object>;
	    { c.act_mor(phi, x) } -> std::same_as<typename I::Morphism>;
	    { c.act_fun(a, f) } -> std::same_as<typename I::Morphism>;
	    { c.sample_object(s) } -> std::same_as<typename I::Object>;
	    { c.sample_morphism(s, x) } -> std::same_as<typename I::Morphism>;
	    { c.sample_cone(sq, s) } -> std::same_as<InstanceCone<typename I::Morphism>>;
	    { c.lift(sq, cone) } -> std::same_as<std::optional<typename I::Morphism>>;
	    { c.certify(sq) } -> std::same_as<bool>;
	    { c.describe(x) } -> std::convertible_to<std::string>;
	    { c.describe(f) } -> std::convertible_to<std::string>;
	    requires std::equality_comparable<typename I::Object>;
	    requires std::equality_comparable<typename I::Morphism>;
    };

struct LawCheck {
	std::string law;
	std::size_t checked = 0;
	std::size_t failed = 0;
	/// The first few violations, each with its witnesses.
	std::vector<std::string> witnesses;

	static constexpr std::size_t max_witnesses = 5;

	void record(bool ok, const std::string &witness) {
		++checked;
		if (ok)
			return;
		++failed;
		if (witnesses.size() < max_witnesses)
			witnesses.push_back(witness);
	}
	bool passed() const noexcept { return failed == 0; }
};

class LawLedger {
  public:
	LawCheck &operator[](const std::string &law) {
		for (auto &c : checks_)
			if (c.law == law)
				return c;
		return checks_.emplace_back(LawCheck{law, 0, 0, {}});
	}
	const std::vector<LawCheck> &checks() const noexcept { return checks_; }
	bool passed() const {
		return std::all_of(checks_.begin(), checks_.end(), [](const LawCheck &c) { return c.passed(); });
	}

  private:
	std::vector<LawCheck> checks_;
};

template <class Obj, class Mor>
struct ActionSamples {
	std::vector<Obj> objects;
	/// Composable chains f1: X0 -> X1, f2: X1 -> X2, f3: X2 -> X3.
	std::vector<std::array<Mor, 3>> chains;
	/// Composable pairs (phi, psi), psi after phi.
	std::vector<std::pair<WeilMorphism, WeilMorphism>> weil_pairs;
	/// Arbitrary pairs for tensoring.
	std::vector<std::pair<WeilMorphism, WeilMorphism>> tensor_pairs;
};

/// The named generators and a few identities: every composable pair, and every pair for tensoring.
inline std::pair<std::vector<std::pair<WeilMorphism, WeilMorphism>>, std::vector<std::pair<WeilMorphism, WeilMorphism>>>
named_weil_pairs() {
	std::vector<WeilMorphism> pool;
	for (const auto &g : named_generators())
		pool.push_back(g.morphism);
	for (const auto &a : {WeilAlgebra(), generators::w(), generators::w2(), generators::ww()})
		pool.push_back(identity(a));
	std::vector<std::pair<WeilMorphism, WeilMorphism>> composable, all;
	for (const auto &phi : pool)
		for (const auto &psi : pool) {
			if (phi.target() == psi.source())
				composable.emplace_back(phi, psi);
			all.emplace_back(phi, psi);
		}
	return {composable, all};
}

/// Weil data with at most two blocks of width two, so tensors and actions stay small.
inline SampleBounds weil_sample_bounds() { return SampleBounds{2, 2, 3, 2}; }

template <TangentInstance I>
ActionSamples<typename I::Object, typename I::Morphism> sample_action_data(const I &inst, Sampler &sampler,
                                                                          std::size_t budget) {
	ActionSamples<typename I::Object, typename I::Morphism> out;
	for (std::size_t k = 0; k < budget; ++k) {
		out.objects.push_back(inst.sample_object(sampler));
		auto f1 = inst.sample_morphism(sampler, out.objects.back());
		auto f2 = inst.sample_morphism(sampler, inst.target(f1));
		auto f3 = inst.sample_morphism(sampler, inst.target(f2));
		out.chains.push_back({f1, f2, f3});
	}
	auto [composable, all] = named_weil_pairs();
	out.weil_pairs = std::move(composable);
	out.tensor_pairs = std::move(all);
	Sampler weil(sampler.engine()(), weil_sample_bounds());
	for (std::size_t k = 0; k < budget; ++k) {
		auto a0 = weil.algebra(), a1 = weil.algebra(), a2 = weil.algebra();
		auto phi = weil.morphism(a0, a1);
		out.weil_pairs.emplace_back(phi, weil.morphism(a1, a2));
		out.tensor_pairs.emplace_back(weil.morphism(), weil.morphism());
	}
	return out;
}

/// Checks, exactly, the category laws on chains and the laws of a strict
/// monoidal action on every sample. Index k pairs the k-th item of each list
/// (cyclically), so every sample of every list is used at least once.
template <TangentInstance I>
LawLedger verify_action_laws(const I &inst, const ActionSamples<typename I::Object, typename I::Morphism> &samples) {
	LawLedger ledger;
	if (samples.objects.empty() || samples.chains.empty())
		throw InputError("action laws need at least one object and one chain");
	const std::size_t rounds = std::max({samples.objects.size(), samples.chains.size(), samples.weil_pairs.size(),
	                                     samples.tensor_pairs.size()});
	auto d = [&](const auto &v) { return std::string(inst.describe(v)); };
	const WeilAlgebra unit_algebra;

	for (std::size_t k = 0; k < rounds; ++k) {
		const auto &x = samples.objects[k % samples.objects.size()];
		const auto &[f1, f2, f3] = samples.chains[k % samples.chains.size()];
		const auto x0 = inst.source(f1), x1 = inst.target(f1);

		ledger["category.identity"].record(inst.compose(f1, inst.identity(x0)) == f1 &&
		                                       inst.compose(inst.identity(x1), f1) == f1,
		                                   "f=" + d(f1));
		ledger["category.associativity"].record(
		    inst.compose(f3, inst.compose(f2, f1)) == inst.compose(inst.compose(f3, f2), f1),
		    "f1=" + d(f1) + " f2=" + d(f2) + " f3=" + d(f3));

		ledger["strict.unit_object"].record(inst.act_obj(unit_algebra, x) == x, "X=" + d(x));
		ledger["strict.unit_function"].record(inst.act_fun(unit_algebra, f1) == f1, "f=" + d(f1));
		ledger["strict.unit_component"].record(inst.act_mor(identity(unit_algebra), x) == inst.identity(x),
		                                       "X=" + d(x));

		if (!samples.weil_pairs.empty()) {
			const auto &[phi, psi] = samples.weil_pairs[k % samples.weil_pairs.size()];
			const auto &a = phi.source();
			const auto &b = phi.target();
			const auto wit = [&] { return "phi=" + to_text(phi) + " X=" + d(x); };

			ledger["action.identity"].record(inst.act_mor(identity(a), x) == inst.identity(inst.act_obj(a, x)),
			                                 "A=" + to_text(a) + " X=" + d(x));
			ledger["action.composition"].record(inst.act_mor(compose(psi, phi), x) ==
			                                        inst.compose(inst.act_mor(psi, x), inst.act_mor(phi, x)),
			                                    wit() + " psi=" + to_text(psi));
			ledger["action.naturality"].record(
			    inst.compose(inst.act_mor(phi, x1), inst.act_fun(a, f1)) ==
			        inst.compose(inst.act_fun(b, f1), inst.act_mor(phi, x0)),
			    "phi=" + to_text(phi) + " f=" + d(f1));
			ledger["functor.identity"].record(inst.act_fun(a, inst.identity(x)) ==
			                                      inst.identity(inst.act_obj(a, x)),
			                                  "A=" + to_text(a) + " X=" + d(x));
			ledger["functor.composition"].record(inst.act_fun(a, inst.compose(f2, f1)) ==
			                                         inst.compose(inst.act_fun(a, f2), inst.act_fun(a, f1)),
			                                     "A=" + to_text(a) + " f1=" + d(f1) + " f2=" + d(f2));
		}

		if (!samples.tensor_pairs.empty()) {
			const auto &[phi, phi2] = samples.tensor_pairs[k % samples.tensor_pairs.size()];
			const auto &a = phi.source(), &a2 = phi2.source();
			const auto &b = phi.target();
			const auto aa = tensor(a, a2);
			const auto wit = "A=" + to_text(a) + " A'=" + to_text(a2);

			ledger["strict.tensor_object"].record(inst.act_obj(aa, x) == inst.act_obj(a2, inst.act_obj(a, x)),
			                                      wit + " X=" + d(x));
			ledger["strict.tensor_function"].record(inst.act_fun(aa, f1) == inst.act_fun(a2, inst.act_fun(a, f1)),
			                                        wit + " f=" + d(f1));
			// T^{phi (x) phi'}_X = phi'_{T^B X} o T^{A'}(phi_X)
			ledger["strict.tensor_component"].record(
			    inst.act_mor(tensor(phi, phi2), x) ==
			        inst.compose(inst.act_mor(phi2, inst.act_obj(b, x)), inst.act_fun(a2, inst.act_mor(phi, x))),
			    "phi=" + to_text(phi) + " phi'=" + to_text(phi2) + " X=" + d(x));
		}
	}
	return ledger;
}

template <TangentInstance I>
ImageSquare<typename I::Object, typename I::Morphism> image_square(const I &inst, const Square &sq,
                                                                   const typename I::Object &x) {
	return {sq, x, inst.act_mor(sq.top, x), inst.act_mor(sq.left, x), inst.act_mor(sq.right, x),
	        inst.act_mor(sq.bottom, x)};
}

struct TangentPullbackReport {
	std::string square;
	std::size_t objects = 0;
	std::size_t cones_checked = 0;
	bool commutes = true;
	/// The instance vouched for uniqueness at every sampled object. Without it
	/// uniqueness rests on the sampled cones alone.
	bool certified = true;
	std::vector<ConeFailure> failures;

	bool passed() const noexcept { return commutes && failures.empty(); }
};

/// Lifts sampled cones against the image of `sq` at each of `objects`, cycling
/// through them until `cone_budget` cones have been checked.
template <TangentInstance I>
TangentPullbackReport verify_image_pullback(const I &inst, const Square &sq,
                                            const std::vector<typename I::Object> &objects, Sampler &sampler,
                                            std::size_t cone_budget) {
	TangentPullbackReport report{sq.name(), objects.size(), 0, true, true, {}};
	std::vector<ImageSquare<typename I::Object, typename I::Morphism>> images;
	for (const auto &x : objects) {
		auto img = image_square(inst, sq, x);
		if (!(inst.compose(img.right, img.top) == inst.compose(img.bottom, img.left))) {
			report.commutes = false;
			report.failures.push_back({0, "X=" + std::string(inst.describe(x)), "image square does not commute"});
		}
		report.certified = report.certified && inst.certify(img);
		images.push_back(std::move(img));
	}
	if (images.empty())
		return report;
	for (std::size_t k = 0; k < cone_budget; ++k) {
		const auto &img = images[k % images.size()];
		const auto cone = inst.sample_cone(img, sampler);
		++report.cones_checked;
		const auto fail = [&](const std::string &why) {
			report.failures.push_back({k,
			                           "X=" + std::string(inst.describe(img.object)) +
			                               " right=" + std::string(inst.describe(cone.leg_right)) +
			                               " bottom=" + std::string(inst.describe(cone.leg_bottom)),
			                           why});
		};
		if (!(inst.compose(img.right, cone.leg_right) == inst.compose(img.bottom, cone.leg_bottom))) {
			fail("sampled legs do not form a cone");
			continue;
		}
		const auto lift = inst.lift(img, cone);
		if (!lift) {
			fail("no lift");
			continue;
		}
		if (!(inst.compose(img.top, *lift) == cone.leg_right) || !(inst.compose(img.left, *lift) == cone.leg_bottom)) {
			fail("lift does not factor the cone: " + std::string(inst.describe(*lift)));
			continue;
		}
		if (cone.witness && !(*cone.witness == *lift))
			fail("second lift " + std::string(inst.describe(*cone.witness)) + " besides " +
			     std::string(inst.describe(*lift)));
	}
	return report;
}

/// The foundational square for (A, m, n) and the vertical-lift square, pushed
/// through the action.
template <TangentInstance I>
std::vector<TangentPullbackReport> verify_tangent_pullbacks(const I &inst, const WeilAlgebra &a, std::size_t m,
                                                            std::size_t n, std::size_t cone_budget, Sampler &sampler,
                                                            std::size_t object_count = 4) {
	std::vector<typename I::Object> objects;
	for (std::size_t k = 0; k < object_count; ++k)
		objects.push_back(inst.sample_object(sampler));
	std::vector<TangentPullbackReport> out;
	for (const auto &sq : {foundational_square(a, m, n), vertical_square()})
		out.push_back(verify_image_pullback(inst, sq, objects, sampler, cone_budget));
	return out;
}

template <class Mor>
struct StructureMaps {
	Mor p;    ///< projection T X -> X
	Mor zero; ///< zero section X -> T X
	Mor plus; ///< addition T_2 X -> T X
	Mor flip; ///< T^2 X -> T^2 X
	Mor lift; ///< vertical lift T X -> T^2 X
};

template <TangentInstance I>
StructureMaps<typename I::Morphism> structure_maps(const I &inst, const typename I::Object &x) {
	using namespace generators;
	return {inst.act_mor(epsilon(), x), inst.act_mor(eta(), x), inst.act_mor(plus(), x), inst.act_mor(sigma(), x),
	        inst.act_mor(delta(), x)};
}

/// p o 0 = 1, c o c = 1 and c o l = l at x.
template <TangentInstance I>
void check_structure_maps(const I &inst, const typename I::Object &x, LawLedger &ledger) {
	const auto s = structure_maps(inst, x);
	const auto w = "X=" + std::string(inst.describe(x));
	ledger["structure.p_after_zero"].record(inst.compose(s.p, s.zero) == inst.identity(x), w);
	ledger["structure.flip_involution"].record(
	    inst.compose(s.flip, s.flip) == inst.identity(inst.act_obj(generators::ww(), x)), w);
	ledger["structure.flip_after_lift"].record(inst.compose(s.flip, s.lift) == s.lift, w);
}

template <TangentInstance I>
LawLedger check_structure_maps(const I &inst, const typename I::Object &x) {
	LawLedger ledger;
	check_structure_maps(inst, x, ledger);
	return ledger;
}

struct TangentReport {
	std::string instance;
	std::uint64_t seed = 0;
	LawLedger laws;
	std::vector<TangentPullbackReport> pullbacks;

	bool passed() const {
		return laws.passed() && std::all_of(pullbacks.begin(), pullbacks.end(),
		                                    [](const TangentPullbackReport &r) { return r.passed(); });
	}
};

/// Everything the engine checks for one instance: action laws on `budget`
/// samples, structure-map sanity at each sampled object, and the foundational
/// (N, 1, 1), (W, 1, 2) and vertical-lift pullbacks with `budget` cones each.
template <TangentInstance I>
TangentReport check_tangent(const I &inst, std::uint64_t seed, std::size_t budget) {
	Sampler sampler(seed);
	TangentReport report{std::string(inst.name()), seed, {}, {}};
	const auto samples = sample_action_data(inst, sampler, budget);
	report.laws = verify_action_laws(inst, samples);
	for (const auto &x : samples.objects)
		check_structure_maps(inst, x, report.laws);
	for (auto &&r : verify_tangent_pullbacks(inst, WeilAlgebra(), 1, 1, budget, sampler))
		report.pullbacks.push_back(std::move(r));
	auto second = verify_image_pullback(inst, foundational_square(generators::w(), 1, 2),
	                                    {inst.sample_object(sampler), inst.sample_object(sampler)}, sampler, budget);
	report.pullbacks.push_back(std::move(second));
	return report;
}

} // namespace weilcat

#endif
