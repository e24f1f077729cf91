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

#include <gtest/gtest.h>

#include <weilcat/instances.hpp>

using namespace weilcat;

namespace {

const WeilAlgebra N;
const WeilAlgebra W = WeilAlgebra::power(1);
const WeilAlgebra WW = WeilAlgebra({1, 1});

std::string failures(const LawLedger &ledger) {
	std::string out;
	for (const auto &c : ledger.checks())
		for (const auto &w : c.witnesses)
			out += c.law + ": " + w + "\n";
	return out;
}

std::string failures(const std::vector<TangentPullbackReport> &reports) {
	std::string out;
	for (const auto &r : reports)
		for (const auto &f : r.failures)
			out += r.square + " #" + std::to_string(f.index) + ": " + f.reason + " " + f.cone + "\n";
	return out;
}

/// Replaces the delta component by the zero map.
template <class Base>
struct CorruptedDelta : Base {
	auto act_mor(const WeilMorphism &phi, const typename Base::Object &x) const {
		auto m = Base::act_mor(phi, x);
		if (phi == generators::delta())
			return zero_like(m);
		return m;
	}

  private:
	static NatMatrix zero_like(const NatMatrix &m) { return NatMatrix(m.rows(), m.cols()); }
	static WeilMorphism zero_like(const WeilMorphism &m) {
		return compose(unit(m.target()), augmentation(m.source()));
	}
};

} // namespace

TEST(Trivial, ActionLawsPass) {
	TrivialInstance inst;
	Sampler s(1);
	auto ledger = verify_action_laws(inst, sample_action_data(inst, s, 100));
	EXPECT_TRUE(ledger.passed()) << failures(ledger);
}

TEST(Trivial, StructureMapsAreIdentities) {
	TrivialInstance inst;
	auto m = structure_maps(inst, std::size_t{2});
	for (const auto &f : {m.p, m.zero, m.plus, m.flip, m.lift})
		EXPECT_EQ(f, NatMatrix::identity(2));
}

TEST(Trivial, PullbacksDegenerate) {
	TrivialInstance inst;
	Sampler s(2);
	auto reports = verify_tangent_pullbacks(inst, N, 1, 1, 200, s);
	for (const auto &r : reports) {
		EXPECT_TRUE(r.passed()) << failures(reports);
		EXPECT_TRUE(r.certified);
	}
}

TEST(WeilSelf, Examples) {
	WeilSelfInstance inst;
	EXPECT_EQ(inst.act_obj(W, W), WW);
	// act on the outer factor: x2 dies
	auto p = inst.act_mor(generators::epsilon(), W);
	EXPECT_EQ(p, tensor(identity(W), generators::epsilon()));
	EXPECT_EQ(to_text(p), "[W@W -> W]{ x1 -> x1 ; x2 -> 0 }");
}

TEST(WeilSelf, StructureMapsAtW) {
	WeilSelfInstance inst;
	EXPECT_TRUE(check_structure_maps(inst, W).passed());
	EXPECT_TRUE(check_structure_maps(inst, WeilAlgebra({2, 1})).passed());
}

TEST(WeilSelf, ActionLawsPass) {
	WeilSelfInstance inst;
	Sampler s(3);
	auto ledger = verify_action_laws(inst, sample_action_data(inst, s, 200));
	EXPECT_TRUE(ledger.passed()) << failures(ledger);
	for (const auto &c : ledger.checks())
		EXPECT_GE(c.checked, 200u) << c.law;
}

TEST(WeilSelf, CorruptedDeltaBreaksComposition) {
	CorruptedDelta<WeilSelfInstance> inst;
	Sampler s(4);
	auto ledger = verify_action_laws(inst, sample_action_data(inst, s, 50));
	EXPECT_FALSE(ledger["action.composition"].passed());
	EXPECT_FALSE(ledger["action.composition"].witnesses.empty());
}

TEST(WeilSelf, PullbacksPass) {
	WeilSelfInstance inst;
	Sampler s(5);
	auto reports = verify_tangent_pullbacks(inst, N, 1, 1, 200, s);
	for (const auto &r : reports) {
		EXPECT_TRUE(r.passed()) << failures(reports);
		EXPECT_TRUE(r.certified);
		EXPECT_EQ(r.cones_checked, 200u);
	}
}

TEST(NMod, Examples) {
	NModInstance inst;
	EXPECT_EQ(inst.act_obj(W, 1), 2u);
	EXPECT_EQ(inst.act_mor(generators::epsilon(), 1), (NatMatrix{{1, 0}}));
	// 1 -> 1, x -> x1 x2 on bases (1, x) and (1, x1, x2, x1x2)
	EXPECT_EQ(inst.act_mor(generators::delta(), 1), (NatMatrix{{1, 0}, {0, 0}, {0, 0}, {0, 1}}));
	EXPECT_EQ(structure_maps(inst, std::size_t{1}).p, (NatMatrix{{1, 0}}));
}

TEST(NMod, ActionLawsPass) {
	NModInstance inst;
	Sampler s(6);
	auto ledger = verify_action_laws(inst, sample_action_data(inst, s, 200));
	EXPECT_TRUE(ledger.passed()) << failures(ledger);
}

TEST(NMod, CorruptedDeltaBreaksComposition) {
	CorruptedDelta<NModInstance> inst;
	Sampler s(7);
	auto ledger = verify_action_laws(inst, sample_action_data(inst, s, 20));
	EXPECT_FALSE(ledger["action.composition"].passed());
}

TEST(NMod, PullbacksPass) {
	NModInstance inst;
	Sampler s(8);
	auto reports = verify_tangent_pullbacks(inst, N, 1, 1, 200, s);
	auto more = verify_tangent_pullbacks(inst, WW, 2, 1, 200, s);
	reports.insert(reports.end(), more.begin(), more.end());
	for (const auto &r : reports) {
		EXPECT_TRUE(r.passed()) << failures(reports);
		EXPECT_TRUE(r.certified);
	}
}

TEST(NMod, StructureMaps) {
	NModInstance inst;
	for (std::size_t k = 0; k <= 3; ++k)
		EXPECT_TRUE(check_structure_maps(inst, k).passed()) << k;
}

TEST(NMod, ProductPreserving) {
	NModInstance inst;
	Sampler s(9, weil_sample_bounds());
	for (int t = 0; t < 50; ++t) {
		auto a = s.algebra();
		std::size_t m = s.uniform(0, 3), n = s.uniform(0, 3);
		EXPECT_EQ(inst.act_obj(a, m + n), inst.act_obj(a, m) + inst.act_obj(a, n));
		auto pi1 = concat(NatMatrix::identity(m), NatMatrix(m, n));
		auto pi2 = concat(NatMatrix(n, m), NatMatrix::identity(n));
		EXPECT_TRUE(is_permutation(stack(inst.act_fun(a, pi1), inst.act_fun(a, pi2)))) << to_text(a);
	}
}

TEST(DiffObject, CanonicalOnN) {
	auto d = canonical_diffobj_N();
	EXPECT_EQ(d.sigma, (NatMatrix{{1, 1}}));
	EXPECT_EQ(d.phat, (NatMatrix{{0, 1}}));
	EXPECT_EQ(d.zeta.shape(), NatMatrix(1, 0).shape());
	NModInstance inst;
	EXPECT_EQ(stack(inst.act_mor(generators::epsilon(), 1), d.phat), NatMatrix::identity(2));
	auto ledger = check_diffobj(d, inst);
	EXPECT_TRUE(ledger.passed()) << failures(ledger);
	EXPECT_EQ(ledger.checks().size(), 8u);
}

TEST(DiffObject, CanonicalOnHigherRanks) {
	NModInstance inst;
	for (std::size_t k = 0; k <= 3; ++k)
		EXPECT_TRUE(check_diffobj(canonical_diffobj(k), inst).passed()) << k;
}

// Oracle for the four equations, by hand on bases (1, x) and (1, x1, x2, x1x2):
// l = e1 e1^T + e4 e2^T, T(f) = diag(f, f).
TEST(DiffObject, HandComputedComposites) {
	const NatMatrix l{{1, 0}, {0, 0}, {0, 0}, {0, 1}};
	const NatMatrix p{{1, 0}};
	const NatMatrix phat{{0, 1}};
	auto T = [](const NatMatrix &f) { return block_diagonal(f, f); };
	EXPECT_EQ(p * T(p) * l, p);
	EXPECT_EQ(phat * T(p) * l, NatMatrix(1, 2));
	EXPECT_EQ(p * T(phat) * l, NatMatrix(1, 2));
	EXPECT_EQ(phat * T(phat) * l, phat);
	NModInstance inst;
	EXPECT_EQ(inst.act_fun(W, p), T(p));
	EXPECT_EQ(inst.act_mor(generators::delta(), 1), l);
}

TEST(DiffObject, CorruptedPhatOnes) {
	auto d = canonical_diffobj_N();
	d.phat = NatMatrix{{1, 1}};
	auto ledger = check_diffobj(d, NModInstance{});
	EXPECT_FALSE(ledger.passed());
	EXPECT_FALSE(ledger["diff.pair_invertible"].passed());
	EXPECT_FALSE(ledger["diff.phat_Tp_l"].passed());
	EXPECT_FALSE(ledger["diff.p_Tphat_l"].passed());
	// [1 1] [1 1] l = [1 1]: the extra axiom survives this corruption
	EXPECT_TRUE(ledger["diff.phat_Tphat_l"].passed());
}

TEST(DiffObject, CorruptedPhatTwo) {
	auto d = canonical_diffobj_N();
	d.phat = NatMatrix{{0, 2}};
	auto ledger = check_diffobj(d, NModInstance{});
	EXPECT_FALSE(ledger["diff.phat_Tphat_l"].passed());
	EXPECT_FALSE(ledger["diff.pair_invertible"].passed());
	EXPECT_TRUE(ledger["diff.phat_Tp_l"].passed());
	EXPECT_TRUE(ledger["diff.p_Tphat_l"].passed());
}

TEST(DiffObject, TrivialActionNeedsTerminalCarrier) {
	TrivialInstance inst;
	DiffObject d{1, NatMatrix{{1, 1}}, NatMatrix(1, 0), NatMatrix{{1}}};
	EXPECT_FALSE(check_diffobj(d, inst)["diff.pair_invertible"].passed());
	DiffObject terminal{0, NatMatrix(0, 0), NatMatrix(0, 0), NatMatrix(0, 0)};
	EXPECT_TRUE(check_diffobj(terminal, inst).passed());
}

TEST(DiffObject, WrongShapesAreInputErrors) {
	auto d = canonical_diffobj_N();
	d.phat = NatMatrix{{1}};
	EXPECT_THROW(check_diffobj(d, NModInstance{}), InputError);
}

TEST(Derivative, Examples) {
	auto d = canonical_diffobj_N();
	EXPECT_EQ(derivative(NatMatrix::identity(1), d, d), (NatMatrix{{0, 1}}));
	EXPECT_EQ(derivative(NatMatrix{{0}}, d, d), (NatMatrix{{0, 0}}));
	auto bad = d;
	bad.phat = NatMatrix{{1, 1}};
	EXPECT_THROW(derivative(NatMatrix::identity(1), bad, d), InputError);
}

TEST(Derivative, ChainRuleAndAdditivity) {
	Sampler s(10);
	for (int t = 0; t < 100; ++t) {
		std::size_t a = s.uniform(0, 3), b = s.uniform(0, 3), c = s.uniform(0, 3);
		auto f = random_matrix(s, b, a), f2 = random_matrix(s, b, a), g = random_matrix(s, c, b);
		auto da = canonical_diffobj(a), db = canonical_diffobj(b), dc = canonical_diffobj(c);
		// grad(g f) = grad(g) <f pi1, grad(f)>
		auto pi1 = concat(NatMatrix::identity(a), NatMatrix(a, a));
		EXPECT_EQ(derivative(g * f, da, dc), derivative(g, db, dc) * stack(f * pi1, derivative(f, da, db)));
		EXPECT_EQ(derivative(f + f2, da, db), derivative(f, da, db) + derivative(f2, da, db));
		// linear maps act on the direction coordinate
		EXPECT_EQ(derivative(f, da, db), concat(NatMatrix(b, a), f));
	}
}
