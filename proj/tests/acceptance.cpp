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

// One line per acceptance criterion. Exit status is the number of failing lines.

#include <weilcat/cli.hpp>
#include <weilcat/dsl.hpp>
#include <weilcat/instances.hpp>
#include <weilcat/limits.hpp>
#include <weilcat/random.hpp>
#include <weilcat/space.hpp>
#include <weilcat/tangent.hpp>
#include <weilcat/text.hpp>
#include <weilcat/weil.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace weilcat;

namespace {

struct Outcome {
	bool ok = true;
	std::string detail;
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int n, const std::function<Outcome()> &run, double limit_seconds = 0) {
	const auto start = Clock::now();
	Outcome o;
	try {
		o = run();
	} catch (const std::exception &e) {
		o = {false, std::string("exception: ") + e.what()};
	}
	const double secs = std::chrono::duration<double>(Clock::now() - start).count();
	bool ok = o.ok;
	std::ostringstream line;
	line.precision(2);
	line << std::fixed << "[AC" << n << "] ";
	if (limit_seconds > 0 && secs >= limit_seconds) {
		ok = false;
		o.detail += "; over time limit";
	}
	line << (ok ? "PASS " : "FAIL ") << o.detail << " (" << secs << " s";
	if (limit_seconds > 0)
		line << ", limit " << limit_seconds << " s";
	line << ")";
	std::cout << line.str() << std::endl;
	if (!ok)
		++failures;
}

Element term(const WeilAlgebra &a, std::initializer_list<Generator> gens, unsigned coef) {
	return Element::monomial(a, *normalize_monomial(a, std::vector<Generator>(gens))).scaled(coef);
}

Outcome weil_laws() {
	Sampler s(1);
	std::size_t morphisms = 0, bad = 0;
	const WeilAlgebra unit;
	while (morphisms < 1000) {
		auto a = s.algebra(), b = s.algebra(), c = s.algebra(), d = s.algebra(), e = s.algebra(), f = s.algebra();
		auto phi = s.morphism(a, b), psi = s.morphism(b, c), chi = s.morphism(c, d);
		auto rho = s.morphism(d, e), tau = s.morphism(e, f);
		morphisms += 5;
		bool ok = compose(chi, compose(psi, phi)) == compose(compose(chi, psi), phi);
		ok = ok && compose(identity(b), phi) == phi && compose(phi, identity(a)) == phi;
		ok = ok && compose(tensor(psi, tau), tensor(phi, rho)) == tensor(compose(psi, phi), compose(tau, rho));
		ok = ok && tensor(tensor(phi, rho), chi) == tensor(phi, tensor(rho, chi));
		ok = ok && tensor(phi, identity(unit)) == phi && tensor(identity(unit), phi) == phi;
		ok = ok && tensor(tensor(a, b), c) == tensor(a, tensor(b, c));
		ok = ok && tensor(a, unit) == a && tensor(unit, a) == a;
		bad += !ok;
	}
	return {bad == 0, std::to_string(morphisms) + " morphisms, " + std::to_string(bad) + " law violations"};
}

Outcome examples() {
	const auto W2 = WeilAlgebra::power(2), WW = WeilAlgebra({1, 1});
	// x -> 2x + xy + y, y -> 3xy
	auto phi = WeilMorphism::unchecked(W2, WW, {term(WW, {0}, 2) + term(WW, {0, 1}, 1) + term(WW, {1}, 1),
	                                            term(WW, {0, 1}, 3)});
	const bool mixed_zero = (phi.image(0) * phi.image(1)).is_zero();
	const auto square = phi.image(0) * phi.image(0);
	const auto hom = check_hom(phi);
	std::string named;
	bool named_ok = true;
	for (const auto &[name, m] : named_generators()) {
		if (!check_hom(m)) {
			named_ok = false;
			named += " " + name;
		}
	}
	std::string detail = "x -> 2x + xy + y, y -> 3xy: phi(x)*phi(y) = " + to_text(phi.image(0) * phi.image(1)) +
	                     ", check-hom " + (hom ? "passes" : "fails on phi(x)^2 = " + to_text(square)) +
	                     "; mu, epsilon, eta, plus, sigma, delta " + (named_ok ? "pass" : "fail:" + named);
	return {mixed_zero && bool(hom) && named_ok, detail};
}

Outcome pullbacks() {
	const WeilAlgebra grid[] = {WeilAlgebra(), WeilAlgebra::power(1), WeilAlgebra::power(2), WeilAlgebra({1, 1})};
	std::vector<Square> squares{vertical_square()};
	for (const auto &a : grid)
		for (std::size_t m = 1; m <= 2; ++m)
			for (std::size_t n = 1; n <= 2; ++n)
				squares.push_back(foundational_square(a, m, n));
	Sampler s(3);
	std::size_t cones = 0, bad_cert = 0, bad_cones = 0;
	std::string first;
	for (const auto &sq : squares) {
		if (!certify(sq).holds()) {
			++bad_cert;
			if (first.empty())
				first = "; uncertified " + sq.name();
		}
		auto r = verify_pullback(sq, s, 500);
		cones += r.cones_checked;
		bad_cones += r.failures.size();
		if (!r.passed() && first.empty())
			first = "; " + sq.name() + ": " + (r.failures.empty() ? "" : r.failures.front().reason);
	}
	return {bad_cert == 0 && bad_cones == 0 && cones == 500 * squares.size(),
	        std::to_string(squares.size()) + " squares certified " + std::to_string(squares.size() - bad_cert) + ", " +
	            std::to_string(cones) + " cones, " + std::to_string(bad_cones) + " failures" + first};
}

Outcome phitilde_examples() {
	const std::pair<WeilMorphism, std::string> cases[] = {
	    {generators::delta(), "X1^X2"}, {generators::plus(), "(X1, X1)"}, {generators::epsilon(), "*"},
	    {generators::eta(), "()"},      {generators::sigma(), "(X2, X1)"},
	};
	std::string got;
	bool ok = true;
	for (const auto &[m, want] : cases) {
		const auto text = to_text(phitilde(m));
		ok = ok && text == want;
		got += (got.empty() ? "" : ", ") + text;
	}
	return {ok, "delta, plus, epsilon, eta, sigma -> " + got};
}

Outcome decomposition() {
	Sampler s(5, space_sample_bounds());
	std::size_t bad = 0;
	for (int k = 0; k < 500; ++k) {
		auto [p1, p2] = sample_bounded_pair(s);
		auto r = alpha(p1, p2);
		bad += !(decomposition_holds(p1, p2) && is_valid_inclusion(r.inclusion, r.composite, r.expanded));
	}
	return {bad == 0, "500 pairs, " + std::to_string(bad) + " failures"};
}

Outcome coherence() {
	Sampler s(6, space_sample_bounds());
	std::size_t bad = 0, positional = 0;
	for (int k = 0; k < 300; ++k) {
		auto [p1, p2, p3] = sample_bounded_triple(s);
		auto r = alpha_coherence(p1, p2, p3);
		bad += !r.holds();
		positional += r.same_map;
	}
	return {bad == 0, "300 triples, " + std::to_string(bad) +
	                      " failures as maps out of summand multisets; identical copy numbering in " +
	                      std::to_string(positional) + "/300"};
}

Outcome tangent() {
	std::string detail;
	bool ok = true;
	const auto one = [&](const auto &inst) {
		auto r = check_tangent(inst, 7, 200);
		ok = ok && r.passed();
		std::size_t checked = 0;
		for (const auto &c : r.laws.checks())
			checked += c.checked;
		std::size_t cones = 0;
		for (const auto &p : r.pullbacks)
			cones += p.cones_checked;
		detail += (detail.empty() ? "" : "; ") + r.instance + (r.passed() ? " pass" : " FAIL") + " (" +
		          std::to_string(checked) + " law instances, " + std::to_string(cones) + " cones)";
	};
	one(TrivialInstance{});
	one(WeilSelfInstance{});
	one(NModInstance{});
	return {ok, detail};
}

Outcome diffobj() {
	NModInstance inst;
	auto ledger = check_diffobj(canonical_diffobj_N(), inst);
	bool ok = ledger.passed() && ledger.checks().size() == 8;
	for (std::size_t k = 0; k <= 3; ++k)
		ok = ok && check_diffobj(canonical_diffobj(k), inst).passed();
	// Corrupted p-hat controls, each with the equations it must break.
	auto ones = canonical_diffobj_N();
	ones.phat = NatMatrix{{1, 1}};
	auto l1 = check_diffobj(ones, inst);
	const bool c1 = !l1["diff.phat_Tp_l"].passed() && !l1["diff.p_Tphat_l"].passed() &&
	                !l1["diff.pair_invertible"].passed();
	auto two = canonical_diffobj_N();
	two.phat = NatMatrix{{0, 2}};
	auto l2 = check_diffobj(two, inst);
	const bool c2 = !l2["diff.phat_Tphat_l"].passed() && !l2["diff.pair_invertible"].passed();
	return {ok && c1 && c2, std::string("canonical structure on N^k, k <= 3: ") + (ok ? "all 8 laws hold" : "violations") +
	                            "; control [1 1] breaks phat.T(p).l = zeta!, p.T(phat).l = zeta!, invertibility: " +
	                            (c1 ? "yes" : "no") + "; control [0 2] breaks phat.T(phat).l = phat, invertibility: " +
	                            (c2 ? "yes" : "no")};
}

Outcome derivatives() {
	Sampler s(9);
	std::size_t bad = 0;
	for (int t = 0; t < 100; ++t) {
		std::size_t a = s.uniform(0, 3), b = s.uniform(0, 3), c = s.uniform(0, 3);
		auto f = random_matrix(s, b, a, 3), f2 = random_matrix(s, b, a, 3), g = random_matrix(s, c, b, 3);
		auto da = canonical_diffobj(a), db = canonical_diffobj(b), dc = canonical_diffobj(c);
		auto pi1 = concat(NatMatrix::identity(a), NatMatrix(a, a));
		auto pi2 = concat(NatMatrix(a, a), NatMatrix::identity(a));
		bool ok = derivative(NatMatrix::identity(a), da, da) == pi2;
		ok = ok && derivative(f + f2, da, db) == derivative(f, da, db) + derivative(f2, da, db);
		ok = ok && derivative(g * f, da, dc) == derivative(g, db, dc) * stack(f * pi1, derivative(f, da, db));
		bad += !ok;
	}
	return {bad == 0, "100 samples, " + std::to_string(bad) + " failures of projection, additivity, chain rule"};
}

Outcome dsl() {
	Sampler s(10);
	std::size_t bad = 0;
	for (int k = 0; k < 1000; ++k) {
		auto a = s.algebra();
		auto e = s.element(a);
		auto phi = s.morphism();
		auto f = phitilde(phi);
		bad += !(parse_algebra(to_text(a)) == a && parse_element(to_text(e), a) == e &&
		         parse_morphism(to_text(phi)) == phi && parse_space(to_text(f), f.variables()) == f);
	}
	// syntax, semantic (duplicate, missing, out of range), homomorphism validity
	const char *malformed[] = {"[W^2 -> W@W]{ x1 -> x1 +",          "[W^2 -> W@W]{ x1 -> x1 ; x1 -> x2 }",
	                           "[W^2 -> W@W]{ x1 -> x1 }",          "[W^2 -> W@W]{ x1 -> x3 ; x2 -> x1 }",
	                           "[W^2 -> W@W]{ x1 -> x1 ; x2 -> x2 }"};
	std::size_t rejected = 0;
	for (const auto *text : malformed) {
		std::ostringstream out, err;
		const int code = run_cli({"phitilde", text}, out, err);
		rejected += code == 2 && err.str().find("at column ") != std::string::npos;
	}
	return {bad == 0 && rejected == std::size(malformed),
	        "1000 values x 4 kinds, " + std::to_string(bad) + " mismatches; malformed inputs rejected with exit 2 and a column: " +
	            std::to_string(rejected) + "/" + std::to_string(std::size(malformed))};
}

} // namespace

int main() {
	report(1, weil_laws, 5);
	report(2, examples);
	report(3, pullbacks, 10);
	report(4, phitilde_examples);
	report(5, decomposition);
	report(6, coherence);
	report(7, tangent, 30);
	report(8, diffobj);
	report(9, derivatives);
	report(10, dsl);
	std::cout << (10 - failures) << "/10 criteria pass" << std::endl;
	return failures;
}
