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

#ifndef WEILCAT_CLI_HPP
#define WEILCAT_CLI_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dsl.hpp"
#include "errors.hpp"
#include "instances.hpp"
#include "json.hpp"
#include "limits.hpp"
#include "space.hpp"
#include "tangent.hpp"
#include "text.hpp"
#include "weil.hpp"

namespace weilcat {

namespace exit_code {
inline constexpr int pass = 0;
inline constexpr int fail = 1;
inline constexpr int input_error = 2;
} // namespace exit_code

namespace detail {

inline std::size_t parse_count(const std::string &text, const char *what) {
	if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || text.size() > 6)
		throw InputError(std::string(what) + " must be a small natural number, got '" + text + "'");
	return std::stoul(text);
}

/// `foundational A m n`, `vertical` or `vertical B`.
inline Square parse_square(const std::vector<std::string> &words) {
	if (words.empty())
		throw InputError("--square needs 'foundational A m n' or 'vertical'");
	if (words[0] == "vertical") {
		if (words.size() > 2)
			throw InputError("--square vertical takes at most one prefix algebra");
		return vertical_square(words.size() == 2 ? weilcat::parse_algebra(words[1]) : WeilAlgebra());
	}
	if (words[0] == "foundational") {
		if (words.size() != 4)
			throw InputError("--square foundational needs A m n");
		return foundational_square(weilcat::parse_algebra(words[1]), parse_count(words[2], "m"),
		                           parse_count(words[3], "n"));
	}
	throw InputError("unknown square '" + words[0] + "'; use foundational or vertical");
}

inline NatMatrix parse_matrix(const std::string &text, std::optional<std::size_t> cols = std::nullopt) {
	json j;
	try {
		j = json::parse(text);
	} catch (const json::parse_error &e) {
		throw InputError(std::string("matrix is not a JSON array of rows: ") + e.what());
	}
	return matrix_from_json(j, cols);
}

inline std::string inclusion_text(const SummandInclusion &inc) {
	std::string out;
	for (std::size_t i = 0; i < inc.components.size(); ++i) {
		out += i ? "; [" : "[";
		for (std::size_t k = 0; k < inc.components[i].size(); ++k)
			out += (k ? ", " : "") + std::to_string(inc.components[i][k]);
		out += "]";
	}
	return out;
}

inline json inclusion_json(const SummandInclusion &inc) { return inc.components; }

inline const char *verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

inline void law_lines(std::ostream &out, const LawLedger &ledger) {
	for (const auto &c : ledger.checks()) {
		out << "law " << c.law << ": " << c.checked << " checked, " << c.failed << " failed\n";
		for (const auto &w : c.witnesses)
			out << "  witness: " << w << "\n";
	}
}

template <class Report>
void failure_lines(std::ostream &out, const Report &r) {
	for (const auto &f : r.failures)
		out << "  failure #" << f.index << ": " << f.reason << " [" << f.cone << "]\n";
}

/// Runs an instance-generic command against the instance named on the command line.
template <class F>
auto with_instance(const std::string &name, F &&f) {
	if (name == "trivial")
		return f(TrivialInstance{});
	if (name == "weil-self")
		return f(WeilSelfInstance{});
	if (name == "nmod")
		return f(NModInstance{});
	throw InputError("unknown instance '" + name + "'; use trivial, weil-self or nmod");
}

template <class F>
auto with_matrix_instance(const std::string &name, F &&f) {
	if (name == "trivial")
		return f(TrivialInstance{});
	if (name == "nmod")
		return f(NModInstance{});
	throw InputError("differential objects are checked in trivial or nmod, not '" + name + "'");
}

} // namespace detail

/// Entry point behind the weilcat executable. `args` excludes the program name.
/// Returns 0 on success or pass, 1 on a failed verification, 2 on bad input.
inline int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
	CLI::App app{"Exact Weil algebras, tangent pullbacks, space functors and tangent structures", "weilcat"};
	app.require_subcommand(1);
	app.fallthrough();
	bool as_json = false;
	app.add_flag("--json", as_json, "Write JSON instead of text");

	std::function<int()> action;
	auto emit = [&](const json &j, const std::string &text) {
		if (as_json)
			out << j.dump(2) << "\n";
		else
			out << text;
	};

	// normalize ALGEBRA ELEMENT
	std::string algebra_text, element_text;
	auto *normalize = app.add_subcommand("normalize", "Normal form of an element of an algebra");
	normalize->add_option("algebra", algebra_text, "Algebra, e.g. W@W")->required();
	normalize->add_option("element", element_text, "Element, e.g. x2*x1 + x1*x2")->required();
	normalize->callback([&] {
		action = [&] {
			const auto a = parse_algebra(algebra_text);
			const auto e = parse_element(element_text, a);
			emit({{"algebra", to_json(a)}, {"element", to_json(e)}, {"text", to_text(e)}}, to_text(e) + "\n");
			return exit_code::pass;
		};
	});

	// compose PSI PHI
	std::string psi_text, phi_text;
	auto *compose_cmd = app.add_subcommand("compose", "The composite psi o phi");
	compose_cmd->add_option("psi", psi_text, "Outer morphism")->required();
	compose_cmd->add_option("phi", phi_text, "Inner morphism")->required();
	compose_cmd->callback([&] {
		action = [&] {
			const auto c = compose(parse_morphism(psi_text), parse_morphism(phi_text));
			emit(to_json(c), to_text(c) + "\n");
			return exit_code::pass;
		};
	});

	// check-hom MORPHISM
	std::string candidate_text;
	auto *check_hom_cmd = app.add_subcommand("check-hom", "Whether generator images define an algebra map");
	check_hom_cmd->add_option("morphism", candidate_text, "Candidate morphism")->required();
	check_hom_cmd->callback([&] {
		action = [&] {
			const auto phi = parse_morphism(candidate_text, {.require_hom = false});
			const auto h = check_hom(phi);
			json j = {{"morphism", to_json(phi)}, {"ok", h.ok}};
			std::string text = h.ok ? "pass\n" : "";
			if (!h.ok) {
				const auto [i, k] = *h.witness;
				const auto product = phi.image(i) * phi.image(k);
				j["witness"] = {i + 1, k + 1};
				j["product"] = to_text(product);
				text = "fail: x" + std::to_string(i + 1) + "*x" + std::to_string(k + 1) + " = 0 but its image is " +
				       to_text(product) + "\n";
			}
			emit(j, text);
			return h.ok ? exit_code::pass : exit_code::fail;
		};
	});

	// tensor X Y, both algebras or both morphisms
	std::string left_text, right_text;
	auto *tensor_cmd = app.add_subcommand("tensor", "Tensor product of two algebras or two morphisms");
	tensor_cmd->add_option("left", left_text, "First factor")->required();
	tensor_cmd->add_option("right", right_text, "Second factor")->required();
	tensor_cmd->callback([&] {
		action = [&] {
			const auto l = parse_term(left_text), r = parse_term(right_text);
			if (std::holds_alternative<WeilAlgebra>(l) && std::holds_alternative<WeilAlgebra>(r)) {
				const auto t = tensor(std::get<WeilAlgebra>(l), std::get<WeilAlgebra>(r));
				emit(to_json(t), to_text(t) + "\n");
			} else if (std::holds_alternative<WeilMorphism>(l) && std::holds_alternative<WeilMorphism>(r)) {
				const auto t = tensor(std::get<WeilMorphism>(l), std::get<WeilMorphism>(r));
				emit(to_json(t), to_text(t) + "\n");
			} else {
				throw InputError("tensor needs two algebras or two morphisms");
			}
			return exit_code::pass;
		};
	});

	// pullback-lift --square ... --right LEG --bottom LEG
	std::vector<std::string> square_words;
	std::string right_leg, bottom_leg;
	auto *lift_cmd = app.add_subcommand("pullback-lift", "The unique lift of a cone over a tangent pullback");
	lift_cmd->add_option("--square", square_words, "'foundational A m n' or 'vertical'")->required()->expected(1, 4);
	lift_cmd->add_option("--right", right_leg, "Leg into the right corner (target of top)")->required();
	lift_cmd->add_option("--bottom", bottom_leg, "Leg into the bottom corner (target of left)")->required();
	lift_cmd->callback([&] {
		action = [&] {
			const auto sq = detail::parse_square(square_words);
			const auto lift = lift_cone(sq, Cone{parse_morphism(right_leg), parse_morphism(bottom_leg)});
			emit({{"square", sq.name()}, {"lift", to_json(lift)}, {"text", to_text(lift)}}, to_text(lift) + "\n");
			return exit_code::pass;
		};
	});

	std::uint64_t seed = 0;
	std::size_t budget = 0;
	// Each command has its own default budget, applied after parsing.
	std::optional<std::size_t> budget_given;
	auto seeded = [&](CLI::App *cmd, std::size_t default_budget, const char *unit) {
		cmd->add_option("--seed", seed, "Random seed (default 0)");
		cmd->add_option("--budget", budget_given, unit + (" (default " + std::to_string(default_budget) + ")"));
		cmd->parse_complete_callback([&budget, &budget_given, default_budget] {
			budget = budget_given.value_or(default_budget);
		});
	};

	// verify-pullback --square ...
	std::vector<std::string> verify_square_words;
	auto *verify_cmd = app.add_subcommand("verify-pullback", "Certificate and sampled cones for a tangent pullback");
	verify_cmd->add_option("--square", verify_square_words, "'foundational A m n' or 'vertical'")
	    ->required()
	    ->expected(1, 4);
	seeded(verify_cmd, 500, "Number of sampled cones");
	verify_cmd->callback([&] {
		action = [&] {
			const auto sq = detail::parse_square(verify_square_words);
			Sampler sampler(seed);
			const auto r = verify_pullback(sq, sampler, budget);
			auto j = to_json(r);
			j["seed"] = seed;
			std::ostringstream text;
			text << "square: " << r.square << "\n"
			     << "certificate: " << (r.certificate.commutes ? "commutes" : "does not commute") << ", "
			     << (r.certificate.jointly_injective ? "jointly injective" : "not jointly injective") << "\n"
			     << "seed: " << seed << "\n"
			     << "cones checked: " << r.cones_checked << ", failed: " << r.failures.size() << "\n";
			detail::failure_lines(text, r);
			text << "result: " << detail::verdict(r.passed()) << "\n";
			emit(j, text.str());
			return r.passed() ? exit_code::pass : exit_code::fail;
		};
	});

	// phitilde MORPHISM
	std::string tilde_text;
	auto *phitilde_cmd = app.add_subcommand("phitilde", "The space-functor pattern of a morphism");
	phitilde_cmd->add_option("morphism", tilde_text, "Morphism")->required();
	phitilde_cmd->callback([&] {
		action = [&] {
			const auto f = phitilde(parse_morphism(tilde_text));
			emit(to_json(f), to_text(f) + "\n");
			return exit_code::pass;
		};
	});

	// alpha PHI1 PHI2
	std::string alpha1, alpha2;
	auto *alpha_cmd = app.add_subcommand("alpha", "Summand inclusion of (phi2 phi1)~ into phi1~ phi2~ and its complement");
	alpha_cmd->add_option("phi1", alpha1, "First morphism A0 -> A1")->required();
	alpha_cmd->add_option("phi2", alpha2, "Second morphism A1 -> A2")->required();
	alpha_cmd->callback([&] {
		action = [&] {
			const auto r = alpha(parse_morphism(alpha1), parse_morphism(alpha2));
			const SpaceFunctor zeta(r.expanded.variables(), r.zeta);
			json j = {{"composite", to_json(r.composite)},
			          {"expanded", to_json(r.expanded)},
			          {"inclusion", detail::inclusion_json(r.inclusion)},
			          {"zeta", to_json(zeta)},
			          {"pure_annihilation", r.pure_annihilation}};
			emit(j, "composite: " + to_text(r.composite) + "\nexpanded: " + to_text(r.expanded) +
			            "\ninclusion: " + detail::inclusion_text(r.inclusion) + "\nzeta: " + to_text(zeta) + "\n");
			return exit_code::pass;
		};
	});

	// check-coherence [PHI1 PHI2 PHI3]
	std::vector<std::string> triple;
	auto *coherence_cmd = app.add_subcommand("check-coherence",
	                                         "Coherence of alpha on a given triple, or on sampled bounded triples");
	coherence_cmd->add_option("morphisms", triple, "phi1 phi2 phi3; omit to sample")->expected(0, 3);
	seeded(coherence_cmd, 300, "Number of sampled triples");
	coherence_cmd->callback([&] {
		action = [&] {
			if (!triple.empty() && triple.size() != 3)
				throw InputError("check-coherence takes exactly three morphisms, or none");
			if (triple.size() == 3) {
				const auto r =
				    alpha_coherence(parse_morphism(triple[0]), parse_morphism(triple[1]), parse_morphism(triple[2]));
				json j = {{"associative", r.associative},
				          {"same_image", r.same_image},
				          {"same_map", r.same_map},
				          {"via_left", detail::inclusion_json(r.via_left)},
				          {"via_right", detail::inclusion_json(r.via_right)},
				          {"passed", r.holds()}};
				std::ostringstream text;
				text << "associative: " << (r.associative ? "yes" : "no") << "\n"
				     << "same image: " << (r.same_image ? "yes" : "no") << "\n"
				     << "same map: " << (r.same_map ? "yes" : "no") << "\n"
				     << "via alpha(12,3): " << detail::inclusion_text(r.via_left) << "\n"
				     << "via alpha(1,23): " << detail::inclusion_text(r.via_right) << "\n"
				     << "result: " << detail::verdict(r.holds()) << "\n";
				emit(j, text.str());
				return r.holds() ? exit_code::pass : exit_code::fail;
			}
			Sampler sampler(seed, space_sample_bounds());
			std::size_t positional = 0;
			std::vector<std::string> failures;
			for (std::size_t k = 0; k < budget; ++k) {
				const auto [p1, p2, p3] = sample_bounded_triple(sampler);
				const auto r = alpha_coherence(p1, p2, p3);
				positional += r.same_map ? 1 : 0;
				if (!r.holds())
					failures.push_back(to_text(p1) + " ; " + to_text(p2) + " ; " + to_text(p3));
			}
			json j = {{"seed", seed},
			          {"triples_checked", budget},
			          {"positional_agreement", positional},
			          {"failures", failures},
			          {"passed", failures.empty()}};
			std::ostringstream text;
			text << "seed: " << seed << "\n"
			     << "triples checked: " << budget << ", failed: " << failures.size() << "\n"
			     << "positional agreement: " << positional << "/" << budget << "\n";
			for (const auto &f : failures)
				text << "  failure: " << f << "\n";
			text << "result: " << detail::verdict(failures.empty()) << "\n";
			emit(j, text.str());
			return failures.empty() ? exit_code::pass : exit_code::fail;
		};
	});

	// check-tangent --instance NAME
	std::string instance_name;
	auto *tangent_cmd = app.add_subcommand("check-tangent", "Action laws and tangent pullbacks for an instance");
	tangent_cmd->add_option("--instance", instance_name, "trivial, weil-self or nmod")->required();
	seeded(tangent_cmd, 200, "Samples per law and cones per square");
	tangent_cmd->callback([&] {
		action = [&] {
			const auto r = detail::with_instance(instance_name, [&](const auto &inst) {
				return check_tangent(inst, seed, budget);
			});
			std::ostringstream text;
			text << "instance: " << r.instance << "\nseed: " << r.seed << "\n";
			detail::law_lines(text, r.laws);
			for (const auto &p : r.pullbacks) {
				text << "pullback " << p.square << ": " << p.cones_checked << " cones over " << p.objects
				     << " objects, " << (p.certified ? "certified unique" : "sampled") << ", "
				     << detail::verdict(p.passed()) << "\n";
				detail::failure_lines(text, p);
			}
			text << "result: " << detail::verdict(r.passed()) << "\n";
			emit(to_json(r), text.str());
			return r.passed() ? exit_code::pass : exit_code::fail;
		};
	});

	// diffobj-check [--instance] [--rank] [--phat] [--sigma]
	std::string diff_instance = "nmod", phat_text, sigma_text;
	std::size_t rank = 1;
	auto *diff_cmd = app.add_subcommand("diffobj-check", "Differential-object equations for N^k");
	diff_cmd->add_option("--instance", diff_instance, "nmod or trivial")->default_val("nmod");
	diff_cmd->add_option("--rank", rank, "Rank k of the carrier N^k")->default_val(1);
	diff_cmd->add_option("--phat", phat_text, "phat: T D -> D as JSON rows; default reads the x-coordinates");
	diff_cmd->add_option("--sigma", sigma_text, "sigma: D x D -> D as JSON rows; default is addition");
	diff_cmd->callback([&] {
		action = [&] {
			return detail::with_matrix_instance(diff_instance, [&](const auto &inst) {
				auto d = canonical_diffobj(rank);
				if (diff_instance == "trivial")
					d.phat = NatMatrix::identity(rank);
				if (!phat_text.empty())
					d.phat = detail::parse_matrix(phat_text, inst.act_obj(generators::w(), rank));
				if (!sigma_text.empty())
					d.sigma = detail::parse_matrix(sigma_text, 2 * rank);
				const auto ledger = check_diffobj(d, inst);
				json j = {{"instance", inst.name()}, {"rank", rank},   {"phat", to_json(d.phat)},
				          {"sigma", to_json(d.sigma)}, {"checks", to_json(ledger)}, {"passed", ledger.passed()}};
				std::ostringstream text;
				text << "instance: " << inst.name() << "\ncarrier: N^" << rank << "\nphat: " << d.phat.str()
				     << "\nsigma: " << d.sigma.str() << "\n";
				for (const auto &c : ledger.checks())
					text << "law " << c.law << ": " << detail::verdict(c.passed()) << "\n";
				text << "result: " << detail::verdict(ledger.passed()) << "\n";
				emit(j, text.str());
				return ledger.passed() ? exit_code::pass : exit_code::fail;
			});
		};
	});

	// derivative MATRIX
	std::string f_text;
	std::optional<std::size_t> f_cols;
	auto *derivative_cmd = app.add_subcommand("derivative", "Derivative of a linear map N^a -> N^b");
	derivative_cmd->add_option("matrix", f_text, "The map as JSON rows, e.g. [[1,2]]")->required();
	derivative_cmd->add_option("--cols", f_cols, "Source rank, needed only when the matrix has no rows");
	derivative_cmd->callback([&] {
		action = [&] {
			const auto f = detail::parse_matrix(f_text, f_cols);
			const auto g = derivative(f, canonical_diffobj(f.cols()), canonical_diffobj(f.rows()));
			emit({{"matrix", to_json(f)}, {"derivative", to_json(g)}}, g.str() + "\n");
			return exit_code::pass;
		};
	});

	try {
		std::vector<std::string> reversed(args.rbegin(), args.rend());
		app.parse(reversed);
	} catch (const CLI::CallForHelp &) {
		out << app.help();
		return exit_code::pass;
	} catch (const CLI::CallForAllHelp &) {
		out << app.help("", CLI::AppFormatMode::All);
		return exit_code::pass;
	} catch (const CLI::ParseError &e) {
		err << "error: " << e.what() << "\n";
		return exit_code::input_error;
	} catch (const InputError &e) {
		err << "error: " << e.what() << "\n";
		return exit_code::input_error;
	}
	if (!action)
		return exit_code::input_error;
	try {
		return action();
	} catch (const InputError &e) {
		err << "error: " << e.what() << "\n";
		return exit_code::input_error;
	} catch (const AlgorithmError &e) {
		err << "internal inconsistency: " << e.what() << "\n";
		return exit_code::fail;
	}
}

} // namespace weilcat

#endif
