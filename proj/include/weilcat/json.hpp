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

#ifndef WEILCAT_JSON_HPP
#define WEILCAT_JSON_HPP

#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "limits.hpp"
#include "matrix.hpp"
#include "natural.hpp"
#include "space.hpp"
#include "tangent.hpp"
#include "text.hpp"
#include "weil.hpp"

namespace weilcat {

using json = nlohmann::ordered_json;

/// Numbers that fit in 64 bits are JSON numbers, larger ones decimal strings.
inline json natural_json(const Natural &n) {
	if (n <= std::numeric_limits<std::uint64_t>::max())
		return n.convert_to<std::uint64_t>();
	return n.str();
}

inline Natural natural_from_json(const json &j) {
	if (j.is_number_unsigned())
		return Natural(j.get<std::uint64_t>());
	if (j.is_number_integer() && j.get<std::int64_t>() >= 0)
		return Natural(j.get<std::int64_t>());
	if (j.is_string())
		return parse_natural(j.get<std::string>());
	throw InputError("expected a natural number, got " + j.dump());
}

inline json to_json(const WeilAlgebra &a) { return {{"widths", a.widths()}}; }

inline WeilAlgebra algebra_from_json(const json &j) {
	if (!j.is_object() || !j.contains("widths") || !j["widths"].is_array())
		throw InputError("algebra JSON needs a \"widths\" array");
	std::vector<std::size_t> widths;
	for (const auto &w : j["widths"]) {
		if (!w.is_number_unsigned() || w.get<std::uint64_t>() == 0)
			throw InputError("block widths must be positive integers");
		widths.push_back(w.get<std::size_t>());
	}
	return WeilAlgebra(std::move(widths));
}

/// Generator indices are 1-based, as in the text syntax.
inline json to_json(const Element &e) {
	json out = json::array();
	for (const auto &[m, c] : e.terms()) {
		std::vector<std::size_t> mono;
		for (auto g : m.indices())
			mono.push_back(g + 1);
		out.push_back({{"mono", mono}, {"coef", natural_json(c)}});
	}
	return out;
}

inline Element element_from_json(const json &j, const WeilAlgebra &ambient) {
	if (!j.is_array())
		throw InputError("element JSON must be an array of terms");
	Element out(ambient);
	for (const auto &t : j) {
		if (!t.is_object() || !t.contains("mono") || !t.contains("coef") || !t["mono"].is_array())
			throw InputError("element term needs \"mono\" and \"coef\"");
		std::vector<Generator> raw;
		for (const auto &g : t["mono"]) {
			if (!g.is_number_unsigned() || g.get<std::uint64_t>() == 0)
				throw InputError("generator indices are positive integers");
			raw.push_back(g.get<std::size_t>() - 1);
		}
		if (raw.empty())
			throw InputError("constant terms are not allowed in generator images");
		if (auto m = normalize_monomial(ambient, raw))
			out += Element::monomial(ambient, *m, natural_from_json(t["coef"]));
	}
	return out;
}

inline json to_json(const WeilMorphism &phi) {
	json images = json::array();
	for (const auto &img : phi.images())
		images.push_back(to_json(img));
	return {{"src", to_json(phi.source())}, {"tgt", to_json(phi.target())}, {"images", images}};
}

inline WeilMorphism morphism_from_json(const json &j) {
	if (!j.is_object() || !j.contains("src") || !j.contains("tgt") || !j.contains("images"))
		throw InputError("morphism JSON needs \"src\", \"tgt\" and \"images\"");
	auto src = algebra_from_json(j["src"]);
	auto tgt = algebra_from_json(j["tgt"]);
	std::vector<Element> images;
	for (const auto &img : j["images"])
		images.push_back(element_from_json(img, tgt));
	return WeilMorphism::make(src, tgt, std::move(images));
}

inline json to_json(const SmashWord &w) {
	std::vector<std::size_t> letters;
	for (auto v : w.letters())
		letters.push_back(v + 1);
	return letters;
}

inline json to_json(const WedgeSum &s) {
	json out = json::array();
	for (const auto &[w, c] : s.counts())
		out.push_back({{"word", to_json(w)}, {"copies", natural_json(c)}});
	return out;
}

inline json to_json(const SpaceFunctor &f) {
	json comps = json::array();
	for (const auto &c : f.components())
		comps.push_back(to_json(c));
	return {{"variables", to_json(f.variables())}, {"components", comps}};
}

inline SpaceFunctor space_from_json(const json &j) {
	if (!j.is_object() || !j.contains("variables") || !j.contains("components"))
		throw InputError("space functor JSON needs \"variables\" and \"components\"");
	auto vars = algebra_from_json(j["variables"]);
	std::vector<WedgeSum> comps;
	for (const auto &c : j["components"]) {
		WedgeSum s;
		for (const auto &t : c) {
			std::vector<Variable> letters;
			for (const auto &v : t.at("word")) {
				if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0)
					throw InputError("variable indices are positive integers");
				letters.push_back(v.get<std::size_t>() - 1);
			}
			s.add(SmashWord(std::move(letters)), natural_from_json(t.at("copies")));
		}
		comps.push_back(std::move(s));
	}
	return SpaceFunctor(vars, std::move(comps));
}

/// Row-major array of rows.
inline json to_json(const NatMatrix &m) {
	json rows = json::array();
	for (std::size_t i = 0; i < m.rows(); ++i) {
		json row = json::array();
		for (std::size_t j = 0; j < m.cols(); ++j)
			row.push_back(natural_json(m(i, j)));
		rows.push_back(row);
	}
	return rows;
}

/// `cols` is needed only when there are no rows to read it from.
inline NatMatrix matrix_from_json(const json &j, std::optional<std::size_t> cols = std::nullopt) {
	if (!j.is_array())
		throw InputError("matrix JSON must be an array of rows");
	std::size_t width = cols.value_or(j.empty() ? 0 : (j[0].is_array() ? j[0].size() : 0));
	NatMatrix m(j.size(), width);
	for (std::size_t i = 0; i < j.size(); ++i) {
		if (!j[i].is_array() || j[i].size() != width)
			throw InputError("matrix rows must be arrays of equal length " + std::to_string(width));
		for (std::size_t c = 0; c < width; ++c)
			m(i, c) = natural_from_json(j[i][c]);
	}
	return m;
}

inline json to_json(const ConeFailure &f) { return {{"index", f.index}, {"cone", f.cone}, {"reason", f.reason}}; }

inline json failures_json(const std::vector<ConeFailure> &fs) {
	json out = json::array();
	for (const auto &f : fs)
		out.push_back(to_json(f));
	return out;
}

inline json to_json(const UniquenessCertificate &c) {
	json out = {{"commutes", c.commutes}, {"jointly_injective", c.jointly_injective}};
	if (c.uncovered)
		out["uncovered"] = to_text(*c.uncovered);
	return out;
}

inline json to_json(const PullbackReport &r) {
	return {{"square", r.square},
	        {"cones_checked", r.cones_checked},
	        {"failures", failures_json(r.failures)},
	        {"certificate", to_json(r.certificate)},
	        {"passed", r.passed()}};
}

inline json to_json(const TangentPullbackReport &r) {
	return {{"square", r.square},     {"objects", r.objects},
	        {"cones_checked", r.cones_checked}, {"failures", failures_json(r.failures)},
	        {"commutes", r.commutes}, {"certified", r.certified},
	        {"passed", r.passed()}};
}

inline json to_json(const LawCheck &c) {
	return {{"law", c.law}, {"checked", c.checked}, {"failed", c.failed}, {"failures", c.witnesses}};
}

inline json to_json(const LawLedger &l) {
	json out = json::array();
	for (const auto &c : l.checks())
		out.push_back(to_json(c));
	return out;
}

inline json to_json(const TangentReport &r) {
	json pbs = json::array();
	for (const auto &p : r.pullbacks)
		pbs.push_back(to_json(p));
	return {{"instance", r.instance}, {"seed", r.seed}, {"checks", to_json(r.laws)}, {"pullbacks", pbs},
	        {"passed", r.passed()}};
}

} // namespace weilcat

#endif
