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

#ifndef WEILCAT_INSTANCES_HPP
#define WEILCAT_INSTANCES_HPP

#include <optional>
#include <string>

#include "errors.hpp"
#include "limits.hpp"
#include "matrix.hpp"
#include "random.hpp"
#include "tangent.hpp"
#include "text.hpp"
#include "weil.hpp"

namespace weilcat {

/// Number of nonzero monomials of A, counting 1.
inline std::size_t basis_size(const WeilAlgebra &a) {
	std::size_t n = 1;
	for (auto w : a.widths())
		n *= w + 1;
	return n;
}

inline NatMatrix random_matrix(Sampler &s, std::size_t rows, std::size_t cols, unsigned max_entry = 2) {
	NatMatrix m(rows, cols);
	for (std::size_t i = 0; i < rows; ++i)
		for (std::size_t j = 0; j < cols; ++j)
			m(i, j) = s.uniform(0, max_entry);
	return m;
}

/// Every row a standard basis row, no column hit twice.
inline bool is_coordinate_projection(const NatMatrix &m) {
	std::vector<bool> hit(m.cols(), false);
	for (std::size_t i = 0; i < m.rows(); ++i) {
		std::optional<std::size_t> one;
		for (std::size_t j = 0; j < m.cols(); ++j) {
			if (m(i, j) == 0)
				continue;
			if (m(i, j) != 1 || one || hit[j])
				return false;
			one = j;
		}
		if (!one)
			return false;
		hit[*one] = true;
	}
	return true;
}

/// The category N^• of free finitely generated N-modules: objects are ranks,
/// morphisms are matrices acting on column vectors.
struct MatrixCategory {
	using Object = std::size_t;
	using Morphism = NatMatrix;

	std::size_t max_rank = 2;

	NatMatrix identity(std::size_t k) const { return NatMatrix::identity(k); }
	NatMatrix compose(const NatMatrix &g, const NatMatrix &f) const { return g * f; }
	std::size_t source(const NatMatrix &f) const { return f.cols(); }
	std::size_t target(const NatMatrix &f) const { return f.rows(); }

	std::size_t sample_object(Sampler &s) const { return s.uniform(0, max_rank); }
	NatMatrix sample_morphism(Sampler &s, std::size_t k) const { return random_matrix(s, s.uniform(0, max_rank), k); }

	/// Half the cones come from a map into the corner. The rest are built leg
	/// by leg: when the right edge is a coordinate projection any bottom leg
	/// extends to a cone, with free entries on the coordinates it drops.
	InstanceCone<NatMatrix> sample_cone(const ImageSquare<std::size_t, NatMatrix> &sq, Sampler &s) const {
		const auto apex = s.uniform(0, max_rank);
		if (s.coin() || !is_coordinate_projection(sq.right)) {
			auto psi = random_matrix(s, sq.top.cols(), apex);
			return {sq.top * psi, sq.left * psi, psi};
		}
		auto leg_bottom = random_matrix(s, sq.bottom.cols(), apex);
		auto leg_right = sq.right.transposed() * (sq.bottom * leg_bottom);
		for (std::size_t r = 0; r < sq.right.cols(); ++r) {
			bool dropped = true;
			for (std::size_t i = 0; i < sq.right.rows(); ++i)
				dropped = dropped && sq.right(i, r) == 0;
			if (dropped)
				for (std::size_t j = 0; j < apex; ++j)
					leg_right(r, j) = s.uniform(0, 2);
		}
		return {leg_right, leg_bottom, std::nullopt};
	}

	/// Reads each corner coordinate off a row of [top; left] that picks it out.
	std::optional<NatMatrix> lift(const ImageSquare<std::size_t, NatMatrix> &sq,
	                              const InstanceCone<NatMatrix> &cone) const {
		const auto rows = unit_row_witness(stack(sq.top, sq.left));
		if (!rows)
			return std::nullopt;
		const auto legs = stack(cone.leg_right, cone.leg_bottom);
		NatMatrix out(sq.top.cols(), legs.cols());
		for (std::size_t c = 0; c < rows->size(); ++c)
			for (std::size_t j = 0; j < legs.cols(); ++j)
				out(c, j) = legs((*rows)[c], j);
		return out;
	}

	/// [top; left] has a unit row for every corner coordinate, so it is injective.
	bool certify(const ImageSquare<std::size_t, NatMatrix> &sq) const {
		return sq.right * sq.top == sq.bottom * sq.left && unit_row_witness(stack(sq.top, sq.left)).has_value();
	}

	std::string describe(std::size_t k) const { return "N^" + std::to_string(k); }
	std::string describe(const NatMatrix &f) const { return f.str(); }
};

/// Every T^A is the identity functor and every T^phi the identity transformation.
struct TrivialInstance : MatrixCategory {
	std::string name() const { return "trivial"; }
	std::size_t act_obj(const WeilAlgebra &, std::size_t k) const { return k; }
	NatMatrix act_mor(const WeilMorphism &, std::size_t k) const { return NatMatrix::identity(k); }
	NatMatrix act_fun(const WeilAlgebra &, const NatMatrix &f) const { return f; }
};

/// T^A M = A (x) M on N^•. The basis of A (x) N^k is monomial-major: the
/// monomials of A in colex order, each carrying a copy of the basis of N^k.
/// That order makes the action strict on the nose.
struct NModInstance : MatrixCategory {
	std::string name() const { return "nmod"; }
	std::size_t act_obj(const WeilAlgebra &a, std::size_t k) const { return basis_size(a) * k; }
	NatMatrix act_mor(const WeilMorphism &phi, std::size_t k) const {
		return kronecker(linear_matrix(phi), NatMatrix::identity(k));
	}
	NatMatrix act_fun(const WeilAlgebra &a, const NatMatrix &f) const {
		return kronecker(NatMatrix::identity(basis_size(a)), f);
	}
};

/// T^A B = B (x) A on the Weil category itself, with T^phi_B = 1_B (x) phi and
/// T^A f = f (x) 1_A. Image squares are the tensored squares B (x) -.
struct WeilSelfInstance {
	using Object = WeilAlgebra;
	using Morphism = WeilMorphism;

	SampleBounds bounds = weil_sample_bounds();

	std::string name() const { return "weil-self"; }

	WeilMorphism identity(const WeilAlgebra &a) const { return weilcat::identity(a); }
	WeilMorphism compose(const WeilMorphism &g, const WeilMorphism &f) const { return weilcat::compose(g, f); }
	WeilAlgebra source(const WeilMorphism &f) const { return f.source(); }
	WeilAlgebra target(const WeilMorphism &f) const { return f.target(); }

	WeilAlgebra act_obj(const WeilAlgebra &a, const WeilAlgebra &b) const { return tensor(b, a); }
	WeilMorphism act_mor(const WeilMorphism &phi, const WeilAlgebra &b) const {
		return tensor(weilcat::identity(b), phi);
	}
	WeilMorphism act_fun(const WeilAlgebra &a, const WeilMorphism &f) const {
		return tensor(f, weilcat::identity(a));
	}

	WeilAlgebra sample_object(Sampler &s) const { return local(s).algebra(); }
	WeilMorphism sample_morphism(Sampler &s, const WeilAlgebra &b) const {
		auto l = local(s);
		return l.morphism(b, l.algebra());
	}

	InstanceCone<WeilMorphism> sample_cone(const ImageSquare<WeilAlgebra, WeilMorphism> &sq, Sampler &s) const {
		auto l = local(s);
		auto psi = l.morphism(l.algebra(), sq.top.source());
		return {weilcat::compose(sq.top, psi), weilcat::compose(sq.left, psi), psi};
	}

	std::optional<WeilMorphism> lift(const ImageSquare<WeilAlgebra, WeilMorphism> &sq,
	                                 const InstanceCone<WeilMorphism> &cone) const {
		const auto tensored = matching(sq);
		if (!tensored)
			return std::nullopt;
		try {
			return lift_cone(*tensored, Cone{cone.leg_right, cone.leg_bottom});
		} catch (const InputError &) {
			return std::nullopt;
		}
	}

	bool certify(const ImageSquare<WeilAlgebra, WeilMorphism> &sq) const {
		const auto tensored = matching(sq);
		return tensored && weilcat::certify(*tensored).holds();
	}

	std::string describe(const WeilAlgebra &a) const { return to_text(a); }
	std::string describe(const WeilMorphism &f) const { return to_text(f); }

  private:
	Sampler local(Sampler &s) const { return Sampler(s.engine()(), bounds); }

	/// The tensored square, provided the image edges are exactly its edges.
	static std::optional<Square> matching(const ImageSquare<WeilAlgebra, WeilMorphism> &sq) {
		auto t = tensor_square(sq.object, sq.base);
		if (t.top == sq.top && t.left == sq.left && t.right == sq.right && t.bottom == sq.bottom)
			return t;
		return std::nullopt;
	}
};

static_assert(TangentInstance<TrivialInstance>);
static_assert(TangentInstance<NModInstance>);
static_assert(TangentInstance<WeilSelfInstance>);

// ---------------------------------------------------------------------------
// Differential objects in N^•.

template <class I>
concept MatrixTangentInstance = TangentInstance<I> && std::same_as<typename I::Object, std::size_t> &&
                                std::same_as<typename I::Morphism, NatMatrix>;

/// Carrier D of rank `carrier`; D x D has rank 2 * carrier with the first
/// factor first.
struct DiffObject {
	std::size_t carrier = 0;
	NatMatrix sigma; ///< D x D -> D
	NatMatrix zeta;  ///< N^0 -> D
	NatMatrix phat;  ///< T D -> D
};

/// N^k with addition, zero, and phat reading off the x-coordinates of T(N^k).
inline DiffObject canonical_diffobj(std::size_t k = 1) {
	const auto id = NatMatrix::identity(k);
	return {k, concat(id, id), NatMatrix(k, 0), concat(NatMatrix(k, k), id)};
}

inline DiffObject canonical_diffobj_N() { return canonical_diffobj(1); }

inline NatMatrix swap_factors(std::size_t k) {
	const auto id = NatMatrix::identity(k);
	const NatMatrix zero(k, k);
	return stack(concat(zero, id), concat(id, zero));
}

/// T^2 D = T^{W (x) W} D with the first factor applied first, T(f) = T^W f,
/// and l the component of delta.
template <MatrixTangentInstance I>
LawLedger check_diffobj(const DiffObject &d, const I &inst) {
	using namespace generators;
	const auto k = d.carrier;
	const auto td = inst.act_obj(w(), k);
	if (d.sigma.shape() != NatMatrix(k, 2 * k).shape() || d.zeta.shape() != NatMatrix(k, 0).shape() ||
	    d.phat.shape() != NatMatrix(k, td).shape())
		throw InputError("differential object maps have the wrong shapes for carrier N^" + std::to_string(k));

	LawLedger ledger;
	const auto p = inst.act_mor(epsilon(), k);
	const auto l = inst.act_mor(delta(), k);
	const auto tp = inst.act_fun(w(), p);
	const auto tphat = inst.act_fun(w(), d.phat);
	const auto zeta_bang = d.zeta * NatMatrix(0, td);
	const auto id = NatMatrix::identity(k);
	const auto w_ = "D=" + inst.describe(k) + " phat=" + d.phat.str();

	ledger["diff.p_Tp_l"].record(p * tp * l == p, w_);
	ledger["diff.phat_Tp_l"].record(d.phat * tp * l == zeta_bang, w_);
	ledger["diff.p_Tphat_l"].record(p * tphat * l == zeta_bang, w_);
	ledger["diff.phat_Tphat_l"].record(d.phat * tphat * l == d.phat, w_);
	ledger["diff.pair_invertible"].record(inverse(stack(p, d.phat)).has_value(), w_);

	const auto zero_point = d.zeta * NatMatrix(0, k);
	ledger["monoid.unit"].record(d.sigma * stack(zero_point, id) == id && d.sigma * stack(id, zero_point) == id,
	                             "sigma=" + d.sigma.str());
	ledger["monoid.associativity"].record(d.sigma * block_diagonal(d.sigma, id) ==
	                                          d.sigma * block_diagonal(id, d.sigma),
	                                      "sigma=" + d.sigma.str());
	ledger["monoid.commutativity"].record(d.sigma * swap_factors(k) == d.sigma, "sigma=" + d.sigma.str());
	return ledger;
}

/// phat_B o T(f) o <p_A, phat_A>^{-1}: D_A x D_A -> D_B, point coordinates first.
template <MatrixTangentInstance I = NModInstance>
NatMatrix derivative(const NatMatrix &f, const DiffObject &src, const DiffObject &tgt, const I &inst = {}) {
	if (f.cols() != src.carrier || f.rows() != tgt.carrier)
		throw InputError("derivative: " + f.shape() + " map between carriers of rank " +
		                 std::to_string(src.carrier) + " and " + std::to_string(tgt.carrier));
	const auto pair = stack(inst.act_mor(generators::epsilon(), src.carrier), src.phat);
	const auto inv = inverse(pair);
	if (!inv)
		throw InputError("derivative: <p, phat> is not invertible over N");
	return tgt.phat * inst.act_fun(generators::w(), f) * *inv;
}

} // namespace weilcat

#endif
