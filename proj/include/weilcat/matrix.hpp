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

#ifndef WEILCAT_MATRIX_HPP
#define WEILCAT_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "natural.hpp"
#include "weil.hpp"

namespace weilcat {

/// Dense matrix of naturals. Columns are indexed by the source basis, rows
/// by the target basis, so composition is ordinary matrix product.
class NatMatrix {
  public:
	NatMatrix() = default;
	NatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

	NatMatrix(std::initializer_list<std::initializer_list<unsigned>> rows) : rows_(rows.size()) {
		cols_ = rows.size() == 0 ? 0 : rows.begin()->size();
		for (const auto &row : rows) {
			if (row.size() != cols_)
				throw InputError("ragged matrix literal");
			for (auto v : row)
				data_.emplace_back(v);
		}
	}

	static NatMatrix identity(std::size_t n) {
		NatMatrix m(n, n);
		for (std::size_t i = 0; i < n; ++i)
			m(i, i) = 1;
		return m;
	}

	std::size_t rows() const noexcept { return rows_; }
	std::size_t cols() const noexcept { return cols_; }

	Natural &operator()(std::size_t r, std::size_t c) { return data_.at(r * cols_ + c); }
	const Natural &operator()(std::size_t r, std::size_t c) const { return data_.at(r * cols_ + c); }

	bool is_zero() const {
		return std::all_of(data_.begin(), data_.end(), [](const Natural &v) { return v == 0; });
	}

	friend bool operator==(const NatMatrix &, const NatMatrix &) = default;

	friend NatMatrix operator*(const NatMatrix &a, const NatMatrix &b) {
		if (a.cols_ != b.rows_)
			throw InputError("matrix shapes do not compose: " + a.shape() + " * " + b.shape());
		NatMatrix out(a.rows_, b.cols_);
		for (std::size_t i = 0; i < a.rows_; ++i)
			for (std::size_t k = 0; k < a.cols_; ++k) {
				const auto &v = a(i, k);
				if (v == 0)
					continue;
				for (std::size_t j = 0; j < b.cols_; ++j)
					if (b(k, j) != 0)
						out(i, j) += v * b(k, j);
			}
		return out;
	}

	friend NatMatrix operator+(NatMatrix a, const NatMatrix &b) {
		if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
			throw InputError("matrix shapes do not add: " + a.shape() + " + " + b.shape());
		for (std::size_t i = 0; i < a.data_.size(); ++i)
			a.data_[i] += b.data_[i];
		return a;
	}

	NatMatrix transposed() const {
		NatMatrix out(cols_, rows_);
		for (std::size_t i = 0; i < rows_; ++i)
			for (std::size_t j = 0; j < cols_; ++j)
				out(j, i) = (*this)(i, j);
		return out;
	}

	std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

	std::string str() const {
		std::ostringstream os;
		os << '[';
		for (std::size_t i = 0; i < rows_; ++i) {
			os << (i ? ",[" : "[");
			for (std::size_t j = 0; j < cols_; ++j)
				os << (j ? "," : "") << (*this)(i, j);
			os << ']';
		}
		os << ']';
		return os.str();
	}

  private:
	std::size_t rows_ = 0;
	std::size_t cols_ = 0;
	std::vector<Natural> data_;
};

/// Kronecker product with `outer` major: entry ((i,k),(j,l)) = outer(i,j) inner(k,l).
inline NatMatrix kronecker(const NatMatrix &outer, const NatMatrix &inner) {
	NatMatrix out(outer.rows() * inner.rows(), outer.cols() * inner.cols());
	for (std::size_t i = 0; i < outer.rows(); ++i)
		for (std::size_t j = 0; j < outer.cols(); ++j) {
			const auto &v = outer(i, j);
			if (v == 0)
				continue;
			for (std::size_t k = 0; k < inner.rows(); ++k)
				for (std::size_t l = 0; l < inner.cols(); ++l)
					out(i * inner.rows() + k, j * inner.cols() + l) = v * inner(k, l);
		}
	return out;
}

/// [top; bottom], the pairing <f, g> into a product.
inline NatMatrix stack(const NatMatrix &top, const NatMatrix &bottom) {
	if (top.cols() != bottom.cols())
		throw InputError("cannot pair maps with different sources");
	NatMatrix out(top.rows() + bottom.rows(), top.cols());
	for (std::size_t i = 0; i < top.rows(); ++i)
		for (std::size_t j = 0; j < top.cols(); ++j)
			out(i, j) = top(i, j);
	for (std::size_t i = 0; i < bottom.rows(); ++i)
		for (std::size_t j = 0; j < bottom.cols(); ++j)
			out(top.rows() + i, j) = bottom(i, j);
	return out;
}

/// [left right], the copairing out of a coproduct.
inline NatMatrix concat(const NatMatrix &left, const NatMatrix &right) {
	return stack(left.transposed(), right.transposed()).transposed();
}

inline NatMatrix block_diagonal(const NatMatrix &a, const NatMatrix &b) {
	NatMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
	for (std::size_t i = 0; i < a.rows(); ++i)
		for (std::size_t j = 0; j < a.cols(); ++j)
			out(i, j) = a(i, j);
	for (std::size_t i = 0; i < b.rows(); ++i)
		for (std::size_t j = 0; j < b.cols(); ++j)
			out(a.rows() + i, a.cols() + j) = b(i, j);
	return out;
}

/// Over N the invertible matrices are exactly the permutation matrices.
inline bool is_permutation(const NatMatrix &m) {
	if (m.rows() != m.cols())
		return false;
	std::vector<int> col_hits(m.cols(), 0);
	for (std::size_t i = 0; i < m.rows(); ++i) {
		int row_hits = 0;
		for (std::size_t j = 0; j < m.cols(); ++j) {
			if (m(i, j) == 0)
				continue;
			if (m(i, j) != 1)
				return false;
			++row_hits;
			++col_hits[j];
		}
		if (row_hits != 1)
			return false;
	}
	return std::all_of(col_hits.begin(), col_hits.end(), [](int h) { return h == 1; });
}

inline std::optional<NatMatrix> inverse(const NatMatrix &m) {
	if (!is_permutation(m))
		return std::nullopt;
	return m.transposed();
}

/// A left inverse read off from unit rows: if every column j has some row
/// equal to e_j, the map is injective and those rows recover each coordinate.
/// Returns, per column, the index of such a row.
inline std::optional<std::vector<std::size_t>> unit_row_witness(const NatMatrix &m) {
	std::vector<std::optional<std::size_t>> found(m.cols());
	for (std::size_t i = 0; i < m.rows(); ++i) {
		std::optional<std::size_t> hit;
		bool unit = true;
		for (std::size_t j = 0; j < m.cols() && unit; ++j) {
			if (m(i, j) == 0)
				continue;
			if (m(i, j) != 1 || hit)
				unit = false;
			else
				hit = j;
		}
		if (unit && hit && !found[*hit])
			found[*hit] = i;
	}
	std::vector<std::size_t> rows;
	for (const auto &f : found) {
		if (!f)
			return std::nullopt;
		rows.push_back(*f);
	}
	return rows;
}

/// The N-linear map underlying a Weil morphism, on the colex monomial bases.
inline NatMatrix linear_matrix(const WeilMorphism &phi) {
	const auto src = monomial_basis(phi.source());
	const auto tgt = monomial_basis(phi.target());
	std::map<Monomial, std::size_t> row_of;
	for (std::size_t i = 0; i < tgt.size(); ++i)
		row_of.emplace(tgt[i], i);
	NatMatrix out(tgt.size(), src.size());
	for (std::size_t j = 0; j < src.size(); ++j)
		for (const auto &[m, c] : eval_monomial(phi, src[j]))
			out(row_of.at(m), j) += c;
	return out;
}

} // namespace weilcat

#endif
