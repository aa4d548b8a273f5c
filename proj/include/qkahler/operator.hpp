#pragma once

// Linear maps on V(n) that send each V^{(a,b)} into a single V^{(c,d)},
// stored as one exact matrix per source bidegree in the monomial bases.

#include "fiber.hpp"
#include "linalg.hpp"

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qkahler {

inline std::vector<Bidegree> all_bidegrees(int n) {
    std::vector<Bidegree> out;
    for (int k = 0; k <= 2 * n; ++k)
        for (int a = std::min(n, k); a >= 0 && k - a <= n; --a) out.emplace_back(a, k - a);
    return out;
}

inline bool valid_bidegree(int n, const Bidegree& bd) {
    return bd.first >= 0 && bd.second >= 0 && bd.first <= n && bd.second <= n;
}

struct OperatorBlock {
    Bidegree target;
    SparseMatrix matrix;  // rows: basis(target), cols: basis(source)
};

class GradedOperator {
public:
    explicit GradedOperator(int n) : n_(n) { check_rank(n); }

    int rank() const { return n_; }
    const std::map<Bidegree, OperatorBlock>& blocks() const { return blocks_; }

    const OperatorBlock* block(const Bidegree& source) const {
        auto it = blocks_.find(source);
        return it == blocks_.end() ? nullptr : &it->second;
    }

    // All-zero blocks are dropped so that equality is structural.
    void set_block(const Bidegree& source, const Bidegree& target, SparseMatrix m) {
        if (!valid_bidegree(n_, source) || !valid_bidegree(n_, target)) {
            throw std::invalid_argument("GradedOperator: bidegree out of range");
        }
        if (m.cols() != basis(n_, source.first, source.second).size() ||
            m.rows() != basis(n_, target.first, target.second).size()) {
            throw std::invalid_argument("GradedOperator: block shape does not match bases");
        }
        if (m.is_zero()) {
            blocks_.erase(source);
            return;
        }
        blocks_.insert_or_assign(source, OperatorBlock{target, std::move(m)});
    }

    // Assemble from a bidegree-homogeneous linear map given on basis forms.
    static GradedOperator from_function(int n, const std::function<Bidegree(const Bidegree&)>& target_of,
                                        const std::function<FiberForm(const FiberForm&)>& f) {
        GradedOperator op(n);
        for (const auto& src : all_bidegrees(n)) {
            Bidegree tgt = target_of(src);
            if (!valid_bidegree(n, tgt)) continue;
            auto cols = basis(n, src.first, src.second);
            auto rows = basis(n, tgt.first, tgt.second);
            std::map<Monomial, std::size_t, MonomialOrder> row_index;
            for (std::size_t r = 0; r < rows.size(); ++r) row_index.emplace(rows[r], r);
            SparseMatrix m(rows.size(), cols.size());
            for (std::size_t c = 0; c < cols.size(); ++c) {
                FiberForm image = f(FiberForm(n, cols[c]));
                for (const auto& [mono, v] : image.terms()) {
                    auto it = row_index.find(mono);
                    if (it == row_index.end()) throw std::logic_error("GradedOperator: map is not bidegree-homogeneous");
                    m.set(it->second, c, v);
                }
            }
            op.set_block(src, tgt, std::move(m));
        }
        return op;
    }

    // Diagonal operator scaling V^{(a,b)} by value(a, b).
    static GradedOperator diagonal(int n, const std::function<Scalar(const Bidegree&)>& value) {
        GradedOperator op(n);
        for (const auto& bd : all_bidegrees(n)) {
            std::size_t dim = basis(n, bd.first, bd.second).size();
            op.set_block(bd, bd, value(bd) * SparseMatrix::identity(dim));
        }
        return op;
    }

    static GradedOperator identity(int n) {
        return diagonal(n, [](const Bidegree&) { return Scalar(1); });
    }

    FiberForm apply(const FiberForm& u) const {
        if (u.rank() != n_) throw RankMismatch("GradedOperator::apply: rank mismatch");
        FiberForm out(n_);
        for (const auto& [bd, part] : bidegree_split(u)) {
            const OperatorBlock* blk = block(bd);
            if (!blk) continue;
            auto src = basis(n_, bd.first, bd.second);
            auto tgt = basis(n_, blk->target.first, blk->target.second);
            auto y = blk->matrix.apply(coordinates(part, src));
            out += from_coordinates(n_, tgt, y);
        }
        return out;
    }

    // (this o other)
    GradedOperator compose(const GradedOperator& other) const {
        check_same(other);
        GradedOperator out(n_);
        for (const auto& [src, inner] : other.blocks_) {
            const OperatorBlock* outer = block(inner.target);
            if (!outer) continue;
            out.set_block(src, outer->target, outer->matrix * inner.matrix);
        }
        return out;
    }
    friend GradedOperator operator*(const GradedOperator& a, const GradedOperator& b) { return a.compose(b); }

    friend GradedOperator operator+(const GradedOperator& a, const GradedOperator& b) {
        a.check_same(b);
        GradedOperator out = a;
        for (const auto& [src, blk] : b.blocks_) {
            auto it = out.blocks_.find(src);
            if (it == out.blocks_.end()) {
                out.blocks_.emplace(src, blk);
                continue;
            }
            if (it->second.target != blk.target) {
                throw std::invalid_argument("GradedOperator: sum of maps with different bidegree shifts");
            }
            out.set_block(src, blk.target, it->second.matrix + blk.matrix);
        }
        return out;
    }
    friend GradedOperator operator*(const Scalar& s, const GradedOperator& a) {
        GradedOperator out(a.n_);
        for (const auto& [src, blk] : a.blocks_) out.set_block(src, blk.target, s * blk.matrix);
        return out;
    }
    friend GradedOperator operator-(const GradedOperator& a, const GradedOperator& b) {
        return a + Scalar(-1) * b;
    }
    friend bool operator==(const GradedOperator& a, const GradedOperator& b) {
        if (a.n_ != b.n_ || a.blocks_.size() != b.blocks_.size()) return false;
        for (const auto& [src, blk] : a.blocks_) {
            const OperatorBlock* other = b.block(src);
            if (!other || other->target != blk.target || !(other->matrix == blk.matrix)) return false;
        }
        return true;
    }

    // Restriction to sources of total degree k.
    GradedOperator restricted_to_degree(int k) const {
        GradedOperator out(n_);
        for (const auto& [src, blk] : blocks_)
            if (src.first + src.second == k) out.blocks_.emplace(src, blk);
        return out;
    }

    // Entrywise conjugation (i -> -i).
    GradedOperator conjugate() const {
        GradedOperator out(n_);
        for (const auto& [src, blk] : blocks_) out.blocks_.emplace(src, OperatorBlock{blk.target, blk.matrix.conjugate()});
        return out;
    }

    void check_same(const GradedOperator& o) const {
        if (o.n_ != n_) throw RankMismatch("GradedOperator: rank mismatch");
    }

private:
    int n_;
    std::map<Bidegree, OperatorBlock> blocks_;
};

}  // namespace qkahler
