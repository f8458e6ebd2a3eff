#ifndef TAPES_FINREL_HPP
#define TAPES_FINREL_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tapes/poly.hpp"

namespace tapes {

using SortSizes = std::map<Sort, int>;

/// A finite set of polynomial shape. Elements are pairs (branch, tuple)
/// enumerated branch-major, then tuple-lexicographic with the leftmost
/// factor most significant; the whole enumeration is addressed by a flat
/// 0-based index.
class Carrier {
  public:
    Carrier() = default;
    Carrier(Polynomial shape, SortSizes sizes);

    static Carrier zero(SortSizes sizes) { return Carrier(Polynomial::zero(), std::move(sizes)); }
    static Carrier unit(SortSizes sizes) { return Carrier(Polynomial::unit(), std::move(sizes)); }

    const Polynomial& shape() const { return shape_; }
    const SortSizes& sort_sizes() const { return sizes_; }
    int size() const { return total_; }
    int branches() const { return static_cast<int>(branch_size_.size()); }
    int branch_size(int b) const { return branch_size_[b]; }
    int branch_offset(int b) const { return offset_[b]; }

    int branch_of(int index) const;
    std::vector<int> tuple_of(int index) const;
    int index_of(int branch, std::span<const int> tuple) const;

    Carrier sum(const Carrier& other) const;
    Carrier tensor(const Carrier& other) const;

    /// Flat index in this->tensor(other) of the pair (x, y).
    int tensor_index(const Carrier& other, int x, int y) const;

    std::string element_name(int index) const;

    bool operator==(const Carrier& other) const;
    bool operator!=(const Carrier& other) const { return !(*this == other); }

  private:
    Polynomial shape_;
    SortSizes sizes_;
    std::vector<int> branch_size_;
    std::vector<int> offset_;
    int total_ = 0;
};

/// A binary relation between two carriers; pairs of flat indices kept
/// sorted and deduplicated, so equality is representation equality.
class FinRel {
  public:
    FinRel() = default;
    FinRel(Carrier dom, Carrier cod) : dom_(std::move(dom)), cod_(std::move(cod)) {}
    FinRel(Carrier dom, Carrier cod, std::vector<std::pair<int, int>> pairs);

    static FinRel identity(const Carrier& x);
    static FinRel empty(const Carrier& dom, const Carrier& cod) { return FinRel(dom, cod); }
    static FinRel full(const Carrier& dom, const Carrier& cod);
    static FinRel from_mask(const Carrier& dom, const Carrier& cod, unsigned long long mask);

    const Carrier& dom() const { return dom_; }
    const Carrier& cod() const { return cod_; }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    std::size_t count() const { return pairs_.size(); }
    bool contains(int x, int y) const;
    void insert(int x, int y);

    bool is_endo() const { return dom_ == cod_; }
    bool subset_of(const FinRel& other) const;
    std::optional<std::pair<int, int>> first_missing_from(const FinRel& other) const;

    FinRel converse() const;
    FinRel meet(const FinRel& other) const;
    FinRel join(const FinRel& other) const;

    bool operator==(const FinRel& other) const;
    bool operator!=(const FinRel& other) const { return !(*this == other); }

    std::string to_string() const;

  private:
    Carrier dom_, cod_;
    std::vector<std::pair<int, int>> pairs_;
};

FinRel compose(const FinRel& r, const FinRel& s);

enum class MonoidalMode { Tensor, Sum };
FinRel monoidal(MonoidalMode mode, const FinRel& r, const FinRel& s);

/// Reflexive-transitive closure, by Kleene iteration to the fixpoint of
/// T -> id u R;T.
FinRel star(const FinRel& r);

/// Matrix-normal-form blocks of f : S+X -> T+Y, in the order
/// (f_ST, f_SY, f_XT, f_XY).
struct Blocks {
    FinRel st, sy, xt, xy;
};
Blocks blocks(const FinRel& f, const Carrier& s, const Carrier& x, const Carrier& t, const Carrier& y);
FinRel recompose(const Blocks& b);

/// tr_S(f) = (f_XS ; f_SS* ; f_SY) u f_XY for f : S+X -> S+Y.
FinRel trace(const Carrier& s, const FinRel& f);

/// Star computed through the trace construction
/// f* = tr_X((f + id) ; codiag ; diag); used as the cross-check route.
FinRel star_via_trace(const FinRel& r);

enum class GeneratorKind {
    Copier,       // X -> X*X      {(x,(x,x))}
    Discharger,   // X -> 1        {(x,.)}
    Cocopier,     // X*X -> X
    Codischarger, // 1 -> X
    Diag,         // X -> X+X      {(x,(x,0)),(x,(x,1))}
    Bang,         // X -> 0        {}
    Codiag,       // X+X -> X
    Cobang        // 0 -> X        {}
};
FinRel generator(GeneratorKind kind, const Carrier& x);

FinRel symmetry_tensor(const Carrier& x, const Carrier& y);  // X*Y -> Y*X
FinRel symmetry_sum(const Carrier& x, const Carrier& y);     // X+Y -> Y+X

/// The canonical iso P*(Q+R) -> (P*Q)+(P*R); identity on underlying
/// elements when P is a single monomial, a block permutation otherwise.
FinRel distributor_left(const Polynomial& p, const Polynomial& q, const Polynomial& r, const SortSizes& sizes);
FinRel distributor_left_inv(const Polynomial& p, const Polynomial& q, const Polynomial& r, const SortSizes& sizes);

enum class ArrowProperty { SV, TOT, INJ, SUR, REF, TRN, SYM, COR };
bool arrow_property(const FinRel& r, ArrowProperty prop);

}  // namespace tapes

#endif
