#include "tapes/finrel.hpp"

#include <algorithm>
#include <cassert>

namespace tapes {

Carrier::Carrier(Polynomial shape, SortSizes sizes) : shape_(std::move(shape)), sizes_(std::move(sizes)) {
    branch_size_.reserve(shape_.summands.size());
    offset_.reserve(shape_.summands.size());
    for (const Monomial& u : shape_.summands) {
        long long prod = 1;
        for (const Sort& a : u.factors) {
            auto it = sizes_.find(a);
            if (it == sizes_.end()) throw UnknownSymbol("no carrier size for sort '" + a + "'");
            prod *= it->second;
        }
        offset_.push_back(total_);
        branch_size_.push_back(static_cast<int>(prod));
        total_ += static_cast<int>(prod);
    }
}

int Carrier::branch_of(int index) const {
    for (int b = branches() - 1; b >= 0; --b)
        if (index >= offset_[b]) return b;
    throw Error("element index out of range");
}

std::vector<int> Carrier::tuple_of(int index) const {
    int b = branch_of(index);
    int rem = index - offset_[b];
    const Monomial& u = shape_.summands[b];
    std::vector<int> tuple(u.factors.size());
    for (int i = static_cast<int>(u.factors.size()) - 1; i >= 0; --i) {
        int n = sizes_.at(u.factors[i]);
        tuple[i] = rem % n;
        rem /= n;
    }
    return tuple;
}

int Carrier::index_of(int branch, std::span<const int> tuple) const {
    const Monomial& u = shape_.summands[branch];
    assert(tuple.size() == u.factors.size());
    int idx = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i) idx = idx * sizes_.at(u.factors[i]) + tuple[i];
    return offset_[branch] + idx;
}

static SortSizes merged_sizes(const SortSizes& a, const SortSizes& b) {
    SortSizes m = a;
    for (const auto& [k, v] : b) {
        auto it = m.find(k);
        if (it != m.end() && it->second != v) throw CarrierMismatch("conflicting sizes for sort '" + k + "'");
        m.emplace(k, v);
    }
    return m;
}

Carrier Carrier::sum(const Carrier& other) const {
    return Carrier(poly_sum(shape_, other.shape_), merged_sizes(sizes_, other.sizes_));
}

Carrier Carrier::tensor(const Carrier& other) const {
    return Carrier(poly_product(shape_, other.shape_), merged_sizes(sizes_, other.sizes_));
}

int Carrier::tensor_index(const Carrier& other, int x, int y) const {
    int bx = branch_of(x), by = other.branch_of(y);
    int branch = bx * other.branches() + by;
    int within = (x - offset_[bx]) * other.branch_size_[by] + (y - other.offset_[by]);
    // offsets of the product carrier, computed on the fly
    int off = 0;
    for (int b = 0; b < branch; ++b)
        off += branch_size_[b / other.branches()] * other.branch_size_[b % other.branches()];
    return off + within;
}

std::string Carrier::element_name(int index) const {
    int b = branch_of(index);
    std::vector<int> t = tuple_of(index);
    std::string s;
    if (branches() > 1) s += std::to_string(b) + ":";
    if (t.size() == 1 && branches() == 1) return s + std::to_string(t[0]);
    s += "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    s += ")";
    return s;
}

bool Carrier::operator==(const Carrier& other) const {
    if (shape_ != other.shape_) return false;
    // sizes must agree on the sorts actually occurring in the shape
    for (const Monomial& u : shape_.summands)
        for (const Sort& a : u.factors)
            if (sizes_.at(a) != other.sizes_.at(a)) return false;
    return true;
}

FinRel::FinRel(Carrier dom, Carrier cod, std::vector<std::pair<int, int>> pairs)
    : dom_(std::move(dom)), cod_(std::move(cod)), pairs_(std::move(pairs)) {
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
    for (auto [x, y] : pairs_)
        if (x < 0 || x >= dom_.size() || y < 0 || y >= cod_.size())
            throw CarrierMismatch("relation pair out of carrier range");
}

FinRel FinRel::identity(const Carrier& x) {
    std::vector<std::pair<int, int>> ps;
    ps.reserve(x.size());
    for (int i = 0; i < x.size(); ++i) ps.emplace_back(i, i);
    return FinRel(x, x, std::move(ps));
}

FinRel FinRel::full(const Carrier& dom, const Carrier& cod) {
    std::vector<std::pair<int, int>> ps;
    ps.reserve(static_cast<std::size_t>(dom.size()) * cod.size());
    for (int i = 0; i < dom.size(); ++i)
        for (int j = 0; j < cod.size(); ++j) ps.emplace_back(i, j);
    return FinRel(dom, cod, std::move(ps));
}

FinRel FinRel::from_mask(const Carrier& dom, const Carrier& cod, unsigned long long mask) {
    std::vector<std::pair<int, int>> ps;
    int n = dom.size(), m = cod.size();
    for (int k = 0; k < n * m; ++k)
        if (mask & (1ull << k)) ps.emplace_back(k / m, k % m);
    return FinRel(dom, cod, std::move(ps));
}

bool FinRel::contains(int x, int y) const {
    return std::binary_search(pairs_.begin(), pairs_.end(), std::make_pair(x, y));
}

void FinRel::insert(int x, int y) {
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), std::make_pair(x, y));
    if (it != pairs_.end() && *it == std::make_pair(x, y)) return;
    pairs_.insert(it, {x, y});
}

bool FinRel::subset_of(const FinRel& other) const {
    if (dom_ != other.dom_ || cod_ != other.cod_) throw CarrierMismatch("inclusion between different carriers");
    return std::includes(other.pairs_.begin(), other.pairs_.end(), pairs_.begin(), pairs_.end());
}

std::optional<std::pair<int, int>> FinRel::first_missing_from(const FinRel& other) const {
    if (dom_ != other.dom_ || cod_ != other.cod_) throw CarrierMismatch("inclusion between different carriers");
    for (auto p : pairs_)
        if (!other.contains(p.first, p.second)) return p;
    return std::nullopt;
}

FinRel FinRel::converse() const {
    std::vector<std::pair<int, int>> ps;
    ps.reserve(pairs_.size());
    for (auto [x, y] : pairs_) ps.emplace_back(y, x);
    return FinRel(cod_, dom_, std::move(ps));
}

FinRel FinRel::meet(const FinRel& other) const {
    if (dom_ != other.dom_ || cod_ != other.cod_) throw CarrierMismatch("meet of relations on different carriers");
    std::vector<std::pair<int, int>> ps;
    std::set_intersection(pairs_.begin(), pairs_.end(), other.pairs_.begin(), other.pairs_.end(),
                          std::back_inserter(ps));
    return FinRel(dom_, cod_, std::move(ps));
}

FinRel FinRel::join(const FinRel& other) const {
    if (dom_ != other.dom_ || cod_ != other.cod_) throw CarrierMismatch("join of relations on different carriers");
    std::vector<std::pair<int, int>> ps;
    std::set_union(pairs_.begin(), pairs_.end(), other.pairs_.begin(), other.pairs_.end(), std::back_inserter(ps));
    return FinRel(dom_, cod_, std::move(ps));
}

bool FinRel::operator==(const FinRel& other) const {
    return dom_ == other.dom_ && cod_ == other.cod_ && pairs_ == other.pairs_;
}

std::string FinRel::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (i) s += ",";
        s += "(" + dom_.element_name(pairs_[i].first) + "," + cod_.element_name(pairs_[i].second) + ")";
    }
    return s + "}";
}

FinRel compose(const FinRel& r, const FinRel& s) {
    if (r.cod() != s.dom()) throw CarrierMismatch("compose: codomain/domain carriers differ");
    // bucket s by first component
    std::vector<std::vector<int>> succ(r.cod().size());
    for (auto [y, z] : s.pairs()) succ[y].push_back(z);
    std::vector<std::pair<int, int>> ps;
    for (auto [x, y] : r.pairs())
        for (int z : succ[y]) ps.emplace_back(x, z);
    return FinRel(r.dom(), s.cod(), std::move(ps));
}

FinRel monoidal(MonoidalMode mode, const FinRel& r, const FinRel& s) {
    if (mode == MonoidalMode::Tensor) {
        Carrier dom = r.dom().tensor(s.dom());
        Carrier cod = r.cod().tensor(s.cod());
        std::vector<std::pair<int, int>> ps;
        ps.reserve(r.count() * s.count());
        for (auto [x1, y1] : r.pairs())
            for (auto [x2, y2] : s.pairs())
                ps.emplace_back(r.dom().tensor_index(s.dom(), x1, x2), r.cod().tensor_index(s.cod(), y1, y2));
        return FinRel(std::move(dom), std::move(cod), std::move(ps));
    }
    Carrier dom = r.dom().sum(s.dom());
    Carrier cod = r.cod().sum(s.cod());
    std::vector<std::pair<int, int>> ps;
    ps.reserve(r.count() + s.count());
    for (auto [x, y] : r.pairs()) ps.emplace_back(x, y);
    int dx = r.dom().size(), dy = r.cod().size();
    for (auto [x, y] : s.pairs()) ps.emplace_back(dx + x, dy + y);
    return FinRel(std::move(dom), std::move(cod), std::move(ps));
}

FinRel star(const FinRel& r) {
    if (!r.is_endo()) throw NotEndo("star of a non-endo relation");
    FinRel acc = FinRel::identity(r.dom());
    for (;;) {
        FinRel next = acc.join(compose(r, acc));
        if (next == acc) return acc;
        acc = std::move(next);
    }
}

static void check_split(const FinRel& f, const Carrier& s, const Carrier& x, const Carrier& t, const Carrier& y) {
    if (f.dom() != s.sum(x) || f.cod() != t.sum(y))
        throw ShapeMismatch("relation does not have the requested block shape");
}

Blocks blocks(const FinRel& f, const Carrier& s, const Carrier& x, const Carrier& t, const Carrier& y) {
    check_split(f, s, x, t, y);
    int ds = s.size(), dt = t.size();
    Blocks b{FinRel(s, t), FinRel(s, y), FinRel(x, t), FinRel(x, y)};
    for (auto [p, q] : f.pairs()) {
        if (p < ds) {
            if (q < dt)
                b.st.insert(p, q);
            else
                b.sy.insert(p, q - dt);
        } else {
            if (q < dt)
                b.xt.insert(p - ds, q);
            else
                b.xy.insert(p - ds, q - dt);
        }
    }
    return b;
}

FinRel recompose(const Blocks& b) {
    Carrier dom = b.st.dom().sum(b.xt.dom());
    Carrier cod = b.st.cod().sum(b.sy.cod());
    int ds = b.st.dom().size(), dt = b.st.cod().size();
    std::vector<std::pair<int, int>> ps;
    for (auto [p, q] : b.st.pairs()) ps.emplace_back(p, q);
    for (auto [p, q] : b.sy.pairs()) ps.emplace_back(p, dt + q);
    for (auto [p, q] : b.xt.pairs()) ps.emplace_back(ds + p, q);
    for (auto [p, q] : b.xy.pairs()) ps.emplace_back(ds + p, dt + q);
    return FinRel(std::move(dom), std::move(cod), std::move(ps));
}

static Carrier trailing_carrier(const FinRel& f, const Carrier& s, bool dom_side) {
    const Carrier& full = dom_side ? f.dom() : f.cod();
    const auto& shape = full.shape().summands;
    const auto& pre = s.shape().summands;
    if (shape.size() < pre.size() || !std::equal(pre.begin(), pre.end(), shape.begin()))
        throw TraceShapeMismatch("carrier does not start with the traced prefix");
    Polynomial rest(std::vector<Monomial>(shape.begin() + pre.size(), shape.end()));
    return Carrier(std::move(rest), full.sort_sizes());
}

FinRel trace(const Carrier& s, const FinRel& f) {
    Carrier x = trailing_carrier(f, s, true);
    Carrier y = trailing_carrier(f, s, false);
    Blocks b = blocks(f, s, x, s, y);
    FinRel looped = compose(compose(b.xt, star(b.st)), b.sy);
    return looped.join(b.xy);
}

FinRel star_via_trace(const FinRel& r) {
    if (!r.is_endo()) throw NotEndo("star of a non-endo relation");
    const Carrier& x = r.dom();
    FinRel body = compose(compose(monoidal(MonoidalMode::Sum, r, FinRel::identity(x)),
                                  generator(GeneratorKind::Codiag, x)),
                          generator(GeneratorKind::Diag, x));
    return trace(x, body);
}

FinRel generator(GeneratorKind kind, const Carrier& x) {
    switch (kind) {
        case GeneratorKind::Copier: {
            FinRel r(x, x.tensor(x));
            for (int i = 0; i < x.size(); ++i) r.insert(i, x.tensor_index(x, i, i));
            return r;
        }
        case GeneratorKind::Discharger: {
            Carrier one = Carrier::unit(x.sort_sizes());
            FinRel r(x, one);
            for (int i = 0; i < x.size(); ++i) r.insert(i, 0);
            return r;
        }
        case GeneratorKind::Cocopier:
            return generator(GeneratorKind::Copier, x).converse();
        case GeneratorKind::Codischarger:
            return generator(GeneratorKind::Discharger, x).converse();
        case GeneratorKind::Diag: {
            FinRel r(x, x.sum(x));
            for (int i = 0; i < x.size(); ++i) {
                r.insert(i, i);
                r.insert(i, x.size() + i);
            }
            return r;
        }
        case GeneratorKind::Bang:
            return FinRel(x, Carrier::zero(x.sort_sizes()));
        case GeneratorKind::Codiag:
            return generator(GeneratorKind::Diag, x).converse();
        case GeneratorKind::Cobang:
            return FinRel(Carrier::zero(x.sort_sizes()), x);
    }
    throw Error("unreachable");
}

FinRel symmetry_tensor(const Carrier& x, const Carrier& y) {
    FinRel r(x.tensor(y), y.tensor(x));
    for (int i = 0; i < x.size(); ++i)
        for (int j = 0; j < y.size(); ++j) r.insert(x.tensor_index(y, i, j), y.tensor_index(x, j, i));
    return r;
}

FinRel symmetry_sum(const Carrier& x, const Carrier& y) {
    FinRel r(x.sum(y), y.sum(x));
    for (int i = 0; i < x.size(); ++i) r.insert(i, y.size() + i);
    for (int j = 0; j < y.size(); ++j) r.insert(x.size() + j, j);
    return r;
}

FinRel distributor_left(const Polynomial& p, const Polynomial& q, const Polynomial& r, const SortSizes& sizes) {
    Carrier dom(poly_product(p, poly_sum(q, r)), sizes);
    Carrier pq(poly_product(p, q), sizes);
    Carrier pr(poly_product(p, r), sizes);
    Carrier cod = pq.sum(pr);
    Carrier cp(p, sizes), cq(q, sizes), cr(r, sizes), cqr = cq.sum(cr);
    FinRel rel(dom, cod);
    for (int i = 0; i < cp.size(); ++i) {
        for (int j = 0; j < cqr.size(); ++j) {
            int src = cp.tensor_index(cqr, i, j);
            int dst = j < cq.size() ? cp.tensor_index(cq, i, j) : pq.size() + cp.tensor_index(cr, i, j - cq.size());
            rel.insert(src, dst);
        }
    }
    return rel;
}

FinRel distributor_left_inv(const Polynomial& p, const Polynomial& q, const Polynomial& r, const SortSizes& sizes) {
    return distributor_left(p, q, r, sizes).converse();
}

bool arrow_property(const FinRel& r, ArrowProperty prop) {
    switch (prop) {
        case ArrowProperty::SV: {
            std::vector<int> seen(r.dom().size(), -1);
            for (auto [x, y] : r.pairs()) {
                if (seen[x] >= 0 && seen[x] != y) return false;
                seen[x] = y;
            }
            return true;
        }
        case ArrowProperty::TOT: {
            std::vector<char> hit(r.dom().size(), 0);
            for (auto [x, y] : r.pairs()) hit[x] = 1;
            return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
        }
        case ArrowProperty::INJ:
            return arrow_property(r.converse(), ArrowProperty::SV);
        case ArrowProperty::SUR:
            return arrow_property(r.converse(), ArrowProperty::TOT);
        case ArrowProperty::REF:
            if (!r.is_endo()) throw NotEndo("REF requires an endo relation");
            return FinRel::identity(r.dom()).subset_of(r);
        case ArrowProperty::TRN:
            if (!r.is_endo()) throw NotEndo("TRN requires an endo relation");
            return compose(r, r).subset_of(r);
        case ArrowProperty::SYM:
            if (!r.is_endo()) throw NotEndo("SYM requires an endo relation");
            return r.converse().subset_of(r);
        case ArrowProperty::COR:
            if (!r.is_endo()) throw NotEndo("COR requires an endo relation");
            return r.subset_of(FinRel::identity(r.dom()));
    }
    throw Error("unreachable");
}

}  // namespace tapes
