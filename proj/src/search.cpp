#include "tapes/search.hpp"

#include <algorithm>
#include <random>

namespace tapes {

namespace {

struct SymbolSlot {
    std::string name;
    SymbolMode mode;
    Carrier dom, cod;
    std::uint64_t count = 0;  // candidate relations; 0 means not indexable in 64 bits
};

std::uint64_t candidate_count(const SymbolSlot& slot) {
    switch (slot.mode.kind) {
        case SymbolMode::Kind::Raw: {
            int bits = slot.dom.size() * slot.cod.size();
            return bits < 63 ? (1ull << bits) : 0;
        }
        case SymbolMode::Kind::FunctionGraph: {
            if (slot.cod.size() == 0) return slot.dom.size() == 0 ? 1 : 0;
            std::uint64_t c = 1;
            for (int x = 0; x < slot.dom.size(); ++x) {
                if (c > (1ull << 62) / static_cast<std::uint64_t>(slot.cod.size())) return 0;
                c *= static_cast<std::uint64_t>(slot.cod.size());
            }
            return c;
        }
        case SymbolMode::Kind::ComplementOf:
            return 1;
    }
    throw Error("unreachable");
}

FinRel relation_at(const SymbolSlot& slot, std::uint64_t index, const std::map<std::string, FinRel>& chosen) {
    switch (slot.mode.kind) {
        case SymbolMode::Kind::Raw:
            return FinRel::from_mask(slot.dom, slot.cod, index);
        case SymbolMode::Kind::FunctionGraph: {
            FinRel r(slot.dom, slot.cod);
            int m = slot.cod.size();
            for (int x = 0; x < slot.dom.size(); ++x) {
                r.insert(x, static_cast<int>(index % m));
                index /= m;
            }
            return r;
        }
        case SymbolMode::Kind::ComplementOf: {
            auto it = chosen.find(slot.mode.partner);
            if (it == chosen.end()) throw UnknownSymbol("complement partner '" + slot.mode.partner + "' not chosen");
            FinRel r(slot.dom, slot.cod);
            for (int x = 0; x < slot.dom.size(); ++x)
                for (int y = 0; y < slot.cod.size(); ++y)
                    if (!it->second.contains(x, y)) r.insert(x, y);
            return r;
        }
    }
    throw Error("unreachable");
}

// Size vectors over the sorted sort list, every entry in [1, max_size],
// ordered by total size ascending, then lexicographically.
std::vector<std::vector<int>> all_assignments(std::size_t nsorts, int max_size) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(nsorts, 1);
    for (;;) {
        out.push_back(cur);
        std::size_t i = nsorts;
        while (i > 0 && cur[i - 1] == max_size) cur[--i] = 1;
        if (i == 0) break;
        ++cur[i - 1];
    }
    std::stable_sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        int ta = 0, tb = 0;
        for (int v : a) ta += v;
        for (int v : b) tb += v;
        return ta < tb;
    });
    return out;
}

bool refutes(const Theory& theory, const Interpretation& interp) {
    for (const Axiom& ax : theory.axioms) {
        if (!eval(ax.lhs, interp).subset_of(eval(ax.rhs, interp))) return true;
        if (ax.is_equality && !eval(ax.rhs, interp).subset_of(eval(ax.lhs, interp))) return true;
    }
    return false;
}

}  // namespace

std::optional<Interpretation> search_countermodel(const TapePtr& lhs, const TapePtr& rhs, const Signature& sig,
                                                  const SearchOptions& opts) {
    Theory t;
    t.signature = sig;
    t.axioms.push_back({lhs, rhs, false});
    return search_theory_countermodel(t, opts);
}

std::optional<Interpretation> search_theory_countermodel(const Theory& theory, const SearchOptions& opts) {
    const Signature& sig = theory.signature;
    std::vector<Sort> sorts(sig.sorts.begin(), sig.sorts.end());

    struct Prepared {
        SortSizes sizes;
        std::vector<SymbolSlot> slots;
        double weight = 1;
        bool countable = true;
    };
    std::vector<Prepared> prepared;
    double total_space = 0;
    bool all_countable = true;

    for (const std::vector<int>& a : all_assignments(sorts.size(), std::max(1, opts.max_size))) {
        Prepared p;
        for (std::size_t i = 0; i < sorts.size(); ++i) p.sizes[sorts[i]] = a[i];
        for (const auto& [name, arity] : sig.symbols) {
            SymbolSlot slot;
            slot.name = name;
            auto it = opts.modes.find(name);
            slot.mode = it == opts.modes.end() ? SymbolMode::raw() : it->second;
            slot.dom = Carrier(Polynomial::of(arity.first), p.sizes);
            slot.cod = Carrier(Polynomial::of(arity.second), p.sizes);
            slot.count = candidate_count(slot);
            if (slot.count == 0) p.countable = false;
            p.weight *= static_cast<double>(std::max<std::uint64_t>(slot.count, 1));
            p.slots.push_back(std::move(slot));
        }
        // complements are resolved after their partners
        std::stable_partition(p.slots.begin(), p.slots.end(),
                              [](const SymbolSlot& s) { return s.mode.kind != SymbolMode::Kind::ComplementOf; });
        all_countable = all_countable && p.countable;
        total_space += p.weight;
        prepared.push_back(std::move(p));
    }

    auto build = [&](const Prepared& p, const std::vector<std::uint64_t>& indices) {
        Interpretation interp;
        interp.signature = sig;
        interp.sizes = p.sizes;
        for (std::size_t i = 0; i < p.slots.size(); ++i)
            interp.relations.emplace(p.slots[i].name, relation_at(p.slots[i], indices[i], interp.relations));
        return interp;
    };

    if (all_countable && total_space <= static_cast<double>(opts.budget)) {
        for (const Prepared& p : prepared) {
            std::vector<std::uint64_t> indices(p.slots.size(), 0);
            for (;;) {
                Interpretation interp = build(p, indices);
                if (refutes(theory, interp)) return interp;
                // odometer, last slot fastest: first symbol most significant
                std::size_t i = p.slots.size();
                while (i > 0 && ++indices[i - 1] == p.slots[i - 1].count) indices[--i] = 0;
                if (i == 0) break;
            }
        }
        return std::nullopt;
    }

    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (std::uint64_t k = 0; k < opts.budget; ++k) {
        double x = unif(rng) * total_space;
        std::size_t pick = 0;
        while (pick + 1 < prepared.size() && x >= prepared[pick].weight) x -= prepared[pick++].weight;
        const Prepared& p = prepared[pick];

        Interpretation interp;
        interp.signature = sig;
        interp.sizes = p.sizes;
        bool feasible = true;
        for (const SymbolSlot& slot : p.slots) {
            if (slot.count > 0) {
                interp.relations.emplace(slot.name, relation_at(slot, rng() % slot.count, interp.relations));
            } else if (slot.mode.kind == SymbolMode::Kind::Raw) {
                FinRel r(slot.dom, slot.cod);
                for (int xi = 0; xi < slot.dom.size(); ++xi)
                    for (int yi = 0; yi < slot.cod.size(); ++yi)
                        if (rng() & 1) r.insert(xi, yi);
                interp.relations.emplace(slot.name, std::move(r));
            } else {
                feasible = false;
                break;
            }
        }
        if (feasible && refutes(theory, interp)) return interp;
    }
    return std::nullopt;
}

}  // namespace tapes
