#pragma once

// Finite set algebra and cardinal arithmetic built on set constructions:
// disjoint union for addition, ordered pairs for multiplication and
// covering-sets (all total functions N -> M) for exponentiation.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "continuum/errors.hpp"

namespace continuum {

using Label = std::string;

/// Ordered set of distinct labels. Order is insertion order and is what every
/// enumeration in this header is keyed on.
class FiniteSet {
public:
    FiniteSet() = default;

    /// Keeps the first occurrence of every label.
    static FiniteSet from_labels(std::span<const Label> labels) {
        FiniteSet set;
        for (const auto& label : labels) set.try_append(label);
        return set;
    }

    std::size_t size() const noexcept { return labels_.size(); }
    bool empty() const noexcept { return labels_.empty(); }
    const Label& operator[](std::size_t i) const { return labels_[i]; }
    const std::vector<Label>& labels() const noexcept { return labels_; }
    auto begin() const noexcept { return labels_.begin(); }
    auto end() const noexcept { return labels_.end(); }

    bool contains(const Label& label) const { return index_.contains(label); }

    std::optional<std::size_t> index_of(const Label& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    friend bool operator==(const FiniteSet& a, const FiniteSet& b) { return a.labels_ == b.labels_; }

private:
    friend class SetBuilder;

    bool try_append(const Label& label) {
        auto [it, inserted] = index_.emplace(label, labels_.size());
        if (inserted) labels_.push_back(label);
        return inserted;
    }

    std::vector<Label> labels_;
    std::unordered_map<Label, std::size_t> index_;
};

/// Internal builder for constructions whose labels are distinct by
/// construction; a repeated label means a construction bug, not user error.
class SetBuilder {
public:
    void reserve(std::size_t n) { set_.labels_.reserve(n); }
    void append(Label label) {
        if (!set_.try_append(label))
            throw std::logic_error("duplicate label in set construction: " + label);
    }
    FiniteSet build() && { return std::move(set_); }

private:
    FiniteSet set_;
};

inline FiniteSet make_set(std::span<const Label> labels) { return FiniteSet::from_labels(labels); }

inline FiniteSet make_set(std::initializer_list<Label> labels) {
    return FiniteSet::from_labels(std::span<const Label>(labels.begin(), labels.size()));
}

/// Label of the ordered pair (a, b).
inline Label pair_label(std::string_view a, std::string_view b) {
    Label out;
    out.reserve(a.size() + b.size() + 3);
    out += '(';
    out += a;
    out += ',';
    out += b;
    out += ')';
    return out;
}

/// Prefixes every label with `role` and a dot.
inline FiniteSet tag(const FiniteSet& set, std::string_view role) {
    SetBuilder builder;
    builder.reserve(set.size());
    for (const auto& label : set) builder.append(Label(role) + "." + label);
    return std::move(builder).build();
}

/// Strict union: all labels of `m` followed by all labels of `n`. Throws
/// DisjointnessViolation (listing the shared labels) unless m and n are disjoint.
inline FiniteSet disjoint_union(const FiniteSet& m, const FiniteSet& n) {
    std::vector<Label> common;
    for (const auto& label : m)
        if (n.contains(label)) common.push_back(label);
    if (!common.empty()) throw DisjointnessViolation(std::move(common));

    SetBuilder builder;
    builder.reserve(m.size() + n.size());
    for (const auto& label : m) builder.append(label);
    for (const auto& label : n) builder.append(label);
    return std::move(builder).build();
}

/// Total union that disjointifies by tagging sides "L." and "R.".
inline FiniteSet tagged_union(const FiniteSet& m, const FiniteSet& n) {
    return disjoint_union(tag(m, "L"), tag(n, "R"));
}

/// All ordered pairs (m, n), m-major.
inline FiniteSet product(const FiniteSet& m, const FiniteSet& n) {
    SetBuilder builder;
    builder.reserve(m.size() * n.size());
    for (const auto& a : m)
        for (const auto& b : n) builder.append(pair_label(a, b));
    return std::move(builder).build();
}

/// A total function from `domain` into `codomain`, stored as the codomain
/// index of the image of each domain element, in domain order.
class Covering {
public:
    Covering(std::shared_ptr<const FiniteSet> domain, std::shared_ptr<const FiniteSet> codomain,
             std::vector<std::size_t> images)
        : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
        if (images_.size() != domain_->size())
            throw std::invalid_argument("covering must assign every domain element");
        for (auto index : images_)
            if (index >= codomain_->size()) throw std::invalid_argument("covering image outside codomain");
    }

    const FiniteSet& domain() const noexcept { return *domain_; }
    const FiniteSet& codomain() const noexcept { return *codomain_; }
    std::span<const std::size_t> image_indices() const noexcept { return images_; }

    /// f(n). Throws std::out_of_range when `n` is not in the domain.
    const Label& operator()(const Label& n) const {
        auto i = domain_->index_of(n);
        if (!i) throw std::out_of_range("label not in covering domain: " + n);
        return (*codomain_)[images_[*i]];
    }

    /// Text form. Single-character codomains concatenate the images ("010");
    /// anything else is bracketed ("<M.e0,M.e1>"). The empty function is "<>".
    Label label() const {
        bool compact = !images_.empty();
        for (const auto& l : *codomain_) compact = compact && l.size() == 1;
        Label out;
        if (compact) {
            for (auto index : images_) out += (*codomain_)[index];
            return out;
        }
        out += '<';
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (i) out += ',';
            out += (*codomain_)[images_[i]];
        }
        out += '>';
        return out;
    }

    friend bool operator==(const Covering& a, const Covering& b) {
        return *a.domain_ == *b.domain_ && *a.codomain_ == *b.codomain_ && a.images_ == b.images_;
    }

private:
    std::shared_ptr<const FiniteSet> domain_;
    std::shared_ptr<const FiniteSet> codomain_;
    std::vector<std::size_t> images_;
};

/// Cap on the number of items a single enumeration may materialize.
struct EnumerationBudget {
    std::uint64_t max_items = 1'000'000;
};

namespace detail {

inline std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::nullopt;
    return a * b;
}

inline std::optional<std::uint64_t> checked_add(std::uint64_t a, std::uint64_t b) {
    if (b > std::numeric_limits<std::uint64_t>::max() - a) return std::nullopt;
    return a + b;
}

inline void require_within(std::optional<std::uint64_t> items, const EnumerationBudget& budget,
                           std::string_view what) {
    if (!items || *items > budget.max_items)
        throw BudgetExceeded(std::string(what) + " exceeds the enumeration budget of " +
                             std::to_string(budget.max_items) + " items");
}

} // namespace detail

/// The covering-set (N | M): every total function N -> M, enumerated
/// lexicographically with domain positions as digits (first element most
/// significant) and codomain order as digit values. Enumeration is lazy.
class CoveringSet {
public:
    CoveringSet(FiniteSet domain, FiniteSet codomain)
        : domain_(std::make_shared<const FiniteSet>(std::move(domain))),
          codomain_(std::make_shared<const FiniteSet>(std::move(codomain))) {}

    const FiniteSet& domain() const noexcept { return *domain_; }
    const FiniteSet& codomain() const noexcept { return *codomain_; }

    /// |M|^|N| with 0^0 = 1, or nullopt when it does not fit in 64 bits.
    std::optional<std::uint64_t> size() const {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < domain_->size(); ++i) {
            auto next = detail::checked_mul(count, codomain_->size());
            if (!next) return std::nullopt;
            count = *next;
        }
        return count;
    }

    /// The covering at lexicographic position `index`.
    Covering at(std::uint64_t index) const {
        auto n = size();
        if (n && index >= *n) throw std::out_of_range("covering index out of range");
        std::vector<std::size_t> digits(domain_->size());
        for (std::size_t pos = digits.size(); pos-- > 0;) {
            digits[pos] = static_cast<std::size_t>(index % codomain_->size());
            index /= codomain_->size();
        }
        return Covering(domain_, codomain_, std::move(digits));
    }

    class iterator {
    public:
        using value_type = Covering;
        using difference_type = std::ptrdiff_t;

        iterator() = default;

        Covering operator*() const { return Covering(owner_->domain_, owner_->codomain_, digits_); }

        iterator& operator++() {
            // odometer, last domain position fastest
            const std::size_t base = owner_->codomain_->size();
            std::size_t pos = digits_.size();
            while (pos > 0) {
                --pos;
                if (++digits_[pos] < base) return *this;
                digits_[pos] = 0;
            }
            done_ = true;
            return *this;
        }
        void operator++(int) { ++*this; }

        friend bool operator==(const iterator& a, const iterator& b) {
            if (a.done_ || b.done_) return a.done_ == b.done_;
            return a.digits_ == b.digits_;
        }

    private:
        friend class CoveringSet;
        iterator(const CoveringSet* owner, bool done)
            : owner_(owner), digits_(owner->domain_->size(), 0), done_(done) {}

        const CoveringSet* owner_ = nullptr;
        std::vector<std::size_t> digits_;
        bool done_ = true;
    };

    iterator begin() const { return iterator(this, size() == std::uint64_t{0}); }
    iterator end() const { return iterator(this, true); }

    /// Materializes every covering, subject to `budget`.
    std::vector<Covering> coverings(const EnumerationBudget& budget = {}) const {
        detail::require_within(size(), budget, "covering-set");
        std::vector<Covering> out;
        out.reserve(static_cast<std::size_t>(*size()));
        for (auto it = begin(); it != end(); ++it) out.push_back(*it);
        return out;
    }

    /// The covering-set as a FiniteSet of covering labels, in enumeration order.
    FiniteSet as_set(const EnumerationBudget& budget = {}) const {
        detail::require_within(size(), budget, "covering-set");
        SetBuilder builder;
        builder.reserve(static_cast<std::size_t>(*size()));
        for (auto it = begin(); it != end(); ++it) builder.append((*it).label());
        return std::move(builder).build();
    }

private:
    std::shared_ptr<const FiniteSet> domain_;
    std::shared_ptr<const FiniteSet> codomain_;
};

inline CoveringSet covering_set(const FiniteSet& domain, const FiniteSet& codomain) {
    return CoveringSet(domain, codomain);
}

/// Finite surrogate for a cardinal number.
struct Cardinal {
    std::uint64_t value = 0;
    friend auto operator<=>(const Cardinal&, const Cardinal&) = default;
};

/// Canonical witness set {e0, ..., e(n-1)}.
inline FiniteSet witness_set(Cardinal n) {
    SetBuilder builder;
    builder.reserve(static_cast<std::size_t>(n.value));
    for (std::uint64_t i = 0; i < n.value; ++i) builder.append("e" + std::to_string(i));
    return std::move(builder).build();
}

/// a + b as the size of the tagged union of two witness sets. Both witnesses
/// use the same labels, so the union must disjointify.
inline Cardinal cardinal_add(Cardinal a, Cardinal b, const EnumerationBudget& budget = {}) {
    detail::require_within(detail::checked_add(a.value, b.value), budget, "cardinal sum");
    return Cardinal{tagged_union(witness_set(a), witness_set(b)).size()};
}

/// a * b as the size of the product of two witness sets.
inline Cardinal cardinal_mul(Cardinal a, Cardinal b, const EnumerationBudget& budget = {}) {
    detail::require_within(detail::checked_mul(a.value, b.value), budget, "cardinal product");
    return Cardinal{product(witness_set(a), witness_set(b)).size()};
}

/// a^b as the number of coverings of a b-element set with an a-element set,
/// counted by walking the enumeration.
inline Cardinal cardinal_pow(Cardinal a, Cardinal b, const EnumerationBudget& budget = {}) {
    detail::require_within(std::max(a.value, b.value), budget, "cardinal power operand");
    auto coverings = covering_set(tag(witness_set(b), "N"), tag(witness_set(a), "M"));
    detail::require_within(coverings.size(), budget, "cardinal power");
    std::uint64_t count = 0;
    for (auto it = coverings.begin(); it != coverings.end(); ++it) ++count;
    return Cardinal{count};
}

enum class ExponentLaw {
    AddExp, ///< (N|M) x (P|M) ~ ((N,P)|M), a^b a^c = a^(b+c)
    MulExp, ///< (P|M) x (P|N) ~ (P|M x N), a^c b^c = (ab)^c
    Curry,  ///< (P|(N|M)) ~ (P x N | M), (a^b)^c = a^(bc)
};

inline std::string_view to_string(ExponentLaw law) {
    switch (law) {
    case ExponentLaw::AddExp: return "ADD_EXP";
    case ExponentLaw::MulExp: return "MUL_EXP";
    case ExponentLaw::Curry: return "CURRY";
    }
    return "?";
}

inline std::optional<ExponentLaw> parse_exponent_law(std::string_view text) {
    if (text == "ADD_EXP") return ExponentLaw::AddExp;
    if (text == "MUL_EXP") return ExponentLaw::MulExp;
    if (text == "CURRY") return ExponentLaw::Curry;
    return std::nullopt;
}

/// Explicit map between the two sides of an exponent law, fully enumerated.
struct LawWitness {
    ExponentLaw law;
    FiniteSet left_set;
    FiniteSet right_set;
    std::vector<std::pair<Label, Label>> pairs;

    /// Every left label appears exactly once as a source, and nothing else does.
    bool total() const {
        if (pairs.size() != left_set.size()) return false;
        std::vector<bool> seen(left_set.size(), false);
        for (const auto& [from, to] : pairs) {
            auto i = left_set.index_of(from);
            if (!i || seen[*i]) return false;
            seen[*i] = true;
        }
        return true;
    }

    /// Every target lies in the right set and no target repeats.
    bool injective() const {
        std::vector<bool> hit(right_set.size(), false);
        for (const auto& [from, to] : pairs) {
            auto i = right_set.index_of(to);
            if (!i || hit[*i]) return false;
            hit[*i] = true;
        }
        return true;
    }

    bool surjective() const {
        std::vector<bool> hit(right_set.size(), false);
        for (const auto& [from, to] : pairs)
            if (auto i = right_set.index_of(to)) hit[*i] = true;
        for (bool h : hit)
            if (!h) return false;
        return true;
    }

    bool is_bijection() const { return total() && injective() && surjective(); }
};

namespace detail {

inline std::size_t index_in(const FiniteSet& set, const Label& label) {
    auto i = set.index_of(label);
    if (!i) throw std::logic_error("label missing from construction: " + label);
    return *i;
}

// (f, g) -> h on the disjoint union, h|N = f, h|P = g.
inline LawWitness add_exp_witness(const FiniteSet& m, const FiniteSet& n, const FiniteSet& p,
                                  const EnumerationBudget& budget) {
    CoveringSet nm(n, m), pm(p, m);
    CoveringSet target(disjoint_union(n, p), m);
    FiniteSet nm_set = nm.as_set(budget), pm_set = pm.as_set(budget);

    LawWitness w{ExponentLaw::AddExp, product(nm_set, pm_set), target.as_set(budget), {}};
    auto domain = std::make_shared<const FiniteSet>(target.domain());
    auto codomain = std::make_shared<const FiniteSet>(m);
    w.pairs.reserve(w.left_set.size());
    for (auto f_it = nm.begin(); f_it != nm.end(); ++f_it) {
        const Covering f = *f_it;
        for (auto g_it = pm.begin(); g_it != pm.end(); ++g_it) {
            const Covering g = *g_it;
            std::vector<std::size_t> images;
            images.reserve(domain->size());
            for (const auto& x : *domain)
                images.push_back(index_in(m, n.contains(x) ? f(x) : g(x)));
            w.pairs.emplace_back(pair_label(f.label(), g.label()),
                                 Covering(domain, codomain, std::move(images)).label());
        }
    }
    return w;
}

// (f, g) -> h with h(p) = (f(p), g(p)).
inline LawWitness mul_exp_witness(const FiniteSet& m, const FiniteSet& n, const FiniteSet& p,
                                  const EnumerationBudget& budget) {
    CoveringSet pm(p, m), pn(p, n);
    FiniteSet mn = product(m, n);
    CoveringSet target(p, mn);
    FiniteSet pm_set = pm.as_set(budget), pn_set = pn.as_set(budget);

    LawWitness w{ExponentLaw::MulExp, product(pm_set, pn_set), target.as_set(budget), {}};
    auto domain = std::make_shared<const FiniteSet>(p);
    auto codomain = std::make_shared<const FiniteSet>(mn);
    w.pairs.reserve(w.left_set.size());
    for (auto f_it = pm.begin(); f_it != pm.end(); ++f_it) {
        const Covering f = *f_it;
        for (auto g_it = pn.begin(); g_it != pn.end(); ++g_it) {
            const Covering g = *g_it;
            std::vector<std::size_t> images;
            images.reserve(p.size());
            for (const auto& x : p) images.push_back(index_in(mn, pair_label(f(x), g(x))));
            w.pairs.emplace_back(pair_label(f.label(), g.label()),
                                 Covering(domain, codomain, std::move(images)).label());
        }
    }
    return w;
}

// F -> h with h((p, n)) = F(p)(n).
inline LawWitness curry_witness(const FiniteSet& m, const FiniteSet& n, const FiniteSet& p,
                                const EnumerationBudget& budget) {
    CoveringSet nm(n, m);
    FiniteSet nm_set = nm.as_set(budget);
    std::vector<Covering> inner = nm.coverings(budget);
    CoveringSet source(p, nm_set);
    FiniteSet pn = product(p, n);
    CoveringSet target(pn, m);

    LawWitness w{ExponentLaw::Curry, source.as_set(budget), target.as_set(budget), {}};
    auto domain = std::make_shared<const FiniteSet>(pn);
    auto codomain = std::make_shared<const FiniteSet>(m);
    w.pairs.reserve(w.left_set.size());
    for (auto it = source.begin(); it != source.end(); ++it) {
        const Covering big = *it;
        std::vector<std::size_t> images;
        images.reserve(pn.size());
        for (const auto& x : p) {
            const Covering& f = inner[index_in(nm_set, big(x))];
            for (const auto& y : n) images.push_back(index_in(m, f(y)));
        }
        w.pairs.emplace_back(big.label(), Covering(domain, codomain, std::move(images)).label());
    }
    return w;
}

} // namespace detail

/// Builds witness sets M, N, P of sizes a, b, c (labels tagged "M.", "N.", "P.")
/// and the natural bijection for `law`, then checks it by inspection.
/// Throws BudgetExceeded when the sets involved would hold more than
/// `budget.max_items` items in total.
inline LawWitness verify_exponent_law(ExponentLaw law, Cardinal a, Cardinal b, Cardinal c,
                                      const EnumerationBudget& budget = {}) {
    using detail::checked_add;
    using detail::checked_mul;

    auto power = [](std::optional<std::uint64_t> base, std::uint64_t exp) -> std::optional<std::uint64_t> {
        if (!base) return exp == 0 ? std::optional<std::uint64_t>(1) : std::nullopt;
        std::optional<std::uint64_t> r = 1, sq = *base;
        for (; exp && r; exp >>= 1) {
            if (exp & 1) r = sq ? checked_mul(*r, *sq) : std::nullopt;
            if (exp > 1) sq = sq ? checked_mul(*sq, *sq) : std::nullopt;
        }
        return r;
    };
    auto sum = [](std::initializer_list<std::optional<std::uint64_t>> terms) -> std::optional<std::uint64_t> {
        std::optional<std::uint64_t> total = 0;
        for (auto t : terms) total = (total && t) ? checked_add(*total, *t) : std::nullopt;
        return total;
    };

    // Items materialized: both operand covering-sets plus left and right sides.
    std::optional<std::uint64_t> items;
    switch (law) {
    case ExponentLaw::AddExp: {
        auto ab = power(a.value, b.value), ac = power(a.value, c.value);
        auto side = ab && ac ? checked_mul(*ab, *ac) : std::nullopt;
        items = sum({ab, ac, side, side});
        break;
    }
    case ExponentLaw::MulExp: {
        auto ac = power(a.value, c.value), bc = power(b.value, c.value);
        auto side = ac && bc ? checked_mul(*ac, *bc) : std::nullopt;
        items = sum({ac, bc, side, side});
        break;
    }
    case ExponentLaw::Curry: {
        auto ab = power(a.value, b.value);
        auto side = power(ab, c.value);
        items = sum({ab, ab, side, side});
        break;
    }
    }
    detail::require_within(items, budget, std::string(to_string(law)) + " witness");
    detail::require_within(std::max({a.value, b.value, c.value}), budget, "exponent-law operand");

    const FiniteSet m = tag(witness_set(a), "M");
    const FiniteSet n = tag(witness_set(b), "N");
    const FiniteSet p = tag(witness_set(c), "P");

    LawWitness w = [&] {
        switch (law) {
        case ExponentLaw::AddExp: return detail::add_exp_witness(m, n, p, budget);
        case ExponentLaw::MulExp: return detail::mul_exp_witness(m, n, p, budget);
        case ExponentLaw::Curry: break;
        }
        return detail::curry_witness(m, n, p, budget);
    }();
    if (!w.is_bijection())
        throw std::logic_error(std::string(to_string(law)) + " witness failed bijection check");
    return w;
}

} // namespace continuum
