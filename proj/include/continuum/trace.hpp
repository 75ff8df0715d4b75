#pragma once

// Replay of the argument that B_X ~ B, one step per set identity or
// equivalence. Steps about the finitely representable streams are checked
// exhaustively over every stream description of bounded size; steps about
// X, R or the continuum are recorded but never checked.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "continuum/bijection.hpp"
#include "continuum/binary_streams.hpp"
#include "continuum/finite_sets.hpp"

namespace continuum {

enum class Justification { Definition, WitnessedEquivalence, Symbolic };
enum class CheckResult { Pass, Fail, NotCheckable };

inline std::string_view to_string(Justification j) {
    switch (j) {
    case Justification::Definition: return "Definition";
    case Justification::WitnessedEquivalence: return "WitnessedEquivalence";
    case Justification::Symbolic: return "Symbolic";
    }
    return "?";
}

inline std::string_view to_string(CheckResult r) {
    switch (r) {
    case CheckResult::Pass: return "pass";
    case CheckResult::Fail: return "fail";
    case CheckResult::NotCheckable: return "not-checkable";
    }
    return "?";
}

/// Universe a bounded check ran over: canonical forms of every stream with
/// |preamble| + |period| <= max_description_size.
struct CheckBound {
    unsigned max_description_size = 0;
    std::uint64_t streams = 0;
    friend bool operator==(const CheckBound&, const CheckBound&) = default;
};

struct DerivationStep {
    std::string id;
    std::string statement;
    Justification justification;
    std::optional<CheckBound> bound; ///< empty for Symbolic steps
    CheckResult result;
    friend bool operator==(const DerivationStep&, const DerivationStep&) = default;
};

struct DerivationTrace {
    std::vector<DerivationStep> steps;

    /// Pass iff every checkable step passed.
    CheckResult verdict() const {
        for (const auto& s : steps)
            if (s.result == CheckResult::Fail) return CheckResult::Fail;
        return CheckResult::Pass;
    }

    const DerivationStep* find(std::string_view id) const {
        for (const auto& s : steps)
            if (s.id == id) return &s;
        return nullptr;
    }
};

/// Canonical forms of all streams with description size in [1, max_size], deduplicated,
/// in order of first appearance (by size, then preamble length, then bit pattern).
inline std::vector<BinaryStream> bounded_streams(unsigned max_size) {
    std::vector<BinaryStream> out;
    std::unordered_set<BinaryStream> seen;
    for (unsigned size = 1; size <= max_size; ++size) {
        for (unsigned period_len = 1; period_len <= size; ++period_len) {
            const unsigned pre_len = size - period_len;
            for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << size); ++pattern) {
                Bits pre(pre_len), per(period_len);
                for (unsigned i = 0; i < size; ++i) {
                    const bool b = (pattern >> (size - 1 - i)) & 1;
                    if (i < pre_len) pre[i] = b;
                    else per[i - pre_len] = b;
                }
                BinaryStream c = canonicalize(BinaryStream(std::move(pre), std::move(per)));
                if (seen.insert(c).second) out.push_back(std::move(c));
            }
        }
    }
    return out;
}

namespace detail {

enum class Piece { BS, TE, TO, BPrimeX };

inline Piece piece_of(const BinaryStream& e) {
    if (classify_stream(e) == StreamClass::InBS) return Piece::BS;
    if (auto k = t_index(e)) return (*k & 1) == 0 ? Piece::TE : Piece::TO;
    return Piece::BPrimeX;
}

struct TraceContext {
    unsigned max_size;
    std::vector<BinaryStream> universe;
    std::unordered_set<BinaryStream> members;

    CheckBound bound() const { return CheckBound{max_size, universe.size()}; }
    bool contains(const BinaryStream& e) const { return members.contains(e); }
};

inline CheckResult as_result(bool ok) { return ok ? CheckResult::Pass : CheckResult::Fail; }

// The length-n prefixes of bounded streams are exactly the coverings
// ({1..n} | {0,1}), n = max_size - 1: B restricted to finite windows is a covering-set.
inline bool check_b_is_covering_set(const TraceContext& ctx) {
    const std::uint64_t n = ctx.max_size - 1;
    FiniteSet expected = covering_set(witness_set(Cardinal{n}), make_set({"0", "1"})).as_set();
    std::unordered_set<std::string> prefixes;
    for (const auto& e : ctx.universe) {
        std::string prefix;
        for (std::uint64_t i = 0; i < n; ++i) prefix += e.bit(i) ? '1' : '0';
        if (n == 0) prefix = "<>";
        prefixes.insert(prefix);
    }
    if (prefixes.size() != expected.size()) return false;
    for (const auto& label : expected)
        if (!prefixes.contains(label)) return false;
    return true;
}

// Exactly one class per stream, and the B_S streams are exactly the duals of
// the trailing-0 dyadic forms within the bound.
inline bool check_partition(const TraceContext& ctx) {
    std::unordered_set<BinaryStream> in_bs, duals;
    for (const auto& e : ctx.universe) {
        const StreamClass c = classify_stream(e);
        if ((c == StreamClass::InBS) == (c == StreamClass::InBX)) return false;
        if (c == StreamClass::InBS) in_bs.insert(e);
        if (t_index(e)) {
            auto d = dual_of(e);
            if (!d) return false;
            duals.insert(*d);
        }
    }
    return in_bs == duals;
}

// T is a subset of B_X, indexed consistently, and B'_X is its complement in B_X.
inline bool check_t_in_bx(const TraceContext& ctx) {
    for (Integer k = 0;; ++k) {
        BinaryStream t = t_enumerate(k);
        if (t.description_size() > ctx.max_size) break;
        if (!ctx.contains(t) || classify_stream(t) != StreamClass::InBX || t_index(t) != k) return false;
    }
    for (const auto& e : ctx.universe) {
        if (classify_stream(e) != StreamClass::InBX) continue;
        const Piece p = piece_of(e);
        const bool in_t = p == Piece::TE || p == Piece::TO;
        if (in_t == (p == Piece::BPrimeX)) return false;
    }
    return true;
}

inline bool check_even_odd_split(const TraceContext& ctx) {
    for (const auto& e : ctx.universe) {
        auto k = t_index(e);
        if (!k) continue;
        const Piece expected = (*k & 1) == 0 ? Piece::TE : Piece::TO;
        if (piece_of(e) != expected || t_enumerate(*k) != e) return false;
    }
    return true;
}

// Every bounded stream lies in exactly one of B_S, T, B'_X.
inline bool check_union_rewrite(const TraceContext& ctx) {
    for (const auto& e : ctx.universe) {
        const bool bs = classify_stream(e) == StreamClass::InBS;
        const bool t = t_index(e).has_value();
        const bool rest = classify_stream(e) == StreamClass::InBX && !t;
        if (int(bs) + int(t) + int(rest) != 1) return false;
    }
    return true;
}

inline bool check_te_to_bs(const TraceContext& ctx) {
    std::unordered_set<BinaryStream> images;
    for (const auto& e : ctx.universe) {
        if (piece_of(e) == Piece::TE) {
            BinaryStream y = forward(e);
            if (classify_stream(y) != StreamClass::InBS || !images.insert(y).second) return false;
        }
        if (piece_of(e) == Piece::BS) {
            BinaryStream x = inverse(e);
            if (piece_of(x) != Piece::TE || forward(x) != e) return false;
        }
    }
    return true;
}

inline bool check_to_to_t(const TraceContext& ctx) {
    std::unordered_set<BinaryStream> images;
    for (const auto& e : ctx.universe) {
        const Piece p = piece_of(e);
        if (p == Piece::TO) {
            BinaryStream y = forward(e);
            if (!t_index(y) || !images.insert(y).second) return false;
        }
        if (p == Piece::TE || p == Piece::TO) {
            BinaryStream x = inverse(e);
            if (piece_of(x) != Piece::TO || forward(x) != e) return false;
        }
    }
    return true;
}

inline bool check_identity_on_rest(const TraceContext& ctx) {
    for (const auto& e : ctx.universe)
        if (piece_of(e) == Piece::BPrimeX && (forward(e) != e || inverse(e) != e)) return false;
    return true;
}

// forward sends T_E, T_O, B'_X into B_S, T, B'_X respectively, injectively,
// and every bounded stream is hit.
inline bool check_union_equivalence(const TraceContext& ctx) {
    std::unordered_set<BinaryStream> images;
    for (const auto& e : ctx.universe) {
        const Piece p = piece_of(e);
        if (p == Piece::BS) continue;
        BinaryStream y = forward(e);
        const Piece q = piece_of(y);
        const bool lands = (p == Piece::TE && q == Piece::BS) ||
                           (p == Piece::TO && (q == Piece::TE || q == Piece::TO)) ||
                           (p == Piece::BPrimeX && q == Piece::BPrimeX);
        if (!lands || !images.insert(y).second) return false;
    }
    for (const auto& y : ctx.universe) {
        BinaryStream x = inverse(y);
        if (classify_stream(x) != StreamClass::InBX || forward(x) != y) return false;
    }
    return true;
}

inline bool check_round_trips(const TraceContext& ctx) {
    for (const auto& e : ctx.universe) {
        BinaryStream x = inverse(e);
        if (classify_stream(x) == StreamClass::InBS || forward(x) != e) return false;
        if (classify_stream(e) == StreamClass::InBX && inverse(forward(e)) != e) return false;
    }
    return true;
}

// Injections both ways: forward on B_X and inverse on B.
inline bool check_mutual_injections(const TraceContext& ctx) {
    std::unordered_set<BinaryStream> fwd, inv;
    for (const auto& e : ctx.universe) {
        if (classify_stream(e) == StreamClass::InBX && !fwd.insert(forward(e)).second) return false;
        if (!inv.insert(inverse(e)).second) return false;
    }
    return true;
}

} // namespace detail

/// Runs every step with bounded checks over stream descriptions of size <= mu_max.
/// Deterministic: equal inputs give equal traces.
inline DerivationTrace derivation_trace(unsigned mu_max) {
    if (mu_max == 0) throw std::invalid_argument("mu_max must be positive");
    detail::TraceContext ctx{mu_max, bounded_streams(mu_max), {}};
    ctx.members.insert(ctx.universe.begin(), ctx.universe.end());

    using J = Justification;
    DerivationTrace trace;
    auto checked = [&](std::string id, std::string statement, J j, bool ok) {
        trace.steps.push_back({std::move(id), std::move(statement), j, ctx.bound(), detail::as_result(ok)});
    };
    auto symbolic = [&](std::string id, std::string statement) {
        trace.steps.push_back({std::move(id), std::move(statement), J::Symbolic, std::nullopt,
                               CheckResult::NotCheckable});
    };

    checked("B-cardinality", "card(B) = 2^ℵ₀", J::Definition, detail::check_b_is_covering_set(ctx));
    checked("B-partition", "B = B_X ∪ B_S", J::WitnessedEquivalence, detail::check_partition(ctx));
    symbolic("BX-continuum", "B_X ∼ X ∼ ℝ");
    checked("BX-split", "B_X = T ∪ B'_X", J::Definition, detail::check_t_in_bx(ctx));
    checked("BX-even-odd-split", "B_X = T_E ∪ T_O ∪ B'_X", J::Definition, detail::check_even_odd_split(ctx));
    checked("union-rewrite", "B_S ∪ B_X = B_S ∪ T ∪ B'_X", J::Definition, detail::check_union_rewrite(ctx));
    checked("TE-equiv-BS", "T_E ∼ B_S", J::WitnessedEquivalence, detail::check_te_to_bs(ctx));
    checked("TO-equiv-T", "T_O ∼ T", J::WitnessedEquivalence, detail::check_to_to_t(ctx));
    checked("BprimeX-equiv-BprimeX", "B'_X ∼ B'_X", J::WitnessedEquivalence, detail::check_identity_on_rest(ctx));
    checked("union-equivalence", "T_E ∪ T_O ∪ B'_X ∼ B_S ∪ T ∪ B'_X", J::WitnessedEquivalence,
            detail::check_union_equivalence(ctx));
    checked("BX-equiv-BS-union-BX", "B_X ∼ B_S ∪ B_X", J::WitnessedEquivalence, detail::check_round_trips(ctx));
    // Rewriting the previous step with B = B_S ∪ B_X.
    symbolic("BX-equiv-B", "B_X ∼ B");
    checked("BX-cardinality", "card(B_X) = card(B) = 2^ℵ₀", J::WitnessedEquivalence,
            detail::check_mutual_injections(ctx));
    symbolic("continuum-cardinality", "card(X) = card(ℝ) = c = 2^ℵ₀");
    return trace;
}

/// JSON array of {step, statement, justification, bound, result}; bound is
/// null for symbolic steps.
inline nlohmann::json to_json(const DerivationTrace& trace) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& s : trace.steps) {
        nlohmann::json bound = nullptr;
        if (s.bound)
            bound = {{"max_description_size", s.bound->max_description_size}, {"streams", s.bound->streams}};
        out.push_back({{"step", s.id},
                       {"statement", s.statement},
                       {"justification", to_string(s.justification)},
                       {"bound", bound},
                       {"result", to_string(s.result)}});
    }
    return out;
}

inline std::string to_text(const DerivationTrace& trace) {
    std::string out;
    for (const auto& s : trace.steps) {
        out += "[" + std::string(to_string(s.result)) + "] " + s.id + ": " + s.statement + " (" +
               std::string(to_string(s.justification));
        if (s.bound)
            out += ", size <= " + std::to_string(s.bound->max_description_size) + ", " +
                   std::to_string(s.bound->streams) + " streams";
        out += ")\n";
    }
    out += "verdict: " + std::string(to_string(trace.verdict())) + "\n";
    return out;
}

} // namespace continuum
