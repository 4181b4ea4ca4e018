#pragma once

// Census of invariant signatures over pools of base Hadamard matrices.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "code.hpp"
#include "constructions.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "io.hpp"
#include "matrix.hpp"
#include "random.hpp"

namespace hadamard {

enum class Family { sylvester, paley1, file };

inline std::string_view to_string(Family f) {
    switch (f) {
        case Family::sylvester: return "sylvester";
        case Family::paley1: return "paley1";
        case Family::file: return "file";
    }
    return "?";
}

inline Family parse_family(std::string_view s) {
    if (s == "sylvester") return Family::sylvester;
    if (s == "paley1") return Family::paley1;
    if (s == "file") return Family::file;
    throw InvalidParameter("unknown family '" + std::string(s) + "' (expected sylvester, paley1 or file)");
}

struct PoolSpec {
    std::size_t order = 0;
    std::set<Family> families{Family::sylvester};
    std::vector<std::filesystem::path> files;  // read when Family::file is selected
    std::size_t variants_per_base = 0;
    std::uint64_t seed = 0;
};

using Pool = std::vector<HadamardMatrix>;

/// Base matrices of the requested order from every selected family that can
/// produce it, each followed by `variants_per_base` seeded random equivalents.
inline Pool build_pool(const PoolSpec& spec) {
    const std::size_t n = spec.order;
    if (!is_admissible_order(n)) {
        throw InvalidParameter("pool order " + std::to_string(n) + " is not a valid Hadamard order (1, 2 or a multiple of 4)");
    }
    Pool bases;
    if (spec.families.contains(Family::sylvester) && std::has_single_bit(n)) {
        bases.push_back(sylvester_power(static_cast<unsigned>(std::countr_zero(n))));
    }
    if (spec.families.contains(Family::paley1) && n >= 4 && is_paley1_prime(n - 1)) {
        bases.push_back(paley_I(n - 1));
    }
    if (spec.families.contains(Family::file)) {
        for (const auto& path : spec.files) {
            std::ifstream in(path, std::ios::binary);
            if (!in) throw InvalidParameter("cannot open pool file " + path.string());
            HadamardMatrix h(read_matrix(in));
            if (h.order() != n) {
                throw InvalidParameter("pool file " + path.string() + " has order " + std::to_string(h.order()) +
                                       ", pool requires " + std::to_string(n));
            }
            bases.push_back(std::move(h));
        }
    }
    if (bases.empty()) {
        std::string fams;
        for (auto f : spec.families) fams += (fams.empty() ? "" : ",") + std::string(to_string(f));
        throw InvalidParameter("order " + std::to_string(n) + " is not constructible with families {" + fams + "}");
    }

    Rng rng(spec.seed);
    Pool pool;
    pool.reserve(bases.size() * (spec.variants_per_base + 1));
    for (const auto& base : bases) {
        pool.push_back(base);
        for (std::size_t v = 0; v < spec.variants_per_base; ++v) {
            pool.push_back(apply_transform(base, EquivalenceTransform::random(n, rng)));
        }
    }
    return pool;
}

enum class Construction { modified, nosong, product };

inline std::string_view to_string(Construction c) {
    switch (c) {
        case Construction::modified: return "modified";
        case Construction::nosong: return "nosong";
        case Construction::product: return "product";
    }
    return "?";
}

inline Construction parse_construction(std::string_view s) {
    if (s == "modified") return Construction::modified;
    if (s == "nosong") return Construction::nosong;
    if (s == "product") return Construction::product;
    throw InvalidParameter("unknown construction '" + std::string(s) + "' (expected modified, nosong or product)");
}

struct Strategy {
    enum class Kind { exhaustive, sampled };
    Kind kind = Kind::exhaustive;
    std::uint64_t count = 0;
    std::uint64_t seed = 0;

    /// `seed` is only echoed into the report; exhaustive runs draw nothing.
    static Strategy exhaustive(std::uint64_t seed = 0) { return {Kind::exhaustive, 0, seed}; }
    static Strategy sampled(std::uint64_t count, std::uint64_t seed) { return {Kind::sampled, count, seed}; }
};

inline constexpr std::uint64_t default_assignment_cap = 1'000'000;

/// Indices into pool A and pool B for one construction input.
///
/// modified: a = (A_1..A_m), b = (B_1..B_k)
/// nosong:   a = (B_1..B_m) block columns, b = (C)
/// product:  a = (inner), b = (outer)
struct Assignment {
    std::vector<std::size_t> a;
    std::vector<std::size_t> b;

    friend bool operator==(const Assignment&, const Assignment&) = default;
};

namespace detail {

inline std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && r > limit / base) return limit + 1;
        r *= base;
    }
    return r;
}

inline std::size_t uniform_order(const Pool& pool, const char* name) {
    if (pool.empty()) throw InvalidInput(std::string(name) + " is empty");
    const std::size_t n = pool.front().order();
    for (const auto& h : pool) {
        if (h.order() != n) throw InvalidInput(std::string(name) + " mixes matrices of different orders");
    }
    return n;
}

}  // namespace detail

/// Random-access sequence of assignments.
///
/// Exhaustive mode walks |A|^a_slots * |B|^b_slots tuples in lexicographic
/// index order over (a..., b...), last index fastest. Sampled mode draws
/// every index uniformly from Rng(seed), a-slots before b-slots per tuple.
class AssignmentSet {
public:
    AssignmentSet(std::size_t pool_a, std::size_t pool_b, std::size_t a_slots, std::size_t b_slots, const Strategy& s,
                  std::uint64_t cap = default_assignment_cap)
        : pool_a_(pool_a), pool_b_(pool_b), a_slots_(a_slots), b_slots_(b_slots), kind_(s.kind) {
        if (pool_a == 0 || pool_b == 0) throw InvalidInput("assignment pools must be non-empty");
        if (s.kind == Strategy::Kind::exhaustive) {
            const std::uint64_t ca = detail::saturating_pow(pool_a, a_slots, cap);
            const std::uint64_t cb = detail::saturating_pow(pool_b, b_slots, cap);
            if (ca > cap || cb > cap || (cb != 0 && ca > cap / cb)) {
                throw ResourceLimit("exhaustive enumeration of " + std::to_string(pool_a) + "^" + std::to_string(a_slots) +
                                    " * " + std::to_string(pool_b) + "^" + std::to_string(b_slots) +
                                    " assignments exceeds the cap of " + std::to_string(cap) + "; use sampled mode");
            }
            size_ = ca * cb;
        } else {
            if (s.count > cap) {
                throw ResourceLimit("sampled count " + std::to_string(s.count) + " exceeds the cap of " + std::to_string(cap));
            }
            size_ = s.count;
            Rng rng(s.seed);
            sampled_.reserve(size_);
            for (std::uint64_t i = 0; i < size_; ++i) {
                Assignment t;
                for (std::size_t j = 0; j < a_slots; ++j) t.a.push_back(static_cast<std::size_t>(rng.below(pool_a)));
                for (std::size_t j = 0; j < b_slots; ++j) t.b.push_back(static_cast<std::size_t>(rng.below(pool_b)));
                sampled_.push_back(std::move(t));
            }
        }
    }

    std::uint64_t size() const noexcept { return size_; }

    Assignment operator[](std::uint64_t ordinal) const {
        if (kind_ == Strategy::Kind::sampled) return sampled_[ordinal];
        Assignment t{std::vector<std::size_t>(a_slots_), std::vector<std::size_t>(b_slots_)};
        for (std::size_t j = b_slots_; j-- > 0;) {
            t.b[j] = static_cast<std::size_t>(ordinal % pool_b_);
            ordinal /= pool_b_;
        }
        for (std::size_t j = a_slots_; j-- > 0;) {
            t.a[j] = static_cast<std::size_t>(ordinal % pool_a_);
            ordinal /= pool_a_;
        }
        return t;
    }

    class iterator {
    public:
        using value_type = Assignment;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(const AssignmentSet* set, std::uint64_t pos) : set_(set), pos_(pos) {}
        Assignment operator*() const { return (*set_)[pos_]; }
        iterator& operator++() {
            ++pos_;
            return *this;
        }
        iterator operator++(int) {
            auto t = *this;
            ++pos_;
            return t;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.pos_ == b.pos_; }

    private:
        const AssignmentSet* set_ = nullptr;
        std::uint64_t pos_ = 0;
    };

    iterator begin() const { return {this, 0}; }
    iterator end() const { return {this, size_}; }

private:
    std::size_t pool_a_;
    std::size_t pool_b_;
    std::size_t a_slots_;
    std::size_t b_slots_;
    Strategy::Kind kind_;
    std::uint64_t size_ = 0;
    std::vector<Assignment> sampled_;
};

/// Slots filled from each pool: k = order of pool A, m = order of pool B.
inline std::pair<std::size_t, std::size_t> slot_counts(Construction c, std::size_t k, std::size_t m) {
    switch (c) {
        case Construction::modified: return {m, k};
        case Construction::nosong: return {m, 1};
        case Construction::product: return {1, 1};
    }
    return {1, 1};
}

inline AssignmentSet enumerate_assignments(const Pool& pool_a, const Pool& pool_b, const Strategy& strategy,
                                           Construction construction = Construction::modified,
                                           std::uint64_t cap = default_assignment_cap) {
    const std::size_t k = detail::uniform_order(pool_a, "pool A");
    const std::size_t m = detail::uniform_order(pool_b, "pool B");
    const auto [a_slots, b_slots] = slot_counts(construction, k, m);
    return AssignmentSet(pool_a.size(), pool_b.size(), a_slots, b_slots, strategy, cap);
}

/// Builds the matrix an assignment describes. Pool A supplies the order-k
/// matrices and pool B the order-m ones for every construction.
inline HadamardMatrix build(Construction c, const Pool& pool_a, const Pool& pool_b, const Assignment& t) {
    auto pick = [](const Pool& pool, const std::vector<std::size_t>& idx) {
        std::vector<HadamardMatrix> out;
        out.reserve(idx.size());
        for (auto i : idx) out.push_back(pool.at(i));
        return out;
    };
    switch (c) {
        case Construction::modified: return modified(ModifiedInputs(pick(pool_a, t.a), pick(pool_b, t.b)));
        case Construction::nosong: return no_song(pool_b.at(t.b.at(0)), pick(pool_a, t.a));
        case Construction::product: return sylvester_product(pool_b.at(t.b.at(0)), pool_a.at(t.a.at(0)));
    }
    throw InvalidParameter("unknown construction");
}

struct ExplorationReport {
    std::size_t target_order = 0;
    Construction construction = Construction::modified;
    std::uint64_t assignments_tried = 0;
    std::uint64_t seed = 0;
    std::vector<std::pair<InvariantSignature, std::uint64_t>> signatures;

    friend bool operator==(const ExplorationReport&, const ExplorationReport&) = default;
};

/// Raised when a constructed matrix fails verification.
class ConstructionFailure : public std::runtime_error {
public:
    ConstructionFailure(std::uint64_t index, const std::string& what)
        : std::runtime_error("assignment " + std::to_string(index) + ": " + what), index_(index) {}
    std::uint64_t index() const noexcept { return index_; }

private:
    std::uint64_t index_;
};

struct ExploreOptions {
    std::uint64_t cap = default_assignment_cap;
    /// Worker threads; 0 picks std::thread::hardware_concurrency().
    unsigned threads = 1;
};

inline ExplorationReport explore(const Pool& pool_a, const Pool& pool_b, const Strategy& strategy,
                                 Construction construction, const ExploreOptions& opts = {}) {
    const std::size_t k = detail::uniform_order(pool_a, "pool A");
    const std::size_t m = detail::uniform_order(pool_b, "pool B");
    const AssignmentSet set = enumerate_assignments(pool_a, pool_b, strategy, construction, opts.cap);
    const std::size_t target = k * m;

    using Census = std::map<InvariantSignature, std::uint64_t>;
    struct Failure {
        std::uint64_t index;
        std::string what;
    };

    auto run_range = [&](std::uint64_t lo, std::uint64_t hi, Census& census) -> std::optional<Failure> {
        for (std::uint64_t i = lo; i < hi; ++i) {
            try {
                const HadamardMatrix h = build(construction, pool_a, pool_b, set[i]);
                if (auto v = find_violation(h.matrix())) return Failure{i, "output is not Hadamard: " + v->reason};
                ++census[signature(h)];
            } catch (const std::exception& e) {
                return Failure{i, e.what()};
            }
        }
        return std::nullopt;
    };

    unsigned threads = opts.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opts.threads;
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(set.size(), 1)));

    std::vector<Census> partial(threads);
    std::vector<std::optional<Failure>> failures(threads);
    const std::uint64_t chunk = (set.size() + threads - 1) / threads;
    if (threads == 1) {
        failures[0] = run_range(0, set.size(), partial[0]);
    } else {
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < threads; ++w) {
            const std::uint64_t lo = std::min<std::uint64_t>(w * chunk, set.size());
            const std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, set.size());
            workers.emplace_back([&, w, lo, hi] { failures[w] = run_range(lo, hi, partial[w]); });
        }
    }
    // Chunks are ordered, so the first failing chunk holds the lowest failing index.
    for (const auto& f : failures) {
        if (f) throw ConstructionFailure(f->index, f->what);
    }

    Census total;
    for (const auto& c : partial) {
        for (const auto& [sig, n] : c) total[sig] += n;
    }
    ExplorationReport report{target, construction, set.size(), strategy.seed, {}};
    report.signatures.assign(total.begin(), total.end());
    return report;
}

inline nlohmann::ordered_json to_json(const ExplorationReport& r) {
    nlohmann::ordered_json sigs = nlohmann::ordered_json::array();
    for (const auto& [s, n] : r.signatures) {
        sigs.push_back({{"order", s.order},
                        {"rank", s.rank},
                        {"dim_kernel", s.dim_kernel},
                        {"min_distance", s.min_distance},
                        {"multiplicity", n}});
    }
    return {{"target_order", r.target_order},
            {"construction", std::string(to_string(r.construction))},
            {"assignments_tried", r.assignments_tried},
            {"seed", r.seed},
            {"signatures", std::move(sigs)}};
}

inline void write_report_json(std::ostream& out, const ExplorationReport& r) { out << to_json(r).dump(2) << '\n'; }

inline void write_report_csv(std::ostream& out, const ExplorationReport& r) {
    out << "order,rank,dim_kernel,min_distance,multiplicity\n";
    for (const auto& [s, n] : r.signatures) {
        out << s.order << ',' << s.rank << ',' << s.dim_kernel << ',' << s.min_distance << ',' << n << '\n';
    }
}

}  // namespace hadamard
