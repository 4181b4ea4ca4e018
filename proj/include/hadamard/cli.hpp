#pragma once

// Command-line front end. Exit codes: 0 success, 1 domain failure (not
// Hadamard, violated construction precondition), 2 usage, I/O or parse error.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "code.hpp"
#include "constructions.hpp"
#include "errors.hpp"
#include "explorer.hpp"
#include "generators.hpp"
#include "io.hpp"
#include "matrix.hpp"

namespace hadamard::cli {

enum ExitCode : int { ok = 0, domain_failure = 1, io_failure = 2 };

/// File-system or usage failure; maps to exit code 2.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

inline std::uint64_t parse_u64(const std::string& s, const std::string& what) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw InvalidParameter(what + " must be a non-negative integer, got '" + s + "'");
    }
    try {
        return std::stoull(s);
    } catch (const std::out_of_range&) {
        throw InvalidParameter(what + " is out of range: '" + s + "'");
    }
}

inline BinaryMatrix load_binary(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    try {
        return read_matrix(in);
    } catch (const ParseError& e) {
        throw ParseError(e.line(), e.detail() + " in " + path);
    }
}

inline HadamardMatrix load_hadamard(const std::string& path) {
    BinaryMatrix m = load_binary(path);
    if (auto v = find_violation(m)) throw InvalidInput(path + ": not a Hadamard matrix: " + v->reason);
    return HadamardMatrix::trusted(std::move(m));
}

inline std::vector<HadamardMatrix> load_list(const std::string& csv) {
    std::vector<HadamardMatrix> out;
    for (const auto& p : split(csv, ',')) {
        if (p.empty()) throw IoError("empty path in list '" + csv + "'");
        out.push_back(load_hadamard(p));
    }
    return out;
}

/// Writes to `path`, or to `out` when path is empty or "-".
inline void emit(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& body) {
    if (path.empty() || path == "-") {
        body(out);
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot write " + path);
    body(f);
    if (!f) throw IoError("write failed for " + path);
}

/// ORDER[:FAMILY+FAMILY...[:VARIANTS]], e.g. "12:paley1:3" or "8:sylvester+file".
inline PoolSpec parse_pool(const std::string& text, const std::string& files, std::uint64_t seed) {
    const auto parts = split(text, ':');
    if (parts.empty() || parts.size() > 3) throw InvalidParameter("pool spec '" + text + "' is not ORDER[:FAMILIES[:VARIANTS]]");
    PoolSpec spec;
    spec.order = static_cast<std::size_t>(parse_u64(parts[0], "pool order"));
    if (parts.size() >= 2) {
        spec.families.clear();
        for (const auto& f : split(parts[1], '+')) spec.families.insert(parse_family(f));
    } else {
        spec.families = {Family::sylvester, Family::paley1};
    }
    if (parts.size() == 3) spec.variants_per_base = static_cast<std::size_t>(parse_u64(parts[2], "pool variants"));
    if (!files.empty()) {
        for (const auto& p : split(files, ',')) spec.files.emplace_back(p);
        spec.families.insert(Family::file);
    }
    spec.seed = seed;
    return spec;
}

inline Strategy parse_strategy(const std::string& text, std::uint64_t seed) {
    if (text == "exhaustive") return Strategy::exhaustive(seed);
    const std::string prefix = "sampled:";
    if (text.rfind(prefix, 0) == 0) return Strategy::sampled(parse_u64(text.substr(prefix.size()), "sample count"), seed);
    throw InvalidParameter("strategy must be 'exhaustive' or 'sampled:COUNT', got '" + text + "'");
}

/// Distinct stream for pool B so equal-order pools do not share variants.
constexpr std::uint64_t pool_b_seed(std::uint64_t seed) noexcept { return seed ^ 0x9e3779b97f4a7c15ull; }

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sylvester-type Hadamard matrix constructions and code invariants", "hadamard"};
    app.require_subcommand(1, 1);
    app.allow_extras(false);

    std::function<int()> action;
    std::string out_path;
    bool pm = false;
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("-o,--out", out_path, "Output file (default: standard output)");
        sub->add_flag("--pm", pm, "Write +/- characters instead of 0/1");
    };
    auto write_h = [&](const HadamardMatrix& h) {
        detail::emit(out_path, out, [&](std::ostream& os) {
            write_matrix(os, h.matrix(), pm ? Alphabet::plus_minus : Alphabet::binary);
        });
        return ExitCode::ok;
    };

    // gen
    std::string family;
    std::optional<unsigned> t_opt;
    std::optional<std::uint64_t> q_opt;
    auto* gen = app.add_subcommand("gen", "Generate a base Hadamard matrix");
    gen->add_option("--family", family, "sylvester or paley1")->required();
    gen->add_option("--t", t_opt, "Sylvester exponent (order 2^t)");
    gen->add_option("--q", q_opt, "Paley I prime, q = 3 mod 4 (order q + 1)");
    add_output(gen);
    gen->callback([&] {
        action = [&] {
            if (family == "sylvester") {
                if (!t_opt) throw InvalidParameter("gen --family sylvester requires --t");
                return write_h(sylvester_power(*t_opt));
            }
            if (family == "paley1") {
                if (!q_opt) throw InvalidParameter("gen --family paley1 requires --q");
                return write_h(paley_I(*q_opt));
            }
            throw InvalidParameter("unknown family '" + family + "' (expected sylvester or paley1)");
        };
    });

    // check
    std::string path;
    auto* check = app.add_subcommand("check", "Verify that a matrix file holds a Hadamard matrix");
    check->add_option("path", path, "Matrix file")->required();
    check->callback([&] {
        action = [&] {
            const BinaryMatrix m = detail::load_binary(path);
            if (auto v = find_violation(m)) {
                out << "NOT HADAMARD order=" << m.rows() << ": " << v->reason << '\n';
                if (v->rows) {
                    out << "witness rows " << v->rows->first + 1 << " and " << v->rows->second + 1 << " at distance "
                        << v->rows->distance << " (expected n/2 = " << m.rows() / 2.0 << ")\n";
                }
                return ExitCode::domain_failure;
            }
            out << "HADAMARD order=" << m.rows() << '\n';
            return ExitCode::ok;
        };
    });

    // product
    std::string lhs, rhs;
    auto* product = app.add_subcommand("product", "Sylvester product A (x) B");
    product->add_option("a", lhs, "Outer matrix file")->required();
    product->add_option("b", rhs, "Inner matrix file")->required();
    add_output(product);
    product->callback([&] {
        action = [&] { return write_h(sylvester_product(detail::load_hadamard(lhs), detail::load_hadamard(rhs))); };
    });

    // nosong
    std::string c_path, b_list, a_list;
    auto* nosong = app.add_subcommand("nosong", "Generalized Sylvester construction of No and Song");
    nosong->add_option("--c", c_path, "Order-m matrix C")->required();
    nosong->add_option("--b", b_list, "Comma-separated list of m order-k matrices B_1..B_m")->required();
    add_output(nosong);
    nosong->callback([&] {
        action = [&] { return write_h(no_song(detail::load_hadamard(c_path), detail::load_list(b_list))); };
    });

    // modified
    auto* mod = app.add_subcommand("modified", "Two-pool construction from A_1..A_m (order k) and B_1..B_k (order m)");
    mod->add_option("--a", a_list, "Comma-separated list of m order-k matrices A_1..A_m")->required();
    mod->add_option("--b", b_list, "Comma-separated list of k order-m matrices B_1..B_k")->required();
    add_output(mod);
    mod->callback([&] {
        action = [&] { return write_h(modified(ModifiedInputs(detail::load_list(a_list), detail::load_list(b_list)))); };
    });

    // invariants
    auto* inv = app.add_subcommand("invariants", "Print order, rank, kernel dimension and minimum distance of the code");
    inv->add_option("path", path, "Matrix file")->required();
    inv->callback([&] {
        action = [&] {
            out << signature(detail::load_hadamard(path)) << '\n';
            return ExitCode::ok;
        };
    });

    // transform
    std::uint64_t seed = 0;
    bool do_normalize = false;
    auto* tr = app.add_subcommand("transform", "Apply a seeded random equivalence transform");
    tr->add_option("path", path, "Matrix file")->required();
    tr->add_option("--seed", seed, "PRNG seed")->required();
    tr->add_flag("--normalize", do_normalize, "Normalize after transforming");
    add_output(tr);
    tr->callback([&] {
        action = [&] {
            const HadamardMatrix h = detail::load_hadamard(path);
            Rng rng(seed);
            HadamardMatrix r = apply_transform(h, EquivalenceTransform::random(h.order(), rng));
            if (do_normalize) r = normalize(r);
            return write_h(r);
        };
    });

    // explore
    std::string construction = "modified", pool_a, pool_b, files_a, files_b, strategy = "exhaustive", format = "json";
    unsigned threads = 1;
    std::uint64_t cap = default_assignment_cap;
    auto* ex = app.add_subcommand("explore", "Census of invariant signatures over pool assignments");
    ex->add_option("--construction", construction, "modified, nosong or product")
        ->check(CLI::IsMember({"modified", "nosong", "product"}));
    ex->add_option("--pool-a", pool_a, "Order-k pool: ORDER[:FAMILY+...[:VARIANTS]]")->required();
    ex->add_option("--pool-b", pool_b, "Order-m pool: ORDER[:FAMILY+...[:VARIANTS]]")->required();
    ex->add_option("--pool-a-files", files_a, "Comma-separated matrix files added to pool A");
    ex->add_option("--pool-b-files", files_b, "Comma-separated matrix files added to pool B");
    ex->add_option("--strategy", strategy, "exhaustive or sampled:COUNT");
    ex->add_option("--seed", seed, "Seed for pool variants and sampling");
    ex->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    ex->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");
    ex->add_option("--cap", cap, "Maximum number of assignments");
    ex->add_option("-o,--out", out_path, "Report file (default: standard output)");
    ex->callback([&] {
        action = [&] {
            const Pool a = build_pool(detail::parse_pool(pool_a, files_a, seed));
            const Pool b = build_pool(detail::parse_pool(pool_b, files_b, detail::pool_b_seed(seed)));
            const ExplorationReport report = explore(a, b, detail::parse_strategy(strategy, seed),
                                                     parse_construction(construction), {cap, threads});
            detail::emit(out_path, out, [&](std::ostream& os) {
                if (format == "csv") {
                    write_report_csv(os, report);
                } else {
                    write_report_json(os, report);
                }
            });
            return ExitCode::ok;
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ExitCode::ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ExitCode::ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::io_failure;
    }

    try {
        return action ? action() : ExitCode::io_failure;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return ExitCode::io_failure;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::io_failure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::domain_failure;
    }
}

}  // namespace hadamard::cli
