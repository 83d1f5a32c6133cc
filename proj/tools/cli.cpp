#include "cli.hpp"

#include "tqft/diagram_json.hpp"
#include "tqft/error.hpp"
#include "tqft/format.hpp"
#include "tqft/params.hpp"
#include "tqft/punitary.hpp"
#include "tqft/recovery.hpp"
#include "tqft/skein.hpp"
#include "tqft/stochastic.hpp"
#include "tqft/verify/acceptance.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

namespace tqft::cli {

namespace {

int exit_for(const Error& e) {
    switch (e.code()) {
    case ErrorCode::diagram_too_large: return too_large;
    case ErrorCode::degenerate_qubit: return degenerate;
    default: return usage;
    }
}

std::optional<double> parse_real(std::string_view s) {
    if (s.empty()) return std::nullopt;
    if (s.front() == '+') s.remove_prefix(1);
    double x = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return x;
}

// "x", "yi", "i", "-i", "x+yi", "x-yi".
std::optional<cplx> parse_complex(std::string_view s) {
    if (auto x = parse_real(s)) return cplx(*x, 0);
    if (s.empty() || s.back() != 'i') return std::nullopt;
    s.remove_suffix(1);
    // Split at the last sign that is not the leading one or part of an exponent.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = s.size(); i-- > 1;)
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    auto imag_of = [](std::string_view t) -> std::optional<double> {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return parse_real(t);
    };
    if (split == std::string_view::npos) {
        auto y = imag_of(s);
        if (!y) return std::nullopt;
        return cplx(0, *y);
    }
    auto x = parse_real(s.substr(0, split));
    auto y = imag_of(s.substr(split));
    if (!x || !y) return std::nullopt;
    return cplx(*x, *y);
}

// 1, -1, i, -i, exp:<theta>, k:<level label>
ChernSimonsParams parse_a(const std::string& text) {
    if (text == "1") return ChernSimonsParams::unit_point(0);
    if (text == "i") return ChernSimonsParams::unit_point(1);
    if (text == "-1") return ChernSimonsParams::unit_point(2);
    if (text == "-i") return ChernSimonsParams::unit_point(3);
    if (text.rfind("exp:", 0) == 0) {
        if (auto t = parse_real(std::string_view(text).substr(4))) return ChernSimonsParams::from_phase(*t);
    } else if (text.rfind("k:", 0) == 0) {
        return ChernSimonsParams::parse_level_label(std::string_view(text).substr(2));
    }
    throw Error(ErrorCode::parse_error, "bad value for --a: '" + text + "' (expected 1, -1, i, -i, exp:<theta> or k:<level>)");
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(0, item.find_first_not_of(' '));
        item.erase(item.find_last_not_of(' ') + 1);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

// ---------------------------------------------------------------- bracket

struct BracketArgs {
    std::string file;
    bool exact = false;
    std::optional<std::string> k;
    std::optional<std::string> mode;
    std::optional<std::string> a;
};

int cmd_bracket(const BracketArgs& args, std::ostream& out, std::ostream& err) {
    std::ifstream in(args.file);
    if (!in) {
        err << "error: cannot read " << args.file << "\n";
        return usage;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    const TangleDiagram t = parse_diagram_json(buf.str());
    if (!t.is_closed()) {
        err << "error: diagram has " << t.boundary().size() << " open endpoints; bracket needs a closed diagram\n";
        return usage;
    }
    const LaurentPoly p = kauffman_bracket(LinkDiagram(t));

    std::optional<ChernSimonsParams> at;
    if (args.k) at = ChernSimonsParams::parse_level_label(*args.k);
    if (args.mode) {
        if (*args.mode != "inf" && *args.mode != "-1") throw Error(ErrorCode::parse_error, "--mode takes inf or -1");
        at = ChernSimonsParams::parse_level_label(*args.mode);
    }
    if (args.a) at = parse_a(*args.a);

    if (!at) out << p.to_string() << "\n";
    else out << format_complex(evaluate(p, *at)) << "\n";
    return ok;
}

// ---------------------------------------------------------------- sweep

struct SweepArgs {
    std::string k_list;
    int phi_steps = 720;
    std::string out_path;
    unsigned threads = 0;
};

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
    if (args.phi_steps < 2) {
        err << "error: --phi-steps must be at least 2\n";
        return usage;
    }
    std::vector<ChernSimonsParams> levels;
    for (const auto& label : split_list(args.k_list)) {
        auto p = ChernSimonsParams::parse_level_label(label);
        if (p.degenerate_qubit()) {
            err << "warning: k=" << label << " is a degenerate qubit (d^2 - 1 <= 0); rows omitted\n";
            continue;
        }
        levels.push_back(p);
    }
    if (levels.empty() && split_list(args.k_list).empty()) {
        err << "error: --k needs at least one level\n";
        return usage;
    }

    std::ofstream file(args.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        err << "error: cannot write " << args.out_path << "\n";
        return unwritable;
    }

    const std::size_t steps = static_cast<std::size_t>(args.phi_steps);
    const std::size_t total = levels.size() * steps;
    std::vector<double> phi(steps), prob(total);
    for (std::size_t j = 0; j < steps; ++j) phi[j] = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(steps);

    unsigned workers = args.threads ? args.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(total, 1)));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < total;)
            prob[i] = success_probability(phi[i % steps], levels[i / steps]);
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    file << "k,phi,probability\n";
    for (std::size_t i = 0; i < total; ++i)
        file << levels[i / steps].label() << ',' << format_real(phi[i % steps]) << ',' << format_real(prob[i]) << '\n';
    file.close();
    if (!file) {
        err << "error: failed writing " << args.out_path << "\n";
        return unwritable;
    }

    // Envelopes over phi, one line per level.
    for (std::size_t l = 0; l < levels.size(); ++l) {
        auto first = prob.begin() + static_cast<std::ptrdiff_t>(l * steps);
        auto [lo, hi] = std::minmax_element(first, first + static_cast<std::ptrdiff_t>(steps));
        out << "k=" << levels[l].label() << " min=" << format_real(*lo) << " max=" << format_real(*hi) << "\n";
    }
    return ok;
}

// ---------------------------------------------------------------- coeffs

struct CoeffArgs {
    double alpha = 0, beta = 0;
    std::string k;
    std::string format = "json";
};

std::string digits(std::size_t idx) {
    std::string s(4, '0');
    for (int b = 0; b < 4; ++b)
        if (idx & (8u >> b)) s[static_cast<std::size_t>(b)] = '1';
    return s;
}

int cmd_coeffs(const CoeffArgs& args, std::ostream& out, std::ostream&) {
    const auto p = ChernSimonsParams::parse_level_label(args.k);
    const auto e = encode_stochastic(args.alpha, args.beta, p);
    if (args.format == "csv") {
        out << "index,re,im\n";
        for (std::size_t i = 0; i < 16; ++i)
            out << digits(i) << ',' << format_real(e.coefficients[i].real()) << ','
                << format_real(e.coefficients[i].imag()) << '\n';
        return ok;
    }
    auto num = [](double x) { return round_significant(x) + 0.0; };
    nlohmann::ordered_json j;
    j["k"] = p.label();
    j["alpha"] = args.alpha;
    j["beta"] = args.beta;
    j["A"] = {num(p.A().real()), num(p.A().imag())};
    j["d"] = num(p.d());
    nlohmann::ordered_json c = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < 16; ++i) c[digits(i)] = {num(e.coefficients[i].real()), num(e.coefficients[i].imag())};
    j["coefficients"] = c;
    out << j.dump(2) << "\n";
    return ok;
}

// ---------------------------------------------------------------- recover

struct RecoverArgs {
    std::string alpha, beta, a;
};

int cmd_recover(const RecoverArgs& args, std::ostream& out, std::ostream& err) {
    const auto alpha = parse_complex(args.alpha), beta = parse_complex(args.beta);
    if (!alpha || !beta) {
        err << "error: --alpha and --beta take numbers\n";
        return usage;
    }
    if (alpha->imag() != 0 || beta->imag() != 0) {
        err << "error: the recovery protocol is defined for real alpha and beta\n";
        return non_real;
    }
    const auto p = parse_a(args.a);
    const auto r = apply_recovery(encode_four_spin(alpha->real(), beta->real(), p));
    if (r.non_unitary_point)
        err << "warning: NonUnitaryPoint: A = " << format_complex(p.A())
            << " is not one of 1, -1, i, -i; recovery is not guaranteed\n";
    char fid[32];
    std::snprintf(fid, sizeof fid, "%.12f", r.fidelity);
    out << "A = " << format_complex(p.A()) << "\n"
        << "d = " << format_real(p.d()) << "\n"
        << "recovered = (" << format_complex(r.recovered_on[0]) << ", " << format_complex(r.recovered_on[1]) << ")\n"
        << "schmidt_rank = " << r.schmidt_rank << "\n"
        << "fidelity = " << fid << "\n";
    return ok;
}

// ---------------------------------------------------------------- selftest

int cmd_selftest(bool corrupt, std::ostream& out) {
    auto opts = acceptance::default_options();
    if (corrupt) {
        opts.r_matrix = [](const ChernSimonsParams& p) {
            RepMatrix r = tqft::r_matrix(p);
            r(1, 2) += 0.25;
            return r;
        };
    }
    int passed = 0;
    for (const auto& r : acceptance::run_all(opts)) {
        out << acceptance::format_line(r) << std::endl;
        passed += r.pass ? 1 : 0;
    }
    out << passed << "/" << acceptance::criterion_count << " checks passed\n";
    return passed == acceptance::criterion_count ? ok : check_failed;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Kauffman-bracket TQFT toolkit"};
    app.name("tqft");
    app.require_subcommand(1);

    BracketArgs ba;
    auto* bracket = app.add_subcommand("bracket", "Bracket of a closed diagram given as JSON");
    bracket->add_option("file", ba.file, "Diagram JSON file")->required();
    auto* exact = bracket->add_flag("--exact", ba.exact, "Print the Laurent polynomial (default)");
    auto* k = bracket->add_option("--k", ba.k, "Evaluate at level k");
    auto* mode = bracket->add_option("--mode", ba.mode, "Evaluate in the classical limit (inf) or at A = i (-1)");
    auto* a = bracket->add_option("--a", ba.a, "Evaluate at A = 1, -1, i, -i, exp:<theta> or k:<level>");
    exact->excludes(k, mode, a);
    k->excludes(mode, a);
    mode->excludes(a);

    SweepArgs sa;
    auto* sweep = app.add_subcommand("sweep", "Success probability over phi, written as CSV");
    sweep->add_option("--k", sa.k_list, "Comma-separated levels: integers, -1, inf")->required();
    sweep->add_option("--phi-steps", sa.phi_steps, "Grid points on [0, 2pi)")->capture_default_str();
    sweep->add_option("--out", sa.out_path, "CSV output path")->required();
    sweep->add_option("--threads", sa.threads, "Worker threads (0: all cores)")->capture_default_str();

    CoeffArgs ca;
    auto* coeffs = app.add_subcommand("coeffs", "The 16 encoding coefficients");
    coeffs->add_option("--alpha", ca.alpha, "Hat-basis coefficient alpha")->required();
    coeffs->add_option("--beta", ca.beta, "Hat-basis coefficient beta")->required();
    coeffs->add_option("--k", ca.k, "Level: integer, -1 or inf")->required();
    coeffs->add_option("--format", ca.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

    RecoverArgs ra;
    auto* recover = app.add_subcommand("recover", "Deterministic recovery on the four-spin code");
    recover->add_option("--alpha", ra.alpha, "Real coefficient alpha")->required();
    recover->add_option("--beta", ra.beta, "Real coefficient beta")->required();
    recover->add_option("--a", ra.a, "A = 1, -1, i, -i, exp:<theta> or k:<level>")->required();

    bool corrupt = false;
    auto* selftest = app.add_subcommand("selftest", "Run every acceptance check");
    selftest->add_flag("--corrupt-r-matrix", corrupt)->group("");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }

    try {
        if (bracket->parsed()) return cmd_bracket(ba, out, err);
        if (sweep->parsed()) return cmd_sweep(sa, out, err);
        if (coeffs->parsed()) return cmd_coeffs(ca, out, err);
        if (recover->parsed()) return cmd_recover(ra, out, err);
        if (selftest->parsed()) return cmd_selftest(corrupt, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_for(e);
    }
    return usage;
}

} // namespace tqft::cli
