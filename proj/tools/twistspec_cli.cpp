// Command-line front end: build the transition matrix family, certify its
// spectral data, export digraph/bounds reports, sweep genus ranges, and run
// the verification suite.
//
// Exit codes: 0 success / all checks pass, 1 verification or computation
// failure, 2 usage error (bad flags, out-of-range genus, unwritable output).

#include "CLI11.hpp"

#include "twistspec/serialize.hpp"

#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace ts = twistspec;

namespace {

struct Config {
    std::string genus;
    std::string tol = "1e-10";
    std::string orientation = "auto";
    std::string rotation = "auto";
    std::string format;  // per-command default applied in the handler
    std::string out;
    bool corrupt_reference = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void add_common(CLI::App* cmd, Config& c, bool with_conventions = true) {
    cmd->add_option("--genus", c.genus, "genus, or inclusive range A..B")->required();
    cmd->add_option("--tol", c.tol, "enclosure tolerance (decimal or p/q)");
    if (with_conventions) {
        cmd->add_option("--rotation", c.rotation, "rotation convention")
            ->check(CLI::IsMember({"auto", "plus", "minus"}));
        cmd->add_option("--orientation", c.orientation, "edge-direction convention")
            ->check(CLI::IsMember({"auto", "columns", "rows"}));
    }
    cmd->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", c.out, "output path (default: stdout)");
}

std::pair<int, int> parse_genus_range(const std::string& s) {
    const auto parse_int = [](const std::string& t) {
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(t, &used);
        } catch (const std::exception&) {
            throw UsageError("invalid genus value '" + t + "'");
        }
        if (used != t.size()) throw UsageError("invalid genus value '" + t + "'");
        return v;
    };
    const size_t dots = s.find("..");
    int lo, hi;
    if (dots == std::string::npos) {
        lo = hi = parse_int(s);
    } else {
        lo = parse_int(s.substr(0, dots));
        hi = parse_int(s.substr(dots + 2));
    }
    if (lo < 2 || hi > 1000000 || lo > hi)
        throw UsageError("genus range must satisfy 2 <= A <= B <= 10^6");
    return {lo, hi};
}

int single_genus(const Config& c) {
    auto [lo, hi] = parse_genus_range(c.genus);
    if (lo != hi) throw UsageError("this command takes a single genus, not a range");
    return lo;
}

void require_construction_floor(int g) {
    if (g < 4) throw UsageError("construction requires genus >= 4");
}

// exact decimal parsing: "1e-10" becomes 1/10^10, "0.5" becomes 1/2 ("p/q"
// accepted as-is), so tolerance metadata stays readable in reports
ts::Rat parse_tol(const std::string& s) {
    ts::Rat t;
    try {
        if (s.find('/') != std::string::npos) {
            t = ts::Rat(s);
            t.canonicalize();
        } else {
            size_t pos = s.find_first_of("eE");
            const std::string mant = s.substr(0, pos);
            long exp10 = pos == std::string::npos ? 0 : std::stol(s.substr(pos + 1));
            std::string digits = mant;
            const size_t dot = mant.find('.');
            if (dot != std::string::npos) {
                digits = mant.substr(0, dot) + mant.substr(dot + 1);
                exp10 -= static_cast<long>(mant.size() - dot - 1);
            }
            if (digits.empty() || digits.find_first_not_of("0123456789", digits[0] == '-' || digits[0] == '+' ? 1 : 0) != std::string::npos)
                throw UsageError("");
            ts::Int scale;
            mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
            t = exp10 >= 0 ? ts::Rat(ts::Int(digits) * scale) : ts::Rat(ts::Int(digits), scale);
            t.canonicalize();
        }
    } catch (const std::exception&) {
        throw UsageError("invalid tolerance '" + s + "'");
    }
    if (t <= 0) throw UsageError("tolerance must be positive");
    return t;
}

ts::RotationDir resolve_rotation(const std::string& s) {
    if (s == "plus") return ts::RotationDir::Plus;
    if (s == "minus") return ts::RotationDir::Minus;
    return ts::calibrate_rotation();
}

ts::Orientation resolve_orientation(const std::string& s) {
    if (s == "columns") return ts::Orientation::ColumnsAsImages;
    if (s == "rows") return ts::Orientation::RowsAsImages;
    return ts::calibrate_orientation();
}

std::string pick_format(const Config& c, const std::string& def,
                        std::initializer_list<const char*> allowed) {
    const std::string f = c.format.empty() ? def : c.format;
    for (const char* a : allowed)
        if (f == a) return f;
    throw UsageError("format '" + f + "' not supported by this command");
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw UsageError("cannot open output path '" + out_path + "'");
    f << content;
    if (!f) throw UsageError("write failed for output path '" + out_path + "'");
}

int cmd_matrix(const Config& c) {
    const int g = single_genus(c);
    require_construction_floor(g);
    const std::string fmt = pick_format(c, "json", {"json", "text"});
    const ts::RotationDir rot = resolve_rotation(c.rotation);
    ts::CurveSystem sys(g);
    const ts::LinearMap a = ts::phi_matrix(sys, rot);
    emit(fmt == "json" ? ts::matrix_json(sys, a, rot) : ts::matrix_text(sys, a), c.out);
    return 0;
}

int cmd_charpoly(const Config& c) {
    const int g = single_genus(c);
    require_construction_floor(g);
    const std::string fmt = pick_format(c, "json", {"json", "text"});
    const ts::RotationDir rot = resolve_rotation(c.rotation);
    const ts::IntPolynomial computed = ts::char_poly(ts::phi_matrix(g, rot));
    const ts::IntPolynomial reference = ts::expected_char_poly(g);
    emit(fmt == "json" ? ts::charpoly_json(g, computed, reference, rot)
                       : ts::charpoly_text(g, computed, reference),
         c.out);
    return 0;
}

int cmd_spectrum(const Config& c) {
    const int g = single_genus(c);
    require_construction_floor(g);
    const std::string fmt = pick_format(c, "json", {"json", "text"});
    const ts::RotationDir rot = resolve_rotation(c.rotation);
    const ts::Rat tol = parse_tol(c.tol);
    ts::CurveSystem sys(g);
    const ts::LinearMap a = ts::phi_matrix(sys, rot);
    const ts::RootEnclosure enc = ts::perron_root(a, tol);
    if (fmt == "json") {
        const ts::RatVector pv = ts::perron_vector(a, tol);
        emit(ts::spectrum_json(g, sys.dim(), enc, &pv, rot, tol), c.out);
    } else {
        emit(ts::spectrum_text(g, enc), c.out);
    }
    return 0;
}

int cmd_digraph(const Config& c) {
    const int g = single_genus(c);
    require_construction_floor(g);
    const std::string fmt = pick_format(c, "text", {"text", "json"});
    const ts::RotationDir rot = resolve_rotation(c.rotation);
    const ts::Orientation orient = resolve_orientation(c.orientation);
    ts::CurveSystem sys(g);
    const ts::Digraph dg = ts::from_matrix(sys, ts::phi_matrix(sys, rot), orient);
    emit(fmt == "text" ? ts::to_edge_list(dg) : ts::digraph_json(g, dg), c.out);
    return 0;
}

int cmd_mixing(const Config& c) {
    const int g = single_genus(c);
    require_construction_floor(g);
    const std::string fmt = pick_format(c, "json", {"json", "text"});
    const ts::MixingReport r =
        ts::make_mixing_report(g, resolve_rotation(c.rotation), resolve_orientation(c.orientation));
    emit(fmt == "json" ? ts::mixing_json(r) : ts::mixing_text(r), c.out);
    return 0;
}

int cmd_bounds(const Config& c) {
    const int g = single_genus(c);
    const std::string fmt = pick_format(c, "json", {"json", "text"});
    ts::BoundsReport b;
    if (g >= 4) {
        const ts::RotationDir rot = resolve_rotation(c.rotation);
        const ts::Orientation orient = resolve_orientation(c.orientation);
        b = ts::make_sweep_row(g, rot, orient, parse_tol(c.tol)).report;
    } else {
        b = ts::closed_form_bounds(g);  // closed forms only below the construction floor
    }
    emit(fmt == "json" ? ts::bounds_json(b) : ts::bounds_text(b), c.out);
    return 0;
}

int cmd_sweep(const Config& c) {
    auto [lo, hi] = parse_genus_range(c.genus);
    require_construction_floor(lo);
    const std::string fmt = pick_format(c, "csv", {"csv", "json"});
    const ts::RotationDir rot = resolve_rotation(c.rotation);
    const ts::Orientation orient = resolve_orientation(c.orientation);
    const ts::Rat tol = parse_tol(c.tol);
    std::vector<ts::SweepRow> rows;
    rows.reserve(static_cast<size_t>(hi - lo + 1));
    for (int g = lo; g <= hi; ++g) rows.push_back(ts::make_sweep_row(g, rot, orient, tol));
    emit(fmt == "csv" ? ts::sweep_csv(rows) : ts::sweep_json(rows), c.out);
    return 0;
}

int cmd_verify(const Config& c) {
    auto [lo, hi] = parse_genus_range(c.genus);
    require_construction_floor(lo);
    const std::string fmt = pick_format(c, "text", {"text", "json"});
    ts::VerifyOptions opt;
    opt.tol = parse_tol(c.tol);
    opt.rotation = resolve_rotation(c.rotation);
    opt.orientation = resolve_orientation(c.orientation);
    opt.corrupt_reference_poly = c.corrupt_reference;
    const std::vector<ts::CheckResult> results = ts::run_verification(lo, hi, opt);
    emit(fmt == "text" ? ts::verify_text(results) : ts::verify_json(results), c.out);
    for (const ts::CheckResult& r : results)
        if (!r.pass) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact transition-matrix family: construction, spectral certificates, reports"};
    app.require_subcommand(1);

    Config cfg[8];
    CLI::App* matrix = app.add_subcommand("matrix", "exact transition matrix");
    add_common(matrix, cfg[0]);
    CLI::App* charpoly = app.add_subcommand("charpoly", "characteristic polynomial vs reference");
    add_common(charpoly, cfg[1]);
    CLI::App* spectrum = app.add_subcommand("spectrum", "certified spectral radius and eigenvector");
    add_common(spectrum, cfg[2]);
    CLI::App* digraph = app.add_subcommand("digraph", "edge-list export");
    add_common(digraph, cfg[3]);
    CLI::App* mixing = app.add_subcommand("mixing", "primitivity, self-loops, path counts");
    add_common(mixing, cfg[4]);
    CLI::App* bounds = app.add_subcommand("bounds", "closed-form and certified bounds");
    add_common(bounds, cfg[5]);
    CLI::App* sweep = app.add_subcommand("sweep", "per-genus table over a range");
    add_common(sweep, cfg[6]);
    CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
    add_common(verify, cfg[7]);
    verify
        ->add_flag("--corrupt-reference-poly", cfg[7].corrupt_reference,
                   "test hook: corrupt the closed-form reference polynomial (negative control)")
        ->group("");  // hidden from --help

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(matrix)) return cmd_matrix(cfg[0]);
        if (app.got_subcommand(charpoly)) return cmd_charpoly(cfg[1]);
        if (app.got_subcommand(spectrum)) return cmd_spectrum(cfg[2]);
        if (app.got_subcommand(digraph)) return cmd_digraph(cfg[3]);
        if (app.got_subcommand(mixing)) return cmd_mixing(cfg[4]);
        if (app.got_subcommand(bounds)) return cmd_bounds(cfg[5]);
        if (app.got_subcommand(sweep)) return cmd_sweep(cfg[6]);
        if (app.got_subcommand(verify)) return cmd_verify(cfg[7]);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;  // no subcommand (require_subcommand should have caught this)
}
