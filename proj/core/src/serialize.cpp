#include "twistspec/serialize.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace twistspec {

using json = nlohmann::ordered_json;

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json int_strings(const std::vector<Int>& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(x.get_str());
    return a;
}

json enclosure_json(const RootEnclosure& enc) {
    json j;
    j["lower_exact"] = rat_string(enc.lower);
    j["upper_exact"] = rat_string(enc.upper);
    j["lower"] = format_real(enc.lower.get_d());
    j["upper"] = format_real(enc.upper.get_d());
    j["width"] = format_real(enc.width().get_d());
    return j;
}

json interval_json(const Interval& iv) {
    json j;
    j["lower"] = format_real(iv.lo);
    j["upper"] = format_real(iv.hi);
    return j;
}

json sweep_row_json(const SweepRow& row) {
    const BoundsReport& b = row.report;
    const double lg = std::log(static_cast<double>(b.genus));
    json j;
    j["genus"] = b.genus;
    j["dimension"] = row.dimension;
    j["trace"] = row.trace_value.get_str();
    j["determinant"] = row.det_value.get_str();
    if (b.dilatation) {
        j["lambda_lower"] = format_real(b.dilatation->lower.get_d());
        j["lambda_upper"] = format_real(b.dilatation->upper.get_d());
    }
    if (b.log_dilatation) {
        j["log_lambda_lower"] = format_real(b.log_dilatation->lo);
        j["log_lambda_upper"] = format_real(b.log_dilatation->hi);
    }
    if (b.dil_lower) j["dil_lower"] = format_real(*b.dil_lower);
    if (b.dil_upper) j["dil_upper"] = format_real(*b.dil_upper);
    if (b.dil_upper_sharp) j["dil_upper_sharp"] = format_real(*b.dil_upper_sharp);
    j["ellC_lower"] = rat_string(b.ellC_lower);
    if (b.kappa_lower) {
        j["kappa_lower_lo"] = format_real(b.kappa_lower->lo);
        j["kappa_lower_hi"] = format_real(b.kappa_lower->hi);
    }
    j["kappa_upper"] = format_real(b.kappa_upper);
    if (b.kappa_lower) {
        j["kappa_lower_log_g_lo"] = format_real(b.kappa_lower->lo * lg);
        j["kappa_lower_log_g_hi"] = format_real(b.kappa_lower->hi * lg);
    }
    j["kappa_upper_log_g"] = format_real(b.kappa_upper * lg);
    if (b.mixing_exponent) j["mixing_exponent"] = *b.mixing_exponent;
    j["filling_floor"] = b.filling_floor;
    j["rotation"] = b.rotation;
    j["orientation"] = b.orientation;
    return j;
}

}  // namespace

std::string format_real(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 15);
    if (ec != std::errc())
        throw std::runtime_error("format_real: conversion failed");
    return std::string(buf, ptr);
}

std::string rat_string(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string matrix_json(const CurveSystem& sys, const LinearMap& m, RotationDir rot) {
    json j;
    j["kind"] = "transition-matrix";
    j["genus"] = sys.genus();
    j["dimension"] = m.n;
    j["rotation"] = rotation_label(rot);
    j["column_is_image"] = true;
    json basis = json::array();
    for (CurveId c : sys.basis()) basis.push_back(curve_name(c));
    j["basis"] = basis;
    json rows = json::array();
    for (int r = 0; r < m.n; ++r) {
        json row = json::array();
        for (int c = 0; c < m.n; ++c) row.push_back(m.at(r, c).get_str());
        rows.push_back(std::move(row));
    }
    j["entries"] = rows;
    return dump(j);
}

std::string matrix_text(const CurveSystem& sys, const LinearMap& m) {
    std::ostringstream o;
    o << "# transition matrix, genus " << sys.genus() << ", dimension " << m.n
      << ", columns are images\n# basis:";
    for (CurveId c : sys.basis()) o << " " << curve_name(c);
    o << "\n";
    for (int r = 0; r < m.n; ++r) {
        for (int c = 0; c < m.n; ++c) o << (c ? " " : "") << m.at(r, c).get_str();
        o << "\n";
    }
    return o.str();
}

std::string charpoly_json(int genus, const IntPolynomial& computed,
                          const IntPolynomial& reference, RotationDir rot) {
    json j;
    j["kind"] = "characteristic-polynomial";
    j["genus"] = genus;
    j["rotation"] = rotation_label(rot);
    j["degree"] = computed.degree();
    j["coefficients_ascending"] = int_strings(computed.c);
    j["palindromic"] = palindromic(computed);
    j["matches_reference"] = computed == reference;
    json ref;
    ref["degree"] = reference.degree();
    ref["coefficients_ascending"] = int_strings(reference.c);
    j["reference"] = ref;
    return dump(j);
}

std::string charpoly_text(int genus, const IntPolynomial& computed,
                          const IntPolynomial& reference) {
    std::ostringstream o;
    o << "# characteristic polynomial, genus " << genus << "\n";
    o << "computed:  " << to_string(computed) << "\n";
    o << "reference: " << to_string(reference) << "\n";
    o << "matches_reference: " << (computed == reference ? "yes" : "no") << "\n";
    o << "palindromic: " << (palindromic(computed) ? "yes" : "no") << "\n";
    return o.str();
}

std::string spectrum_json(int genus, int dimension, const RootEnclosure& enc,
                          const RatVector* perron, RotationDir rot, const Rat& tol) {
    json j;
    j["kind"] = "spectrum";
    j["genus"] = genus;
    j["dimension"] = dimension;
    j["rotation"] = rotation_label(rot);
    j["tolerance"] = rat_string(tol);
    j["spectral_radius"] = enclosure_json(enc);
    j["log_spectral_radius"] = interval_json(log_interval(enc));
    if (perron) {
        json pv;
        pv["normalization"] = "sum-1";
        json entries = json::array();
        for (const Rat& e : *perron) entries.push_back(rat_string(e));
        pv["entries"] = entries;
        j["perron_vector"] = pv;
    }
    return dump(j);
}

std::string spectrum_text(int genus, const RootEnclosure& enc) {
    Interval ld = log_interval(enc);
    std::ostringstream o;
    o << "# spectrum, genus " << genus << "\n";
    o << "spectral_radius: [" << format_real(enc.lower.get_d()) << ", "
      << format_real(enc.upper.get_d()) << "]  (width " << format_real(enc.width().get_d())
      << ")\n";
    o << "log_spectral_radius: [" << format_real(ld.lo) << ", " << format_real(ld.hi) << "]\n";
    return o.str();
}

std::string digraph_json(int genus, const Digraph& dg) {
    json j;
    j["kind"] = "digraph";
    j["genus"] = genus;
    j["orientation"] = orientation_label(dg.orientation);
    json verts = json::array();
    for (const std::string& s : dg.names) verts.push_back(s);
    j["vertices"] = verts;
    json edges = json::array();
    for (int u = 0; u < dg.n; ++u) {
        for (int v = 0; v < dg.n; ++v) {
            const Int& m = dg.adj.at(u, v);
            if (m == 0) continue;
            json e;
            e["from"] = dg.names[static_cast<size_t>(u)];
            e["to"] = dg.names[static_cast<size_t>(v)];
            e["multiplicity"] = m.get_str();
            edges.push_back(std::move(e));
        }
    }
    j["edges"] = edges;
    return dump(j);
}

MixingReport make_mixing_report(int genus, RotationDir rot, Orientation orient) {
    CurveSystem sys(genus);
    LinearMap a = phi_matrix(sys, rot);
    Digraph dg = from_matrix(sys, a, orient);

    MixingReport r;
    r.genus = genus;
    r.cap = 2 * genus - 1;
    r.exponent = primitivity_exponent(a, r.cap);
    for (const auto& [v, m] : self_loop_census(dg))
        r.self_loops.emplace_back(dg.names[static_cast<size_t>(v)], m);
    r.cover_lo = genus - 1;
    r.cover_hi = r.cap;
    const int a1 = sys.index_of({Family::A, 1});
    for (int k = r.cover_lo; k <= r.cover_hi; ++k) {
        if (static_cast<int>(exact_length_cover(dg, a1, k).size()) != sys.dim()) {
            r.first_incomplete = k;
            break;
        }
    }
    r.count_length = genus - 2;
    std::vector<Int> counts = path_counts(dg, r.count_length);
    size_t arg = 0;
    for (size_t i = 1; i < counts.size(); ++i)
        if (counts[i] > counts[arg]) arg = i;
    r.max_count = counts[arg];
    r.max_count_vertex = dg.names[arg];
    r.count_bound = 10 * genus - 21;
    r.rotation = rotation_label(rot);
    r.orientation = orientation_label(orient);
    return r;
}

std::string mixing_json(const MixingReport& r) {
    json j;
    j["kind"] = "mixing";
    j["genus"] = r.genus;
    j["rotation"] = r.rotation;
    j["orientation"] = r.orientation;
    json prim;
    prim["cap"] = r.cap;
    if (r.exponent)
        prim["exponent"] = *r.exponent;
    else
        prim["exponent"] = nullptr;
    prim["within_cap"] = r.exponent.has_value();
    j["primitivity"] = prim;
    json loops = json::array();
    for (const auto& [name, mult] : r.self_loops) {
        json e;
        e["vertex"] = name;
        e["multiplicity"] = mult.get_str();
        loops.push_back(std::move(e));
    }
    j["self_loops"] = loops;
    json cov;
    cov["from_vertex"] = "a1";
    cov["length_lo"] = r.cover_lo;
    cov["length_hi"] = r.cover_hi;
    cov["all_full"] = r.first_incomplete < 0;
    if (r.first_incomplete >= 0) cov["first_incomplete"] = r.first_incomplete;
    j["exact_length_covers"] = cov;
    json pc;
    pc["length"] = r.count_length;
    pc["max"] = r.max_count.get_str();
    pc["argmax"] = r.max_count_vertex;
    pc["bound"] = r.count_bound.get_str();
    pc["within_bound"] = r.max_count <= r.count_bound;
    j["path_counts"] = pc;
    return dump(j);
}

std::string mixing_text(const MixingReport& r) {
    std::ostringstream o;
    o << "# mixing, genus " << r.genus << ", rotation " << r.rotation << ", orientation "
      << r.orientation << "\n";
    if (r.exponent)
        o << "primitivity_exponent: " << *r.exponent << " (cap " << r.cap << ")\n";
    else
        o << "primitivity_exponent: exceeds cap " << r.cap << "\n";
    o << "self_loops:";
    for (const auto& [name, mult] : r.self_loops) o << " " << name << " x" << mult.get_str();
    o << "\n";
    o << "exact_length_covers_from_a1: lengths " << r.cover_lo << ".." << r.cover_hi << " ";
    if (r.first_incomplete < 0)
        o << "all full\n";
    else
        o << "first incomplete at " << r.first_incomplete << "\n";
    o << "path_counts: length " << r.count_length << " max " << r.max_count.get_str() << " at "
      << r.max_count_vertex << ", bound " << r.count_bound.get_str() << " "
      << (r.max_count <= r.count_bound ? "holds" : "exceeded") << "\n";
    return o.str();
}

std::string bounds_json(const BoundsReport& b) {
    json j;
    j["kind"] = "bounds";
    j["genus"] = b.genus;
    j["rotation"] = b.rotation;
    j["orientation"] = b.orientation;
    j["dilatation_source"] =
        b.dilatation_source.empty() ? "closed-form-only" : b.dilatation_source;
    if (b.dilatation) j["spectral_radius"] = enclosure_json(*b.dilatation);
    if (b.log_dilatation) j["log_spectral_radius"] = interval_json(*b.log_dilatation);
    if (b.dil_lower) j["dil_lower"] = format_real(*b.dil_lower);
    if (b.dil_upper) j["dil_upper"] = format_real(*b.dil_upper);
    if (b.dil_upper_sharp) j["dil_upper_sharp"] = format_real(*b.dil_upper_sharp);
    j["dil_in_hypothesis"] = b.dil_in_hypothesis;
    j["ellC_lower"] = rat_string(b.ellC_lower);
    if (b.kappa_lower) {
        json kl;
        kl["lower"] = format_real(b.kappa_lower->lo);
        kl["upper"] = format_real(b.kappa_lower->hi);
        j["kappa_lower"] = kl;
    }
    j["kappa_upper"] = format_real(b.kappa_upper);
    if (b.mixing_exponent) j["mixing_exponent"] = *b.mixing_exponent;
    j["filling_floor"] = b.filling_floor;
    j["filling_euler_identity"] = euler_identity_check(b.filling_floor, 1, b.genus);
    return dump(j);
}

std::string bounds_text(const BoundsReport& b) {
    std::ostringstream o;
    o << "# bounds, genus " << b.genus << "\n";
    if (b.dilatation)
        o << "spectral_radius: [" << format_real(b.dilatation->lower.get_d()) << ", "
          << format_real(b.dilatation->upper.get_d()) << "]\n";
    if (b.log_dilatation)
        o << "log_spectral_radius: [" << format_real(b.log_dilatation->lo) << ", "
          << format_real(b.log_dilatation->hi) << "]\n";
    if (b.dil_lower) o << "dil_lower: " << format_real(*b.dil_lower) << "\n";
    if (b.dil_upper) o << "dil_upper: " << format_real(*b.dil_upper) << "\n";
    if (b.dil_upper_sharp) o << "dil_upper_sharp: " << format_real(*b.dil_upper_sharp) << "\n";
    o << "dil_in_hypothesis: " << (b.dil_in_hypothesis ? "yes" : "no") << "\n";
    o << "ellC_lower: " << rat_string(b.ellC_lower) << "\n";
    if (b.kappa_lower)
        o << "kappa_lower: [" << format_real(b.kappa_lower->lo) << ", "
          << format_real(b.kappa_lower->hi) << "]\n";
    o << "kappa_upper: " << format_real(b.kappa_upper) << "\n";
    if (b.mixing_exponent) o << "mixing_exponent: " << *b.mixing_exponent << "\n";
    o << "filling_floor: " << b.filling_floor << "\n";
    return o.str();
}

SweepRow make_sweep_row(int genus, RotationDir rot, Orientation orient, const Rat& tol) {
    CurveSystem sys(genus);
    LinearMap a = phi_matrix(sys, rot);

    BoundsReport b = closed_form_bounds(genus);
    b.rotation = rotation_label(rot);
    b.orientation = orientation_label(orient);
    RootEnclosure enc = perron_root(a, tol);
    b.dilatation = enc;
    b.log_dilatation = log_interval(enc);
    auto [kl, ku] = kappa_interval(genus, *b.log_dilatation);
    b.kappa_lower = kl;
    b.kappa_upper = ku;
    b.dilatation_source = "certified-enclosure";
    b.mixing_exponent = primitivity_exponent(a, 2 * genus - 1);

    SweepRow row;
    row.report = std::move(b);
    row.dimension = sys.dim();
    row.trace_value = trace(a);
    row.det_value = phi_determinant(sys, rot);
    return row;
}

std::string sweep_csv_header() {
    return "genus,dimension,trace,determinant,lambda_lower,lambda_upper,log_lambda_lower,"
           "log_lambda_upper,dil_lower,dil_upper,dil_upper_sharp,ellC_lower,kappa_lower_lo,"
           "kappa_lower_hi,kappa_upper,kappa_lower_log_g_lo,kappa_lower_log_g_hi,"
           "kappa_upper_log_g,mixing_exponent,filling_floor,rotation,orientation";
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream o;
    o << sweep_csv_header() << "\n";
    for (const SweepRow& row : rows) {
        const BoundsReport& b = row.report;
        const double lg = std::log(static_cast<double>(b.genus));
        o << b.genus << "," << row.dimension << "," << row.trace_value.get_str() << ","
          << row.det_value.get_str() << ",";
        if (b.dilatation)
            o << format_real(b.dilatation->lower.get_d()) << ","
              << format_real(b.dilatation->upper.get_d());
        else
            o << ",";
        o << ",";
        if (b.log_dilatation)
            o << format_real(b.log_dilatation->lo) << "," << format_real(b.log_dilatation->hi);
        else
            o << ",";
        o << ",";
        o << (b.dil_lower ? format_real(*b.dil_lower) : "") << ","
          << (b.dil_upper ? format_real(*b.dil_upper) : "") << ","
          << (b.dil_upper_sharp ? format_real(*b.dil_upper_sharp) : "") << ","
          << rat_string(b.ellC_lower) << ",";
        if (b.kappa_lower)
            o << format_real(b.kappa_lower->lo) << "," << format_real(b.kappa_lower->hi);
        else
            o << ",";
        o << ",";
        o << format_real(b.kappa_upper) << ",";
        if (b.kappa_lower)
            o << format_real(b.kappa_lower->lo * lg) << "," << format_real(b.kappa_lower->hi * lg);
        else
            o << ",";
        o << ",";
        o << format_real(b.kappa_upper * lg) << ",";
        if (b.mixing_exponent) o << *b.mixing_exponent;
        o << "," << b.filling_floor << "," << b.rotation << "," << b.orientation << "\n";
    }
    return o.str();
}

std::string sweep_json(const std::vector<SweepRow>& rows) {
    json j;
    j["kind"] = "sweep";
    json arr = json::array();
    for (const SweepRow& row : rows) arr.push_back(sweep_row_json(row));
    j["rows"] = arr;
    return dump(j);
}

std::string verify_text(const std::vector<CheckResult>& results) {
    std::ostringstream o;
    int passed = 0;
    for (const CheckResult& r : results) {
        o << (r.pass ? "PASS " : "FAIL ") << r.id;
        if (r.genus >= 0) o << " g=" << r.genus;
        o << ": " << r.detail << "\n";
        if (r.pass) ++passed;
    }
    o << "summary: " << results.size() << " checks, " << passed << " passed, "
      << results.size() - passed << " failed\n";
    return o.str();
}

std::string verify_json(const std::vector<CheckResult>& results) {
    json j;
    j["kind"] = "verification";
    json checks = json::array();
    int passed = 0;
    for (const CheckResult& r : results) {
        json c;
        c["id"] = r.id;
        if (r.genus >= 0)
            c["genus"] = r.genus;
        else
            c["genus"] = nullptr;
        c["pass"] = r.pass;
        c["detail"] = r.detail;
        checks.push_back(std::move(c));
        if (r.pass) ++passed;
    }
    j["checks"] = checks;
    json s;
    s["total"] = results.size();
    s["passed"] = passed;
    s["failed"] = results.size() - passed;
    j["summary"] = s;
    return dump(j);
}

}  // namespace twistspec
