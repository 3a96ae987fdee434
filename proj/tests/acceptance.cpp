// Acceptance gate: one PASS/FAIL line per quantitative criterion, each
// evaluated over its full stated genus range. Exit 0 only if every
// requested criterion holds. Run with a criterion number (1..8) to check
// one criterion, or with no arguments for all of them.

#include "twistspec/verify.hpp"

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace twistspec;

namespace {

struct Outcome {
    bool pass = false;
    std::string summary;
};

Outcome sweep_range(int lo, int hi, const VerifyOptions& opt,
                    const std::function<CheckResult(int, const VerifyOptions&)>& fn) {
    int fails = 0;
    std::string first;
    for (int g = lo; g <= hi; ++g) {
        CheckResult r = fn(g, opt);
        if (!r.pass) {
            if (fails == 0) first = "first failure g=" + std::to_string(g) + ": " + r.detail;
            ++fails;
        }
    }
    const int total = hi - lo + 1;
    std::ostringstream o;
    if (fails == 0)
        o << "all " << total << " genus values pass";
    else
        o << fails << "/" << total << " genus values fail; " << first;
    return {fails == 0, o.str()};
}

Outcome criterion_1(const VerifyOptions& opt) {
    return sweep_range(4, 30, opt, check_charpoly_identity);
}

Outcome criterion_2(const VerifyOptions& opt) {
    return sweep_range(5, 60, opt, check_dilatation_sandwich);
}

Outcome criterion_3(const VerifyOptions& opt) {
    return sweep_range(5, 20, opt, check_dominant_root);
}

Outcome criterion_4(const VerifyOptions& opt) {
    return sweep_range(4, 60, opt, check_self_loop_census);
}

Outcome criterion_5(const VerifyOptions& opt) {
    return sweep_range(4, 60, opt, check_mixing);
}

Outcome criterion_6(const VerifyOptions& opt) {
    return sweep_range(5, 60, opt, check_path_count_bound);
}

Outcome criterion_7(const VerifyOptions& opt) {
    int fails = 0;
    std::string first;
    for (const CheckResult& r : check_asymptotics(opt)) {
        if (!r.pass) {
            if (fails == 0) first = r.id + ": " + r.detail;
            ++fails;
        }
    }
    if (fails == 0) return {true, "both kappa products stay inside their brackets"};
    return {false, first};
}

Outcome criterion_8(const VerifyOptions& opt) {
    int fails = 0, total = 0;
    std::string first;
    for (int g = 4; g <= 60; ++g) {
        for (const CheckResult& r : check_property_suite(g, opt)) {
            ++total;
            if (!r.pass) {
                if (fails == 0)
                    first = "first failure g=" + std::to_string(g) + " " + r.id + ": " + r.detail;
                ++fails;
            }
        }
    }
    std::ostringstream o;
    if (fails == 0)
        o << "all " << total << " property checks pass";
    else
        o << fails << "/" << total << " property checks fail; " << first;
    return {fails == 0, o.str()};
}

struct Criterion {
    const char* label;
    Outcome (*run)(const VerifyOptions&);
};

const Criterion kCriteria[] = {
    {"characteristic polynomial equals the closed-form reference, g in [4,30]", criterion_1},
    {"certified log-dilatation obeys every closed-form bound, g in [5,60]", criterion_2},
    {"reference-poly root modulus matches the certified radius within 1e-6, g in [5,20]",
     criterion_3},
    {"unique self-loop at a1 with multiplicity 1 and trace 1, g in [4,60]", criterion_4},
    {"primitivity exponent within 2g-1 and full covers from a1, g in [4,60]", criterion_5},
    {"length g-2 path counts bounded by 10g-21, g in [5,60]", criterion_6},
    {"kappa-times-log-g products inside their brackets, sampled on [10,10000]", criterion_7},
    {"structural property suite, g in [4,60]", criterion_8},
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> wanted;
    if (argc == 1) {
        for (int i = 1; i <= 8; ++i) wanted.push_back(i);
    } else if (argc == 2) {
        try {
            const int k = std::stoi(argv[1]);
            if (k < 1 || k > 8) throw std::out_of_range("criterion");
            wanted.push_back(k);
        } catch (const std::exception&) {
            std::cerr << "usage: " << argv[0] << " [criterion 1..8]\n";
            return 2;
        }
    } else {
        std::cerr << "usage: " << argv[0] << " [criterion 1..8]\n";
        return 2;
    }

    VerifyOptions opt;
    bool all_pass = true;
    for (int k : wanted) {
        const Criterion& c = kCriteria[k - 1];
        Outcome out;
        try {
            out = c.run(opt);
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        all_pass = all_pass && out.pass;
        std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << k << ": " << c.label
                  << " -- " << out.summary << "\n";
    }
    return all_pass ? 0 : 1;
}
