// Copyright 2026 The lueq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "lueq/classify.h"
#include "lueq/io.h"
#include "lueq/oracle.h"

namespace {

using lueq::GpmSet;
using lueq::Int;
using nlohmann::json;

enum ExitCode : int {
    kSuccess = 0,
    kInequivalent = 1,
    kUsageError = 2,
    kCapExceeded = 3,
};

struct RunConfig {
    Int d = 0;
    Int n = 0;
    std::string format = "text";
    bool count_only = false;
    unsigned workers = 1;
    Int cap = 10'000'000;
    std::string out;
};

json set_json(const GpmSet &set) {
    json members = json::array();
    for (const auto &g : set) {
        members.push_back({g.s, g.t});
    }
    return members;
}

GpmSet require_standard(const GpmSet &set) {
    if (set.is_standard()) {
        return set;
    }
    GpmSet standard = lueq::right_translate(set, set[0]);
    std::cerr << "warning: " << set.str() << " is not standard; using " << standard.str() << "\n";
    return standard;
}

void require_d(const RunConfig &cfg) {
    if (cfg.d == 0) {
        throw CLI::ValidationError("--d", "the dimension is required");
    }
}

void emit_orbit(const RunConfig &cfg, const lueq::Orbit &orbit, std::ostream &out) {
    if (cfg.format == "json") {
        json j{{"d", orbit.d}, {"count", orbit.size()}};
        if (!cfg.count_only) {
            j["sets"] = json::array();
            for (const auto &s : orbit.sets) {
                j["sets"].push_back(set_json(s));
            }
        }
        out << j.dump(2) << "\n";
    } else if (cfg.count_only) {
        out << orbit.size() << "\n";
    } else if (cfg.format == "csv") {
        out << "members\n";
        for (const auto &s : orbit.sets) {
            out << s.csv_str() << "\n";
        }
    } else {
        out << orbit.size() << " sets\n";
        for (const auto &s : orbit.sets) {
            out << s.str() << "\n";
        }
    }
}

int cmd_power(const RunConfig &cfg, const std::string &text, std::ostream &out) {
    require_d(cfg);
    GpmSet set = lueq::parse_set(text, cfg.d);
    auto pv = lueq::power_vector(set);
    if (cfg.format == "json") {
        out << json{{"d", cfg.d}, {"set", set_json(set)}, {"power_vector", pv.entries}}.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "power_vector\n";
        for (std::size_t k = 0; k < pv.entries.size(); k++) {
            out << (k ? ";" : "") << pv.entries[k];
        }
        out << "\n";
    } else {
        out << lueq::to_string(pv) << "\n";
    }
    return kSuccess;
}

int cmd_uc_orbit(const RunConfig &cfg, const std::string &text, std::ostream &out) {
    require_d(cfg);
    emit_orbit(cfg, lueq::uc_orbit(require_standard(lueq::parse_set(text, cfg.d))), out);
    return kSuccess;
}

int cmd_u_class(const RunConfig &cfg, const std::string &text, std::ostream &out) {
    require_d(cfg);
    emit_orbit(cfg, lueq::u_class(lueq::parse_set(text, cfg.d)), out);
    return kSuccess;
}

int cmd_decide(const RunConfig &cfg, const std::string &kind, const std::string &lhs, const std::string &rhs,
               std::ostream &out) {
    require_d(cfg);
    GpmSet m = lueq::parse_set(lhs, cfg.d);
    GpmSet n = lueq::parse_set(rhs, cfg.d);
    bool equivalent;
    if (kind == "uc") {
        m = require_standard(m);
        n = require_standard(n);
        equivalent = lueq::decide_uc(m, n);
    } else {
        equivalent = lueq::decide_u(m, n);
    }
    auto pm = lueq::power_vector(m), pn = lueq::power_vector(n);
    bool fast_reject = kind == "uc" && pm != pn;
    if (cfg.format == "json") {
        json j{{"kind", kind}, {"equivalent", equivalent}};
        if (fast_reject) {
            j["power_vectors"] = {pm.entries, pn.entries};
        }
        out << j.dump(2) << "\n";
    } else {
        out << (equivalent ? "equivalent" : "inequivalent") << "\n";
        if (fast_reject) {
            out << "power vectors differ: " << lueq::to_string(pm) << " vs " << lueq::to_string(pn) << "\n";
        }
    }
    return equivalent ? kSuccess : kInequivalent;
}

int cmd_classify(const RunConfig &cfg, std::ostream &out) {
    require_d(cfg);
    if (cfg.n == 0) {
        throw CLI::ValidationError("--n", "the set size is required");
    }
    lueq::ClassifyOptions options{cfg.cap, cfg.workers, !cfg.count_only && cfg.format == "json"};
    lueq::Partition p = lueq::classify_all(cfg.d, cfg.n, options);
    Int total_sets = 0;
    for (const auto &c : p.classes) {
        total_sets += c.size_total;
    }
    if (cfg.format == "json") {
        json classes = json::array();
        for (const auto &c : p.classes) {
            json entry{{"representative", set_json(c.representative)}, {"size", c.size_standard}};
            if (c.members) {
                entry["members"] = json::array();
                for (const auto &s : *c.members) {
                    entry["members"].push_back(set_json(s));
                }
            }
            classes.push_back(std::move(entry));
        }
        out << json{{"d", p.d}, {"n", p.n}, {"classes", classes}}.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "representative,size_standard,size_total\n";
        for (const auto &c : p.classes) {
            out << c.representative.csv_str() << "," << c.size_standard << "," << c.size_total << "\n";
        }
    } else {
        if (!cfg.count_only) {
            for (std::size_t k = 0; k < p.classes.size(); k++) {
                const auto &c = p.classes[k];
                out << k + 1 << "\t" << c.representative.str() << "\t" << c.size_standard << "\t" << c.size_total
                    << "\n";
            }
        }
        out << "classes " << p.classes.size() << ", standard sets " << p.total_standard() << ", all sets "
            << total_sets << "\n";
    }
    return kSuccess;
}

int cmd_tables(const RunConfig &cfg, int id, std::ostream &out) {
    auto blocks = lueq::compute_table(id);
    if (cfg.format == "json") {
        json j = json::array();
        for (const auto &b : blocks) {
            json sets = json::array();
            for (const auto &s : b.orbit.sets) {
                sets.push_back(set_json(s));
            }
            j.push_back({{"block", b.label}, {"count", b.orbit.size()}, {"sets", sets}});
        }
        out << json{{"table", id}, {"blocks", j}}.dump(2) << "\n";
    } else if (cfg.format == "text") {
        for (const auto &b : blocks) {
            out << b.label << " (" << b.orbit.size() << " sets)\n";
            if (!cfg.count_only) {
                for (const auto &s : b.orbit.sets) {
                    out << "  " << s.str() << "\n";
                }
            }
        }
    } else {
        out << lueq::table_csv(blocks);
    }
    return kSuccess;
}

int cmd_verify(std::ostream &out) {
    namespace o = lueq::oracle;
    bool all = true;
    auto report = [&](const std::string &name, bool ok, double dev = -1) {
        all = all && ok;
        out << (ok ? "PASS " : "FAIL ") << name;
        if (dev >= 0) {
            out << " deviation=" << dev;
        }
        out << "\n";
    };
    auto scaling = o::verify_scaling_permutation(5, 6, 12, 72);
    report("permutation W conjugates X^6 to X^30 and fixes Z^12 at d=72", scaling.passed, scaling.deviation);
    report("12s+30t=68 (mod 72) has no solution", o::verify_scaling_permutation_not_clifford());
    for (auto [n, m] : {std::pair<Int, Int>{2, 3}, {3, 4}}) {
        auto r = o::verify_tensor_identities(n, m);
        report("tensor identities for " + std::to_string(n) + "x" + std::to_string(m), r.passed, r.deviation);
    }
    double xz = o::max_deviation(
        o::build_gpm_matrix({1, 1}, 4).pow(4), o::DenseOperator::identity(4).scaled(-1));
    report("(XZ)^4 = -I at d=4", xz < 1e-12, xz);
    double x3z3 = o::max_deviation(
        o::build_gpm_matrix({3, 3}, 6).pow(2), o::DenseOperator::identity(6).scaled(-1));
    report("(X^3Z^3)^2 = -I at d=6", x3z3 < 1e-12, x3z3);
    double comm = o::verify_commutation(6, 12, 72);
    report("Z^12 X^6 = w^72 X^6 Z^12 at d=72", comm < 1e-12, comm);
    report("{I,X^6,Z^12} ~ {I,X^30,Z^12} at d=72", o::verify_pair_equivalence(5, 0, 6, 12, 72));
    out << (all ? "all checks passed" : "some checks failed") << "\n";
    return all ? kSuccess : 1;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Local unitary equivalence of generalized Pauli matrix sets"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    app.add_option("--d", cfg.d, "Dimension")->check(CLI::Range(Int{3}, lueq::kMaxDimension));
    app.add_option("--n", cfg.n, "Set size")->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_flag("--count-only", cfg.count_only, "Print counts without members");
    app.add_option("--workers", cfg.workers, "Worker threads for classify")->check(CLI::PositiveNumber);
    app.add_option("--cap", cfg.cap, "Largest number of standard sets classify may visit")
        ->check(CLI::PositiveNumber);
    app.add_option("--out", cfg.out, "Write output to this file");

    std::string set_a, set_b, kind;
    int table_id = 0;
    auto *power = app.add_subcommand("power", "Essential power vector of a set");
    power->add_option("set", set_a)->required();
    auto *uc = app.add_subcommand("uc-orbit", "All standard sets UC-equivalent to a set");
    uc->add_option("set", set_a)->required();
    auto *u = app.add_subcommand("u-class", "All standard sets U-equivalent to a set");
    u->add_option("set", set_a)->required();
    auto *decide = app.add_subcommand("decide", "Decide UC- or U-equivalence of two sets");
    decide->add_option("kind", kind)->required()->check(CLI::IsMember({"uc", "u"}));
    decide->add_option("first", set_a)->required();
    decide->add_option("second", set_b)->required();
    auto *classify = app.add_subcommand("classify", "Partition all standard n-sets into classes");
    auto *tables = app.add_subcommand("tables", "Reproduce a golden orbit table");
    tables->add_option("id", table_id)->required()->check(CLI::Range(1, lueq::kTableCount));
    auto *verify = app.add_subcommand("verify", "Run the numeric oracle checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kSuccess : kUsageError;
    }

    std::ostringstream buffer;
    int code = kSuccess;
    try {
        if (*power) {
            code = cmd_power(cfg, set_a, buffer);
        } else if (*uc) {
            code = cmd_uc_orbit(cfg, set_a, buffer);
        } else if (*u) {
            code = cmd_u_class(cfg, set_a, buffer);
        } else if (*decide) {
            code = cmd_decide(cfg, kind, set_a, set_b, buffer);
        } else if (*classify) {
            code = cmd_classify(cfg, buffer);
        } else if (*tables) {
            if (app.get_option("--format")->empty()) {
                cfg.format = "csv";
            }
            code = cmd_tables(cfg, table_id, buffer);
        } else if (*verify) {
            code = cmd_verify(buffer);
        }
    } catch (const lueq::ResourceCapExceeded &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCapExceeded;
    } catch (const CLI::ValidationError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }

    if (cfg.out.empty()) {
        std::cout << buffer.str();
    } else {
        std::ofstream file(cfg.out);
        if (!file) {
            std::cerr << "error: cannot open " << cfg.out << "\n";
            return kUsageError;
        }
        file << buffer.str();
    }
    return code;
}
