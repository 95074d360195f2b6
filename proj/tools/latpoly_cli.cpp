// Command-line front end for the lattice polytope library.
//
// Exit codes: 0 success, 1 precondition violation, 2 malformed input,
// 3 resource guard tripped, 4 counterexample candidate found.

#include "latpoly/campaign.hpp"
#include "latpoly/io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace latpoly;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPrecondition = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitResource = 3;
constexpr int kExitCounterexample = 4;

std::string read_source(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

LatticePolytope load(const std::string& path) { return parse_polytope(read_source(path)); }

ordered_json point_list_json(const PointSet& pts) {
    ordered_json arr = ordered_json::array();
    for (const auto& p : pts) {
        ordered_json row = ordered_json::array();
        for (const auto& c : p) row.push_back(c.str());
        arr.push_back(row);
    }
    return arr;
}

void print_points(const PointSet& pts, bool json) {
    if (json) {
        ordered_json j;
        j["count"] = pts.size();
        j["points"] = point_list_json(pts);
        std::cout << j.dump(2) << "\n";
        return;
    }
    for (const auto& p : pts) {
        for (size_t i = 0; i < p.size(); ++i) std::cout << (i ? " " : "") << p[i];
        std::cout << "\n";
    }
}

ordered_json map_json(const AffineUnimodularMap& f) {
    ordered_json j;
    ordered_json mat = ordered_json::array();
    for (int r = 0; r < f.linear.rows; ++r)
        for (int c = 0; c < f.linear.cols; ++c) mat.push_back(f.linear.at(r, c).str());
    j["matrix_row_major"] = mat;
    ordered_json t = ordered_json::array();
    for (const auto& c : f.translation) t.push_back(c.str());
    j["translation"] = t;
    return j;
}

int cmd_points(const std::string& input, bool json, bool interior) {
    LatticePolytope P = load(input);
    print_points(interior ? interior_lattice_points(P) : lattice_points(P), json);
    return kExitOk;
}

int cmd_dilate(const std::string& input, long long k, bool json) {
    if (k < 1) throw PreconditionError("dilation factor must be >= 1");
    LatticePolytope P = dilate(load(input), Int(k));
    if (json) {
        ordered_json j;
        j["polytope"] = serialize_polytope(P);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << serialize_polytope(P);
    }
    return kExitOk;
}

int cmd_normal_check(const std::string& input, bool json) {
    LatticePolytope P = load(input);
    NormalityResult r = normality_check(P);
    if (json) {
        ordered_json j;
        j["normal"] = r.normal;
        if (!r.normal) j["first_failing_k"] = r.first_failing_k->str();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (r.normal ? "normal\n"
                               : "not normal (fails at k=" + r.first_failing_k->str() + ")\n");
    }
    return kExitOk;
}

int cmd_gorenstein(const std::string& input, bool json) {
    LatticePolytope P = load(input);
    auto gmap = is_gorenstein_map(P);
    bool all = true;
    ordered_json per = ordered_json::array();
    for (const auto& [v, datum] : gmap) {
        all = all && datum.has_value();
        ordered_json rec;
        ordered_json vv = ordered_json::array();
        for (const auto& c : v) vv.push_back(c.str());
        rec["vertex"] = vv;
        rec["gorenstein"] = datum.has_value();
        if (datum) {
            ordered_json m = ordered_json::array();
            for (const auto& c : datum->point) m.push_back(c.str());
            rec["m0"] = m;
        }
        per.push_back(rec);
    }
    if (json) {
        ordered_json j;
        j["gorenstein"] = all;
        j["vertices"] = per;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (all ? "gorenstein\n" : "not gorenstein\n");
    }
    return kExitOk;
}

int cmd_very_ample(const std::string& input, bool json) {
    LatticePolytope P = load(input);
    bool va = true;
    ordered_json per = ordered_json::array();
    for (const auto& v : P.vertices) {
        auto r = very_ample_at(P, v);
        va = va && r.ok;
        ordered_json rec;
        ordered_json vv = ordered_json::array();
        for (const auto& c : v) vv.push_back(c.str());
        rec["vertex"] = vv;
        rec["ok"] = r.ok;
        if (r.violator) {
            ordered_json w = ordered_json::array();
            for (const auto& c : *r.violator) w.push_back(c.str());
            rec["violator"] = w;
        }
        per.push_back(rec);
    }
    if (json) {
        ordered_json j;
        j["very_ample"] = va;
        j["vertices"] = per;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (va ? "very ample\n" : "not very ample\n");
    }
    return kExitOk;
}

int cmd_classify(const std::string& input, const std::string& mode, bool json) {
    LatticePolytope P = load(input);
    ClassificationVerdict v;
    try {
        if (mode == "empty-interior") v = classify_empty_interior(P);
        else if (mode == "unique-interior") v = classify_unique_interior(P);
        else if (mode == "gorenstein-small") v = classify_gorenstein_small_interior(P);
        else if (mode == "empty-simplex") v = classify_empty_simplex(P);
        else throw PreconditionError("unknown classify mode: " + mode);
    } catch (const std::logic_error& e) {
        // A guaranteed witness was not found: the most valuable output.
        if (json) {
            ordered_json j;
            j["verdict"] = "counterexample-candidate";
            j["detail"] = e.what();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "counterexample candidate: " << e.what() << "\n";
        }
        return kExitCounterexample;
    }
    if (json) {
        ordered_json j;
        j["verdict"] = family_name(v.family.tag);
        if (!v.family.params.empty()) {
            ordered_json ps = ordered_json::array();
            for (const auto& a : v.family.params) ps.push_back(a.str());
            j["params"] = ps;
        }
        if (v.witness) j["witness"] = map_json(*v.witness);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << family_name(v.family.tag);
        for (const auto& a : v.family.params) std::cout << " " << a;
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_adjoint(const std::string& input, const std::string& check, bool json) {
    LatticePolytope P = load(input);
    if (check == "nef") {
        AdjointReport r = freeness_check(P);
        if (json) {
            ordered_json j;
            j["gorenstein"] = r.gorenstein;
            j["min_edge_length"] = r.min_edge.str();
            j["sections_nonzero"] = r.sections_nonzero;
            j["hypotheses_hold"] = r.hypotheses_hold;
            j["nef_certified"] = r.nef_certified;
            j["counterexample_candidate"] = r.counterexample_candidate;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << (r.nef_certified ? "nef certified\n" : "not certified\n");
        }
        return r.counterexample_candidate ? kExitCounterexample : kExitOk;
    }
    if (check == "very-ample") {
        Tm2Report r = theorem_tm2_check(P);
        if (json) {
            ordered_json j;
            j["gorenstein"] = r.gorenstein;
            j["min_edge_length"] = r.min_edge.str();
            j["fan_is_projective_space"] = r.fan_is_projective_space;
            j["hypotheses_hold"] = r.hypotheses_hold;
            j["conclusion_holds"] = r.conclusion_holds;
            j["counterexample_candidate"] = r.counterexample_candidate;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << (r.conclusion_holds ? "adjoint very ample\n"
                                             : "adjoint not very ample\n");
        }
        return r.counterexample_candidate ? kExitCounterexample : kExitOk;
    }
    // plain adjoint polytope
    auto A = adjoint_polytope(P);
    if (json) {
        ordered_json j;
        j["present"] = A.has_value();
        if (A) j["polytope"] = serialize_polytope(*A);
        std::cout << j.dump(2) << "\n";
    } else if (A) {
        std::cout << serialize_polytope(*A);
    } else {
        std::cout << "empty interior\n";
    }
    return kExitOk;
}

int cmd_equiv(const std::string& a, const std::string& b, bool json) {
    LatticePolytope A = load(a), B = load(b);
    auto f = lattice_equivalent(A, B);
    if (json) {
        ordered_json j;
        j["equivalent"] = f.has_value();
        if (f) j["witness"] = map_json(*f);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (f ? "equivalent\n" : "not equivalent\n");
    }
    return kExitOk;
}

int cmd_campaign(const std::string& id, const CorpusSpec& spec, bool json) {
    CampaignReport rep = run_campaign(id, spec);
    if (json) {
        std::cout << campaign_report_json(rep);
    } else {
        std::cout << "campaign " << rep.id << ": examined " << rep.examined
                  << ", hypotheses satisfied " << rep.hypothesis_satisfied << ", failures "
                  << rep.failures.size() << "\n";
        for (const auto& f : rep.failures)
            std::cout << "--- " << f.detail << "\n" << f.polytope;
    }
    return rep.failures.empty() ? kExitOk : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lattice polytope toolkit"};
    app.require_subcommand(1);

    std::string input = "-";
    bool json = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", input, "polytope file, or - for stdin");
        sub->add_flag("--json", json, "machine-readable output");
    };

    auto* points = app.add_subcommand("points", "lattice points of P");
    add_common(points);
    auto* interior = app.add_subcommand("interior", "interior lattice points of P");
    add_common(interior);

    auto* dil = app.add_subcommand("dilate", "k-th dilate of P");
    long long k = 1;
    dil->add_option("-k", k, "dilation factor")->required();
    add_common(dil);

    auto* nrm = app.add_subcommand("normal-check", "normality of P");
    add_common(nrm);
    auto* gor = app.add_subcommand("gorenstein", "Gorenstein vertex condition");
    add_common(gor);
    auto* va = app.add_subcommand("very-ample", "very-ample vertex condition");
    add_common(va);

    auto* cls = app.add_subcommand("classify", "match P against the canonical families");
    std::string mode = "empty-interior";
    cls->add_option("--mode", mode, "empty-interior|unique-interior|gorenstein-small|empty-simplex");
    add_common(cls);

    auto* adj = app.add_subcommand("adjoint", "adjoint polytope and certificates");
    std::string check;
    adj->add_option("--check", check, "nef|very-ample");
    add_common(adj);

    auto* eqv = app.add_subcommand("equiv", "lattice equivalence of two polytopes");
    std::string file_a, file_b;
    eqv->add_option("A", file_a, "first polytope file")->required();
    eqv->add_option("B", file_b, "second polytope file")->required();
    eqv->add_flag("--json", json, "machine-readable output");

    auto* cam = app.add_subcommand("campaign", "counterexample hunt for one result");
    std::string campaign_id;
    CorpusSpec spec;
    spec.rank = 2;
    spec.bound = 2;
    spec.max_vertices = 6;
    spec.count = 100;
    bool exhaustive = false;
    cam->add_option("id", campaign_id, "campaign id")->required();
    cam->add_option("--rank", spec.rank, "ambient rank");
    cam->add_option("--bound", spec.bound, "coordinate bound B");
    cam->add_option("--max-vertices", spec.max_vertices, "point-set size before hulling");
    cam->add_option("--count", spec.count, "random corpus size");
    cam->add_option("--seed", spec.seed, "RNG seed");
    cam->add_flag("--exhaustive", exhaustive, "exhaustive corpus mode");
    cam->add_flag("--json", json, "machine-readable output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (points->parsed()) return cmd_points(input, json, false);
        if (interior->parsed()) return cmd_points(input, json, true);
        if (dil->parsed()) return cmd_dilate(input, k, json);
        if (nrm->parsed()) return cmd_normal_check(input, json);
        if (gor->parsed()) return cmd_gorenstein(input, json);
        if (va->parsed()) return cmd_very_ample(input, json);
        if (cls->parsed()) return cmd_classify(input, mode, json);
        if (adj->parsed()) return cmd_adjoint(input, check, json);
        if (eqv->parsed()) return cmd_equiv(file_a, file_b, json);
        if (cam->parsed()) {
            spec.mode = exhaustive ? CorpusMode::Exhaustive : CorpusMode::Random;
            return cmd_campaign(campaign_id, spec, json);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return kExitOk;
}
