#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "vopt/decision.hpp"
#include "vopt/efficiency.hpp"
#include "vopt/functional.hpp"
#include "vopt/io.hpp"
#include "vopt/norms.hpp"
#include "vopt/scalarize.hpp"
#include "vopt/sets.hpp"

using namespace vopt;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitHypothesis = 3;

std::string jescape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

std::string jnum(double x) {
    if (std::isinf(x)) return x > 0 ? "\"inf\"" : "\"-inf\"";
    return format_double(x);
}

std::string jext(const ExtValue& v) {
    if (v.is_real()) return format_double(v.value());
    return "\"" + std::string(v.is_nu() ? "nu" : "-inf") + "\"";
}

std::string jindices(const std::vector<size_t>& idx) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
    os << "]";
    return os.str();
}

std::string jvec(const Vector& v) {
    std::ostringstream os;
    os << "[";
    for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << format_double(v[i]);
    os << "]";
    return os.str();
}

std::string jwitness(const std::map<size_t, size_t>& w) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [i, j] : w) {
        os << (first ? "" : ",") << "\"" << i << "\":" << j;
        first = false;
    }
    os << "}";
    return os.str();
}

std::string jcertificate(const Certificate& c) {
    std::ostringstream os;
    os << "{\"index\":" << c.point_index << ",\"kind\":\"" << to_string(c.kind) << "\",\"k\":"
       << jvec(c.k_used) << ",\"margin\":" << jnum(c.margin) << ",\"witness\":";
    if (c.witness)
        os << *c.witness;
    else
        os << "null";
    os << ",\"values\":[";
    for (size_t i = 0; i < c.values.size(); ++i)
        os << (i ? "," : "") << "[" << c.values[i].first << "," << jext(c.values[i].second) << "]";
    os << "]}";
    return os.str();
}

std::string jcertificates(const std::vector<Certificate>& cs) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < cs.size(); ++i) os << (i ? "," : "") << jcertificate(cs[i]);
    os << "]";
    return os.str();
}

struct CommonOpts {
    std::string format = "json";
    double eps_feas = 1e-9;
    double eps_cmp = 1e-7;
    std::uint64_t seed = 42;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--format", c.format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--eps-feas", c.eps_feas, "Feasibility tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--eps-cmp", c.eps_cmp, "Comparison tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", c.seed, "Seed for sampled checks");
}

void apply_tolerances(const CommonOpts& c) {
    tolerances().feas = c.eps_feas;
    tolerances().cmp = c.eps_cmp;
}

[[noreturn]] void csv_unsupported() {
    throw ParseError("csv output not supported for this command");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Scalarization toolkit for vector optimization on point clouds"};
    app.require_subcommand(1);

    auto* phi_cmd = app.add_subcommand("phi", "Evaluate phi_{a-H,k} on a point cloud");
    std::string phi_set, phi_points, phi_k, phi_a;
    CommonOpts phi_opts;
    phi_cmd->add_option("--set", phi_set, "Set spec JSON for H")->required();
    phi_cmd->add_option("--points", phi_points, "Point cloud CSV")->required();
    phi_cmd->add_option("--k", phi_k, "Direction k, e.g. \"1,1\"")->required();
    phi_cmd->add_option("--a", phi_a, "Reference point a (default 0)");
    add_common(phi_cmd, phi_opts);

    auto* eff_cmd = app.add_subcommand("eff", "Brute-force efficient set");
    auto* weff_cmd = app.add_subcommand("weff", "Brute-force weakly efficient set");
    std::string effw_cone, effw_points;
    CommonOpts effw_opts;
    for (auto* cmd : {eff_cmd, weff_cmd}) {
        cmd->add_option("--cone", effw_cone, "Domination set JSON")->required();
        cmd->add_option("--points", effw_points, "Point cloud CSV")->required();
        add_common(cmd, effw_opts);
    }

    auto* cert_cmd = app.add_subcommand("certify", "Certify one point via phi_{y0-D,k}");
    std::string cert_cone, cert_points, cert_k;
    size_t cert_index = 0;
    bool cert_weak = false;
    CommonOpts cert_opts;
    cert_cmd->add_option("--cone", cert_cone)->required();
    cert_cmd->add_option("--points", cert_points)->required();
    cert_cmd->add_option("--index", cert_index, "Candidate index")->required();
    cert_cmd->add_option("--k", cert_k)->required();
    cert_cmd->add_flag("--weak", cert_weak, "Weak certification (requires (H2))");
    add_common(cert_cmd, cert_opts);

    auto* scal_cmd = app.add_subcommand("scalarize", "Front recovery by scalar minimization");
    std::string scal_mode, scal_cone, scal_points, scal_a, scal_k, scal_set;
    CommonOpts scal_opts;
    scal_cmd->add_option("--mode", scal_mode)
        ->required()
        ->check(CLI::IsMember({"argmin", "bounded-upper", "bounded-lower", "cone-upper", "cone-lower"}));
    scal_cmd->add_option("--cone", scal_cone, "Domination set JSON")->required();
    scal_cmd->add_option("--points", scal_points)->required();
    scal_cmd->add_option("--a", scal_a, "Reference point");
    scal_cmd->add_option("--k", scal_k, "Direction for argmin mode");
    scal_cmd->add_option("--set", scal_set, "Sublevel-shape JSON H for argmin mode (default: the cone)");
    add_common(scal_cmd, scal_opts);

    auto* norm_cmd = app.add_subcommand("norm", "Order unit norms / norm scalarization");
    std::string norm_cone, norm_points, norm_k, norm_a, norm_scal;
    CommonOpts norm_opts;
    norm_cmd->add_option("--cone", norm_cone)->required();
    norm_cmd->add_option("--points", norm_points)->required();
    norm_cmd->add_option("--k", norm_k, "Order unit (required unless --scalarize bounded)");
    norm_cmd->add_option("--a", norm_a, "Reference point (default 0)");
    norm_cmd->add_option("--scalarize", norm_scal, "\"bounded\" for the per-point front recovery")
        ->check(CLI::IsMember({"bounded"}));
    add_common(norm_cmd, norm_opts);

    auto* rel_cmd = app.add_subcommand("relation", "Preference relation utilities");
    auto* rel_min = rel_cmd->add_subcommand("min", "Min(F, >) over a relation");
    rel_cmd->require_subcommand(1);
    std::string rel_points, rel_dset, rel_builtin, rel_table;
    CommonOpts rel_opts;
    rel_min->add_option("--points", rel_points)->required();
    rel_min->add_option("--dset", rel_dset, "Domination set JSON");
    rel_min->add_option("--builtin", rel_builtin, "Built-in relation")->check(CLI::IsMember({"norm2"}));
    rel_min->add_option("--table", rel_table, "Table relation JSON");
    add_common(rel_min, rel_opts);

    auto* props_cmd = app.add_subcommand("props", "Hypothesis + relation property report");
    std::string props_set, props_k;
    int props_samples = 256;
    CommonOpts props_opts;
    props_cmd->add_option("--set", props_set)->required();
    props_cmd->add_option("--k", props_k, "Direction for the (H1)/(H2) report");
    props_cmd->add_option("--samples", props_samples)->check(CLI::PositiveNumber);
    add_common(props_cmd, props_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitParse;
    }

    std::ostringstream out;
    try {
        if (*phi_cmd) {
            apply_tolerances(phi_opts);
            const SetSpec H = load_set_spec(phi_set);
            const PointCloud F = load_points_csv(phi_points);
            const Vector k = parse_vector(phi_k);
            const Vector a = phi_a.empty() ? Vector(Vector::Zero(H.dim())) : parse_vector(phi_a);
            const PhiInstance inst(H, k, a);
            std::vector<ExtValue> values;
            std::vector<size_t> presumed;
            for (size_t i = 0; i < F.size(); ++i) {
                if (inst.has_closed_form()) {
                    values.push_back(eval_phi(inst, F[i]));
                } else {
                    BisectionInfo info;
                    values.push_back(eval_phi_bisection(inst, F[i], &info));
                    if (info.presumed) presumed.push_back(i);
                }
            }
            if (phi_opts.format == "csv") {
                out << "index,phi\n";
                for (size_t i = 0; i < values.size(); ++i) out << i << "," << format_ext(values[i]) << "\n";
            } else {
                out << "{\"values\":[";
                for (size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << jext(values[i]);
                out << "]";
                if (!presumed.empty()) out << ",\"presumed\":" << jindices(presumed);
                out << "}\n";
            }
        } else if (*eff_cmd || *weff_cmd) {
            apply_tolerances(effw_opts);
            const SetSpec D = load_set_spec(effw_cone);
            const PointCloud F = load_points_csv(effw_points);
            const bool weak = weff_cmd->parsed();
            const EffResult r = weak ? weff(F, D) : eff(F, D);
            static const std::vector<size_t> kEmpty;
            const std::vector<size_t>& idx =
                weak ? (r.weakly_efficient_indices ? *r.weakly_efficient_indices : kEmpty)
                     : r.efficient_indices;
            if (effw_opts.format == "csv") {
                out << "index," << (weak ? "weakly_efficient" : "efficient") << ",witness\n";
                const std::set<size_t> in(idx.begin(), idx.end());
                for (size_t i = 0; i < F.size(); ++i) {
                    out << i << "," << (in.count(i) ? "true" : "false") << ",";
                    if (auto it = r.dominance_witness.find(i); it != r.dominance_witness.end())
                        out << it->second;
                    out << "\n";
                }
            } else {
                out << "{\"" << (weak ? "weakly_efficient" : "efficient") << "\":" << jindices(idx)
                    << ",\"witness\":" << jwitness(r.dominance_witness) << "}\n";
            }
        } else if (*cert_cmd) {
            apply_tolerances(cert_opts);
            if (cert_opts.format == "csv") csv_unsupported();
            const SetSpec D = load_set_spec(cert_cone);
            const PointCloud F = load_points_csv(cert_points);
            const Vector k = parse_vector(cert_k);
            const Certificate c = cert_weak ? certify_weakly_efficient(F, cert_index, D, k)
                                            : certify_efficient(F, cert_index, D, k);
            out << jcertificate(c) << "\n";
        } else if (*scal_cmd) {
            apply_tolerances(scal_opts);
            if (scal_opts.format == "csv") csv_unsupported();
            const SetSpec D = load_set_spec(scal_cone);
            const PointCloud F = load_points_csv(scal_points);
            if (scal_mode == "argmin") {
                if (scal_k.empty()) throw ParseError("scalarize argmin requires --k");
                const Vector k = parse_vector(scal_k);
                const Vector a = scal_a.empty() ? Vector(Vector::Zero(D.dim())) : parse_vector(scal_a);
                const SetSpec H = scal_set.empty() ? D : load_set_spec(scal_set);
                const ScalarizationOutcome o = scalarize_argmin(F, H, k, a, D);
                out << "{\"psi\":" << jindices(o.psi) << ",\"unique\":" << (o.unique ? "true" : "false")
                    << ",\"classification\":\"" << to_string(o.classification) << "\",\"values\":[";
                for (size_t i = 0; i < o.values.size(); ++i) out << (i ? "," : "") << jext(o.values[i]);
                out << "],\"dropped_nu\":" << jindices(o.dropped_nu) << "}\n";
            } else {
                if (scal_a.empty()) throw ParseError("scalarize " + scal_mode + " requires --a");
                const Vector a = parse_vector(scal_a);
                if (D.kind() != SetSpec::Kind::Polyhedral)
                    throw PreconditionError("scalarize " + scal_mode + ": cone must be polyhedral");
                const PolyhedralSet& P = D.polyhedron();
                if (scal_mode == "bounded-upper" || scal_mode == "bounded-lower") {
                    const BoundedFrontResult r = scalarize_bounded(
                        F, P, a, scal_mode == "bounded-upper" ? BoundMode::Upper : BoundMode::Lower);
                    out << "{\"eff\":" << jindices(r.eff_indices) << ",\"weff\":"
                        << jindices(r.weff_indices) << ",\"certificates\":" << jcertificates(r.certificates)
                        << "}\n";
                } else {
                    const ConeFrontResult r = scal_mode == "cone-upper" ? scalarize_upper_cone(F, P, a)
                                                                        : scalarize_lower_cone(F, P, a);
                    out << "{\"efficient\":" << jindices(r.efficient) << ",\"lineality_skipped\":"
                        << jindices(r.lineality_skipped) << ",\"certificates\":"
                        << jcertificates(r.certificates) << "}\n";
                }
            }
        } else if (*norm_cmd) {
            apply_tolerances(norm_opts);
            const SetSpec Dspec = load_set_spec(norm_cone);
            if (Dspec.kind() != SetSpec::Kind::Polyhedral)
                throw PreconditionError("norm: cone must be polyhedral");
            const PolyhedralSet& C = Dspec.polyhedron();
            const PointCloud F = load_points_csv(norm_points);
            const Vector a = norm_a.empty() ? Vector(Vector::Zero(C.dim())) : parse_vector(norm_a);
            if (norm_scal == "bounded") {
                if (norm_opts.format == "csv") csv_unsupported();
                const BoundedFrontResult r = norm_scalarize_bounded(F, C, a);
                out << "{\"eff\":" << jindices(r.eff_indices) << ",\"weff\":" << jindices(r.weff_indices)
                    << ",\"certificates\":" << jcertificates(r.certificates) << "}\n";
            } else {
                if (norm_k.empty()) throw ParseError("norm requires --k unless --scalarize bounded");
                const OrderUnitNorm n(C, parse_vector(norm_k));
                std::vector<double> values;
                for (const auto& y : F) values.push_back(n(Vector(y - a)));
                if (norm_opts.format == "csv") {
                    out << "index,norm\n";
                    for (size_t i = 0; i < values.size(); ++i)
                        out << i << "," << format_double(values[i]) << "\n";
                } else {
                    out << "{\"norms\":[";
                    for (size_t i = 0; i < values.size(); ++i)
                        out << (i ? "," : "") << format_double(values[i]);
                    out << "]}\n";
                }
            }
        } else if (rel_min->parsed()) {
            apply_tolerances(rel_opts);
            const PointCloud F = load_points_csv(rel_points);
            const int sources = (!rel_dset.empty()) + (!rel_builtin.empty()) + (!rel_table.empty());
            if (sources != 1)
                throw ParseError("relation min needs exactly one of --dset, --builtin, --table");
            const Relation rel = !rel_dset.empty()
                                     ? Relation::from_domination_set(load_set_spec(rel_dset), true)
                                 : !rel_table.empty() ? load_table_relation(rel_table)
                                                      : Relation::norm2_weak();
            const std::vector<size_t> idx = min_relation(F, rel);
            if (rel_opts.format == "csv") {
                out << "index\n";
                for (size_t i : idx) out << i << "\n";
            } else {
                out << "{\"min\":" << jindices(idx) << "}\n";
            }
        } else if (*props_cmd) {
            apply_tolerances(props_opts);
            if (props_opts.format == "csv") csv_unsupported();
            const SetSpec D = load_set_spec(props_set);
            out << "{\"hypotheses\":";
            if (!props_k.empty()) {
                const HypothesisReport h = validate_h2(D, parse_vector(props_k));
                out << "{\"h1_ok\":" << (h.h1_ok ? "true" : "false") << ",\"h2_ok\":"
                    << (h.h2_ok ? "true" : "false") << ",\"k_in_recession\":"
                    << (h.k_in_recession ? "true" : "false") << ",\"k_in_recession_interior\":"
                    << (h.k_in_recession_interior ? "true" : "false") << ",\"lineality_hit\":"
                    << (h.lineality_hit ? "true" : "false") << ",\"messages\":[";
                for (size_t i = 0; i < h.messages.size(); ++i)
                    out << (i ? "," : "") << "\"" << jescape(h.messages[i]) << "\"";
                out << "]}";
            } else {
                out << "null";
            }
            const RelationPropsReport r = check_relation_props(D, props_samples, props_opts.seed);
            out << ",\"relation_properties\":{"
                << "\"reflexive\":\"" << to_string(r.reflexive) << "\","
                << "\"asymmetric\":\"" << to_string(r.asymmetric) << "\","
                << "\"antisymmetric\":\"" << to_string(r.antisymmetric) << "\","
                << "\"transitive\":\"" << to_string(r.transitive) << "\","
                << "\"scale_invariant\":\"" << to_string(r.scale_invariant) << "\","
                << "\"convex_cone_order\":\"" << to_string(r.convex_cone_order) << "\","
                << "\"partial_order\":\"" << to_string(r.partial_order) << "\"},\"notes\":[";
            for (size_t i = 0; i < r.notes.size(); ++i)
                out << (i ? "," : "") << "\"" << jescape(r.notes[i]) << "\"";
            out << "]}\n";
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const HypothesisError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const DimensionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }

    std::cout << out.str();
    return kExitOk;
}
