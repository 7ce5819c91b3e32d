#include "eqsp/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "eqsp/homotopy.hpp"

namespace eqsp {

namespace {

using nlohmann::json;

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string json_reals(const std::vector<double>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += fmt17(v[i]);
    }
    return s + "]";
}

std::string json_vector(const Vector& v) {
    std::string s = "[";
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += fmt17(v(i));
    }
    return s + "]";
}

std::string json_rows(const std::vector<std::vector<double>>& rows) {
    std::string s = "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) s += ",";
        s += json_reals(rows[i]);
    }
    return s + "]";
}

std::vector<double> as_reals(const json& j, const std::string& ctx) {
    if (!j.is_array()) throw ValidationError(ctx + ": expected an array of reals");
    std::vector<double> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number())
            throw ValidationError(ctx + "[" + std::to_string(i) + "]: expected a real");
        out.push_back(j[i].get<double>());
    }
    return out;
}

std::vector<std::vector<double>> as_rows(const json& j, const std::string& ctx) {
    if (!j.is_array()) throw ValidationError(ctx + ": expected an array of coordinate rows");
    std::vector<std::vector<double>> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(as_reals(j[i], ctx + "[" + std::to_string(i) + "]"));
    return out;
}

int as_face_index(const json& j, const std::string& ctx) {
    if (!j.is_number_integer() || j.get<long>() < 1)
        throw ValidationError(ctx + ": expected a 1-based face index");
    return static_cast<int>(j.get<long>()) - 1;
}

Vector to_vector(const std::vector<double>& row) {
    Vector v(static_cast<Eigen::Index>(row.size()));
    for (std::size_t i = 0; i < row.size(); ++i) v(static_cast<Eigen::Index>(i)) = row[i];
    return v;
}

Instance instance_from_json(const json& j) {
    if (!j.is_object()) throw ValidationError("instance: expected a JSON object");
    Instance inst;
    if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long>() < 1)
        throw ValidationError("dim: expected a positive integer");
    inst.dim = static_cast<int>(j["dim"].get<long>());
    if (!j.contains("simplex")) throw ValidationError("simplex: missing");
    inst.simplex = as_rows(j["simplex"], "simplex");
    if (!j.contains("sets") || !j["sets"].is_array())
        throw ValidationError("sets: expected an array of body descriptors");

    for (std::size_t k = 0; k < j["sets"].size(); ++k) {
        const json& sj = j["sets"][k];
        const std::string ctx = "sets[" + std::to_string(k) + "]";
        if (!sj.is_object() || !sj.contains("type") || !sj["type"].is_string())
            throw ValidationError(ctx + ": expected an object with a \"type\"");
        BodyDescriptor d;
        d.type = sj["type"].get<std::string>();
        if (d.type == "vpolytope") {
            if (!sj.contains("points")) throw ValidationError(ctx + ".points: missing");
            d.points = as_rows(sj["points"], ctx + ".points");
        } else if (d.type == "ball") {
            if (!sj.contains("center") || !sj.contains("radius"))
                throw ValidationError(ctx + ": ball needs \"center\" and \"radius\"");
            d.center = as_reals(sj["center"], ctx + ".center");
            if (!sj["radius"].is_number())
                throw ValidationError(ctx + ".radius: expected a real");
            d.radius = sj["radius"].get<double>();
        } else if (d.type == "halfspaces") {
            if (!sj.contains("normals") || !sj.contains("offsets"))
                throw ValidationError(ctx + ": halfspaces need \"normals\" and \"offsets\"");
            d.normals = as_rows(sj["normals"], ctx + ".normals");
            d.offsets = as_reals(sj["offsets"], ctx + ".offsets");
        } else if (d.type == "face") {
            if (!sj.contains("index")) throw ValidationError(ctx + ".index: missing");
            d.face_index = as_face_index(sj["index"], ctx + ".index");
        } else if (d.type == "face-hull") {
            if (!sj.contains("index")) throw ValidationError(ctx + ".index: missing");
            d.face_index = as_face_index(sj["index"], ctx + ".index");
            if (sj.contains("extras")) d.points = as_rows(sj["extras"], ctx + ".extras");
        } else {
            throw ValidationError(ctx + ": unknown body type \"" + d.type + "\"");
        }
        inst.sets.push_back(std::move(d));
    }

    if (j.contains("assignment")) {
        const json& aj = j["assignment"];
        if (!aj.is_array()) throw ValidationError("assignment: expected an array");
        for (std::size_t i = 0; i < aj.size(); ++i) {
            if (aj[i].is_null()) {
                inst.assignment.push_back(-1);
            } else if (aj[i].is_number_integer() && aj[i].get<long>() >= 1) {
                inst.assignment.push_back(static_cast<int>(aj[i].get<long>()) - 1);
            } else {
                throw ValidationError("assignment[" + std::to_string(i) +
                                      "]: expected a 1-based set index or null");
            }
        }
    }
    return inst;
}

}  // namespace

Instance parse_instance(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("instance: ") + e.what());
    }
    Instance inst = instance_from_json(j);
    build_instance(inst);  // full geometric validation
    return inst;
}

Instance parse_instance_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("instance: cannot open file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

std::string serialize_instance(const Instance& inst) {
    std::string s = "{\n  \"dim\": " + std::to_string(inst.dim) + ",\n";
    s += "  \"simplex\": " + json_rows(inst.simplex) + ",\n";
    s += "  \"sets\": [";
    for (std::size_t k = 0; k < inst.sets.size(); ++k) {
        const BodyDescriptor& d = inst.sets[k];
        if (k) s += ",";
        s += "\n    {\"type\": \"" + d.type + "\"";
        if (d.type == "vpolytope") {
            s += ", \"points\": " + json_rows(d.points);
        } else if (d.type == "ball") {
            s += ", \"center\": " + json_reals(d.center) + ", \"radius\": " + fmt17(d.radius);
        } else if (d.type == "halfspaces") {
            s += ", \"normals\": " + json_rows(d.normals) +
                 ", \"offsets\": " + json_reals(d.offsets);
        } else if (d.type == "face") {
            s += ", \"index\": " + std::to_string(d.face_index + 1);
        } else if (d.type == "face-hull") {
            s += ", \"index\": " + std::to_string(d.face_index + 1);
            s += ", \"extras\": " + json_rows(d.points);
        }
        s += "}";
    }
    s += "\n  ]";
    if (!inst.assignment.empty()) {
        s += ",\n  \"assignment\": [";
        for (std::size_t i = 0; i < inst.assignment.size(); ++i) {
            if (i) s += ",";
            s += inst.assignment[i] < 0 ? std::string("null")
                                        : std::to_string(inst.assignment[i] + 1);
        }
        s += "]";
    }
    s += "\n}\n";
    return s;
}

BuiltInstance build_instance(const Instance& inst, double membership_tol) {
    if (inst.dim < 1) throw ValidationError("dim: must be >= 1");
    if (static_cast<int>(inst.simplex.size()) != inst.dim + 1)
        throw ValidationError("simplex: expected " + std::to_string(inst.dim + 1) +
                              " vertex rows");
    std::vector<Vector> verts;
    verts.reserve(inst.simplex.size());
    for (std::size_t i = 0; i < inst.simplex.size(); ++i) {
        if (static_cast<int>(inst.simplex[i].size()) != inst.dim)
            throw ValidationError("simplex[" + std::to_string(i) + "]: expected " +
                                  std::to_string(inst.dim) + " coordinates");
        verts.push_back(to_vector(inst.simplex[i]));
    }

    std::vector<BodyPtr> bodies;
    try {
        Simplex S(std::move(verts));

        const auto require_inside = [&](const std::vector<double>& row, const std::string& ctx) {
            if (static_cast<int>(row.size()) != inst.dim)
                throw ValidationError(ctx + ": expected " + std::to_string(inst.dim) +
                                      " coordinates");
            const Vector p = to_vector(row);
            if (!S.contains(p, membership_tol))
                throw ValidationError(ctx + ": point lies outside the simplex");
            return p;
        };

        for (std::size_t k = 0; k < inst.sets.size(); ++k) {
            const BodyDescriptor& d = inst.sets[k];
            const std::string ctx = "sets[" + std::to_string(k) + "]";
            if (d.type == "vpolytope") {
                if (d.points.empty()) throw ValidationError(ctx + ".points: empty");
                std::vector<Vector> gens;
                for (std::size_t i = 0; i < d.points.size(); ++i)
                    gens.push_back(
                        require_inside(d.points[i], ctx + ".points[" + std::to_string(i) + "]"));
                bodies.push_back(std::make_shared<VPolytope>(std::move(gens)));
            } else if (d.type == "ball") {
                const Vector c = require_inside(d.center, ctx + ".center");
                if (d.radius < 0) throw ValidationError(ctx + ".radius: negative");
                bodies.push_back(std::make_shared<Ball>(c, d.radius));
            } else if (d.type == "halfspaces") {
                std::vector<Vector> normals;
                for (std::size_t i = 0; i < d.normals.size(); ++i) {
                    if (static_cast<int>(d.normals[i].size()) != inst.dim)
                        throw ValidationError(ctx + ".normals[" + std::to_string(i) +
                                              "]: wrong arity");
                    normals.push_back(to_vector(d.normals[i]));
                }
                bodies.push_back(std::make_shared<HalfspaceSet>(std::move(normals), d.offsets));
            } else if (d.type == "face" || d.type == "face-hull") {
                if (d.face_index < 0 || d.face_index > inst.dim)
                    throw ValidationError(ctx + ".index: face index out of range");
                const Face f = S.face(d.face_index);
                if (d.type == "face") {
                    bodies.push_back(std::make_shared<FaceBody>(f));
                } else {
                    std::vector<Vector> gens = f.vertices();
                    for (std::size_t i = 0; i < d.points.size(); ++i)
                        gens.push_back(require_inside(d.points[i],
                                                      ctx + ".extras[" + std::to_string(i) + "]"));
                    bodies.push_back(std::make_shared<VPolytope>(std::move(gens)));
                }
            } else {
                throw ValidationError(ctx + ": unknown body type \"" + d.type + "\"");
            }
        }

        std::vector<int> assignment = inst.assignment;
        if (!assignment.empty()) {
            if (static_cast<int>(assignment.size()) != inst.dim + 1)
                throw ValidationError("assignment: expected " + std::to_string(inst.dim + 1) +
                                      " entries");
            for (int a : assignment)
                if (a != -1 && (a < 0 || a >= static_cast<int>(inst.sets.size())))
                    throw ValidationError("assignment: set index out of range");
        }
        return {std::move(S), std::move(bodies), std::move(assignment)};
    } catch (const ValidationError&) {
        throw;
    } catch (const Error& e) {
        // Geometry construction failures (degenerate simplex, bad bodies)
        // surface as validation errors with their original message.
        throw ValidationError(e.what());
    }
}

namespace {

struct CommandOutput {
    std::string doc;  // JSON result document
    std::string csv;  // homotopy curve, when applicable
};

CommandOutput dispatch(const std::string& command, const BuiltInstance& built, double tol,
                       int grid_depth, int t_samples) {
    const Simplex& S = built.ambient;
    const std::vector<BodyPtr>& bodies = built.bodies;
    CommandOutput out;
    std::ostringstream doc;

    const auto require_family_size = [&] {
        if (static_cast<int>(bodies.size()) != S.dim() + 1)
            throw ValidationError("sets: expected exactly " + std::to_string(S.dim() + 1) +
                                  " bodies for this command");
    };

    if (command == "solve") {
        require_family_size();
        const HFamily fam(S, bodies);
        const EquispaceResult r = solve(fam, tol);
        doc << "{\"eps0\": " << fmt17(r.eps0) << ", \"v\": " << json_vector(r.v)
            << ", \"distances\": " << json_reals(r.distances)
            << ", \"covering\": " << (r.covering ? "true" : "false")
            << ", \"iterations\": " << r.iterations << "}";
    } else if (command == "cover" || command == "boundary") {
        const CoverReport rep = command == "cover" ? covers_simplex(S, bodies, grid_depth, tol)
                                                   : covers_boundary(S, bodies, grid_depth, tol);
        doc << "{\"covered\": " << (rep.covered ? "true" : "false")
            << ", \"mesh\": " << fmt17(rep.mesh);
        if (rep.witness_uncovered)
            doc << ", \"witness_uncovered\": " << json_vector(*rep.witness_uncovered);
        doc << "}";
    } else if (command == "homotopy") {
        require_family_size();
        const double t0 = find_t0(S, bodies, tol);
        const HomotopyCurve curve =
            epsilon_curve(S, bodies, default_t_samples(t0, t_samples), tol, t0);
        doc << "{\"t0\": " << fmt17(curve.t0) << ", \"delta0\": " << fmt17(curve.delta0) << "}";
        std::ostringstream csv;
        write_curve_csv(curve, csv);
        out.csv = csv.str();
    } else if (command == "t0") {
        require_family_size();
        doc << "{\"t0\": " << fmt17(find_t0(S, bodies, tol)) << "}";
    } else if (command == "helly") {
        const FaceCoveringFamily fam(S, bodies, built.assignment);
        const HellyResult r = helly_criterion(fam, grid_depth, tol);
        doc << "{\"intersects\": " << (r.intersects ? "true" : "false");
        if (r.witness) doc << ", \"witness\": " << json_vector(*r.witness);
        if (r.counterexample) {
            doc << ", \"counterexample\": [";
            for (std::size_t i = 0; i < r.counterexample->size(); ++i) {
                if (i) doc << ",";
                doc << (*r.counterexample)[i] + 1;
            }
            doc << "]";
        }
        doc << "}";
    } else if (command == "oracle") {
        const GridValue mx = grid_maximin(S, bodies, grid_depth);
        const GridValue mn = grid_minimax(S, bodies, grid_depth);
        doc << "{\"maximin\": " << fmt17(mx.value) << ", \"minimax\": " << fmt17(mn.value)
            << ", \"argmax\": " << json_vector(mx.arg) << ", \"argmin\": " << json_vector(mn.arg)
            << ", \"mesh\": " << fmt17(mx.mesh) << "}";
    }
    out.doc = doc.str();
    return out;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"equally spaced points of convex families covering the faces of a simplex"};
    app.name("eqsp");
    app.require_subcommand(1);

    std::string instance_path, out_path;
    double tol = 1e-6;
    int grid_depth = 128;
    int t_samples = 32;

    const std::vector<std::string> names = {"solve",    "cover", "boundary", "homotopy",
                                            "t0",       "helly", "oracle"};
    const std::vector<std::string> descs = {
        "equally spaced point and distance of an n+1 family",
        "does the union of the sets cover the simplex (grid check)",
        "does the union of the sets cover the boundary (grid check)",
        "deformation curve (t, eps_t, v_t) and threshold t0",
        "covering threshold t0 of the deformation",
        "intersection criterion over boundary-covering subfamilies",
        "brute-force grid maximin/minimax of the distance objective"};
    for (std::size_t i = 0; i < names.size(); ++i) {
        CLI::App* cmd = app.add_subcommand(names[i], descs[i]);
        cmd->add_option("--instance", instance_path, "instance JSON file")->required();
        cmd->add_option("--tol", tol, "solver tolerance (default 1e-6)");
        cmd->add_option("--grid-depth", grid_depth, "barycentric grid depth (default 128)");
        cmd->add_option("--t-samples", t_samples, "uniform homotopy samples (default 32)");
        cmd->add_option("--out", out_path, "write the result document to this file");
    }

    std::vector<const char*> argv;
    argv.push_back("eqsp");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        const Instance inst = parse_instance_file(instance_path);
        const BuiltInstance built = build_instance(inst);
        const std::string command = app.get_subcommands().front()->get_name();
        const CommandOutput result = dispatch(command, built, tol, grid_depth, t_samples);

        if (!out_path.empty()) {
            std::ofstream file(out_path, std::ios::binary);
            if (!file) throw ValidationError("cannot open output file " + out_path);
            if (command == "homotopy") {
                file << result.csv;  // curve goes to the file, summary to the stream
                out << result.doc << "\n";
            } else {
                file << result.doc << "\n";
            }
        } else {
            out << result.doc << "\n";
            if (command == "homotopy") out << result.csv;
        }
        return 0;
    } catch (const NonConvergence& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const BisectionStalled& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace eqsp
