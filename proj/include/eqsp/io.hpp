#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eqsp/covering.hpp"

namespace eqsp {

// Parsed form of an instance file: a simplex plus body descriptors. Kept as
// a plain description so instances round-trip textually; build() constructs
// the validated geometry.
struct BodyDescriptor {
    std::string type;  // "vpolytope" | "ball" | "halfspaces" | "face" | "face-hull"
    std::vector<std::vector<double>> points;   // vpolytope generators / face-hull extras
    std::vector<double> center;                // ball
    double radius = 0;                         // ball
    std::vector<std::vector<double>> normals;  // halfspaces
    std::vector<double> offsets;               // halfspaces
    int face_index = -1;                       // face / face-hull, 0-based

    bool operator==(const BodyDescriptor&) const = default;
};

struct Instance {
    int dim = 0;
    std::vector<std::vector<double>> simplex;  // n+1 rows of n coordinates
    std::vector<BodyDescriptor> sets;
    std::vector<int> assignment;  // face i -> set index (0-based), empty if absent

    bool operator==(const Instance&) const = default;
};

struct BuiltInstance {
    Simplex ambient;
    std::vector<BodyPtr> bodies;
    std::vector<int> assignment;
};

// Parses the JSON instance document. Throws ParseError on malformed JSON and
// ValidationError on schema violations (with field context).
Instance parse_instance(const std::string& text);
Instance parse_instance_file(const std::string& path);

std::string serialize_instance(const Instance& inst);

// Validates and constructs the geometry: simplex validity, descriptor arity,
// face indices, membership of generators/centers in the simplex.
BuiltInstance build_instance(const Instance& inst, double membership_tol = 1e-9);

// Command-line surface. args excludes the program name. Result documents are
// written to `out` (or the --out file), diagnostics to `err`. Returns the
// process exit code: 0 success, 1 validation error, 2 solver non-convergence.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eqsp
