#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsurf/pauli.h"

namespace qsurf {

enum class Family { Surface, RotatedSurface, Xzzx, RotatedXzzx };

std::string_view family_name(Family family);
/// Accepts "surface", "rotated", "xzzx", "rotated-xzzx". Throws std::invalid_argument otherwise.
Family parse_family(std::string_view name);
bool is_css_family(Family family);
bool is_rotated_family(Family family);

struct Coord {
    int row = 0;
    int col = 0;
    bool operator==(const Coord&) const = default;
};

/// Sites measure X-type checks and plaquettes Z-type checks, in the CSS frame.
enum class AncillaKind { Site, Plaquette };

struct Ancilla {
    AncillaKind kind = AncillaKind::Site;
    Coord position;
    std::vector<int> qubits;
};

/// Bit flags: rough edges end X chains (single plaquette neighbour), smooth edges end Z chains
/// (single site neighbour).
enum BoundaryFlags : uint8_t { kInterior = 0, kRough = 1, kSmooth = 2 };

struct LatticeGeometry {
    Family family = Family::Surface;
    int d_x = 0;
    int d_z = 0;
    std::vector<Coord> qubit_coords;
    /// One entry per generator, same order as StabilizerCode::generators.
    std::vector<Ancilla> ancillas;
    std::vector<uint8_t> boundary;
};

struct StabilizerCode {
    std::string name;
    int n = 0;
    int k = 1;
    int d_x = 0;
    int d_z = 0;
    std::vector<PauliOperator> generators;
    PauliOperator logical_x;
    PauliOperator logical_z;
    /// Qubits conjugated by Hadamard relative to the CSS frame. Zero for CSS families.
    uint64_t hadamard_mask = 0;
    LatticeGeometry geometry;

    Family family() const { return geometry.family; }
    bool is_css() const { return hadamard_mask == 0; }
    /// "surface [[13,1,3]]" style label used in tables and file output.
    std::string label() const;
    PauliOperator to_css_frame(const PauliOperator& p) const { return p.hadamard_conjugated(hadamard_mask); }
};

/// Planar surface code on a lattice with d_x rows and d_z columns of long edges.
/// Qubits are numbered row-major over the lattice drawing, D1 (index 0) top-left.
StabilizerCode build_surface(int d_x, int d_z);

/// Rotated surface code: d_x rows by d_z columns of data qubits, row-major, with weight-4 bulk checks
/// on a checkerboard and weight-2 checks on the boundary.
StabilizerCode build_rotated(int d_x, int d_z);

/// Hadamard-conjugates a CSS surface or rotated code into its XZZX variant.
/// Rotated rectangular lattices get their declared distances equalised to min(d_x, d_z).
StabilizerCode apply_xzzx(const StabilizerCode& code);

/// Convenience dispatcher over the four families.
StabilizerCode build_code(Family family, int d_x, int d_z);

std::string code_name(int n, int k, int d_x, int d_z);

struct CodeDistances {
    int d = 0;
    int d_x = 0;
    int d_z = 0;
    bool operator==(const CodeDistances&) const = default;
};

struct CodeReport {
    std::vector<std::string> violations;
    int generator_rank = 0;
    /// Present when the normalizer is small enough to enumerate (n - k <= 24).
    std::optional<CodeDistances> distances;

    bool ok() const { return violations.empty(); }
};

/// Checks the stabilizer-code invariants and, when feasible, the true distances.
CodeReport verify_code(const StabilizerCode& code);

/// Rank of a list of Paulis over GF(2) in the binary-symplectic representation.
int symplectic_rank(const std::vector<PauliOperator>& ops);

}  // namespace qsurf
