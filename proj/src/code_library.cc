#include "qsurf/code_library.h"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace qsurf {

std::string_view family_name(Family family) {
    switch (family) {
        case Family::Surface:
            return "surface";
        case Family::RotatedSurface:
            return "rotated";
        case Family::Xzzx:
            return "xzzx";
        case Family::RotatedXzzx:
            return "rotated-xzzx";
    }
    return "?";
}

Family parse_family(std::string_view name) {
    if (name == "surface") return Family::Surface;
    if (name == "rotated") return Family::RotatedSurface;
    if (name == "xzzx") return Family::Xzzx;
    if (name == "rotated-xzzx") return Family::RotatedXzzx;
    throw std::invalid_argument("unknown code family '" + std::string(name) +
                                "' (expected surface, rotated, xzzx or rotated-xzzx)");
}

bool is_css_family(Family family) { return family == Family::Surface || family == Family::RotatedSurface; }

bool is_rotated_family(Family family) { return family == Family::RotatedSurface || family == Family::RotatedXzzx; }

std::string code_name(int n, int k, int d_x, int d_z) {
    std::string d = d_x == d_z ? std::to_string(d_x) : std::to_string(d_x) + "/" + std::to_string(d_z);
    return "[[" + std::to_string(n) + "," + std::to_string(k) + "," + d + "]]";
}

std::string StabilizerCode::label() const { return std::string(family_name(family())) + " " + name; }

namespace {

void check_dimensions(int d_x, int d_z) {
    if (d_x < 2 || d_z < 2) {
        throw std::invalid_argument("lattice dimensions must be >= 2, got " + std::to_string(d_x) + "x" +
                                    std::to_string(d_z));
    }
}

struct RawAncilla {
    AncillaKind kind;
    Coord position;
    std::vector<int> qubits;
};

// Fills generators, geometry ancillas and boundary flags from a CSS ancilla list.
void assemble(StabilizerCode& code, std::vector<RawAncilla> ancillas) {
    std::sort(ancillas.begin(), ancillas.end(), [](const RawAncilla& a, const RawAncilla& b) {
        return std::pair(a.position.row, a.position.col) < std::pair(b.position.row, b.position.col);
    });
    std::vector<int> site_count(code.n, 0);
    std::vector<int> plaquette_count(code.n, 0);
    for (auto& a : ancillas) {
        std::sort(a.qubits.begin(), a.qubits.end());
        PauliOperator g(code.n);
        for (int q : a.qubits) {
            g.set_letter(q, a.kind == AncillaKind::Site ? 'X' : 'Z');
            (a.kind == AncillaKind::Site ? site_count : plaquette_count)[q]++;
        }
        code.generators.push_back(g);
        code.geometry.ancillas.push_back(Ancilla{a.kind, a.position, a.qubits});
    }
    code.geometry.boundary.assign(code.n, kInterior);
    for (int q = 0; q < code.n; ++q) {
        uint8_t flags = kInterior;
        if (plaquette_count[q] == 1) flags |= kRough;
        if (site_count[q] == 1) flags |= kSmooth;
        code.geometry.boundary[q] = flags;
    }
}

}  // namespace

StabilizerCode build_surface(int d_x, int d_z) {
    check_dimensions(d_x, d_z);
    const int rows = 2 * d_x - 1;
    const int cols = 2 * d_z - 1;
    const int n = d_x * d_z + (d_x - 1) * (d_z - 1);
    if (n > kMaxQubits) {
        throw std::invalid_argument("surface lattice " + std::to_string(d_x) + "x" + std::to_string(d_z) +
                                    " needs more than 64 qubits");
    }

    StabilizerCode code;
    code.n = n;
    code.d_x = d_x;
    code.d_z = d_z;
    code.name = code_name(n, 1, d_x, d_z);
    code.geometry.family = Family::Surface;
    code.geometry.d_x = d_x;
    code.geometry.d_z = d_z;

    // Qubits sit where row + col is even, ancillas where it is odd.
    std::map<std::pair<int, int>, int> index;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if ((r + c) % 2 == 0) {
                index[{r, c}] = static_cast<int>(code.geometry.qubit_coords.size());
                code.geometry.qubit_coords.push_back({r, c});
            }
        }
    }

    std::vector<RawAncilla> ancillas;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if ((r + c) % 2 == 0) continue;
            RawAncilla a{r % 2 == 0 ? AncillaKind::Site : AncillaKind::Plaquette, {r, c}, {}};
            const std::array<std::pair<int, int>, 4> nbrs{{{r - 1, c}, {r, c - 1}, {r, c + 1}, {r + 1, c}}};
            for (const auto& p : nbrs) {
                if (auto it = index.find(p); it != index.end()) a.qubits.push_back(it->second);
            }
            ancillas.push_back(std::move(a));
        }
    }
    assemble(code, std::move(ancillas));

    code.logical_z = PauliOperator(n);
    code.logical_x = PauliOperator(n);
    for (int c = 0; c < cols; c += 2) code.logical_z.set_letter(index.at({0, c}), 'Z');
    for (int r = 0; r < rows; r += 2) code.logical_x.set_letter(index.at({r, 0}), 'X');
    return code;
}

StabilizerCode build_rotated(int d_x, int d_z) {
    check_dimensions(d_x, d_z);
    const int n = d_x * d_z;
    if (n > kMaxQubits) {
        throw std::invalid_argument("rotated lattice " + std::to_string(d_x) + "x" + std::to_string(d_z) +
                                    " needs more than 64 qubits");
    }
    auto idx = [d_z](int r, int c) { return r * d_z + c; };

    StabilizerCode code;
    code.n = n;
    code.d_x = d_x;
    code.d_z = d_z;
    code.name = code_name(n, 1, d_x, d_z);
    code.geometry.family = Family::RotatedSurface;
    code.geometry.d_x = d_x;
    code.geometry.d_z = d_z;
    // Doubled coordinates: data qubits at odd positions, face centres at even ones.
    for (int r = 0; r < d_x; ++r) {
        for (int c = 0; c < d_z; ++c) code.geometry.qubit_coords.push_back({2 * r + 1, 2 * c + 1});
    }

    std::vector<RawAncilla> ancillas;
    for (int i = 0; i + 1 < d_x; ++i) {
        for (int j = 0; j + 1 < d_z; ++j) {
            const auto kind = (i + j) % 2 == 0 ? AncillaKind::Plaquette : AncillaKind::Site;
            ancillas.push_back(
                {kind, {2 * i + 2, 2 * j + 2}, {idx(i, j), idx(i, j + 1), idx(i + 1, j), idx(i + 1, j + 1)}});
        }
    }
    // Weight-2 checks sit where the missing outer face would continue the checkerboard:
    // X checks on the top/bottom edges, Z checks on the left/right edges.
    for (int j = 0; j + 1 < d_z; ++j) {
        if (j % 2 == 0) ancillas.push_back({AncillaKind::Site, {0, 2 * j + 2}, {idx(0, j), idx(0, j + 1)}});
        if ((d_x - 2 + j) % 2 == 0) {
            ancillas.push_back({AncillaKind::Site, {2 * d_x, 2 * j + 2}, {idx(d_x - 1, j), idx(d_x - 1, j + 1)}});
        }
    }
    for (int i = 0; i + 1 < d_x; ++i) {
        if (i % 2 == 1) ancillas.push_back({AncillaKind::Plaquette, {2 * i + 2, 0}, {idx(i, 0), idx(i + 1, 0)}});
        if ((i + d_z - 2) % 2 == 1) {
            ancillas.push_back({AncillaKind::Plaquette, {2 * i + 2, 2 * d_z}, {idx(i, d_z - 1), idx(i + 1, d_z - 1)}});
        }
    }
    assemble(code, std::move(ancillas));

    code.logical_z = PauliOperator(n);
    code.logical_x = PauliOperator(n);
    for (int c = 0; c < d_z; ++c) code.logical_z.set_letter(idx(0, c), 'Z');
    for (int r = 0; r < d_x; ++r) code.logical_x.set_letter(idx(r, 0), 'X');
    return code;
}

StabilizerCode apply_xzzx(const StabilizerCode& code) {
    if (code.hadamard_mask != 0 || !is_css_family(code.family())) {
        throw std::invalid_argument("apply_xzzx: " + code.label() + " is already an XZZX code");
    }
    uint64_t mask = 0;
    for (int q = 0; q < code.n; ++q) {
        const Coord& p = code.geometry.qubit_coords[q];
        bool flip = false;
        if (code.family() == Family::Surface) {
            // Vertical edges of the planar lattice.
            flip = p.row % 2 == 1;
        } else {
            // Every other qubit of the checkerboard, so each face reads X Z / Z X.
            flip = ((p.row / 2) + (p.col / 2)) % 2 == 1;
        }
        if (flip) mask |= uint64_t{1} << q;
    }

    StabilizerCode out = code;
    out.hadamard_mask = mask;
    for (auto& g : out.generators) g = g.hadamard_conjugated(mask);
    out.logical_x = code.logical_x.hadamard_conjugated(mask);
    out.logical_z = code.logical_z.hadamard_conjugated(mask);
    if (code.family() == Family::Surface) {
        out.geometry.family = Family::Xzzx;
    } else {
        out.geometry.family = Family::RotatedXzzx;
        out.d_x = out.d_z = std::min(code.d_x, code.d_z);
    }
    out.name = code_name(out.n, out.k, out.d_x, out.d_z);
    return out;
}

StabilizerCode build_code(Family family, int d_x, int d_z) {
    switch (family) {
        case Family::Surface:
            return build_surface(d_x, d_z);
        case Family::RotatedSurface:
            return build_rotated(d_x, d_z);
        case Family::Xzzx:
            return apply_xzzx(build_surface(d_x, d_z));
        case Family::RotatedXzzx:
            return apply_xzzx(build_rotated(d_x, d_z));
    }
    throw std::invalid_argument("unknown family");
}

int symplectic_rank(const std::vector<PauliOperator>& ops) {
    std::vector<std::array<uint64_t, 2>> rows;
    rows.reserve(ops.size());
    for (const auto& p : ops) rows.push_back({p.x_mask(), p.z_mask()});
    int rank = 0;
    for (int half = 0; half < 2; ++half) {
        for (int bit = 0; bit < 64; ++bit) {
            const uint64_t m = uint64_t{1} << bit;
            auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](const auto& r) { return r[half] & m; });
            if (pivot == rows.end()) continue;
            std::iter_swap(rows.begin() + rank, pivot);
            for (size_t i = 0; i < rows.size(); ++i) {
                if (static_cast<int>(i) != rank && (rows[i][half] & m)) {
                    rows[i][0] ^= rows[rank][0];
                    rows[i][1] ^= rows[rank][1];
                }
            }
            ++rank;
        }
    }
    return rank;
}

}  // namespace qsurf
