// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string>
#include <vector>

namespace hexlat {

// Equation families.  Face families take a center value, four corner values
// and three parameters; quad families take four corner values and two
// parameters.  Suffix encoding: d = delta subscript(s), e = epsilon,
// h = one half.
enum class Family {
    // faces, first kind
    A3d1,
    A3d0,
    A2_11,
    A2_10,
    A2_00,
    A4,
    // faces, second kind
    C3_hh0,
    C3_h0h,
    C3_100,
    C3_000,
    C2_110,
    C2_101,
    C2_100,
    C2_000,
    C1_1,
    C1_0,
    // quads
    Q4,
    Q3d1,
    Q3d0,
    Q2,
    Q1d1,
    Q1d0,
    H3_11,
    H3_10,
    H3_00,
    H2_1,
    H2_0,
    H1_1,
    H1_0,
};

enum class ParamDomain { Additive, Hyperbolic, Elliptic };

const std::array<Family, 16>& face_families();
const std::array<Family, 13>& quad_families();

std::string family_name(Family f);
Family family_parse(const std::string& name);

ParamDomain family_domain(Family f);
bool family_is_face(Family f);
char family_letter(Family f);  // 'A', 'C', 'Q' or 'H'

// Epsilon subscript for type-H quads, -1 for everything else.
int family_epsilon(Family f);

// The quad family a type-A face family degenerates to on its quad cut.
Family quad_partner_of_a(Family a_face);

// An equation instance: the family plus the optional corner transposition
// (x_a <-> x_b, x_c <-> x_d) used when pairing mirrored quads.
struct EquationSpec {
    Family family;
    bool swap_ab_cd = false;

    std::string to_string() const;
    static EquationSpec parse(const std::string& text);

    friend bool operator==(const EquationSpec&, const EquationSpec&) = default;
};

}  // namespace hexlat
